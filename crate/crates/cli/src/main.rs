use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rees_core::engine::{analyze, EngineError};
use rees_core::generators::{GenError, GeneratorSpec};
use rees_core::instance::{format_structural, Instance};
use rees_core::oracle::{build_commuting_graph, build_simplified_graph, Element, OracleError};
use rees_core::verify::{cross_check, fuzz, FuzzConfig, VerifyError};
use rees_core::{run_closure, ClosureError};

/// Commuting graphs of 0-Rees matrix semigroups.
#[derive(Parser)]
#[command(name = "rees", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant report of an instance file as JSON.
    Analyze {
        path: PathBuf,
        /// Check every field against the explicit commuting graph.
        #[arg(long)]
        oracle: bool,
        /// Write the commuting graph here, and the simplified graph to <DOT>.simplified.dot.
        #[arg(long, value_name = "DOT")]
        dot: Option<PathBuf>,
        /// JSON output (the default and only format).
        #[arg(long)]
        json: bool,
    },
    /// Trace the 0-closure method from a zero entry (1-based row, column).
    Closure {
        path: PathBuf,
        #[arg(long, num_args = 2, value_names = ["ROW", "COL"], required = true)]
        start: Vec<usize>,
    },
    /// Print a matrix family member: banded <n>, clique <n>, brandt <n>, random <rows> <cols> <prob>.
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare formulas with the oracle on random instances.
    Fuzz {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_rows: usize,
        #[arg(long, default_value_t = 4)]
        max_cols: usize,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure { code, message: message.to_string() }
    }
}

const PARSE: u8 = 2;
const INPUT: u8 = 3;
const GUARD: u8 = 4;
const MISMATCH: u8 = 5;

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        let code = match e {
            EngineError::Matrix(_) => PARSE,
            _ => INPUT,
        };
        Failure::new(code, e)
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::CriterionMismatch { .. } => MISMATCH,
            _ => GUARD,
        };
        Failure::new(code, e)
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(e) => e.into(),
            VerifyError::Oracle(e) => e.into(),
            VerifyError::Generator(e) => Failure::new(PARSE, e),
        }
    }
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))?;
    Instance::parse(&text).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))
}

fn write_dot(inst: &Instance, out: &Path) -> Result<(), Failure> {
    let graph = build_commuting_graph(&inst.group, &inst.matrix)?;
    let dot = graph.to_dot("commuting", |e| match e {
        Element::Zero => "0".to_string(),
        Element::Triple { i, g, lambda } => format!("({},{},{})", i + 1, inst.group.label(*g), lambda + 1),
    });
    let simplified = build_simplified_graph(&inst.structural()).to_dot("simplified", |v| v.to_string());
    let mut side = out.as_os_str().to_owned();
    side.push(".simplified.dot");
    for (path, text) in [(out.to_path_buf(), dot), (PathBuf::from(side), simplified)] {
        fs::write(&path, text).map_err(|e| Failure::new(PARSE, format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_analyze(path: &Path, oracle: bool, dot: Option<&Path>) -> Result<(), Failure> {
    let inst = load(path)?;
    let report = analyze(&inst.structural(), inst.group.profile())?;
    emit(&format!("{}\n", report.to_json()));
    if let Some(out) = dot {
        write_dot(&inst, out)?;
    }
    if oracle {
        let check = cross_check(&inst.group, &inst.matrix)?;
        if !check.passed() {
            for m in &check.mismatches {
                eprintln!("mismatch {m}");
            }
            return Err(Failure::new(
                MISMATCH,
                format!("{} field(s) disagree with the oracle", check.mismatches.len()),
            ));
        }
        eprintln!("oracle: all fields agree ({} vertices)", check.oracle.vertices);
    }
    Ok(())
}

fn labels(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(|x| (x + 1).to_string()).collect();
    format!("{{{}}}", s.join(","))
}

fn cmd_closure(path: &Path, row: usize, col: usize) -> Result<(), Failure> {
    let m = load(path)?.structural();
    if row == 0 || col == 0 {
        return Err(Failure::new(PARSE, "row and column labels start at 1"));
    }
    let run = run_closure(&m, row - 1, col - 1).map_err(|e| {
        let code = match e {
            ClosureError::NotZero { .. } => INPUT,
            _ => PARSE,
        };
        Failure::new(code, e)
    })?;
    let mut out = format!("start row {row}, column {col}\n");
    for (k, q) in run.steps.iter().enumerate() {
        out += &format!("Q{k}: columns {} rows {}\n", labels(&q.cols), labels(&q.rows));
    }
    out += &format!("z = {}\n", run.z_index());
    emit(&out);
    Ok(())
}

fn cmd_generate(family: &str, params: &[String], seed: u64) -> Result<(), Failure> {
    let spec = GeneratorSpec::parse(family, params, seed).map_err(|e| Failure::new(PARSE, e))?;
    let m = spec.generate().map_err(|e| {
        let code = if matches!(e, GenError::Exhausted(_)) { INPUT } else { PARSE };
        Failure::new(code, e)
    })?;
    emit(&format_structural(&m));
    Ok(())
}

fn cmd_fuzz(cfg: FuzzConfig) -> Result<(), Failure> {
    let summary = fuzz(cfg)?;
    emit(&format!("seed {}: {} passed, {} failed\n", cfg.seed, summary.passed, summary.failed));
    if let Some(first) = &summary.first_failure {
        let mut out = format!("first counterexample (instance {}):\n{}", first.index, first.instance);
        for m in &first.mismatches {
            out += &format!("mismatch {m}\n");
        }
        emit(&out);
        return Err(Failure::new(MISMATCH, "formula and oracle disagree"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { path, oracle, dot, json: _ } => cmd_analyze(&path, oracle, dot.as_deref()),
        Command::Closure { path, start } => cmd_closure(&path, start[0], start[1]),
        Command::Generate { family, params, seed } => cmd_generate(&family, &params, seed),
        Command::Fuzz { count, seed, max_rows, max_cols, max_order } => {
            cmd_fuzz(FuzzConfig { count, max_rows, max_cols, max_order, seed })
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
