//! Formula results checked field by field against the brute-force oracle,
//! and a seeded random driver over many instances.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::engine::{
    analyze, classify_components, component_diameter, diameter_fastpath, diameter_formula, AnalysisReport,
    ComponentDescriptor, EngineError,
};
use crate::extnat::ExtNat;
use crate::generators::{random_regular_from, GenError};
use crate::group::FiniteGroup;
use crate::instance::{GroupSpec, Instance};
use crate::matrix::{SandwichMatrix, StructuralMatrix};
use crate::oracle::{
    build_commuting_graph, build_simplified_graph, knit_degree, psi_isomorphism, Element, OracleError, SimpleGraph,
    CHROMATIC_LIMIT, VERTEX_LIMIT,
};

/// Longest left path the knit check searches for.
pub const KNIT_SEARCH_LEN: usize = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Generator(#[from] GenError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub field: String,
    pub formula: String,
    pub oracle: String,
}

impl Mismatch {
    fn new(field: impl Into<String>, formula: impl fmt::Debug, oracle: impl fmt::Debug) -> Self {
        Mismatch { field: field.into(), formula: format!("{formula:?}"), oracle: format!("{oracle:?}") }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: formula {} vs oracle {}", self.field, self.formula, self.oracle)
    }
}

/// Values the oracle computed, kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleValues {
    pub vertices: usize,
    pub connected: bool,
    pub components: usize,
    pub diameter: ExtNat,
    pub clique_number: u64,
    pub girth: ExtNat,
    pub chromatic: Option<u64>,
    pub knit_degree: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossCheck {
    pub report: AnalysisReport,
    pub oracle: OracleValues,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Vertices of the commuting graph lying over a component's cells.
pub fn descriptor_vertices(d: &ComponentDescriptor, graph: &SimpleGraph<Element>, order: usize) -> Vec<usize> {
    let mut out: Vec<usize> = d
        .cells()
        .into_iter()
        .flat_map(|(l, i)| (0..order).map(move |x| Element::triple(i, x, l)))
        .map(|e| graph.index_of(&e).expect("triple is a vertex"))
        .collect();
    out.sort_unstable();
    out
}

/// Simplified-graph degree of (i, λ) is c_i r_λ, less one when p_{λi} = 0.
pub fn degree_rule_failures(m: &StructuralMatrix) -> Vec<Mismatch> {
    let g = build_simplified_graph(m);
    let (c, r) = (m.col_zero_counts(), m.row_zero_counts());
    g.labels()
        .iter()
        .enumerate()
        .filter_map(|(u, v)| {
            let want = c[v.i] * r[v.lambda] - usize::from(m.is_zero(v.lambda, v.i));
            (g.degree(u) != want).then(|| Mismatch::new(format!("simplified_degree{v}"), want, g.degree(u)))
        })
        .collect()
}

pub fn cross_check(g: &FiniteGroup, p: &SandwichMatrix) -> Result<CrossCheck, VerifyError> {
    let m = p.structural();
    let profile = g.profile();
    let report = analyze(&m, profile)?;
    let graph = build_commuting_graph(g, p)?;
    let mut bad = Vec::new();

    let components = graph.components();
    let connected = components.len() == 1;
    if report.connected != connected {
        bad.push(Mismatch::new("connected", report.connected, connected));
    }
    let descriptors = classify_components(&m)?;
    let mut expanded: Vec<Vec<usize>> = descriptors.iter().map(|d| descriptor_vertices(d, &graph, g.order())).collect();
    for (d, (part, entry)) in descriptors.iter().zip(expanded.iter().zip(&report.components)) {
        if components.contains(part) {
            let oracle = graph.component_diameter(part) as u64;
            if entry.diameter != oracle {
                bad.push(Mismatch::new(format!("component_diameter{:?}", d.cells()[0]), entry.diameter, oracle));
            }
            let naive = component_diameter(d, &m, profile)?;
            if naive != entry.diameter {
                bad.push(Mismatch::new("component_diameter_fastpath", entry.diameter, naive));
            }
        }
    }
    expanded.sort();
    let mut sorted = components.clone();
    sorted.sort();
    if expanded != sorted {
        bad.push(Mismatch::new("components", expanded.len(), sorted.len()));
    }

    let diameter = graph.diameter();
    if report.diameter != diameter {
        bad.push(Mismatch::new("diameter", report.diameter, diameter));
    }
    let (slow, fast) = (diameter_formula(&m, profile)?, diameter_fastpath(&m, profile)?);
    if slow != fast {
        bad.push(Mismatch::new("diameter_fastpath", fast, slow));
    }

    let clique = graph.max_clique().len() as u64;
    if report.clique_number != clique {
        bad.push(Mismatch::new("clique_number", report.clique_number, clique));
    }
    let girth = graph.shortest_cycle();
    if report.girth != girth {
        bad.push(Mismatch::new("girth", report.girth, girth));
    }

    let upper = report.chromatic_upper_edges.min(report.chromatic_upper_degree);
    let chromatic = if graph.vertex_count() <= CHROMATIC_LIMIT { Some(graph.exact_chromatic()? as u64) } else { None };
    let lower_ok = chromatic.map_or(clique, |c| c) >= report.chromatic_lower;
    let upper_ok = chromatic.map_or(clique, |c| c) <= upper;
    if !lower_ok || !upper_ok {
        bad.push(Mismatch::new("chromatic_bracket", (report.chromatic_lower, upper), chromatic.unwrap_or(clique)));
    }

    let knit = knit_degree(g, p, KNIT_SEARCH_LEN)?;
    if report.knit_degree != knit {
        bad.push(Mismatch::new("knit_degree", report.knit_degree, knit));
    }

    bad.extend(degree_rule_failures(&m));

    let identity = SandwichMatrix::from_structural(&m, g);
    if let Err(e) = psi_isomorphism(p, &identity, g) {
        bad.push(Mismatch::new("psi", "isomorphism", e.to_string()));
    }

    let oracle = OracleValues {
        vertices: graph.vertex_count(),
        connected,
        components: components.len(),
        diameter,
        clique_number: clique,
        girth,
        chromatic,
        knit_degree: knit,
    };
    Ok(CrossCheck { report, oracle, mismatches: bad })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub count: usize,
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_order: usize,
    pub seed: u64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig { count: 100, max_rows: 4, max_cols: 4, max_order: 4, seed: 0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub instance: String,
    pub mismatches: Vec<Mismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<Counterexample>,
}

/// Groups the random driver draws from, up to the given order.
pub fn group_pool(max_order: usize) -> Vec<GroupSpec> {
    let mut pool: Vec<GroupSpec> = (1..=max_order.min(8)).map(GroupSpec::Cyclic).collect();
    if max_order >= 4 {
        pool.push(GroupSpec::table_of(&FiniteGroup::klein_four()));
    }
    pool.extend((3..=max_order / 2).take(3).map(GroupSpec::Dihedral));
    if max_order >= 8 {
        pool.push(GroupSpec::table_of(&FiniteGroup::quaternion()));
    }
    pool
}

/// A random regular instance with at least one zero and random group entries.
pub fn random_instance(
    rng: &mut impl Rng,
    max_rows: usize,
    max_cols: usize,
    pool: &[GroupSpec],
) -> Result<Instance, VerifyError> {
    // a regular matrix with a zero needs two rows and two columns
    let rows = rng.gen_range(2..=max_rows.max(2));
    let cols = rng.gen_range(2..=max_cols.max(2));
    let prob = rng.gen_range(0.2..0.7);
    let m = random_regular_from(rng, rows, cols, prob)?;
    let spec = pool[rng.gen_range(0..pool.len())].clone();
    let group = spec.build().expect("pool groups are valid");
    let entries: Vec<usize> = (0..rows * cols).map(|_| rng.gen_range(0..group.order())).collect();
    let p = SandwichMatrix::from_structural_with(&m, |l, i| entries[l * cols + i]);
    Ok(Instance { group_spec: spec, group, matrix: p })
}

pub fn fuzz(cfg: FuzzConfig) -> Result<FuzzSummary, VerifyError> {
    let size = cfg.max_rows.max(2) * cfg.max_cols.max(2) * cfg.max_order;
    if size > VERTEX_LIMIT {
        return Err(OracleError::SizeLimit { what: "fuzz instance vertices", size, limit: VERTEX_LIMIT }.into());
    }
    if cfg.max_order == 0 {
        return Err(
            GenError::BadParams { family: "random", reason: "group order bound must be positive".into() }.into()
        );
    }
    let pool = group_pool(cfg.max_order);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut summary = FuzzSummary { config: cfg, passed: 0, failed: 0, first_failure: None };
    for index in 0..cfg.count {
        let inst = random_instance(&mut rng, cfg.max_rows, cfg.max_cols, &pool)?;
        let check = cross_check(&inst.group, &inst.matrix)?;
        if check.passed() {
            summary.passed += 1;
        } else {
            summary.failed += 1;
            summary.first_failure.get_or_insert(Counterexample {
                index,
                instance: inst.to_string(),
                mismatches: check.mismatches,
            });
        }
    }
    Ok(summary)
}
