//! Text format for instances:
//!
//! ```text
//! # comment
//! group cyclic 3
//! matrix 2 3
//! 0 x g1
//! x x x
//! ```
//!
//! `group table n` is followed by n rows of n element indices. In the matrix
//! `0` is zero, `x` the identity and `g<k>` element k.

use std::fmt;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::matrix::{Cell, MatrixError, SandwichMatrix, StructuralMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Group { line: usize, source: GroupError },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("missing `{0}` section")]
    Missing(&'static str),
}

fn syntax(line: usize, message: impl Into<String>) -> InstanceError {
    InstanceError::Syntax { line, message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Table(rows) => FiniteGroup::from_table(rows.clone()),
        }
    }

    pub fn table_of(g: &FiniteGroup) -> Self {
        GroupSpec::Table(g.table_rows())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => writeln!(f, "group cyclic {n}"),
            GroupSpec::Dihedral(n) => writeln!(f, "group dihedral {n}"),
            GroupSpec::Table(rows) => {
                writeln!(f, "group table {}", rows.len())?;
                for row in rows {
                    let cells: Vec<String> = row.iter().map(usize::to_string).collect();
                    writeln!(f, "{}", cells.join(" "))?;
                }
                Ok(())
            }
        }
    }
}

/// Matrix token before a group is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Zero,
    Star,
    Elem(usize),
}

struct RawMatrix {
    rows: usize,
    cols: usize,
    tokens: Vec<Token>,
    first_line: usize,
}

struct Document {
    group: Option<(GroupSpec, usize)>,
    matrix: Option<RawMatrix>,
}

fn parse_header(line: usize, words: &[&str], keyword: &str, arity: usize) -> Result<Vec<usize>, InstanceError> {
    if words.len() != arity + 1 {
        return Err(syntax(line, format!("`{keyword}` expects {arity} arguments")));
    }
    words[1..]
        .iter()
        .map(|w| w.parse::<usize>().map_err(|_| syntax(line, format!("expected a number, got `{w}`"))))
        .collect()
}

fn parse_token(line: usize, t: &str) -> Result<Token, InstanceError> {
    match t {
        "0" => Ok(Token::Zero),
        "x" | "X" | "*" => Ok(Token::Star),
        _ => t
            .strip_prefix('g')
            .and_then(|k| k.parse().ok())
            .map(Token::Elem)
            .ok_or_else(|| syntax(line, format!("bad matrix token `{t}`"))),
    }
}

fn row_tokens(line: usize, text: &str, cols: usize) -> Result<Vec<Token>, InstanceError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let tokens: Vec<Token> = if words.len() == 1 && cols > 1 && words[0].chars().all(|c| "0xX*".contains(c)) {
        words[0].chars().map(|c| parse_token(line, &c.to_string())).collect::<Result<_, _>>()?
    } else {
        words.iter().map(|w| parse_token(line, w)).collect::<Result<_, _>>()?
    };
    if tokens.len() != cols {
        return Err(syntax(line, format!("expected {cols} entries, got {}", tokens.len())));
    }
    Ok(tokens)
}

fn parse_document(text: &str) -> Result<Document, InstanceError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut doc = Document { group: None, matrix: None };
    while let Some((n, l)) = lines.next() {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words[0] {
            "group" => {
                if doc.group.is_some() {
                    return Err(syntax(n, "second `group` line"));
                }
                let kind = *words.get(1).ok_or_else(|| syntax(n, "`group` needs a kind"))?;
                let arg = parse_header(n, &words[1..], kind, 1)?[0];
                let spec = match kind {
                    "cyclic" => GroupSpec::Cyclic(arg),
                    "dihedral" => GroupSpec::Dihedral(arg),
                    "table" => {
                        let mut rows = Vec::with_capacity(arg);
                        for _ in 0..arg {
                            let (m, row) = lines.next().ok_or_else(|| syntax(n, "group table is cut short"))?;
                            let row = row
                                .split_whitespace()
                                .map(|w| w.parse().map_err(|_| syntax(m, format!("bad table entry `{w}`"))))
                                .collect::<Result<Vec<usize>, _>>()?;
                            rows.push(row);
                        }
                        GroupSpec::Table(rows)
                    }
                    other => return Err(syntax(n, format!("unknown group kind `{other}`"))),
                };
                doc.group = Some((spec, n));
            }
            "matrix" => {
                if doc.matrix.is_some() {
                    return Err(syntax(n, "second `matrix` line"));
                }
                let dims = parse_header(n, &words, "matrix", 2)?;
                let (rows, cols) = (dims[0], dims[1]);
                if rows == 0 || cols == 0 {
                    return Err(syntax(n, "matrix dimensions must be positive"));
                }
                let mut tokens = Vec::with_capacity(rows * cols);
                for _ in 0..rows {
                    let (m, row) = lines.next().ok_or_else(|| syntax(n, "matrix is cut short"))?;
                    tokens.extend(row_tokens(m, row, cols)?);
                }
                doc.matrix = Some(RawMatrix { rows, cols, tokens, first_line: n + 1 });
            }
            other => return Err(syntax(n, format!("unexpected `{other}`"))),
        }
    }
    Ok(doc)
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub group_spec: GroupSpec,
    pub group: FiniteGroup,
    pub matrix: SandwichMatrix,
}

impl Instance {
    pub fn new(group_spec: GroupSpec, matrix: SandwichMatrix) -> Result<Self, GroupError> {
        let group = group_spec.build()?;
        Ok(Instance { group_spec, group, matrix })
    }

    pub fn parse(text: &str) -> Result<Self, InstanceError> {
        let doc = parse_document(text)?;
        let (group_spec, line) = doc.group.ok_or(InstanceError::Missing("group"))?;
        let group = group_spec.build().map_err(|source| InstanceError::Group { line, source })?;
        let raw = doc.matrix.ok_or(InstanceError::Missing("matrix"))?;
        let mut cells = Vec::with_capacity(raw.tokens.len());
        for (k, t) in raw.tokens.iter().enumerate() {
            cells.push(match *t {
                Token::Zero => None,
                Token::Star => Some(group.identity()),
                Token::Elem(e) if e < group.order() => Some(e),
                Token::Elem(e) => {
                    return Err(syntax(
                        raw.first_line + k / raw.cols,
                        format!("element g{e} is outside a group of order {}", group.order()),
                    ))
                }
            });
        }
        let matrix = SandwichMatrix::new(raw.rows, raw.cols, cells, &group)?;
        Ok(Instance { group_spec, group, matrix })
    }

    pub fn structural(&self) -> StructuralMatrix {
        self.matrix.structural()
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group_spec)?;
        writeln!(f, "matrix {} {}", self.matrix.rows(), self.matrix.cols())?;
        let id = self.group.identity();
        for l in 0..self.matrix.rows() {
            let row: Vec<String> = (0..self.matrix.cols())
                .map(|i| match self.matrix.get(l, i) {
                    None => "0".to_string(),
                    Some(e) if e == id => "x".to_string(),
                    Some(e) => format!("g{e}"),
                })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reads a `matrix` section of zeros and Stars; a `group` line is ignored.
pub fn parse_structural(text: &str) -> Result<StructuralMatrix, InstanceError> {
    let raw = parse_document(text)?.matrix.ok_or(InstanceError::Missing("matrix"))?;
    let mut cells = Vec::with_capacity(raw.tokens.len());
    for (k, t) in raw.tokens.iter().enumerate() {
        cells.push(match t {
            Token::Zero => Cell::Zero,
            Token::Star => Cell::Star,
            Token::Elem(_) => return Err(syntax(raw.first_line + k / raw.cols, "group elements need a `group` line")),
        });
    }
    Ok(StructuralMatrix::new(raw.rows, raw.cols, cells)?)
}

pub fn format_structural(m: &StructuralMatrix) -> String {
    format!("matrix {} {}\n{m}", m.rows(), m.cols())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_and_print() {
        let text = "# two rows\ngroup cyclic 3\nmatrix 2 3\n0 x g2\nx x x\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.group.order(), 3);
        assert_eq!(inst.matrix.get(0, 0), None);
        assert_eq!(inst.matrix.get(0, 2), Some(2));
        assert_eq!(inst.to_string(), "group cyclic 3\nmatrix 2 3\n0 x g2\nx x x\n");
    }

    #[test]
    fn table_group() {
        let text = "group table 2\n0 1\n1 0\nmatrix 2 2\n0x\nxg1\n";
        assert!(Instance::parse(text).is_err());
        let text = "group table 2\n0 1\n1 0\nmatrix 2 2\n0 x\nx g1\n";
        let inst = Instance::parse(text).unwrap();
        assert!(inst.group.is_abelian());
        assert_eq!(Instance::parse(&inst.to_string()).unwrap().matrix, inst.matrix);
    }

    #[test]
    fn errors() {
        let bad = |t: &str| Instance::parse(t).unwrap_err();
        assert!(matches!(bad("group cyclic 2\nmatrix 1 2\n0 g5\n"), InstanceError::Syntax { line: 3, .. }));
        assert!(matches!(bad("group cyclic 2\nmatrix 2 2\n0 x\n"), InstanceError::Syntax { line: 2, .. }));
        assert!(matches!(bad("group cyclic 0\nmatrix 1 1\nx\n"), InstanceError::Group { line: 1, .. }));
        assert!(matches!(bad("matrix 1 1\nx\n"), InstanceError::Missing("group")));
        assert!(matches!(bad("group lie 3\n"), InstanceError::Syntax { line: 1, .. }));
        assert!(matches!(bad("group cyclic 2\nmatrix 1 2\n0 y\n"), InstanceError::Syntax { line: 3, .. }));
        assert!(matches!(bad("hello\n"), InstanceError::Syntax { line: 1, .. }));
    }

    #[test]
    fn structural_round_trip() {
        let m = fixtures::closure_example();
        assert_eq!(parse_structural(&format_structural(&m)).unwrap(), m);
        assert!(parse_structural("matrix 1 1\ng1\n").is_err());
    }
}
