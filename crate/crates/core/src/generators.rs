//! Matrix families with known invariants, and seeded random matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::{Cell, StructuralMatrix};

pub const MAX_REJECTIONS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("{family} needs n >= {min}, got {n}")]
    OutOfFamily { family: &'static str, n: usize, min: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: &'static str, reason: String },
    #[error("zero probability must lie strictly between 0 and 1, got {0}")]
    Probability(f64),
    #[error("no regular matrix with a zero after {0} draws")]
    Exhausted(usize),
}

/// Zeros exactly at (λ,λ), (λ,λ+1) for λ <= n and (n+1,1), in an (n+1)x(n+1) grid.
pub fn banded_diameter_family(n: usize) -> Result<StructuralMatrix, GenError> {
    if n < 2 {
        return Err(GenError::OutOfFamily { family: "banded", n, min: 2 });
    }
    Ok(StructuralMatrix::from_fn(n + 1, n + 1, |l, i| {
        if i == l || i == l + 1 || (l == n && i == 0) {
            Cell::Zero
        } else {
            Cell::Star
        }
    }))
}

/// Two rows: n zeros then a Star, then a row of Stars.
pub fn clique_family(n: usize) -> Result<StructuralMatrix, GenError> {
    if n < 1 {
        return Err(GenError::OutOfFamily { family: "clique", n, min: 1 });
    }
    Ok(StructuralMatrix::from_fn(2, n + 1, |l, i| if l == 0 && i < n { Cell::Zero } else { Cell::Star }))
}

/// Stars on the diagonal, zeros elsewhere.
pub fn brandt_pattern(n: usize) -> Result<StructuralMatrix, GenError> {
    if n < 2 {
        return Err(GenError::OutOfFamily { family: "brandt", n, min: 2 });
    }
    Ok(StructuralMatrix::from_fn(n, n, |l, i| if l == i { Cell::Star } else { Cell::Zero }))
}

/// Draws cells independently until the matrix is regular with a zero.
pub fn random_regular_with_zeros(
    rows: usize,
    cols: usize,
    zero_prob: f64,
    seed: u64,
) -> Result<StructuralMatrix, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_regular_from(&mut rng, rows, cols, zero_prob)
}

pub fn random_regular_from(
    rng: &mut impl Rng,
    rows: usize,
    cols: usize,
    zero_prob: f64,
) -> Result<StructuralMatrix, GenError> {
    if rows == 0 || cols == 0 {
        return Err(GenError::BadParams { family: "random", reason: "rows and cols must be positive".into() });
    }
    if !(zero_prob > 0.0 && zero_prob < 1.0) {
        return Err(GenError::Probability(zero_prob));
    }
    for _ in 0..MAX_REJECTIONS {
        let cells = (0..rows * cols).map(|_| if rng.gen_bool(zero_prob) { Cell::Zero } else { Cell::Star }).collect();
        let m = StructuralMatrix::new(rows, cols, cells).expect("cell count matches");
        if m.has_zero() && m.is_regular() {
            return Ok(m);
        }
    }
    Err(GenError::Exhausted(MAX_REJECTIONS))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GeneratorSpec {
    Banded { n: usize },
    Clique { n: usize },
    Brandt { n: usize },
    Random { rows: usize, cols: usize, zero_prob: f64, seed: u64 },
}

impl GeneratorSpec {
    /// Family name followed by its parameters; `seed` is used by `random` only.
    pub fn parse(family: &str, params: &[String], seed: u64) -> Result<Self, GenError> {
        fn num<T: std::str::FromStr>(family: &'static str, s: &str) -> Result<T, GenError> {
            s.parse().map_err(|_| GenError::BadParams { family, reason: format!("cannot parse `{s}`") })
        }
        let arity = |family: &'static str, want: usize| {
            if params.len() == want {
                Ok(())
            } else {
                Err(GenError::BadParams { family, reason: format!("expected {want} parameters, got {}", params.len()) })
            }
        };
        Ok(match family {
            "banded" => {
                arity("banded", 1)?;
                GeneratorSpec::Banded { n: num("banded", &params[0])? }
            }
            "clique" => {
                arity("clique", 1)?;
                GeneratorSpec::Clique { n: num("clique", &params[0])? }
            }
            "brandt" => {
                arity("brandt", 1)?;
                GeneratorSpec::Brandt { n: num("brandt", &params[0])? }
            }
            "random" => {
                arity("random", 3)?;
                GeneratorSpec::Random {
                    rows: num("random", &params[0])?,
                    cols: num("random", &params[1])?,
                    zero_prob: num("random", &params[2])?,
                    seed,
                }
            }
            other => return Err(GenError::UnknownFamily(other.to_string())),
        })
    }

    pub fn generate(&self) -> Result<StructuralMatrix, GenError> {
        match *self {
            GeneratorSpec::Banded { n } => banded_diameter_family(n),
            GeneratorSpec::Clique { n } => clique_family(n),
            GeneratorSpec::Brandt { n } => brandt_pattern(n),
            GeneratorSpec::Random { rows, cols, zero_prob, seed } => {
                random_regular_with_zeros(rows, cols, zero_prob, seed)
            }
        }
    }
}
