//! Deterministic matrix families and seeded random patterns.
//!
//! Random families draw from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3). A pattern consumes one `f64` per cell in row-major order and sets
//! the cell when the draw is below `density`; `random_matrix` then draws one
//! more `f64` per set cell, again row-major, and stores `1 - u` so values
//! lie in `(0, 1]`. Hence `random_matrix(n, d, s)` has sign pattern
//! `random_pattern(n, d, s)`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{NonnegMatrix, SignPattern};

/// Named constructor families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Wielandt,
    PartlyDecomposableTwoFold,
    NCycle,
    CyclicNormal,
    #[serde(rename = "worked_4x4")]
    Worked4x4,
    #[serde(rename = "remark_2x2")]
    Remark2x2,
    RandomPattern,
    RandomMatrix,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Wielandt,
        Family::PartlyDecomposableTwoFold,
        Family::NCycle,
        Family::CyclicNormal,
        Family::Worked4x4,
        Family::Remark2x2,
        Family::RandomPattern,
        Family::RandomMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Wielandt => "wielandt",
            Family::PartlyDecomposableTwoFold => "partly_decomposable_two_fold",
            Family::NCycle => "n_cycle",
            Family::CyclicNormal => "cyclic_normal",
            Family::Worked4x4 => "worked_4x4",
            Family::Remark2x2 => "remark_2x2",
            Family::RandomPattern => "random_pattern",
            Family::RandomMatrix => "random_matrix",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
                format!("unknown family {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// Parameters for [`generate`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    /// Ignored by fixed-size families.
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_density")]
    pub density: f64,
    /// Cyclic class sizes for `cyclic_normal`.
    #[serde(default)]
    pub blocks: Vec<usize>,
}

fn default_density() -> f64 {
    0.5
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize) -> Self {
        Self {
            family,
            n,
            seed: 0,
            density: default_density(),
            blocks: Vec::new(),
        }
    }
}

/// Builds the matrix described by `spec`; pattern families use unit entries.
pub fn generate(spec: &GeneratorSpec) -> Result<NonnegMatrix> {
    let pattern = match spec.family {
        Family::Wielandt => wielandt(spec.n)?,
        Family::PartlyDecomposableTwoFold => partly_decomposable_two_fold(spec.n)?,
        Family::NCycle => n_cycle(spec.n)?,
        Family::CyclicNormal => cyclic_normal(&spec.blocks)?,
        Family::Worked4x4 => return Ok(worked_4x4()),
        Family::Remark2x2 => remark_2x2(),
        Family::RandomPattern => random_pattern(spec.n, spec.density, spec.seed)?,
        Family::RandomMatrix => return random_matrix(spec.n, spec.density, spec.seed),
    };
    Ok(NonnegMatrix::from_pattern(&pattern))
}

fn require(family: &'static str, ok: bool, requirement: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidFamily {
            family,
            requirement: requirement.into(),
        })
    }
}

/// `n`-cycle `j -> j + 1 (mod n)`: cell `(j + 1 mod n, j)` for every `j`.
pub fn n_cycle(n: usize) -> Result<SignPattern> {
    require("n_cycle", n >= 1, "n >= 1")?;
    let mut mask = vec![false; n * n];
    for j in 0..n {
        mask[((j + 1) % n) * n + j] = true;
    }
    SignPattern::new(n, mask)
}

/// The `n`-cycle plus the shortcut `1 -> 3`, giving a cycle of length
/// `n - 1`. Primitive, but column `n` shares no row with any other column.
pub fn wielandt(n: usize) -> Result<SignPattern> {
    require("wielandt", n >= 3, "n >= 3")?;
    Ok(n_cycle(n)?.with(2, 0, true))
}

/// The `n`-cycle, the whole last row except its diagonal, and cell `(1, 2)`
/// (1-based). Two-fold irreducible with `2n - 1` set cells, yet partly
/// decomposable.
pub fn partly_decomposable_two_fold(n: usize) -> Result<SignPattern> {
    require("partly_decomposable_two_fold", n >= 4, "n >= 4")?;
    let mut p = n_cycle(n)?;
    for j in 0..n - 1 {
        p = p.with(n - 1, j, true);
    }
    Ok(p.with(0, 1, true))
}

/// Column-stochastic 4x4 matrix whose digraph is the two cycles
/// `1 -> 2 -> 1` and `1 -> 3 -> 4 -> 1`.
pub fn worked_4x4() -> NonnegMatrix {
    NonnegMatrix::from_rows(&[
        [0.0, 1.0, 0.0, 1.0],
        [0.5, 0.0, 0.0, 0.0],
        [0.5, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
    ])
    .expect("valid literal")
}

/// `[[1, 0], [1, 1]]`: reducible although `AᵀA` and `AAᵀ` are irreducible.
pub fn remark_2x2() -> SignPattern {
    SignPattern::from_rows(&[[1, 0], [1, 1]])
}

/// Cyclic normal form with full blocks: class `k` feeds class `k + 1`
/// (mod the number of classes). Needs at least two nonempty classes.
pub fn cyclic_normal(block_sizes: &[usize]) -> Result<SignPattern> {
    require(
        "cyclic_normal",
        block_sizes.len() >= 2 && block_sizes.iter().all(|&s| s > 0),
        "at least two positive block sizes",
    )?;
    let n: usize = block_sizes.iter().sum();
    let mut start = Vec::with_capacity(block_sizes.len());
    let mut offset = 0;
    for &s in block_sizes {
        start.push(offset);
        offset += s;
    }
    let gamma = block_sizes.len();
    let mut mask = vec![false; n * n];
    for k in 0..gamma {
        let to = (k + 1) % gamma;
        for i in start[to]..start[to] + block_sizes[to] {
            for j in start[k]..start[k] + block_sizes[k] {
                mask[i * n + j] = true;
            }
        }
    }
    SignPattern::new(n, mask)
}

fn check_density(family: &'static str, n: usize, density: f64) -> Result<()> {
    require(family, n >= 1, "n >= 1")?;
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::OutOfRange {
            name: "density",
            value: density,
            range: "(0, 1]",
        });
    }
    Ok(())
}

fn draw_pattern(n: usize, density: f64, rng: &mut ChaCha8Rng) -> SignPattern {
    let mask = (0..n * n).map(|_| rng.gen::<f64>() < density).collect();
    SignPattern::new(n, mask).expect("n >= 1")
}

pub fn random_pattern(n: usize, density: f64, seed: u64) -> Result<SignPattern> {
    check_density("random_pattern", n, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(draw_pattern(n, density, &mut rng))
}

pub fn random_matrix(n: usize, density: f64, seed: u64) -> Result<NonnegMatrix> {
    check_density("random_matrix", n, density)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pattern = draw_pattern(n, density, &mut rng);
    let entries = pattern
        .mask()
        .iter()
        .map(|&set| if set { 1.0 - rng.gen::<f64>() } else { 0.0 })
        .collect();
    NonnegMatrix::new(n, entries)
}

/// Realizes `pattern` with entries uniform in `[lo, hi)` on set cells.
pub fn realize<R: Rng>(pattern: &SignPattern, lo: f64, hi: f64, rng: &mut R) -> NonnegMatrix {
    let entries = pattern
        .mask()
        .iter()
        .map(|&set| if set { rng.gen_range(lo..hi) } else { 0.0 })
        .collect();
    NonnegMatrix::new(pattern.n(), entries).expect("valid realization")
}
