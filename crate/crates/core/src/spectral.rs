//! Spectral radius and Perron vectors of nonnegative matrices.
//!
//! Reducible matrices are split along their Frobenius form and the radius is
//! the maximum over the irreducible diagonal blocks. Each block of order two
//! or more is handled by shifted power iteration with Collatz–Wielandt
//! brackets `min_i (Mv)_i / v_i <= r <= max_i (Mv)_i / v_i`, so every
//! returned radius comes with a certified two-sided interval.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::NonnegMatrix;
use crate::structure::{frobenius_form, is_irreducible};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralConfig {
    /// Relative width of the radius bracket at which iteration stops.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Added to the diagonal of the normalized block; makes imprimitive
    /// blocks converge.
    pub shift: f64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_iterations: 100_000,
            shift: 1.0,
        }
    }
}

impl SpectralConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::OutOfRange {
                name: "tolerance",
                value: self.tolerance,
                range: "(0, inf)",
            });
        }
        if self.max_iterations == 0 {
            return Err(Error::OutOfRange {
                name: "max_iterations",
                value: 0.0,
                range: "[1, inf)",
            });
        }
        if !(self.shift >= 0.0 && self.shift.is_finite()) {
            return Err(Error::OutOfRange {
                name: "shift",
                value: self.shift,
                range: "[0, inf)",
            });
        }
        Ok(())
    }
}

/// Perron root and its positive eigenvector, normalized to unit sum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerronPair {
    pub radius: f64,
    pub vector: Vec<f64>,
}

impl PerronPair {
    /// `max_i |(M a)_i - r a_i|`.
    pub fn residual(&self, m: &NonnegMatrix) -> f64 {
        m.mul_vec(&self.vector)
            .iter()
            .zip(&self.vector)
            .map(|(ma, a)| (ma - self.radius * a).abs())
            .fold(0.0, f64::max)
    }
}

/// Power iteration on an irreducible block of order at least two.
fn perron_block(block: &NonnegMatrix, cfg: &SpectralConfig) -> Result<PerronPair> {
    let n = block.n();
    // Normalize so the working radius is at most 1 and the shift is of the
    // same magnitude as the radius. `scale` tracks the accumulated factor.
    let mut scale = block
        .rows()
        .map(|r| r.iter().sum::<f64>())
        .fold(0.0, f64::max);
    let mut work = block.scaled(1.0 / scale);
    let shift = cfg.shift;

    let mut v = vec![1.0 / n as f64; n];
    let mut lower = 0.0;
    let mut upper = f64::INFINITY;
    for iteration in 1..=cfg.max_iterations {
        let mut w = work.mul_vec(&v);
        for (wi, vi) in w.iter_mut().zip(&v) {
            *wi += shift * vi;
        }
        let (lo, hi) = w
            .iter()
            .zip(&v)
            .map(|(wi, vi)| wi / vi)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), q| {
                (lo.min(q), hi.max(q))
            });
        lower = (lo - shift).max(0.0);
        upper = hi - shift;

        let total: f64 = w.iter().sum();
        v = w.into_iter().map(|x| x / total).collect();

        if upper - lower <= cfg.tolerance * lower {
            let radius = 0.5 * (lower + upper) * scale;
            return Ok(PerronPair { radius, vector: v });
        }

        // Keep the working radius near 1 so the shift stays comparable to
        // it; rescaling leaves the eigenvector unchanged.
        if iteration % 16 == 1 {
            let estimate = if lower > 0.0 {
                (lower * upper).sqrt()
            } else {
                upper
            };
            if estimate > 0.0 && !(0.5..=2.0).contains(&estimate) {
                work = work.scaled(1.0 / estimate);
                scale *= estimate;
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iterations,
        lower: lower * scale,
        upper: upper * scale,
    })
}

/// Spectral radius: maximum over the irreducible Frobenius blocks.
pub fn spectral_radius(m: &NonnegMatrix, cfg: &SpectralConfig) -> Result<f64> {
    cfg.validate()?;
    let form = frobenius_form(&m.sign_pattern());
    let mut radius: f64 = 0.0;
    for block in &form.blocks {
        let r = block_radius(m, block, cfg)?;
        radius = radius.max(r);
    }
    Ok(radius)
}

/// Radius of the principal submatrix on an irreducible block.
pub(crate) fn block_radius(m: &NonnegMatrix, block: &[usize], cfg: &SpectralConfig) -> Result<f64> {
    if block.len() == 1 {
        return Ok(m.get(block[0], block[0]));
    }
    perron_block(&m.principal_submatrix(block), cfg).map(|p| p.radius)
}

/// Perron root and vector of a matrix with irreducible sign pattern.
pub fn perron_pair(m: &NonnegMatrix, cfg: &SpectralConfig) -> Result<PerronPair> {
    cfg.validate()?;
    if !is_irreducible(&m.sign_pattern()) {
        return Err(Error::Reducible);
    }
    if m.n() == 1 {
        return Ok(PerronPair {
            radius: m.get(0, 0),
            vector: vec![1.0],
        });
    }
    perron_block(m, cfg)
}

/// Elementwise log-convex combination `[A_ij^(1-t) B_ij^t]`.
pub fn log_convex_combination(a: &NonnegMatrix, b: &NonnegMatrix, t: f64) -> Result<NonnegMatrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    let entries = a
        .entries()
        .iter()
        .zip(b.entries())
        .map(|(&x, &y)| geometric(x, y, t))
        .collect();
    NonnegMatrix::new(a.n(), entries)
}

fn geometric(x: f64, y: f64, t: f64) -> f64 {
    x.powf(1.0 - t) * y.powf(t)
}

/// Slack in each step of the Hölder/subinvariance argument for the pair
/// `(A, B)` at `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HolderGap {
    /// Per row `i`: `(Σ_j A_ij a_j)^(1-t) (Σ_j B_ij b_j)^t - Σ_j (A_ij a_j)^(1-t) (B_ij b_j)^t`.
    pub row_gaps: Vec<f64>,
    /// `r(A)^(1-t) r(B)^t - r(A^(1-t) ∘ B^(t))`.
    pub radius_gap: f64,
}

impl HolderGap {
    pub fn min_row_gap(&self) -> f64 {
        self.row_gaps.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn holder_gap(
    a: &NonnegMatrix,
    b: &NonnegMatrix,
    t: f64,
    cfg: &SpectralConfig,
) -> Result<HolderGap> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::OutOfRange {
            name: "t",
            value: t,
            range: "[0, 1]",
        });
    }
    let pa = perron_pair(a, cfg)?;
    let pb = perron_pair(b, cfg)?;
    let n = a.n();

    let row_gaps = (0..n)
        .map(|i| {
            let (ra, rb) = (a.row(i), b.row(i));
            let sum_a: f64 = ra.iter().zip(&pa.vector).map(|(x, y)| x * y).sum();
            let sum_b: f64 = rb.iter().zip(&pb.vector).map(|(x, y)| x * y).sum();
            let mixed: f64 = (0..n)
                .map(|j| geometric(ra[j] * pa.vector[j], rb[j] * pb.vector[j], t))
                .sum();
            geometric(sum_a, sum_b, t) - mixed
        })
        .collect();

    let h = log_convex_combination(a, b, t)?;
    let radius_gap = geometric(pa.radius, pb.radius, t) - spectral_radius(&h, cfg)?;
    Ok(HolderGap {
        row_gaps,
        radius_gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SpectralConfig {
        SpectralConfig::default()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn all_ones_radius_is_n() {
        for n in 1..6 {
            let m = NonnegMatrix::new(n, vec![1.0; n * n]).unwrap();
            assert!(rel(spectral_radius(&m, &cfg()).unwrap(), n as f64) < 1e-12);
        }
    }

    #[test]
    fn cycle_permutation_radius_is_one() {
        let n = 5;
        let mut e = vec![0.0; n * n];
        for j in 0..n {
            e[((j + 1) % n) * n + j] = 1.0;
        }
        let m = NonnegMatrix::new(n, e).unwrap();
        assert!(rel(spectral_radius(&m, &cfg()).unwrap(), 1.0) < 1e-12);
    }

    #[test]
    fn perron_pair_examples() {
        let m = NonnegMatrix::new(3, vec![1.0; 9]).unwrap();
        let p = perron_pair(&m, &cfg()).unwrap();
        assert!(rel(p.radius, 3.0) < 1e-12);
        assert!(p.vector.iter().all(|&x| (x - 1.0 / 3.0).abs() < 1e-12));

        let swap = NonnegMatrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let p = perron_pair(&swap, &cfg()).unwrap();
        assert!(rel(p.radius, 1.0) < 1e-12);
        assert!(p.vector.iter().all(|&x| (x - 0.5).abs() < 1e-12));

        let remark = NonnegMatrix::from_rows(&[[1.0, 0.0], [1.0, 1.0]]).unwrap();
        assert_eq!(perron_pair(&remark, &cfg()), Err(Error::Reducible));
    }

    #[test]
    fn reducible_radius_is_block_maximum() {
        let m =
            NonnegMatrix::from_rows(&[[2.0, 0.0, 0.0], [5.0, 0.0, 1.0], [7.0, 4.0, 0.0]]).unwrap();
        // Blocks {0} with radius 2 and {1, 2} with radius 2 (sqrt(1 * 4)).
        assert!(rel(spectral_radius(&m, &cfg()).unwrap(), 2.0) < 1e-12);
        let nil = NonnegMatrix::from_rows(&[[0.0, 0.0], [3.0, 0.0]]).unwrap();
        assert_eq!(spectral_radius(&nil, &cfg()).unwrap(), 0.0);
    }

    #[test]
    fn badly_scaled_blocks_converge() {
        let m = NonnegMatrix::from_rows(&[[0.0, 1e6], [1e-6, 0.0]]).unwrap();
        assert!(rel(spectral_radius(&m, &cfg()).unwrap(), 1.0) < 1e-11);
        let m = NonnegMatrix::from_rows(&[[0.0, 1e-9, 0.0], [0.0, 0.0, 1e-9], [1e-9, 0.0, 0.0]])
            .unwrap();
        assert!(rel(spectral_radius(&m, &cfg()).unwrap(), 1e-9) < 1e-11);
    }

    #[test]
    fn non_convergence_is_reported() {
        let m = NonnegMatrix::from_rows(&[[1.0, 2.0], [3.0, 0.5]]).unwrap();
        let tight = SpectralConfig {
            max_iterations: 1,
            ..cfg()
        };
        assert!(matches!(
            spectral_radius(&m, &tight),
            Err(Error::NoConvergence { iterations: 1, .. })
        ));
    }

    #[test]
    fn invalid_config_rejected() {
        let m = NonnegMatrix::identity(2);
        for bad in [
            SpectralConfig {
                tolerance: 0.0,
                ..cfg()
            },
            SpectralConfig {
                max_iterations: 0,
                ..cfg()
            },
            SpectralConfig {
                shift: -1.0,
                ..cfg()
            },
        ] {
            assert!(matches!(
                spectral_radius(&m, &bad),
                Err(Error::OutOfRange { .. })
            ));
        }
    }

    #[test]
    fn holder_gap_vanishes_for_equal_pair() {
        let a =
            NonnegMatrix::from_rows(&[[0.5, 1.0, 0.0], [0.0, 0.2, 2.0], [1.5, 0.0, 0.3]]).unwrap();
        let g = holder_gap(&a, &a, 0.3, &cfg()).unwrap();
        assert!(g.row_gaps.iter().all(|x| x.abs() < 1e-12));
        assert!(g.radius_gap.abs() < 1e-10);
    }

    #[test]
    fn holder_gap_positive_for_distinct_pair() {
        let a = NonnegMatrix::new(2, vec![1.0; 4]).unwrap();
        let b = NonnegMatrix::from_rows(&[[1.0, 2.0], [2.0, 1.0]]).unwrap();
        let g = holder_gap(&a, &b, 0.5, &cfg()).unwrap();
        let expected = 6f64.sqrt() - (1.0 + 2f64.sqrt());
        assert!((g.radius_gap - expected).abs() < 1e-10);
        assert!(g.radius_gap > 0.03);
        assert!(g.min_row_gap() >= -1e-12);
    }
}
