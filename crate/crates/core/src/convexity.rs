//! Log-convexity of `R(D) = log r(e^D A)` over real diagonal `D`.
//!
//! Strictness along every segment with nonscalar `D - C` holds exactly when
//! `A` and `AᵀA` are both irreducible. When it fails, [`construct_witness`]
//! produces a segment on which `R` is affine.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{convex_combination, DiagonalParams, NonnegMatrix, SignPattern};
use crate::spectral::{block_radius, spectral_radius, SpectralConfig};
use crate::structure::{
    column_components, frobenius_form, is_chainable, is_fully_indecomposable, is_irreducible,
    is_primitive, is_two_fold,
};

/// `φ(t)` at or below this counts as equality. Three radius evaluations at
/// relative tolerance 1e-12 each go into `φ`.
pub const EQUALITY_THRESHOLD: f64 = 1e-8;

/// Relative tolerance for the elementwise similarity identity.
pub const SIMILARITY_TOLERANCE: f64 = 1e-12;

/// Why a matrix admits equality with nonscalar `D - C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureCause {
    Reducible,
    AtaReducible,
}

/// Outcome of the combinatorial strictness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property1 {
    Holds,
    Fails(FailureCause),
}

impl Property1 {
    pub fn holds(self) -> bool {
        self == Property1::Holds
    }
}

/// Decides strict log-convexity from the sign pattern alone.
pub fn decide_property1(p: &SignPattern) -> Result<Property1> {
    if p.is_zero() {
        return Err(Error::ZeroPattern);
    }
    if !is_irreducible(p) {
        return Ok(Property1::Fails(FailureCause::Reducible));
    }
    if is_two_fold(p) {
        Ok(Property1::Holds)
    } else {
        Ok(Property1::Fails(FailureCause::AtaReducible))
    }
}

/// Scaling part of an equality witness: `e^D A = α E⁻¹ e^C A E`.
#[derive(Clone, Debug, PartialEq)]
pub struct Similarity {
    pub alpha: f64,
    /// `L_i = log E_i`.
    pub log_scaling: Vec<f64>,
}

impl Similarity {
    /// Diagonal of `E`.
    pub fn scaling(&self) -> Vec<f64> {
        self.log_scaling.iter().map(|l| l.exp()).collect()
    }
}

/// A nonscalar pair `(C, D)` on whose segment `R` is affine.
///
/// Witnesses for irreducible `A` carry the diagonal similarity that
/// explains the equality. Reducible `A` need no similarity: shifting one
/// dominant Frobenius block is enough, and no diagonal similarity exists in
/// general.
#[derive(Clone, Debug, PartialEq)]
pub struct EqualityWitness {
    pub c: DiagonalParams,
    pub d: DiagonalParams,
    pub cause: FailureCause,
    pub similarity: Option<Similarity>,
}

impl EqualityWitness {
    /// `D - C`.
    pub fn delta(&self) -> DiagonalParams {
        self.d
            .sub(&self.c)
            .expect("witness diagonals share a length")
    }
}

impl Serialize for EqualityWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            cause: FailureCause,
            #[serde(rename = "C")]
            c: &'a DiagonalParams,
            #[serde(rename = "D")]
            d: &'a DiagonalParams,
            alpha: Option<f64>,
            #[serde(rename = "E")]
            e: Option<Vec<f64>>,
            #[serde(rename = "L")]
            l: Option<&'a [f64]>,
        }
        Repr {
            cause: self.cause,
            c: &self.c,
            d: &self.d,
            alpha: self.similarity.as_ref().map(|s| s.alpha),
            e: self.similarity.as_ref().map(Similarity::scaling),
            l: self.similarity.as_ref().map(|s| s.log_scaling.as_slice()),
        }
        .serialize(serializer)
    }
}

/// Structural facts behind a strictness certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwoFoldFacts {
    pub irreducible: bool,
    pub ata_irreducible: bool,
    pub primitive: bool,
    pub chainable: bool,
    pub fully_indecomposable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexityCertificate {
    StrictlyConvex { reason: TwoFoldFacts },
    EqualityPossible { witness: EqualityWitness },
}

impl ConvexityCertificate {
    pub fn is_strict(&self) -> bool {
        matches!(self, ConvexityCertificate::StrictlyConvex { .. })
    }
}

/// `R(D) = log r(e^D A)`.
pub fn log_radius_scaled(
    a: &NonnegMatrix,
    d: &DiagonalParams,
    cfg: &SpectralConfig,
) -> Result<f64> {
    let r = spectral_radius(&a.scale_exp(d)?, cfg)?;
    if r <= 0.0 {
        return Err(Error::ZeroSpectralRadius);
    }
    Ok(r.ln())
}

/// `φ(t) = (1-t) R(C) + t R(D) - R((1-t) C + t D)`; nonnegative up to
/// rounding, zero exactly on equality.
pub fn convexity_gap(
    a: &NonnegMatrix,
    c: &DiagonalParams,
    d: &DiagonalParams,
    t: f64,
    cfg: &SpectralConfig,
) -> Result<f64> {
    let mid = convex_combination(c, d, t)?;
    let rc = log_radius_scaled(a, c, cfg)?;
    let rd = log_radius_scaled(a, d, cfg)?;
    let rm = log_radius_scaled(a, &mid, cfg)?;
    Ok((1.0 - t) * rc + t * rd - rm)
}

/// `φ` at each `t` in `grid`, as `(t, φ(t))` pairs.
pub fn gap_profile(
    a: &NonnegMatrix,
    c: &DiagonalParams,
    d: &DiagonalParams,
    grid: &[f64],
    cfg: &SpectralConfig,
) -> Result<Vec<(f64, f64)>> {
    let rc = log_radius_scaled(a, c, cfg)?;
    let rd = log_radius_scaled(a, d, cfg)?;
    grid.iter()
        .map(|&t| {
            let mid = convex_combination(c, d, t)?;
            let rm = log_radius_scaled(a, &mid, cfg)?;
            Ok((t, (1.0 - t) * rc + t * rd - rm))
        })
        .collect()
}

/// `(R(D1) + R(D2)) / 2 - R((D1 + D2) / 2)`.
pub fn midpoint_convexity_check(
    a: &NonnegMatrix,
    d1: &DiagonalParams,
    d2: &DiagonalParams,
    cfg: &SpectralConfig,
) -> Result<f64> {
    convexity_gap(a, d1, d2, 0.5, cfg)
}

/// Solution structure of the linearized equality conditions
/// `Δ_i = log α + L_j - L_i` for every set cell `(i, j)`.
///
/// Columns sharing a row are forced to equal `L`, so `L` is constant on the
/// column components and otherwise free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualitySystem {
    pub column_components: Vec<Vec<usize>>,
    /// Component holding index `i` (as a column).
    pub component_of: Vec<usize>,
    /// Component holding every nonzero column of row `i`.
    pub row_component: Vec<usize>,
}

impl EqualitySystem {
    pub fn n(&self) -> usize {
        self.component_of.len()
    }

    pub fn is_connected(&self) -> bool {
        self.column_components.len() == 1
    }

    fn check_levels(&self, levels: &[f64]) -> Result<()> {
        if levels.len() != self.column_components.len() {
            return Err(Error::DimensionMismatch {
                expected: self.column_components.len(),
                found: levels.len(),
            });
        }
        Ok(())
    }

    /// `L_i` from one free value per column component.
    pub fn log_scaling(&self, levels: &[f64]) -> Result<Vec<f64>> {
        self.check_levels(levels)?;
        Ok(self.component_of.iter().map(|&k| levels[k]).collect())
    }

    /// The forced `Δ`: `Δ_i = log α + level(row i) - level(column i)`.
    pub fn delta(&self, log_alpha: f64, levels: &[f64]) -> Result<DiagonalParams> {
        self.check_levels(levels)?;
        Ok(DiagonalParams::new(
            (0..self.n())
                .map(|i| log_alpha + levels[self.row_component[i]] - levels[self.component_of[i]])
                .collect(),
        ))
    }

    /// The witness with the given base `C`, `α = e^{log_alpha}` and
    /// component levels.
    pub fn witness(
        &self,
        c: &DiagonalParams,
        log_alpha: f64,
        levels: &[f64],
    ) -> Result<EqualityWitness> {
        let delta = self.delta(log_alpha, levels)?;
        let d = c.add(&delta)?;
        Ok(EqualityWitness {
            c: c.clone(),
            d,
            cause: FailureCause::AtaReducible,
            similarity: Some(Similarity {
                alpha: log_alpha.exp(),
                log_scaling: self.log_scaling(levels)?,
            }),
        })
    }
}

/// Column components and forced `Δ` structure of an irreducible pattern.
pub fn solve_equality_system(p: &SignPattern) -> Result<EqualitySystem> {
    if !is_irreducible(p) {
        return Err(Error::Reducible);
    }
    let column_components = column_components(p);
    let mut component_of = vec![0; p.n()];
    for (k, comp) in column_components.iter().enumerate() {
        for &j in comp {
            component_of[j] = k;
        }
    }
    let row_component = (0..p.n())
        .map(|i| {
            let mut cols = p.row_support(i);
            let first = cols.next().map_or(component_of[i], |j| component_of[j]);
            debug_assert!(cols.all(|j| component_of[j] == first));
            first
        })
        .collect();
    Ok(EqualitySystem {
        column_components,
        component_of,
        row_component,
    })
}

/// Digraph has a cycle, i.e. every realization has a positive radius.
pub(crate) fn has_positive_radius(p: &SignPattern) -> bool {
    frobenius_form(p)
        .blocks
        .iter()
        .any(|b| b.len() > 1 || p.get(b[0], b[0]))
}

/// A nonscalar `(C, D)` with `φ(t) = 0` on `[0, 1]`.
///
/// Reducible `A`: `D = 0` and `C` is `1` on a Frobenius block of maximal
/// radius, `0` elsewhere. Irreducible `A` with reducible `AᵀA`: `C = 0`,
/// `α = e`, `L = 1` on the second column component and `0` elsewhere.
pub fn construct_witness(a: &NonnegMatrix, cfg: &SpectralConfig) -> Result<EqualityWitness> {
    let p = a.sign_pattern();
    if is_two_fold(&p) {
        return Err(Error::TwoFold);
    }
    if !has_positive_radius(&p) {
        return Err(Error::ZeroSpectralRadius);
    }
    let n = a.n();

    if !is_irreducible(&p) {
        let form = frobenius_form(&p);
        let mut best: Option<(usize, f64)> = None;
        for (k, block) in form.blocks.iter().enumerate() {
            let r = block_radius(a, block, cfg)?;
            if best.is_none_or(|(_, rb)| r > rb) {
                best = Some((k, r));
            }
        }
        let (h, _) = best.expect("at least one block");
        let mut c = vec![0.0; n];
        for &i in &form.blocks[h] {
            c[i] = 1.0;
        }
        return Ok(EqualityWitness {
            c: DiagonalParams::new(c),
            d: DiagonalParams::zeros(n),
            cause: FailureCause::Reducible,
            similarity: None,
        });
    }

    let system = solve_equality_system(&p)?;
    debug_assert!(!system.is_connected());
    let mut levels = vec![0.0; system.column_components.len()];
    levels[1] = 1.0;
    system.witness(&DiagonalParams::zeros(n), 1.0, &levels)
}

/// Checks `e^{D_i} A_ij = α E_i⁻¹ e^{C_i} A_ij E_j` on every nonzero cell to
/// relative tolerance [`SIMILARITY_TOLERANCE`]. Witnesses without a
/// similarity never verify.
pub fn verify_similarity(a: &NonnegMatrix, w: &EqualityWitness) -> bool {
    let Some(sim) = &w.similarity else {
        return false;
    };
    let n = a.n();
    if w.c.len() != n || w.d.len() != n || sim.log_scaling.len() != n {
        return false;
    }
    let e = sim.scaling();
    let (c, d) = (w.c.values(), w.d.values());
    (0..n).all(|i| {
        (0..n).all(|j| {
            let aij = a.get(i, j);
            if aij == 0.0 {
                return true;
            }
            let lhs = d[i].exp() * aij;
            let rhs = sim.alpha / e[i] * c[i].exp() * aij * e[j];
            (lhs - rhs).abs() <= SIMILARITY_TOLERANCE * lhs.abs().max(rhs.abs())
        })
    })
}

/// Strictness certificate or equality witness for `A`.
pub fn certify(a: &NonnegMatrix, cfg: &SpectralConfig) -> Result<ConvexityCertificate> {
    let p = a.sign_pattern();
    match decide_property1(&p)? {
        Property1::Holds => Ok(ConvexityCertificate::StrictlyConvex {
            reason: TwoFoldFacts {
                irreducible: true,
                ata_irreducible: true,
                primitive: is_primitive(&p),
                chainable: is_chainable(&p),
                fully_indecomposable: is_fully_indecomposable(&p),
            },
        }),
        Property1::Fails(_) => Ok(ConvexityCertificate::EqualityPossible {
            witness: construct_witness(a, cfg)?,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SpectralConfig {
        SpectralConfig::default()
    }

    fn worked() -> NonnegMatrix {
        NonnegMatrix::from_rows(&[
            [0.0, 1.0, 0.0, 1.0],
            [0.5, 0.0, 0.0, 0.0],
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap()
    }

    fn wielandt5() -> SignPattern {
        SignPattern::from_rows(&[
            [0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
        ])
    }

    fn part_decomp5() -> SignPattern {
        SignPattern::from_rows(&[
            [0, 1, 0, 0, 1],
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [1, 1, 1, 1, 0],
        ])
    }

    fn worked_d() -> DiagonalParams {
        DiagonalParams::new(vec![1.0, 5.0, 2.0, 6.0])
    }

    #[test]
    fn log_radius_examples() {
        let a = worked();
        let r0 = log_radius_scaled(&a, &DiagonalParams::zeros(4), &cfg()).unwrap();
        assert!(r0.abs() < 1e-12);
        let r = log_radius_scaled(&a, &worked_d(), &cfg()).unwrap();
        assert!((r - 3.0).abs() < 1e-8);
        for t in [0.25, 0.5, 0.75] {
            let d = DiagonalParams::new(worked_d().values().iter().map(|v| t * v).collect());
            let r = log_radius_scaled(&a, &d, &cfg()).unwrap();
            assert!((r - 3.0 * t).abs() < 1e-8, "t = {t}: {r}");
        }
        let nil = NonnegMatrix::from_rows(&[[0.0, 0.0], [1.0, 0.0]]).unwrap();
        assert_eq!(
            log_radius_scaled(&nil, &DiagonalParams::zeros(2), &cfg()),
            Err(Error::ZeroSpectralRadius)
        );
    }

    #[test]
    fn gap_examples() {
        let a = worked();
        let c = DiagonalParams::new(vec![0.3, -0.2, 0.1, 0.0]);
        let phi = convexity_gap(&a, &c, &c.shifted(1.7), 0.4, &cfg()).unwrap();
        assert!(phi.abs() < 1e-9);
        let phi = convexity_gap(&a, &DiagonalParams::zeros(4), &worked_d(), 0.5, &cfg()).unwrap();
        assert!(phi.abs() < 1e-8);

        let two_fold = NonnegMatrix::from_pattern(&part_decomp5());
        let phi = convexity_gap(
            &two_fold,
            &DiagonalParams::zeros(5),
            &DiagonalParams::new(vec![1.0, 0.0, 0.0, 0.0, 0.0]),
            0.5,
            &cfg(),
        )
        .unwrap();
        assert!(phi > 1e-6, "{phi}");
        assert!(convexity_gap(&a, &c, &c, 1.2, &cfg()).is_err());
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide_property1(&part_decomp5()), Ok(Property1::Holds));
        assert_eq!(
            decide_property1(&wielandt5()),
            Ok(Property1::Fails(FailureCause::AtaReducible))
        );
        assert_eq!(
            decide_property1(&SignPattern::from_rows(&[[1, 0], [1, 1]])),
            Ok(Property1::Fails(FailureCause::Reducible))
        );
        assert_eq!(
            decide_property1(&SignPattern::zeros(3)),
            Err(Error::ZeroPattern)
        );
    }

    #[test]
    fn equality_system_examples() {
        let s = solve_equality_system(&part_decomp5()).unwrap();
        assert!(s.is_connected());
        let delta = s.delta(0.7, &[2.0]).unwrap();
        assert!(delta.values().iter().all(|&v| (v - 0.7).abs() < 1e-15));

        let s = solve_equality_system(&wielandt5()).unwrap();
        assert_eq!(
            s.column_components,
            vec![vec![0, 1], vec![2], vec![3], vec![4]]
        );

        let s = solve_equality_system(&worked().sign_pattern()).unwrap();
        assert_eq!(s.column_components, vec![vec![0], vec![1, 3], vec![2]]);
        // L = (1, -1, 2, -1) with α = e³.
        let delta = s.delta(3.0, &[1.0, -1.0, 2.0]).unwrap();
        assert_eq!(delta.values(), &[1.0, 5.0, 2.0, 6.0]);

        assert_eq!(
            solve_equality_system(&SignPattern::identity(2)),
            Err(Error::Reducible)
        );
    }

    #[test]
    fn worked_witness_verifies() {
        let s = solve_equality_system(&worked().sign_pattern()).unwrap();
        let w = s
            .witness(&DiagonalParams::zeros(4), 3.0, &[1.0, -1.0, 2.0])
            .unwrap();
        assert_eq!(w.d, worked_d());
        let e = w.similarity.as_ref().unwrap().scaling();
        let expected = [1f64.exp(), (-1f64).exp(), 2f64.exp(), (-1f64).exp()];
        assert!(e
            .iter()
            .zip(expected)
            .all(|(a, b)| (a - b).abs() < 1e-15 * b));
        assert!(verify_similarity(&worked(), &w));

        let mut broken = w.clone();
        broken.similarity.as_mut().unwrap().alpha *= 1.0 + 1e-3;
        assert!(!verify_similarity(&worked(), &broken));
    }

    #[test]
    fn wielandt_witness() {
        let a = NonnegMatrix::from_pattern(&wielandt5());
        let w = construct_witness(&a, &cfg()).unwrap();
        assert_eq!(w.cause, FailureCause::AtaReducible);
        assert!(!w.delta().is_scalar());
        assert!(verify_similarity(&a, &w));
        let grid: Vec<f64> = (1..10).map(|k| k as f64 / 10.0).collect();
        for (t, phi) in gap_profile(&a, &w.c, &w.d, &grid, &cfg()).unwrap() {
            assert!(phi.abs() <= 1e-8, "t = {t}: {phi}");
        }
    }

    #[test]
    fn reducible_witness() {
        let a = NonnegMatrix::from_rows(&[[1.0, 0.0], [1.0, 1.0]]).unwrap();
        let w = construct_witness(&a, &cfg()).unwrap();
        assert_eq!(w.cause, FailureCause::Reducible);
        assert_eq!(w.c.sub(&w.d).unwrap().values(), &[1.0, 0.0]);
        assert!(w.similarity.is_none());
        assert!(!verify_similarity(&a, &w));
        let phi = convexity_gap(&a, &w.c, &w.d, 0.5, &cfg()).unwrap();
        assert!(phi.abs() < 1e-9);
    }

    #[test]
    fn witness_refused_for_two_fold() {
        let a = NonnegMatrix::from_pattern(&part_decomp5());
        assert_eq!(construct_witness(&a, &cfg()), Err(Error::TwoFold));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = certify(&worked(), &cfg()).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["kind"], "equality_possible");
        assert_eq!(json["witness"]["cause"], "ata_reducible");
        assert!(json["witness"]["alpha"].is_number());
        assert_eq!(json["witness"]["C"].as_array().unwrap().len(), 4);

        let cert = certify(&NonnegMatrix::from_pattern(&part_decomp5()), &cfg()).unwrap();
        assert!(cert.is_strict());
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["kind"], "strictly_convex");
        assert_eq!(json["reason"]["fully_indecomposable"], false);
    }
}
