//! Brute-force verification.
//!
//! Patterns are enumerated exhaustively for `n <= 4` (or sampled with a
//! seed), each structural theorem is re-checked pattern by pattern with
//! definition-level oracles, and the combinatorial Property 1 decision is
//! cross-validated numerically on random realizations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::convexity::{
    construct_witness, convexity_gap, decide_property1, gap_profile, has_positive_radius,
    FailureCause, Property1, EQUALITY_THRESHOLD,
};
use crate::error::{Error, Result};
use crate::generators::realize;
use crate::matrix::{DiagonalParams, NonnegMatrix, SignPattern};
use crate::spectral::SpectralConfig;
use crate::structure::{
    board_move_irreducible_with, cyclic_form, frobenius_form, has_total_support, is_chainable,
    is_fully_indecomposable, is_irreducible, is_primitive, is_scrambling, is_two_fold, period,
    BoardMove,
};

/// Largest `n` enumerated exhaustively (`2^16` patterns).
pub const EXHAUSTIVE_MAX_N: usize = 4;

/// Largest `n` accepted by the subset-scan full-indecomposability oracle.
pub const KONIG_MAX_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternFilter {
    All,
    Irreducible,
    Symmetric,
    NoZeroLines,
    /// Digraph has a cycle, i.e. realizations have positive radius.
    PositiveRadius,
}

impl PatternFilter {
    pub fn accepts(self, p: &SignPattern) -> bool {
        match self {
            PatternFilter::All => true,
            PatternFilter::Irreducible => is_irreducible(p),
            PatternFilter::Symmetric => p.is_symmetric(),
            PatternFilter::NoZeroLines => !p.has_zero_line(),
            PatternFilter::PositiveRadius => has_positive_radius(p),
        }
    }
}

/// Seeded sampling budget for enumeration beyond [`EXHAUSTIVE_MAX_N`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sample {
    pub count: usize,
    pub seed: u64,
}

/// All `2^(n²)` patterns passing `filter` in increasing bit order, or
/// `sample.count` seeded draws (uniform over patterns; symmetric draws
/// mirror the upper triangle).
pub fn enumerate_patterns(
    n: usize,
    filter: PatternFilter,
    sample: Option<Sample>,
) -> Result<Vec<SignPattern>> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    match sample {
        None => {
            if n > EXHAUSTIVE_MAX_N {
                return Err(Error::TooLarge {
                    n,
                    max: EXHAUSTIVE_MAX_N,
                });
            }
            Ok((0u64..1 << (n * n))
                .into_par_iter()
                .map(|bits| SignPattern::from_bits(n, bits))
                .filter(|p| filter.accepts(p))
                .collect())
        }
        Some(Sample { count, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::with_capacity(count);
            let max_attempts = count.saturating_mul(1000).max(1000);
            for _ in 0..max_attempts {
                if out.len() == count {
                    break;
                }
                let p = if filter == PatternFilter::Symmetric {
                    symmetric_draw(n, &mut rng)
                } else {
                    let mask = (0..n * n).map(|_| rng.gen::<bool>()).collect();
                    SignPattern::new(n, mask)?
                };
                if filter.accepts(&p) {
                    out.push(p);
                }
            }
            Ok(out)
        }
    }
}

fn symmetric_draw(n: usize, rng: &mut ChaCha8Rng) -> SignPattern {
    let mut p = SignPattern::zeros(n);
    for i in 0..n {
        for j in i..n {
            if rng.gen::<bool>() {
                p = p.with(i, j, true).with(j, i, true);
            }
        }
    }
    p
}

/// Irreducibility by definition: every `(i, j)` is set in some boolean
/// power `P^m`, `1 <= m <= n`.
pub fn irreducible_by_powers(p: &SignPattern) -> bool {
    let n = p.n();
    if n == 1 {
        return true;
    }
    let mut power = p.clone();
    let mut seen = p.mask().to_vec();
    for _ in 1..n {
        power = power.product(p).expect("same dimension");
        for (s, &b) in seen.iter_mut().zip(power.mask()) {
            *s |= b;
        }
    }
    seen.into_iter().all(|b| b)
}

/// Primitivity by definition: irreducible and `P^((n-1)² + 1)` is full.
pub fn primitive_by_wielandt_power(p: &SignPattern) -> bool {
    let n = p.n();
    if n == 1 {
        return true;
    }
    irreducible_by_powers(p) && p.pow(((n - 1) * (n - 1) + 1) as u32).is_full()
}

/// Full indecomposability by subset scan: no row set `R` and column set
/// `S`, both nonempty, with `|R| + |S| = n` and `P[R, S]` all zero.
pub fn fully_indecomposable_by_konig(p: &SignPattern) -> Result<bool> {
    let n = p.n();
    if n > KONIG_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: KONIG_MAX_N,
        });
    }
    if n == 1 {
        return Ok(p.get(0, 0));
    }
    // Row masks of nonzero columns.
    let rows: Vec<u32> = (0..n)
        .map(|i| p.row_support(i).fold(0u32, |acc, j| acc | 1 << j))
        .collect();
    let full = (1u32 << n) - 1;
    for r_mask in 1..full {
        let r = r_mask.count_ones() as usize;
        // Columns not touched by any row in R.
        let touched = (0..n)
            .filter(|&i| r_mask >> i & 1 == 1)
            .fold(0u32, |acc, i| acc | rows[i]);
        let free = full & !touched;
        if free.count_ones() as usize >= n - r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two-colorability of the simple graph with adjacency `p` (diagonal ignored).
pub fn is_bipartite_graph(p: &SignPattern) -> bool {
    let n = p.n();
    let mut color = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let cu = color[u].expect("colored");
            for v in (0..n).filter(|&v| v != u && (p.get(u, v) || p.get(v, u))) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Checks run by [`theorem_sweep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// The six equivalent forms of two-fold irreducibility.
    TwoFoldEquivalence,
    /// For irreducible `P` with period `γ` and `m <= 6`: `P^m` irreducible
    /// iff `gcd(m, γ) = 1`.
    BrualdiRyser,
    /// Board moves (horizontal and vertical) agree with irreducibility on
    /// patterns without zero lines.
    BoardMoves,
    /// Two-fold irreducibility survives setting any unset cell.
    Monotonicity,
    /// Sign-symmetric: two-fold iff primitive.
    SymmetricTwoFoldPrimitive,
    /// Irreducible sign-symmetric: primitive or period 2.
    SymmetricPrimitiveOrPeriodTwo,
    /// Connected simple graphs: primitive iff two-fold iff not bipartite.
    SimpleGraphBipartite,
    /// Fully indecomposable iff chainable with total support iff the
    /// subset-scan oracle; implies two-fold; chainable but partly
    /// decomposable lacks total support.
    FullIndecomposability,
    /// Two-fold implies at least `2n - 1` set cells.
    TwoFoldMinEdges,
    /// Strong connectivity agrees with the boolean-power definition.
    IrreducibleOracle,
    /// Period 1 agrees with positivity of `P^((n-1)² + 1)`.
    PrimitiveOracle,
    /// Scrambling implies `PPᵀ` is full off the diagonal.
    Scrambling,
    /// Frobenius form is block lower-triangular with irreducible blocks;
    /// cyclic classes advance along every set cell.
    NormalForms,
}

impl Check {
    pub const ALL: [Check; 13] = [
        Check::TwoFoldEquivalence,
        Check::BrualdiRyser,
        Check::BoardMoves,
        Check::Monotonicity,
        Check::SymmetricTwoFoldPrimitive,
        Check::SymmetricPrimitiveOrPeriodTwo,
        Check::SimpleGraphBipartite,
        Check::FullIndecomposability,
        Check::TwoFoldMinEdges,
        Check::IrreducibleOracle,
        Check::PrimitiveOracle,
        Check::Scrambling,
        Check::NormalForms,
    ];

    pub const TWO_FOLD: [Check; 4] = [
        Check::TwoFoldEquivalence,
        Check::Monotonicity,
        Check::SymmetricTwoFoldPrimitive,
        Check::TwoFoldMinEdges,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::TwoFoldEquivalence => "two_fold_equivalence",
            Check::BrualdiRyser => "brualdi_ryser",
            Check::BoardMoves => "board_moves",
            Check::Monotonicity => "monotonicity",
            Check::SymmetricTwoFoldPrimitive => "symmetric_two_fold_primitive",
            Check::SymmetricPrimitiveOrPeriodTwo => "symmetric_primitive_or_period_two",
            Check::SimpleGraphBipartite => "simple_graph_bipartite",
            Check::FullIndecomposability => "full_indecomposability",
            Check::TwoFoldMinEdges => "two_fold_min_edges",
            Check::IrreducibleOracle => "irreducible_oracle",
            Check::PrimitiveOracle => "primitive_oracle",
            Check::Scrambling => "scrambling",
            Check::NormalForms => "normal_forms",
        }
    }

    /// `None` when the check does not apply to `p`, else whether it holds.
    ///
    /// The six-way equivalence and the symmetric/simple-graph statements are
    /// skipped at `n = 1`, where the conventions (every 1x1 pattern is
    /// irreducible and primitive) make their two sides disagree on `[0]`.
    pub fn evaluate(self, p: &SignPattern) -> Option<bool> {
        let n = p.n();
        match self {
            Check::TwoFoldEquivalence => {
                if n < 2 {
                    return None;
                }
                let irr_a = is_irreducible(p);
                let irr_a2 = is_irreducible(&p.pow(2));
                let irr_ata = is_irreducible(&p.gram_columns());
                let irr_aat = is_irreducible(&p.gram_rows());
                let statements = [
                    irr_a && irr_ata,
                    irr_a2 && irr_ata,
                    irr_a && irr_aat,
                    irr_a2 && irr_aat,
                    irr_a && irr_a2 && irr_ata && irr_aat,
                    irr_a && is_chainable(p),
                ];
                Some(
                    statements.iter().all(|&s| s == statements[0])
                        && is_two_fold(p) == statements[0],
                )
            }
            Check::BrualdiRyser => {
                let gamma = period(p).ok()?;
                Some((1..=6u32).all(|m| is_irreducible(&p.pow(m)) == (gcd(m as usize, gamma) == 1)))
            }
            Check::BoardMoves => {
                if p.has_zero_line() {
                    return None;
                }
                let irr = is_irreducible(p);
                Some(
                    board_move_irreducible_with(p, BoardMove::Horizontal) == irr
                        && board_move_irreducible_with(p, BoardMove::Vertical) == irr,
                )
            }
            Check::Monotonicity => {
                if !is_two_fold(p) {
                    return None;
                }
                Some(
                    (0..n).all(|i| (0..n).all(|j| p.get(i, j) || is_two_fold(&p.with(i, j, true)))),
                )
            }
            Check::SymmetricTwoFoldPrimitive => {
                if n < 2 || !p.is_symmetric() {
                    return None;
                }
                Some(is_two_fold(p) == is_primitive(p))
            }
            Check::SymmetricPrimitiveOrPeriodTwo => {
                if !p.is_symmetric() || !is_irreducible(p) {
                    return None;
                }
                let gamma = period(p).ok()?;
                Some(gamma == 1 || gamma == 2)
            }
            Check::SimpleGraphBipartite => {
                let simple = p.is_symmetric() && (0..n).all(|i| !p.get(i, i));
                if n < 2 || !simple || !is_irreducible(p) {
                    return None;
                }
                let not_bipartite = !is_bipartite_graph(p);
                Some(is_primitive(p) == not_bipartite && is_two_fold(p) == not_bipartite)
            }
            Check::FullIndecomposability => {
                let fi = is_fully_indecomposable(p);
                let chainable = is_chainable(p);
                let total = has_total_support(p);
                let konig = fully_indecomposable_by_konig(p).ok()?;
                Some(
                    fi == konig
                        && fi == (chainable && total)
                        && (!fi || is_two_fold(p))
                        && (!(chainable && !fi) || !total),
                )
            }
            Check::TwoFoldMinEdges => {
                if !is_two_fold(p) {
                    return None;
                }
                Some(p.nnz() + 1 >= 2 * n)
            }
            Check::IrreducibleOracle => Some(is_irreducible(p) == irreducible_by_powers(p)),
            Check::PrimitiveOracle => Some(is_primitive(p) == primitive_by_wielandt_power(p)),
            Check::Scrambling => {
                if !is_scrambling(p) {
                    return None;
                }
                let g = p.gram_rows();
                Some((0..n).all(|i| (0..n).all(|k| i == k || g.get(i, k))))
            }
            Check::NormalForms => {
                let form = frobenius_form(p);
                let of = form.block_of();
                let triangular = p.cells().all(|(i, j)| of[j] <= of[i]);
                let blocks_irreducible = form.blocks.iter().all(|b| {
                    let sub = SignPattern::new(
                        b.len(),
                        b.iter()
                            .flat_map(|&i| b.iter().map(move |&j| p.get(i, j)))
                            .collect(),
                    )
                    .expect("nonempty block");
                    is_irreducible(&sub)
                });
                let cyclic_ok = match cyclic_form(p) {
                    Ok(c) => is_irreducible(p) && (c.period == 1 || c.is_consistent_with(p)),
                    Err(_) => !is_irreducible(p),
                };
                Some(
                    triangular
                        && blocks_irreducible
                        && cyclic_ok
                        && form.is_irreducible() == is_irreducible(p),
                )
            }
        }
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: Check,
    /// Patterns to which the check applied.
    pub applicable: usize,
    pub violations: usize,
    pub first_counterexample: Option<SignPattern>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub patterns: usize,
    pub checks: Vec<CheckResult>,
}

impl SweepReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.violations() == 0
    }
}

/// Runs `checks` over `patterns` in parallel. Counterexamples are the
/// first violating pattern in input order.
pub fn sweep_patterns(n: usize, patterns: &[SignPattern], checks: &[Check]) -> SweepReport {
    let outcomes: Vec<Vec<Option<bool>>> = patterns
        .par_iter()
        .map(|p| checks.iter().map(|c| c.evaluate(p)).collect())
        .collect();
    let checks = checks
        .iter()
        .enumerate()
        .map(|(k, &check)| {
            let mut result = CheckResult {
                check,
                applicable: 0,
                violations: 0,
                first_counterexample: None,
            };
            for (p, outcome) in patterns.iter().zip(&outcomes) {
                match outcome[k] {
                    None => {}
                    Some(true) => result.applicable += 1,
                    Some(false) => {
                        result.applicable += 1;
                        result.violations += 1;
                        result.first_counterexample.get_or_insert_with(|| p.clone());
                    }
                }
            }
            result
        })
        .collect();
    SweepReport {
        n,
        patterns: patterns.len(),
        checks,
    }
}

/// Every check over every `n x n` pattern (`n <= 4`).
pub fn theorem_sweep(n: usize) -> Result<SweepReport> {
    let patterns = enumerate_patterns(n, PatternFilter::All, None)?;
    Ok(sweep_patterns(n, &patterns, &Check::ALL))
}

/// Settings for [`property1_numeric_probe`].
#[derive(Clone, Debug, PartialEq)]
pub struct ProbeConfig {
    /// Nonscalar `(C, D, t)` draws per strict pattern.
    pub trials: usize,
    pub seed: u64,
    /// Strict cases need `φ(t)` above this.
    pub strict_threshold: f64,
    /// Witness cases need `|φ(t)|` at or below this on `grid`.
    pub equality_threshold: f64,
    /// Fixed `t` for strict trials; `None` draws `t` uniformly from `[0.1, 0.9]`.
    pub strict_t: Option<f64>,
    pub grid: Vec<f64>,
    /// Realization entries are uniform in this range.
    pub entry_range: (f64, f64),
    pub spectral: SpectralConfig,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        let spectral = SpectralConfig::default();
        Self {
            trials: 20,
            seed: 0,
            strict_threshold: 10.0 * spectral.tolerance,
            equality_threshold: EQUALITY_THRESHOLD,
            strict_t: None,
            grid: (1..10).map(|k| k as f64 / 10.0).collect(),
            entry_range: (0.5, 1.5),
            spectral,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Agree,
    Disagree,
}

/// One evaluated `φ(t)` with its segment.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiSample {
    #[serde(rename = "C")]
    pub c: DiagonalParams,
    #[serde(rename = "D")]
    pub d: DiagonalParams,
    pub t: f64,
    pub phi: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub pattern: SignPattern,
    pub realization: NonnegMatrix,
    /// `holds`, or the failure cause.
    pub decision: &'static str,
    pub verdict: Verdict,
    /// Smallest `φ` over strict trials, or largest `|φ|` on the witness grid.
    pub extreme_phi: f64,
    /// Worst strict trial, or the whole witness grid; every sample when the
    /// verdict is `disagree`.
    pub trace: Vec<PhiSample>,
}

impl ProbeReport {
    pub fn agrees(&self) -> bool {
        self.verdict == Verdict::Agree
    }
}

fn draw_diagonal(n: usize, rng: &mut ChaCha8Rng) -> DiagonalParams {
    DiagonalParams::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect())
}

/// Realizes `p` randomly and checks the combinatorial decision
/// numerically: strict gaps on random nonscalar segments when it holds, a
/// vanishing gap along the constructed witness when it fails.
pub fn property1_numeric_probe(p: &SignPattern, cfg: &ProbeConfig) -> Result<ProbeReport> {
    let decision = decide_property1(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (lo, hi) = cfg.entry_range;
    let a = realize(p, lo, hi, &mut rng);
    let n = p.n();

    match decision {
        Property1::Holds => {
            let mut samples = Vec::new();
            // At n = 1 every difference is scalar; nothing to sample.
            if n > 1 {
                while samples.len() < cfg.trials {
                    let c = draw_diagonal(n, &mut rng);
                    let d = draw_diagonal(n, &mut rng);
                    if d.sub(&c)?.spread() < 0.1 {
                        continue;
                    }
                    let t = cfg.strict_t.unwrap_or_else(|| rng.gen_range(0.1..0.9));
                    let phi = convexity_gap(&a, &c, &d, t, &cfg.spectral)?;
                    samples.push(PhiSample { c, d, t, phi });
                }
            }
            let extreme_phi = samples.iter().map(|s| s.phi).fold(f64::INFINITY, f64::min);
            let agree = samples.iter().all(|s| s.phi > cfg.strict_threshold);
            let trace = if agree {
                samples
                    .into_iter()
                    .min_by(|x, y| x.phi.total_cmp(&y.phi))
                    .into_iter()
                    .collect()
            } else {
                samples
            };
            Ok(ProbeReport {
                pattern: p.clone(),
                realization: a,
                decision: "holds",
                verdict: if agree {
                    Verdict::Agree
                } else {
                    Verdict::Disagree
                },
                extreme_phi,
                trace,
            })
        }
        Property1::Fails(cause) => {
            let w = construct_witness(&a, &cfg.spectral)?;
            let profile = gap_profile(&a, &w.c, &w.d, &cfg.grid, &cfg.spectral)?;
            let extreme_phi = profile.iter().map(|(_, phi)| phi.abs()).fold(0.0, f64::max);
            let agree = !w.delta().is_scalar() && extreme_phi <= cfg.equality_threshold;
            let trace = profile
                .into_iter()
                .map(|(t, phi)| PhiSample {
                    c: w.c.clone(),
                    d: w.d.clone(),
                    t,
                    phi,
                })
                .collect();
            Ok(ProbeReport {
                pattern: p.clone(),
                realization: a,
                decision: match cause {
                    FailureCause::Reducible => "reducible",
                    FailureCause::AtaReducible => "ata_reducible",
                },
                verdict: if agree {
                    Verdict::Agree
                } else {
                    Verdict::Disagree
                },
                extreme_phi,
                trace,
            })
        }
    }
}

/// Probes each pattern in parallel; pattern `k` uses seed `cfg.seed + k`.
pub fn probe_patterns(patterns: &[SignPattern], cfg: &ProbeConfig) -> Result<Vec<ProbeReport>> {
    patterns
        .par_iter()
        .enumerate()
        .map(|(k, p)| {
            let cfg = ProbeConfig {
                seed: cfg.seed.wrapping_add(k as u64),
                ..cfg.clone()
            };
            property1_numeric_probe(p, &cfg)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_patterns(2, PatternFilter::All, None)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            enumerate_patterns(3, PatternFilter::All, None)
                .unwrap()
                .len(),
            512
        );
        assert_eq!(
            enumerate_patterns(3, PatternFilter::Symmetric, None)
                .unwrap()
                .len(),
            64
        );
        assert!(matches!(
            enumerate_patterns(5, PatternFilter::All, None),
            Err(Error::TooLarge { n: 5, .. })
        ));
        let sampled = enumerate_patterns(
            5,
            PatternFilter::Irreducible,
            Some(Sample { count: 40, seed: 1 }),
        )
        .unwrap();
        assert_eq!(sampled.len(), 40);
        assert!(sampled.iter().all(is_irreducible));
        let sym = enumerate_patterns(
            6,
            PatternFilter::Symmetric,
            Some(Sample { count: 10, seed: 2 }),
        )
        .unwrap();
        assert!(sym.iter().all(SignPattern::is_symmetric));
    }

    #[test]
    fn irreducible_by_powers_examples() {
        let mut cycle = SignPattern::zeros(5);
        for j in 0..5 {
            cycle = cycle.with((j + 1) % 5, j, true);
        }
        assert!(irreducible_by_powers(&cycle));
        assert!(!irreducible_by_powers(&SignPattern::identity(2)));
        assert!(!irreducible_by_powers(&SignPattern::from_rows(&[
            [1, 0],
            [1, 1]
        ])));
    }

    #[test]
    fn konig_examples() {
        let pd4 = crate::generators::partly_decomposable_two_fold(4).unwrap();
        assert_eq!(fully_indecomposable_by_konig(&pd4), Ok(false));
        assert_eq!(
            fully_indecomposable_by_konig(&SignPattern::full(4)),
            Ok(true)
        );
        assert_eq!(
            fully_indecomposable_by_konig(&SignPattern::identity(3)),
            Ok(false)
        );
        assert!(fully_indecomposable_by_konig(&SignPattern::full(9)).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let path = SignPattern::from_rows(&[[0, 1, 0], [1, 0, 1], [0, 1, 0]]);
        assert!(is_bipartite_graph(&path));
        let triangle = SignPattern::from_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert!(!is_bipartite_graph(&triangle));
    }

    #[test]
    fn small_sweeps_are_clean() {
        for n in 1..=3 {
            let report = theorem_sweep(n).unwrap();
            for c in &report.checks {
                assert_eq!(
                    c.violations, 0,
                    "n = {n}, {:?}: {:?}",
                    c.check, c.first_counterexample
                );
            }
        }
    }

    #[test]
    fn probes_agree_on_named_patterns() {
        let cfg = ProbeConfig::default();
        let pd5 = crate::generators::partly_decomposable_two_fold(5).unwrap();
        let r = property1_numeric_probe(&pd5, &cfg).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.decision, "holds");

        let w5 = crate::generators::wielandt(5).unwrap();
        let r = property1_numeric_probe(&w5, &cfg).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.decision, "ata_reducible");

        let r = property1_numeric_probe(&SignPattern::from_rows(&[[1, 0], [1, 1]]), &cfg).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.decision, "reducible");
    }

    #[test]
    fn probes_agree_exhaustively_up_to_two() {
        let cfg = ProbeConfig::default();
        for n in 1..=2 {
            let patterns = enumerate_patterns(n, PatternFilter::PositiveRadius, None).unwrap();
            let reports = probe_patterns(&patterns, &cfg).unwrap();
            assert!(reports.iter().all(ProbeReport::agrees), "n = {n}");
        }
    }
}
