use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use twofold::convexity::{
    construct_witness, gap_profile, solve_equality_system, verify_similarity, EqualityWitness,
};
use twofold::generators::realize;
use twofold::oracle::{enumerate_patterns, PatternFilter};
use twofold::spectral::SpectralConfig;
use twofold::structure::{is_irreducible, is_two_fold};
use twofold::{DiagonalParams, NonnegMatrix, SignPattern};

fn grid() -> Vec<f64> {
    (1..10).map(|k| k as f64 / 10.0).collect()
}

fn max_phi(a: &NonnegMatrix, w: &EqualityWitness) -> f64 {
    gap_profile(a, &w.c, &w.d, &grid(), &SpectralConfig::default())
        .unwrap()
        .into_iter()
        .map(|(_, phi)| phi.abs())
        .fold(0.0, f64::max)
}

fn non_two_fold(n: usize) -> Vec<SignPattern> {
    enumerate_patterns(n, PatternFilter::PositiveRadius, None)
        .unwrap()
        .into_iter()
        .filter(|p| !is_two_fold(p))
        .collect()
}

#[test]
fn witnesses_complete_up_to_four() {
    for n in 2..=4 {
        let patterns = non_two_fold(n);
        let bad: Vec<String> = patterns
            .par_iter()
            .enumerate()
            .filter_map(|(k, p)| {
                let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
                let a = realize(p, 0.5, 1.5, &mut rng);
                let w = construct_witness(&a, &SpectralConfig::default()).unwrap();
                let phi = max_phi(&a, &w);
                let similar_ok = !is_irreducible(p) || verify_similarity(&a, &w);
                (w.delta().is_scalar() || phi > 1e-8 || !similar_ok)
                    .then(|| format!("{p:?}: phi {phi:e}"))
            })
            .collect();
        assert!(
            bad.is_empty(),
            "n = {n}: {} bad witnesses, first {}",
            bad.len(),
            bad[0]
        );
    }
}

#[test]
fn branch_two_levels_are_nonconstant() {
    for p in non_two_fold(3).into_iter().filter(is_irreducible) {
        let a = NonnegMatrix::from_pattern(&p);
        let w = construct_witness(&a, &SpectralConfig::default()).unwrap();
        let l = &w.similarity.as_ref().unwrap().log_scaling;
        assert!(l.iter().any(|&x| x != l[0]));
        assert!(!w.delta().is_scalar());
    }
}

#[test]
fn any_solution_of_equality_system_is_flat() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let patterns: Vec<_> = non_two_fold(4).into_iter().filter(is_irreducible).collect();
    for _ in 0..100 {
        let p = &patterns[rng.gen_range(0..patterns.len())];
        let a = realize(p, 0.2, 3.0, &mut rng);
        let system = solve_equality_system(p).unwrap();
        let levels: Vec<f64> = (0..system.column_components.len())
            .map(|_| rng.gen_range(-2.0..2.0))
            .collect();
        let c = DiagonalParams::new((0..4).map(|_| rng.gen_range(-1.0..1.0)).collect());
        let w = system
            .witness(&c, rng.gen_range(-2.0..2.0), &levels)
            .unwrap();
        assert!(verify_similarity(&a, &w));
        assert!(max_phi(&a, &w) <= 1e-8, "{p:?}");
    }
}

#[test]
fn perturbed_alpha_breaks_similarity() {
    let a = twofold::generators::worked_4x4();
    let mut w = construct_witness(&a, &SpectralConfig::default()).unwrap();
    assert!(verify_similarity(&a, &w));
    w.similarity.as_mut().unwrap().alpha += 1e-3;
    assert!(!verify_similarity(&a, &w));
}
