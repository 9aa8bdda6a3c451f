//! Two-fold irreducibility of nonnegative sign patterns and strict
//! convexity of `D ↦ log r(e^D A)`.

pub mod convexity;
pub mod error;
pub mod generators;
pub mod matrix;
pub mod oracle;
pub mod spectral;
pub mod structure;

pub use convexity::{
    certify, construct_witness, convexity_gap, decide_property1, gap_profile, log_radius_scaled,
    solve_equality_system, verify_similarity, ConvexityCertificate, EqualitySystem,
    EqualityWitness, FailureCause, Property1,
};
pub use error::{Error, Result};
pub use generators::{generate, Family, GeneratorSpec};
pub use matrix::{
    convex_combination, scale_exp, sign_pattern, DiagonalParams, NonnegMatrix, SignPattern,
};
pub use spectral::{perron_pair, spectral_radius, PerronPair, SpectralConfig};
pub use structure::{
    classify, column_components, cyclic_form, frobenius_form, is_chainable,
    is_fully_indecomposable, is_irreducible, is_primitive, is_scrambling, is_two_fold, period,
    CyclicForm, FrobeniusForm, StructureReport,
};
