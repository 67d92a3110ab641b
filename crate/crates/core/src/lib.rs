//! Exact arithmetic in Z[i] and Q(i), elliptic curve torsion over Q(i) via
//! the extended Lutz-Nagell bound, and a complete classification of the
//! quartic Diophantine equations `x^4 +/- y^4 = c*z^2` for Gaussian units
//! `c`.
//!
//! Everything is computed in exact arithmetic; there is no floating point
//! anywhere. All types are immutable values and all operations are pure
//! functions, so the whole crate is thread-safe by construction.

pub mod curve;
pub mod error;
pub mod factor;
pub mod gaussian;
pub mod quartic;
pub mod rational;
pub mod report;
pub mod torsion;

pub use curve::{Curve, CurvePoint};
pub use error::{Error, Result};
pub use factor::{
    divisors, factor, factor_with_ceiling, is_gaussian_prime, monic_cubic_integral_roots,
    GaussianFactorization, DEFAULT_NORM_CEILING,
};
pub use gaussian::{GaussianInt, Unit};
pub use quartic::{
    bounded_point_search, classify, default_certificate, lift_torsion_point, reduce_to_curve,
    Classification, Outcome, QuarticProblem, RankCertificate, Sign, SolutionFamily, SolutionTriple,
    Substitution,
};
pub use rational::GaussianRational;
pub use torsion::{
    candidates_y_nonzero, candidates_y_zero, identify_structure, torsion_subgroup,
    torsion_subgroup_with_bound, TorsionGroup, TorsionStructure, CLASSIFICATION_ORDER_BOUND,
};
