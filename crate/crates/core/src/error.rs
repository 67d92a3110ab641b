use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the exact-arithmetic and curve layers.
///
/// Structural misuse (division by zero, `gcd(0, 0)`, off-curve points) panics
/// instead, following the conventions of the `num` crates; the variants here
/// are the data-dependent failures a caller can hit with well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Gaussian integer literal: {0}")]
    Parse(String),

    #[error("zero has no factorization into Gaussian primes")]
    FactorZero,

    #[error("norm {norm} exceeds the factoring ceiling {ceiling}")]
    NormCeiling { norm: BigInt, ceiling: u64 },

    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    SingularCurve,

    #[error("torsion order bound 12 is only justified for rational coefficients; supply an explicit bound")]
    NonRationalCoefficients,

    #[error("point set does not match any torsion group in the classification over Q(i)")]
    UnrecognizedTorsionStructure,

    #[error("classification is conditional on rank 0; no rank certificate was supplied")]
    RankCertificateAbsent,
}

pub type Result<T> = std::result::Result<T, Error>;
