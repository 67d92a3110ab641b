//! Factorization into Gaussian primes, divisor enumeration, and integral
//! roots of monic cubics.
//!
//! The method is classical: factor the rational integer `N(g)` by trial
//! division, then split `p = 2` and `p = 1 (mod 4)` into conjugate Gaussian
//! primes while primes `p = 3 (mod 4)` stay inert. All values that arise in
//! the torsion pipeline have tiny norms, so trial division is the right
//! tool; a ceiling on the norm turns pathological input into an error
//! instead of a stall.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gaussian::{GaussianInt, Unit};

/// Largest norm `factor` accepts before reporting [`Error::NormCeiling`].
pub const DEFAULT_NORM_CEILING: u64 = 1_000_000_000_000;

/// A factorization `unit * prod(prime^exponent)` with canonical-associate,
/// pairwise non-associate Gaussian primes, sorted by `(norm, re, im)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianFactorization {
    pub unit: GaussianInt,
    pub factors: Vec<(GaussianInt, u32)>,
}

impl GaussianFactorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> GaussianInt {
        let mut acc = self.unit.clone();
        for (p, e) in &self.factors {
            acc = &acc * &p.pow(*e);
        }
        acc
    }
}

/// Renders like `-i * (1+i)^2`; composite parts are parenthesized, unit
/// factors of one and exponents of one are omitted.
impl std::fmt::Display for GaussianFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(self.unit.to_string());
        }
        for (p, e) in &self.factors {
            let rendered = p.to_string();
            let base = if rendered.contains('+') || rendered.contains('-') {
                format!("({rendered})")
            } else {
                rendered
            };
            parts.push(if *e == 1 { base } else { format!("{base}^{e}") });
        }
        f.write_str(&parts.join(" * "))
    }
}

/// Factors `g` into Gaussian primes with the default norm ceiling.
pub fn factor(g: &GaussianInt) -> Result<GaussianFactorization> {
    factor_with_ceiling(g, DEFAULT_NORM_CEILING)
}

pub fn factor_with_ceiling(g: &GaussianInt, ceiling: u64) -> Result<GaussianFactorization> {
    if g.is_zero() {
        return Err(Error::FactorZero);
    }
    let norm = g.norm();
    if norm > BigInt::from(ceiling) {
        return Err(Error::NormCeiling { norm, ceiling });
    }
    let norm = norm.to_u64().expect("norm fits u64 under the ceiling");

    let mut remaining = g.clone();
    let mut factors: Vec<(GaussianInt, u32)> = Vec::new();
    for (p, _) in trial_division(norm) {
        let candidates = if p == 2 {
            vec![GaussianInt::new(1, 1)]
        } else if p % 4 == 3 {
            vec![GaussianInt::new(p as i64, 0)]
        } else {
            let pi = split_prime(p);
            let (c1, _) = pi.canonical_associate();
            let (c2, _) = pi.conj().canonical_associate();
            vec![c1, c2]
        };
        for prime in candidates {
            let mut e = 0;
            while let Some(q) = remaining.exact_div(&prime) {
                remaining = q;
                e += 1;
            }
            if e > 0 {
                factors.push((prime, e));
            }
        }
    }
    debug_assert!(remaining.is_unit(), "cofactor after prime extraction");
    factors.sort();
    let result = GaussianFactorization {
        unit: remaining,
        factors,
    };
    debug_assert_eq!(result.product(), *g);
    Ok(result)
}

/// All divisors of `g` up to associates, in canonical-associate form,
/// sorted. The count is the product of `e + 1` over the factorization.
pub fn divisors(g: &GaussianInt) -> Result<Vec<GaussianInt>> {
    let factorization = factor(g)?;
    let mut divs = vec![GaussianInt::one()];
    for (p, e) in &factorization.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut power = d.clone();
            next.push(power.clone());
            for _ in 0..*e {
                power = &power * p;
                next.push(power.clone());
            }
        }
        divs = next;
    }
    let mut divs: Vec<GaussianInt> = divs
        .into_iter()
        .map(|d| d.canonical_associate().0)
        .collect();
    divs.sort();
    divs.dedup();
    debug_assert_eq!(
        divs.len(),
        factorization
            .factors
            .iter()
            .map(|(_, e)| *e as usize + 1)
            .product::<usize>()
    );
    Ok(divs)
}

/// Gaussian primality: the norm is a rational prime, or the value is an
/// associate of an inert rational prime `q = 3 (mod 4)`.
///
/// Only supported for norms within u64 range; factoring already refuses
/// anything larger.
pub fn is_gaussian_prime(g: &GaussianInt) -> bool {
    if g.is_zero() {
        return false;
    }
    let Some(norm) = g.norm().to_u64() else {
        return false;
    };
    if is_prime_u64(norm) {
        return true;
    }
    let (c, _) = g.canonical_associate();
    if !c.im().is_zero() {
        return false;
    }
    match c.re().to_u64() {
        Some(q) => q % 4 == 3 && is_prime_u64(q),
        None => false,
    }
}

/// The set of Z[i] roots of `x^3 + a*x + c`.
///
/// For `c != 0` every integral root divides `c`, so all unit multiples of
/// the divisors of `c` are tested; for `c = 0` the roots are `0` together
/// with the square roots of `-a` when they exist.
pub fn monic_cubic_integral_roots(a: &GaussianInt, c: &GaussianInt) -> Result<Vec<GaussianInt>> {
    let mut roots = Vec::new();
    if c.is_zero() {
        roots.push(GaussianInt::zero());
        if let Some(s) = (-a).sqrt_exact() {
            if !s.is_zero() {
                roots.push(s.clone());
                roots.push(-s);
            }
        }
    } else {
        for d in divisors(c)? {
            for u in Unit::ALL {
                let x = u * &d;
                if (&x.pow(3) + &(a * &x)) + c == GaussianInt::zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n.is_multiple_of(2) {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits a rational prime `p = 1 (mod 4)` into a Gaussian prime of norm
/// `p`, via a square root of `-1 (mod p)` and a Gaussian gcd.
fn split_prime(p: u64) -> GaussianInt {
    let mut n = 2;
    while mod_pow(n, (p - 1) / 2, p) != p - 1 {
        n += 1;
    }
    let z = mod_pow(n, (p - 1) / 4, p);
    let pi = GaussianInt::new(p as i64, 0).gcd(&GaussianInt::new(z as i64, -1));
    debug_assert_eq!(pi.norm(), BigInt::from(p));
    pi
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut result: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}
