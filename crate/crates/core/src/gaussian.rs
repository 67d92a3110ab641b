//! Exact arithmetic in the Euclidean domain Z[i].
//!
//! The ring of Gaussian integers is Euclidean under the norm
//! `N(a+bi) = a^2 + b^2`, which makes division with remainder, gcd and unique
//! factorization available. Everything here is an immutable value and every
//! operation is a pure function, so values can be shared freely across
//! threads.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A Gaussian integer `re + im*i` with arbitrary-precision components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    re: BigInt,
    im: BigInt,
}

/// One of the four units of Z[i].
///
/// Listed in the fixed iteration order `1, -1, i, -i`; deterministic choices
/// elsewhere (square-root twists, substitution units) pick the first unit in
/// this order that works.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    One,
    MinusOne,
    I,
    MinusI,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    /// `N(a+bi) = a^2 + b^2`. Multiplicative, zero only at zero.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = GaussianInt::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The unique associate in the quadrant `re > 0, im >= 0`, together with
    /// the unit that rotates `self` onto it (`canonical = unit * self`).
    ///
    /// Panics on zero, which has no distinguished associate.
    pub fn canonical_associate(&self) -> (Self, Unit) {
        assert!(!self.is_zero(), "zero has no canonical associate");
        for u in Unit::ALL {
            let c = u * self;
            if c.re.is_positive() && !c.im.is_negative() {
                return (c, u);
            }
        }
        unreachable!("exactly one associate lies in the canonical quadrant");
    }

    /// Euclidean division: returns `(q, r)` with `self = q*rhs + r` and
    /// `N(r) <= N(rhs)/2`, by rounding each coordinate of the exact quotient
    /// to the nearest integer (ties toward +infinity).
    ///
    /// Panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero in Z[i]");
        let n = rhs.norm();
        let t = self * &rhs.conj();
        let q = GaussianInt {
            re: div_round_half_up(&t.re, &n),
            im: div_round_half_up(&t.im, &n),
        };
        let r = self - &(&q * rhs);
        (q, r)
    }

    /// True when `self` divides `other` exactly. `self` must be nonzero.
    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).1.is_zero()
    }

    /// The exact quotient `self / rhs` when the division is exact.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.divrem(rhs);
        r.is_zero().then_some(q)
    }

    /// Greatest common divisor as a canonical associate.
    ///
    /// Panics when both arguments are zero.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd(0, 0) is undefined"
        );
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.canonical_associate().0
    }

    /// The square root in Z[i] when one exists.
    ///
    /// Of the two roots `+/-s` the one with `re > 0`, or `re = 0, im >= 0`,
    /// is returned, so the output is deterministic.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussianInt::zero());
        }
        // s = p + qi with s^2 = self forces p^2 + q^2 = sqrt(N(self)),
        // p^2 - q^2 = re and 2pq = im.
        let n = self.norm();
        let m = n.sqrt();
        if &m * &m != n {
            return None;
        }
        let two_p_sq = &m + &self.re;
        let two_q_sq = &m - &self.re;
        if two_p_sq.is_odd() {
            return None;
        }
        let p_sq: BigInt = two_p_sq >> 1;
        let q_sq: BigInt = two_q_sq >> 1;
        let p = p_sq.sqrt();
        if &p * &p != p_sq {
            return None;
        }
        let q = q_sq.sqrt();
        if &q * &q != q_sq {
            return None;
        }
        let q = if self.im.is_negative() { -q } else { q };
        let s = GaussianInt { re: p, im: q };
        if (&s.re * &s.im) * 2 != self.im {
            return None;
        }
        debug_assert_eq!(&s * &s, *self);
        Some(if s.is_canonical_root() { s } else { -s })
    }

    /// Deterministic representative of a `+/-s` root pair: `re > 0`, or
    /// `re = 0` and `im >= 0`.
    pub(crate) fn is_canonical_root(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && !self.im.is_negative())
    }
}

/// Rounds `n / d` (with `d > 0`) to the nearest integer, ties toward
/// +infinity.
fn div_round_half_up(n: &BigInt, d: &BigInt) -> BigInt {
    let numerator: BigInt = n * 2 + d;
    numerator.div_floor(&(d * 2))
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::MinusOne, Unit::I, Unit::MinusI];

    fn i_exponent(self) -> u32 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::MinusOne => 2,
            Unit::MinusI => 3,
        }
    }

    fn from_i_exponent(e: u32) -> Self {
        match e % 4 {
            0 => Unit::One,
            1 => Unit::I,
            2 => Unit::MinusOne,
            _ => Unit::MinusI,
        }
    }

    pub fn gaussian(self) -> GaussianInt {
        match self {
            Unit::One => GaussianInt::new(1, 0),
            Unit::MinusOne => GaussianInt::new(-1, 0),
            Unit::I => GaussianInt::new(0, 1),
            Unit::MinusI => GaussianInt::new(0, -1),
        }
    }

    pub fn try_from_gaussian(g: &GaussianInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| u.gaussian() == *g)
    }

    pub fn inv(self) -> Unit {
        Unit::from_i_exponent(4 - self.i_exponent())
    }

    pub fn square(self) -> Unit {
        self * self
    }

    pub fn cube(self) -> Unit {
        self * self * self
    }
}

impl Mul for Unit {
    type Output = Unit;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Unit) -> Unit {
        Unit::from_i_exponent(self.i_exponent() + rhs.i_exponent())
    }
}

impl Mul<&GaussianInt> for Unit {
    type Output = GaussianInt;

    /// Rotation by a unit, without big-integer multiplication.
    fn mul(self, g: &GaussianInt) -> GaussianInt {
        match self {
            Unit::One => g.clone(),
            Unit::MinusOne => -g,
            Unit::I => GaussianInt {
                re: -&g.im,
                im: g.re.clone(),
            },
            Unit::MinusI => GaussianInt {
                re: g.im.clone(),
                im: -&g.re,
            },
        }
    }
}

impl Mul<GaussianInt> for Unit {
    type Output = GaussianInt;

    fn mul(self, g: GaussianInt) -> GaussianInt {
        self * &g
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::One => "1",
            Unit::MinusOne => "-1",
            Unit::I => "i",
            Unit::MinusI => "-i",
        })
    }
}

impl Add<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;

    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;

    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianInt> for &GaussianInt {
    type Output = GaussianInt;

    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;

    fn neg(self) -> GaussianInt {
        -&self
    }
}

macro_rules! forward_binop {
    ($t:ty, $imp:ident, $method:ident) => {
        impl $imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl $imp<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(GaussianInt, Add, add);
forward_binop!(GaussianInt, Sub, sub);
forward_binop!(GaussianInt, Mul, mul);

impl From<i64> for GaussianInt {
    fn from(v: i64) -> Self {
        GaussianInt::new(v, 0)
    }
}

impl From<BigInt> for GaussianInt {
    fn from(v: BigInt) -> Self {
        GaussianInt {
            re: v,
            im: BigInt::zero(),
        }
    }
}

/// Total order by `(norm, re, im)`. Not compatible with the ring structure;
/// it exists so sets and rendered lists are deterministic.
impl Ord for GaussianInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.re.cmp(&other.re))
            .then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussianInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write_im(f, &self.im);
        }
        write!(f, "{}", self.re)?;
        if !self.im.is_negative() {
            write!(f, "+")?;
        }
        write_im(f, &self.im)
    }
}

fn write_im(f: &mut fmt::Formatter<'_>, im: &BigInt) -> fmt::Result {
    if im.is_one() {
        write!(f, "i")
    } else if (-im).is_one() {
        write!(f, "-i")
    } else {
        write!(f, "{im}i")
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Grammar: optional sign, integer part, optional `+`/`-` integer `i` part;
/// a lone `i` term is allowed, whitespace between tokens is ignored.
/// Examples: `0`, `-7`, `i`, `-i`, `3i`, `2-3i`, `1+i`.
impl FromStr for GaussianInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse_gaussian(s).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

fn parse_gaussian(s: &str) -> Option<GaussianInt> {
    let mut sc = Scanner {
        bytes: s.as_bytes(),
        pos: 0,
    };
    let sign1 = sc.sign().unwrap_or_else(BigInt::one);
    let (mag1, imag1) = sc.term_body()?;
    if sc.finished() {
        return Some(if imag1 {
            GaussianInt::new(0, sign1 * mag1)
        } else {
            GaussianInt::new(sign1 * mag1, 0)
        });
    }
    let sign2 = sc.sign()?;
    let (mag2, imag2) = sc.term_body()?;
    if imag1 || !imag2 || !sc.finished() {
        return None;
    }
    Some(GaussianInt::new(sign1 * mag1, sign2 * mag2))
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn finished(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.bytes.len()
    }

    fn sign(&mut self) -> Option<BigInt> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            Some(b'+') => {
                self.pos += 1;
                Some(BigInt::one())
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-BigInt::one())
            }
            _ => None,
        }
    }

    /// `digits`, `digits i`, or a bare `i`; returns (magnitude, is_imaginary).
    fn term_body(&mut self) -> Option<(BigInt, bool)> {
        self.skip_ws();
        if self.eat(b'i') {
            return Some((BigInt::one(), true));
        }
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let mag = BigInt::parse_bytes(&self.bytes[start..self.pos], 10)?;
        self.skip_ws();
        Some((mag, self.eat(b'i')))
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}
