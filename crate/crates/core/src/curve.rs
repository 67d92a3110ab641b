//! Short Weierstrass curves `y^2 = x^3 + Ax + B` with `A, B` in Z[i], and
//! their group of points over Q(i).
//!
//! Affine coordinates with exact rationals throughout: every computation in
//! the torsion pipeline is tiny, so clarity and exactness win over
//! projective-coordinate tricks.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;
use crate::rational::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    a: GaussianInt,
    b: GaussianInt,
}

/// A point of `E(Q(i))`: the point at infinity or an affine pair.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum CurvePoint {
    Infinity,
    Affine(GaussianRational, GaussianRational),
}

impl Curve {
    /// Rejects singular input (`4A^3 + 27B^2 = 0`).
    pub fn new(a: GaussianInt, b: GaussianInt) -> Result<Self> {
        let curve = Curve { a, b };
        if curve.discriminant_quantity().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn a(&self) -> &GaussianInt {
        &self.a
    }

    pub fn b(&self) -> &GaussianInt {
        &self.b
    }

    /// The quantity `4A^3 + 27B^2` whose divisors bound torsion y-coordinates.
    pub fn discriminant_quantity(&self) -> GaussianInt {
        &(&GaussianInt::from(4) * &self.a.pow(3)) + &(&GaussianInt::from(27) * &self.b.pow(2))
    }

    /// True when both coefficients are rational integers, the case covered
    /// by the torsion classification over Q(i).
    pub fn has_rational_coefficients(&self) -> bool {
        self.a.im().is_zero() && self.b.im().is_zero()
    }

    /// Right-hand side `x^3 + Ax + B` evaluated over Q(i).
    pub fn rhs(&self, x: &GaussianRational) -> GaussianRational {
        let a = GaussianRational::from(self.a.clone());
        let b = GaussianRational::from(self.b.clone());
        &(&x.pow(3) + &(&a * x)) + &b
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => y * y == self.rhs(x),
        }
    }

    /// Chord-tangent addition. Panics if either input is off the curve.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        assert!(self.contains(p), "point is not on the curve");
        assert!(self.contains(q), "point is not on the curve");
        self.add_unchecked(p, q)
    }

    pub(crate) fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        if x1 == x2 && *y1 == -y2 {
            return CurvePoint::Infinity;
        }
        let lambda = if x1 == x2 {
            // tangent slope (3x^2 + A) / 2y
            let a = GaussianRational::from(self.a.clone());
            &(&(&GaussianRational::from(3) * &(x1 * x1)) + &a) / &(&GaussianRational::from(2) * y1)
        } else {
            &(y2 - y1) / &(x2 - x1)
        };
        let x3 = &(&lambda * &lambda) - &(x1 + x2);
        let y3 = &(&lambda * &(x1 - &x3)) - y1;
        CurvePoint::Affine(x3, y3)
    }

    fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y),
        }
    }

    /// `n . P` by double-and-add; negative `n` negates the point first.
    /// Panics if `P` is off the curve.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        assert!(self.contains(p), "point is not on the curve");
        let base = if n < 0 { self.negate(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut result = CurvePoint::Infinity;
        let mut addend = base;
        while k > 0 {
            if k & 1 == 1 {
                result = self.add_unchecked(&result, &addend);
            }
            k >>= 1;
            if k > 0 {
                addend = self.add_unchecked(&addend, &addend);
            }
        }
        result
    }

    /// Least `n >= 1` with `n . P` at infinity, when it is at most `bound`.
    ///
    /// `None` means the point is not torsion of order within the bound; with
    /// the classification bound 12 and rational coefficients that means not
    /// torsion at all. Panics if `P` is off the curve.
    pub fn point_order(&self, p: &CurvePoint, bound: u32) -> Option<u32> {
        assert!(self.contains(p), "point is not on the curve");
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc == CurvePoint::Infinity {
                return Some(n);
            }
            acc = self.add_unchecked(&acc, p);
        }
        None
    }
}

impl CurvePoint {
    pub fn affine(x: GaussianRational, y: GaussianRational) -> Self {
        CurvePoint::Affine(x, y)
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&GaussianRational> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(x, _) => Some(x),
        }
    }

    pub fn y(&self) -> Option<&GaussianRational> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(_, y) => Some(y),
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        write_term(f, &self.a, "x")?;
        write_term(f, &self.b, "")
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &GaussianInt, var: &str) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    let single_component = c.re().is_zero() || c.im().is_zero();
    let negative = single_component && (c.re().is_negative() || c.im().is_negative());
    let mag = if negative { -c } else { c.clone() };
    f.write_str(if negative { " - " } else { " + " })?;
    let rendered = mag.to_string();
    if var.is_empty() {
        f.write_str(&rendered)
    } else if mag.is_one() {
        f.write_str(var)
    } else if mag.im().is_zero() {
        write!(f, "{rendered}{var}")
    } else {
        write!(f, "({rendered}){var}")
    }
}

/// `O` for infinity, otherwise `(x, y)` with each coordinate in
/// Gaussian-rational syntax.
impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

impl FromStr for CurvePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "O" {
            return Ok(CurvePoint::Infinity);
        }
        let err = || Error::Parse(s.to_string());
        let inner = t
            .strip_prefix('(')
            .and_then(|u| u.strip_suffix(')'))
            .ok_or_else(err)?;
        let (xs, ys) = inner.split_once(',').ok_or_else(err)?;
        Ok(CurvePoint::Affine(
            xs.trim().parse().map_err(|_| err())?,
            ys.trim().parse().map_err(|_| err())?,
        ))
    }
}
