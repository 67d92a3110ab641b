//! Exact field arithmetic in Q(i), the coordinate field for curve points.
//!
//! Values are kept as a Gaussian-integer pair in lowest terms with a
//! canonical-associate denominator, so equality is structural and
//! integrality testing is a denominator check.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;
use crate::gaussian::{forward_binop, GaussianInt, Unit};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    num: GaussianInt,
    den: GaussianInt,
}

impl GaussianRational {
    /// Builds `num/den` in normalized form. Panics if `den` is zero.
    pub fn new(num: GaussianInt, den: GaussianInt) -> Self {
        assert!(!den.is_zero(), "denominator is zero");
        if num.is_zero() {
            return GaussianRational::zero();
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let (den, u) = den.canonical_associate();
        GaussianRational { num: u * num, den }
    }

    pub fn zero() -> Self {
        GaussianRational {
            num: GaussianInt::zero(),
            den: GaussianInt::one(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            num: GaussianInt::one(),
            den: GaussianInt::one(),
        }
    }

    pub fn num(&self) -> &GaussianInt {
        &self.num
    }

    pub fn den(&self) -> &GaussianInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Gaussian integer when the denominator is a unit.
    pub fn as_integral(&self) -> Option<GaussianInt> {
        self.den.is_one().then(|| self.num.clone())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(i)");
        GaussianRational::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, exp: u32) -> Self {
        GaussianRational {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// The square root in Q(i) when one exists.
    ///
    /// In lowest terms `num/den` is a square exactly when some unit twist
    /// `u*num`, `u*den` makes both parts squares in Z[i]; all four units are
    /// tried in the fixed order. Of the two roots the one whose numerator
    /// has `re > 0`, or `re = 0, im >= 0`, is returned.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        for u in Unit::ALL {
            if let (Some(a), Some(b)) = ((u * &self.num).sqrt_exact(), (u * &self.den).sqrt_exact())
            {
                let s = GaussianRational::new(a, b);
                return Some(if s.num.is_canonical_root() { s } else { -s });
            }
        }
        None
    }
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        self + &(-rhs)
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    /// Panics if `rhs` is zero.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        -&self
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);
forward_binop!(GaussianRational, Div, div);

impl Mul<&GaussianRational> for Unit {
    type Output = GaussianRational;

    fn mul(self, q: &GaussianRational) -> GaussianRational {
        GaussianRational::new(self * &q.num, q.den.clone())
    }
}

impl From<GaussianInt> for GaussianRational {
    fn from(g: GaussianInt) -> Self {
        GaussianRational {
            num: g,
            den: GaussianInt::one(),
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from(GaussianInt::from(v))
    }
}

/// Total order by `(den, num)` for deterministic sets and output.
impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den
            .cmp(&other.den)
            .then_with(|| self.num.cmp(&other.num))
    }
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `num/den` in Gaussian-integer syntax, denominator omitted when it is a
/// unit; a part with both components is parenthesized, e.g. `(1+i)/2`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/{}", fmt_part(&self.num), fmt_part(&self.den))
    }
}

fn fmt_part(g: &GaussianInt) -> String {
    use num_traits::Zero;
    let s = g.to_string();
    if !g.re().is_zero() && !g.im().is_zero() {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse(s.to_string());
        match s.split_once('/') {
            None => Ok(GaussianRational::from(
                strip_parens(s).parse::<GaussianInt>().map_err(|_| err())?,
            )),
            Some((l, r)) => {
                let num = strip_parens(l).parse::<GaussianInt>().map_err(|_| err())?;
                let den = strip_parens(r).parse::<GaussianInt>().map_err(|_| err())?;
                if den.is_zero() {
                    return Err(err());
                }
                Ok(GaussianRational::new(num, den))
            }
        }
    }
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    match t.strip_prefix('(').and_then(|u| u.strip_suffix(')')) {
        Some(inner) => inner,
        None => t,
    }
}
