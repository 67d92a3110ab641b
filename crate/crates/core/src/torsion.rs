//! Torsion subgroups of `E(Q(i))` by the extended Lutz-Nagell bound.
//!
//! Torsion points have Z[i]-integral coordinates, and either `y = 0` or
//! `y^2` divides `4A^3 + 27B^2`. That yields a finite candidate list: the
//! `y = 0` points come from integral roots of the cubic, the rest from
//! divisors of the discriminant quantity expanded by the four units. Each
//! candidate is kept exactly when it has finite order, and the resulting
//! set is matched against the classification of torsion groups over Q(i)
//! for rational coefficients: cyclic of order `m <= 10` or `12`,
//! `Z2 x Z2m` with `m <= 4`, or `Z4 x Z4`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::{gcd, lcm};

use crate::curve::{Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::factor::{divisors, monic_cubic_integral_roots};
use crate::gaussian::Unit;
use crate::rational::GaussianRational;

/// Maximal order of a torsion point over Q(i) when the coefficients are
/// rational integers. For other coefficients the bound is not justified and
/// callers must pick their own.
pub const CLASSIFICATION_ORDER_BOUND: u32 = 12;

/// Label of a torsion group in the classification over Q(i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionStructure {
    /// `Z_m` with `1 <= m <= 10` or `m = 12`.
    Cyclic(u32),
    /// `Z_2 x Z_2m` with `1 <= m <= 4`.
    TwoByTwoM(u32),
    /// `Z_4 x Z_4`.
    FourByFour,
}

impl TorsionStructure {
    pub fn order(self) -> usize {
        match self {
            TorsionStructure::Cyclic(m) => m as usize,
            TorsionStructure::TwoByTwoM(m) => 4 * m as usize,
            TorsionStructure::FourByFour => 16,
        }
    }

    fn invariant_factors(self) -> Vec<u32> {
        match self {
            TorsionStructure::Cyclic(m) => vec![m],
            TorsionStructure::TwoByTwoM(m) => vec![2, 2 * m],
            TorsionStructure::FourByFour => vec![4, 4],
        }
    }

    /// Sorted multiset of element orders of the labeled abelian group.
    fn order_multiset(self) -> Vec<u32> {
        let factors = self.invariant_factors();
        let total: u32 = factors.iter().product();
        let mut orders = Vec::with_capacity(total as usize);
        for mut index in 0..total {
            let mut order = 1;
            for f in &factors {
                let component = index % f;
                index /= f;
                order = lcm(order, f / gcd(component, *f));
            }
            orders.push(order);
        }
        orders.sort_unstable();
        orders
    }

    fn all_classified() -> impl Iterator<Item = TorsionStructure> {
        (1..=10)
            .chain([12])
            .map(TorsionStructure::Cyclic)
            .chain((1..=4).map(TorsionStructure::TwoByTwoM))
            .chain([TorsionStructure::FourByFour])
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionStructure::Cyclic(m) => write!(f, "Z{m}"),
            TorsionStructure::TwoByTwoM(m) => write!(f, "Z2 x Z{}", 2 * m),
            TorsionStructure::FourByFour => write!(f, "Z4 x Z4"),
        }
    }
}

/// The full torsion point set of a curve, with its group-structure label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGroup {
    points: Vec<CurvePoint>,
    structure: TorsionStructure,
}

impl TorsionGroup {
    /// All torsion points including infinity, in sorted order.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn structure(&self) -> TorsionStructure {
        self.structure
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    pub fn affine_points(&self) -> impl Iterator<Item = &CurvePoint> {
        self.points.iter().filter(|p| !p.is_infinity())
    }
}

/// Candidate torsion points with `y = 0`: integral roots of `x^3 + Ax + B`.
pub fn candidates_y_zero(curve: &Curve) -> Result<Vec<CurvePoint>> {
    let roots = monic_cubic_integral_roots(curve.a(), curve.b())?;
    Ok(roots
        .into_iter()
        .map(|x| CurvePoint::Affine(x.into(), GaussianRational::zero()))
        .collect())
}

/// Candidate torsion points with `y != 0`: every unit multiple `y` of a
/// divisor class of `4A^3 + 27B^2` with `y^2` still dividing it exactly,
/// paired with the integral roots of `x^3 + Ax + (B - y^2)`.
pub fn candidates_y_nonzero(curve: &Curve) -> Result<Vec<CurvePoint>> {
    let disc = curve.discriminant_quantity();
    let mut out = BTreeSet::new();
    for d in divisors(&disc)? {
        for u in Unit::ALL {
            let y = u * &d;
            let y_sq = &y * &y;
            if !y_sq.divides(&disc) {
                continue;
            }
            let c = curve.b() - &y_sq;
            for x in monic_cubic_integral_roots(curve.a(), &c)? {
                out.insert(CurvePoint::Affine(x.into(), y.clone().into()));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Torsion subgroup of a rational-coefficient curve over Q(i).
///
/// Fails with [`Error::NonRationalCoefficients`] when a coefficient has an
/// imaginary part; use [`torsion_subgroup_with_bound`] with an explicit
/// order bound in that case.
pub fn torsion_subgroup(curve: &Curve) -> Result<TorsionGroup> {
    if !curve.has_rational_coefficients() {
        return Err(Error::NonRationalCoefficients);
    }
    torsion_subgroup_with_bound(curve, CLASSIFICATION_ORDER_BOUND)
}

/// Torsion candidates filtered by point order at a caller-chosen bound.
pub fn torsion_subgroup_with_bound(curve: &Curve, bound: u32) -> Result<TorsionGroup> {
    let skip_eleven = curve.has_rational_coefficients();
    let mut points = BTreeSet::new();
    points.insert(CurvePoint::Infinity);
    for candidate in candidates_y_zero(curve)?
        .into_iter()
        .chain(candidates_y_nonzero(curve)?)
    {
        if torsion_order(curve, &candidate, bound, skip_eleven).is_some() {
            points.insert(candidate);
        }
    }
    let points: Vec<CurvePoint> = points.into_iter().collect();
    let structure = identify_structure(&points, curve)?;
    Ok(TorsionGroup { points, structure })
}

/// Order search that skips the impossible `n = 11` identity test when the
/// coefficients are rational integers. Debug builds verify the skip.
fn torsion_order(curve: &Curve, p: &CurvePoint, bound: u32, skip_eleven: bool) -> Option<u32> {
    let mut acc = p.clone();
    for n in 1..=bound {
        if skip_eleven && n == 11 {
            debug_assert!(
                acc != CurvePoint::Infinity,
                "order 11 cannot occur over Q(i) for rational coefficients"
            );
        } else if acc == CurvePoint::Infinity {
            return Some(n);
        }
        acc = curve.add_unchecked(&acc, p);
    }
    None
}

/// Matches a finite subgroup against the classification by order and
/// element-order multiset; the match is unique when it exists.
pub fn identify_structure(points: &[CurvePoint], curve: &Curve) -> Result<TorsionStructure> {
    let n = points.len();
    let mut orders = Vec::with_capacity(n);
    for p in points {
        // element order divides the group order
        match curve.point_order(p, n as u32) {
            Some(o) => orders.push(o),
            None => return Err(Error::UnrecognizedTorsionStructure),
        }
    }
    orders.sort_unstable();
    TorsionStructure::all_classified()
        .find(|s| s.order() == n && s.order_multiset() == orders)
        .ok_or(Error::UnrecognizedTorsionStructure)
}
