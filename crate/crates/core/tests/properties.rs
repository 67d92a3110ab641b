//! Property suites: algebraic laws checked on random inputs, and agreement
//! with independent brute-force oracles on norm-bounded boxes.

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zicurves::{
    bounded_point_search, candidates_y_nonzero, candidates_y_zero, classify, divisors, factor,
    is_gaussian_prime, monic_cubic_integral_roots, reduce_to_curve, torsion_subgroup, Curve,
    CurvePoint, GaussianInt, GaussianRational, Outcome, QuarticProblem, RankCertificate, Sign,
    Unit,
};

fn gi(re: i64, im: i64) -> GaussianInt {
    GaussianInt::new(re, im)
}

fn arb_gaussian(limit: i64) -> impl Strategy<Value = GaussianInt> {
    (-limit..=limit, -limit..=limit).prop_map(|(re, im)| GaussianInt::new(re, im))
}

fn arb_nonzero(limit: i64) -> impl Strategy<Value = GaussianInt> {
    arb_gaussian(limit).prop_filter("nonzero", |g| !g.is_zero())
}

fn arb_rational(limit: i64) -> impl Strategy<Value = GaussianRational> {
    (arb_gaussian(limit), arb_nonzero(limit)).prop_map(|(num, den)| GaussianRational::new(num, den))
}

// ---------------------------------------------------------------------------
// brute-force oracles
// ---------------------------------------------------------------------------

/// All divisors of `g` up to associates, by scanning the norm-bounded box.
fn divisors_brute(g: &GaussianInt) -> Vec<GaussianInt> {
    let bound = g.norm().sqrt() + 1u8;
    let bound = i64::try_from(&bound).expect("small oracle input");
    let mut out = Vec::new();
    for re in -bound..=bound {
        for im in -bound..=bound {
            let d = gi(re, im);
            if !d.is_zero() && d.divides(g) {
                out.push(d.canonical_associate().0);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Square-root decision over the box `|re|, |im| <= sqrt(N(g))` in plain
/// integer arithmetic.
fn sqrt_brute(re: i64, im: i64) -> Option<(i64, i64)> {
    let norm = re * re + im * im;
    let bound = (norm as f64).sqrt() as i64 + 1;
    for p in -bound..=bound {
        for q in -bound..=bound {
            if p * p - q * q == re && 2 * p * q == im {
                return Some((p, q));
            }
        }
    }
    None
}

/// Integral roots of `x^3 + ax + c` by scanning the divisor box of `c`.
fn cubic_roots_brute(a: &GaussianInt, c: &GaussianInt) -> Vec<GaussianInt> {
    let bound = if c.is_zero() {
        a.norm().sqrt() + 1u8
    } else {
        c.norm().sqrt() + 1u8
    };
    let bound = i64::try_from(&bound).expect("small oracle input");
    let mut out = Vec::new();
    for re in -bound..=bound {
        for im in -bound..=bound {
            let x = gi(re, im);
            if &(&x.pow(3) + &(a * &x)) + c == GaussianInt::zero() {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Z[i] arithmetic
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn norm_is_multiplicative(a in arb_gaussian(1000), b in arb_gaussian(1000)) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn divrem_satisfies_the_euclidean_bound(a in arb_gaussian(700), b in arb_nonzero(700)) {
        let (q, r) = a.divrem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.norm() * 2 <= b.norm());
    }

    #[test]
    fn gcd_divides_and_is_symmetric(a in arb_nonzero(300), b in arb_gaussian(300)) {
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a));
        prop_assert!(b.is_zero() || g.divides(&b));
        prop_assert_eq!(&g, &b.gcd(&a));
        // The gcd is already canonical.
        prop_assert_eq!(g.canonical_associate().0, g);
    }

    #[test]
    fn canonical_associate_is_a_unit_rotation(g in arb_nonzero(500)) {
        let (c, u) = g.canonical_associate();
        prop_assert_eq!(&c, &(u * &g));
        prop_assert!(c.re() > &BigInt::from(0));
        prop_assert!(c.im() >= &BigInt::from(0));
        prop_assert_eq!(c.canonical_associate().0, c);
    }

    #[test]
    fn factorization_reconstructs_and_is_prime(g in arb_nonzero(700)) {
        let f = factor(&g).unwrap();
        prop_assert_eq!(f.product(), g);
        prop_assert!(f.unit.is_unit());
        for (p, e) in &f.factors {
            prop_assert!(*e >= 1);
            prop_assert!(is_gaussian_prime(p));
            prop_assert_eq!(p.canonical_associate().0, p.clone());
        }
        for w in f.factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn divisor_count_and_divisibility(g in arb_nonzero(100)) {
        let f = factor(&g).unwrap();
        let divs = divisors(&g).unwrap();
        let expected: usize = f.factors.iter().map(|(_, e)| *e as usize + 1).product();
        prop_assert_eq!(divs.len(), expected);
        for d in &divs {
            prop_assert!(d.divides(&g));
            prop_assert_eq!(d.canonical_associate().0, d.clone());
        }
    }

    #[test]
    fn divisors_agree_with_the_box_oracle(g in arb_nonzero(14)) {
        // norm(g) <= 14^2 * 2 = 392 <= 400
        prop_assert_eq!(divisors(&g).unwrap(), divisors_brute(&g));
    }

    #[test]
    fn squares_have_exact_roots(h in arb_gaussian(300)) {
        let g = &h * &h;
        let s = g.sqrt_exact().expect("square of a Gaussian integer");
        prop_assert_eq!(&s * &s, g);
        prop_assert!(s == h || s == -&h);
    }

    #[test]
    fn cubic_roots_match_the_box_oracle(a in arb_gaussian(6), c in arb_gaussian(6)) {
        let roots = monic_cubic_integral_roots(&a, &c).unwrap();
        for x in &roots {
            prop_assert_eq!(&(&x.pow(3) + &(&a * x)) + &c, GaussianInt::zero());
        }
        prop_assert_eq!(roots, cubic_roots_brute(&a, &c));
    }
}

/// Deterministic sample of the square-root decision against the box oracle,
/// for norms up to 10^4.
#[test]
fn sqrt_decision_matches_the_box_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5157_0001);
    for _ in 0..300 {
        let re = rng.gen_range(-70i64..=70);
        let im = rng.gen_range(-70i64..=70);
        let g = gi(re, im);
        match g.sqrt_exact() {
            Some(s) => {
                assert_eq!(&s * &s, g);
                assert!(sqrt_brute(re, im).is_some());
            }
            None => assert_eq!(sqrt_brute(re, im), None, "missed root of {g}"),
        }
    }
    // Exhaustive on a small box as well.
    for re in -12i64..=12 {
        for im in -12i64..=12 {
            assert_eq!(
                gi(re, im).sqrt_exact().is_some(),
                sqrt_brute(re, im).is_some()
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Q(i) field laws
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_axioms(
        a in arb_rational(70),
        b in arb_rational(70),
        c in arb_rational(70),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), GaussianRational::zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert_eq!(b.inv().inv(), b);
        }
    }
}

proptest! {
    #[test]
    fn normalization_is_scale_invariant(
        num in arb_gaussian(50),
        den in arb_nonzero(50),
        k in arb_nonzero(50),
    ) {
        let plain = GaussianRational::new(num.clone(), den.clone());
        let scaled = GaussianRational::new(&k * &num, &k * &den);
        prop_assert_eq!(&plain, &scaled);
        prop_assert_eq!(plain.num(), scaled.num());
        prop_assert_eq!(plain.den(), scaled.den());
        prop_assert_eq!(plain.den().canonical_associate().0, plain.den().clone());
        if !plain.is_zero() {
            prop_assert!(plain.num().gcd(plain.den()).is_unit());
        }
    }

    #[test]
    fn rational_squares_have_roots(s in arb_rational(40)) {
        let q = &s * &s;
        let root = q.sqrt_exact().expect("square in Q(i)");
        prop_assert_eq!(&root * &root, q);
        prop_assert!(root == s || root == -&s);
    }

    #[test]
    fn rational_roots_square_back(q in arb_rational(40)) {
        if let Some(s) = q.sqrt_exact() {
            prop_assert_eq!(&s * &s, q);
        }
    }

    #[test]
    fn string_forms_round_trip(g in arb_gaussian(1000), q in arb_rational(60)) {
        prop_assert_eq!(g.to_string().parse::<GaussianInt>().unwrap(), g);
        prop_assert_eq!(q.to_string().parse::<GaussianRational>().unwrap(), q);
    }
}

// ---------------------------------------------------------------------------
// group law on random curves
// ---------------------------------------------------------------------------

/// Builds a nonsingular curve through `(x, y)` by solving for B.
fn curve_through(a: i64, x: i64, y: (i64, i64)) -> Option<(Curve, CurvePoint)> {
    let x = gi(x, 0);
    let y = gi(y.0, y.1);
    let a = gi(a, 0);
    let b = &(&y * &y) - &(&x.pow(3) + &(&a * &x));
    let curve = Curve::new(a, b).ok()?;
    let p = CurvePoint::Affine(x.into(), y.into());
    Some((curve, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn group_law_closure_and_commutativity(
        a in -8i64..=8,
        x in -8i64..=8,
        y in (-8i64..=8, -8i64..=8),
        j in -3i64..=3,
        k in -3i64..=3,
    ) {
        prop_assume!(y != (0, 0));
        let Some((curve, p)) = curve_through(a, x, y) else {
            return Ok(());
        };
        let q = curve.scalar_mul(j, &p);
        let r = curve.scalar_mul(k, &p);
        let sum = curve.add(&p, &q);
        prop_assert!(curve.contains(&sum));
        prop_assert_eq!(&sum, &curve.add(&q, &p));
        prop_assert_eq!(
            curve.add(&curve.add(&p, &q), &r),
            curve.add(&p, &curve.add(&q, &r))
        );
        prop_assert_eq!(curve.add(&p, &CurvePoint::Infinity), p);
    }
}

proptest! {
    #[test]
    fn scalar_multiplication_is_additive(
        a in -6i64..=6,
        x in -6i64..=6,
        y in (-6i64..=6, -6i64..=6),
        m in -20i64..=20,
        n in -20i64..=20,
    ) {
        prop_assume!(y != (0, 0));
        let Some((curve, p)) = curve_through(a, x, y) else {
            return Ok(());
        };
        prop_assert_eq!(
            curve.scalar_mul(m + n, &p),
            curve.add(&curve.scalar_mul(m, &p), &curve.scalar_mul(n, &p))
        );
    }
}

// ---------------------------------------------------------------------------
// torsion candidates against a brute-force point scan
// ---------------------------------------------------------------------------

/// Every finite-order integral point in the box must be in the candidate
/// set; checked on seeded random small curves.
#[test]
fn candidate_enumeration_is_complete_on_small_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x70_1209);
    let mut checked = 0;
    while checked < 10 {
        let a = gi(rng.gen_range(-4..=4), 0);
        let b = gi(rng.gen_range(-4..=4), 0);
        let Ok(curve) = Curve::new(a, b) else {
            continue;
        };
        if curve.discriminant_quantity().norm() > BigInt::from(10_000) {
            continue;
        }
        checked += 1;
        let mut candidates = candidates_y_zero(&curve).unwrap();
        candidates.extend(candidates_y_nonzero(&curve).unwrap());
        for re in -30i64..=30 {
            for im in -30i64..=30 {
                let x = gi(re, im);
                let rhs = curve.rhs(&x.clone().into());
                let Some(y) = rhs.as_integral().and_then(|v| v.sqrt_exact()) else {
                    continue;
                };
                for y in [y.clone(), -y] {
                    let p = CurvePoint::Affine(x.clone().into(), y.into());
                    if curve.point_order(&p, 12).is_some() {
                        assert!(
                            candidates.contains(&p),
                            "torsion point {p} missing from candidates of {curve}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn torsion_point_orders_divide_the_group_exponent() {
    for a in [1i64, -1] {
        let curve = Curve::new(gi(a, 0), gi(0, 0)).unwrap();
        let torsion = torsion_subgroup(&curve).unwrap();
        for p in torsion.points() {
            let order = curve.point_order(p, 12).unwrap();
            assert_eq!(4 % order, 0, "order {order} on {curve}");
        }
    }
}

// ---------------------------------------------------------------------------
// quartic reduction
// ---------------------------------------------------------------------------

fn all_problems() -> Vec<QuarticProblem> {
    let mut out = Vec::new();
    for epsilon in [Sign::Plus, Sign::Minus] {
        for c in Unit::ALL {
            out.push(QuarticProblem::new(epsilon, c));
        }
    }
    out
}

/// `c*(st)^2 = r^3 + eps*r` must transform exactly into `a^2 = b^3 + eps'*b`
/// under `r = u_r*b`, `s*t = u_a*a`: checked as a polynomial identity at
/// random rational points and a consistency check at the torsion points.
#[test]
fn substitution_identity_holds_for_all_eight_problems() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for problem in all_problems() {
        let (curve, sub) = reduce_to_curve(&problem);
        let c = GaussianRational::from(problem.c.gaussian());
        let eps = GaussianRational::from(i64::from(problem.epsilon.to_i32()));
        let eps_prime = GaussianRational::from(i64::from(sub.epsilon_prime.to_i32()));
        for _ in 0..6 {
            let b = GaussianRational::new(
                gi(rng.gen_range(-40..=40), rng.gen_range(-40..=40)),
                gi(rng.gen_range(1..=9), rng.gen_range(-9..=9)),
            );
            let r = sub.u_r * &b;
            // (u_r b)^3 + eps (u_r b) == c u_a^2 (b^3 + eps' b)
            let lhs = &r.pow(3) + &(&eps * &r);
            let u_a_sq = GaussianRational::from(sub.u_a.square().gaussian());
            let rhs = &(&c * &u_a_sq) * &(&b.pow(3) + &(&eps_prime * &b));
            assert_eq!(lhs, rhs, "identity fails for {problem}");
        }
        // Consistency at actual curve points: c*(u_a a)^2 = r^3 + eps r.
        let torsion = torsion_subgroup(&curve).unwrap();
        for p in torsion.affine_points() {
            let b = p.x().unwrap();
            let a = p.y().unwrap();
            let r = sub.u_r * b;
            let st = sub.u_a * a;
            let lhs = &c * &(&st * &st);
            let rhs = &r.pow(3) + &(&eps * &r);
            assert_eq!(lhs, rhs, "consistency fails at {p} for {problem}");
        }
    }
}

/// Brute-force scan over the box of coordinate parts in [-2, 2]: every
/// nontrivial solution must map onto the reduced curve, and must be a
/// scaled copy of an emitted primitive triple.
#[test]
fn brute_solutions_map_to_the_curve_and_into_families() {
    let range = -2i64..=2;
    let mut coords = Vec::new();
    for re in range.clone() {
        for im in range.clone() {
            coords.push(gi(re, im));
        }
    }
    for problem in all_problems() {
        let (curve, sub) = reduce_to_curve(&problem);
        let classification = classify(&problem, RankCertificate::PaperAsserted).unwrap();
        let families = match &classification.outcome {
            Outcome::OnlyTrivial => Vec::new(),
            Outcome::Families(families) => families.clone(),
        };
        for x in &coords {
            for y in &coords {
                for z in &coords {
                    if x.is_zero() || y.is_zero() || z.is_zero() {
                        continue;
                    }
                    if !problem.residual(x, y, z).is_zero() {
                        continue;
                    }
                    // Reduction sanity: (b, a) = (u_r^-1 s^2, u_a^-1 s t).
                    let s = GaussianRational::new(x.clone(), y.clone());
                    let t = GaussianRational::new(z.clone(), &y.clone() * y);
                    let b = sub.u_r.inv() * &(&s * &s);
                    let a = sub.u_a.inv() * &(&s * &t);
                    assert!(
                        curve.contains(&CurvePoint::Affine(b, a)),
                        "solution ({x}, {y}, {z}) of {problem} misses the curve"
                    );
                    // Forward completeness up to scaling (w x0, w y0, w^2 z0).
                    let scaled_copy = families.iter().any(|family| {
                        family.primitive_solutions.iter().any(|triple| {
                            let wx = GaussianRational::new(x.clone(), triple.x.clone());
                            let wy = GaussianRational::new(y.clone(), triple.y.clone());
                            let wz = GaussianRational::new(z.clone(), triple.z.clone());
                            wx == wy && &wy * &wy == wz
                        })
                    });
                    assert!(
                        scaled_copy,
                        "solution ({x}, {y}, {z}) of {problem} not covered by families"
                    );
                }
            }
        }
    }
}

/// Emitted triples satisfy the equation exactly and are primitive.
#[test]
fn classified_families_are_sound_and_primitive() {
    for problem in all_problems() {
        let classification = classify(&problem, RankCertificate::PaperAsserted).unwrap();
        for triple in classification.primitive_solutions() {
            assert!(problem.residual(&triple.x, &triple.y, &triple.z).is_zero());
            let g = triple.x.gcd(&triple.y).gcd(&triple.z);
            assert!(g.is_unit(), "non-primitive triple {triple}");
        }
    }
}

/// The searches on the two rank-0 curves can only ever see torsion.
#[test]
fn bounded_search_stays_inside_torsion_on_the_unit_curves() {
    for a in [1i64, -1] {
        let curve = Curve::new(gi(a, 0), gi(0, 0)).unwrap();
        let torsion = torsion_subgroup(&curve).unwrap();
        let points = bounded_point_search(&curve, 12);
        for p in &points {
            assert!(torsion.points().contains(p));
        }
        assert_eq!(points.len(), torsion.order() - 1);
    }
}
