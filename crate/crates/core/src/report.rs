//! Serializable result documents for the CLI and for scripted consumers.
//!
//! Gaussian integers are encoded as `re`/`im` decimal strings so consumers
//! never overflow; curve points and rationals use their string forms, which
//! round-trip through the parsers in this crate. Field order and list order
//! are deterministic. The layout is versioned in `docs/json-schema.md`.

use serde::Serialize;

use crate::curve::Curve;
use crate::factor::GaussianFactorization;
use crate::gaussian::GaussianInt;
use crate::quartic::{Classification, Outcome};
use crate::torsion::TorsionGroup;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug)]
pub struct GaussianIntJson {
    pub re: String,
    pub im: String,
    pub str: String,
}

impl From<&GaussianInt> for GaussianIntJson {
    fn from(g: &GaussianInt) -> Self {
        GaussianIntJson {
            re: g.re().to_string(),
            im: g.im().to_string(),
            str: g.to_string(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CurveJson {
    pub a: GaussianIntJson,
    pub b: GaussianIntJson,
    pub equation: String,
}

impl From<&Curve> for CurveJson {
    fn from(curve: &Curve) -> Self {
        CurveJson {
            a: curve.a().into(),
            b: curve.b().into(),
            equation: curve.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct FactorReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub value: GaussianIntJson,
    pub unit: GaussianIntJson,
    pub factors: Vec<FactorEntryJson>,
    pub rendered: String,
}

#[derive(Serialize, Debug)]
pub struct FactorEntryJson {
    pub prime: GaussianIntJson,
    pub exponent: u32,
}

impl FactorReport {
    pub fn new(value: &GaussianInt, factorization: &GaussianFactorization) -> Self {
        FactorReport {
            schema_version: SCHEMA_VERSION,
            command: "factor",
            value: value.into(),
            unit: (&factorization.unit).into(),
            factors: factorization
                .factors
                .iter()
                .map(|(prime, exponent)| FactorEntryJson {
                    prime: prime.into(),
                    exponent: *exponent,
                })
                .collect(),
            rendered: factorization.to_string(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct TorsionReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub curve: CurveJson,
    pub discriminant_quantity: GaussianIntJson,
    pub order_bound: u32,
    pub candidates_y_zero: usize,
    pub candidates_y_nonzero: usize,
    pub structure: String,
    pub order: usize,
    pub points: Vec<String>,
}

impl TorsionReport {
    pub fn new(
        curve: &Curve,
        torsion: &TorsionGroup,
        order_bound: u32,
        candidates_y_zero: usize,
        candidates_y_nonzero: usize,
    ) -> Self {
        TorsionReport {
            schema_version: SCHEMA_VERSION,
            command: "torsion",
            curve: curve.into(),
            discriminant_quantity: (&curve.discriminant_quantity()).into(),
            order_bound,
            candidates_y_zero,
            candidates_y_nonzero,
            structure: torsion.structure().to_string(),
            order: torsion.order(),
            points: torsion.points().iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct SearchReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub curve: CurveJson,
    pub height_bound: u32,
    pub heuristic: bool,
    pub note: &'static str,
    pub count: usize,
    pub points: Vec<String>,
}

impl SearchReport {
    pub const NOTE: &'static str =
        "heuristic bounded search; absence of extra points is evidence for rank 0, not a proof";

    pub fn new(curve: &Curve, height_bound: u32, points: &[crate::curve::CurvePoint]) -> Self {
        SearchReport {
            schema_version: SCHEMA_VERSION,
            command: "search",
            curve: curve.into(),
            height_bound,
            heuristic: true,
            note: Self::NOTE,
            count: points.len(),
            points: points.iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct SolveReport {
    pub schema_version: u32,
    pub command: &'static str,
    pub problem: ProblemJson,
    pub curve: CurveJson,
    pub substitution: SubstitutionJson,
    pub rank_certificate: String,
    pub torsion: TorsionSummaryJson,
    pub outcome: &'static str,
    pub families: Vec<FamilyJson>,
    pub primitive_solutions: Vec<TripleJson>,
    pub primitive_solution_count: usize,
    pub scaling_note: &'static str,
    pub field_remark: String,
}

#[derive(Serialize, Debug)]
pub struct ProblemJson {
    pub epsilon: i32,
    pub c: GaussianIntJson,
    pub equation: String,
}

#[derive(Serialize, Debug)]
pub struct SubstitutionJson {
    pub u_r: String,
    pub u_a: String,
    pub epsilon_prime: i32,
}

#[derive(Serialize, Debug)]
pub struct TorsionSummaryJson {
    pub structure: String,
    pub order: usize,
    pub points: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct FamilyJson {
    pub s: String,
    pub t: String,
    pub solutions: Vec<TripleJson>,
}

#[derive(Serialize, Debug)]
pub struct TripleJson {
    pub x: GaussianIntJson,
    pub y: GaussianIntJson,
    pub z: GaussianIntJson,
}

impl SolveReport {
    pub const SCALING_NOTE: &'static str =
        "all further solutions are scalings (x, y, z) -> (w*x, w*y, w^2*z) by nonzero w in Z[i]";

    pub fn new(classification: &Classification) -> Self {
        let triple_json = |triple: &crate::quartic::SolutionTriple| TripleJson {
            x: (&triple.x).into(),
            y: (&triple.y).into(),
            z: (&triple.z).into(),
        };
        let families = match &classification.outcome {
            Outcome::OnlyTrivial => Vec::new(),
            Outcome::Families(families) => families
                .iter()
                .map(|f| FamilyJson {
                    s: f.s.to_string(),
                    t: f.t.to_string(),
                    solutions: f.primitive_solutions.iter().map(triple_json).collect(),
                })
                .collect(),
        };
        let primitive_solutions: Vec<TripleJson> = classification
            .primitive_solutions()
            .iter()
            .map(triple_json)
            .collect();
        SolveReport {
            schema_version: SCHEMA_VERSION,
            command: "solve",
            problem: ProblemJson {
                epsilon: classification.problem.epsilon.to_i32(),
                c: (&classification.problem.c.gaussian()).into(),
                equation: classification.problem.to_string(),
            },
            curve: (&classification.curve).into(),
            substitution: SubstitutionJson {
                u_r: classification.substitution.u_r.to_string(),
                u_a: classification.substitution.u_a.to_string(),
                epsilon_prime: classification.substitution.epsilon_prime.to_i32(),
            },
            rank_certificate: classification.rank_certificate.to_string(),
            torsion: TorsionSummaryJson {
                structure: classification.torsion.structure().to_string(),
                order: classification.torsion.order(),
                points: classification
                    .torsion
                    .points()
                    .iter()
                    .map(|p| p.to_string())
                    .collect(),
            },
            outcome: match classification.outcome {
                Outcome::OnlyTrivial => "only-trivial",
                Outcome::Families(_) => "families",
            },
            families,
            primitive_solution_count: primitive_solutions.len(),
            primitive_solutions,
            scaling_note: Self::SCALING_NOTE,
            field_remark: classification.field_remark(),
        }
    }
}
