//! Command-line front end: torsion computation, Gaussian factoring, the
//! quartic classifier and the heuristic point search, with deterministic
//! text or JSON output.
//!
//! Exit codes: 0 on success, 2 on argument or literal parse errors, 3 on
//! domain errors (singular curve, missing rank certificate, factoring
//! ceiling).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zicurves::report::{FactorReport, SearchReport, SolveReport, TorsionReport};
use zicurves::{
    bounded_point_search, candidates_y_nonzero, candidates_y_zero, classify, default_certificate,
    factor, reduce_to_curve, torsion_subgroup_with_bound, Classification, Curve, Error,
    GaussianInt, Outcome, QuarticProblem, RankCertificate, Sign, Unit, CLASSIFICATION_ORDER_BOUND,
};

#[derive(Parser)]
#[command(
    name = "zicurves",
    version,
    about = "Exact arithmetic in Z[i], elliptic curve torsion over Q(i), and the quartic equations x^4 +/- y^4 = c*z^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all Gaussian-integer solutions of x^4 + eps*y^4 = c*z^2
    Solve {
        /// The sign eps: +1 or -1
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        epsilon: Sign,
        /// The Gaussian unit c: one of 1, -1, i, -i
        #[arg(long, value_parser = parse_unit, allow_hyphen_values = true)]
        c: Unit,
        /// Vouch for rank 0 of the reduced curve when no built-in certificate applies
        #[arg(long)]
        assume_rank_zero: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute the torsion subgroup of y^2 = x^3 + A*x + B over Q(i)
    Torsion {
        /// Coefficient A as a Gaussian integer literal, e.g. -1 or 2-3i
        #[arg(long, value_parser = parse_gaussian, allow_hyphen_values = true)]
        a: GaussianInt,
        /// Coefficient B as a Gaussian integer literal
        #[arg(long, value_parser = parse_gaussian, allow_hyphen_values = true)]
        b: GaussianInt,
        /// Point-order bound; required when A or B is not a rational integer
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Factor a Gaussian integer into canonical Gaussian primes
    Factor {
        /// Gaussian integer literal, e.g. 2, -7+3i, i
        #[arg(value_parser = parse_gaussian, allow_hyphen_values = true)]
        value: GaussianInt,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Heuristic bounded search for affine points of y^2 = x^3 + A*x + B
    Search {
        #[arg(long, value_parser = parse_gaussian, allow_hyphen_values = true)]
        a: GaussianInt,
        #[arg(long, value_parser = parse_gaussian, allow_hyphen_values = true)]
        b: GaussianInt,
        /// Box bound for the x-coordinate numerator and denominator parts
        #[arg(long)]
        height: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_gaussian(s: &str) -> Result<GaussianInt, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse()
        .map_err(|_| "epsilon must be +1 or -1".to_string())
}

fn parse_unit(s: &str) -> Result<Unit, String> {
    let g: GaussianInt = s.parse().map_err(|e: Error| e.to_string())?;
    Unit::try_from_gaussian(&g).ok_or_else(|| "c must be one of 1, -1, i, -i".to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Solve {
            epsilon,
            c,
            assume_rank_zero,
            format,
        } => run_solve(epsilon, c, assume_rank_zero, format),
        Command::Torsion {
            a,
            b,
            bound,
            format,
        } => run_torsion(a, b, bound, format),
        Command::Factor { value, format } => run_factor(value, format),
        Command::Search {
            a,
            b,
            height,
            format,
        } => run_search(a, b, height, format),
    }
}

fn run_solve(epsilon: Sign, c: Unit, assume_rank_zero: bool, format: Format) -> Result<(), Error> {
    let problem = QuarticProblem::new(epsilon, c);
    let (curve, _) = reduce_to_curve(&problem);
    let certificate = match default_certificate(&curve) {
        Some(certificate) => certificate,
        None if assume_rank_zero => RankCertificate::CallerSupplied,
        None => return Err(Error::RankCertificateAbsent),
    };
    let classification = classify(&problem, certificate)?;
    match format {
        Format::Json => print_json(&SolveReport::new(&classification)),
        Format::Text => print_solve_text(&classification),
    }
    Ok(())
}

fn print_solve_text(classification: &Classification) {
    let sub = &classification.substitution;
    println!("equation: {} over Z[i]", classification.problem);
    println!(
        "reduced curve: {}   via r = ({})*b, s*t = ({})*a",
        classification.curve, sub.u_r, sub.u_a
    );
    println!(
        "rank certificate: {} (rank 0 makes the torsion list exhaustive)",
        classification.rank_certificate
    );
    let torsion = &classification.torsion;
    println!(
        "torsion: {} (order {}): {}",
        torsion.structure(),
        torsion.order(),
        torsion
            .points()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    match &classification.outcome {
        Outcome::OnlyTrivial => {
            println!("outcome: only trivial solutions (every solution has xyz = 0)");
        }
        Outcome::Families(families) => {
            println!(
                "outcome: nontrivial solutions; {} primitive triples in {} families",
                classification.primitive_solutions().len(),
                families.len()
            );
            for family in families {
                println!("family s = {}, t = {}:", family.s, family.t);
                for triple in &family.primitive_solutions {
                    println!("  (x, y, z) = {triple}");
                }
            }
            println!("{}", SolveReport::SCALING_NOTE);
        }
    }
    println!("{}", classification.field_remark());
}

fn run_torsion(
    a: GaussianInt,
    b: GaussianInt,
    bound: Option<u32>,
    format: Format,
) -> Result<(), Error> {
    let curve = Curve::new(a, b)?;
    let order_bound = match bound {
        Some(bound) => {
            if !curve.has_rational_coefficients() {
                eprintln!(
                    "warning: coefficients are not rational integers; the classification \
                     behind the default bound does not apply, using --bound {bound}"
                );
            }
            bound
        }
        None => {
            if !curve.has_rational_coefficients() {
                return Err(Error::NonRationalCoefficients);
            }
            CLASSIFICATION_ORDER_BOUND
        }
    };
    let torsion = torsion_subgroup_with_bound(&curve, order_bound)?;
    let y_zero = candidates_y_zero(&curve)?.len();
    let y_nonzero = candidates_y_nonzero(&curve)?.len();
    match format {
        Format::Json => print_json(&TorsionReport::new(
            &curve,
            &torsion,
            order_bound,
            y_zero,
            y_nonzero,
        )),
        Format::Text => {
            println!("curve: {curve}");
            println!(
                "discriminant quantity 4A^3 + 27B^2: {}",
                curve.discriminant_quantity()
            );
            println!("candidates: {y_zero} with y = 0, {y_nonzero} with y != 0");
            println!(
                "torsion structure: {} (order {})",
                torsion.structure(),
                torsion.order()
            );
            println!("points:");
            for p in torsion.points() {
                println!("  {p}");
            }
        }
    }
    Ok(())
}

fn run_factor(value: GaussianInt, format: Format) -> Result<(), Error> {
    let factorization = factor(&value)?;
    match format {
        Format::Json => print_json(&FactorReport::new(&value, &factorization)),
        Format::Text => println!("{factorization}"),
    }
    Ok(())
}

fn run_search(a: GaussianInt, b: GaussianInt, height: u32, format: Format) -> Result<(), Error> {
    let curve = Curve::new(a, b)?;
    let points = bounded_point_search(&curve, height);
    match format {
        Format::Json => print_json(&SearchReport::new(&curve, height, &points)),
        Format::Text => {
            println!("curve: {curve}");
            println!("height bound: {height}");
            println!("note: {}", SearchReport::NOTE);
            println!("points found: {}", points.len());
            for p in &points {
                println!("  {p}");
            }
        }
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}
