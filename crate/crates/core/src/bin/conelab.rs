use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use conelab::cones::{smooth_subdivision_with, ConeElement, LatticeCone, PivotOrder, SubdivisionStrategy};
use conelab::germs::MeromorphicGerm;
use conelab::hopf::{
    birkhoff_of_sum, cone_coproduct, euler_maclaurin_verify, exp_integral, exp_sum, exp_sum_with, renormalized_mu,
    ConeBialgebra, GermAlgebra,
};
use conelab::io::{self, ConeElementFile, ConeFile, GermFile};
use conelab::linalg::InnerProductForm;
use conelab::locality::{check_antipode, check_coalgebra, TargetAlgebra};
use conelab::oracle::{oracle_sum, oracle_sum_adaptive};
use conelab::Error;

#[derive(Parser)]
#[command(name = "conelab", version, about = "Exponential sums and integrals on lattice cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation order of computed germs.
    #[arg(long, global = true, default_value_t = 4)]
    order: i64,

    /// Gram family file for the inner product (default: dot product).
    #[arg(long, global = true)]
    gram: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pivot {
    Shortest,
    Longest,
}

#[derive(Subcommand)]
enum Command {
    /// Exponential sum over interior lattice points.
    Sum { input: PathBuf },
    /// Exponential integral.
    Integral { input: PathBuf },
    /// Renormalised sum: the holomorphic part of the exponential sum.
    Mu { input: PathBuf },
    /// Birkhoff factors of the exponential sum on the cone and its faces.
    Birkhoff {
        input: PathBuf,
        /// Use the projection formulas instead of the general recursion.
        #[arg(long)]
        via_projection: bool,
    },
    /// Transverse-cone coproduct.
    Coproduct { input: PathBuf },
    /// Smooth subdivision.
    Subdivide {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Pivot::Shortest)]
        pivot: Pivot,
        /// Additionally star every maximal cone at its barycentre.
        #[arg(long)]
        refine: bool,
    },
    /// Orthogonality of two cones.
    CheckOrthogonal { first: PathBuf, second: PathBuf },
    /// Numeric value of a germ at a point.
    Eval {
        input: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Brute-force lattice sum at a point of the dual cone.
    OracleSum {
        input: PathBuf,
        #[arg(long)]
        point: PathBuf,
        /// Box radius; adaptive when omitted.
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Runs the consistency checks on a cone.
    Verify { input: PathBuf },
}

enum Failure {
    Validation(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: conelab::Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

/// A cone file or a combination of cones.
fn load_cones(path: &Path) -> std::result::Result<ConeElement, Failure> {
    let text = read(path)?;
    let is_element = serde_json::from_str::<Value>(&text).is_ok_and(|v| v.get("terms").is_some());
    if is_element {
        with_file(path, io::parse_cone_element(&text))
    } else {
        Ok(ConeElement::basis(with_file(path, io::parse_cone(&text))?))
    }
}

fn load_cone(path: &Path) -> std::result::Result<LatticeCone, Failure> {
    with_file(path, io::parse_cone(&read(path)?))
}

fn load_gram(cli: &Cli) -> std::result::Result<InnerProductForm, Failure> {
    match &cli.gram {
        None => Ok(InnerProductForm::Standard),
        Some(p) => with_file(p, io::parse_gram(&read(p)?)),
    }
}

/// Twelve significant digits.
fn fmt_float(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    let a = rounded.abs();
    if a == 0.0 || (1e-4..1e15).contains(&a) {
        rounded.to_string()
    } else {
        format!("{rounded:e}")
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        fmt_float(z.re)
    } else {
        format!("{} + {}i", fmt_float(z.re), fmt_float(z.im))
    }
}

fn json_complex(z: Complex64) -> Value {
    if z.im == 0.0 {
        json!(z.re)
    } else {
        json!({"re": z.re, "im": z.im})
    }
}

fn emit_germ(cli: &Cli, g: &MeromorphicGerm) -> String {
    match cli.format {
        Format::Pretty => g.to_string(),
        Format::Json => io::germ_to_json(g),
    }
}

fn linear(x: &ConeElement, f: impl Fn(&LatticeCone) -> MeromorphicGerm) -> MeromorphicGerm {
    let mut acc = MeromorphicGerm::zero(0, conelab::germs::EXACT);
    for (c, q) in x.iter() {
        acc = acc.add(&f(c).scale(q));
    }
    acc
}

fn pretty_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn run(cli: &Cli) -> Outcome {
    let q = load_gram(cli)?;
    let order = cli.order;
    match &cli.command {
        Command::Sum { input } => Ok(emit_germ(cli, &linear(&load_cones(input)?, |c| exp_sum(c, order)))),
        Command::Integral { input } => Ok(emit_germ(cli, &linear(&load_cones(input)?, exp_integral))),
        Command::Mu { input } => {
            Ok(emit_germ(cli, &linear(&load_cones(input)?, |c| renormalized_mu(c, &q, order))))
        }
        Command::Birkhoff { input, via_projection } => {
            let c = load_cone(input)?;
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            for f in c.faces() {
                let (a, b) = birkhoff_of_sum(&f, &q, order, *via_projection)?;
                lines.push(format!("{f}\n  phi1_inverse: {a}\n  phi2: {b}"));
                rows.push(json!({
                    "cone": ConeFile::from_cone(&f),
                    "phi1_inverse": GermFile::from_germ(&a),
                    "phi2": GermFile::from_germ(&b),
                }));
            }
            Ok(match cli.format {
                Format::Pretty => lines.join("\n"),
                Format::Json => pretty_json(&json!({ "entries": rows })),
            })
        }
        Command::Coproduct { input } => {
            let c = load_cone(input)?;
            let pairs = cone_coproduct(&q, &c);
            Ok(match cli.format {
                Format::Pretty => pairs.iter().map(|(l, r)| format!("{l} ⊗ {r}")).collect::<Vec<_>>().join("\n"),
                Format::Json => pretty_json(&json!({
                    "terms": pairs
                        .iter()
                        .map(|(l, r)| json!({"coeff": "1", "left": ConeFile::from_cone(l), "right": ConeFile::from_cone(r)}))
                        .collect::<Vec<_>>()
                })),
            })
        }
        Command::Subdivide { input, pivot, refine } => {
            let c = load_cone(input)?;
            let strategy = SubdivisionStrategy {
                pivot: match pivot {
                    Pivot::Shortest => PivotOrder::Shortest,
                    Pivot::Longest => PivotOrder::Longest,
                },
                refine: *refine,
            };
            let pieces: ConeElement =
                smooth_subdivision_with(&c, strategy).into_iter().map(|p| (conelab::linalg::int(1), p)).collect();
            Ok(match cli.format {
                Format::Pretty => pieces.keys().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
                Format::Json => pretty_json(&serde_json::to_value(ConeElementFile::from_element(&pieces)).unwrap()),
            })
        }
        Command::CheckOrthogonal { first, second } => {
            let (a, b) = (load_cone(first)?, load_cone(second)?);
            Ok(format!("orthogonal: {}", a.is_orthogonal_to(&q, &b)))
        }
        Command::Eval { input, point } => {
            let g = with_file(input, io::parse_germ(&read(input)?))?;
            let z = with_file(point, io::parse_point(&read(point)?))?;
            let value = g.evaluate_numeric(&z)?;
            let est = g.truncation_estimate(&z)?;
            Ok(match cli.format {
                Format::Pretty => format!("{} (truncation estimate {})", fmt_complex(value), fmt_float(est)),
                Format::Json => pretty_json(&json!({"value": json_complex(value), "truncation_estimate": est})),
            })
        }
        Command::OracleSum { input, point, radius } => {
            let c = load_cone(input)?;
            let z = with_file(point, io::parse_point(&read(point)?))?;
            let r = match radius {
                Some(n) => oracle_sum(&c, &z, *n)?,
                None => oracle_sum_adaptive(&c, &z, 1e-12, 4_000_000)?,
            };
            Ok(match cli.format {
                Format::Pretty => format!(
                    "{} (radius {}, {} points, tail bound {})",
                    fmt_complex(r.value),
                    r.radius,
                    r.points,
                    fmt_float(r.truncation_estimate)
                ),
                Format::Json => pretty_json(&json!({
                    "value": json_complex(r.value),
                    "truncation_estimate": r.truncation_estimate,
                    "radius": r.radius,
                    "points": r.points,
                })),
            })
        }
        Command::Verify { input } => verify(&load_cone(input)?, &q, order),
    }
}

fn verify(c: &LatticeCone, q: &InnerProductForm, order: i64) -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut check = |name: &str, pass: bool, witness: String| {
        ok &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        if pass || witness.is_empty() {
            lines.push(format!("CHECK {name} {status}"));
        } else {
            lines.push(format!("CHECK {name} {status} {witness}"));
        }
    };

    let em = euler_maclaurin_verify(c, q, order)?;
    check("euler-maclaurin", em.matches, em.discrepancy.to_string());

    let other = SubdivisionStrategy { pivot: PivotOrder::Longest, refine: true };
    let alt = exp_sum_with(c, order, other);
    check("subdivision-invariance", alt.agrees_with(&em.sum), String::new());

    let (a1, b1) = birkhoff_of_sum(c, q, order, false)?;
    let (a2, b2) = birkhoff_of_sum(c, q, order, true)?;
    check("birkhoff-consistency", a1.agrees_with(&a2) && b1.agrees_with(&b2), String::new());
    check("birkhoff-integral", b1.agrees_with(&exp_integral(c).truncate(order)), String::new());
    let target = GermAlgebra::new(q.clone());
    let components = c.is_zero() || (target.in_first(&a1) && target.in_second(&b1));
    check("birkhoff-components", components, String::new());

    let h = ConeBialgebra::new(q.clone());
    let r = check_coalgebra(&h, &c.faces());
    check("coalgebra-axioms", r.is_pass(), r.to_string());
    let r = check_antipode(&h, c)?;
    check("antipode", r.is_pass(), r.to_string());

    let report = lines.join("\n");
    if ok {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage_error = e.use_stderr();
            let _ = e.print();
            return if usage_error { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(report)) => {
            emit(&report);
            ExitCode::from(2)
        }
    }
}
