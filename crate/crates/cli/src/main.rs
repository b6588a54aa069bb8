//! `homlie`: command-line front end for homlie-core.
//!
//! Exit status 0 on success, 1 for input or usage errors, 2 for internal
//! errors. Payloads go to stdout (or `--output`), diagnostics to stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use homlie_core::catalog;
use homlie_core::determinant::methods;
use homlie_core::formats::{self, matrix_codecs, Json};
use homlie_core::lab::{self, genericity_experiment};
use homlie_core::{
    hom_jacobi_defect, is_hom_lie, FieldSpec, HomJacobiMatrix, LinearMap, Matrix, SkewAlgebra,
    SupportPattern,
};

#[derive(Parser)]
#[command(name = "homlie", version, about = "Exact Hom-Jacobi systems of skew-symmetric algebras")]
struct Cli {
    /// Write the payload to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an algebra admits a Hom-Lie structure.
    Check { algebra: PathBuf },
    /// Dump the Hom-Jacobi matrix.
    Matrix {
        algebra: PathBuf,
        /// plain, csv or json
        #[arg(long, default_value = "plain")]
        format: String,
    },
    /// Rank and nullity of the Hom-Jacobi matrix.
    Rank { algebra: PathBuf },
    /// Determinant of the (square, dimension 4) Hom-Jacobi matrix.
    Det {
        algebra: PathBuf,
        /// bareiss or gauss
        #[arg(long, default_value = "bareiss")]
        method: String,
    },
    /// Canonical basis of the twisting maps.
    Kernel { algebra: PathBuf },
    /// Evaluate the Hom-Jacobi identity for a given map.
    Verify { algebra: PathBuf, map: PathBuf },
    /// Restrict the system to maps supported on a pattern.
    Restrict {
        algebra: PathBuf,
        /// diag, bidiag, full, or an explicit list "p,q;p,q;..."
        #[arg(long)]
        support: String,
    },
    /// Nullity histogram of seeded random algebras.
    Sample(SampleArgs),
    /// Transport an algebra along an invertible map g: μ'(x,y) = g μ(g⁻¹x, g⁻¹y).
    Transport { algebra: PathBuf, map: PathBuf },
    /// List the built-in algebras, or print one as an algebra file.
    Catalog {
        name: Option<String>,
        /// Field for the printed algebra: "Q" or a prime.
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = lab::DEFAULT_PRIME)]
    prime: u64,
    /// Sample over Q instead of F_p, with integer coefficients in [-bound, bound].
    #[arg(long, conflicts_with = "prime")]
    rational: bool,
    #[arg(long)]
    seed: u64,
    /// Coefficient bound, used over Q only.
    #[arg(long, default_value_t = lab::DEFAULT_BOUND)]
    bound: u64,
}

/// A failed command: exit status and diagnostic.
struct Failure {
    status: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            status: 1,
            message: message.to_string(),
        }
    }
}

impl From<homlie_core::Error> for Failure {
    fn from(e: homlie_core::Error) -> Self {
        Failure::input(e)
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<SkewAlgebra, Failure> {
    formats::parse_algebra(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<LinearMap, Failure> {
    formats::parse_map(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Compact JSON with sorted keys, newline-terminated.
fn emit(value: Value) -> Outcome {
    Ok(format!("{value}\n"))
}

fn literals(xs: &[homlie_core::Scalar]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn check(path: &Path) -> Outcome {
    let algebra = load_algebra(path)?;
    let verdict = is_hom_lie(&algebra);
    emit(json!({
        "dim": algebra.dim(),
        "is_lie": algebra.is_lie(),
        "nullity": verdict.nullity,
        "is_hom_lie": verdict.is_hom_lie,
        "witness": verdict.witness.as_ref().map(formats::map_to_json),
    }))
}

fn matrix(path: &Path, format: &str) -> Outcome {
    let codec = matrix_codecs().resolve(format)?;
    let m = HomJacobiMatrix::build(&load_algebra(path)?);
    Ok(codec.encode(m.matrix()))
}

fn rank(path: &Path) -> Outcome {
    let m = HomJacobiMatrix::build(&load_algebra(path)?);
    emit(json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "rank": m.rank(),
        "nullity": m.nullity(),
    }))
}

fn det(path: &Path, method: &str) -> Outcome {
    let method = methods().resolve(method)?;
    let algebra = load_algebra(path)?;
    if algebra.dim() != 4 {
        return Err(Failure::input(format!(
            "the Hom-Jacobi matrix is square only in dimension 4 (this algebra has dimension {}); use `homlie rank` instead",
            algebra.dim()
        )));
    }
    let det = HomJacobiMatrix::build(&algebra).determinant_with(method.as_ref())?;
    emit(json!({ "det": det.to_string() }))
}

fn kernel(path: &Path) -> Outcome {
    let basis = HomJacobiMatrix::build(&load_algebra(path)?).kernel_basis();
    emit(formats::maps_to_json(&basis.maps))
}

fn verify(algebra: &Path, map: &Path) -> Outcome {
    let algebra = load_algebra(algebra)?;
    let f = load_map(map)?;
    let defects: Vec<Value> = hom_jacobi_defect(&algebra, &f)?
        .into_iter()
        .filter(|d| !d.defect.is_zero())
        .map(|d| {
            let (i, j, k) = d.triple;
            json!({ "triple": [i, j, k], "vector": literals(d.defect.coords()) })
        })
        .collect();
    emit(json!({ "in_kernel": defects.is_empty(), "defects": defects }))
}

fn restrict(path: &Path, spec: &str) -> Outcome {
    let algebra = load_algebra(path)?;
    let support = SupportPattern::parse(spec, algebra.dim())?;
    let m = HomJacobiMatrix::build(&algebra);
    let restricted: Matrix = m.restrict_columns(&support)?;
    let kernel = restricted
        .kernel()
        .iter()
        .map(|v| support.embed(algebra.field(), v))
        .collect::<Result<Vec<_>, _>>()?;
    emit(json!({
        "support": support.positions().iter().map(|&(p, q)| json!([p, q])).collect::<Vec<_>>(),
        "matrix": Json::to_value(&restricted),
        "rank": restricted.rank(),
        "kernel": formats::maps_to_json(&kernel),
    }))
}

fn sample(args: &SampleArgs) -> Outcome {
    let field = if args.rational {
        FieldSpec::Rational
    } else {
        FieldSpec::prime(args.prime)?
    };
    let report = genericity_experiment(args.dim, args.trials, field, args.seed, args.bound)?;
    emit(formats::report_to_json(&report))
}

fn transport(algebra: &Path, map: &Path) -> Outcome {
    let moved = load_algebra(algebra)?.transport(&load_map(map)?)?;
    emit(formats::algebra_to_json(&moved))
}

fn parse_field(text: &str) -> Result<FieldSpec, Failure> {
    match text.trim() {
        "Q" | "q" | "rational" => Ok(FieldSpec::Rational),
        other => {
            let p = other
                .parse()
                .map_err(|_| Failure::input(format!("field must be Q or a prime, got {other:?}")))?;
            Ok(FieldSpec::prime(p)?)
        }
    }
}

fn list_catalog(name: Option<&str>, field: &str) -> Outcome {
    let field = parse_field(field)?;
    match name {
        None => emit(Value::Array(
            catalog::catalog(field)
                .iter()
                .map(|e| json!({ "name": e.name, "dim": e.algebra.dim() }))
                .collect(),
        )),
        Some(name) => match catalog::by_name(name, field) {
            Some(entry) => emit(formats::algebra_to_json(&entry.algebra)),
            None => Err(Failure::input(format!(
                "unknown algebra {name:?}; available: {}",
                catalog::catalog(field).iter().map(|e| e.name).collect::<Vec<_>>().join(", ")
            ))),
        },
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Check { algebra } => check(algebra),
        Command::Matrix { algebra, format } => matrix(algebra, format),
        Command::Rank { algebra } => rank(algebra),
        Command::Det { algebra, method } => det(algebra, method),
        Command::Kernel { algebra } => kernel(algebra),
        Command::Verify { algebra, map } => verify(algebra, map),
        Command::Restrict { algebra, support } => restrict(algebra, support),
        Command::Sample(args) => sample(args),
        Command::Transport { algebra, map } => transport(algebra, map),
        Command::Catalog { name, field } => list_catalog(name.as_deref(), field),
    }
}

fn write_payload(payload: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, payload).map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(payload.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure {
                    status: 2,
                    message: format!("writing output: {e}"),
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(status);
        }
    };
    let result = std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|_| {
        Err(Failure {
            status: 2,
            message: "internal error".into(),
        })
    });
    match result.and_then(|payload| write_payload(&payload, cli.output.as_deref())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("homlie: {}", f.message);
            ExitCode::from(f.status)
        }
    }
}
