use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use liecot_core::catalog::{self, Params};
use liecot_core::geom::GeomError;
use liecot_core::io;
use liecot_core::metrics::{self, BilinearForm, MetricError};
use liecot_core::operators::{self as ops, OperatorError};
use liecot_core::rational::parse_rational;
use liecot_core::{repro, Execution, LieAlgebra, Matrix, Rational};

mod geometry;
mod report;

use report::Report;

#[derive(Parser)]
#[command(
    name = "liecot",
    version,
    about = "Exact computations on cotangent Lie algebras"
)]
struct Cli {
    /// Print a short summary to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArg {
    /// Algebra JSON file, or `-` for stdin.
    input: Option<String>,
    /// Same as the positional input.
    #[arg(long, conflicts_with = "input")]
    algebra: Option<String>,
}

#[derive(Args)]
struct FormArgs {
    #[command(flatten)]
    algebra: AlgebraArg,
    /// `duality`, `killing`, a 1-based index into the invariant-form basis,
    /// `basis` (with --coeffs), or a JSON matrix file.
    #[arg(long)]
    form: String,
    /// Comma-separated rational coefficients on the invariant-form basis.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra and report structural predicates.
    Check(AlgebraArg),
    /// Print the cotangent algebra T*g as algebra JSON.
    Cotangent(AlgebraArg),
    /// Derivation algebra.
    Der(AlgebraArg),
    /// Prederivations.
    Pder(AlgebraArg),
    /// Inner derivations.
    Inner(AlgebraArg),
    /// Endomorphisms commuting with every ad_x.
    Jspace(AlgebraArg),
    /// Endomorphisms commuting with every ad_x ad_y.
    Jprime(AlgebraArg),
    /// Coadjoint 1-cocycles g -> g*.
    Cocycles(AlgebraArg),
    /// Equivariant maps g* -> g.
    Psi(AlgebraArg),
    /// First cohomology of T*g and its decomposition.
    H1(AlgebraArg),
    /// Ad-invariant symmetric bilinear forms.
    Forms(AlgebraArg),
    /// Inertia (n_plus, n_minus, n_zero) of a form.
    Inertia(FormArgs),
    /// Prederivations skew for an orthogonal structure.
    Skewpder(FormArgs),
    /// Block grading of der(T*g).
    Graded(AlgebraArg),
    /// Block check on every derivation of T*g.
    Xicheck(AlgebraArg),
    /// Print a catalog algebra as JSON (list names without an argument).
    Catalog {
        name: Option<String>,
        /// Dimension of `abelian`.
        #[arg(long)]
        n: Option<usize>,
        /// Parameter of `oscillator`, a positive rational.
        #[arg(long)]
        lambda: Option<String>,
        /// Print T*g instead of g.
        #[arg(long)]
        cotangent: bool,
    },
    /// The affine group Aff(R)_0.
    #[command(subcommand)]
    Aff(geometry::AffCommand),
    /// The double group of Aff(R).
    #[command(subcommand)]
    Double(geometry::DoubleCommand),
    /// Run the worked-example suite and print a pass/fail table.
    Repro {
        /// Emit a JSON report instead of the table.
        #[arg(long)]
        json: bool,
        /// Run single-threaded.
        #[arg(long)]
        sequential: bool,
    },
}

enum Output {
    Report(Report),
    Text(String),
}

fn read_source(src: &str) -> Result<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(src).with_context(|| format!("reading {src}"))
    }
}

fn load(a: &AlgebraArg) -> Result<(LieAlgebra, String)> {
    let src = a
        .input
        .clone()
        .or_else(|| a.algebra.clone())
        .ok_or_else(|| anyhow!("an algebra input is required (file path or `-`)"))?;
    let text = read_source(&src)?;
    let g = io::from_json(&text).with_context(|| format!("parsing {src}"))?;
    Ok((g, src))
}

fn base_report(command: &str, g: &LieAlgebra, src: &str) -> Report {
    Report::new(command)
        .input("algebra", g.name())
        .input("dim", g.dim())
        .input("source", src)
}

fn parse_coeffs(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).with_context(|| format!("bad coefficient {t:?}")))
        .collect()
}

fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let rows = v
        .get("matrix")
        .unwrap_or(v)
        .as_array()
        .ok_or_else(|| anyhow!("form file must hold a matrix (array of rows)"))?;
    let n = rows.len();
    let mut data = Vec::with_capacity(n * n);
    for row in rows {
        let row = row
            .as_array()
            .ok_or_else(|| anyhow!("form rows must be arrays"))?;
        if row.len() != n {
            bail!("form matrix must be square");
        }
        for x in row {
            let r = match x {
                Value::String(s) => parse_rational(s)?,
                Value::Number(k) => {
                    let k = k
                        .as_i64()
                        .ok_or_else(|| anyhow!("non-integer number {k}; use a string \"p/q\""))?;
                    Rational::from_integer(k.into())
                }
                other => bail!("bad matrix entry {other}"),
            };
            data.push(r);
        }
    }
    Ok(Matrix::from_vec(n, n, data))
}

fn resolve_form(g: &LieAlgebra, f: &FormArgs) -> Result<BilinearForm> {
    let basis_combo = |coeffs: &[Rational]| -> Result<Matrix> {
        let basis = metrics::invariant_forms(g).basis();
        if coeffs.len() != basis.len() {
            bail!(
                "--coeffs has {} entries, the invariant-form basis has {}",
                coeffs.len(),
                basis.len()
            );
        }
        Ok(basis
            .iter()
            .zip(coeffs)
            .fold(Matrix::zeros(g.dim(), g.dim()), |acc, (b, c)| {
                acc.add(&b.scale(c))
            }))
    };
    let m = match (f.form.as_str(), &f.coeffs) {
        ("duality", None) => return Ok(metrics::duality_pairing(g)?),
        ("killing", None) => return Ok(metrics::killing_form(g)),
        ("basis", Some(c)) => basis_combo(&parse_coeffs(c)?)?,
        (s, None) if s.parse::<usize>().is_ok() => {
            let k: usize = s.parse()?;
            let basis = metrics::invariant_forms(g).basis();
            basis
                .get(k.wrapping_sub(1))
                .cloned()
                .ok_or_else(|| anyhow!("form index {k} out of range 1..={}", basis.len()))?
        }
        (_, Some(_)) => bail!("--coeffs is only valid with --form basis"),
        (path, None) => {
            let v: Value = serde_json::from_str(&read_source(path)?)
                .with_context(|| format!("parsing {path}"))?;
            matrix_from_json(&v)?
        }
    };
    BilinearForm::new(m).map_err(|e| anyhow!("{e}"))
}

fn is_aff_cotangent(d: &LieAlgebra) -> bool {
    d.cotangent_base().is_some_and(|b| {
        b.dim() == 2 && b.nonzero_brackets() == catalog::aff_r().nonzero_brackets()
    })
}

fn space_cmd(
    name: &str,
    a: &AlgebraArg,
    f: impl Fn(&LieAlgebra) -> ops::OperatorSpace,
) -> Result<Report> {
    let (g, src) = load(a)?;
    Ok(report::space(base_report(name, &g, &src), "", &f(&g)))
}

fn run(cmd: &Command) -> Result<Output> {
    let out = match cmd {
        Command::Check(a) => {
            let (g, src) = load(a)?;
            base_report("check", &g, &src)
                .result("valid", true)
                .result("dim", g.dim())
                .result("abelian", g.is_abelian())
                .result("perfect", g.is_perfect())
                .result("semisimple", g.is_semisimple())
                .result("cotangent", g.is_cotangent())
                .result("center_dim", g.center().dim())
                .result("derived_dim", g.derived_ideal().dim())
                .result("killing", report::matrix(&g.killing_matrix()))
        }
        Command::Cotangent(a) => {
            let (g, _) = load(a)?;
            return Ok(Output::Text(io::to_json_pretty(&g.cotangent())));
        }
        Command::Der(a) => space_cmd("der", a, ops::derivations)?,
        Command::Pder(a) => {
            let (g, src) = load(a)?;
            let p = ops::prederivations(&g);
            let der = ops::derivations(&g);
            let mut r =
                report::space(base_report("pder", &g, &src), "", &p).result("equals_der", p == der);
            if is_aff_cotangent(&g) {
                r = r.warn(format!(
                    "Pder(T*aff(R)) has dimension {} here and equals der; a 6-parameter prederivation family is sometimes quoted for this algebra",
                    p.dim()
                ));
            }
            r
        }
        Command::Inner(a) => space_cmd("inner", a, ops::inner_derivations)?,
        Command::Jspace(a) => space_cmd("jspace", a, ops::adjoint_invariant_j)?,
        Command::Jprime(a) => space_cmd("jprime", a, ops::adjoint_invariant_jprime)?,
        Command::Cocycles(a) => {
            let (g, src) = load(a)?;
            let r = report::space(
                base_report("cocycles", &g, &src),
                "",
                &ops::coadjoint_cocycles(&g),
            );
            let cob = ops::coboundaries(&g).dim();
            r.result("coboundaries_dim", cob)
                .result("h1_coadjoint", ops::h1_coadjoint(&g))
        }
        Command::Psi(a) => space_cmd("psi", a, ops::equivariant_psi)?,
        Command::H1(a) => {
            let (g, src) = load(a)?;
            let h = ops::h1_report_with(&g, Execution::default());
            let mut r = base_report("h1", &g, &src);
            if let Value::Object(m) = serde_json::to_value(&h)? {
                r.results.extend(m);
            }
            r = r
                .result("decomposition_sum", h.decomposition_sum())
                .result("decomposition_holds", h.decomposition_holds());
            if !h.decomposition_holds() {
                r = r.warn(format!(
                    "h1_cotangent = {} but the decomposition sums to {}",
                    h.h1_cotangent,
                    h.decomposition_sum()
                ));
            }
            r
        }
        Command::Forms(a) => space_cmd("forms", a, metrics::invariant_forms)?,
        Command::Inertia(f) => {
            let (g, src) = load(&f.algebra)?;
            let b = resolve_form(&g, f)?;
            if b.dim() != g.dim() {
                return Err(MetricError::DimensionMismatch {
                    expected: g.dim(),
                    found: b.dim(),
                }
                .into());
            }
            let i = metrics::form_inertia(&b);
            form_inputs(base_report("inertia", &g, &src), f)
                .result("n_plus", i.n_plus)
                .result("n_minus", i.n_minus)
                .result("n_zero", i.n_zero)
        }
        Command::Skewpder(f) => {
            let (g, src) = load(&f.algebra)?;
            let b = resolve_form(&g, f)?;
            let s = metrics::skew_prederivations(&g, &b)?;
            let inner = ops::inner_derivations(&g);
            report::space(form_inputs(base_report("skewpder", &g, &src), f), "", &s)
                .result("equals_inner", s == inner)
        }
        Command::Graded(a) => {
            let (g, src) = load(a)?;
            let s = ops::graded_split(&g)?;
            let mut r = base_report("graded", &g, &src).result("der_dim", s.der.dim());
            for (k, sp) in [("g0", &s.g0), ("g1", &s.g1), ("q", &s.q), ("psi", &s.psi)] {
                r = report::space(r, k, sp);
            }
            r.result("all_checks", s.checks.all())
                .result("checks", serde_json::to_value(&s.checks)?)
        }
        Command::Xicheck(a) => {
            let (g, src) = load(a)?;
            let holds = ops::xi_decomposition_check(&g)?;
            base_report("xicheck", &g, &src).result("holds", holds)
        }
        Command::Catalog {
            name,
            n,
            lambda,
            cotangent,
        } => {
            let Some(name) = name else {
                return Ok(Output::Report(
                    Report::new("catalog").result("names", json!(catalog::NAMES)),
                ));
            };
            let params = Params {
                n: *n,
                lambda: lambda.as_deref().map(parse_rational).transpose()?,
            };
            let g = catalog::by_name(name, &params)?;
            let g = if *cotangent { g.cotangent() } else { g };
            return Ok(Output::Text(io::to_json_pretty(&g)));
        }
        Command::Aff(c) => return geometry::aff(c),
        Command::Double(c) => return geometry::double(c),
        Command::Repro { json, sequential } => {
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::default()
            };
            let results = repro::run_all(exec);
            let failed = results.iter().filter(|r| !r.pass).count();
            if failed > 0 {
                emit(&results.iter().map(|r| format!("{r}\n")).collect::<String>());
                return Err(anyhow!("{failed} of {} checks failed", results.len()));
            }
            if *json {
                Report::new("repro")
                    .result("checks", serde_json::to_value(&results)?)
                    .result("passed", results.len())
                    .result("failed", 0)
            } else {
                let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
                s.push_str(&format!("{} passed, 0 failed\n", results.len()));
                return Ok(Output::Text(s));
            }
        }
    };
    Ok(Output::Report(out))
}

fn form_inputs(r: Report, f: &FormArgs) -> Report {
    let r = r.input("form", f.form.as_str());
    match &f.coeffs {
        Some(c) => r.input("coeffs", c.as_str()),
        None => r,
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    let precondition = e
        .chain()
        .any(|c| c.is::<MetricError>() || c.is::<OperatorError>() || c.is::<GeomError>());
    if precondition {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli.command) {
        Ok(Output::Report(r)) => {
            emit(&format!("{}\n", r.render()));
            if cli.verbose {
                eprintln!("{}", r.summary());
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Text(mut t)) => {
            if !t.ends_with('\n') {
                t.push('\n');
            }
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes to stdout; a closed downstream pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}
