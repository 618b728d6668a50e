use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use colorsuper::colored::{self, build_colored_explicit, compare_algebras, derive_colored_with};
use colorsuper::fock::{self, Orientation};
use colorsuper::involution::{superadjoint_mass_extension_check, verify_antiinvolution, verify_star_rep};
use colorsuper::scga::build_scga;
use colorsuper::verify::{self, AdDecomposition};
use colorsuper::vf::{self, PairScope};
use colorsuper::{json as cjson, ColorAlgebra, Error, Exec, Gen, InvolutionKind, InvolutionSpec, SignChoice};
use colorsuper::{rational, VerificationReport};

#[derive(Parser)]
#[command(name = "colorsuper", version, about = "Exact construction and verification of Z2xZ2 color superalgebras")]
struct Cli {
    /// Worker threads for the scans (1 runs sequentially). Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure-constant tables.
    Algebra {
        #[command(subcommand)]
        action: AlgebraCmd,
    },
    /// Identity checks on a table.
    Verify {
        #[command(subcommand)]
        action: VerifyCmd,
    },
    /// Tables derived from the enveloping algebra.
    Derive {
        #[command(subcommand)]
        action: DeriveCmd,
    },
    /// Triangular decomposition by the ad-D eigenvalue.
    Decompose(DecomposeArgs),
    /// Anti-involutions.
    Involution {
        #[command(subcommand)]
        action: InvolutionCmd,
    },
    /// Boson-fermion Fock representation.
    Fock {
        #[command(subcommand)]
        action: FockCmd,
    },
    /// Vector-field realization.
    Vf {
        #[command(subcommand)]
        action: VfCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// The superconformal Galilei algebra.
    Scga,
    /// The color superalgebra as printed.
    Colored,
    /// The color superalgebra derived from the enveloping algebra.
    Derived,
}

#[derive(Args, Clone)]
struct Target {
    #[arg(long)]
    two_ell: u32,
    #[arg(long)]
    central: bool,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Emit the table as JSON.
    Build {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "colored")]
        algebra: Family,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Graded Jacobi identity over all unordered triples.
    Jacobi {
        #[arg(long, required_unless_present = "input")]
        two_ell: Option<u32>,
        #[arg(long)]
        central: bool,
        #[arg(long, value_enum, default_value = "colored")]
        algebra: Family,
        /// Read the table from a JSON export instead of building it.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum DeriveCmd {
    /// Derive the table; with --diff, compare it with the printed one.
    Structure {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        diff: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
    Both,
}

#[derive(Subcommand)]
enum InvolutionCmd {
    /// Properties (i)-(iv) of an anti-involution.
    Check {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        kind: InvolutionKind,
        #[arg(long, value_enum, default_value = "both")]
        sign: SignArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FockCmd {
    /// Build the truncated representation.
    Build {
        #[arg(long)]
        two_ell: u32,
        #[arg(long)]
        cutoff: usize,
        /// Verify relations, scalar identities and the star property.
        #[arg(long)]
        check: bool,
        /// Include the matrices as sparse triplets (JSON only).
        #[arg(long)]
        matrices: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairsArg {
    Core,
    All,
}

#[derive(Subcommand)]
enum VfCmd {
    /// Bracket-check the vector-field operators.
    Check {
        #[arg(long)]
        two_ell: u32,
        #[arg(long, value_enum, default_value = "all")]
        pairs: PairsArg,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Print every operator in stable text form.
        #[arg(long)]
        dump_ops: bool,
    },
}

/// What a command produced: text for standard output, diagnostics for
/// standard error, and whether every check passed.
struct Outcome {
    stdout: String,
    stderr: String,
    passed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), passed: true }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn build(family: Family, two_ell: u32, central: bool, exec: Exec) -> colorsuper::Result<ColorAlgebra> {
    match family {
        Family::Scga => build_scga(two_ell, central),
        Family::Colored => build_colored_explicit(two_ell, central),
        Family::Derived => derive_colored_with(two_ell, central, exec),
    }
}

fn violations_text(report: &VerificationReport) -> String {
    let mut s = String::new();
    for v in &report.violations {
        let gens: Vec<String> = v.generators.iter().map(Gen::to_string).collect();
        s.push_str(&format!("violation [{}] ({}): {}\n", report.check, gens.join(", "), v.detail));
    }
    s
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn algebra_build(target: &Target, family: Family, output: &Option<PathBuf>, exec: Exec) -> colorsuper::Result<Outcome> {
    let alg = build(family, target.two_ell, target.central, exec)?;
    match output {
        Some(path) => {
            cjson::export_json(&alg, path)?;
            Ok(Outcome::ok(format!("wrote {} ({} generators)\n", path.display(), alg.dim())))
        }
        None => Ok(Outcome::ok(cjson::to_json_string(&alg))),
    }
}

fn verify_jacobi(
    two_ell: Option<u32>,
    central: bool,
    family: Family,
    input: &Option<PathBuf>,
    format: Format,
    exec: Exec,
) -> colorsuper::Result<Outcome> {
    let alg = match input {
        Some(path) => cjson::import_json(path)?,
        None => build(family, two_ell.expect("clap requires --two-ell without --input"), central, exec)?,
    };
    let report = verify::check_jacobi_with(&alg, exec);
    let passed = report.passed();
    Ok(match format {
        Format::Json => Outcome {
            stdout: pretty(&json!({"algebra": alg.name(), "two_ell": alg.two_ell(), "dimension": alg.dim(), "report": report_json(&report)})),
            stderr: String::new(),
            passed,
        },
        Format::Table => Outcome {
            stdout: format!(
                "algebra: {} (two_ell = {}, dimension {})\ntriples checked: {}, violations: {}\n",
                alg.name(),
                alg.two_ell(),
                alg.dim(),
                report.checked,
                report.violations.len()
            ),
            stderr: violations_text(&report),
            passed,
        },
    })
}

fn derive_structure(target: &Target, diff: bool, format: Format, exec: Exec) -> colorsuper::Result<Outcome> {
    let derived = derive_colored_with(target.two_ell, target.central, exec)?;
    if !diff {
        return Ok(match format {
            Format::Json => Outcome::ok(cjson::to_json_string(&derived)),
            Format::Table => {
                let mut s = String::new();
                for (x, y, v) in derived.entries() {
                    s.push_str(&format!("[{x}, {y}] = {v}\n"));
                }
                Outcome::ok(s)
            }
        });
    }
    let printed = build_colored_explicit(target.two_ell, target.central)?;
    let report = compare_algebras(&printed, &derived)?;
    let passed = report.is_empty();
    Ok(match format {
        Format::Json => Outcome {
            stdout: pretty(&serde_json::to_value(&report).expect("diff reports serialize")),
            stderr: String::new(),
            passed,
        },
        Format::Table => {
            let mut s = format!("pairs compared: {}, differences: {}\n", report.pairs_compared, report.entries.len());
            for e in &report.entries {
                s.push_str(&format!("[{}, {}]: printed {} vs derived {}\n", e.left, e.right, e.a_value, e.b_value));
            }
            Outcome { stdout: s, stderr: String::new(), passed }
        }
    })
}

fn sector_json(list: &[(Gen, rational::Rational)]) -> Value {
    Value::Array(
        list.iter().map(|(g, l)| json!({"id": g.to_string(), "eigenvalue": rational::to_canonical(l)})).collect(),
    )
}

fn decompose(target: &Target, format: Format, exec: Exec) -> colorsuper::Result<Outcome> {
    let alg = derive_colored_with(target.two_ell, target.central, exec)?;
    let (dec, report) = colored::check_triangular(&alg)?;
    let passed = report.passed();
    Ok(match format {
        Format::Json => Outcome {
            stdout: pretty(&json!({
                "two_ell": alg.two_ell(),
                "central": alg.central(),
                "plus": sector_json(&dec.plus),
                "zero": sector_json(&dec.zero),
                "minus": sector_json(&dec.minus),
                "report": report_json(&report),
            })),
            stderr: String::new(),
            passed,
        },
        Format::Table => {
            let line = |label: &str, list: &[(Gen, rational::Rational)]| {
                let names: Vec<String> = AdDecomposition::names(list).iter().map(Gen::to_string).collect();
                format!("{label} ({}): {}\n", list.len(), names.join(" "))
            };
            let mut s = line("G^+", &dec.plus);
            s.push_str(&line("G^0", &dec.zero));
            s.push_str(&line("G^-", &dec.minus));
            s.push_str(&format!("checks: {}, violations: {}\n", report.checked, report.violations.len()));
            Outcome { stdout: s, stderr: violations_text(&report), passed }
        }
    })
}

fn involution_check(
    target: &Target,
    kind: InvolutionKind,
    sign: SignArg,
    format: Format,
    exec: Exec,
) -> colorsuper::Result<Outcome> {
    let signs: Vec<SignChoice> = match sign {
        SignArg::Plus => vec![SignChoice::Plus],
        SignArg::Minus => vec![SignChoice::Minus],
        SignArg::Both => SignChoice::BOTH.to_vec(),
    };
    let alg = derive_colored_with(target.two_ell, target.central, exec)?;
    let mut passed = true;
    let mut out = String::new();
    let mut err = String::new();
    let mut docs = vec![];
    for s in signs {
        let spec = InvolutionSpec::new(kind, s, target.two_ell)?;
        let report = verify_antiinvolution(&alg, &spec)?;
        passed &= report.passed();
        out.push_str(&format!(
            "{kind} ({}) on {}: checks {}, violations {}\n",
            s.as_str(),
            alg.name(),
            report.checked,
            report.violations.len()
        ));
        err.push_str(&violations_text(&report));
        let mut doc = json!({"kind": kind.as_str(), "sign": s.as_str(), "report": report_json(&report)});
        if kind.is_super() && target.central {
            // The extension relations live in the central superalgebra itself.
            let mass = superadjoint_mass_extension_check(target.two_ell, s)?;
            let failing: Vec<String> = mass.relation_failures.iter().map(|(a, b)| format!("({a}, {b})")).collect();
            passed &= mass.relation_failures.is_empty();
            out.push_str(&format!(
                "{kind} ({}) on extension relations: failures {} [{}], exactly the extension pairs: {}\n",
                s.as_str(),
                mass.relation_failures.len(),
                failing.join(", "),
                mass.exact()
            ));
            for (a, b) in &mass.relation_failures {
                err.push_str(&format!("violation [extension relation] ({a}, {b}): bracket property (iii) fails\n"));
            }
            doc["extension"] = serde_json::to_value(&mass).expect("reports serialize");
        }
        docs.push(doc);
    }
    Ok(match format {
        Format::Json => Outcome { stdout: pretty(&Value::Array(docs)), stderr: String::new(), passed },
        Format::Table => Outcome { stdout: out, stderr: err, passed },
    })
}

fn fock_build(two_ell: u32, cutoff: usize, check: bool, matrices: bool, format: Format, exec: Exec) -> colorsuper::Result<Outcome> {
    let rep = fock::build_fock_rep(two_ell, cutoff)?;
    let mut doc = json!({
        "two_ell": two_ell,
        "cutoff": cutoff,
        "dimension": rep.dim(),
        "interior": rep.interior().len(),
    });
    let mut out = format!(
        "Fock space: two_ell = {two_ell}, cutoff = {cutoff}, dimension {}, interior {}\n",
        rep.dim(),
        rep.interior().len()
    );
    let mut err = String::new();
    let mut passed = true;
    if check {
        let mut reports = vec![];
        for alg in [build_scga(two_ell, true)?, build_colored_explicit(two_ell, true)?] {
            let mut r = fock::verify_relations_with(&rep, &alg, exec)?;
            r.check = format!("relations of {}", alg.name());
            reports.push(r);
        }
        let stars = [
            (InvolutionKind::Adjoint1, SignChoice::Plus, Orientation::Standard),
            (InvolutionKind::Adjoint2, SignChoice::Minus, Orientation::Reversed),
        ];
        for (kind, sign, orientation) in stars {
            let oriented = fock::build_fock_rep_with(two_ell, cutoff, orientation)?;
            let mut r = verify_star_rep(&oriented, &InvolutionSpec::new(kind, sign, two_ell)?)?;
            r.check = format!("star property, {kind} ({})", sign.as_str());
            reports.push(r);
        }
        let ids = fock::verify_identities(two_ell, cutoff)?;
        passed &= ids.passed();
        for r in &reports {
            passed &= r.passed();
            out.push_str(&format!("{}: checks {}, violations {}\n", r.check, r.checked, r.violations.len()));
            err.push_str(&violations_text(r));
        }
        let show = |v: &Option<String>| v.clone().unwrap_or_else(|| "not scalar".into());
        out.push_str(&format!(
            "boson identity: expected {}, symbolic {}, matrix {}\nfermion identity: expected {}, symbolic {}, matrix {}\n",
            ids.expected_boson,
            show(&ids.symbolic_boson),
            show(&ids.matrix_boson),
            ids.expected_fermion,
            show(&ids.symbolic_fermion),
            show(&ids.matrix_fermion)
        ));
        doc["reports"] = Value::Array(reports.iter().map(report_json).collect());
        doc["identities"] = serde_json::to_value(&ids).expect("reports serialize");
        doc["passed"] = Value::Bool(passed);
    }
    if matrices {
        doc["matrices"] = rep.matrices_json();
    }
    Ok(match format {
        Format::Json => Outcome { stdout: pretty(&doc), stderr: String::new(), passed },
        Format::Table => Outcome { stdout: out, stderr: err, passed },
    })
}

fn vf_check(two_ell: u32, pairs: PairsArg, format: Format, dump_ops: bool, exec: Exec) -> colorsuper::Result<Outcome> {
    let scope = match pairs {
        PairsArg::Core => PairScope::Core,
        PairsArg::All => PairScope::All,
    };
    let check = vf::vf_check(two_ell, scope, exec)?;
    let passed = check.passed();
    let mut dump = String::new();
    if dump_ops {
        let alg = derive_colored_with(two_ell, false, exec)?;
        let computed = colorsuper::leftaction::left_action_generators(&alg, exec)?;
        let printed = vf::build_vf_generators(two_ell);
        for g in alg.basis() {
            dump.push_str(&format!("computed {g} = {}\n", computed[g]));
            dump.push_str(&format!("printed {g} = {}\n", printed[g]));
        }
    }
    Ok(match format {
        Format::Json => {
            let mut doc = serde_json::to_value(&check).expect("reports serialize");
            doc["passed"] = Value::Bool(passed);
            if dump_ops {
                doc["operators"] = Value::String(dump);
            }
            Outcome { stdout: pretty(&doc), stderr: String::new(), passed }
        }
        Format::Table => {
            let summary = |label: &str, r: &vf::VfReport| {
                format!(
                    "{label}: pairs checked {}, violations {}, inhomogeneous terms {}, convention {:+}\n",
                    r.report.checked,
                    r.report.violations.len(),
                    r.inhomogeneous.len(),
                    r.convention
                )
            };
            let mut s = summary("computed left action", &check.computed);
            s.push_str(&summary("printed formulas", &check.printed));
            for m in &check.mismatches {
                s.push_str(&format!("printed {} differs from the computed operator in {} terms\n", m.generator, m.terms));
            }
            s.push_str(&format!("printed failures not traced to a listed operator: {}\n", check.untraced.len()));
            s.push_str(&dump);
            let mut e = violations_text(&check.computed.report);
            for (x, y) in &check.untraced {
                e.push_str(&format!("violation [untraced printed failure] ({x}, {y})\n"));
            }
            Outcome { stdout: s, stderr: e, passed }
        }
    })
}

fn exec_for(jobs: Option<usize>) -> Exec {
    match jobs {
        Some(1) => Exec::Sequential,
        #[cfg(feature = "parallel")]
        Some(n) => {
            // A second initialization is harmless; the first pool wins.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
            Exec::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        Some(_) => Exec::Sequential,
        None if cfg!(feature = "parallel") => Exec::Parallel,
        None => Exec::Sequential,
    }
}

fn run(cli: Cli) -> colorsuper::Result<Outcome> {
    let exec = exec_for(cli.jobs);
    match cli.command {
        Command::Algebra { action: AlgebraCmd::Build { target, algebra, output } } => {
            algebra_build(&target, algebra, &output, exec)
        }
        Command::Verify { action: VerifyCmd::Jacobi { two_ell, central, algebra, input, format } } => {
            verify_jacobi(two_ell, central, algebra, &input, format, exec)
        }
        Command::Derive { action: DeriveCmd::Structure { target, diff, format } } => {
            derive_structure(&target, diff, format, exec)
        }
        Command::Decompose(args) => decompose(&args.target, args.format, exec),
        Command::Involution { action: InvolutionCmd::Check { target, kind, sign, format } } => {
            involution_check(&target, kind, sign, format, exec)
        }
        Command::Fock { action: FockCmd::Build { two_ell, cutoff, check, matrices, format } } => {
            fock_build(two_ell, cutoff, check, matrices, format, exec)
        }
        Command::Vf { action: VfCmd::Check { two_ell, pairs, format, dump_ops } } => {
            vf_check(two_ell, pairs, format, dump_ops, exec)
        }
    }
}

/// Errors that describe an unusable request rather than a failed check.
fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::CentralExtensionUnavailable { .. }
            | Error::UndefinedInvolution { .. }
            | Error::OddEllRequired { .. }
            | Error::CutoffTooSmall { .. }
            | Error::TruncationTooSmall { .. }
            | Error::Schema { .. }
            | Error::Io(_)
            | Error::UnknownGenerator(_)
            | Error::IndexOutOfRange(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(outcome.stdout.as_bytes());
            let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_usage_error(&e) { 2 } else { 1 })
        }
    }
}
