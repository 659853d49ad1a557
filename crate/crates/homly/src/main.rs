use clap::{Parser, Subcommand, ValueEnum};
use homly::algebra::AlgebraSpec;
use homly::coeff::Assignment;
use homly::constructions::{hom_akivis_pair, hom_ly_from_hom_leibniz, hom_ly_unchecked, yau_twist};
use homly::identities::{
    check_hom_akivis, check_hom_lie, check_hom_ly, check_identity_3_1, check_identity_3_2,
    check_left_hom_leibniz, check_ly, check_multiplicative, check_right_hom_leibniz, CheckError,
    CheckOptions, CheckReport,
};
use homly::io::{
    builtin, emit_algebra_file, emit_hom_ly, emit_report, parse_algebra_file, parse_gauss_constant,
    CheckEntry, ParseError, ReportDocument, UnknownBuiltin,
};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homly",
    version,
    about = "Verify and construct Hom-Leibniz / Hom-Lie-Yamaguti structures given by structure constants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks on an algebra file
    Check {
        file: PathBuf,
        /// Identity to check; repeatable. Default: multiplicative + hom-leibniz-left
        #[arg(long = "identity", value_enum)]
        identities: Vec<IdentityName>,
        /// Emit the report as JSON on stdout
        #[arg(long)]
        json: bool,
        /// Collect at most this many counterexamples per identity
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        max_counterexamples: u32,
    },
    /// Build the Hom-Lie-Yamaguti structure of a left Hom-Leibniz algebra
    Construct {
        file: PathBuf,
        /// Write the structure listing to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Append the HLY1–HLY8 suite report to the listing
        #[arg(long)]
        check: bool,
    },
    /// Yau-twist an algebra along its catalogued map
    Twist {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or save a built-in algebra definition
    Builtin {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Substitute numeric parameter values, then run identity checks
    Eval {
        file: PathBuf,
        /// Comma-separated values, e.g. a=2,b=3,l=I
        #[arg(long)]
        assign: String,
        #[arg(long = "identity", value_enum)]
        identities: Vec<IdentityName>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    Multiplicative,
    #[value(name = "hom-leibniz-left")]
    HomLeibnizLeft,
    #[value(name = "hom-leibniz-right")]
    HomLeibnizRight,
    #[value(name = "hom-lie")]
    HomLie,
    #[value(name = "hom-akivis")]
    HomAkivis,
    #[value(name = "id-3-1")]
    Id31,
    #[value(name = "id-3-2")]
    Id32,
    #[value(name = "hom-ly")]
    HomLy,
    Ly,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Builtin(#[from] UnknownBuiltin),
    #[error("cannot read `{path}`: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write `{path}`: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Check(String),
    #[error("invalid --assign: {0}")]
    Assign(String),
}

enum Outcome {
    AllPassed,
    SomeFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::AllPassed) => ExitCode::SUCCESS,
        Ok(Outcome::SomeFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Check {
            file,
            identities,
            json,
            max_counterexamples,
        } => {
            let spec = load(&file)?;
            let opts = CheckOptions::with_max_counterexamples(max_counterexamples as usize);
            let doc = run_checks(&spec, &identities, &opts)?;
            if json {
                print!("{}", emit_report(&doc));
            } else {
                print_human(&doc);
            }
            Ok(outcome(&doc))
        }
        Command::Construct { file, out, check } => {
            let spec = load(&file)?;
            match hom_ly_from_hom_leibniz(&spec) {
                Ok(h) => {
                    let mut text = emit_hom_ly(&h);
                    let mut failed = false;
                    if check {
                        let suite = check_hom_ly(&h, &CheckOptions::default());
                        text.push('\n');
                        for report in &suite.checks {
                            text.push_str(&format!("check {report}\n"));
                        }
                        failed = !suite.overall;
                    }
                    write_output(out.as_deref(), &text)?;
                    Ok(if failed {
                        Outcome::SomeFailed
                    } else {
                        Outcome::AllPassed
                    })
                }
                Err(err) => {
                    eprintln!("construction refused: {err}");
                    print_report_stderr(err.report());
                    Ok(Outcome::SomeFailed)
                }
            }
        }
        Command::Twist { file, out } => {
            let spec = load(&file)?;
            match yau_twist(&spec) {
                Ok(twisted) => {
                    write_output(out.as_deref(), &emit_algebra_file(&twisted))?;
                    Ok(Outcome::AllPassed)
                }
                Err(err) => {
                    eprintln!("twist refused: {err}");
                    print_report_stderr(err.report());
                    Ok(Outcome::SomeFailed)
                }
            }
        }
        Command::Builtin { name, out } => {
            let spec = builtin(&name)?;
            write_output(out.as_deref(), &emit_algebra_file(&spec))?;
            Ok(Outcome::AllPassed)
        }
        Command::Eval {
            file,
            assign,
            identities,
        } => {
            let spec = load(&file)?;
            let assignment = parse_assignments(&assign, &spec)?;
            let numeric = spec
                .substitute(&assignment)
                .map_err(|e| CliError::Assign(e.to_string()))?;
            let doc = run_checks(&numeric, &identities, &CheckOptions::default())?;
            print_human(&doc);
            Ok(outcome(&doc))
        }
    }
}

fn load(path: &Path) -> Result<AlgebraSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_algebra_file(&text)?)
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_checks(
    spec: &AlgebraSpec,
    identities: &[IdentityName],
    opts: &CheckOptions,
) -> Result<ReportDocument, CliError> {
    let defaults = [IdentityName::Multiplicative, IdentityName::HomLeibnizLeft];
    let selected: &[IdentityName] = if identities.is_empty() {
        &defaults
    } else {
        identities
    };
    let mut doc = ReportDocument::new(spec.name(), &[]);
    for &identity in selected {
        run_identity(spec, identity, opts, &mut doc).map_err(|e| match e {
            CheckError::Algebra(inner) => CliError::Check(inner.to_string()),
            other => CliError::Check(other.to_string()),
        })?;
    }
    Ok(doc)
}

fn run_identity(
    spec: &AlgebraSpec,
    identity: IdentityName,
    opts: &CheckOptions,
    doc: &mut ReportDocument,
) -> Result<(), CheckError> {
    let product = spec.product();
    let alpha = spec.alpha();
    match identity {
        IdentityName::Multiplicative => {
            doc.push_report(&check_multiplicative(product, alpha, opts)?);
        }
        IdentityName::HomLeibnizLeft => {
            doc.push_report(&check_left_hom_leibniz(product, alpha, opts)?);
        }
        IdentityName::HomLeibnizRight => {
            doc.push_report(&check_right_hom_leibniz(product, alpha, opts)?);
        }
        IdentityName::HomLie => {
            doc.push_suite(&check_hom_lie(product, alpha, opts)?);
        }
        IdentityName::HomAkivis => {
            let (bracket, triple) = hom_akivis_pair(spec);
            doc.push_report(&check_hom_akivis(&bracket, &triple, alpha, opts)?);
        }
        IdentityName::Id31 => {
            doc.push_report(&check_identity_3_1(product, alpha, opts)?);
        }
        IdentityName::Id32 => {
            doc.push_report(&check_identity_3_2(product, alpha, opts)?);
        }
        IdentityName::HomLy => {
            let h = hom_ly_unchecked(spec);
            doc.push_suite(&check_hom_ly(&h, opts));
        }
        IdentityName::Ly => {
            let h = hom_ly_unchecked(spec);
            doc.push_suite(&check_ly(&h, opts)?);
        }
    }
    Ok(())
}

fn outcome(doc: &ReportDocument) -> Outcome {
    if doc.all_hold() {
        Outcome::AllPassed
    } else {
        Outcome::SomeFailed
    }
}

fn print_human(doc: &ReportDocument) {
    for check in &doc.checks {
        print_entry(check);
    }
}

fn print_entry(check: &CheckEntry) {
    if check.holds {
        println!(
            "{}: holds ({} tuples)",
            check.identity, check.tuples_checked
        );
    } else {
        println!(
            "{}: FAILS ({} tuples checked, {} counterexample{})",
            check.identity,
            check.tuples_checked,
            check.counterexamples.len(),
            if check.counterexamples.len() == 1 {
                ""
            } else {
                "s"
            }
        );
        for ce in &check.counterexamples {
            let tuple = ce
                .tuple
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            println!("  at ({tuple}): lhs = {}, rhs = {}", ce.lhs, ce.rhs);
        }
    }
}

fn print_report_stderr(report: &CheckReport) {
    eprintln!("{report}");
    for ce in &report.counterexamples {
        let tuple = ce
            .tuple
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        eprintln!("  at ({tuple}): lhs = {}, rhs = {}", ce.lhs, ce.rhs);
    }
}

fn parse_assignments(text: &str, spec: &AlgebraSpec) -> Result<Assignment, CliError> {
    let mut assignment = Assignment::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| CliError::Assign(format!("expected NAME=VALUE, found `{piece}`")))?;
        let name = name.trim();
        if spec.params().index_of(name).is_none() {
            return Err(CliError::Assign(format!(
                "unknown parameter `{name}` (declared: {})",
                spec.params()
            )));
        }
        let value = parse_gauss_constant(value.trim())
            .map_err(|e| CliError::Assign(format!("value for `{name}`: {e}")))?;
        if assignment.insert(name.to_string(), value).is_some() {
            return Err(CliError::Assign(format!(
                "parameter `{name}` assigned twice"
            )));
        }
    }
    if assignment.is_empty() {
        return Err(CliError::Assign("no assignments given".to_string()));
    }
    Ok(assignment)
}
