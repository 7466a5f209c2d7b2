//! `dagfem`: validate, enumerate, build and check finite dagger categorical
//! structures from JSON tables.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, Ctx};
use dagger_fem::search::DEFAULT_MAX_SEARCH;
use input::{InputError, Loader};
use report::{Report, Status};

#[derive(Parser)]
#[command(name = "dagfem", version, about)]
struct Cli {
    /// Cap on candidates visited by any exhaustive search.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SEARCH)]
    max_search: u64,
    /// Where golden enumeration reports live.
    #[arg(long, global = true, default_value = "golden")]
    golden_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every law of an input structure.
    Validate {
        #[arg(value_enum)]
        kind: ValidateKind,
        input: String,
    },
    /// Exhaustive listings, cross-checked against the oracle.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        input: String,
        /// Target category for `functors` (defaults to the source).
        target: Option<String>,
    },
    /// Construct a category or 2-category and print its tables.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        input: String,
    },
    /// Run one universal-property or law check.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        input: Option<String>,
        #[arg(long)]
        monad: Option<String>,
        #[arg(long)]
        arg_category: Option<String>,
        #[arg(long)]
        object: Option<String>,
        #[arg(long)]
        structure: Option<String>,
    },
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

#[derive(Subcommand)]
enum OracleAction {
    /// Rewrite the golden monad enumerations of every fixture.
    RegenGolden,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValidateKind {
    Category,
    Functor,
    Monad,
    #[value(name = "2category")]
    TwoCategory,
    Laxfunctor,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Monads,
    Functors,
    Algebras,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    Fem,
    Kleisli,
    Dfmnd,
    FkCompletion,
    FemCompletion,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Frobenius,
    FemAlgebra,
    Th1,
    FkUniversal,
    Comparison,
    Monadic,
    FemObject,
    Universal2,
    EtaCommutation,
    Pairs,
    LaxLimit,
}

fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("named variant")
        .get_name()
        .to_string()
}

fn need(x: Option<String>, what: &'static str) -> Result<String, CliError> {
    x.ok_or(CliError::Input(InputError::Missing(what)))
}

fn dispatch(cx: &mut Ctx, command: Command, golden_dir: &std::path::Path) -> commands::Res {
    use commands::*;
    match command {
        Command::Validate { kind, input } => match kind {
            ValidateKind::Category => validate_category(cx, &input),
            ValidateKind::Functor => validate_functor(cx, &input),
            ValidateKind::Monad => validate_monad(cx, &input),
            ValidateKind::TwoCategory => validate_two(cx, &input),
            ValidateKind::Laxfunctor => validate_lax(cx, &input),
        },
        Command::Enumerate {
            kind,
            input,
            target,
        } => match kind {
            EnumerateKind::Monads => enumerate_monads_cmd(cx, &input),
            EnumerateKind::Functors => enumerate_functors_cmd(cx, &input, target.as_deref()),
            EnumerateKind::Algebras => enumerate_algebras_cmd(cx, &input),
        },
        Command::Build { kind, input } => match kind {
            BuildKind::Fem => build_fem(cx, &input),
            BuildKind::Kleisli => build_kleisli_cmd(cx, &input),
            BuildKind::Dfmnd => build_completion_cmd(cx, &input, completion_builder("dfmnd")),
            BuildKind::FkCompletion => build_completion_cmd(cx, &input, completion_builder("fk")),
            BuildKind::FemCompletion => build_completion_cmd(cx, &input, completion_builder("fem")),
        },
        Command::Check {
            kind,
            input,
            monad,
            arg_category,
            object,
            structure,
        } => {
            let monad_arg = || need(monad.clone().or(input.clone()), "monad");
            match kind {
                CheckKind::Frobenius => check_frobenius_cmd(cx, &monad_arg()?),
                CheckKind::FemAlgebra => {
                    let (o, s) = (need(object, "--object")?, need(structure, "--structure")?);
                    check_fem_algebra(cx, &monad_arg()?, &o, &s)
                }
                CheckKind::Th1 => {
                    check_th1(cx, &need(arg_category, "--arg-category")?, &monad_arg()?)
                }
                CheckKind::FkUniversal => check_fk_universal_cmd(
                    cx,
                    &need(arg_category, "--arg-category")?,
                    &monad_arg()?,
                ),
                CheckKind::Comparison => check_comparison(cx, &need(input, "adjunction")?),
                CheckKind::Monadic => check_monadic(cx, &need(input, "adjunction")?),
                CheckKind::FemObject => check_fem_object(cx, &need(input, "problem")?),
                CheckKind::Universal2 => check_universal2(cx, &need(input, "problem")?),
                CheckKind::EtaCommutation => check_eta_commutation(cx, &need(input, "problem")?),
                CheckKind::Pairs => check_pairs(cx, &need(input, "problem")?),
                CheckKind::LaxLimit => check_lax_limit(cx, &need(input, "problem")?),
            }
        }
        Command::Oracle {
            action: OracleAction::RegenGolden,
        } => regen_golden(cx, golden_dir),
    }
}

fn command_name(c: &Command) -> String {
    match c {
        Command::Validate { kind, .. } => format!("validate {}", name(*kind)),
        Command::Enumerate { kind, .. } => format!("enumerate {}", name(*kind)),
        Command::Build { kind, .. } => format!("build {}", name(*kind)),
        Command::Check { kind, .. } => format!("check {}", name(*kind)),
        Command::Oracle { .. } => "oracle regen-golden".into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let command = command_name(&cli.command);
    let mut cx = Ctx {
        loader: Loader::default(),
        max_search: cli.max_search,
    };
    let outcome = dispatch(&mut cx, cli.command, &cli.golden_dir);
    let (verdict, witnesses, error, result) = match outcome {
        Ok(o) if o.witnesses.is_empty() => (Status::Pass, o.witnesses, None, o.result),
        Ok(o) => (Status::Fail, o.witnesses, None, o.result),
        Err(e) => (
            Status::Error,
            Vec::new(),
            Some(e.to_string()),
            serde_json::Value::Null,
        ),
    };
    let report = Report {
        command,
        inputs: cx.loader.inputs,
        verdict,
        witnesses,
        error,
        result,
        timing_ms: start.elapsed().as_millis(),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("reports serialize")
    );
    eprintln!("{}", report.summary());
    ExitCode::from(verdict.exit_code() as u8)
}
