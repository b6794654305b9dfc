//! `fmc`: check identities, run constructions and search for instances.
//!
//! Exit codes: 0 all checks pass, 1 some identity fails, 2 input error,
//! 3 a construction's hypotheses fail.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fmc_core::constructions::{self, ConstructionError};
use fmc_core::graded::{AlgebraSpec, Representation};
use fmc_core::identities::{self, all_passed, Bindings, Evaluator, IdentityId, Suite, Target};
use fmc_core::io::args::{parse_targets, SearchArgs};
use fmc_core::io::corpus::{corpus_entry, CORPUS};
use fmc_core::io::{emit_report, emit_spec, emit_spec_list, parse_spec, ReportFormat};
use fmc_core::search::search;

#[derive(Parser)]
#[command(name = "fmc", version, about = "Exact checker for color-graded F-manifold algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identities on every tuple of basis vectors.
    Check {
        /// Spec file, or `-` for stdin.
        file: String,
        /// Identity names, comma-separated or repeated.
        #[arg(long, value_delimiter = ',')]
        identity: Vec<String>,
        /// Suite names, comma-separated or repeated.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Use representations `NAME.rho` and `NAME.mu` instead of `rho` and `mu`.
        #[arg(long)]
        rep: Option<String>,
        /// Bilinear form name.
        #[arg(long, default_value = "B")]
        form: String,
        /// Print reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build a new spec from an existing one.
    Construct {
        kind: ConstructKind,
        /// Spec file, or `-` for stdin.
        file: String,
        /// Representation prefix for `semidirect` and `dual`.
        #[arg(long)]
        rep: Option<String>,
        /// Skip the hypothesis check of `dual`.
        #[arg(long)]
        unchecked: bool,
        /// Output file, or `-` for stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Search for instances with structure constants drawn from a pool.
    Search {
        /// Cyclic orders, e.g. `2,2`. Omit for the trivial group.
        #[arg(long)]
        group: Option<String>,
        /// Root order N of the bicharacter. Defaults to the group exponent.
        #[arg(long)]
        root_order: Option<u32>,
        /// Exponent matrix, rows separated by `;`, e.g. `0,1;1,0`.
        #[arg(long)]
        bichar: Option<String>,
        /// Dimension of the algebra.
        #[arg(long)]
        dim: usize,
        /// Degrees of the basis vectors, e.g. `0;1` or `0,0;1,0`.
        #[arg(long)]
        degrees: Option<String>,
        /// Target suites or identities, comma-separated.
        #[arg(long)]
        suite: String,
        /// Coefficient pool, comma-separated scalar literals.
        #[arg(long, default_value = "0,1,-1", allow_hyphen_values = true)]
        pool: String,
        /// Candidate budget. Small spaces are enumerated exhaustively.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file, or `-` for stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Commutator,
    Symmetrize,
    Adjoint,
    Semidirect,
    Dual,
    FromPreF,
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Names and advertised targets.
    List,
    /// Print one example as a spec.
    Show { name: String },
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(err: ConstructionError) -> Self {
        match &err {
            ConstructionError::Precondition { reports, .. } => {
                let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).cloned().collect();
                Failure::Precondition(format!("{err}\n{}", emit_report(&failing, ReportFormat::Human)))
            }
            _ => Failure::Input(err.to_string()),
        }
    }
}

fn input_err(err: impl std::fmt::Display) -> Failure {
    Failure::Input(err.to_string())
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn write_output(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        match io::stdout().write_all(text.as_bytes()) {
            // a closed pipe (`fmc ... | head`) is not an error
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            other => other.map_err(input_err),
        }
    } else {
        fs::write(Path::new(path), text).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<AlgebraSpec, Failure> {
    let text = read_input(path)?;
    parse_spec(&text).map_err(|e| Failure::Input(format!("{path}: {e} [{}]", e.class())))
}

fn bindings(rep: Option<&str>) -> Bindings {
    rep.map(Bindings::with_rep_prefix).unwrap_or_default()
}

/// Suites the spec has inputs for; failing that, the individual identities.
fn default_targets(spec: &AlgebraSpec, b: &Bindings) -> Vec<Target> {
    let ev = Evaluator::new(spec, b);
    let ok = |id: IdentityId| ev.require(id).is_ok();
    let suites: Vec<Target> = Suite::ALL
        .into_iter()
        .filter(|s| s.members().iter().all(|&id| ok(id)))
        .map(Target::Suite)
        .collect();
    if !suites.is_empty() {
        return suites;
    }
    IdentityId::ALL
        .into_iter()
        .filter(|&id| id != IdentityId::FormPTransfer && ok(id))
        .map(Target::Identity)
        .collect()
}

fn run_check(
    file: &str,
    identity: &[String],
    suite: &[String],
    rep: Option<&str>,
    form: &str,
    json: bool,
) -> Result<u8, Failure> {
    let spec = load(file)?;
    let b = bindings(rep).with_form(form);
    let mut targets = Vec::new();
    for name in identity {
        let id: IdentityId = name.parse().map_err(|_| Failure::Input(format!("unknown identity `{name}`")))?;
        targets.push(Target::Identity(id));
    }
    for name in suite {
        targets.extend(parse_targets(name).map_err(input_err)?);
    }
    if targets.is_empty() {
        targets = default_targets(&spec, &b);
    }
    let reports = identities::check_targets(&spec, &targets, &b).map_err(input_err)?;
    let format = if json { ReportFormat::Json } else { ReportFormat::Human };
    write_output("-", &emit_report(&reports, format))?;
    Ok(if all_passed(&reports) { 0 } else { 1 })
}

fn insert_pair(
    spec: &mut AlgebraSpec,
    prefix: &str,
    rho: Representation,
    mu: Representation,
) -> Result<(), Failure> {
    spec.insert_representation(format!("{prefix}.rho"), rho).map_err(input_err)?;
    spec.insert_representation(format!("{prefix}.mu"), mu).map_err(input_err)
}

fn run_construct(
    kind: ConstructKind,
    file: &str,
    rep: Option<&str>,
    unchecked: bool,
    output: &str,
) -> Result<u8, Failure> {
    let spec = load(file)?;
    let b = bindings(rep);
    let out = match kind {
        ConstructKind::Commutator => {
            let prelie = spec
                .product("prelie")
                .ok_or_else(|| Failure::Input("commutator: spec has no product `prelie`".into()))?;
            let bracket = constructions::commutator_bracket(spec.module(), prelie);
            spec.clone().with_product(bracket).map_err(input_err)?
        }
        ConstructKind::Symmetrize => {
            let (dot, frak_l) = constructions::symmetrize_zinbiel(&spec)?;
            let mut out = spec.clone().with_product(dot).map_err(input_err)?;
            out.insert_representation("frakL.mu", frak_l).map_err(input_err)?;
            out
        }
        ConstructKind::Adjoint => {
            let (ad, l) = constructions::adjoint_fm_representation(&spec)?;
            let mut out = spec.clone();
            insert_pair(&mut out, "adjoint", ad, l)?;
            out
        }
        ConstructKind::Semidirect => constructions::semidirect_product(&spec, &b)?,
        ConstructKind::Dual => {
            let (rho, mu) = if unchecked {
                constructions::dual_representation(&spec, &b)?
            } else {
                constructions::dual_representation_checked(&spec, &b)?
            };
            let prefix = rep.map_or_else(|| "dual".to_string(), |p| format!("{p}.dual"));
            let mut out = spec.clone();
            insert_pair(&mut out, &prefix, rho, mu)?;
            out
        }
        ConstructKind::FromPreF => {
            let induced = constructions::induce_from_pre_f(&spec)?;
            let mut out = induced.spec;
            insert_pair(&mut out, "induced", induced.l, induced.frak_l)?;
            out
        }
    };
    write_output(output, &emit_spec(&out))?;
    Ok(0)
}

fn run_search(args: SearchArgs, output: &str) -> Result<u8, Failure> {
    let params = args.resolve().map_err(input_err)?;
    let outcome = search(&params).map_err(input_err)?;
    eprintln!(
        "{} instances from {} candidates ({})",
        outcome.found.len(),
        outcome.candidates,
        if outcome.exhaustive { "exhaustive" } else { "sampled" }
    );
    write_output(output, &emit_spec_list(&outcome.found))?;
    Ok(0)
}

fn run_corpus(action: CorpusAction) -> Result<u8, Failure> {
    match action {
        CorpusAction::List => {
            let mut text = String::new();
            for e in CORPUS {
                let targets: Vec<String> = e.targets.iter().map(ToString::to_string).collect();
                text.push_str(&format!("{}\t{}\t[{}]\n", e.name, e.summary, targets.join(", ")));
            }
            write_output("-", &text)?;
        }
        CorpusAction::Show { name } => {
            let entry = corpus_entry(&name).ok_or_else(|| Failure::Input(format!("no corpus entry `{name}`")))?;
            write_output("-", entry.text)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check {
            file,
            identity,
            suite,
            rep,
            form,
            json,
        } => run_check(&file, &identity, &suite, rep.as_deref(), &form, json),
        Command::Construct {
            kind,
            file,
            rep,
            unchecked,
            output,
        } => run_construct(kind, &file, rep.as_deref(), unchecked, &output),
        Command::Search {
            group,
            root_order,
            bichar,
            dim,
            degrees,
            suite,
            pool,
            trials,
            seed,
            output,
        } => run_search(
            SearchArgs {
                group,
                root_order,
                bichar,
                dim,
                degrees,
                targets: suite,
                pool,
                trials,
                seed,
            },
            &output,
        ),
        Command::Corpus { action } => run_corpus(action),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            match &failure {
                Failure::Input(msg) | Failure::Precondition(msg) => eprintln!("fmc: {}", msg.trim_end()),
            }
            ExitCode::from(failure.code())
        }
    }
}
