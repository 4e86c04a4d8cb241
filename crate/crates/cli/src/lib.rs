//! The `frobpair` command line: model checking, catalog export, fuzzing,
//! transports and term evaluation.

pub mod model;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use frobpair::dsl::{self, Env};
use frobpair::instances::{catalog_instance, mutation_trials, random_instance, SizeBounds};
use frobpair::{
    check_duality, lambda_inverse, lambda_transport, rho_inverse, rho_transport, AxiomReport,
    Error, FieldSpec, FrobeniusPairData, Mor, Result,
};

pub use model::{load_model, parse_model, select_pair, write_model, Model};
pub use report::{Mode, Report, ReportLine};

/// Exit status for unreadable or ill-typed input.
pub const EXIT_INPUT: i32 = 2;

/// Minimum detected fraction of mutations, in percent.
pub const MUTATION_THRESHOLD: usize = 95;

#[derive(Debug, Parser)]
#[command(name = "frobpair", version, about = "Exact checks for Frobenius pairs")]
pub struct Cli {
    /// Report style.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Mode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Left,
    Right,
    Commutative,
    Duality,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Lambda,
    Rho,
    LambdaInv,
    RhoInv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an axiom suite on a pair of a model file.
    Check {
        file: PathBuf,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Write a catalog example as a model file.
    Example {
        name: String,
        /// `Q` or `F<p>`.
        #[arg(long)]
        field: Option<String>,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Check seeded random instances and optionally mutate them.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        mutations: usize,
    },
    /// Transport a generator along the duality of a pair.
    Transport {
        file: PathBuf,
        #[arg(long)]
        pair: Option<String>,
        #[arg(long, value_enum)]
        dir: Direction,
        #[arg(long)]
        mor: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Evaluate a term in a model.
    Eval {
        file: PathBuf,
        #[arg(long)]
        term: String,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn report(report: &Report, mode: Mode) -> Self {
        Outcome {
            stdout: report.render(mode),
            stderr: String::new(),
            code: report.exit_code(),
        }
    }

    fn input_error(e: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_INPUT,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                stdout,
                stderr,
                code,
            };
        }
    };
    execute(&cli).unwrap_or_else(Outcome::input_error)
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let mode = cli.format;
    match &cli.command {
        Command::Check { file, pair, suite } => {
            let model = load_model(file)?;
            Ok(Outcome::report(
                &check_model(&model, pair.as_deref(), *suite)?,
                mode,
            ))
        }
        Command::Example {
            name,
            field,
            output,
        } => example(name, field.as_deref(), output, mode),
        Command::Fuzz {
            seed,
            count,
            mutations,
        } => Ok(Outcome::report(&fuzz(*seed, *count, *mutations)?, mode)),
        Command::Transport {
            file,
            pair,
            dir,
            mor,
            u,
            v,
        } => {
            let model = load_model(file)?;
            transport(&model, pair.as_deref(), *dir, mor, u, v, mode)
        }
        Command::Eval { file, term } => {
            let model = load_model(file)?;
            let t = dsl::parse(term)?;
            let m = dsl::evaluate(&t, &model.env)?;
            Ok(Outcome {
                stdout: format!("{} -> {} = {m}\n", m.dom(), m.cod()),
                stderr: String::new(),
                code: 0,
            })
        }
    }
}

fn suite_report(pair: &FrobeniusPairData, suite: Suite) -> Result<AxiomReport> {
    let mut r = AxiomReport::default();
    if matches!(suite, Suite::Left | Suite::All) {
        r.extend(pair.check_left_frobenius()?);
    }
    if matches!(suite, Suite::Right | Suite::All) {
        r.extend(pair.check_derived_right_structure()?);
        r.extend(pair.check_right_frobenius()?);
    }
    if matches!(suite, Suite::Commutative | Suite::All) {
        r.extend(pair.check_commutative()?);
    }
    if matches!(suite, Suite::Duality | Suite::All) {
        r.extend(check_duality(pair)?);
    }
    Ok(r)
}

/// Runs `suite` on the selected pair (every pair when the model has several
/// and none is named, prefixing ids with `<pair>/`), then the file's own
/// `check` statements.
pub fn check_model(model: &Model, pair: Option<&str>, suite: Suite) -> Result<Report> {
    let targets: Vec<&(String, FrobeniusPairData)> = match (pair, model.pairs.len()) {
        (None, n) if n > 1 => model.pairs.iter().collect(),
        _ => vec![select_pair(model, pair)?],
    };
    let prefixed = targets.len() > 1;
    let mut report = Report::default();
    for (name, p) in targets {
        let prefix = if prefixed {
            format!("{name}/")
        } else {
            String::new()
        };
        for r in suite_report(p, suite)?.results {
            report.push(ReportLine::from_check(&prefix, &r));
        }
    }
    for c in &model.checks {
        report.push(ReportLine::new(
            c.label.clone(),
            format!("check at line {}", c.line),
            c.witness.clone(),
        ));
    }
    Ok(report)
}

fn example(name: &str, field: Option<&str>, output: &PathBuf, mode: Mode) -> Result<Outcome> {
    let field = match field {
        Some(f) => f.parse::<FieldSpec>()?,
        None if name.starts_with("rp") => FieldSpec::prime(2)?,
        None => FieldSpec::Rationals,
    };
    let entry = catalog_instance(name, field)?;
    let text = write_model(name, &entry.pair)?;
    std::fs::write(output, text)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", output.display())))?;
    let stdout = match mode {
        Mode::Human => format!("wrote {name} over {field} to {}\n", output.display()),
        Mode::Machine => String::new(),
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: 0,
    })
}

/// Instances `seed, seed+1, ...`; each must pass the left axioms, the
/// derived right structure and the duality checks. Mutations come from
/// [`mutation_trials`]; a surviving mutation is reported but only the
/// aggregate detection rate decides the exit status.
pub fn fuzz(seed: u64, count: usize, mutations: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut instances = Vec::with_capacity(count);
    for k in 0..count as u64 {
        let s = seed.wrapping_add(k);
        let pair = random_instance(s, SizeBounds::default());
        let mut r = pair.check_left_frobenius()?;
        r.extend(pair.check_derived_right_structure()?);
        r.extend(check_duality(&pair)?);
        let first = r.failures().next().cloned();
        let label = format!(
            "instance {s}: X {} Y {}, {} checks",
            pair.x,
            pair.y,
            r.results.len()
        );
        let label = match &first {
            Some(f) => format!("{label}, first failure {}", f.id),
            None => label,
        };
        report.push(ReportLine::new(
            format!("fuzz-{s}"),
            label,
            first.and_then(|f| f.witness),
        ));
        instances.push(pair);
    }
    if mutations == 0 {
        return Ok(report);
    }
    let trials = mutation_trials(seed, &instances, mutations)?;
    let mut detected = 0;
    for (m, t) in trials.iter().enumerate() {
        let base = format!(
            "{} of instance {} at deg={} row={} col={}: {} -> {}",
            t.map,
            seed.wrapping_add(t.instance as u64),
            t.degree,
            t.row,
            t.col,
            t.old,
            t.new
        );
        let (label, witness) = match &t.detected_by {
            Some(c) => {
                detected += 1;
                (format!("{base}, caught by {}", c.id), None)
            }
            None => (
                format!("{base}, undetected"),
                Some(frobpair::EntryDiff {
                    degree: t.degree,
                    row: t.row,
                    col: t.col,
                    lhs: t.new.clone(),
                    rhs: t.old.clone(),
                }),
            ),
        };
        let mut line = ReportLine::new(format!("mutation-{m}"), label, witness);
        line.gating = false;
        report.push(line);
    }
    let needed = (mutations * MUTATION_THRESHOLD).div_ceil(100);
    let rate_witness = (detected < needed).then(|| {
        let f = FieldSpec::Rationals;
        frobpair::EntryDiff {
            degree: 0,
            row: 0,
            col: 0,
            lhs: f.from_i64(detected as i64),
            rhs: f.from_i64(needed as i64),
        }
    });
    report.push(ReportLine::new(
        "mutation-detection",
        format!("{detected}/{mutations} mutations detected, {needed} required"),
        rate_witness,
    ));
    Ok(report)
}

fn transport(
    model: &Model,
    pair: Option<&str>,
    dir: Direction,
    mor: &str,
    u: &str,
    v: &str,
    mode: Mode,
) -> Result<Outcome> {
    let (_, p) = select_pair(model, pair)?;
    let env: &Env = &model.env;
    let f = env.gen(mor)?;
    let u = env.resolve(&dsl::parse_object(u)?)?;
    let v = env.resolve(&dsl::parse_object(v)?)?;
    let (forward, back): (Mor, Mor) = match dir {
        Direction::Lambda => {
            let g = lambda_transport(p, &u, &v, f)?;
            let b = lambda_inverse(p, &u, &v, &g)?;
            (g, b)
        }
        Direction::LambdaInv => {
            let g = lambda_inverse(p, &u, &v, f)?;
            let b = lambda_transport(p, &u, &v, &g)?;
            (g, b)
        }
        Direction::Rho => {
            let g = rho_transport(p, &u, &v, f)?;
            let b = rho_inverse(p, &u, &v, &g)?;
            (g, b)
        }
        Direction::RhoInv => {
            let g = rho_inverse(p, &u, &v, f)?;
            let b = rho_transport(p, &u, &v, &g)?;
            (g, b)
        }
    };
    let dir_name = dir
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    let mut report = Report::default();
    report.push(ReportLine::new(
        "transport-round-trip",
        format!("inverse of {dir_name} recovers {mor}"),
        back.first_difference(f)?,
    ));
    let result = format!("{} -> {} = {forward}", forward.dom(), forward.cod());
    let mut out = Outcome::report(&report, mode);
    out.stdout = match mode {
        Mode::Machine => format!("{}{result}\n", out.stdout),
        Mode::Human => format!("{dir_name}({mor}) : {result}\n{}", out.stdout),
    };
    Ok(out)
}
