//! Command-line front end for `numsg`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 a suite reported violations,
//! 3 an internal consistency check failed.

pub mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use numsg::construct::{dual, glue, GluingSpec};
use numsg::enumerate::{enumerate_levels, Execution};
use numsg::suites::{GluingBounds, Sweep, SweepResult, PROBE, SUITES};
use numsg::{build_semigroup, classify, n_of_set, rohrbach_number, InvariantReport, NumericalSemigroup};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use render::{render_report, Format, Report};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] numsg::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "numsg", version, about = "Numerical semigroup invariants, constructions and exhaustive sweeps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 picks the number of cores).
    #[arg(long, default_value_t = 0, global = true)]
    pub workers: usize,
    /// Seed for randomised sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants and classification of one semigroup.
    Analyze {
        /// Generators, comma or space separated.
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
    },
    /// Glue two semigroups as <x*H1, y*H2> and report the result.
    Glue {
        #[arg(long, required = true, num_args = 1..)]
        h1: Vec<String>,
        #[arg(long, required = true, num_args = 1..)]
        h2: Vec<String>,
        #[arg(short = 'x', allow_negative_numbers = true)]
        x: i64,
        #[arg(short = 'y', allow_negative_numbers = true)]
        y: i64,
    },
    /// Report the dual H ∪ PF(H).
    Dual {
        #[arg(required = true, num_args = 1..)]
        gens: Vec<String>,
    },
    /// Rohrbach number n̄(r) with a lexicographically least witness.
    Rohrbach { r: usize },
    /// List all semigroups up to a genus bound, optionally filtered.
    Enumerate {
        #[arg(long)]
        max_genus: usize,
        /// Keep only semigroups satisfying every listed predicate.
        #[arg(long, value_enum, value_delimiter = ',')]
        filter: Vec<Predicate>,
        /// Emit a seeded random sample of this many matches, in enumeration order.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Run theorem suites exhaustively.
    Verify {
        /// Suite name, or `all`. May be repeated or comma separated.
        #[arg(long, required = true, value_delimiter = ',')]
        suite: Vec<String>,
        #[arg(long)]
        max_genus: usize,
        /// Cap on the gluing weights x and y.
        #[arg(long, default_value_t = GluingBounds::default().max_weight)]
        gluing_max_weight: i64,
    },
    /// Search for counterexamples to the far-flung Gorenstein questions.
    Probe {
        #[arg(long)]
        max_genus: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Gorenstein,
    MinimalMultiplicity,
    MaxReducedType,
    MinReducedType,
    AlmostGorenstein,
    PseudoSymmetric,
    FarFlungGorenstein,
    CmFinite,
    RefFinite,
}

impl Predicate {
    fn holds(self, r: &InvariantReport) -> bool {
        match self {
            Predicate::Gorenstein => r.gorenstein,
            Predicate::MinimalMultiplicity => r.minimal_multiplicity,
            Predicate::MaxReducedType => r.max_reduced_type,
            Predicate::MinReducedType => r.min_reduced_type,
            Predicate::AlmostGorenstein => r.almost_gorenstein,
            Predicate::PseudoSymmetric => r.pseudo_symmetric,
            Predicate::FarFlungGorenstein => r.far_flung_gorenstein,
            Predicate::CmFinite => r.cm_finite,
            Predicate::RefFinite => r.ref_finite == numsg::RefFiniteness::Finite,
        }
    }
}

/// Parses generator arguments: each argument may hold several integers
/// separated by commas or whitespace.
pub fn parse_generators(args: &[String]) -> Result<Vec<i64>, CliError> {
    let gens = args
        .iter()
        .flat_map(|a| a.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("invalid generator '{t}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if gens.is_empty() {
        return Err(CliError::Usage("no generators given".into()));
    }
    Ok(gens)
}

fn semigroup(args: &[String]) -> Result<NumericalSemigroup, CliError> {
    Ok(build_semigroup(&parse_generators(args)?)?)
}

/// Output bytes plus whether a suite reported violations.
pub struct Outcome {
    pub bytes: Vec<u8>,
    pub violations: bool,
}

impl Outcome {
    fn clean(bytes: Vec<u8>) -> Self {
        Outcome {
            bytes,
            violations: false,
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let format = cli.global.format;
    match &cli.command {
        Command::Analyze { gens } => {
            let h = semigroup(gens)?;
            Ok(Outcome::clean(render::render_rows(&[Report::of(&h)?], format)?))
        }
        Command::Glue { h1, h2, x, y } => {
            let spec = GluingSpec::new(semigroup(h1)?, semigroup(h2)?, *x, *y)?;
            let glued = glue(&spec)?;
            Ok(Outcome::clean(render::render_rows(&[classify(&glued)?], format)?))
        }
        Command::Dual { gens } => {
            let b = dual(&semigroup(gens)?)?;
            Ok(Outcome::clean(render::render_rows(&[Report::of(&b)?], format)?))
        }
        Command::Rohrbach { r } => {
            let w = rohrbach_number(*r)?;
            let set: Vec<i64> = w.witness.iter().map(|&a| a as i64).collect();
            if w.witness.len() != *r || n_of_set(&set)? != w.value {
                return Err(numsg::Error::InternalInconsistency(format!(
                    "Rohrbach witness {:?} does not attain {}",
                    w.witness, w.value
                ))
                .into());
            }
            Ok(Outcome::clean(render::render_rohrbach(&w, format)?))
        }
        Command::Enumerate {
            max_genus,
            filter,
            sample,
        } => {
            let all: Vec<NumericalSemigroup> = enumerate_levels(*max_genus, Execution::Parallel)?
                .into_iter()
                .flatten()
                .filter(|h| !h.is_full())
                .collect();
            let reports = numsg::par::map(&all, classify)
                .into_iter()
                .collect::<numsg::Result<Vec<_>>>()?;
            let mut matches: Vec<InvariantReport> = reports
                .into_iter()
                .filter(|r| filter.iter().all(|p| p.holds(r)))
                .collect();
            if let Some(k) = sample {
                let mut rng = ChaCha8Rng::seed_from_u64(cli.global.seed);
                let mut picked = (0..matches.len()).choose_multiple(&mut rng, *k);
                picked.sort_unstable();
                matches = picked.into_iter().map(|i| matches[i].clone()).collect();
            }
            let bytes = match format {
                // Always an array, even for a single match.
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&matches)?;
                    s.push('\n');
                    s.into_bytes()
                }
                _ => render::render_rows(&matches, format)?,
            };
            Ok(Outcome::clean(bytes))
        }
        Command::Verify {
            suite,
            max_genus,
            gluing_max_weight,
        } => {
            let names = suite_names(suite)?;
            let bounds = GluingBounds {
                max_weight: *gluing_max_weight,
                ..GluingBounds::default()
            };
            let sweep = Sweep::new(*max_genus, bounds)?;
            let results = names
                .iter()
                .map(|n| sweep.run(n))
                .collect::<numsg::Result<Vec<SweepResult>>>()?;
            let violations = results.iter().any(|r| !r.passed());
            Ok(Outcome {
                bytes: render::render_sweeps(&results, format)?,
                violations,
            })
        }
        Command::Probe { max_genus } => {
            let result = Sweep::new(*max_genus, GluingBounds::default())?.probe()?;
            let violations = !result.passed();
            Ok(Outcome {
                bytes: render::render_sweeps(std::slice::from_ref(&result), format)?,
                violations,
            })
        }
    }
}

fn suite_names(requested: &[String]) -> Result<Vec<String>, CliError> {
    let mut names = Vec::new();
    for name in requested {
        if name == "all" {
            names.extend(SUITES.iter().map(|s| s.to_string()));
        } else if SUITES.contains(&name.as_str()) || name == PROBE {
            names.push(name.clone());
        } else {
            return Err(CliError::Usage(format!(
                "unknown suite '{name}'; expected one of: all, {}",
                SUITES.join(", ")
            )));
        }
    }
    Ok(names)
}

/// Parses `args`, runs the command and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let outcome = numsg::par::with_workers(cli.global.workers, || execute(&cli));
    let result = outcome.and_then(|o| {
        match &cli.global.out {
            Some(path) => std::fs::write(path, &o.bytes)?,
            None => stdout.write_all(&o.bytes)?,
        }
        Ok(o.violations)
    });
    match result {
        Ok(false) => 0,
        Ok(true) => 2,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
