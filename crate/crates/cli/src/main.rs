//! `affhecke`: enumerate, compute with, check and draw truncations of an
//! affine Weyl group and its 0-Hecke module.

mod cache;
mod error;
mod expr;
mod graph;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use affhecke::checks::{run_suite_on, CheckConfig, Suite};
use affhecke::coeffs::is_prime;
use affhecke::{AffineWeylGroup, Ball, CartanType, DemazureRule, LieType, RootSystem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "affhecke",
    version,
    about = "Affine Weyl groups, 0-Hecke algebras and Demazure operators in characteristic p"
)]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Lie type letter (A-G), or a full type such as A2.
    #[arg(long = "type", global = true, default_value = "A")]
    lie_type: String,
    /// Rank; may be omitted when --type already carries it.
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 3)]
    prime: u64,
    /// Truncation length N.
    #[arg(long = "max-length", global = true, default_value_t = 3)]
    max_length: usize,
    /// Directory for enumeration caches; no caching when unset.
    #[arg(long, global = true, env = "AFFHECKE_CACHE")]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for randomized check suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random instances per randomized suite.
    #[arg(long, global = true, default_value_t = 1000)]
    samples: usize,
    /// Resource bound on the number of enumerated elements.
    #[arg(long = "max-elements", global = true, default_value_t = 1_000_000)]
    max_elements: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all elements of length at most N, grouped by length.
    Enumerate,
    /// Evaluate one expression (see the README for the grammar).
    Compute { expression: Vec<String> },
    /// Run a property-check suite and print its report.
    Check {
        /// braid, words, compose, xi, theta, spherical, specialize,
        /// bruhat-oracle, length-formula or all.
        suite: String,
        /// Flip the descent branch of the Demazure rule at one generator
        /// ("all" for every generator). Test fixture.
        #[arg(long, hide = true)]
        mutate: Option<String>,
    },
    /// Print the Bruhat Hasse diagram of the ball as DOT.
    Graph,
}

struct Config {
    group: AffineWeylGroup,
    prime: u64,
    max_length: usize,
    args: ConfigArgs,
}

impl Config {
    fn from_args(args: ConfigArgs) -> Result<Config, CliError> {
        let text = args.lie_type.trim();
        let cartan: CartanType = match (text.len(), args.rank) {
            (1, Some(rank)) => {
                let letter = text.chars().next().unwrap_or('?').to_ascii_uppercase();
                let lie = LieType::from_letter(letter).ok_or_else(|| {
                    CliError::Usage(format!("unknown Lie type {text:?}; expected one of A-G"))
                })?;
                CartanType::new(lie, rank).map_err(|e| CliError::Usage(e.to_string()))?
            }
            (1, None) => {
                return Err(CliError::Usage(
                    "--rank is required unless --type includes it (e.g. A2)".into(),
                ))
            }
            _ => {
                let ct: CartanType = text.to_ascii_uppercase().parse().map_err(
                    |e: affhecke::rootdata::RootDataError| CliError::Usage(e.to_string()),
                )?;
                if args.rank.is_some_and(|r| r != ct.rank()) {
                    return Err(CliError::Usage(format!(
                        "--rank disagrees with --type {text}"
                    )));
                }
                ct
            }
        };
        if !is_prime(args.prime) {
            return Err(CliError::Usage(format!(
                "--prime {} is not a prime",
                args.prime
            )));
        }
        Ok(Config {
            group: AffineWeylGroup::new(RootSystem::new(cartan)),
            prime: args.prime,
            max_length: args.max_length,
            args,
        })
    }

    fn format(&self, allowed: &[Format], default: Format) -> Result<Format, CliError> {
        match self.args.format {
            None => Ok(default),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(CliError::Usage(
                format!("--format {f:?} is not available for this command").to_lowercase(),
            )),
        }
    }

    fn ball(&self) -> Result<Ball, CliError> {
        let path = self
            .args
            .cache
            .as_ref()
            .map(|dir| cache::cache_file(dir, &self.group, self.max_length));
        if let Some(ball) = path
            .as_ref()
            .and_then(|p| cache::load(p, &self.group, self.max_length))
        {
            return Ok(ball);
        }
        let ball = self
            .group
            .enumerate_ball(self.max_length, self.args.max_elements)?;
        if let Some(path) = path {
            cache::store(&path, &self.group, &ball)?;
        }
        Ok(ball)
    }
}

/// Write to stdout; a reader that hangs up early is not an error.
fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::io("<stdout>", e)),
        _ => Ok(()),
    }
}

fn print_json(v: &Value) -> Result<(), CliError> {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    ))
}

fn enumerate(cfg: &Config) -> Result<(), CliError> {
    let format = cfg.format(&[Format::Json, Format::Table], Format::Json)?;
    let ball = cfg.ball()?;
    let g = &cfg.group;
    match format {
        Format::Table => {
            let mut text = String::from("length\tword\tlambda\tfinite\n");
            for (length, shell) in ball.shells.iter().enumerate() {
                for x in shell {
                    let line = format!(
                        "{length}\t{}\t{}\t{}\n",
                        g.reduced_word(x),
                        x.translation(),
                        g.finite_word(x)
                    );
                    text.push_str(&line);
                }
            }
            emit(&text)
        }
        _ => print_json(&json!({
            "type": g.cartan_type().to_string(),
            "max_length": ball.max_length,
            "counts": ball.counts(),
            "total": ball.len(),
            "shells": cache::shells_json(g, &ball),
        })),
    }
}

fn compute(cfg: &Config, expression: &[String]) -> Result<(), CliError> {
    cfg.format(&[Format::Json], Format::Json)?;
    if expression.is_empty() {
        return Err(CliError::Usage(
            "compute needs an expression, e.g. 'len [0,1]'".into(),
        ));
    }
    let value = expr::evaluate(&cfg.group, cfg.prime, &expression.join(" "))?;
    emit(&format!("{value}\n"))
}

fn check(cfg: &Config, suite: &str, mutate: Option<&str>) -> Result<(), CliError> {
    let format = cfg.format(&[Format::Json, Format::Table], Format::Json)?;
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(CliError::Usage)?]
    };
    let rule = match mutate {
        None => DemazureRule::Standard,
        Some("all") => DemazureRule::FlippedDescent,
        Some(i) => DemazureRule::FlippedDescentAt(
            i.parse()
                .ok()
                .filter(|&i| i < cfg.group.num_generators())
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "--mutate expects a generator index or all, got {i:?}"
                    ))
                })?,
        ),
    };
    let mut check_cfg = CheckConfig::new(cfg.group.cartan_type(), cfg.prime, cfg.max_length);
    check_cfg.seed = cfg.args.seed;
    check_cfg.samples = cfg.args.samples;
    check_cfg.element_limit = cfg.args.max_elements;
    check_cfg.rule = rule;

    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite_on(&cfg.group, &check_cfg, s)?);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Table => {
            let mut text = String::new();
            for r in &reports {
                let status = if r.passed() { "ok" } else { "FAILED" };
                text.push_str(&format!(
                    "{:<16}{status:<8}{:>10} instances{:>8} failures{:>10.3}s\n",
                    r.check_name,
                    r.instance_count,
                    r.failure_count,
                    r.elapsed.as_secs_f64()
                ));
            }
            emit(&text)?
        }
        _ if reports.len() == 1 => print_json(&reports[0].to_json())?,
        _ => print_json(&json!({
            "type": cfg.group.cartan_type().to_string(),
            "prime": cfg.prime,
            "max_length": cfg.max_length,
            "passed": failed == 0,
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        }))?,
    }
    if failed > 0 {
        Err(CliError::CheckFailed(failed))
    } else {
        Ok(())
    }
}

fn graph(cfg: &Config) -> Result<(), CliError> {
    cfg.format(&[Format::Dot], Format::Dot)?;
    let ball = cfg.ball()?;
    emit(&graph::hasse_dot(&cfg.group, &ball))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = Config::from_args(cli.config)?;
    match &cli.command {
        Command::Enumerate => enumerate(&cfg),
        Command::Compute { expression } => compute(&cfg, expression),
        Command::Check { suite, mutate } => check(&cfg, suite, mutate.as_deref()),
        Command::Graph => graph(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::CheckFailed(_)) {
                eprintln!("error: {e}");
            }
            e.exit_code()
        }
    }
}
