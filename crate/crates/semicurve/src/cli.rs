use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::{self, FamilyCase};
use crate::dto::{CommandResult, Payload};
use crate::error::{CliError, Result};
use crate::spec::parse_semigroup;
use crate::{regress, render, scan};

#[derive(Debug, Parser)]
#[command(name = "sgp", version, about = "Numerical semigroups, order bounds, Weierstrass obstructions and monomial curve deformations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants e, c, d, c', d', l, s~, g, tau.
    Profile { spec: String },
    /// nu(s) with the A/B/C/D counts.
    Nu {
        spec: String,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Brute-force s_m and its predicted value or bounds.
    Sm { spec: String },
    /// Order bound d_ORD(C_k).
    Ordbound {
        spec: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Checks s_m >= c + d - e over every semigroup up to a genus.
    ConjectureScan {
        #[arg(long)]
        genus_max: u32,
        /// JSON-lines output; relative paths go under $SEMICURVE_SCAN_DIR.
        #[arg(long)]
        jsonl: Option<PathBuf>,
        /// Skip semigroups already in the output and append.
        #[arg(long)]
        resume: bool,
    },
    /// Sumset test #H_m <= (2m - 1)(g - 1).
    Buchweitz {
        spec: String,
        #[arg(long, default_value_t = 2)]
        mmax: u32,
    },
    /// Symmetric double of genus G.
    Torres {
        spec: String,
        #[arg(long)]
        genus: u32,
    },
    /// gamma-hyperelliptic reduction.
    Reduce {
        spec: String,
        #[arg(long)]
        gamma: u32,
    },
    /// Counts (and optionally lists) semigroups by genus.
    Enumerate {
        #[arg(long)]
        genus_max: u32,
        #[arg(long)]
        list: bool,
    },
    /// Monomial curve computations.
    Curve {
        #[command(subcommand)]
        verb: CurveVerb,
    },
    /// Reproduces the published worked examples.
    PaperRegress,
}

#[derive(Debug, Subcommand)]
pub enum CurveVerb {
    /// Binomial generators, degrees, structure constants, relations, J(1).
    Ideal { spec: String },
    /// Graded T1 table.
    T1 {
        spec: String,
        /// Table layout (the default text output).
        #[arg(long)]
        table: bool,
    },
    /// Explicit deformation family.
    Deform {
        spec: String,
        #[arg(long, value_enum, default_value_t = FamilyCase::Auto)]
        case: FamilyCase,
        /// Check the flatness identities exactly.
        #[arg(long)]
        verify: bool,
        /// Fibre scan over F_p, e.g. `p=31,u=1`; repeatable.
        #[arg(long = "ff-scan", value_parser = parse_scan)]
        ff_scan: Vec<(u64, i64)>,
    },
}

fn parse_scan(s: &str) -> std::result::Result<(u64, i64), String> {
    let mut p = None;
    let mut u = 1;
    for part in s.split(',') {
        match part.split_once('=') {
            Some(("p", v)) => p = Some(v.parse::<u64>().map_err(|e| format!("p: {e}"))?),
            Some(("u", v)) => u = v.parse::<i64>().map_err(|e| format!("u: {e}"))?,
            _ => return Err(format!("expected p=<prime>[,u=<value>], got {part:?}")),
        }
    }
    Ok((p.ok_or("missing p=")?, u))
}

pub fn execute(cli: &Cli) -> Result<CommandResult> {
    let jobs = cli.jobs.max(1);
    let (command, ok, payload) = match &cli.command {
        Command::Profile { spec } => ("profile", true, Payload::Profile(commands::profile(&parse_semigroup(spec)?))),
        Command::Nu { spec, s } => ("nu", true, Payload::Nu(commands::nu(&parse_semigroup(spec)?, *s)?)),
        Command::Sm { spec } => {
            let dto = commands::sm(&parse_semigroup(spec)?);
            ("sm", dto.consistent != Some(false), Payload::Sm(dto))
        }
        Command::Ordbound { spec, k } => ("ordbound", true, Payload::OrdBound(commands::ordbound(&parse_semigroup(spec)?, *k)?)),
        Command::ConjectureScan { genus_max, jsonl, resume } => {
            let dto = scan::conjecture_scan(*genus_max, jsonl.as_deref(), *resume, jobs)?;
            let ok = dto.counterexamples.is_empty() && dto.prediction_violations.is_empty();
            ("conjecture-scan", ok, Payload::ConjectureScan(dto))
        }
        Command::Buchweitz { spec, mmax } => ("buchweitz", true, Payload::Obstruction(commands::buchweitz(&parse_semigroup(spec)?, *mmax)?)),
        Command::Torres { spec, genus } => ("torres", true, Payload::Torres(commands::torres(&parse_semigroup(spec)?, *genus)?)),
        Command::Reduce { spec, gamma } => ("reduce", true, Payload::Reduce(commands::reduce(&parse_semigroup(spec)?, *gamma))),
        Command::Enumerate { genus_max, list } => ("enumerate", true, Payload::Enumerate(commands::enumerate(*genus_max, *list))),
        Command::Curve { verb } => match verb {
            CurveVerb::Ideal { spec } => ("curve ideal", true, Payload::Ideal(commands::ideal(&parse_semigroup(spec)?)?)),
            CurveVerb::T1 { spec, .. } => ("curve t1", true, Payload::T1(commands::t1(&parse_semigroup(spec)?)?)),
            CurveVerb::Deform { spec, case, verify, ff_scan } => {
                let dto = commands::deform(&parse_semigroup(spec)?, *case, *verify, ff_scan, jobs)?;
                let scans_ok = *case == FamilyCase::Remark || dto.scans.iter().all(|s| s.singular_points.is_empty());
                ("curve deform", dto.flat != Some(false) && scans_ok, Payload::Family(dto))
            }
        },
        Command::PaperRegress => {
            let dto = regress::run()?;
            ("paper-regress", dto.fixtures.iter().all(|f| f.passed), Payload::Regress(dto))
        }
    };
    Ok(CommandResult {
        command: command.into(),
        ok,
        payload,
    })
}

/// Parses `argv`, runs the command and returns its output and exit status.
pub fn run<I, T>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.render().to_string(), code);
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&r).expect("payloads serialize") + "\n"
            } else {
                render::text(&r)
            };
            (out, if r.ok { 0 } else { 1 })
        }
        Err(e) => {
            let usage = matches!(e, CliError::Spec { .. } | CliError::Usage(_));
            (format!("error: {e}\n"), if usage { 2 } else { 1 })
        }
    }
}
