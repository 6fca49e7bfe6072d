use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stab_core::cli_verify::{
    bench_sampled_entries, bench_table, parabolic_artifact, restriction_artifact, schubert_artifact, verify, BenchReport, JobConfig,
};
use stab_core::parabolic::{parabolic_table, RepresentativePolicy, Route};
use stab_core::schubert_limit::SchubertRestrictionTable;
use stab_core::stable_basis::stab_table;
use stab_core::{Error, Rational};

const ORIENTATION: &str = "Tables are indexed (w, y) and vanish unless w <= y. \
In the minus chamber row w is the label and column y the point (stab_-(w)|_y); \
in the plus chamber row w is the point and column y the label (stab_+(y)|_w). \
The JSON header repeats this for each table.";

#[derive(Parser)]
#[command(name = "stab", version, about = "Stable-basis restriction tables for T*(G/B) and T*(G/P)", after_help = ORIENTATION)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a full restriction table.
    Table(Common),
    /// Run verification suites and report counterexamples.
    Verify(Common),
    /// Emit the equivariant Schubert restriction table.
    Billey(Common),
    /// Emit the T*(G/P) table for --subset.
    Parabolic(Common),
    /// Time table construction.
    Bench {
        #[command(flatten)]
        common: Common,
        /// Also time every diagonal cell plus this many random cells.
        #[arg(long)]
        entries: Option<usize>,
        /// Skip the full-table timing.
        #[arg(long)]
        skip_table: bool,
    },
}

#[derive(Args)]
struct Common {
    /// key=value file; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    cartan_type: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// One-based simple roots generating W_P, e.g. `2` or `1,3`.
    #[arg(long)]
    subset: Option<String>,
    /// plus or minus.
    #[arg(long)]
    chamber: Option<String>,
    /// closed_form, recursion or rmatrix.
    #[arg(long)]
    method: Option<String>,
    /// json, csv or latex.
    #[arg(long)]
    format: Option<String>,
    /// Output file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated suite names, or `all`.
    #[arg(long)]
    suites: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Upper bound on parallel workers.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, env = "STAB_MAX_GROUP_ORDER")]
    max_group_order: Option<u64>,
    #[arg(long)]
    time_budget_seconds: Option<f64>,
}

impl Common {
    fn resolve(&self) -> Result<JobConfig, Error> {
        let mut c = JobConfig::default();
        if let Some(path) = &self.config {
            c.apply_file(path)?;
        }
        let flags: [(&str, Option<String>); 12] = [
            ("type", self.cartan_type.clone()),
            ("rank", self.rank.map(|v| v.to_string())),
            ("subset", self.subset.clone()),
            ("chamber", self.chamber.clone()),
            ("method", self.method.clone()),
            ("format", self.format.clone()),
            ("out", self.out.as_ref().map(|p| p.display().to_string())),
            ("suites", self.suites.clone()),
            ("seed", self.seed.map(|v| v.to_string())),
            ("jobs", self.jobs.map(|v| v.to_string())),
            ("max_group_order", self.max_group_order.map(|v| v.to_string())),
            ("time_budget_seconds", self.time_budget_seconds.map(|v| v.to_string())),
        ];
        for (k, v) in flags {
            if let Some(v) = v {
                c.set(k, &v)?;
            }
        }
        c.validate()?;
        Ok(c)
    }
}

fn emit(config: &JobConfig, text: &str) -> Result<(), Error> {
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn is_config_error(e: &Error) -> bool {
    matches!(
        e,
        Error::ConfigInvalid(_)
            | Error::UnknownType(_)
            | Error::RankOutOfRange { .. }
            | Error::IndexOutOfRange { .. }
            | Error::GroupTooLarge { .. }
            | Error::Parse(_)
    )
}

fn run(command: Command) -> Result<bool, Error> {
    match command {
        Command::Table(common) => {
            let c = common.resolve()?;
            let g = c.group()?;
            let t = stab_table::<Rational>(&g, c.chamber, c.method)?;
            emit(&c, &restriction_artifact(&g, &t).render(c.format))?;
            Ok(true)
        }
        Command::Billey(common) => {
            let c = common.resolve()?;
            let g = c.group()?;
            let t = SchubertRestrictionTable::<Rational>::build(&g)?;
            emit(&c, &schubert_artifact(&g, &t).render(c.format))?;
            Ok(true)
        }
        Command::Parabolic(common) => {
            let c = common.resolve()?;
            let subset = c.subset.clone().ok_or_else(|| Error::ConfigInvalid("parabolic needs --subset".into()))?;
            let g = c.group()?;
            let cs = g.coset_space(&subset)?;
            let borel = stab_table::<Rational>(&g, c.chamber, c.method)?;
            let t = parabolic_table(&g, &cs, &borel, Route::A1, &RepresentativePolicy::Minimal)?;
            emit(&c, &parabolic_artifact(&g, &cs, &t).render(c.format))?;
            Ok(true)
        }
        Command::Verify(common) => {
            let c = common.resolve()?;
            let report = verify(&c)?;
            println!("{report}");
            if let Some(path) = &c.out {
                std::fs::write(path, report.to_json()).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?;
            }
            Ok(report.passed())
        }
        Command::Bench { common, entries, skip_table } => {
            let c = common.resolve()?;
            let g = c.group()?;
            let table = if skip_table { None } else { Some(bench_table(&g, c.chamber, c.method)?) };
            let sampled = entries.map(|n| bench_sampled_entries(&g, n, c.seed)).transpose()?;
            let report = BenchReport {
                cartan_type: c.cartan_type.to_string(),
                rank: c.rank,
                order: g.order(),
                chamber: c.chamber.to_string(),
                method: c.method.to_string(),
                table,
                diagonal_entries: if sampled.is_some() { g.order() } else { 0 },
                random_entries: entries.unwrap_or(0),
                sampled,
            };
            print!("{report}");
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_config_error(&e) { 2 } else { 1 })
        }
    }
}
