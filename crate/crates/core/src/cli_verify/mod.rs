//! Configuration, verification suites, reports and table encodings used by
//! the `stab` command-line tool.

mod config;
mod format;
mod suites;

pub use config::{parse_subset, JobConfig};
pub use format::{
    parabolic_artifact, poly_from_json, poly_to_json, poly_to_latex, restriction_artifact, restriction_table_from_json,
    schubert_artifact, OutputFormat, TableArtifact,
};
pub use suites::{run_suite, Context, Failure, Suite, SuiteReport};

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::WeylGroup;
use crate::stable_basis::{diagonal_value, stab_minus_restriction, stab_table, Chamber, Method};
use crate::{Integer, Rational};

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub cartan_type: String,
    pub rank: usize,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}{} seed={}", self.cartan_type, self.rank, self.seed)?;
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAIL" };
            writeln!(f, "  {:<22} {:>4} {:>8} cases {:>4} failures {:>9.3}s", s.name, status, s.cases_run, s.failures.len(), s.wall_time.as_secs_f64())?;
            for fl in &s.failures {
                writeln!(f, "      {}: expected {}, got {}", fl.case, fl.expected, fl.actual)?;
            }
        }
        write!(f, "{}", if self.passed() { "all suites passed" } else { "some suites failed" })
    }
}

/// Runs the configured suites, at most `config.jobs` at a time. Suites that
/// have not started when the time budget runs out are not started at all
/// and the run fails with [`Error::TimeBudgetExceeded`].
pub fn verify(config: &JobConfig) -> Result<VerificationReport> {
    config.validate()?;
    let group = config.group()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::ConfigInvalid(e.to_string()))?;
    let ctx = Context::new(&group, config);
    let start = Instant::now();
    let over_budget = || config.time_budget.is_some_and(|b| start.elapsed() > b);
    let reports: Vec<Option<SuiteReport>> =
        pool.install(|| config.suites.par_iter().map(|&s| if over_budget() { None } else { Some(run_suite(&ctx, s)) }).collect());
    if over_budget() || reports.iter().any(Option::is_none) {
        let budget = config.time_budget.unwrap_or_default();
        return Err(Error::TimeBudgetExceeded(budget.as_secs()));
    }
    Ok(VerificationReport {
        cartan_type: group.root_system().cartan_type().to_string(),
        rank: group.rank(),
        seed: config.seed,
        suites: reports.into_iter().flatten().collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub cartan_type: String,
    pub rank: usize,
    pub order: usize,
    pub chamber: String,
    pub method: String,
    /// Full table by the configured method, when that was requested.
    #[serde(serialize_with = "opt_secs")]
    pub table: Option<Duration>,
    pub diagonal_entries: usize,
    pub random_entries: usize,
    #[serde(serialize_with = "opt_secs")]
    pub sampled: Option<Duration>,
}

fn opt_secs<S: serde::Serializer>(d: &Option<Duration>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&d.as_secs_f64()),
        None => s.serialize_none(),
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}{} |W|={} {} {}", self.cartan_type, self.rank, self.order, self.chamber, self.method)?;
        if let Some(d) = self.table {
            writeln!(f, "  full table: {:.3}s", d.as_secs_f64())?;
        }
        if let Some(d) = self.sampled {
            writeln!(f, "  {} diagonal + {} random closed-form entries: {:.3}s", self.diagonal_entries, self.random_entries, d.as_secs_f64())?;
        }
        Ok(())
    }
}

/// Times a full table build by `method`.
pub fn bench_table(group: &WeylGroup, chamber: Chamber, method: Method) -> Result<Duration> {
    let start = Instant::now();
    stab_table::<Rational>(group, chamber, method)?;
    Ok(start.elapsed())
}

/// Times the minus closed form on every diagonal cell plus `random`
/// seeded off-diagonal cells `(w, y)` with `w < y`. Diagonal values are
/// checked against the diagonal formula. The sum has integer coefficients,
/// so it runs over [`Integer`](crate::Integer).
pub fn bench_sampled_entries(group: &WeylGroup, random: usize, seed: u64) -> Result<Duration> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = group.order();
    let mut cells = Vec::with_capacity(random);
    while cells.len() < random && n > 1 {
        let (w, y) = (group.element(rng.gen_range(0..n)), group.element(rng.gen_range(0..n)));
        if w != y && group.bruhat_leq(w, y) {
            cells.push((w, y));
        }
    }
    let start = Instant::now();
    group.elements().collect::<Vec<_>>().par_iter().try_for_each(|&w| {
        let v = stab_minus_restriction::<Integer>(group, w, group.word(w))?;
        if v != diagonal_value(group, Chamber::Minus, w) {
            return Err(Error::MethodMismatch(format!("diagonal at {}", group.format_element(w))));
        }
        Ok(())
    })?;
    cells.par_iter().try_for_each(|&(w, y)| stab_minus_restriction::<Integer>(group, w, group.word(y)).map(drop))?;
    Ok(start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_all_suites_pass() {
        let config = JobConfig { jobs: 2, ..JobConfig::default() };
        let report = verify(&config).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.suites.len(), Suite::ALL.len());
        assert!(report.suites.iter().all(|s| s.cases_run > 0), "{report}");
    }

    #[test]
    fn reports_are_reproducible() {
        let config = JobConfig { cartan_type: crate::root_system::CartanType::B, suites: vec![Suite::Duality, Suite::ModH2], ..JobConfig::default() };
        let strip = |r: VerificationReport| r.suites.into_iter().map(|s| (s.name, s.cases_run, s.failures)).collect::<Vec<_>>();
        assert_eq!(strip(verify(&config).unwrap()), strip(verify(&config).unwrap()));
    }

    #[test]
    fn bench_runs() {
        let g = JobConfig::default().group().unwrap();
        assert!(bench_sampled_entries(&g, 5, 1).is_ok());
        assert!(bench_table(&g, Chamber::Plus, Method::ClosedForm).is_ok());
    }
}
