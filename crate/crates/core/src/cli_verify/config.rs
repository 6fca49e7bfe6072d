use std::path::{Path, PathBuf};
use std::time::Duration;

use super::format::OutputFormat;
use super::suites::Suite;
use crate::error::{Error, Result};
use crate::root_system::{CartanType, CosetSpace, RootSystem, WeylGroup, DEFAULT_MAX_GROUP_ORDER};
use crate::stable_basis::{Chamber, Method};

/// Everything a run needs. Built from defaults, then a `key=value` file,
/// then command-line flags, each layer overriding the previous one.
#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub cartan_type: CartanType,
    pub rank: usize,
    /// Zero-based simple-root indices of `I`; `None` means "not given".
    pub subset: Option<Vec<usize>>,
    pub chamber: Chamber,
    pub method: Method,
    pub format: OutputFormat,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub jobs: usize,
    pub max_group_order: u64,
    pub time_budget: Option<Duration>,
    pub out: Option<PathBuf>,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            cartan_type: CartanType::A,
            rank: 2,
            subset: None,
            chamber: Chamber::Minus,
            method: Method::Recursion,
            format: OutputFormat::Json,
            suites: Suite::ALL.to_vec(),
            seed: 0,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
            time_budget: None,
            out: None,
        }
    }
}

fn invalid(key: &str, value: &str) -> Error {
    Error::ConfigInvalid(format!("bad value `{value}` for `{key}`"))
}

/// Parses `1,3` (one-based) into zero-based indices. `none` or an empty
/// string is the empty subset.
pub fn parse_subset(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.is_empty() || t.eq_ignore_ascii_case("none") {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in t.split(',') {
        let i: usize = part.trim().parse().map_err(|_| invalid("subset", text))?;
        if i == 0 {
            return Err(invalid("subset", text));
        }
        out.push(i - 1);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl JobConfig {
    /// Sets one option by its config-file key. Dashes and underscores are
    /// interchangeable.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = value.trim();
        match key.trim().replace('-', "_").as_str() {
            "type" => {
                self.cartan_type = v.parse().map_err(|e: Error| Error::ConfigInvalid(e.to_string()))?;
            }
            "rank" => self.rank = v.parse().map_err(|_| invalid(key, v))?,
            "subset" => self.subset = Some(parse_subset(v)?),
            "chamber" => self.chamber = v.parse()?,
            "method" => self.method = v.parse()?,
            "format" => self.format = v.parse()?,
            "suites" => self.suites = Suite::parse_list(v)?,
            "seed" => self.seed = v.parse().map_err(|_| invalid(key, v))?,
            "jobs" => {
                self.jobs = v.parse().ok().filter(|&j| j > 0).ok_or_else(|| invalid(key, v))?;
            }
            "max_group_order" => self.max_group_order = v.parse().map_err(|_| invalid(key, v))?,
            "time_budget_seconds" => {
                let secs: f64 = v.parse().ok().filter(|s: &f64| *s > 0.0).ok_or_else(|| invalid(key, v))?;
                self.time_budget = Some(Duration::from_secs_f64(secs));
            }
            "out" => self.out = Some(PathBuf::from(v)),
            other => return Err(Error::ConfigInvalid(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Applies `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::ConfigInvalid(format!("line {}: expected key=value", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?;
        self.apply_text(&text)
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        RootSystem::new(self.cartan_type, self.rank).map_err(|e| match e {
            Error::UnknownType(_) | Error::RankOutOfRange { .. } => Error::ConfigInvalid(e.to_string()),
            other => other,
        })
    }

    pub fn group(&self) -> Result<WeylGroup> {
        WeylGroup::new(self.root_system()?, self.max_group_order)
    }

    pub fn validate(&self) -> Result<()> {
        self.root_system()?;
        if let Some(s) = &self.subset {
            if let Some(&i) = s.iter().find(|&&i| i >= self.rank) {
                return Err(Error::ConfigInvalid(format!("subset index {} exceeds rank {}", i + 1, self.rank)));
            }
        }
        if self.suites.is_empty() {
            return Err(Error::ConfigInvalid("no suites selected".into()));
        }
        Ok(())
    }

    /// The explicit subset, or else every maximal parabolic plus `∅` and `Δ`.
    pub fn coset_spaces(&self, group: &WeylGroup) -> Result<Vec<CosetSpace>> {
        if let Some(s) = &self.subset {
            return Ok(vec![group.coset_space(s)?]);
        }
        let n = group.rank();
        let mut subsets: Vec<Vec<usize>> = (0..n).map(|j| (0..n).filter(|&i| i != j).collect()).collect();
        subsets.push(Vec::new());
        subsets.push((0..n).collect());
        subsets.sort();
        subsets.dedup();
        subsets.iter().map(|s| group.coset_space(s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let mut c = JobConfig::default();
        c.apply_text("# run\ntype = B\nrank=3\nsubset=1,3\nsuites = duality, support\nseed=9\n").unwrap();
        assert_eq!((c.cartan_type, c.rank, c.seed), (CartanType::B, 3, 9));
        assert_eq!(c.subset, Some(vec![0, 2]));
        assert_eq!(c.suites, vec![Suite::Duality, Suite::Support]);
        c.set("rank", "2").unwrap();
        c.set("max-group-order", "4").unwrap();
        assert_eq!((c.rank, c.max_group_order), (2, 4));
        assert!(c.validate().is_err());
        assert_eq!(c.group().unwrap_err(), Error::GroupTooLarge { order: 8, limit: 4 });
    }

    #[test]
    fn rejects_bad_input() {
        let mut c = JobConfig::default();
        assert!(matches!(c.set("type", "H"), Err(Error::ConfigInvalid(_))));
        assert!(c.set("colour", "red").is_err());
        assert!(c.set("jobs", "0").is_err());
        assert!(c.apply_text("rank 3").is_err());
        assert!(parse_subset("0").is_err());
        assert_eq!(parse_subset("none").unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn default_parabolics() {
        let c = JobConfig { rank: 3, ..JobConfig::default() };
        let g = c.group().unwrap();
        let subsets: Vec<Vec<usize>> = c.coset_spaces(&g).unwrap().iter().map(|cs| cs.subset().to_vec()).collect();
        assert_eq!(subsets, vec![vec![], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1, 2]]);
    }
}
