use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupring::bits::MAX_SEARCH_ORDER;
use crate::Budget;

/// Largest group order accepted by the exhaustive-subsets strategy.
pub const EXHAUSTIVE_MAX_ORDER: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Every affine class of subsets, tested for both properties.
    ExhaustiveSubsets,
    /// Cliques of divisor-class Cayley graphs, tested for spectrality.
    CliquePerDivisorSet,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::ExhaustiveSubsets => "exhaustive-subsets",
            Strategy::CliquePerDivisorSet => "clique-per-divisor-set",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" | "exhaustive-subsets" => Ok(Strategy::ExhaustiveSubsets),
            "clique" | "clique-per-divisor-set" => Ok(Strategy::CliquePerDivisorSet),
            _ => Err(Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub n: usize,
    pub strategy: Strategy,
    /// Cardinalities to examine; `None` means `1..=n`.
    pub sizes: Option<Vec<usize>>,
    /// Total node budget, split over the work units.
    pub budget: Budget,
    pub workers: usize,
    /// Shuffles the order in which work units are scheduled. Reports do not
    /// depend on it.
    pub seed: u64,
}

impl CampaignConfig {
    pub fn new(n: usize, strategy: Strategy) -> Self {
        CampaignConfig {
            n,
            strategy,
            sizes: None,
            budget: Budget::UNLIMITED,
            workers: 1,
            seed: 0,
        }
    }

    pub fn with_sizes(mut self, sizes: impl IntoIterator<Item = usize>) -> Self {
        self.sizes = Some(sizes.into_iter().collect());
        self
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroOrder);
        }
        if self.n > MAX_SEARCH_ORDER {
            return Err(Error::OrderTooLarge {
                n: self.n,
                max: MAX_SEARCH_ORDER,
            });
        }
        if self.strategy == Strategy::ExhaustiveSubsets && self.n > EXHAUSTIVE_MAX_ORDER {
            return Err(Error::Config(format!(
                "exhaustive-subsets is limited to n <= {EXHAUSTIVE_MAX_ORDER}, got {}",
                self.n
            )));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        if let Some(sizes) = &self.sizes {
            if sizes.is_empty() {
                return Err(Error::Config("size filter is empty".into()));
            }
            if let Some(&bad) = sizes.iter().find(|&&k| k == 0 || k > self.n) {
                return Err(Error::Config(format!("size {bad} is outside 1..={}", self.n)));
            }
        }
        Ok(())
    }

    /// The wanted sizes, sorted and deduplicated.
    pub fn size_list(&self) -> Vec<usize> {
        let mut v = self.sizes.clone().unwrap_or_else(|| (1..=self.n).collect());
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Parses `1-12`, `4`, or comma-separated mixtures such as `1-3,6,12`.
pub fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size {t:?}")))
        };
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(Error::Parse(format!("empty range {part:?}")));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("no sizes given".into()));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parses a node budget: plain integers, `1e9` style, or `unlimited`.
pub fn parse_budget(s: &str) -> Result<Budget> {
    let s = s.trim().replace('_', "");
    if s.eq_ignore_ascii_case("unlimited") || s.eq_ignore_ascii_case("inf") {
        return Ok(Budget::UNLIMITED);
    }
    if let Ok(v) = s.parse::<u64>() {
        return Ok(Budget(v));
    }
    let err = || Error::Parse(format!("bad budget {s:?}"));
    let (mant, exp) = s.split_once(['e', 'E']).ok_or_else(err)?;
    let exp: u32 = exp.parse().map_err(|_| err())?;
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if exp < frac.len() as u32 {
        return Err(err());
    }
    let digits: u64 = format!("{int}{frac}").parse().map_err(|_| err())?;
    10u64
        .checked_pow(exp - frac.len() as u32)
        .and_then(|p| digits.checked_mul(p))
        .map(Budget)
        .ok_or_else(err)
}

/// Environment variable that overrides the campaign budget.
pub const BUDGET_ENV: &str = "CYCLOTILE_BUDGET";

/// Execution controls that do not affect report contents.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub checkpoint: Option<PathBuf>,
    /// Minimum time between checkpoint writes. Checkpoints are always
    /// written at the end of every round.
    pub checkpoint_interval: Duration,
    /// Stop after this many freshly computed work units and return
    /// [`Error::Interrupted`], leaving the rest to a resumed run.
    pub stop_after_units: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            checkpoint: None,
            checkpoint_interval: Duration::from_secs(2),
            stop_after_units: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_sizes("1-4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_sizes("6, 1-2,6").unwrap(), vec![1, 2, 6]);
        assert!(parse_sizes("4-2").is_err());
        assert!(parse_sizes("").is_err());
        assert!(parse_sizes("a").is_err());
    }

    #[test]
    fn budgets() {
        assert_eq!(parse_budget("1000").unwrap(), Budget(1000));
        assert_eq!(parse_budget("10e9").unwrap(), Budget(10_000_000_000));
        assert_eq!(parse_budget("2.5e3").unwrap(), Budget(2500));
        assert_eq!(parse_budget("1_000").unwrap(), Budget(1000));
        assert_eq!(parse_budget("unlimited").unwrap(), Budget::UNLIMITED);
        assert!(parse_budget("1e30").is_err());
        assert!(parse_budget("1.25e1").is_err());
    }

    #[test]
    fn validation() {
        assert!(CampaignConfig::new(30, Strategy::ExhaustiveSubsets).validate().is_ok());
        assert!(CampaignConfig::new(31, Strategy::ExhaustiveSubsets).validate().is_err());
        assert!(CampaignConfig::new(60, Strategy::CliquePerDivisorSet)
            .validate()
            .is_ok());
        let bad = CampaignConfig::new(12, Strategy::CliquePerDivisorSet).with_sizes([13]);
        assert!(bad.validate().is_err());
        let bad = CampaignConfig::new(12, Strategy::CliquePerDivisorSet).with_workers(0);
        assert!(bad.validate().is_err());
    }
}
