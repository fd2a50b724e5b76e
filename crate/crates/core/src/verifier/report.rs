use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::Result;
use crate::verifier::classify::ClassificationTable;
use crate::verifier::config::{CampaignConfig, Strategy};
use crate::verifier::record::{CampaignRecord, SizeCounts, Tallies};
use crate::Budget;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// The parts of the configuration that determine report contents. The
/// worker count is deliberately absent: it only changes the schedule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub n: usize,
    pub strategy: Strategy,
    pub sizes: Vec<usize>,
    pub budget: Budget,
    pub seed: u64,
}

impl From<&CampaignConfig> for ConfigEcho {
    fn from(cfg: &CampaignConfig) -> Self {
        ConfigEcho {
            n: cfg.n,
            strategy: cfg.strategy,
            sizes: cfg.size_list(),
            budget: cfg.budget,
            seed: cfg.seed,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Affine classes examined (each examined once, in one unit).
    pub classes_examined: u64,
    pub spectral_classes: u64,
    pub tile_classes: u64,
    pub t1t2_classes: u64,
    #[serde(flatten)]
    pub tallies: Tallies,
    pub structure_violations: u64,
    /// Sizes whose every work unit finished within its allotment.
    pub sizes_exhaustive: Vec<usize>,
    pub sizes_budget_limited: Vec<usize>,
    pub nodes_total: u64,
    pub units_total: usize,
    pub units_exhausted: usize,
    pub aborted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub size: usize,
    pub exhaustive: bool,
    #[serde(flatten)]
    pub counts: SizeCounts,
}

/// A work unit that ran out of nodes at its final allotment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustedRegion {
    pub unit: String,
    pub sizes: Vec<usize>,
    pub allotment: u64,
}

/// Everything that depends on how the run was executed rather than on what
/// it computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Execution {
    pub wall_seconds: f64,
    pub workers: usize,
    pub units_resumed: usize,
    pub rounds: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub sizes: Vec<SizeSummary>,
    pub records: Vec<CampaignRecord>,
    pub budget_exhausted: Vec<ExhaustedRegion>,
    pub classification: Option<ClassificationTable>,
    pub execution: Execution,
}

impl CampaignReport {
    /// Pretty JSON with one array element per line, which keeps reports with
    /// hundreds of thousands of records readable and diffable.
    pub fn to_json(&self) -> Result<String> {
        let mut out = String::from("{\n");
        let mut field = |name: &str, value: String, last: bool| {
            out.push_str(&format!("  \"{name}\": {value}{}\n", if last { "" } else { "," }));
        };
        field("schema_version", self.schema_version.to_string(), false);
        field("config", serde_json::to_string(&self.config)?, false);
        field("summary", serde_json::to_string(&self.summary)?, false);
        field("sizes", json_lines(&self.sizes)?, false);
        field("records", json_lines(&self.records)?, false);
        field("budget_exhausted", json_lines(&self.budget_exhausted)?, false);
        field("classification", serde_json::to_string(&self.classification)?, false);
        field("execution", serde_json::to_string(&self.execution)?, true);
        out.push_str("}\n");
        Ok(out)
    }

    /// The report as JSON with the `execution` block removed: identical for
    /// identical configurations.
    pub fn deterministic_json(&self) -> Result<String> {
        strip_execution(&self.to_json()?)
    }

    pub fn spectral_records(&self) -> impl Iterator<Item = &CampaignRecord> {
        self.records.iter().filter(|r| r.spectral())
    }

    pub fn has_failures(&self) -> bool {
        self.summary.tallies.failures > 0
    }

    /// One row per size: counts and whether the size was covered exhaustively.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "size", "exhaustive", "examined", "spectral", "tiles", "t1t2"])
            .map_err(csv_err)?;
        for s in &self.sizes {
            w.write_record([
                self.config.n.to_string(),
                s.size.to_string(),
                s.exhaustive.to_string(),
                s.counts.examined.to_string(),
                s.counts.spectral.to_string(),
                s.counts.tiles.to_string(),
                s.counts.t1t2.to_string(),
            ])
            .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Io(std::io::Error::other(e))
}

fn json_lines<T: Serialize>(items: &[T]) -> Result<String> {
    if items.is_empty() {
        return Ok("[]".into());
    }
    let lines = items
        .iter()
        .map(|x| serde_json::to_string(x).map(|s| format!("    {s}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(format!("[\n{}\n  ]", lines.join(",\n")))
}

/// Removes the top-level `execution` field from a report's JSON text and
/// re-emits the remaining fields, sorted by name, without parsing their
/// values.
pub fn strip_execution(json: &str) -> Result<String> {
    let mut fields: BTreeMap<String, Box<RawValue>> = serde_json::from_str(json)?;
    fields.remove("execution");
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| Ok(format!("{}: {}", serde_json::to_string(k)?, v.get())))
        .collect::<Result<_>>()?;
    Ok(format!("{{\n{}\n}}\n", body.join(",\n")))
}

pub(crate) fn size_table(sizes: &[usize], counts: &BTreeMap<usize, SizeCounts>, limited: &[usize]) -> Vec<SizeSummary> {
    sizes
        .iter()
        .map(|&k| SizeSummary {
            size: k,
            exhaustive: !limited.contains(&k),
            counts: counts.get(&k).copied().unwrap_or_default(),
        })
        .collect()
}
