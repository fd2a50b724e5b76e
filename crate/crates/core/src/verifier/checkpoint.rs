//! Single-writer checkpoint file: completed work units keyed by unit key,
//! plus the keys still pending when it was written.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::verifier::record::{UnitResult, UnitStatus};
use crate::verifier::report::ConfigEcho;

pub const CHECKPOINT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckpointFile {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub units: BTreeMap<String, UnitResult>,
    /// Unit keys not yet finished at the current allotment: the resumption
    /// frontier.
    pub pending: Vec<String>,
}

impl CheckpointFile {
    pub fn new(config: ConfigEcho) -> Self {
        CheckpointFile {
            schema_version: CHECKPOINT_SCHEMA_VERSION,
            config,
            units: BTreeMap::new(),
            pending: Vec::new(),
        }
    }

    pub fn load(path: &Path, config: &ConfigEcho) -> Result<Option<Self>> {
        let text = match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let file: CheckpointFile = serde_json::from_str(&text)?;
        if file.schema_version != CHECKPOINT_SCHEMA_VERSION || &file.config != config {
            return Err(Error::CheckpointMismatch);
        }
        Ok(Some(file))
    }

    /// The (status, nodes) a run with this allotment would end with, if the
    /// stored result determines it. A unit stored as complete after more
    /// nodes than `allotment` is known to run out, so it is not rerun only
    /// to be overwritten by a worse result.
    pub fn replay(&self, key: &str, allotment: u64) -> Option<(UnitStatus, u64)> {
        if let Some(r) = self.reusable(key, allotment) {
            return Some((r.status, r.nodes));
        }
        self.units
            .get(key)
            .filter(|r| r.status == UnitStatus::Complete)
            .map(|_| (UnitStatus::BudgetExhausted, allotment))
    }

    /// A stored result that a run with this allotment would reproduce.
    pub fn reusable(&self, key: &str, allotment: u64) -> Option<&UnitResult> {
        self.units.get(key).filter(|r| match r.status {
            UnitStatus::Complete => r.nodes <= allotment,
            UnitStatus::BudgetExhausted => r.allotment == allotment,
        })
    }
}

/// Owns the checkpoint path and rate-limits writes.
pub(crate) struct CheckpointWriter {
    path: Option<PathBuf>,
    interval: Duration,
    last: Option<Instant>,
    /// How long the last write took; large checkpoints are written less often.
    cost: Duration,
    pub file: CheckpointFile,
}

impl CheckpointWriter {
    pub fn new(path: Option<PathBuf>, interval: Duration, file: CheckpointFile) -> Self {
        CheckpointWriter {
            path,
            interval,
            last: None,
            cost: Duration::ZERO,
            file,
        }
    }

    pub fn record(&mut self, result: UnitResult) -> Result<()> {
        self.file.pending.retain(|k| k != &result.key);
        self.file.units.insert(result.key.clone(), result);
        let wait = self.interval.max(self.cost * 10);
        if self.last.is_none_or(|t| t.elapsed() >= wait) {
            self.flush()?;
        }
        Ok(())
    }

    /// Writes through a temporary file and a rename, so a killed process
    /// leaves either the old or the new checkpoint.
    pub fn flush(&mut self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let start = Instant::now();
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            serde_json::to_writer(std::io::BufWriter::new(&mut f), &self.file)?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        self.last = Some(Instant::now());
        self.cost = start.elapsed();
        Ok(())
    }
}
