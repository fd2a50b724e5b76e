use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize};

use crate::groupring::CyclicMultiset;
use crate::tiling::CaseLabel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    /// Spectral with a verified tiling complement.
    SpectralTile,
    /// Tiles but has no spectrum. Only the exhaustive strategy looks for these.
    TileNotSpectral,
    /// Spectral, and both the pruned and the unpruned complement searches
    /// finished without a complement.
    Failure,
}

/// The complement searches run on a spectral set that seemed not to tile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureTranscript {
    pub pruned_nodes: u64,
    pub unpruned_nodes: u64,
    pub size_divides_n: bool,
    pub t1: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignRecord {
    pub set: CyclicMultiset,
    pub size: usize,
    #[serde(deserialize_with = "deserialize_case")]
    pub case: Option<CaseLabel>,
    pub status: RecordStatus,
    pub spectrum: Option<CyclicMultiset>,
    pub zero_set: Vec<usize>,
    pub complement: Option<CyclicMultiset>,
    pub t1: bool,
    pub t2: bool,
    /// Nodes spent on the spectrum and complement searches for this set.
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<FailureTranscript>,
}

impl CampaignRecord {
    pub fn spectral(&self) -> bool {
        self.spectrum.is_some()
    }

    pub fn tile(&self) -> bool {
        self.complement.is_some()
    }
}

fn deserialize_case<'de, D: Deserializer<'de>>(d: D) -> Result<Option<CaseLabel>, D::Error> {
    let s: Option<String> = Option::deserialize(d)?;
    match s {
        None => Ok(None),
        Some(s) => CaseLabel::ALL
            .iter()
            .find(|c| c.as_str() == s)
            .copied()
            .map(Some)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown case label {s:?}"))),
    }
}

/// Per-size tallies over the examined affine classes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCounts {
    pub examined: u64,
    pub spectral: u64,
    pub tiles: u64,
    /// Classes satisfying both (T1) and (T2).
    pub t1t2: u64,
}

impl SizeCounts {
    pub fn add(&mut self, o: &SizeCounts) {
        self.examined += o.examined;
        self.spectral += o.spectral;
        self.tiles += o.tiles;
        self.t1t2 += o.t1t2;
    }
}

/// Violations of the checked implications, summed over a unit or a campaign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tallies {
    pub failures: u64,
    pub converse_mismatches: u64,
    pub duality_violations: u64,
    pub certificate_errors: u64,
    pub t1_violations: u64,
    pub t1t2_without_tile: u64,
}

impl Tallies {
    pub fn add(&mut self, o: &Tallies) {
        self.failures += o.failures;
        self.converse_mismatches += o.converse_mismatches;
        self.duality_violations += o.duality_violations;
        self.certificate_errors += o.certificate_errors;
        self.t1_violations += o.t1_violations;
        self.t1t2_without_tile += o.t1t2_without_tile;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitStatus {
    Complete,
    BudgetExhausted,
}

/// Outcome of one work unit at a given node allotment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitResult {
    pub key: String,
    pub allotment: u64,
    pub status: UnitStatus,
    pub nodes: u64,
    pub sizes: Vec<usize>,
    pub records: Vec<CampaignRecord>,
    pub counts: BTreeMap<usize, SizeCounts>,
    pub tallies: Tallies,
}

/// Sorted element lists, shorter sets first.
pub(crate) fn set_order(a: &CyclicMultiset, b: &CyclicMultiset) -> std::cmp::Ordering {
    a.total().cmp(&b.total()).then_with(|| a.elements().cmp(&b.elements()))
}
