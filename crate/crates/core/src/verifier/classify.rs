//! Grouping campaign records by the case of `|S|` and checking the
//! structural conclusions attached to some cases.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groupring::project;
use crate::tiling::cases::{case_of_size, CaseLabel, P2qrShape};
use crate::verifier::record::CampaignRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSummary {
    pub case: String,
    pub records: u64,
    pub spectral: u64,
    pub tiles: u64,
    /// Records on which a structural conclusion was checked.
    pub checked: u64,
    /// Canonical sets contradicting a checked conclusion.
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTable {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub cases: Vec<CaseSummary>,
    pub structure_violations: u64,
}

/// Whether `S` maps onto every residue mod `m` exactly once.
fn complete_residues(s: &crate::CyclicMultiset, m: usize) -> bool {
    s.total() == m as u64 && project(s, m).is_ok_and(|p| p.mults().iter().all(|&c| c == 1))
}

/// Checks on spectral records:
/// - `|S| = p²q` (or `p²r`): `S` is a complete residue system mod `|S|`;
/// - `|S| = qr`: `S` is a complete residue system mod `qr`;
/// - `|S| ≤ 5`: `S` tiles.
pub fn classify_records(shape: &P2qrShape, records: &[CampaignRecord]) -> ClassificationTable {
    let P2qrShape { p, q, r } = *shape;
    let mut cases: Vec<CaseSummary> = CaseLabel::ALL
        .iter()
        .map(|c| CaseSummary {
            case: c.as_str().to_string(),
            records: 0,
            spectral: 0,
            tiles: 0,
            checked: 0,
            violations: Vec::new(),
        })
        .collect();
    for rec in records {
        let label = case_of_size(shape, rec.size);
        let idx = CaseLabel::ALL.iter().position(|&c| c == label).expect("listed");
        let row = &mut cases[idx];
        row.records += 1;
        row.spectral += rec.spectral() as u64;
        row.tiles += rec.tile() as u64;
        if !rec.spectral() {
            continue;
        }
        let mut conclusions = Vec::new();
        for m in [p * p * q, p * p * r, q * r] {
            if rec.size == m {
                conclusions.push(complete_residues(&rec.set, m));
            }
        }
        if rec.size <= 5 {
            conclusions.push(rec.tile());
        }
        if !conclusions.is_empty() {
            row.checked += 1;
            if conclusions.contains(&false) {
                row.violations.push(rec.set.to_string());
            }
        }
    }
    let structure_violations = cases.iter().map(|c| c.violations.len() as u64).sum();
    cases.retain(|c| c.records > 0);
    ClassificationTable {
        p,
        q,
        r,
        cases,
        structure_violations,
    }
}

/// Classifies a finished report; fails unless its group order is `p²qr`.
pub fn classify_report(report: &crate::verifier::CampaignReport) -> Result<ClassificationTable> {
    let shape = P2qrShape::of(report.config.n)?;
    Ok(classify_records(&shape, &report.records))
}
