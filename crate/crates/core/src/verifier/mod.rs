//! Enumerate-and-verify campaigns over the affine classes of subsets of
//! `Z_n`.
//!
//! A campaign is cut into work units, each an orderly walk below a short
//! canonical prefix. Units get equal shares of the node budget; units that
//! run out are retried in later rounds with the budget left over by the
//! finished ones. Every unit is a pure function of its allotment, so the
//! report does not depend on the worker count, the scheduling seed, or on
//! how often the run was interrupted and resumed.

pub mod checkpoint;
pub mod classify;
pub mod config;
pub(crate) mod plan;
pub mod record;
pub mod report;
pub(crate) mod unit;

pub use checkpoint::CheckpointFile;
pub use classify::{classify_records, classify_report, CaseSummary, ClassificationTable};
pub use config::{parse_budget, parse_sizes, CampaignConfig, RunOptions, Strategy, BUDGET_ENV};
pub use record::{CampaignRecord, FailureTranscript, RecordStatus, SizeCounts, Tallies, UnitStatus};
pub use report::{strip_execution, CampaignReport, ConfigEcho, Execution, ExhaustedRegion, Summary};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupring::affine::AffineTables;
use crate::groupring::CyclicGroupCtx;
use crate::tiling::cases::P2qrShape;
use checkpoint::CheckpointWriter;
use record::{set_order, UnitResult};
use unit::{run_unit, Shared};

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    run_campaign_with(cfg, &RunOptions::default())
}

pub fn run_campaign_with(cfg: &CampaignConfig, opts: &RunOptions) -> Result<CampaignReport> {
    cfg.validate()?;
    let started = Instant::now();
    let ctx = CyclicGroupCtx::new(cfg.n)?;
    let tables = AffineTables::new(&ctx);
    let plan = plan::build_plan(cfg, &ctx, &tables);
    let shared = Shared {
        cfg: cfg.clone(),
        shape: P2qrShape::of(cfg.n).ok(),
        ctx,
        tables,
        plan,
    };
    let echo = ConfigEcho::from(cfg);
    let loaded = match &opts.checkpoint {
        Some(path) => CheckpointFile::load(path, &echo)?,
        None => None,
    };
    let writer = Mutex::new(CheckpointWriter::new(
        opts.checkpoint.clone(),
        opts.checkpoint_interval,
        loaded.unwrap_or_else(|| CheckpointFile::new(echo.clone())),
    ));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;

    let units = &shared.plan.units;
    let total_budget = cfg.budget.nodes();
    // (status, nodes) of the latest result of every unit
    let mut latest: Vec<Option<(UnitStatus, u64)>> = vec![None; units.len()];
    let mut pending: Vec<usize> = (0..units.len()).collect();
    let mut allotment = total_budget / units.len().max(1) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let fresh = AtomicUsize::new(0);
    let resumed = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let abort = AtomicBool::new(false);
    let mut rounds = 0;

    loop {
        rounds += 1;
        {
            let mut w = writer.lock().expect("checkpoint lock");
            w.file.pending = pending.iter().map(|&i| units[i].key.clone()).collect();
        }
        let mut order = pending.clone();
        order.shuffle(&mut rng);
        let round: Vec<(usize, Option<(UnitStatus, u64)>)> = pool.install(|| {
            order
                .par_iter()
                .map(|&i| {
                    let spec = &units[i];
                    let stored = writer
                        .lock()
                        .expect("checkpoint lock")
                        .file
                        .replay(&spec.key, allotment);
                    if let Some(done) = stored {
                        resumed.fetch_add(1, Ordering::Relaxed);
                        return Ok((i, Some(done)));
                    }
                    if stop.load(Ordering::SeqCst) || abort.load(Ordering::SeqCst) {
                        return Ok((i, None));
                    }
                    let r = run_unit(&shared, spec, allotment);
                    if r.tallies.failures > 0 {
                        abort.store(true, Ordering::SeqCst);
                    }
                    let done = (r.status, r.nodes);
                    writer.lock().expect("checkpoint lock").record(r)?;
                    let count = fresh.fetch_add(1, Ordering::SeqCst) + 1;
                    if opts.stop_after_units.is_some_and(|limit| count >= limit) {
                        stop.store(true, Ordering::SeqCst);
                    }
                    Ok((i, Some(done)))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let mut skipped = false;
        for (i, r) in round {
            match r {
                Some(r) => latest[i] = Some(r),
                None => skipped = true,
            }
        }
        writer.lock().expect("checkpoint lock").flush()?;
        if abort.load(Ordering::SeqCst) {
            break;
        }
        if skipped {
            return Err(Error::Interrupted);
        }
        let exhausted: Vec<usize> = pending
            .iter()
            .copied()
            .filter(|&i| latest[i].is_some_and(|(st, _)| st == UnitStatus::BudgetExhausted))
            .collect();
        if exhausted.is_empty() {
            break;
        }
        let spent: u64 = latest
            .iter()
            .flatten()
            .filter(|(st, _)| *st == UnitStatus::Complete)
            .map(|(_, nodes)| nodes)
            .sum();
        let next = total_budget.saturating_sub(spent) / exhausted.len() as u64;
        if next <= allotment {
            break;
        }
        allotment = next;
        pending = exhausted;
    }

    let execution = Execution {
        wall_seconds: started.elapsed().as_secs_f64(),
        workers: cfg.workers,
        units_resumed: resumed.load(Ordering::Relaxed),
        rounds,
    };
    let mut stored = writer.into_inner().expect("checkpoint lock").file.units;
    let results = units
        .iter()
        .zip(&latest)
        .map(|(spec, l)| l.and_then(|_| stored.remove(&spec.key)))
        .collect();
    Ok(assemble(
        &shared,
        &echo,
        results,
        abort.load(Ordering::SeqCst),
        execution,
    ))
}

fn assemble(
    shared: &Shared,
    echo: &ConfigEcho,
    results: Vec<Option<UnitResult>>,
    aborted: bool,
    execution: Execution,
) -> CampaignReport {
    let mut summary = Summary {
        units_total: results.len(),
        aborted,
        ..Summary::default()
    };
    let mut counts: BTreeMap<usize, record::SizeCounts> = BTreeMap::new();
    let mut limited: BTreeSet<usize> = BTreeSet::new();
    let mut records = Vec::new();
    let mut budget_exhausted = Vec::new();
    for (spec, r) in shared.plan.units.iter().zip(results) {
        let Some(r) = r else {
            // skipped after an abort
            limited.extend(&spec.sizes);
            continue;
        };
        summary.nodes_total += r.nodes;
        summary.tallies.add(&r.tallies);
        for (&k, c) in &r.counts {
            counts.entry(k).or_default().add(c);
        }
        if r.status == UnitStatus::BudgetExhausted {
            summary.units_exhausted += 1;
            limited.extend(&r.sizes);
            budget_exhausted.push(ExhaustedRegion {
                unit: r.key.clone(),
                sizes: r.sizes.clone(),
                allotment: r.allotment,
            });
        }
        records.extend(r.records);
    }
    records.sort_by(|a, b| set_order(&a.set, &b.set));
    budget_exhausted.sort_by(|a, b| a.unit.cmp(&b.unit));
    for c in counts.values() {
        summary.classes_examined += c.examined;
        summary.spectral_classes += c.spectral;
        summary.tile_classes += c.tiles;
        summary.t1t2_classes += c.t1t2;
    }
    let sizes = shared.cfg.size_list();
    summary.sizes_exhaustive = sizes.iter().copied().filter(|k| !limited.contains(k)).collect();
    summary.sizes_budget_limited = sizes.iter().copied().filter(|k| limited.contains(k)).collect();
    let classification = shared.shape.map(|sh| classify_records(&sh, &records));
    summary.structure_violations = classification.as_ref().map_or(0, |c| c.structure_violations);
    let limited: Vec<usize> = limited.into_iter().collect();
    CampaignReport {
        schema_version: report::REPORT_SCHEMA_VERSION,
        config: echo.clone(),
        summary,
        sizes: report::size_table(&sizes, &counts, &limited),
        records,
        budget_exhausted,
        classification,
        execution,
    }
}

/// Outcome of the exhaustive comparison for one group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckEntry {
    pub n: usize,
    pub classes: u64,
    pub spectral: u64,
    pub tiles: u64,
    /// Canonical sets that are spectral or tile but not both.
    pub mismatches: Vec<String>,
    pub duality_violations: u64,
    pub t1_violations: u64,
    pub t1t2_without_tile: u64,
    pub exhaustive: bool,
}

impl CrosscheckEntry {
    pub fn agrees(&self) -> bool {
        self.exhaustive
            && self.mismatches.is_empty()
            && self.duality_violations == 0
            && self.t1_violations == 0
            && self.t1t2_without_tile == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub entries: Vec<CrosscheckEntry>,
}

impl CrosscheckReport {
    /// Spectral ⇔ tile held on every group, exhaustively.
    pub fn holds(&self) -> bool {
        self.entries.iter().all(CrosscheckEntry::agrees)
    }
}

/// Exhaustive campaigns on each `n ≤ 30`, comparing spectral and tile
/// classes in both directions.
pub fn crosscheck_small(n_list: &[usize], workers: usize) -> Result<CrosscheckReport> {
    let mut entries = Vec::new();
    for &n in n_list {
        let cfg = CampaignConfig::new(n, Strategy::ExhaustiveSubsets).with_workers(workers);
        let report = run_campaign(&cfg)?;
        let s = &report.summary;
        entries.push(CrosscheckEntry {
            n,
            classes: s.classes_examined,
            spectral: s.spectral_classes,
            tiles: s.tile_classes,
            mismatches: report
                .records
                .iter()
                .filter(|r| r.spectral() != r.tile())
                .map(|r| r.set.to_string())
                .collect(),
            duality_violations: s.tallies.duality_violations,
            t1_violations: s.tallies.t1_violations,
            t1t2_without_tile: s.tallies.t1t2_without_tile,
            exhaustive: s.sizes_budget_limited.is_empty(),
        });
    }
    Ok(CrosscheckReport { entries })
}
