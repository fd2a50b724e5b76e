//! Running one work unit: an orderly walk over the canonical cliques that
//! extend the unit's prefix, with every clique examined on the spot.

use std::collections::BTreeMap;

use crate::groupring::affine::AffineTables;
use crate::groupring::bits::Bits;
use crate::groupring::{zero_set_unchecked, CyclicGroupCtx, CyclicMultiset};
use crate::spectral::clique::{Exhausted, Graph, NodeCounter, OrderlyWalk, SizeFilter};
use crate::spectral::{spectra_are_dual, spectrum_search_in, verify_spectral_pair, SpectralCertificate};
use crate::tiling::cases::{case_of_size, P2qrShape};
use crate::tiling::cm::t1_t2_from_zero_set;
use crate::tiling::{complement_search, verify_tiling, TilingOptions};
use crate::verifier::config::{CampaignConfig, Strategy};
use crate::verifier::plan::{class_bits, Plan, UnitSpec};
use crate::verifier::record::{
    set_order, CampaignRecord, FailureTranscript, RecordStatus, SizeCounts, Tallies, UnitResult, UnitStatus,
};
use crate::with_width;

/// Immutable context shared by all workers.
pub(crate) struct Shared {
    pub cfg: CampaignConfig,
    pub ctx: CyclicGroupCtx,
    pub tables: AffineTables,
    pub shape: Option<P2qrShape>,
    pub plan: Plan,
}

pub(crate) fn run_unit(shared: &Shared, spec: &UnitSpec, allotment: u64) -> UnitResult {
    with_width!(shared.ctx.n(), W => run_unit_w::<W>(shared, spec, allotment)).expect("order validated")
}

struct Examiner<'a, const W: usize> {
    shared: &'a Shared,
    earlier: Vec<Bits<W>>,
    records: Vec<CampaignRecord>,
    counts: BTreeMap<usize, SizeCounts>,
    tallies: Tallies,
}

impl<const W: usize> Examiner<'_, W> {
    /// Whether `set` is also a clique of an earlier connection set.
    fn seen_before(&self, elems: &[usize], set: &Bits<W>) -> bool {
        let n = self.shared.ctx.n();
        self.earlier.iter().any(|e| {
            elems.iter().all(|&x| {
                let mut diffs = set.rotate_down(x, n);
                diffs.remove(0);
                diffs.and_not(e).is_empty()
            })
        })
    }

    fn examine(&mut self, elems: &[usize], set: &Bits<W>, counter: &mut NodeCounter) -> Result<(), Exhausted> {
        if self.seen_before(elems, set) {
            return Ok(());
        }
        let shared = self.shared;
        let exhaustive = shared.cfg.strategy == Strategy::ExhaustiveSubsets;
        let ctx = &shared.ctx;
        let k = elems.len();
        let start = counter.used;
        let s = CyclicMultiset::from_bits(ctx, set);
        let zero = zero_set_unchecked(&s);
        let (t1, t2) = t1_t2_from_zero_set(&zero, k as u64);
        let spectrum = spectrum_search_in::<W>(ctx, k, &zero, counter)?;
        let want_tile = spectrum.is_some() || exhaustive || (t1 && t2);
        let tile_start = counter.used;
        let mut complement = if want_tile {
            complement_search::<W>(&s, TilingOptions::default(), counter)?
        } else {
            None
        };
        let mut failure = None;
        if spectrum.is_some() && complement.is_none() {
            // Confirm without the cyclotomic filter before reporting.
            let pruned_nodes = counter.used - tile_start;
            let mut unpruned = NodeCounter::new(u64::MAX);
            let opts = TilingOptions {
                cyclotomic_pruning: false,
            };
            complement = complement_search::<W>(&s, opts, &mut unpruned).expect("unlimited counter");
            if complement.is_none() {
                failure = Some(FailureTranscript {
                    pruned_nodes,
                    unpruned_nodes: unpruned.used,
                    size_divides_n: ctx.n().is_multiple_of(k),
                    t1,
                });
            }
        }
        let spectrum = spectrum.map(|l| CyclicMultiset::set(ctx, l).expect("distinct"));
        let complement = complement.map(|t| CyclicMultiset::set(ctx, t).expect("distinct"));

        let c = self.counts.entry(k).or_default();
        c.examined += 1;
        c.spectral += spectrum.is_some() as u64;
        c.tiles += complement.is_some() as u64;
        c.t1t2 += (t1 && t2) as u64;

        let tallies = &mut self.tallies;
        if let Some(lambda) = &spectrum {
            let cert = SpectralCertificate {
                set: s.clone(),
                spectrum: lambda.clone(),
                zero_set: zero.clone(),
            };
            if !cert.verify() || !verify_spectral_pair(&s, lambda).unwrap_or(false) {
                tallies.certificate_errors += 1;
            }
            if !spectra_are_dual(&cert) {
                tallies.duality_violations += 1;
            }
        }
        if let Some(t) = &complement {
            if !verify_tiling(&s, t).unwrap_or(false) {
                tallies.certificate_errors += 1;
            }
            if !t1 {
                tallies.t1_violations += 1;
            }
        }
        if t1 && t2 && complement.is_none() {
            tallies.t1t2_without_tile += 1;
        }
        let status = match (spectrum.is_some(), complement.is_some()) {
            (true, true) => RecordStatus::SpectralTile,
            (true, false) => {
                tallies.failures += 1;
                RecordStatus::Failure
            }
            (false, true) if exhaustive => {
                tallies.converse_mismatches += 1;
                RecordStatus::TileNotSpectral
            }
            _ => return Ok(()),
        };
        self.records.push(CampaignRecord {
            set: s,
            size: k,
            case: shared.shape.map(|sh| case_of_size(&sh, k)),
            status,
            spectrum,
            zero_set: zero.members().to_vec(),
            complement,
            t1,
            t2,
            nodes: counter.used - start,
            failure,
        });
        Ok(())
    }
}

fn run_unit_w<const W: usize>(shared: &Shared, spec: &UnitSpec, allotment: u64) -> UnitResult {
    let n = shared.ctx.n();
    let region = &shared.plan.regions[spec.region];
    let graph: Graph<W> = region.graph(n);
    let mut ex = Examiner::<W> {
        shared,
        earlier: region.earlier.iter().map(class_bits::<W>).collect(),
        records: Vec::new(),
        counts: BTreeMap::new(),
        tallies: Tallies::default(),
    };
    let sizes = SizeFilter::new(spec.sizes.iter().copied());
    let mut counter = NodeCounter::new(allotment);
    let mut prefix = spec.prefix.clone();
    let set = Bits::<W>::from_iter(prefix.iter().copied());
    let mut cand = Bits::<W>::full(n).above(*prefix.last().expect("prefix contains 0"));
    for &x in &prefix {
        cand = cand.and(&graph.adj[x]);
    }
    let outcome = OrderlyWalk {
        graph: &graph,
        tables: Some(&shared.tables),
        sizes: &sizes,
        coloring_bound: true,
        counter: &mut counter,
        emit: |elems: &[usize], set: &Bits<W>, c: &mut NodeCounter| ex.examine(elems, set, c),
    }
    .run(&mut prefix, set, cand);
    let status = match outcome {
        Ok(()) => UnitStatus::Complete,
        Err(Exhausted) => UnitStatus::BudgetExhausted,
    };
    let mut records = ex.records;
    records.sort_by(|a, b| set_order(&a.set, &b.set));
    UnitResult {
        key: spec.key.clone(),
        allotment,
        status,
        nodes: counter.used,
        sizes: spec.sizes.clone(),
        records,
        counts: ex.counts,
        tallies: ex.tallies,
    }
}
