//! Translational tiling of `Z_n`: verification, exact complement search,
//! the Coven–Meyerowitz conditions and the structural lemmas used in the
//! case analysis for `n = p²qr`.

pub mod cases;
pub mod cm;
pub mod cube;
pub mod lemmas;

pub use cases::{case_classify, CaseLabel, P2qrShape};
pub use cm::{t1_check, t2_check, T1Report};
pub use cube::{cube_rule_check, cube_rule_on_cosets, CubeRuleReport, Cuboid};
pub use lemmas::{
    coset_structure_corollary, generating_pair_witness, projection_decomposition, CosetStructureReport,
    ProjectionOutcome,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupring::bits::Bits;
use crate::groupring::CyclicMultiset;
use crate::spectral::clique::{Exhausted, NodeCounter};
use crate::{with_width, Budget, SearchOutcome, SearchReport};

/// `S ⊕ T = Z_n`: every element is uniquely `s + t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TilingCertificate {
    pub set: CyclicMultiset,
    pub complement: CyclicMultiset,
    pub n: usize,
}

impl TilingCertificate {
    pub fn verify(&self) -> bool {
        verify_tiling(&self.set, &self.complement).unwrap_or(false)
    }
}

/// Whether the cyclic convolution of the indicators of `S` and `T` is the
/// all-ones vector.
pub fn verify_tiling(s: &CyclicMultiset, t: &CyclicMultiset) -> Result<bool> {
    if s.n() != t.n() {
        return Err(Error::MismatchedOrders(s.n(), t.n()));
    }
    s.require_nonempty_set()?;
    t.require_nonempty_set()?;
    if s.total() * t.total() != s.n() as u64 {
        return Ok(false);
    }
    Ok(s.convolve(t)?.mults().iter().all(|&c| c == 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TilingOptions {
    /// Reject sets violating (T1) before searching. Every tile satisfies
    /// (T1), so this never changes the answer; disabling it keeps the plain
    /// exact-cover search available as a cross-check.
    pub cyclotomic_pruning: bool,
}

impl Default for TilingOptions {
    fn default() -> Self {
        TilingOptions {
            cyclotomic_pruning: true,
        }
    }
}

/// Searches for a tiling complement `T ∋ 0` of `S`.
pub fn find_tiling_complement(s: &CyclicMultiset, budget: Budget) -> Result<SearchReport<TilingCertificate>> {
    find_tiling_complement_with(s, budget, TilingOptions::default())
}

pub fn find_tiling_complement_with(
    s: &CyclicMultiset,
    budget: Budget,
    opts: TilingOptions,
) -> Result<SearchReport<TilingCertificate>> {
    s.require_nonempty_set()?;
    let mut counter = NodeCounter::new(budget.nodes());
    let found = with_width!(s.n(), W => complement_search::<W>(s, opts, &mut counter))?;
    let outcome = match found {
        Ok(Some(t)) => SearchOutcome::Found(TilingCertificate {
            set: s.clone(),
            complement: CyclicMultiset::set(s.ctx(), t).expect("distinct translates"),
            n: s.n(),
        }),
        Ok(None) => SearchOutcome::NotFound,
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
    };
    Ok(SearchReport {
        outcome,
        nodes: counter.used,
    })
}

/// Exact cover of the cyclic board by translates of `S`: always cover the
/// least uncovered element next, with 0 fixed in `T`.
pub(crate) fn complement_search<const W: usize>(
    s: &CyclicMultiset,
    opts: TilingOptions,
    counter: &mut NodeCounter,
) -> Result<Option<Vec<usize>>, Exhausted> {
    counter.tick()?;
    let n = s.n();
    let k = s.total() as usize;
    if !n.is_multiple_of(k) {
        return Ok(None);
    }
    if opts.cyclotomic_pruning && !t1_check(s).map(|r| r.holds).unwrap_or(true) {
        return Ok(None);
    }
    let base: Bits<W> = s.to_bits();
    let shifts: Vec<Bits<W>> = (0..n).map(|t| base.rotate_up(t, n)).collect();
    let elems: Vec<usize> = s.support().collect();
    let mut t = vec![0];
    if cover(&shifts, &elems, n, base, &mut t, counter)? {
        t.sort_unstable();
        Ok(Some(t))
    } else {
        Ok(None)
    }
}

fn cover<const W: usize>(
    shifts: &[Bits<W>],
    elems: &[usize],
    n: usize,
    covered: Bits<W>,
    t: &mut Vec<usize>,
    counter: &mut NodeCounter,
) -> Result<bool, Exhausted> {
    let Some(u) = covered.first_absent(n) else {
        return Ok(true);
    };
    for &s in elems {
        let shift = (u + n - s) % n;
        let piece = &shifts[shift];
        if piece.intersects(&covered) {
            continue;
        }
        counter.tick()?;
        t.push(shift);
        if cover(shifts, elems, n, covered.or(piece), t, counter)? {
            return Ok(true);
        }
        t.pop();
    }
    Ok(false)
}
