//! Affine canonical forms under `x ↦ a·x + b`, `gcd(a, n) = 1`.
//!
//! The canonical representative of an orbit is the member whose sorted
//! element list (repeated by multiplicity) is lexicographically smallest.
//! For multisets of equal size this is the member whose multiplicity array
//! is lexicographically largest, so every nonempty canonical form contains 0.

use std::cmp::Ordering;

use crate::groupring::bits::Bits;
use crate::groupring::ctx::CyclicGroupCtx;
use crate::groupring::multiset::CyclicMultiset;

/// Compares two multiplicity arrays of equal total by their sorted element
/// lists.
fn cmp_by_elements(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // More copies of a smaller element means a smaller list.
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

/// Canonical representative of the affine orbit of `a`.
pub fn affine_canonical(a: &CyclicMultiset) -> CyclicMultiset {
    if a.is_empty() {
        return a.clone();
    }
    let ctx = a.ctx();
    let n = ctx.n();
    let support: Vec<usize> = a.support().collect();
    let mut best: Option<Vec<u32>> = None;
    let mut img = vec![0u32; n];
    for &u in ctx.units() {
        for &s in &support {
            // x ↦ u·(x - s), which sends s to 0.
            img.fill(0);
            for &x in &support {
                img[(u * ((x + n - s) % n)) % n] = a.mult(x);
            }
            let better = match &best {
                None => true,
                Some(b) => cmp_by_elements(&img, b) == Ordering::Less,
            };
            if better {
                best = Some(img.clone());
            }
        }
    }
    CyclicMultiset::from_mults(ctx, best.expect("nonempty support")).expect("length n")
}

/// Multiplication tables for the unit group, used by the orderly
/// enumeration of canonical sets.
pub(crate) struct AffineTables {
    n: usize,
    /// `mul[i][x] = units[i]·x mod n`.
    mul: Vec<Vec<u16>>,
}

impl AffineTables {
    pub(crate) fn new(ctx: &CyclicGroupCtx) -> Self {
        let n = ctx.n();
        let mul = ctx
            .units()
            .iter()
            .map(|&u| (0..n).map(|x| ((u * x) % n) as u16).collect())
            .collect();
        AffineTables { n, mul }
    }

    /// Whether no affine image of the set `p` (elements `elems`, increasing,
    /// containing 0) has a smaller sorted element list. A set passing this
    /// test is its own canonical form.
    pub(crate) fn is_canonical<const W: usize>(&self, elems: &[usize], p: &Bits<W>) -> bool {
        let n = self.n;
        for table in &self.mul {
            let mut q = Bits::<W>::EMPTY;
            for &x in elems {
                q.insert(table[x] as usize);
            }
            for y in q.iter() {
                let img = q.rotate_down(y, n);
                if img.cmp_sorted(p) == Ordering::Less {
                    return false;
                }
            }
        }
        true
    }
}
