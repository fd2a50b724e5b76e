//! Precomputed remainders `x^j mod Φ_d` for every divisor `d > 1` of `n`.
//!
//! The remainder of a mask polynomial modulo `Φ_d` is the multiplicity-weighted
//! sum of these rows, so a full zero set costs `|A|·n` integer additions.

use crate::groupring::ctx::{totient, CyclicGroupCtx};
use crate::groupring::cyclotomic_poly;

use num_traits::ToPrimitive;

pub(crate) struct ResidueTable {
    n: usize,
    /// One entry per divisor index (`None` at `d = 1`).
    blocks: Vec<Option<Block>>,
}

struct Block {
    d: usize,
    width: usize,
    /// `rows[j * width..(j + 1) * width]` holds `x^j mod Φ_d`.
    rows: Vec<i64>,
}

const COEFF_LIMIT: i64 = 1 << 40;

impl ResidueTable {
    pub(crate) fn build(ctx: &CyclicGroupCtx) -> Option<ResidueTable> {
        if ctx.divisors().len() > 64 {
            return None;
        }
        let mut blocks = Vec::with_capacity(ctx.divisors().len());
        for &d in ctx.divisors() {
            if d == 1 {
                blocks.push(None);
                continue;
            }
            let phi = cyclotomic_poly(d).ok()?;
            let phi: Vec<i64> = phi.coeffs().iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
            let width = totient(d);
            let mut rows = vec![0i64; d * width];
            let mut cur = vec![0i64; width];
            cur[0] = 1;
            for j in 0..d {
                rows[j * width..(j + 1) * width].copy_from_slice(&cur);
                // cur <- x * cur mod Φ_d
                let top = cur[width - 1];
                for k in (1..width).rev() {
                    cur[k] = cur[k - 1];
                }
                cur[0] = 0;
                if top != 0 {
                    for k in 0..width {
                        cur[k] = cur[k].checked_sub(top.checked_mul(phi[k])?)?;
                    }
                }
                if cur.iter().any(|c| c.abs() > COEFF_LIMIT) {
                    return None;
                }
            }
            blocks.push(Some(Block { d, width, rows }));
        }
        Some(ResidueTable { n: ctx.n(), blocks })
    }

    /// Bitmask over divisor indices of the `d > 1` with `Φ_d | m_A`, where
    /// `A` is given by its multiplicities.
    pub(crate) fn zero_mask(&self, mult: &[u32]) -> u64 {
        debug_assert_eq!(mult.len(), self.n);
        let mut mask = 0u64;
        let mut acc: Vec<i128> = Vec::new();
        for (i, block) in self.blocks.iter().enumerate() {
            let Some(b) = block else { continue };
            acc.clear();
            acc.resize(b.width, 0);
            for (x, &m) in mult.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                let row = &b.rows[(x % b.d) * b.width..(x % b.d + 1) * b.width];
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a += m as i128 * r as i128;
                }
            }
            if acc.iter().all(|&a| a == 0) {
                mask |= 1 << i;
            }
        }
        mask
    }
}
