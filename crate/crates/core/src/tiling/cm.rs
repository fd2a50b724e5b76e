//! The Coven–Meyerowitz conditions.
//!
//! `H_S` is the set of prime powers `d | n` with `Φ_d | m_S`.
//! (T1): `|S| = Π_{d ∈ H_S} Φ_d(1)`, where `Φ_{p^k}(1) = p`.
//! (T2): for pairwise coprime `d_1, …, d_j ∈ H_S`, `Φ_{d_1⋯d_j} | m_S`.

use serde::Serialize;

use crate::error::Result;
use crate::groupring::ctx::prime_power_base;
use crate::groupring::{zero_divisor_set, CyclicMultiset, DivisorClassSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct T1Report {
    pub holds: bool,
    pub h_s: DivisorClassSet,
    pub product: u64,
}

/// `H_S` of a nonempty set.
pub fn prime_power_zero_set(s: &CyclicMultiset) -> Result<DivisorClassSet> {
    s.require_nonempty_set()?;
    let z = zero_divisor_set(s)?;
    DivisorClassSet::new(
        s.ctx(),
        z.members().iter().copied().filter(|&d| prime_power_base(d).is_some()),
    )
}

pub fn t1_check(s: &CyclicMultiset) -> Result<T1Report> {
    let h_s = prime_power_zero_set(s)?;
    let product = h_s
        .members()
        .iter()
        .map(|&d| prime_power_base(d).expect("prime power") as u64)
        .product();
    Ok(T1Report {
        holds: product == s.total(),
        h_s,
        product,
    })
}

pub fn t2_check(s: &CyclicMultiset) -> Result<bool> {
    s.require_nonempty_set()?;
    Ok(t2_from_zero_set(&zero_divisor_set(s)?))
}

/// (T1) and (T2) for a set of `size` elements with zero set `zero`.
pub(crate) fn t1_t2_from_zero_set(zero: &DivisorClassSet, size: u64) -> (bool, bool) {
    let product: u64 = zero
        .members()
        .iter()
        .filter_map(|&d| prime_power_base(d))
        .map(|p| p as u64)
        .product();
    (product == size, t2_from_zero_set(zero))
}

fn t2_from_zero_set(zero: &DivisorClassSet) -> bool {
    // Group H_S by prime; a pairwise coprime family takes at most one power
    // per prime.
    let mut by_prime: Vec<(usize, Vec<usize>)> = Vec::new();
    for &d in zero.members() {
        let Some(p) = prime_power_base(d) else { continue };
        match by_prime.iter_mut().find(|(q, _)| *q == p) {
            Some((_, v)) => v.push(d),
            None => by_prime.push((p, vec![d])),
        }
    }
    let groups: Vec<&Vec<usize>> = by_prime.iter().map(|(_, v)| v).collect();
    // Each prime contributes either nothing (index 0) or one of its powers.
    let mut choice = vec![0usize; groups.len()];
    loop {
        let picked: Vec<usize> = choice
            .iter()
            .zip(&groups)
            .filter(|(&c, _)| c > 0)
            .map(|(&c, g)| g[c - 1])
            .collect();
        if picked.len() >= 2 && !zero.contains(picked.iter().product()) {
            return false;
        }
        // advance the mixed-radix counter
        let mut i = 0;
        loop {
            if i == groups.len() {
                return true;
            }
            choice[i] += 1;
            if choice[i] <= groups[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}
