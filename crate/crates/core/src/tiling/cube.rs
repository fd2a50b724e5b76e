//! The cube rule for square-free `m = p_1⋯p_d`.
//!
//! Through the Chinese remainder theorem `Z_m ≅ Z_{p_1} × ⋯ × Z_{p_d}`, so
//! elements carry coordinates and a Hamming distance. A cuboid picks two
//! values in every coordinate. When `Φ_m | m_w` for a nonnegative `w`, the
//! signed sum `Σ_c (-1)^{d_H(p, c)} w(c)` over every cuboid vanishes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupring::ctx::{factorize, is_square_free, CyclicGroupCtx};
use crate::groupring::CyclicMultiset;

/// Inverse of `a` modulo the prime `p`.
fn inv_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&x| (a % p) * x % p == 1).expect("invertible")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cuboid {
    pub m: usize,
    pub primes: Vec<usize>,
    /// Two distinct coordinate values per prime.
    pub pairs: Vec<(usize, usize)>,
    /// For each coordinate, whether the anchor takes the second value.
    pub anchor: Vec<bool>,
}

impl Cuboid {
    fn basis(&self) -> Vec<usize> {
        self.primes
            .iter()
            .map(|&p| {
                let c = self.m / p;
                c * inv_mod(c, p) % self.m
            })
            .collect()
    }

    /// The `2^d` vertices with their sign `(-1)^{d_H(anchor, c)}`.
    pub fn vertices(&self) -> Vec<(usize, i64)> {
        let d = self.primes.len();
        let basis = self.basis();
        (0..1usize << d)
            .map(|mask| {
                let mut x = 0;
                let mut dist = 0;
                for (i, (&(a, b), &base)) in self.pairs.iter().zip(&basis).enumerate() {
                    let second = mask >> i & 1 == 1;
                    x = (x + base * if second { b } else { a }) % self.m;
                    if second != self.anchor[i] {
                        dist += 1;
                    }
                }
                (x, if dist % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    /// Hamming distance between two elements of `Z_m`.
    pub fn hamming(&self, x: usize, y: usize) -> usize {
        self.primes.iter().filter(|&&p| x % p != y % p).count()
    }

    pub fn alternating_sum(&self, w: &CyclicMultiset) -> i64 {
        self.vertices().iter().map(|&(x, sign)| sign * w.mult(x) as i64).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeRuleReport {
    pub holds: bool,
    pub counterexample: Option<Cuboid>,
    pub cuboids_checked: u64,
}

/// Checks every cuboid of the square-free group `Z_m` carrying `w`, in
/// lexicographic order of the coordinate pairs (first prime most
/// significant). Anchors only flip the sign, so each cuboid is checked once
/// with the anchor at its first vertex.
pub fn cube_rule_check(w: &CyclicMultiset) -> Result<CubeRuleReport> {
    let m = w.n();
    if !is_square_free(m) {
        return Err(Error::NotSquareFree(m));
    }
    let primes: Vec<usize> = factorize(m).into_iter().map(|(p, _)| p).collect();
    let pair_lists: Vec<Vec<(usize, usize)>> = primes
        .iter()
        .map(|&p| (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).collect())
        .collect();
    let d = primes.len();
    let mut idx = vec![0usize; d];
    let mut checked = 0;
    loop {
        let cuboid = Cuboid {
            m,
            primes: primes.clone(),
            pairs: (0..d).map(|i| pair_lists[i][idx[i]]).collect(),
            anchor: vec![false; d],
        };
        checked += 1;
        if cuboid.alternating_sum(w) != 0 {
            return Ok(CubeRuleReport {
                holds: false,
                counterexample: Some(cuboid),
                cuboids_checked: checked,
            });
        }
        // odometer, last coordinate fastest
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(CubeRuleReport {
                    holds: true,
                    counterexample: None,
                    cuboids_checked: checked,
                });
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < pair_lists[i].len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Applies [`cube_rule_check`] to the restriction of `w` to every coset of
/// the subgroup of order `m_prime` (square-free, dividing `n`).
pub fn cube_rule_on_cosets(w: &CyclicMultiset, m_prime: usize) -> Result<bool> {
    w.ctx().require_divisor(m_prime)?;
    if !is_square_free(m_prime) {
        return Err(Error::NotSquareFree(m_prime));
    }
    let step = w.n() / m_prime;
    let sub = CyclicGroupCtx::new(m_prime)?;
    for c in 0..step {
        let mult = (0..m_prime).map(|j| w.mult(c + j * step)).collect();
        let restricted = CyclicMultiset::from_mults(&sub, mult)?;
        if !cube_rule_check(&restricted)?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}
