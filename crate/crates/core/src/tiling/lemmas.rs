//! Empirical checkers for the structural lemmas of the `p²qr` argument.
//! Each returns whether its hypothesis applies and whether the conclusion
//! holds, so a caller can log a violation instead of asserting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupring::ctx::{factorize, gcd, is_prime};
use crate::groupring::{phi_divides, phi_divides_unchecked, project, CyclicMultiset};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetStructureReport {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    /// `Φ_{pqr} | m_T` and `T ∩ ((t + Z_q) ∪ (t + Z_r)) = {t}` for all `t ∈ T`.
    pub applicable: bool,
    /// `T` is a union of `Z_p`-cosets.
    pub conclusion_holds: bool,
    /// `q = 2` or `r = 2`: the lemma's argument needs the other two primes
    /// odd, so such instances are reported separately.
    pub small_prime: bool,
}

/// For `T ⊆ Z_{pqr}` with `role_p` the prime playing `p`.
pub fn coset_structure_corollary(t: &CyclicMultiset, role_p: usize) -> Result<CosetStructureReport> {
    t.require_set()?;
    let n = t.n();
    let f = factorize(n);
    if f.len() != 3 || f.iter().any(|&(_, e)| e != 1) {
        return Err(Error::FactorizationShape {
            n,
            expected: "product of three distinct primes",
        });
    }
    if !f.iter().any(|&(p, _)| p == role_p) {
        return Err(Error::NotAPrimeFactor { p: role_p, n });
    }
    let mut others = f.iter().map(|&(p, _)| p).filter(|&p| p != role_p);
    let q = others.next().expect("three primes");
    let r = others.next().expect("three primes");

    // Z_k is the subgroup of order k, generated by n / k.
    let isolated_along = |k: usize| {
        let step = n / k;
        t.support().all(|x| (1..k).all(|j| !t.contains((x + j * step) % n)))
    };
    let applicable = !t.is_empty() && phi_divides(n, t)? && isolated_along(q) && isolated_along(r);
    let step_p = n / role_p;
    let conclusion_holds = t.support().all(|x| t.contains((x + step_p) % n));
    Ok(CosetStructureReport {
        p: role_p,
        q,
        r,
        applicable,
        conclusion_holds,
        small_prime: q == 2 || r == 2,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ProjectionOutcome {
    /// Some `d | m`, `d > 1`, has neither `Φ_d` nor `Φ_{dr}` dividing `m_T`.
    NotApplicable { failing_d: usize },
    /// `T_m = c·Z_m + r·D`.
    Decomposed {
        projection: CyclicMultiset,
        c: u32,
        d: CyclicMultiset,
    },
    /// Hypothesis holds but the projection's multiplicities are not all
    /// congruent mod `r`.
    Violated { projection: CyclicMultiset },
}

impl ProjectionOutcome {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, ProjectionOutcome::NotApplicable { .. })
    }
}

/// Projection of `T ⊆ Z_N` to `Z_m` split as `c·Z_m + r·D`, under the
/// hypothesis that for every `d | m` with `d > 1`, `Φ_d | m_T` or
/// `Φ_{dr} | m_T`. Requires `m | N`, `r | N`, `gcd(m, r) = 1`.
pub fn projection_decomposition(t: &CyclicMultiset, m: usize, r: usize) -> Result<ProjectionOutcome> {
    let ctx = t.ctx();
    ctx.require_divisor(m)?;
    ctx.require_divisor(r)?;
    if gcd(m, r) != 1 {
        return Err(Error::NotCoprime { m, r });
    }
    for d in crate::groupring::ctx::divisors_of(m).into_iter().filter(|&d| d > 1) {
        // d·r divides N because m·r does.
        if !(phi_divides_unchecked(d, t) || phi_divides_unchecked(d * r, t)) {
            return Ok(ProjectionOutcome::NotApplicable { failing_d: d });
        }
    }
    let projection = project(t, m)?;
    let c = *projection.mults().iter().min().expect("m >= 1");
    if projection.mults().iter().any(|&x| (x - c) % r as u32 != 0) {
        return Ok(ProjectionOutcome::Violated { projection });
    }
    let d = CyclicMultiset::from_mults(
        projection.ctx(),
        projection.mults().iter().map(|&x| (x - c) / r as u32).collect(),
    )?;
    Ok(ProjectionOutcome::Decomposed { projection, c, d })
}

/// First pair `t1 < t2` of `T` (lexicographic) whose difference is
/// divisible by neither `x` nor `y`. Never `None` when `T ∋ 0` generates `Z_N`.
pub fn generating_pair_witness(t: &CyclicMultiset, x: usize, y: usize) -> Result<Option<(usize, usize)>> {
    t.require_set()?;
    let n = t.n();
    for p in [x, y] {
        if !is_prime(p) || !n.is_multiple_of(p) {
            return Err(Error::NotAPrimeFactor { p, n });
        }
    }
    if x == y {
        return Err(Error::Config("the two primes must differ".into()));
    }
    let elems: Vec<usize> = t.support().collect();
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i + 1..] {
            let diff = b - a;
            if diff % x != 0 && diff % y != 0 {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// Whether the elements of `T` generate `Z_n`.
pub fn generates(t: &CyclicMultiset) -> bool {
    t.support().fold(t.n(), gcd) == 1
}
