//! Exact arithmetic on multisets over `Z_n` and their mask polynomials.

pub mod affine;
pub mod bits;
pub mod classes;
pub mod ctx;
pub mod multiset;
pub mod poly;
pub(crate) mod residue;

pub use affine::affine_canonical;
pub use classes::DivisorClassSet;
pub use ctx::CyclicGroupCtx;
pub use multiset::CyclicMultiset;
pub use poly::{cyclotomic_poly, IntPolynomial};

use crate::error::{Error, Result};

/// `m_A(x) = Σ mult[s]·x^s`.
pub fn mask_polynomial(a: &CyclicMultiset) -> IntPolynomial {
    IntPolynomial::from_coeffs(a.mults().iter().map(|&m| m as i64))
}

/// Whether `Φ_d` divides `m_A`, decided by exact remainder. Requires `d | n`.
pub fn phi_divides(d: usize, a: &CyclicMultiset) -> Result<bool> {
    a.ctx().require_divisor(d)?;
    Ok(phi_divides_unchecked(d, a))
}

/// Same as [`phi_divides`] for any `d ≥ 1`, without the `d | n` requirement.
pub(crate) fn phi_divides_unchecked(d: usize, a: &CyclicMultiset) -> bool {
    let phi = cyclotomic_poly(d).expect("d >= 1");
    // Φ_d | x^d - 1, so fold exponents mod d first; the fold has degree < d.
    let mut folded = vec![0i64; d.min(a.n())];
    for (x, &m) in a.mults().iter().enumerate() {
        folded[x % d] += m as i64;
    }
    let phi_small: Option<Vec<i64>> = phi.coeffs().iter().map(num_traits::ToPrimitive::to_i64).collect();
    if let Some(phi_small) = phi_small {
        if let Some((_, rem)) = poly::div_rem_small(&folded, &phi_small) {
            return rem.iter().all(|&c| c == 0);
        }
    }
    IntPolynomial::from_coeffs(folded).rem_monic(&phi).is_zero()
}

/// The divisors `d > 1` of `n` with `Φ_d | m_A`. Its expansion is exactly
/// the set of nonzero `k` whose character sum over `A` vanishes.
pub fn zero_divisor_set(a: &CyclicMultiset) -> Result<DivisorClassSet> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(zero_set_unchecked(a))
}

pub(crate) fn zero_set_unchecked(a: &CyclicMultiset) -> DivisorClassSet {
    let ctx = a.ctx();
    match ctx.residue_table() {
        Some(table) => DivisorClassSet::from_index_mask(ctx, table.zero_mask(a.mults())),
        None => {
            let members: Vec<usize> = ctx
                .nontrivial_divisors()
                .filter(|&d| phi_divides_unchecked(d, a))
                .collect();
            DivisorClassSet::new(ctx, members).expect("divisors of n")
        }
    }
}

/// Pushforward along `Z_n → Z_m`, `x ↦ x mod m`. Requires `m | n`.
pub fn project(a: &CyclicMultiset, m: usize) -> Result<CyclicMultiset> {
    a.ctx().require_divisor(m)?;
    let target = CyclicGroupCtx::new(m)?;
    let mut mult = vec![0u32; m];
    for (x, &c) in a.mults().iter().enumerate() {
        mult[x % m] += c;
    }
    CyclicMultiset::from_mults(&target, mult)
}

/// `mult[x] = #{(a, b) ∈ A×A : a - b = x}`. Sets only.
pub fn difference_multiset(a: &CyclicMultiset) -> Result<CyclicMultiset> {
    a.require_set()?;
    let n = a.n();
    let elems: Vec<usize> = a.support().collect();
    let mut mult = vec![0u32; n];
    for &x in &elems {
        for &y in &elems {
            mult[(x + n - y) % n] += 1;
        }
    }
    CyclicMultiset::from_mults(a.ctx(), mult)
}
