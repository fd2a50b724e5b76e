//! Exact analysis of subsets of finite cyclic groups `Z_n`.
//!
//! The crate decides whether a set is spectral (admits an orthogonal basis
//! of restricted characters) and whether it tiles `Z_n` by translation,
//! checks the Coven–Meyerowitz conditions, and runs enumeration campaigns
//! that compare the two notions over every affine class of subsets.
//!
//! All divisibility decisions are made with exact integer polynomial
//! arithmetic; floating point never enters the library.

pub mod error;
pub mod groupring;
pub mod spectral;
pub mod tiling;
pub mod verifier;

pub use error::{Error, Result};
pub use groupring::{
    affine_canonical, cyclotomic_poly, difference_multiset, mask_polynomial, phi_divides, project, zero_divisor_set,
    CyclicGroupCtx, CyclicMultiset, DivisorClassSet, IntPolynomial,
};
pub use spectral::{
    enumerate_cliques, find_spectrum, spectra_are_dual, verify_spectral_pair, CayleyGraph, CliqueMode,
    SpectralCertificate,
};
pub use tiling::{find_tiling_complement, t1_check, t2_check, verify_tiling, TilingCertificate};

/// Node limit for the exhaustive searches.
///
/// Every search counts the nodes it expands and stops as soon as the count
/// would exceed the budget, reporting exhaustion instead of an answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);

    pub fn nodes(self) -> u64 {
        self.0
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::UNLIMITED
    }
}

/// Result of a bounded exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    NotFound,
    /// The node budget ran out before the search finished.
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::BudgetExhausted)
    }

    /// `Some(true)` / `Some(false)` when decided, `None` when the budget ran out.
    pub fn decided(&self) -> Option<bool> {
        match self {
            SearchOutcome::Found(_) => Some(true),
            SearchOutcome::NotFound => Some(false),
            SearchOutcome::BudgetExhausted => None,
        }
    }
}

/// A search outcome together with the number of nodes it visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport<T> {
    pub outcome: SearchOutcome<T>,
    pub nodes: u64,
}
