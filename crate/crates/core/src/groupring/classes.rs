use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groupring::ctx::CyclicGroupCtx;

/// A union of divisor classes `{x ∈ Z_n : n / gcd(n, x) = d}` for `d` in
/// `members`. Zero sets of mask polynomials and the connection sets of the
/// orthogonality graphs both have this shape.
#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClassSet {
    ctx: CyclicGroupCtx,
    members: Vec<usize>,
}

impl DivisorClassSet {
    pub fn new<I: IntoIterator<Item = usize>>(ctx: &CyclicGroupCtx, members: I) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        for &d in &members {
            ctx.require_divisor(d)?;
        }
        members.sort_unstable();
        members.dedup();
        Ok(DivisorClassSet {
            ctx: ctx.clone(),
            members,
        })
    }

    pub fn empty(ctx: &CyclicGroupCtx) -> Self {
        DivisorClassSet {
            ctx: ctx.clone(),
            members: Vec::new(),
        }
    }

    /// Builds from a bitmask over indices into `ctx.divisors()`.
    pub(crate) fn from_index_mask(ctx: &CyclicGroupCtx, mask: u64) -> Self {
        let members = ctx
            .divisors()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect();
        DivisorClassSet {
            ctx: ctx.clone(),
            members,
        }
    }

    pub fn ctx(&self) -> &CyclicGroupCtx {
        &self.ctx
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, d: usize) -> bool {
        self.members.binary_search(&d).is_ok()
    }

    /// Whether the divisor class of `x` is a member.
    pub fn contains_element(&self, x: usize) -> bool {
        self.contains(self.ctx.order_of(x))
    }

    /// The union of the member classes, as increasing elements of `Z_n`.
    pub fn expand(&self) -> Vec<usize> {
        (0..self.ctx.n()).filter(|&x| self.contains_element(x)).collect()
    }

    pub fn is_subset(&self, other: &DivisorClassSet) -> bool {
        self.members.iter().all(|&d| other.contains(d))
    }

    pub fn union(&self, other: &DivisorClassSet) -> Result<DivisorClassSet> {
        if self.ctx != other.ctx {
            return Err(Error::MismatchedOrders(self.ctx.n(), other.ctx.n()));
        }
        DivisorClassSet::new(&self.ctx, self.members.iter().chain(&other.members).copied())
    }
}

impl std::fmt::Debug for DivisorClassSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

impl Serialize for DivisorClassSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}
