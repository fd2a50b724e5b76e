use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groupring::bits::Bits;
use crate::groupring::ctx::CyclicGroupCtx;

/// An element of the group ring `Z[Z_n]` with nonnegative coefficients,
/// stored densely: `mult[x]` is the multiplicity of `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclicMultiset {
    ctx: CyclicGroupCtx,
    mult: Vec<u32>,
}

impl CyclicMultiset {
    pub fn empty(ctx: &CyclicGroupCtx) -> Self {
        CyclicMultiset {
            ctx: ctx.clone(),
            mult: vec![0; ctx.n()],
        }
    }

    pub fn full(ctx: &CyclicGroupCtx) -> Self {
        CyclicMultiset {
            ctx: ctx.clone(),
            mult: vec![1; ctx.n()],
        }
    }

    pub fn from_mults(ctx: &CyclicGroupCtx, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != ctx.n() {
            return Err(Error::Parse(format!(
                "expected {} multiplicities, got {}",
                ctx.n(),
                mult.len()
            )));
        }
        Ok(CyclicMultiset { ctx: ctx.clone(), mult })
    }

    /// Multiset with one copy of each listed element (repeats accumulate).
    pub fn from_elements<I: IntoIterator<Item = usize>>(ctx: &CyclicGroupCtx, elems: I) -> Result<Self> {
        let mut m = CyclicMultiset::empty(ctx);
        for x in elems {
            if x >= ctx.n() {
                return Err(Error::ElementOutOfRange { x, n: ctx.n() });
            }
            m.mult[x] += 1;
        }
        Ok(m)
    }

    /// Like [`Self::from_elements`] but rejects repeated elements.
    pub fn set<I: IntoIterator<Item = usize>>(ctx: &CyclicGroupCtx, elems: I) -> Result<Self> {
        let m = CyclicMultiset::from_elements(ctx, elems)?;
        if m.is_set() {
            Ok(m)
        } else {
            Err(Error::NotASet)
        }
    }

    /// Parses and builds a set on a fresh context, e.g. `set_of(12, [0, 1, 6, 7])`.
    pub fn set_of<I: IntoIterator<Item = usize>>(n: usize, elems: I) -> Result<Self> {
        CyclicMultiset::set(&CyclicGroupCtx::new(n)?, elems)
    }

    pub(crate) fn from_bits<const W: usize>(ctx: &CyclicGroupCtx, bits: &Bits<W>) -> Self {
        let mut m = CyclicMultiset::empty(ctx);
        for x in bits.iter() {
            m.mult[x] = 1;
        }
        m
    }

    pub(crate) fn to_bits<const W: usize>(&self) -> Bits<W> {
        Bits::from_iter(self.support())
    }

    pub fn ctx(&self) -> &CyclicGroupCtx {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn mult(&self, x: usize) -> u32 {
        self.mult[x % self.n()]
    }

    pub fn mults(&self) -> &[u32] {
        &self.mult
    }

    /// Total size counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.mult.iter().map(|&m| m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn is_set(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn require_set(&self) -> Result<()> {
        if self.is_set() {
            Ok(())
        } else {
            Err(Error::NotASet)
        }
    }

    pub fn require_nonempty_set(&self) -> Result<()> {
        self.require_set()?;
        if self.is_empty() {
            Err(Error::EmptySet)
        } else {
            Ok(())
        }
    }

    /// Distinct elements with positive multiplicity, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.mult.iter().enumerate().filter(|(_, &m)| m > 0).map(|(x, _)| x)
    }

    /// Elements repeated by multiplicity, increasing.
    pub fn elements(&self) -> Vec<usize> {
        self.mult
            .iter()
            .enumerate()
            .flat_map(|(x, &m)| std::iter::repeat_n(x, m as usize))
            .collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mult(x) > 0
    }

    /// Image under `x ↦ a·x + b`.
    pub fn affine_image(&self, a: usize, b: usize) -> CyclicMultiset {
        let n = self.n();
        let mut mult = vec![0; n];
        for (x, &m) in self.mult.iter().enumerate() {
            if m > 0 {
                mult[(a * x + b) % n] += m;
            }
        }
        CyclicMultiset {
            ctx: self.ctx.clone(),
            mult,
        }
    }

    pub fn translate(&self, b: usize) -> CyclicMultiset {
        self.affine_image(1, b % self.n())
    }

    /// Entrywise sum.
    pub fn sum(&self, other: &CyclicMultiset) -> Result<CyclicMultiset> {
        if self.n() != other.n() {
            return Err(Error::MismatchedOrders(self.n(), other.n()));
        }
        let mult = self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect();
        Ok(CyclicMultiset {
            ctx: self.ctx.clone(),
            mult,
        })
    }

    /// Group-ring product: the multiset of all sums `a + b`.
    pub fn convolve(&self, other: &CyclicMultiset) -> Result<CyclicMultiset> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::MismatchedOrders(n, other.n()));
        }
        let mut mult = vec![0u32; n];
        for (a, &ma) in self.mult.iter().enumerate().filter(|(_, &m)| m > 0) {
            for (b, &mb) in other.mult.iter().enumerate().filter(|(_, &m)| m > 0) {
                mult[(a + b) % n] += ma * mb;
            }
        }
        Ok(CyclicMultiset {
            ctx: self.ctx.clone(),
            mult,
        })
    }

    pub fn scaled(&self, c: u32) -> CyclicMultiset {
        CyclicMultiset {
            ctx: self.ctx.clone(),
            mult: self.mult.iter().map(|&m| m * c).collect(),
        }
    }
}

impl fmt::Display for CyclicMultiset {
    /// `n=<n>:<e>,<e>,...`, with `<e>^<m>` for multiplicities above one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}:", self.n())?;
        let mut first = true;
        for (x, &m) in self.mult.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for CyclicMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse(format!("`{s}`: expected `n=<order>:<elements>`")))?;
        let (n, body) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("`{s}`: missing `:` after the order")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{n}` is not a group order")))?;
        let ctx = CyclicGroupCtx::new(n)?;
        let mut m = CyclicMultiset::empty(&ctx);
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (x, k) = match item.split_once('^') {
                Some((x, k)) => (x.trim(), k.trim()),
                None => (item, "1"),
            };
            let x: usize = x
                .parse()
                .map_err(|_| Error::Parse(format!("`{x}` is not an element")))?;
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("`{k}` is not a multiplicity")))?;
            if x >= n {
                return Err(Error::ElementOutOfRange { x, n });
            }
            m.mult[x] += k;
        }
        Ok(m)
    }
}

impl Serialize for CyclicMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicMultiset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
