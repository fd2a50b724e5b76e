use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groupring::residue::ResidueTable;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors_of(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// `Some(p)` when `d = p^k` for a prime `p` and `k ≥ 1`.
pub fn prime_power_base(d: usize) -> Option<usize> {
    match factorize(d).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn is_square_free(n: usize) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn radical(n: usize) -> usize {
    factorize(n).iter().map(|&(p, _)| p).product()
}

pub fn totient(n: usize) -> usize {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

struct CtxInner {
    n: usize,
    divisors: Vec<usize>,
    factorization: Vec<(usize, u32)>,
    units: Vec<usize>,
    residues: OnceLock<Option<ResidueTable>>,
}

/// The group `Z_n` together with its divisor lattice.
///
/// Cheap to clone; all clones share the same lazily built tables.
#[derive(Clone)]
pub struct CyclicGroupCtx {
    inner: Arc<CtxInner>,
}

impl CyclicGroupCtx {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        let units = (0..n).filter(|&a| gcd(a, n) == 1).collect();
        Ok(CyclicGroupCtx {
            inner: Arc::new(CtxInner {
                n,
                divisors: divisors_of(n),
                factorization: factorize(n),
                units,
                residues: OnceLock::new(),
            }),
        })
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    /// All divisors of `n` in increasing order.
    pub fn divisors(&self) -> &[usize] {
        &self.inner.divisors
    }

    pub fn nontrivial_divisors(&self) -> impl Iterator<Item = usize> + '_ {
        self.inner.divisors.iter().copied().filter(|&d| d > 1)
    }

    pub fn prime_factorization(&self) -> &[(usize, u32)] {
        &self.inner.factorization
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        self.inner.factorization.iter().map(|&(p, _)| p)
    }

    /// Residues coprime to `n`, increasing.
    pub fn units(&self) -> &[usize] {
        &self.inner.units
    }

    pub fn divides_n(&self, d: usize) -> bool {
        d != 0 && self.inner.n.is_multiple_of(d)
    }

    pub fn require_divisor(&self, d: usize) -> Result<()> {
        if self.divides_n(d) {
            Ok(())
        } else {
            Err(Error::NotADivisor { d, n: self.n() })
        }
    }

    /// Order of `x` in `Z_n`, i.e. `n / gcd(n, x)`: the divisor class of `x`.
    pub fn order_of(&self, x: usize) -> usize {
        let n = self.inner.n;
        n / gcd(n, x % n)
    }

    /// Divisor-class index of `x` into [`Self::divisors`].
    pub fn class_index(&self, x: usize) -> usize {
        let d = self.order_of(x);
        self.inner.divisors.binary_search(&d).expect("orders are divisors")
    }

    pub fn divisor_index(&self, d: usize) -> Option<usize> {
        self.inner.divisors.binary_search(&d).ok()
    }

    pub(crate) fn residue_table(&self) -> Option<&ResidueTable> {
        self.inner.residues.get_or_init(|| ResidueTable::build(self)).as_ref()
    }
}

impl PartialEq for CyclicGroupCtx {
    fn eq(&self, other: &Self) -> bool {
        self.inner.n == other.inner.n
    }
}

impl Eq for CyclicGroupCtx {}

impl fmt::Debug for CyclicGroupCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.inner.n)
    }
}
