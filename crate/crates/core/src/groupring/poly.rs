use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groupring::ctx::divisors_of;

/// Polynomial with arbitrary-precision integer coefficients, `coeffs[k]` is
/// the coefficient of `x^k`. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::monomial(1, 0)
    }

    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(c);
        IntPolynomial::from_bigints(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        IntPolynomial::from_bigints(coeffs)
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        IntPolynomial::from_bigints(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn from_bigints(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn small_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let mut c = self.coeffs.get(k).cloned().unwrap_or_default();
                if let Some(o) = other.coeffs.get(k) {
                    c += o;
                }
                c
            })
            .collect();
        IntPolynomial::from_bigints(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let mut c = self.coeffs.get(k).cloned().unwrap_or_default();
                if let Some(o) = other.coeffs.get(k) {
                    c -= o;
                }
                c
            })
            .collect();
        IntPolynomial::from_bigints(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        if let (Some(a), Some(b)) = (self.small_coeffs(), other.small_coeffs()) {
            if let Some(prod) = mul_small(&a, &b) {
                return IntPolynomial::from_bigints(prod.into_iter().map(BigInt::from).collect());
            }
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::from_bigints(out)
    }

    /// Quotient and remainder by a monic divisor; both stay integral.
    ///
    /// Panics if `divisor` is not monic.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (IntPolynomial::zero(), self.clone());
        }
        if let (Some(a), Some(b)) = (self.small_coeffs(), divisor.small_coeffs()) {
            if let Some((q, r)) = div_rem_small(&a, &b) {
                return (
                    IntPolynomial::from_coeffs(q.into_iter().map(|c| c as i64)),
                    IntPolynomial::from_coeffs(r.into_iter().map(|c| c as i64)),
                );
            }
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[k]);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs[..dd].iter().enumerate() {
                if !b.is_zero() {
                    rem[k - dd + j] -= &c * b;
                }
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (IntPolynomial::from_bigints(quot), IntPolynomial::from_bigints(rem))
    }

    pub fn rem_monic(&self, divisor: &IntPolynomial) -> IntPolynomial {
        self.div_rem_monic(divisor).1
    }

    /// Reduction modulo `x^m - 1`: exponents are folded mod `m`.
    pub fn rem_x_pow_minus_one(&self, m: usize) -> IntPolynomial {
        assert!(m > 0);
        let mut out = vec![BigInt::zero(); m.min(self.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % m] += c;
        }
        IntPolynomial::from_bigints(out)
    }
}

fn mul_small(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = out[i + j].checked_add(x as i128 * y as i128)?;
            }
        }
    }
    out.into_iter().map(|c| i64::try_from(c).ok()).collect()
}

/// Division by a monic divisor in `i128`; `None` on overflow.
pub(crate) fn div_rem_small(a: &[i64], divisor: &[i64]) -> Option<(Vec<i128>, Vec<i128>)> {
    let dd = divisor.len() - 1;
    let mut rem: Vec<i128> = a.iter().map(|&c| c as i128).collect();
    let mut quot = vec![0i128; rem.len().saturating_sub(dd)];
    for k in (dd..rem.len()).rev() {
        let c = std::mem::take(&mut rem[k]);
        if c == 0 {
            continue;
        }
        for (j, &b) in divisor[..dd].iter().enumerate() {
            if b != 0 {
                let t = c.checked_mul(b as i128)?;
                rem[k - dd + j] = rem[k - dd + j].checked_sub(t)?;
            }
        }
        quot[k - dd] = c;
    }
    rem.truncate(dd);
    if rem.iter().chain(quot.iter()).any(|c| i64::try_from(*c).is_err()) {
        return None;
    }
    Some((quot, rem))
}

type CycloCache = RwLock<HashMap<usize, Arc<IntPolynomial>>>;

fn cyclo_cache() -> &'static CycloCache {
    static CACHE: OnceLock<CycloCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial `Φ_d`, obtained by dividing `x^d - 1`
/// exactly by `Φ_e` for every proper divisor `e` of `d`. Results are cached
/// process-wide.
pub fn cyclotomic_poly(d: usize) -> Result<Arc<IntPolynomial>> {
    if d == 0 {
        return Err(Error::ZeroCyclotomicIndex);
    }
    if let Some(p) = cyclo_cache().read().expect("cache poisoned").get(&d) {
        return Ok(Arc::clone(p));
    }
    let mut acc = IntPolynomial::x_pow_minus_one(d);
    for e in divisors_of(d) {
        if e == d {
            break;
        }
        let phi_e = cyclotomic_poly(e)?;
        let (q, r) = acc.div_rem_monic(&phi_e);
        debug_assert!(r.is_zero(), "Φ_{e} must divide x^{d} - 1");
        acc = q;
    }
    let phi = Arc::new(acc);
    cyclo_cache()
        .write()
        .expect("cache poisoned")
        .entry(d)
        .or_insert_with(|| Arc::clone(&phi));
    Ok(phi)
}

impl fmt::Display for IntPolynomial {
    /// Sparse `c*x^k` terms in ascending degree, joined by ` + `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{c}*x^{k}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(IntPolynomial::zero());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in s.split(" + ") {
            let (c, k) = term
                .trim()
                .split_once("*x^")
                .ok_or_else(|| Error::Parse(format!("bad polynomial term `{term}`")))?;
            let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))?;
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad exponent `{k}`")))?;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(IntPolynomial::from_bigints(coeffs))
    }
}

impl IntPolynomial {
    /// Maximum absolute coefficient, zero for the zero polynomial.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }
}
