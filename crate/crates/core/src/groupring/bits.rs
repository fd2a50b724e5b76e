//! Fixed-width bitsets over the elements of `Z_n`.
//!
//! `W` 64-bit words cover groups with `n ≤ 64·W`. The searches are written
//! generically over `W` and dispatched once per call through
//! [`with_width!`](crate::with_width).

use std::fmt;

/// Largest group order the bitset searches support.
pub const MAX_SEARCH_ORDER: usize = 512;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Default for Bits<W> {
    fn default() -> Self {
        Bits([0; W])
    }
}

impl<const W: usize> Bits<W> {
    pub const EMPTY: Bits<W> = Bits([0; W]);

    /// The first `n` elements.
    pub fn full(n: usize) -> Self {
        let mut b = Self::EMPTY;
        for x in 0..n {
            b.insert(x);
        }
        b
    }

    pub fn singleton(x: usize) -> Self {
        let mut b = Self::EMPTY;
        b.insert(x);
        b
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0[x >> 6] |= 1 << (x & 63);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x >> 6] &= !(1 << (x & 63));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x >> 6] >> (x & 63) & 1 == 1
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn and(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] &= o.0[i];
        }
        r
    }

    #[inline]
    pub fn or(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] |= o.0[i];
        }
        r
    }

    #[inline]
    pub fn and_not(&self, o: &Self) -> Self {
        let mut r = *self;
        for i in 0..W {
            r.0[i] &= !o.0[i];
        }
        r
    }

    #[inline]
    pub fn intersects(&self, o: &Self) -> bool {
        (0..W).any(|i| self.0[i] & o.0[i] != 0)
    }

    #[inline]
    pub fn first(&self) -> Option<usize> {
        (0..W)
            .find(|&i| self.0[i] != 0)
            .map(|i| i * 64 + self.0[i].trailing_zeros() as usize)
    }

    #[inline]
    pub fn last(&self) -> Option<usize> {
        (0..W)
            .rev()
            .find(|&i| self.0[i] != 0)
            .map(|i| i * 64 + 63 - self.0[i].leading_zeros() as usize)
    }

    /// First element not in the set, among `0..n`.
    #[inline]
    pub fn first_absent(&self, n: usize) -> Option<usize> {
        (0..W)
            .find(|&i| self.0[i] != u64::MAX)
            .map(|i| i * 64 + (!self.0[i]).trailing_zeros() as usize)
            .filter(|&x| x < n)
    }

    /// Elements strictly greater than `x`.
    #[inline]
    pub fn above(&self, x: usize) -> Self {
        let mut r = *self;
        let w = x >> 6;
        for i in 0..w {
            r.0[i] = 0;
        }
        let b = x & 63;
        r.0[w] &= if b == 63 { 0 } else { !0u64 << (b + 1) };
        r
    }

    pub fn iter(&self) -> BitsIter<W> {
        BitsIter { bits: *self }
    }

    /// `{x - t mod n : x ∈ self}`.
    pub fn rotate_down(&self, t: usize, n: usize) -> Self {
        let t = t % n;
        if t == 0 {
            return *self;
        }
        if W == 1 {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let x = self.0[0];
            let mut r = Self::EMPTY;
            r.0[0] = ((x >> t) | (x << (n - t))) & mask;
            return r;
        }
        let mut r = Self::EMPTY;
        for x in self.iter() {
            r.insert(if x >= t { x - t } else { x + n - t });
        }
        r
    }

    /// `{x + t mod n : x ∈ self}`.
    pub fn rotate_up(&self, t: usize, n: usize) -> Self {
        let t = t % n;
        self.rotate_down((n - t) % n, n)
    }

    /// Order in which the sorted element lists compare: `Less` when `self`
    /// has the smaller sorted list. Only meaningful for equal cardinalities.
    #[inline]
    pub fn cmp_sorted(&self, o: &Self) -> std::cmp::Ordering {
        for i in 0..W {
            let diff = self.0[i] ^ o.0[i];
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if self.0[i] & low != 0 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

pub struct BitsIter<const W: usize> {
    bits: Bits<W>,
}

impl<const W: usize> Iterator for BitsIter<W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        for i in 0..W {
            let w = self.bits.0[i];
            if w != 0 {
                self.bits.0[i] = w & (w - 1);
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }
}

impl<const W: usize> fmt::Debug for Bits<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Runs `$body` with `W` bound to the smallest supported word count for
/// group order `$n`, or evaluates to `Err(OrderTooLarge)`.
#[macro_export]
macro_rules! with_width {
    ($n:expr, $W:ident => $body:expr) => {{
        let n: usize = $n;
        if n <= 64 {
            const $W: usize = 1;
            Ok($body)
        } else if n <= 128 {
            const $W: usize = 2;
            Ok($body)
        } else if n <= 256 {
            const $W: usize = 4;
            Ok($body)
        } else if n <= $crate::groupring::bits::MAX_SEARCH_ORDER {
            const $W: usize = 8;
            Ok($body)
        } else {
            Err($crate::error::Error::OrderTooLarge {
                n,
                max: $crate::groupring::bits::MAX_SEARCH_ORDER,
            })
        }
    }};
}

impl<const W: usize> FromIterator<usize> for Bits<W> {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut b = Self::EMPTY;
        for x in it {
            b.insert(x);
        }
        b
    }
}
