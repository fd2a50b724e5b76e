//! Case labels for `|S|` in a group of order `p²qr`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groupring::ctx::{factorize, gcd};

/// The primes of `n = p²qr`, with `p` the squared prime and `q < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct P2qrShape {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl P2qrShape {
    pub fn of(n: usize) -> Result<Self> {
        let f = factorize(n);
        let shape_err = Error::FactorizationShape {
            n,
            expected: "p^2 q r with distinct primes",
        };
        if f.len() != 3 {
            return Err(shape_err);
        }
        let squared: Vec<usize> = f.iter().filter(|&&(_, e)| e == 2).map(|&(p, _)| p).collect();
        let single: Vec<usize> = f.iter().filter(|&&(_, e)| e == 1).map(|&(p, _)| p).collect();
        if squared.len() != 1 || single.len() != 2 {
            return Err(shape_err);
        }
        Ok(P2qrShape {
            p: squared[0],
            q: single[0],
            r: single[1],
        })
    }

    pub fn n(&self) -> usize {
        self.p * self.p * self.q * self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseLabel {
    P2q,
    P2r,
    Pqr,
    P2,
    Pq,
    Pr,
    Qr,
    P,
    Q,
    R,
    One,
    Other,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 12] = [
        CaseLabel::P2q,
        CaseLabel::P2r,
        CaseLabel::Pqr,
        CaseLabel::P2,
        CaseLabel::Pq,
        CaseLabel::Pr,
        CaseLabel::Qr,
        CaseLabel::P,
        CaseLabel::Q,
        CaseLabel::R,
        CaseLabel::One,
        CaseLabel::Other,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::P2q => "p2q",
            CaseLabel::P2r => "p2r",
            CaseLabel::Pqr => "pqr",
            CaseLabel::P2 => "p2",
            CaseLabel::Pq => "pq",
            CaseLabel::Pr => "pr",
            CaseLabel::Qr => "qr",
            CaseLabel::P => "p",
            CaseLabel::Q => "q",
            CaseLabel::R => "r",
            CaseLabel::One => "1",
            CaseLabel::Other => "other",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Labels `size` by its exact divisor within `n`: the largest divisor of
/// `n` dividing it, which is `gcd(n, size)`.
pub fn case_of_size(shape: &P2qrShape, size: usize) -> CaseLabel {
    let P2qrShape { p, q, r } = *shape;
    let g = gcd(shape.n(), size);
    match g {
        _ if g == p * p * q => CaseLabel::P2q,
        _ if g == p * p * r => CaseLabel::P2r,
        _ if g == p * q * r => CaseLabel::Pqr,
        _ if g == p * p => CaseLabel::P2,
        _ if g == p * q => CaseLabel::Pq,
        _ if g == p * r => CaseLabel::Pr,
        _ if g == q * r => CaseLabel::Qr,
        _ if g == p => CaseLabel::P,
        _ if g == q => CaseLabel::Q,
        _ if g == r => CaseLabel::R,
        1 => CaseLabel::One,
        _ => CaseLabel::Other,
    }
}

pub fn case_classify(s: &crate::CyclicMultiset) -> Result<CaseLabel> {
    s.require_set()?;
    let shape = P2qrShape::of(s.n())?;
    Ok(case_of_size(&shape, s.total() as usize))
}
