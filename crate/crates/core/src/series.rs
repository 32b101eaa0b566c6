//! Integer coefficient sequences indexed by multiplicity `r >= 2`.
//!
//! Every linear form on t-vectors used here has finitely many special
//! coefficients for small `r` followed by a coefficient that is affine in `r`.
//! Storing that shape exactly lets sign arguments cover all `r` at once.

use serde::{Deserialize, Serialize};

use crate::tvector::TVector;

/// `coeff(r) = head[r - 2]` for `r < 2 + head.len()`, otherwise
/// `slope * r + intercept`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RSeries {
    pub head: Vec<i64>,
    pub slope: i64,
    pub intercept: i64,
}

impl RSeries {
    pub fn new(head: Vec<i64>, slope: i64, intercept: i64) -> Self {
        RSeries {
            head,
            slope,
            intercept,
        }
    }

    /// First multiplicity governed by the affine tail.
    pub fn tail_start(&self) -> u32 {
        2 + self.head.len() as u32
    }

    pub fn coeff(&self, r: u32) -> i64 {
        debug_assert!(r >= 2);
        match self.head.get((r - 2) as usize) {
            Some(&c) => c,
            None => self.slope * r as i64 + self.intercept,
        }
    }

    /// `sum_r coeff(r) * t_r`.
    pub fn apply(&self, tv: &TVector) -> i128 {
        tv.entries()
            .map(|(r, c)| self.coeff(r) as i128 * c as i128)
            .sum()
    }

    /// `a * self - b * other`, with the head extended to cover both operands.
    pub fn combine(&self, a: i64, other: &RSeries, b: i64) -> RSeries {
        let len = self.head.len().max(other.head.len());
        let head = (0..len)
            .map(|i| {
                let r = i as u32 + 2;
                a * self.coeff(r) - b * other.coeff(r)
            })
            .collect();
        RSeries {
            head,
            slope: a * self.slope - b * other.slope,
            intercept: a * self.intercept - b * other.intercept,
        }
    }

    pub fn scale(&self, k: i64) -> RSeries {
        RSeries {
            head: self.head.iter().map(|c| c * k).collect(),
            slope: self.slope * k,
            intercept: self.intercept * k,
        }
    }

    /// Divides every coefficient by `k`, which must divide all of them.
    pub fn divide(&self, k: i64) -> RSeries {
        debug_assert!(k != 0 && self.content() % k == 0);
        RSeries {
            head: self.head.iter().map(|c| c / k).collect(),
            slope: self.slope / k,
            intercept: self.intercept / k,
        }
    }

    /// gcd of all coefficients over every `r >= 2`.
    pub fn content(&self) -> i64 {
        // The tail values at consecutive r differ by the slope, so the tail
        // contributes gcd(value at start, slope).
        let start = self.tail_start();
        let mut g = gcd(self.coeff(start), self.slope);
        for &c in &self.head {
            g = gcd(g, c);
        }
        g
    }

    /// Smallest `r >= from` with `coeff(r) > 0` for every larger `r` as well,
    /// if the tail is eventually positive.
    pub fn positive_from(&self, from: u32) -> Option<u32> {
        let start = self.tail_start().max(from);
        if self.slope < 0 || (self.slope == 0 && self.coeff(start) <= 0) {
            return None;
        }
        let mut r = start;
        while self.coeff(r) <= 0 {
            r += 1;
        }
        Some(r)
    }

    /// Whether `coeff(r) >= 0` for every `r >= from`.
    pub fn nonnegative_from(&self, from: u32) -> bool {
        let start = self.tail_start();
        let head_ok = (from..start).all(|r| self.coeff(r) >= 0);
        head_ok && self.slope >= 0 && self.coeff(start.max(from)) >= 0
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
