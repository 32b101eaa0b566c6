//! Chern numbers of Kummer covers branched along an arrangement and the
//! Hirzebruch polynomial `P(n) = (3 c2 - c1^2) / n^(d-3)`.
//!
//! All quantities are quadratics in the cover order `n` with integer
//! coefficients computed straight from `(d, t_r)`.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tvector::TVector;

/// `a n^2 + b n + c`. Serialized as the triple `[a, b, c]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 3]", into = "[i64; 3]")]
pub struct QuadraticPolynomial {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticPolynomial {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        QuadraticPolynomial { a, b, c }
    }

    pub fn coefficients(self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn eval(self, n: i64) -> i128 {
        let n = n as i128;
        self.a as i128 * n * n + self.b as i128 * n + self.c as i128
    }

    pub fn is_zero(self) -> bool {
        self == Self::new(0, 0, 0)
    }

    /// Upper bound on the absolute value of any integer root, or `None` when the
    /// polynomial vanishes identically.
    pub fn integer_root_bound(self) -> Option<u64> {
        let (a, b, c) = (
            self.a.unsigned_abs(),
            self.b.unsigned_abs(),
            self.c.unsigned_abs(),
        );
        // Cauchy: |x| <= 1 + max(|b|, |c|) / |a|
        b.max(c)
            .checked_div(a)
            .map(|q| q + 1)
            .or_else(|| c.checked_div(b))
            .or_else(|| (c != 0).then_some(0))
    }
}

impl From<[i64; 3]> for QuadraticPolynomial {
    fn from([a, b, c]: [i64; 3]) -> Self {
        QuadraticPolynomial { a, b, c }
    }
}

impl From<QuadraticPolynomial> for [i64; 3] {
    fn from(p: QuadraticPolynomial) -> Self {
        p.coefficients()
    }
}

impl std::ops::Sub for QuadraticPolynomial {
    type Output = QuadraticPolynomial;

    fn sub(self, rhs: Self) -> Self {
        QuadraticPolynomial::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c)
    }
}

impl std::ops::Mul<QuadraticPolynomial> for i64 {
    type Output = QuadraticPolynomial;

    fn mul(self, p: QuadraticPolynomial) -> QuadraticPolynomial {
        QuadraticPolynomial::new(self * p.a, self * p.b, self * p.c)
    }
}

/// Renders as `n^2 - 10n + 25`, `9n^2 - 54n + 81`, `-n + 3`, or `0`.
impl fmt::Display for QuadraticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(self.a, "n^2"), (self.b, "n"), (self.c, "")];
        let mut first = true;
        for (coef, var) in terms {
            if coef == 0 {
                continue;
            }
            let mag = coef.unsigned_abs();
            if first {
                if coef < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if coef < 0 { " - " } else { " + " })?;
            }
            if mag != 1 || var.is_empty() {
                write!(f, "{mag}")?;
            }
            f.write_str(var)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Chern numbers of `Y_n` divided by `n^(d-3)`, as quadratics in `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernProfile {
    pub c2_normalized: QuadraticPolynomial,
    pub c1sq_normalized: QuadraticPolynomial,
}

impl ChernProfile {
    /// `3 c2 - c1^2`, coefficient by coefficient.
    pub fn defect(&self) -> QuadraticPolynomial {
        3 * self.c2_normalized - self.c1sq_normalized
    }
}

/// Which Kodaira-dimension hypotheses hold for the arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KodairaApplicability {
    /// `t_d = t_{d-1} = t_{d-2} = 0`; covers every `n >= 2`.
    pub nonneg_kodaira_n2: bool,
    /// `t_d = t_{d-1} = 0` and `d >= 6`; covers `n >= 3`.
    pub nonneg_kodaira_n3: bool,
}

impl KodairaApplicability {
    /// Whether `Y_n` is known to have non-negative Kodaira dimension.
    pub fn covers(self, n: u32) -> bool {
        match n {
            0 | 1 => false,
            2 => self.nonneg_kodaira_n2,
            _ => self.nonneg_kodaira_n2 || self.nonneg_kodaira_n3,
        }
    }
}

fn check_construction(tv: &TVector) -> Result<()> {
    let d = tv.d();
    if d < 4 {
        return Err(Error::TooFewLines { d, min: 4 });
    }
    let top = tv.t(d);
    if top > 0 {
        return Err(Error::PencilPoint { d, count: top });
    }
    Ok(())
}

struct Counts {
    d: i64,
    f0: i64,
    f1: i64,
    t2: i64,
}

fn counts(tv: &TVector) -> Counts {
    Counts {
        d: tv.d() as i64,
        f0: tv.f0() as i64,
        f1: tv.f1() as i64,
        t2: tv.t(2) as i64,
    }
}

pub fn chern_profile(tv: &TVector) -> Result<ChernProfile> {
    check_construction(tv)?;
    let Counts { d, f0, f1, t2 } = counts(tv);
    Ok(ChernProfile {
        c2_normalized: QuadraticPolynomial::new(3 - 2 * d + f1 - f0, 2 * (d - f1 + f0), f1 - t2),
        c1sq_normalized: QuadraticPolynomial::new(
            -5 * d + 9 + 3 * f1 - 4 * f0,
            4 * (d - f1 + f0),
            f1 - f0 + d + t2,
        ),
    })
}

pub fn hirzebruch_polynomial(tv: &TVector) -> Result<QuadraticPolynomial> {
    check_construction(tv)?;
    let Counts { d, f0, f1, t2 } = counts(tv);
    Ok(QuadraticPolynomial::new(
        f0 - d,
        2 * (d - f1 + f0),
        2 * f1 + f0 - d - 4 * t2,
    ))
}

pub fn kodaira_applicability(tv: &TVector) -> KodairaApplicability {
    let top_two_clear = tv.t_from_top(0) == 0 && tv.t_from_top(1) == 0;
    KodairaApplicability {
        nonneg_kodaira_n2: top_two_clear && tv.t_from_top(2) == 0,
        nonneg_kodaira_n3: top_two_clear && tv.d() >= 6,
    }
}

/// Every `n` in `[2, n_max]` where `P(n) = 0` and the Kodaira hypothesis for
/// that `n` holds. The scan stops at the integer-root bound of `P` when that
/// is smaller than `n_max`.
pub fn ball_quotient_orders(tv: &TVector, n_max: u32) -> Result<Vec<u32>> {
    let p = hirzebruch_polynomial(tv)?;
    let flags = kodaira_applicability(tv);
    let upper = match p.integer_root_bound() {
        Some(bound) => bound.min(n_max as u64) as u32,
        None => n_max,
    };
    Ok((2..=upper)
        .filter(|&n| p.eval(n as i64) == 0 && flags.covers(n))
        .collect())
}

/// `c2(Y_n)` and `c1^2(Y_n)` themselves, i.e. the normalized values times
/// `n^(d-3)`.
pub fn absolute_chern_numbers(tv: &TVector, n: u32) -> Result<(BigInt, BigInt)> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let profile = chern_profile(tv)?;
    let factor = BigInt::from(n).pow(tv.d() - 3);
    Ok((
        BigInt::from(profile.c2_normalized.eval(n as i64)) * &factor,
        BigInt::from(profile.c1sq_normalized.eval(n as i64)) * &factor,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tv(s: &str) -> TVector {
        s.parse().unwrap()
    }

    #[test]
    fn a16_profile_at_five() {
        let p = chern_profile(&tv("d=6;t2=3;t3=4")).unwrap();
        assert_eq!(p.c2_normalized.eval(5), 15);
        assert_eq!(p.c1sq_normalized.eval(5), 45);
        assert_eq!(p.c1sq_normalized.eval(5), 3 * p.c2_normalized.eval(5));
    }

    #[test]
    fn hesse_profile_defect_vanishes_at_three() {
        let p = chern_profile(&tv("d=12;t2=12;t4=9")).unwrap();
        assert_eq!(3 * p.c2_normalized.eval(3) - p.c1sq_normalized.eval(3), 0);
    }

    #[test]
    fn generic_four_lines() {
        let g = tv("d=4;t2=6");
        let p = chern_profile(&g).unwrap();
        assert_eq!(p.c2_normalized, QuadraticPolynomial::new(1, -4, 6));
        assert_eq!(p.c2_normalized.eval(2), 2);
        assert_eq!(
            hirzebruch_polynomial(&g).unwrap(),
            QuadraticPolynomial::new(2, -4, 2)
        );
        assert_eq!(ball_quotient_orders(&g, 100).unwrap(), Vec::<u32>::new());
    }

    #[test]
    fn golden_polynomials() {
        assert_eq!(
            hirzebruch_polynomial(&tv("d=6;t2=3;t3=4")).unwrap(),
            QuadraticPolynomial::new(1, -10, 25)
        );
        assert_eq!(
            hirzebruch_polynomial(&tv("d=12;t2=12;t4=9")).unwrap(),
            QuadraticPolynomial::new(9, -54, 81)
        );
    }

    #[test]
    fn ball_quotient_examples() {
        assert_eq!(
            ball_quotient_orders(&tv("d=6;t2=3;t3=4"), 100).unwrap(),
            [5]
        );
        assert_eq!(
            ball_quotient_orders(&tv("d=12;t2=12;t4=9"), 100).unwrap(),
            [3]
        );
        // n_max below the root
        assert!(ball_quotient_orders(&tv("d=6;t2=3;t3=4"), 4)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn construction_guards() {
        assert!(matches!(
            hirzebruch_polynomial(&tv("d=5;t5=1")),
            Err(Error::PencilPoint { d: 5, count: 1 })
        ));
        assert!(matches!(
            chern_profile(&tv("d=3;t2=3")),
            Err(Error::TooFewLines { d: 3, min: 4 })
        ));
        assert!(ball_quotient_orders(&tv("d=5;t5=1"), 10).is_err());
    }

    #[test]
    fn kodaira_flags() {
        let a16 = kodaira_applicability(&tv("d=6;t2=3;t3=4"));
        assert!(a16.nonneg_kodaira_n2 && a16.nonneg_kodaira_n3);

        let near = kodaira_applicability(&tv("d=6;t2=9;t4=1"));
        assert!(!near.nonneg_kodaira_n2);
        assert!(near.nonneg_kodaira_n3);
        assert!(!near.covers(2) && near.covers(3));

        let pencil = kodaira_applicability(&tv("d=5;t5=1"));
        assert!(!pencil.nonneg_kodaira_n2 && !pencil.nonneg_kodaira_n3);

        // d < 6 never gets the n >= 3 branch
        let five = kodaira_applicability(&tv("d=5;t2=10"));
        assert!(five.nonneg_kodaira_n2 && !five.nonneg_kodaira_n3);
    }

    #[test]
    fn n_two_needs_the_strict_branch() {
        let flags = KodairaApplicability {
            nonneg_kodaira_n2: false,
            nonneg_kodaira_n3: true,
        };
        assert!(!flags.covers(2));
        assert!(flags.covers(7));
    }

    #[test]
    fn rendering() {
        assert_eq!(
            QuadraticPolynomial::new(1, -10, 25).to_string(),
            "n^2 - 10n + 25"
        );
        assert_eq!(
            QuadraticPolynomial::new(9, -54, 81).to_string(),
            "9n^2 - 54n + 81"
        );
        assert_eq!(QuadraticPolynomial::new(0, -1, 3).to_string(), "-n + 3");
        assert_eq!(QuadraticPolynomial::new(-2, 0, -1).to_string(), "-2n^2 - 1");
        assert_eq!(QuadraticPolynomial::new(0, 0, 0).to_string(), "0");
        assert_eq!(
            serde_json::to_string(&QuadraticPolynomial::new(1, -10, 25)).unwrap(),
            "[1,-10,25]"
        );
    }

    #[test]
    fn absolute_values_scale_by_power() {
        let (c2, c1sq) = absolute_chern_numbers(&tv("d=6;t2=3;t3=4"), 5).unwrap();
        assert_eq!(c2, BigInt::from(15 * 125));
        assert_eq!(c1sq, BigInt::from(45 * 125));
        let (big, _) = absolute_chern_numbers(&tv("d=40;t2=780"), 1000).unwrap();
        assert!(big.to_string().len() > 100);
    }

    #[test]
    fn root_bound_is_sound() {
        for (a, b, c) in [
            (1, -10, 25),
            (9, -54, 81),
            (2, -4, 2),
            (0, 3, -12),
            (1, 0, -1_000_000),
        ] {
            let p = QuadraticPolynomial::new(a, b, c);
            let bound = p.integer_root_bound().unwrap() as i64;
            for n in (bound + 1)..(bound + 2000) {
                assert_ne!(p.eval(n), 0, "{p} has a root {n} past {bound}");
            }
        }
    }

    fn arb_construction_tvector() -> impl Strategy<Value = TVector> {
        (4u32..40).prop_flat_map(|d| {
            prop::collection::btree_map(2..d, 0u64..300, 0..8)
                .prop_map(move |m| TVector::new(d, m).unwrap())
        })
    }

    proptest! {
        #[test]
        fn defect_equals_polynomial(tv in arb_construction_tvector()) {
            let profile = chern_profile(&tv).unwrap();
            prop_assert_eq!(profile.defect(), hirzebruch_polynomial(&tv).unwrap());
        }
    }
}
