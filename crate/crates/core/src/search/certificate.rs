//! Coefficient-domination arguments.
//!
//! Given the ball-quotient equality `sum c_r t_r = C d` for an order `n` and
//! a Hirzebruch-family inequality `sum a_r t_r >= A d` with `a_2 = A` and
//! `c_2 = C`, scaling both to the same `t_2` coefficient and subtracting
//! gives `sum_{r>=3} (A c_r - C a_r) t_r <= 0`. When every coefficient of
//! that combination is nonnegative, each `t_r` with a positive coefficient
//! must vanish, and what remains of the equality is the residual equation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequality::InequalityId;
use crate::series::{gcd, RSeries};
use crate::tvector::TVector;

use super::constraint::{equality_constraint, EqualityConstraint};

/// Multiplicities forced to vanish: every `r` in `listed` and every `r >= from`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedZero {
    pub listed: BTreeSet<u32>,
    pub from: Option<u32>,
}

impl ForcedZero {
    pub fn contains(&self, r: u32) -> bool {
        self.listed.contains(&r) || self.from.is_some_and(|f| r >= f)
    }

    /// Whether every `r >= 3` is forced.
    pub fn covers_all_from_three(&self) -> bool {
        match self.from {
            Some(f) => (3..f).all(|r| self.listed.contains(&r)),
            None => false,
        }
    }

    /// `true` if this forces at least everything `other` does.
    pub fn is_superset_of(&self, other: &ForcedZero) -> bool {
        let tail_ok = match (self.from, other.from) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => (b..a).all(|r| self.listed.contains(&r)),
        };
        tail_ok && other.listed.iter().all(|&r| self.contains(r))
    }
}

impl fmt::Display for ForcedZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.listed.iter().map(|r| r.to_string()).collect();
        if let Some(from) = self.from {
            parts.push(format!("r >= {from}"));
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The ball-quotient equality with the forced multiplicities removed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub equality: EqualityConstraint,
    pub forced_zero: ForcedZero,
}

impl Residual {
    /// Coefficient of `t_r`, or `None` if `t_r` is forced to vanish.
    pub fn coeff(&self, r: u32) -> Option<i64> {
        (!self.forced_zero.contains(r)).then(|| self.equality.coeff(r))
    }

    pub fn d_coeff(&self) -> i64 {
        self.equality.d_coeff
    }

    /// Multiplicities `3 <= r <= d` not forced to vanish.
    pub fn free_multiplicities(&self, d: u32) -> Vec<u32> {
        (3..=d).filter(|&r| !self.forced_zero.contains(r)).collect()
    }

    /// Whether `tv` is supported on free multiplicities and satisfies the
    /// residual equation.
    pub fn is_satisfied(&self, tv: &TVector) -> bool {
        tv.entries().all(|(r, _)| !self.forced_zero.contains(r)) && self.equality.is_satisfied(tv)
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fz = &self.forced_zero;
        f.write_str(&self.equality.render_filtered(|r| !fz.contains(r), fz.from))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceCertificate {
    pub n: u32,
    pub companion: InequalityId,
    pub equality: EqualityConstraint,
    /// Multiplier applied to the equality (the inequality's `d` coefficient).
    pub equality_multiplier: i64,
    /// Multiplier applied to the inequality (the equality's `d` coefficient).
    pub inequality_multiplier: i64,
    /// Coefficients `c_r` of the derived `sum c_r t_r <= 0`.
    pub combination: RSeries,
    pub forced_zero: ForcedZero,
    pub residual: Residual,
}

impl DominanceCertificate {
    /// Renders the derived inequality up to `r_max`.
    pub fn derived_inequality(&self, r_max: u32) -> String {
        let terms: Vec<String> = (3..=r_max)
            .filter_map(|r| {
                let c = self.combination.coeff(r);
                match c {
                    0 => None,
                    1 => Some(format!("t{r}")),
                    _ => Some(format!("{c}t{r}")),
                }
            })
            .collect();
        let tail = format!(
            "{}r{:+}",
            self.combination.slope, self.combination.intercept
        );
        if terms.is_empty() {
            format!("sum_{{r>{r_max}}} ({tail}) t_r <= 0")
        } else {
            format!(
                "{} + sum_{{r>{r_max}}} ({tail}) t_r <= 0",
                terms.join(" + ")
            )
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DominanceOutcome {
    Certificate(Box<DominanceCertificate>),
    /// Some coefficient of the combination is negative.
    Inconclusive {
        n: u32,
        companion: InequalityId,
        reason: String,
    },
}

impl DominanceOutcome {
    pub fn certificate(&self) -> Option<&DominanceCertificate> {
        match self {
            Self::Certificate(c) => Some(c),
            Self::Inconclusive { .. } => None,
        }
    }
}

pub fn dominance_certificate(n: u32, companion: InequalityId) -> Result<DominanceOutcome> {
    let (form, ineq_d) = companion
        .linear_form()
        .ok_or(Error::NotHirzebruchFamily(companion))?;
    let equality = equality_constraint(n)?;
    debug_assert_eq!(form.coeff(2), ineq_d);
    debug_assert_eq!(equality.coeff(2), equality.d_coeff);

    let g = gcd(ineq_d, equality.d_coeff);
    let equality_multiplier = ineq_d / g;
    let inequality_multiplier = equality.d_coeff / g;
    let combination = equality
        .coeff
        .combine(equality_multiplier, &form, inequality_multiplier);
    debug_assert_eq!(combination.coeff(2), 0);

    if !combination.nonnegative_from(3) {
        let r = (3..combination.tail_start())
            .find(|&r| combination.coeff(r) < 0)
            .unwrap_or_else(|| {
                // slope < 0 or the tail start is negative
                (combination.tail_start()..)
                    .find(|&r| combination.coeff(r) < 0)
                    .unwrap()
            });
        return Ok(DominanceOutcome::Inconclusive {
            n,
            companion,
            reason: format!(
                "combined coefficient of t_{r} is {}; nothing can be forced from a negative term",
                combination.coeff(r)
            ),
        });
    }

    let from = combination.positive_from(3);
    let listed_end = from.unwrap_or_else(|| combination.tail_start());
    let listed = (3..listed_end)
        .filter(|&r| combination.coeff(r) > 0)
        .collect();
    let forced_zero = ForcedZero { listed, from };
    Ok(DominanceOutcome::Certificate(Box::new(
        DominanceCertificate {
            n,
            companion,
            residual: Residual {
                equality: equality.clone(),
                forced_zero: forced_zero.clone(),
            },
            equality,
            equality_multiplier,
            inequality_multiplier,
            combination,
            forced_zero,
        },
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use InequalityId::*;

    fn cert(n: u32, id: InequalityId) -> DominanceCertificate {
        dominance_certificate(n, id)
            .unwrap()
            .certificate()
            .unwrap()
            .clone()
    }

    #[test]
    fn order_four_improved_forces_everything() {
        let c = cert(4, HirzebruchImproved);
        assert_eq!(c.forced_zero.listed, BTreeSet::from([3, 4]));
        assert_eq!(c.forced_zero.from, Some(5));
        assert!(c.forced_zero.covers_all_from_three());
        assert_eq!(c.residual.to_string(), "9t2 = 9d");
        assert_eq!(c.residual.coeff(2), Some(9));
        assert_eq!(
            c.derived_inequality(6),
            "t3 + 4t4 + 16t5 + 28t6 + sum_{r>6} (12r-44) t_r <= 0"
        );
        assert_eq!(c.residual.coeff(3), None);
    }

    #[test]
    fn order_seven_improved_forces_everything() {
        let c = cert(7, HirzebruchImproved);
        assert!(c.forced_zero.covers_all_from_three());
        assert_eq!((c.residual.coeff(2), c.residual.d_coeff()), (Some(9), 9));
    }

    #[test]
    fn order_five_strong_keeps_triple_points() {
        let c = cert(5, HirzebruchStrong);
        assert_eq!(c.forced_zero.listed, BTreeSet::from([4]));
        assert_eq!(c.forced_zero.from, Some(5));
        assert_eq!(c.residual.to_string(), "4t2 + 3t3 = 4d");
        assert_eq!(c.residual.free_multiplicities(8), [3]);
    }

    #[test]
    fn order_three_strong_leaves_t4_t5() {
        let c = cert(3, HirzebruchStrong);
        assert_eq!(c.forced_zero.listed, BTreeSet::from([3]));
        assert_eq!(c.forced_zero.from, Some(6));
        assert_eq!(c.residual.to_string(), "t2 = d + t5");
        assert_eq!(c.residual.free_multiplicities(10), [4, 5]);
    }

    #[test]
    fn weak_at_order_four_is_inconclusive() {
        match dominance_certificate(4, HirzebruchWeak).unwrap() {
            DominanceOutcome::Inconclusive { reason, .. } => assert!(reason.contains("t_3")),
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn non_family_companions_are_rejected() {
        assert!(matches!(
            dominance_certificate(4, Melchior),
            Err(Error::NotHirzebruchFamily(Melchior))
        ));
        assert!(dominance_certificate(4, Shnurnikov).is_err());
    }

    #[test]
    fn forced_zero_comparisons() {
        let a = ForcedZero {
            listed: BTreeSet::from([3]),
            from: Some(6),
        };
        let b = ForcedZero {
            listed: BTreeSet::from([3]),
            from: None,
        };
        assert!(a.is_superset_of(&b));
        assert!(!b.is_superset_of(&a));
        let c = ForcedZero {
            listed: BTreeSet::from([3, 4]),
            from: Some(5),
        };
        assert!(c.is_superset_of(&a));
        assert!(!a.is_superset_of(&c));
    }
}
