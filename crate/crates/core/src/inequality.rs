//! Exact evaluation of the arrangement inequalities, each guarded by the
//! hypotheses under which it is known to hold.
//!
//! Comparisons are made on integers after clearing denominators (by 4 for
//! the Hirzebruch variants, by 2 for Shnurnikov's). Reports carry both sides
//! back in their original scale as reduced fractions.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::series::RSeries;
use crate::tvector::{RealizabilityClass, TVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum InequalityId {
    /// `t2 >= 3 + sum_{r>=4} (r-3) t_r`
    Melchior,
    /// `t2 + t3 >= d + sum_{r>=5} (r-4) t_r`
    HirzebruchWeak,
    /// `t2 + 3/4 t3 >= d + sum_{r>=5} (2r-9) t_r`
    HirzebruchStrong,
    /// `t2 + 3/4 t3 >= d + sum_{r>=5} (r-4) t_r`
    HirzebruchImproved,
    /// `t2 + 3/2 t3 >= 8 + sum_{r>=4} (2r - 15/2) t_r`
    Shnurnikov,
}

impl InequalityId {
    pub const ALL: [InequalityId; 5] = [
        InequalityId::Melchior,
        InequalityId::HirzebruchWeak,
        InequalityId::HirzebruchStrong,
        InequalityId::HirzebruchImproved,
        InequalityId::Shnurnikov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Melchior => "MELCHIOR",
            Self::HirzebruchWeak => "HIRZEBRUCH_WEAK",
            Self::HirzebruchStrong => "HIRZEBRUCH_STRONG",
            Self::HirzebruchImproved => "HIRZEBRUCH_IMPROVED",
            Self::Shnurnikov => "SHNURNIKOV",
        }
    }

    pub fn is_hirzebruch_family(self) -> bool {
        matches!(
            self,
            Self::HirzebruchWeak | Self::HirzebruchStrong | Self::HirzebruchImproved
        )
    }

    /// Factor that clears the denominators of the printed inequality.
    pub fn scale(self) -> i64 {
        match self {
            Self::Melchior | Self::HirzebruchWeak => 1,
            Self::HirzebruchStrong | Self::HirzebruchImproved => 4,
            Self::Shnurnikov => 2,
        }
    }

    pub fn evaluate(self, tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
        match self {
            Self::Melchior => melchior(tv, cls),
            Self::HirzebruchWeak => hirzebruch_weak(tv, cls),
            Self::HirzebruchStrong => hirzebruch_strong(tv, cls),
            Self::HirzebruchImproved => hirzebruch_improved(tv, cls),
            Self::Shnurnikov => shnurnikov(tv, cls),
        }
    }

    /// Hirzebruch-family inequalities in cleared form `sum a_r t_r >= A d`,
    /// returned as `(a, A)`.
    pub fn linear_form(self) -> Option<(RSeries, i64)> {
        match self {
            Self::HirzebruchWeak => Some((RSeries::new(vec![1, 1, 0], -1, 4), 1)),
            Self::HirzebruchStrong => Some((RSeries::new(vec![4, 3, 0], -8, 36), 4)),
            Self::HirzebruchImproved => Some((RSeries::new(vec![4, 3, 0], -4, 16), 4)),
            Self::Melchior | Self::Shnurnikov => None,
        }
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for InequalityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        Self::ALL
            .into_iter()
            .find(|id| id.name() == key || id.name().strip_prefix("HIRZEBRUCH_") == Some(&key))
            .ok_or_else(|| format!("unknown inequality `{s}`"))
    }
}

/// Outcome of evaluating one inequality on one t-vector.
///
/// Both sides are filled in even when the inequality does not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub id: InequalityId,
    pub applicable: bool,
    pub reason: Option<String>,
    pub lhs: Ratio<i64>,
    pub rhs: Ratio<i64>,
    pub satisfied: bool,
    pub slack: Ratio<i64>,
}

impl InequalityReport {
    fn new(id: InequalityId, lhs_cleared: i64, rhs_cleared: i64, problems: Vec<String>) -> Self {
        let scale = id.scale();
        let lhs = Ratio::new(lhs_cleared, scale);
        let rhs = Ratio::new(rhs_cleared, scale);
        InequalityReport {
            id,
            applicable: problems.is_empty(),
            reason: (!problems.is_empty()).then(|| problems.join("; ")),
            lhs,
            rhs,
            satisfied: lhs_cleared >= rhs_cleared,
            slack: lhs - rhs,
        }
    }

    /// Applicable and violated: the arrangement cannot exist in the asserted
    /// class.
    pub fn obstructs(&self) -> bool {
        self.applicable && !self.satisfied
    }
}

fn t(tv: &TVector, r: u32) -> i64 {
    tv.t(r) as i64
}

/// `sum_{r >= from} f(r) t_r`
fn weighted_tail(tv: &TVector, from: u32, f: impl Fn(i64) -> i64) -> i64 {
    tv.entries()
        .filter(|&(r, _)| r >= from)
        .map(|(r, c)| f(r as i64) * c as i64)
        .sum()
}

/// Guard: `t_{d-k} = 0` for each `k` in `0..count`.
fn require_top_clear(tv: &TVector, count: u32, problems: &mut Vec<String>) {
    let d = tv.d();
    for k in 0..count {
        let Some(r) = d.checked_sub(k).filter(|&r| r >= 2) else {
            continue;
        };
        if tv.t(r) != 0 {
            problems.push(format!("requires t_{r} = 0 (t_{r} = {})", tv.t(r)));
        }
    }
}

pub fn melchior(tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
    let mut problems = Vec::new();
    if cls != RealizabilityClass::RealLine {
        problems.push(format!("holds for real line arrangements, class is {cls}"));
    }
    require_top_clear(tv, 1, &mut problems);
    let lhs = t(tv, 2);
    let rhs = 3 + weighted_tail(tv, 4, |r| r - 3);
    InequalityReport::new(InequalityId::Melchior, lhs, rhs, problems)
}

fn hirzebruch_guards(
    tv: &TVector,
    cls: RealizabilityClass,
    top: u32,
    min_d: Option<u32>,
) -> Vec<String> {
    let mut problems = Vec::new();
    if !cls.is_algebraic() {
        problems.push(format!(
            "holds for algebraic line arrangements, class is {cls}"
        ));
    }
    if let Some(min_d) = min_d {
        if tv.d() < min_d {
            problems.push(format!("requires d >= {min_d}, d = {}", tv.d()));
        }
    }
    require_top_clear(tv, top, &mut problems);
    problems
}

pub fn hirzebruch_weak(tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
    let problems = hirzebruch_guards(tv, cls, 2, Some(6));
    let lhs = t(tv, 2) + t(tv, 3);
    let rhs = tv.d() as i64 + weighted_tail(tv, 5, |r| r - 4);
    InequalityReport::new(InequalityId::HirzebruchWeak, lhs, rhs, problems)
}

pub fn hirzebruch_strong(tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
    let problems = hirzebruch_guards(tv, cls, 3, None);
    let lhs = 4 * t(tv, 2) + 3 * t(tv, 3);
    let rhs = 4 * tv.d() as i64 + weighted_tail(tv, 5, |r| 8 * r - 36);
    InequalityReport::new(InequalityId::HirzebruchStrong, lhs, rhs, problems)
}

pub fn hirzebruch_improved(tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
    let problems = hirzebruch_guards(tv, cls, 2, Some(6));
    let lhs = 4 * t(tv, 2) + 3 * t(tv, 3);
    let rhs = 4 * tv.d() as i64 + weighted_tail(tv, 5, |r| 4 * r - 16);
    InequalityReport::new(InequalityId::HirzebruchImproved, lhs, rhs, problems)
}

pub fn shnurnikov(tv: &TVector, cls: RealizabilityClass) -> InequalityReport {
    let mut problems = Vec::new();
    if !cls.is_pseudoline() {
        problems.push(format!("holds for pseudoline arrangements, class is {cls}"));
    }
    require_top_clear(tv, 4, &mut problems);
    let lhs = 2 * t(tv, 2) + 3 * t(tv, 3);
    let rhs = 16 + weighted_tail(tv, 4, |r| 4 * r - 15);
    InequalityReport::new(InequalityId::Shnurnikov, lhs, rhs, problems)
}

/// All five reports, ordered by [`InequalityId`].
pub fn run_all(tv: &TVector, cls: RealizabilityClass) -> Vec<InequalityReport> {
    InequalityId::ALL
        .iter()
        .map(|id| id.evaluate(tv, cls))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use RealizabilityClass::*;

    fn tv(s: &str) -> TVector {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn melchior_examples() {
        let a16 = melchior(&tv("d=6;t2=3;t3=4"), RealLine);
        assert!(a16.applicable && a16.satisfied);
        assert_eq!((a16.lhs, a16.rhs, a16.slack), (r(3, 1), r(3, 1), r(0, 1)));

        let hesse = melchior(&tv("d=12;t2=12;t4=9"), ComplexLine);
        assert!(!hesse.applicable);
        assert!(hesse.reason.unwrap().contains("real"));

        let dual_hesse = melchior(&tv("d=9;t3=12"), RealLine);
        assert!(dual_hesse.applicable && !dual_hesse.satisfied);
        assert_eq!((dual_hesse.lhs, dual_hesse.rhs), (r(0, 1), r(3, 1)));
        assert!(dual_hesse.obstructs());

        assert!(!melchior(&tv("d=5;t5=1"), RealLine).applicable);
        // not offered for pseudolines
        assert!(!melchior(&tv("d=6;t2=3;t3=4"), Pseudoline).applicable);
    }

    #[test]
    fn weak_examples() {
        let a16 = hirzebruch_weak(&tv("d=6;t2=3;t3=4"), RealLine);
        assert!(a16.applicable && a16.satisfied);
        assert_eq!((a16.lhs, a16.rhs, a16.slack), (r(7, 1), r(6, 1), r(1, 1)));

        let hesse = hirzebruch_weak(&tv("d=12;t2=12;t4=9"), ComplexLine);
        assert!(hesse.applicable && hesse.satisfied);
        assert_eq!(hesse.slack, r(0, 1));

        let pencil = hirzebruch_weak(&tv("d=5;t5=1"), RealLine);
        assert!(!pencil.applicable);

        let small = hirzebruch_weak(&tv("d=5;t2=10"), RealLine);
        assert!(!small.applicable);
        assert!(small.reason.unwrap().contains("d >= 6"));
        assert!(!hirzebruch_weak(&tv("d=6;t2=3;t3=4"), Pseudoline).applicable);
    }

    #[test]
    fn strong_examples() {
        let a16 = hirzebruch_strong(&tv("d=6;t2=3;t3=4"), RealLine);
        assert!(a16.applicable && a16.satisfied);
        // 4*3 + 3*4 = 24 against 24, reported in original scale
        assert_eq!((a16.lhs, a16.rhs, a16.slack), (r(24, 4), r(24, 4), r(0, 1)));

        let hesse = hirzebruch_strong(&tv("d=12;t2=12;t4=9"), ComplexLine);
        assert!(hesse.applicable);
        assert_eq!((hesse.lhs, hesse.rhs), (r(48, 4), r(48, 4)));

        // Theorem A candidate [12, 9, 0] with t2 = d + t5 = 12
        let l3 = hirzebruch_strong(&tv("d=12;t2=12;t4=9"), RealLine);
        assert_eq!(l3.slack, r(0, 1));

        // t_{d-2} != 0 is outside the hypothesis
        assert!(!hirzebruch_strong(&tv("d=6;t2=9;t4=1"), RealLine).applicable);
    }

    #[test]
    fn improved_examples() {
        let a16 = hirzebruch_improved(&tv("d=6;t2=3;t3=4"), RealLine);
        assert!(a16.applicable && a16.satisfied);
        assert_eq!(a16.slack, r(0, 1));

        let x = hirzebruch_improved(&tv("d=7;t2=9;t3=3"), RealLine);
        assert_eq!((x.lhs, x.rhs), (r(45, 4), r(28, 4)));
        assert!(x.satisfied);

        let y = hirzebruch_improved(&tv("d=10;t2=5;t5=6"), RealLine);
        assert_eq!((y.lhs, y.rhs), (r(20, 4), r(40 + 24, 4)));
        assert!(!y.satisfied);
        assert_eq!(y.slack, r(-44, 4));
    }

    #[test]
    fn shnurnikov_examples() {
        let l1 = shnurnikov(&tv("d=10;t2=11;t4=4;t5=1"), RealLine);
        assert!(l1.applicable && !l1.satisfied);
        assert_eq!((l1.lhs, l1.rhs), (r(22, 2), r(16 + 4 + 5, 2)));

        let a16 = shnurnikov(&tv("d=6;t2=3;t3=4"), RealLine);
        assert!(!a16.applicable);
        assert!(a16.reason.unwrap().contains("t_3"));

        let generic = shnurnikov(&tv("d=10;t2=45"), Pseudoline);
        assert!(generic.applicable && generic.satisfied);
        assert_eq!((generic.lhs, generic.rhs), (r(90, 2), r(16, 2)));

        assert!(!shnurnikov(&tv("d=10;t2=45"), ComplexLine).applicable);
    }

    #[test]
    fn run_all_examples() {
        let a16 = run_all(&tv("d=6;t2=3;t3=4"), RealLine);
        assert_eq!(a16.len(), 5);
        assert_eq!(
            a16.iter().map(|r| r.id).collect::<Vec<_>>(),
            InequalityId::ALL
        );
        let inapplicable: Vec<_> = a16.iter().filter(|r| !r.applicable).map(|r| r.id).collect();
        assert_eq!(inapplicable, [InequalityId::Shnurnikov]);

        let hesse = run_all(&tv("d=12;t2=12;t4=9"), ComplexLine);
        let inapplicable: Vec<_> = hesse
            .iter()
            .filter(|r| !r.applicable)
            .map(|r| r.id)
            .collect();
        assert_eq!(
            inapplicable,
            [InequalityId::Melchior, InequalityId::Shnurnikov]
        );

        let pencil = run_all(&tv("d=5;t5=1"), RealLine);
        assert_eq!(pencil.iter().filter(|r| r.applicable).count(), 0);
    }

    #[test]
    fn report_json_shape() {
        let rep = hirzebruch_strong(&tv("d=6;t2=3;t3=4"), RealLine);
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["id"], "HIRZEBRUCH_STRONG");
        assert_eq!(json["lhs"], serde_json::json!([6, 1]));
        assert_eq!(json["reason"], serde_json::Value::Null);
        let back: InequalityReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn id_parsing() {
        assert_eq!(
            "improved".parse::<InequalityId>().unwrap(),
            InequalityId::HirzebruchImproved
        );
        assert_eq!(
            "SHNURNIKOV".parse::<InequalityId>().unwrap(),
            InequalityId::Shnurnikov
        );
        assert!("langer".parse::<InequalityId>().is_err());
    }

    #[test]
    fn generic_family_reduces_to_binomial_bound() {
        // only double points: weak Hirzebruch reads d(d-1)/2 >= d
        for d in 6u32..60 {
            let g = TVector::new(d, [(2, (d * (d - 1) / 2) as u64)]).unwrap();
            assert!(g.check_identity());
            let rep = hirzebruch_weak(&g, RealLine);
            assert!(rep.applicable && rep.satisfied, "d = {d}");
        }
    }

    fn arb_tvector() -> impl Strategy<Value = TVector> {
        (3u32..30).prop_flat_map(|d| {
            prop::collection::btree_map(2..=d, 0u64..200, 0..7)
                .prop_map(move |m| TVector::new(d, m).unwrap())
        })
    }

    proptest! {
        #[test]
        fn improved_implies_weak(tv in arb_tvector()) {
            let improved = hirzebruch_improved(&tv, RealLine);
            let weak = hirzebruch_weak(&tv, RealLine);
            prop_assert_eq!(improved.applicable, weak.applicable);
            if improved.satisfied {
                prop_assert!(weak.satisfied);
            }
        }

        #[test]
        fn satisfied_iff_slack_nonnegative(tv in arb_tvector()) {
            for cls in [RealLine, ComplexLine, Pseudoline] {
                for rep in run_all(&tv, cls) {
                    prop_assert_eq!(rep.satisfied, rep.slack >= Ratio::from_integer(0));
                    prop_assert_eq!(rep.slack, rep.lhs - rep.rhs);
                }
            }
        }

        #[test]
        fn linear_forms_match_reports(tv in arb_tvector()) {
            for id in InequalityId::ALL {
                let Some((form, d_coeff)) = id.linear_form() else { continue };
                let rep = id.evaluate(&tv, RealLine);
                let cleared = form.apply(&tv) - d_coeff as i128 * tv.d() as i128;
                let slack = rep.slack * id.scale();
                prop_assert!(slack.is_integer());
                prop_assert_eq!(cleared, slack.to_integer() as i128);
            }
        }
    }
}
