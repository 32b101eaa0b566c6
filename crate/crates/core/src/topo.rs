//! Nonexistence bounds for topological `(n_k)` configurations.
//!
//! Perturbing every point of such a configuration into a generic crossing of
//! its `k` pseudolines except one leaves `t_k = n`, `t_r = 0` for other
//! `r > 2`, and `t_2` single crossings. Shnurnikov's inequality on that
//! arrangement clears to `n(n + 14 - k(k+3)) >= 16`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tvector::TVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NkQuery {
    pub n: u64,
    pub k: u64,
}

impl NkQuery {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        let bad = |reason: &str| {
            Err(Error::InvalidNk {
                n,
                k,
                reason: reason.into(),
            })
        };
        if k < 3 {
            return bad("k must be at least 3");
        }
        if n < k {
            return bad("n must be at least k");
        }
        Ok(NkQuery { n, k })
    }

    /// Shnurnikov's inequality needs `t_n = ... = t_{n-3} = 0`, i.e. `k <= n - 4`.
    pub fn is_applicable(&self) -> bool {
        self.n >= self.k + 4
    }
}

fn pairs(x: u64) -> u128 {
    x as u128 * (x as u128).saturating_sub(1) / 2
}

/// `C(n,2) - n C(k,2)`, the number of double points after perturbation.
pub fn t2_of_nk(q: NkQuery) -> Result<u64> {
    let total = pairs(q.n);
    let used = q.n as u128 * pairs(q.k);
    if used > total {
        return Err(Error::InvalidNk {
            n: q.n,
            k: q.k,
            reason: format!("n C(k,2) = {used} exceeds C(n,2) = {total}"),
        });
    }
    u64::try_from(total - used).map_err(|_| Error::InvalidNk {
        n: q.n,
        k: q.k,
        reason: "t2 out of range".into(),
    })
}

/// The perturbed arrangement `{t_k = n, t_2 = t2_of_nk(q)}` on `d = n` pseudolines.
pub fn reduced_tvector(q: NkQuery) -> Result<TVector> {
    let t2 = t2_of_nk(q)?;
    let d = u32::try_from(q.n).map_err(|_| Error::InvalidNk {
        n: q.n,
        k: q.k,
        reason: "n too large for a t-vector".into(),
    })?;
    TVector::new(d, [(2, t2), (q.k as u32, q.n)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NkVerdict {
    /// The inequality holds; the configuration is not excluded.
    Pass,
    /// The inequality fails; no topological configuration exists.
    Fail,
    /// `n < k + 4`, outside the inequality's hypotheses.
    Inapplicable,
}

impl fmt::Display for NkVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NkVerdict::Pass => "pass",
            NkVerdict::Fail => "fail",
            NkVerdict::Inapplicable => "inapplicable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NkTest {
    pub query: NkQuery,
    pub strict: bool,
    /// `n(n + 14 - k(k+3))`
    pub lhs: i128,
    pub verdict: NkVerdict,
}

pub const NK_THRESHOLD: i128 = 16;

fn nk_lhs(n: u64, k: u64) -> i128 {
    let (n, k) = (n as i128, k as i128);
    n * (n + 14 - k * (k + 3))
}

/// Compares `n(n + 14 - k(k+3))` with 16, by `>` when `strict` and `>=`
/// otherwise.
pub fn shnurnikov_nk_test(q: NkQuery, strict: bool) -> NkTest {
    let lhs = nk_lhs(q.n, q.k);
    let verdict = if !q.is_applicable() {
        NkVerdict::Inapplicable
    } else if (strict && lhs > NK_THRESHOLD) || (!strict && lhs >= NK_THRESHOLD) {
        NkVerdict::Pass
    } else {
        NkVerdict::Fail
    };
    NkTest {
        query: q,
        strict,
        lhs,
        verdict,
    }
}

/// Smallest `n >= k + 4` that passes the test, by upward scan. Every
/// smaller `n` is excluded (or outside the hypotheses).
pub fn min_n(k: u64, strict: bool) -> Result<u64> {
    if k < 3 {
        return Err(Error::InvalidNk {
            n: 0,
            k,
            reason: "k must be at least 3".into(),
        });
    }
    // n(n + 14 - k(k+3)) grows without bound, so the scan terminates
    let mut n = k + 4;
    loop {
        let q = NkQuery { n, k };
        if shnurnikov_nk_test(q, strict).verdict == NkVerdict::Pass {
            return Ok(n);
        }
        n += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub k: u64,
    pub strict: u64,
    pub weak: u64,
}

impl BoundRow {
    pub fn diverges(&self) -> bool {
        self.strict != self.weak
    }
}

/// `min_n` under both comparators for `k` in `[3, k_max]`.
pub fn comparator_table(k_max: u64) -> Result<Vec<BoundRow>> {
    (3..=k_max)
        .map(|k| {
            Ok(BoundRow {
                k,
                strict: min_n(k, true)?,
                weak: min_n(k, false)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: u64, k: u64) -> NkQuery {
        NkQuery::new(n, k).unwrap()
    }

    #[test]
    fn t2_examples() {
        assert_eq!(t2_of_nk(q(27, 5)).unwrap(), 81);
        assert_eq!(t2_of_nk(q(36, 5)).unwrap(), 270);
        assert_eq!(t2_of_nk(q(17, 4)).unwrap(), 34);
        assert!(t2_of_nk(q(10, 5)).is_err());
        assert!(NkQuery::new(4, 5).is_err());
        assert!(NkQuery::new(10, 2).is_err());
    }

    #[test]
    fn test_examples() {
        let t = shnurnikov_nk_test(q(26, 5), true);
        assert_eq!((t.lhs, t.verdict), (0, NkVerdict::Fail));
        let t = shnurnikov_nk_test(q(41, 6), true);
        assert_eq!((t.lhs, t.verdict), (41, NkVerdict::Pass));
        assert_eq!(
            shnurnikov_nk_test(q(8, 5), true).verdict,
            NkVerdict::Inapplicable
        );
    }

    #[test]
    fn headline_bounds() {
        for strict in [true, false] {
            assert_eq!(min_n(4, strict).unwrap(), 16);
            assert_eq!(min_n(5, strict).unwrap(), 27);
            assert_eq!(min_n(6, strict).unwrap(), 41);
        }
        assert!(min_n(2, true).is_err());
    }

    #[test]
    fn comparators_agree_on_small_k() {
        // n(n + 14 - k(k+3)) = 16 has no solution with n >= k + 4 here
        assert!(comparator_table(50)
            .unwrap()
            .iter()
            .all(|row| !row.diverges()));
    }

    #[test]
    fn min_n_monotone_and_exact() {
        let mut prev = 0;
        for k in 3..=50 {
            for strict in [true, false] {
                let m = min_n(k, strict).unwrap();
                assert_eq!(shnurnikov_nk_test(q(m, k), strict).verdict, NkVerdict::Pass);
                let below = shnurnikov_nk_test(q(m - 1, k), strict).verdict;
                // k = 3 passes at its floor n = 7, so n = 6 is outside the hypotheses
                assert!(matches!(below, NkVerdict::Fail | NkVerdict::Inapplicable));
                if k > 3 {
                    assert_eq!(below, NkVerdict::Fail, "k = {k}");
                }
            }
            let m = min_n(k, true).unwrap();
            assert!(m >= prev);
            prev = m;
        }
    }

    proptest! {
        #[test]
        fn reduced_arrangement_satisfies_identity(k in 3u64..12, extra in 0u64..400) {
            let n = k * (k - 1) + 1 + extra;
            let query = q(n, k);
            let t2 = t2_of_nk(query).unwrap() as u128;
            prop_assert_eq!(2 * t2 + n as u128 * (k * (k - 1)) as u128, n as u128 * (n as u128 - 1));
            prop_assert!(reduced_tvector(query).unwrap().check_identity());
        }

        #[test]
        fn verdict_monotone_past_min(k in 3u64..30, step in 0u64..500) {
            let m = min_n(k, true).unwrap();
            prop_assert_eq!(shnurnikov_nk_test(q(m + step, k), true).verdict, NkVerdict::Pass);
        }

        #[test]
        fn matches_shnurnikov_on_reduced_arrangement(k in 3u64..8, extra in 0u64..80) {
            // the cleared test and the general inequality agree wherever both apply
            let n = k * (k - 1) + 1 + extra;
            let query = q(n, k);
            let tv = reduced_tvector(query).unwrap();
            let report = crate::inequality::shnurnikov(&tv, crate::tvector::RealizabilityClass::Pseudoline);
            prop_assume!(report.applicable && query.is_applicable());
            let weak = shnurnikov_nk_test(query, false).verdict == NkVerdict::Pass;
            prop_assert_eq!(report.satisfied, weak);
        }
    }
}
