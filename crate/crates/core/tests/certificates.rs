//! Certificates replayed against coefficients written out by hand.

use linecfg::search::{dominance_certificate, equality_constraint, DominanceOutcome};
use linecfg::InequalityId::{self, *};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Coefficients of `P(n) = 0` as `sum e_r t_r = e_d d`, unreduced.
fn raw_equality(n: i64, r: i64) -> i64 {
    n * n + 2 * n * (1 - r) + 2 * r + 1 - if r == 2 { 4 } else { 0 }
}

/// `(lhs_r - rhs_r, d coefficient)` with denominators cleared.
fn inequality(id: InequalityId, r: i64) -> (i64, i64) {
    match (id, r) {
        (HirzebruchWeak, 2 | 3) => (1, 1),
        (HirzebruchWeak, 4) => (0, 1),
        (HirzebruchWeak, _) => (-(r - 4), 1),
        (HirzebruchStrong | HirzebruchImproved, 2) => (4, 4),
        (HirzebruchStrong | HirzebruchImproved, 3) => (3, 4),
        (HirzebruchStrong | HirzebruchImproved, 4) => (0, 4),
        (HirzebruchStrong, _) => (-(8 * r - 36), 4),
        (HirzebruchImproved, _) => (-(4 * r - 16), 4),
        _ => unreachable!(),
    }
}

const R_MAX: u32 = 100;

#[test]
fn equality_coefficients_replay() {
    for n in 2..=12i64 {
        let eq = equality_constraint(n as u32).unwrap();
        let d = (n - 1) * (n - 1);
        let g = (2..=R_MAX as i64).fold(d, |g, r| gcd(g, raw_equality(n, r)));
        assert_eq!(eq.d_coeff, d / g, "n = {n}");
        for r in 2..=R_MAX {
            assert_eq!(
                eq.coeff(r),
                raw_equality(n, r as i64) / g,
                "n = {n}, r = {r}"
            );
        }
    }
}

#[test]
fn combinations_replay() {
    for n in 2..=12u32 {
        for id in [HirzebruchWeak, HirzebruchStrong, HirzebruchImproved] {
            let eq = equality_constraint(n).unwrap();
            let (_, ineq_d) = inequality(id, 2);
            let g = gcd(ineq_d, eq.d_coeff);
            let (a, b) = (ineq_d / g, eq.d_coeff / g);
            let c: Vec<i64> = (2..=R_MAX as i64)
                .map(|r| a * eq.coeff(r as u32) - b * inequality(id, r).0)
                .collect();
            assert_eq!(c[0], 0);
            match dominance_certificate(n, id).unwrap() {
                DominanceOutcome::Certificate(cert) => {
                    assert_eq!(
                        (cert.equality_multiplier, cert.inequality_multiplier),
                        (a, b)
                    );
                    for r in 3..=R_MAX {
                        let cr = c[r as usize - 2];
                        assert_eq!(cert.combination.coeff(r), cr, "n = {n}, {id}, r = {r}");
                        assert!(cr >= 0);
                        assert_eq!(
                            cert.forced_zero.contains(r),
                            cr > 0,
                            "n = {n}, {id}, r = {r}"
                        );
                    }
                }
                DominanceOutcome::Inconclusive { .. } => {
                    assert!(c[1..].iter().any(|&x| x < 0), "n = {n}, {id}");
                }
            }
        }
    }
}

#[test]
fn headline_certificates() {
    let c4 = dominance_certificate(4, HirzebruchImproved).unwrap();
    let c4 = c4.certificate().unwrap();
    assert!(c4.forced_zero.covers_all_from_three());
    assert_eq!(c4.residual.to_string(), "9t2 = 9d");

    let c7 = dominance_certificate(7, HirzebruchImproved).unwrap();
    assert!(c7
        .certificate()
        .unwrap()
        .forced_zero
        .covers_all_from_three());

    let c5 = dominance_certificate(5, HirzebruchStrong).unwrap();
    let c5 = c5.certificate().unwrap();
    assert!(!c5.forced_zero.contains(3));
    assert!((4..=R_MAX).all(|r| c5.forced_zero.contains(r)));
    assert_eq!(c5.residual.to_string(), "4t2 + 3t3 = 4d");

    assert!(dominance_certificate(4, Melchior).is_err());
}
