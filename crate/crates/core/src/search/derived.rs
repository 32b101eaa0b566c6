//! Searches generated from reductions worked out by hand, kept independent of
//! the exhaustive oracle so the two can be compared.

use crate::error::{Error, Result};
use crate::inequality::{melchior, InequalityId};
use crate::tvector::{RealizabilityClass, TVector};

use super::certificate::{dominance_certificate, DominanceCertificate};
use super::constraint::equality_constraint;
use super::enumerate::{for_each_identity_vector, identity_vector_count};
use super::filters::FilterSet;
use super::oracle::{brute_force_oracle, check_range, OracleConfig, DEFAULT_CEILING};
use super::outcome::{CandidateTrace, Engine, FilterCheck, SearchOutcome, SearchParams};

/// Upper end of the order-3 candidate range: `d <= (12 t4 + 22 t5) / (t4 + t5) <= 22`.
pub const THEOREM_A_D_MAX: u32 = 22;

/// `(d, t4, t5)` of a t-vector, the listing convention for order-3 candidates.
pub fn d_t4_t5(tv: &TVector) -> (u32, u64, u64) {
    (tv.d(), tv.t(4), tv.t(5))
}

/// Order-3 real-line candidates from the reduced system
///
/// ```text
/// t3 = 0, t_r = 0 (r >= 6), t2 = d + t5,
/// d(d - 3) = 12 t4 + 22 t5,  d - 3 >= t4 + t5,  4 <= d <= 22.
/// ```
///
/// Every `(d, t4, t5)` solving the quadratic relation is traced; the reduced
/// Melchior bound decides survival. The identity and the order-3 equality
/// are replayed on each as independent checks.
pub fn theorem_a_candidates() -> SearchOutcome {
    let equality = equality_constraint(3).expect("order 3 is valid");
    let mut trace = Vec::new();
    for d in 4..=THEOREM_A_D_MAX {
        let target = (d * (d - 3)) as u64;
        for t5 in 0..=target / 22 {
            let rest = target - 22 * t5;
            if rest % 12 != 0 {
                continue;
            }
            let t4 = rest / 12;
            let t2 = d as u64 + t5;
            let entries = [(2, t2), (4, t4), (5, t5)]
                .into_iter()
                .filter(|&(_, c)| c > 0);
            let tv = TVector::new(d, entries).expect("d >= 6 whenever t4 or t5 is nonzero");
            let melchior_reduced = d as u64 - 3 >= t4 + t5;
            trace.push(CandidateTrace {
                checks: vec![
                    FilterCheck::new("d(d-3)=12t4+22t5", true),
                    FilterCheck::new("d-3>=t4+t5", melchior_reduced),
                    FilterCheck::new("identity", tv.check_identity()),
                    FilterCheck::new("equality(n=3)", equality.is_satisfied(&tv)),
                ],
                tv,
            });
        }
    }
    let mut out = SearchOutcome {
        params: SearchParams {
            n: 3,
            d_min: 4,
            d_max: THEOREM_A_D_MAX,
            class: RealizabilityClass::RealLine,
            engine: Engine::Derived,
            excluded: vec![InequalityId::Shnurnikov],
        },
        enumerated: trace.len() as u64,
        survivors: Vec::new(),
        trace,
        tally: Vec::new(),
    };
    out.tally_trace();
    out.collect_survivors();
    out
}

/// Applies Shnurnikov's inequality to the survivors of an order-3 search,
/// alongside its reduced form `d - 8 >= t4/2 + 3 t5/2` (valid under
/// `t3 = 0`, `t2 = d + t5`), cleared to `2d - 16 >= t4 + 3 t5`.
pub fn shnurnikov_elimination(outcome: &SearchOutcome) -> SearchOutcome {
    let trace: Vec<CandidateTrace> = outcome
        .survivors
        .iter()
        .map(|tv| {
            let report = InequalityId::Shnurnikov.evaluate(tv, outcome.params.class);
            let shn = if report.applicable {
                FilterCheck::new(InequalityId::Shnurnikov.name(), report.satisfied)
            } else {
                FilterCheck::not_applicable(InequalityId::Shnurnikov.name())
            };
            let (d, t4, t5) = d_t4_t5(tv);
            let reduced = 2 * d as i64 - 16 >= (t4 + 3 * t5) as i64;
            CandidateTrace {
                tv: tv.clone(),
                checks: vec![shn, FilterCheck::new("2d-16>=t4+3t5", reduced)],
            }
        })
        .collect();
    let mut params = outcome.params.clone();
    params.excluded.retain(|&id| id != InequalityId::Shnurnikov);
    let mut out = SearchOutcome {
        params,
        enumerated: trace.len() as u64,
        survivors: Vec::new(),
        trace,
        tally: Vec::new(),
    };
    out.tally_trace();
    out.collect_survivors();
    out
}

/// One of the two arrangements with a point of multiplicity `d - 2`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NearPencilCheck {
    /// `A1` or `A2`.
    pub label: &'static str,
    pub tv: TVector,
    pub lhs: i64,
    pub rhs: i64,
    pub satisfies_equality: bool,
}

/// `A1 = {t_{d-2} = 1, t2 = 2d - 3}` (the two extra lines meet off the
/// pencil) and `A2 = {t_{d-2} = 1, t3 = 1, t2 = 2d - 6}` (they meet on a
/// pencil line), each checked against the order-`n` equality.
pub fn exclude_near_pencil(n: u32, d: u32) -> Result<Vec<NearPencilCheck>> {
    if d < 6 {
        return Err(Error::TooFewLines { d, min: 6 });
    }
    let equality = equality_constraint(n)?;
    let d64 = d as u64;
    let shapes = [
        ("A1", vec![(d - 2, 1), (2, 2 * d64 - 3)]),
        ("A2", vec![(d - 2, 1), (3, 1), (2, 2 * d64 - 6)]),
    ];
    shapes
        .into_iter()
        .map(|(label, entries)| {
            let tv = TVector::new(d, entries)?;
            debug_assert!(tv.check_identity());
            let mut lhs = 0i64;
            let mut rhs = equality.d_coeff * d as i64;
            for (r, c) in tv.entries() {
                let term = equality.coeff(r) * c as i64;
                if term >= 0 {
                    lhs += term;
                } else {
                    rhs -= term;
                }
            }
            Ok(NearPencilCheck {
                label,
                satisfies_equality: lhs == rhs,
                tv,
                lhs,
                rhs,
            })
        })
        .collect()
}

/// Solutions of the certificate's residual equation together with the
/// identity, for `d` in `[4, d_max]`. The companion inequality must apply
/// (its hypotheses are what the certificate rests on) and, for real lines,
/// Melchior's inequality must hold.
pub fn residual_solutions(
    cert: &DominanceCertificate,
    d_max: u32,
    class: RealizabilityClass,
) -> Result<Vec<TVector>> {
    let mut out = Vec::new();
    for d in 4..=d_max {
        out.extend(residual_solutions_for(cert, d, class)?);
    }
    Ok(out)
}

fn residual_solutions_for(
    cert: &DominanceCertificate,
    d: u32,
    class: RealizabilityClass,
) -> Result<Vec<TVector>> {
    let free = cert.residual.free_multiplicities(d);
    let estimate = identity_vector_count(d, |r| free.contains(&r));
    if estimate > DEFAULT_CEILING {
        return Err(Error::CeilingExceeded {
            estimate,
            ceiling: DEFAULT_CEILING,
        });
    }
    let mut found = Vec::new();
    for_each_identity_vector(d, &free, |dense| {
        let tv = TVector::from_dense(d, dense).expect("valid by construction");
        if !cert.residual.is_satisfied(&tv) {
            return;
        }
        if !cert.companion.evaluate(&tv, class).applicable {
            return;
        }
        if class == RealizabilityClass::RealLine {
            let m = melchior(&tv, class);
            if !(m.applicable && m.satisfied) {
                return;
            }
        }
        found.push(tv);
    });
    found.sort();
    Ok(found)
}

/// The Hirzebruch-family companion whose certificate forces the most
/// multiplicities to vanish; ties go to the one with weaker hypotheses.
pub fn best_certificate(n: u32) -> Result<Option<DominanceCertificate>> {
    let mut best: Option<DominanceCertificate> = None;
    for id in [
        InequalityId::HirzebruchImproved,
        InequalityId::HirzebruchStrong,
        InequalityId::HirzebruchWeak,
    ] {
        let Some(cert) = dominance_certificate(n, id)?.certificate().cloned() else {
            continue;
        };
        let better = match &best {
            None => true,
            Some(b) => {
                cert.forced_zero.is_superset_of(&b.forced_zero)
                    && !b.forced_zero.is_superset_of(&cert.forced_zero)
            }
        };
        if better {
            best = Some(cert);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone)]
pub struct DerivedConfig {
    pub n: u32,
    pub d_min: u32,
    pub d_max: u32,
    pub class: RealizabilityClass,
    pub excluded: Vec<InequalityId>,
    pub jobs: usize,
}

/// Candidates from the dominance certificate, routed by case:
///
/// * `d < 6`, below the hypotheses of the certificate arguments, goes to the
///   oracle;
/// * `t_{d-2} = 1` when the companion needs `t_{d-2} = 0` is covered by the
///   two near-pencil shapes;
/// * everything else comes from the residual equation.
///
/// All candidates then pass through the same filter set as the oracle.
pub fn derived_search(cfg: &DerivedConfig) -> Result<SearchOutcome> {
    check_range(cfg.d_min, cfg.d_max)?;
    if !cfg.class.is_algebraic() {
        return Err(Error::NoCompanion(cfg.class.to_string()));
    }
    let cert = best_certificate(cfg.n)?.ok_or(Error::NoCertificate(cfg.n))?;
    let filters = FilterSet::new(cfg.n, cfg.class, &cfg.excluded)?;
    let mut out = SearchOutcome {
        params: SearchParams {
            n: cfg.n,
            d_min: cfg.d_min,
            d_max: cfg.d_max,
            class: cfg.class,
            engine: Engine::Derived,
            excluded: cfg.excluded.clone(),
        },
        enumerated: 0,
        survivors: Vec::new(),
        trace: Vec::new(),
        tally: Vec::new(),
    };

    if cfg.d_min < 6 {
        let low = brute_force_oracle(&OracleConfig {
            n: cfg.n,
            d_min: cfg.d_min,
            d_max: cfg.d_max.min(5),
            class: cfg.class,
            excluded: cfg.excluded.clone(),
            ceiling: DEFAULT_CEILING,
            jobs: cfg.jobs,
        })?;
        out.enumerated += low.enumerated;
        out.tally = low.tally;
        for mut cand in low.trace {
            cand.checks
                .insert(0, FilterCheck::new("route:oracle(d<6)", true));
            out.trace.push(cand);
        }
    }
    // tallies for the low part already include its traced candidates
    let low_traced = out.trace.len();

    let needs_near_pencil = cert.companion == InequalityId::HirzebruchStrong;
    for d in cfg.d_min.max(6)..=cfg.d_max {
        for tv in residual_solutions_for(&cert, d, cfg.class)? {
            let mut checks = vec![FilterCheck::new("route:residual", true)];
            checks.extend(filters.checks(&tv));
            out.trace.push(CandidateTrace { tv, checks });
        }
        if needs_near_pencil {
            for np in exclude_near_pencil(cfg.n, d)? {
                let mut checks = vec![FilterCheck::new(
                    format!("route:near_pencil({})", np.label),
                    true,
                )];
                checks.extend(filters.checks(&np.tv));
                out.trace.push(CandidateTrace { tv: np.tv, checks });
            }
        }
    }
    out.enumerated += (out.trace.len() - low_traced) as u64;

    let mut all = std::mem::take(&mut out.trace);
    out.trace = all.split_off(low_traced);
    out.tally_trace();
    all.append(&mut out.trace);
    out.trace = all;
    out.collect_survivors();
    Ok(out)
}
