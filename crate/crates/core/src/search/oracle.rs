//! Exhaustive search: every t-vector satisfying the combinatorial identity is
//! generated and run through the filter set.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::inequality::InequalityId;
use crate::tvector::{RealizabilityClass, TVector};

use super::enumerate::{identity_vector_count, pairs};
use super::filters::FilterSet;
use super::outcome::{CandidateTrace, Engine, FilterTally, SearchOutcome, SearchParams};

/// Default refusal threshold on the number of candidates.
pub const DEFAULT_CEILING: u128 = 100_000_000;

/// Largest arrangement size the enumerator accepts regardless of ceiling.
pub const MAX_D: u32 = 200;

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub n: u32,
    pub d_min: u32,
    pub d_max: u32,
    pub class: RealizabilityClass,
    pub excluded: Vec<InequalityId>,
    pub ceiling: u128,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
}

impl OracleConfig {
    pub fn new(n: u32, d_min: u32, d_max: u32, class: RealizabilityClass) -> Self {
        OracleConfig {
            n,
            d_min,
            d_max,
            class,
            excluded: Vec::new(),
            ceiling: DEFAULT_CEILING,
            jobs: 0,
        }
    }

    pub fn excluding(mut self, ids: &[InequalityId]) -> Self {
        self.excluded = ids.to_vec();
        self
    }

    pub fn with_ceiling(mut self, ceiling: u128) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

pub(crate) fn check_range(d_min: u32, d_max: u32) -> Result<()> {
    let bad = |reason: &str| {
        Err(Error::InvalidRange {
            d_min,
            d_max,
            reason: reason.into(),
        })
    };
    if d_min < 4 {
        return bad("d_min must be at least 4");
    }
    if d_min > d_max {
        return bad("d_min exceeds d_max");
    }
    if d_max > MAX_D {
        return bad(&format!("d_max is limited to {MAX_D}"));
    }
    Ok(())
}

/// Exact number of identity-satisfying t-vectors over the range.
pub fn estimate_candidates(d_min: u32, d_max: u32) -> u128 {
    (d_min..=d_max)
        .map(|d| identity_vector_count(d, |_| true))
        .sum()
}

pub(crate) fn run_in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

pub fn brute_force_oracle(cfg: &OracleConfig) -> Result<SearchOutcome> {
    check_range(cfg.d_min, cfg.d_max)?;
    let estimate = estimate_candidates(cfg.d_min, cfg.d_max);
    if estimate > cfg.ceiling {
        return Err(Error::CeilingExceeded {
            estimate,
            ceiling: cfg.ceiling,
        });
    }
    let filters = FilterSet::new(cfg.n, cfg.class, &cfg.excluded)?;

    let per_d: Vec<(u64, Vec<CandidateTrace>)> = run_in_pool(cfg.jobs, || {
        (cfg.d_min..=cfg.d_max)
            .into_par_iter()
            .map(|d| {
                let (leaves, hits) = Walker::run(d, &filters);
                let traces = hits
                    .into_iter()
                    .map(|dense| {
                        let tv =
                            TVector::from_dense(d, &dense).expect("enumerated vectors are valid");
                        let checks = filters.checks(&tv);
                        CandidateTrace { tv, checks }
                    })
                    .collect();
                (leaves, traces)
            })
            .collect()
    });

    let enumerated: u64 = per_d.iter().map(|(n, _)| n).sum();
    let trace: Vec<CandidateTrace> = per_d.into_iter().flat_map(|(_, t)| t).collect();
    let rejected = enumerated - trace.len() as u64;
    let mut out = SearchOutcome {
        params: SearchParams {
            n: cfg.n,
            d_min: cfg.d_min,
            d_max: cfg.d_max,
            class: cfg.class,
            engine: Engine::Oracle,
            excluded: cfg.excluded.clone(),
        },
        enumerated,
        survivors: Vec::new(),
        trace,
        tally: vec![FilterTally {
            filter: filters.equality_name(),
            evaluated: rejected,
            failed: rejected,
            not_applicable: 0,
            eliminated: rejected,
        }],
    };
    out.tally_trace();
    out.collect_survivors();
    Ok(out)
}

/// Depth-first walk over `t_d, t_{d-1}, ..., t_3` with `t_2` fixed by the
/// identity, keeping the equality's left side as a running sum so only
/// vectors on the ball-quotient hyperplane are materialized.
struct Walker {
    coeff: Vec<i64>,
    weight: Vec<u64>,
    target: i64,
    dense: Vec<u64>,
    leaves: u64,
    hits: Vec<Vec<u64>>,
}

impl Walker {
    fn run(d: u32, filters: &FilterSet) -> (u64, Vec<Vec<u64>>) {
        let eq = &filters.equality;
        let mut w = Walker {
            coeff: (0..=d)
                .map(|r| if r < 2 { 0 } else { eq.coeff(r) })
                .collect(),
            weight: (0..=d).map(|r| if r < 2 { 0 } else { pairs(r) }).collect(),
            target: eq.d_coeff * d as i64,
            dense: vec![0; d as usize - 1],
            leaves: 0,
            hits: Vec::new(),
        };
        w.descend(d, pairs(d), 0);
        (w.leaves, w.hits)
    }

    fn descend(&mut self, r: u32, remaining: u64, acc: i64) {
        if r == 3 {
            let (c2, c3) = (self.coeff[2], self.coeff[3]);
            let top = remaining / 3;
            self.leaves += top + 1;
            for k in 0..=top {
                let t2 = remaining - 3 * k;
                if acc + c3 * k as i64 + c2 * t2 as i64 == self.target {
                    self.dense[0] = t2;
                    self.dense[1] = k;
                    self.hits.push(self.dense.clone());
                }
            }
            self.dense[0] = 0;
            self.dense[1] = 0;
            return;
        }
        let w = self.weight[r as usize];
        let c = self.coeff[r as usize];
        let slot = r as usize - 2;
        for k in 0..=remaining / w {
            self.dense[slot] = k;
            self.descend(r - 1, remaining - k * w, acc + c * k as i64);
        }
        self.dense[slot] = 0;
    }
}
