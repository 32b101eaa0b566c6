use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Position, Result};
use crate::inequality::InequalityId;
use crate::tvector::{RealizabilityClass, TVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Generation from hand-derived reductions (certificates, closed forms).
    Derived,
    /// Exhaustive enumeration of the combinatorial identity.
    Oracle,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Derived => "derived",
            Engine::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParams {
    pub n: u32,
    pub d_min: u32,
    pub d_max: u32,
    pub class: RealizabilityClass,
    pub engine: Engine,
    /// Inequalities left out of the filter set.
    pub excluded: Vec<InequalityId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterCheck {
    pub filter: String,
    pub status: FilterStatus,
}

impl FilterCheck {
    pub fn new(filter: impl Into<String>, passed: bool) -> Self {
        FilterCheck {
            filter: filter.into(),
            status: if passed {
                FilterStatus::Pass
            } else {
                FilterStatus::Fail
            },
        }
    }

    pub fn not_applicable(filter: impl Into<String>) -> Self {
        FilterCheck {
            filter: filter.into(),
            status: FilterStatus::NotApplicable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTrace {
    pub tv: TVector,
    pub checks: Vec<FilterCheck>,
}

impl CandidateTrace {
    pub fn survives(&self) -> bool {
        self.checks.iter().all(|c| c.status != FilterStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.checks
            .iter()
            .find(|c| c.status == FilterStatus::Fail)
            .map(|c| c.filter.as_str())
    }
}

/// Per-filter counts.
///
/// `eliminated` counts candidates whose first failing filter is this one, so
/// the eliminations of all filters plus the survivors add up to the
/// candidates enumerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterTally {
    pub filter: String,
    pub evaluated: u64,
    pub failed: u64,
    pub not_applicable: u64,
    pub eliminated: u64,
}

impl FilterTally {
    pub fn new(filter: impl Into<String>) -> Self {
        FilterTally {
            filter: filter.into(),
            evaluated: 0,
            failed: 0,
            not_applicable: 0,
            eliminated: 0,
        }
    }
}

/// Result of one search run.
///
/// Candidates rejected by the first (cheapest) filter are only counted in the
/// tally; every other candidate has a full [`CandidateTrace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub params: SearchParams,
    pub enumerated: u64,
    pub survivors: Vec<TVector>,
    pub trace: Vec<CandidateTrace>,
    pub tally: Vec<FilterTally>,
}

#[derive(Serialize, Deserialize)]
struct CandidateLine {
    tv: TVector,
    survivor: bool,
    checks: Vec<FilterCheck>,
}

#[derive(Serialize, Deserialize)]
struct SummaryLine {
    summary: Summary,
}

#[derive(Serialize, Deserialize)]
struct Summary {
    params: SearchParams,
    enumerated: u64,
    survivors: Vec<TVector>,
    tally: Vec<FilterTally>,
}

impl SearchOutcome {
    /// Sorts survivors and trace so output does not depend on scheduling.
    pub fn normalize(&mut self) {
        self.survivors.sort();
        self.survivors.dedup();
        self.trace.sort_by(|a, b| a.tv.cmp(&b.tv));
    }

    /// Rebuilds `survivors` from the trace.
    pub(crate) fn collect_survivors(&mut self) {
        self.survivors = self
            .trace
            .iter()
            .filter(|c| c.survives())
            .map(|c| c.tv.clone())
            .collect();
        self.normalize();
    }

    /// Adds the trace's checks to the per-filter tallies.
    pub(crate) fn tally_trace(&mut self) {
        for cand in &self.trace {
            let first = cand.first_failure().map(str::to_owned);
            for check in &cand.checks {
                let tally = match self.tally.iter_mut().find(|t| t.filter == check.filter) {
                    Some(t) => t,
                    None => {
                        self.tally.push(FilterTally::new(&check.filter));
                        self.tally.last_mut().unwrap()
                    }
                };
                tally.evaluated += 1;
                match check.status {
                    FilterStatus::Fail => tally.failed += 1,
                    FilterStatus::NotApplicable => tally.not_applicable += 1,
                    FilterStatus::Pass => {}
                }
                if first.as_deref() == Some(check.filter.as_str()) {
                    tally.eliminated += 1;
                }
            }
        }
    }

    /// One JSON object per traced candidate, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for cand in &self.trace {
            let line = CandidateLine {
                tv: cand.tv.clone(),
                survivor: cand.survives(),
                checks: cand.checks.clone(),
            };
            out.push_str(&serde_json::to_string(&line).expect("serializable"));
            out.push('\n');
        }
        let summary = SummaryLine {
            summary: Summary {
                params: self.params.clone(),
                enumerated: self.enumerated,
                survivors: self.survivors.clone(),
                tally: self.tally.clone(),
            },
        };
        out.push_str(&serde_json::to_string(&summary).expect("serializable"));
        out.push('\n');
        out
    }

    pub fn from_json_lines(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        let Some((&(last_no, last), body)) = lines.split_last() else {
            return Err(Error::Parse {
                pos: Position::LineColumn(1, 1),
                msg: "empty search output".into(),
            });
        };
        let parse_err = |no: usize, e: serde_json::Error| Error::Parse {
            pos: Position::LineColumn(no + 1, e.column()),
            msg: e.to_string(),
        };
        let mut trace = Vec::with_capacity(body.len());
        for &(no, line) in body {
            let cand: CandidateLine = serde_json::from_str(line).map_err(|e| parse_err(no, e))?;
            trace.push(CandidateTrace {
                tv: cand.tv,
                checks: cand.checks,
            });
        }
        let summary: SummaryLine = serde_json::from_str(last).map_err(|e| parse_err(last_no, e))?;
        let s = summary.summary;
        Ok(SearchOutcome {
            params: s.params,
            enumerated: s.enumerated,
            survivors: s.survivors,
            trace,
            tally: s.tally,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> SearchOutcome {
        let mut out = SearchOutcome {
            params: SearchParams {
                n: 5,
                d_min: 4,
                d_max: 9,
                class: RealizabilityClass::RealLine,
                engine: Engine::Oracle,
                excluded: vec![InequalityId::Shnurnikov],
            },
            enumerated: 12,
            survivors: vec![],
            trace: vec![
                CandidateTrace {
                    tv: "d=9;t3=12".parse().unwrap(),
                    checks: vec![
                        FilterCheck::new("equality(n=5)", true),
                        FilterCheck::new("MELCHIOR", false),
                    ],
                },
                CandidateTrace {
                    tv: "d=6;t2=3;t3=4".parse().unwrap(),
                    checks: vec![
                        FilterCheck::new("equality(n=5)", true),
                        FilterCheck::new("MELCHIOR", true),
                        FilterCheck::not_applicable("SHNURNIKOV"),
                    ],
                },
            ],
            tally: vec![],
        };
        out.tally_trace();
        out.collect_survivors();
        out
    }

    #[test]
    fn survivors_and_tallies() {
        let out = sample();
        assert_eq!(
            out.survivors,
            vec!["d=6;t2=3;t3=4".parse::<TVector>().unwrap()]
        );
        assert_eq!(out.trace[0].tv.d(), 6, "trace is sorted");
        let melchior = out.tally.iter().find(|t| t.filter == "MELCHIOR").unwrap();
        assert_eq!(
            (melchior.evaluated, melchior.failed, melchior.eliminated),
            (2, 1, 1)
        );
        let shn = out.tally.iter().find(|t| t.filter == "SHNURNIKOV").unwrap();
        assert_eq!(shn.not_applicable, 1);
    }

    #[test]
    fn json_lines_round_trip() {
        let out = sample();
        let text = out.to_json_lines();
        assert_eq!(text.lines().count(), 3);
        assert!(text.lines().last().unwrap().starts_with(r#"{"summary":"#));
        let back = SearchOutcome::from_json_lines(&text).unwrap();
        assert_eq!(back, out);
        assert_eq!(back.to_json_lines(), text);
        assert!(SearchOutcome::from_json_lines("").is_err());
        assert!(SearchOutcome::from_json_lines("{\"x\":1}\n").is_err());
    }
}
