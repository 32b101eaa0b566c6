use crate::error::Result;
use crate::inequality::InequalityId;
use crate::tvector::{RealizabilityClass, TVector};

use super::constraint::{equality_constraint, EqualityConstraint};
use super::outcome::FilterCheck;

pub const TOP_POINT: &str = "t_d=0";
pub const NEXT_TO_TOP_POINT: &str = "t_(d-1)=0";

/// The filters both engines apply to a candidate, in trace order: the
/// ball-quotient equality, the standing hypotheses `t_d = t_{d-1} = 0`, then
/// every non-excluded inequality.
#[derive(Debug, Clone)]
pub struct FilterSet {
    pub equality: EqualityConstraint,
    pub class: RealizabilityClass,
    pub inequalities: Vec<InequalityId>,
}

impl FilterSet {
    pub fn new(n: u32, class: RealizabilityClass, excluded: &[InequalityId]) -> Result<Self> {
        Ok(FilterSet {
            equality: equality_constraint(n)?,
            class,
            inequalities: InequalityId::ALL
                .into_iter()
                .filter(|id| !excluded.contains(id))
                .collect(),
        })
    }

    pub fn equality_name(&self) -> String {
        format!("equality(n={})", self.equality.n)
    }

    pub fn checks(&self, tv: &TVector) -> Vec<FilterCheck> {
        let mut checks = Vec::with_capacity(3 + self.inequalities.len());
        checks.push(FilterCheck::new(
            self.equality_name(),
            self.equality.is_satisfied(tv),
        ));
        checks.push(FilterCheck::new(TOP_POINT, tv.t_from_top(0) == 0));
        checks.push(FilterCheck::new(NEXT_TO_TOP_POINT, tv.t_from_top(1) == 0));
        for id in &self.inequalities {
            let report = id.evaluate(tv, self.class);
            checks.push(if report.applicable {
                FilterCheck::new(id.name(), report.satisfied)
            } else {
                FilterCheck::not_applicable(id.name())
            });
        }
        checks
    }
}
