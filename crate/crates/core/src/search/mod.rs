//! Ball-quotient search: the equality `P(n) = 0` in integer form, the
//! dominance certificates built on it, and two independent engines that list
//! the t-vectors surviving it.

mod certificate;
mod constraint;
mod derived;
mod enumerate;
mod filters;
mod oracle;
mod outcome;

pub use certificate::{
    dominance_certificate, DominanceCertificate, DominanceOutcome, ForcedZero, Residual,
};
pub use constraint::{equality_constraint, EqualityConstraint};
pub use derived::{
    best_certificate, d_t4_t5, derived_search, exclude_near_pencil, residual_solutions,
    shnurnikov_elimination, theorem_a_candidates, DerivedConfig, NearPencilCheck, THEOREM_A_D_MAX,
};
pub use enumerate::{for_each_identity_vector, identity_vector_count};
pub use filters::{FilterSet, NEXT_TO_TOP_POINT, TOP_POINT};
pub use oracle::{brute_force_oracle, estimate_candidates, OracleConfig, DEFAULT_CEILING, MAX_D};
pub use outcome::{
    CandidateTrace, Engine, FilterCheck, FilterStatus, FilterTally, SearchOutcome, SearchParams,
};
