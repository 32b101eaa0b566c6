//! Line and pseudoline arrangements studied through their multiplicity data.
//!
//! The [`TVector`] `(d; t_2, t_3, ...)` is the only input. From it the crate
//! computes Chern numbers of Kummer covers and the Hirzebruch polynomial,
//! evaluates the classical arrangement inequalities exactly, searches for
//! arrangements whose covers are ball quotients, and bounds topological
//! `(n_k)` configurations.

pub mod catalog;
pub mod error;
pub mod inequality;
pub mod kummer;
pub mod search;
pub mod series;
pub mod topo;
pub mod tvector;

pub use catalog::{Catalog, CatalogEntry, EntryKind};
pub use error::{Error, Position, Result};
pub use inequality::{run_all, InequalityId, InequalityReport};
pub use kummer::{
    absolute_chern_numbers, ball_quotient_orders, chern_profile, hirzebruch_polynomial,
    kodaira_applicability, ChernProfile, KodairaApplicability, QuadraticPolynomial,
};
pub use search::{
    brute_force_oracle, derived_search, dominance_certificate, equality_constraint,
    theorem_a_candidates, DominanceCertificate, DominanceOutcome, EqualityConstraint,
    SearchOutcome,
};
pub use series::RSeries;
pub use topo::{min_n, shnurnikov_nk_test, t2_of_nk, NkQuery, NkVerdict};
pub use tvector::{RealizabilityClass, TVector};
