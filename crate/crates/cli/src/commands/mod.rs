pub mod bound;
pub mod catalog;
pub mod check;
pub mod reproduce;
pub mod search;

/// How a successful run ended; errors map to their own exit codes in `main`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A computed result differs from the expected one.
    Mismatch,
}
