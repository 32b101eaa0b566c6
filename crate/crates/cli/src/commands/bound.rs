use anyhow::Result;
use linecfg::topo::{comparator_table, min_n};
use serde::{Deserialize, Serialize};

use super::Status;
use crate::args::BoundArgs;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: u64,
    pub strict: bool,
    /// No topological `(n_k)` configuration exists for `n < min_n`.
    pub min_n: u64,
}

pub fn run(args: &BoundArgs) -> Result<Status> {
    if let Some(k_max) = args.table {
        let rows = comparator_table(k_max)?;
        if args.json {
            println!("{}", serde_json::to_string(&rows)?);
        } else {
            println!("{:>4}{:>10}{:>10}  diverges", "k", "strict", "weak");
            for r in &rows {
                println!(
                    "{:>4}{:>10}{:>10}  {}",
                    r.k,
                    r.strict,
                    r.weak,
                    if r.diverges() { "yes" } else { "no" }
                );
            }
        }
        return Ok(Status::Ok);
    }
    let k = args.k.expect("clap requires --k or --table");
    let strict = !args.weak;
    let report = BoundReport {
        k,
        strict,
        min_n: min_n(k, strict)?,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("k={}: {}", report.k, report.min_n);
        println!(
            "no topological (n_{k}) configuration for n < {} ({} comparator)",
            report.min_n,
            if strict { "strict" } else { "weak" }
        );
    }
    Ok(Status::Ok)
}
