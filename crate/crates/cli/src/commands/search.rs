use std::fmt::Write as _;

use anyhow::Result;
use linecfg::search::{
    brute_force_oracle, derived_search, DerivedConfig, OracleConfig, SearchOutcome,
};

use super::Status;
use crate::args::{EngineArg, SearchArgs};

pub fn render(out: &SearchOutcome, trace: bool) -> String {
    let p = &out.params;
    let mut s = String::new();
    let excluded: Vec<&str> = p.excluded.iter().map(|id| id.name()).collect();
    let _ = writeln!(
        s,
        "search n={} d=[{}, {}] class={} engine={} excluded=[{}]",
        p.n,
        p.d_min,
        p.d_max,
        p.class,
        p.engine,
        excluded.join(", ")
    );
    let _ = writeln!(s, "candidates: {}", out.enumerated);
    let _ = writeln!(
        s,
        "  {:<24}{:>12}{:>12}{:>10}{:>12}",
        "filter", "evaluated", "failed", "n/a", "eliminated"
    );
    for t in &out.tally {
        let _ = writeln!(
            s,
            "  {:<24}{:>12}{:>12}{:>10}{:>12}",
            t.filter, t.evaluated, t.failed, t.not_applicable, t.eliminated
        );
    }
    if trace {
        let _ = writeln!(s, "trace:");
        for c in &out.trace {
            match c.first_failure() {
                Some(f) => {
                    let _ = writeln!(s, "  {}  fails {f}", c.tv);
                }
                None => {
                    let _ = writeln!(s, "  {}  survives", c.tv);
                }
            }
        }
    }
    let _ = writeln!(s, "survivors: {}", out.survivors.len());
    for tv in &out.survivors {
        let _ = writeln!(s, "  {tv}");
    }
    s
}

pub fn run(args: &SearchArgs) -> Result<Status> {
    let class = args.class.into();
    let oracle = || {
        brute_force_oracle(&OracleConfig {
            n: args.n,
            d_min: args.dmin,
            d_max: args.dmax,
            class,
            excluded: args.exclude.clone(),
            ceiling: args.ceiling,
            jobs: args.jobs,
        })
    };
    let derived = || {
        derived_search(&DerivedConfig {
            n: args.n,
            d_min: args.dmin,
            d_max: args.dmax,
            class,
            excluded: args.exclude.clone(),
            jobs: args.jobs,
        })
    };
    let outcomes = match args.engine {
        EngineArg::Oracle => vec![oracle()?],
        EngineArg::Derived => vec![derived()?],
        EngineArg::Both => vec![oracle()?, derived()?],
    };
    for out in &outcomes {
        if args.json {
            print!("{}", out.to_json_lines());
        } else {
            print!("{}", render(out, args.trace));
        }
    }
    if let [a, b] = outcomes.as_slice() {
        let agree = a.survivors == b.survivors;
        if !args.json {
            if agree {
                println!("engines agree: {} survivors", a.survivors.len());
            } else {
                println!("ENGINES DISAGREE");
                let only = |x: &SearchOutcome, y: &SearchOutcome| {
                    x.survivors
                        .iter()
                        .filter(|t| !y.survivors.contains(t))
                        .map(|t| t.to_compact())
                        .collect::<Vec<_>>()
                };
                println!("  oracle only: {:?}", only(a, b));
                println!("  derived only: {:?}", only(b, a));
            }
        }
        if !agree {
            return Ok(Status::Mismatch);
        }
    }
    Ok(Status::Ok)
}
