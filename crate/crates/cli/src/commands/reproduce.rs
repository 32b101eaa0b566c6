use std::fmt::Write as _;

use anyhow::Result;
use linecfg::search::{
    brute_force_oracle, d_t4_t5, dominance_certificate, exclude_near_pencil, residual_solutions,
    shnurnikov_elimination, theorem_a_candidates, DominanceCertificate, FilterStatus, OracleConfig,
};
use linecfg::topo::min_n;
use linecfg::{Catalog, InequalityId, RealizabilityClass, TVector};
use serde::{Deserialize, Serialize};

use super::Status;
use crate::args::{ReproduceArgs, Target};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn new(target: &str) -> Self {
        Report {
            target: target.to_owned(),
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn check(
        &mut self,
        name: &str,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) {
        self.pass &= pass;
        self.checks.push(Check {
            name: name.to_owned(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
        });
    }

    /// Passes when `actual` renders exactly as `expected`.
    pub fn check_eq(&mut self, name: &str, expected: impl Into<String>, actual: impl Into<String>) {
        let (e, a) = (expected.into(), actual.into());
        let pass = e == a;
        self.check(name, e, a, pass);
    }

    pub fn render(&self) -> String {
        let mut s = format!("{}\n", self.target);
        for c in &self.checks {
            if c.pass {
                let _ = writeln!(s, "  {}: {}  ok", c.name, c.actual);
            } else {
                let _ = writeln!(
                    s,
                    "  {}: {}  MISMATCH (expected {})",
                    c.name, c.actual, c.expected
                );
            }
        }
        let _ = writeln!(
            s,
            "{}: {}",
            self.target,
            if self.pass { "PASS" } else { "FAIL" }
        );
        s
    }
}

fn listing(tvs: &[TVector]) -> String {
    if tvs.is_empty() {
        return "none".to_owned();
    }
    tvs.iter()
        .map(TVector::to_compact)
        .collect::<Vec<_>>()
        .join(" ")
}

fn triples(tvs: &[TVector]) -> String {
    let parts: Vec<String> = tvs
        .iter()
        .map(|tv| {
            let (d, t4, t5) = d_t4_t5(tv);
            format!("[{d},{t4},{t5}]")
        })
        .collect();
    format!("{} {}", tvs.len(), parts.join(" "))
}

struct Ctx {
    jobs: usize,
    ceiling: u128,
}

impl Ctx {
    fn oracle(
        &self,
        n: u32,
        d_max: u32,
        class: RealizabilityClass,
        excluded: &[InequalityId],
    ) -> Result<Vec<TVector>> {
        let cfg = OracleConfig::new(n, 4, d_max, class)
            .excluding(excluded)
            .with_ceiling(self.ceiling)
            .with_jobs(self.jobs);
        Ok(brute_force_oracle(&cfg)?.survivors)
    }
}

const THM_A_TRIPLES: &str =
    "9 [10,4,1] [11,0,4] [12,9,0] [13,9,1] [14,0,7] [15,4,6] [17,7,7] [18,6,9] [22,0,19]";
const BOUNDED_D: u32 = 30;

fn thm_a(ctx: &Ctx) -> Result<Report> {
    let mut r = Report::new("thmA");
    let cands = theorem_a_candidates();
    r.check_eq("candidates", THM_A_TRIPLES, triples(&cands.survivors));
    let replayed = cands
        .trace
        .iter()
        .filter(|c| {
            c.checks
                .iter()
                .skip(2)
                .any(|k| k.status != FilterStatus::Pass)
        })
        .count();
    r.check_eq(
        "identity and equality(n=3) replay failures",
        "0",
        replayed.to_string(),
    );

    let oracle = ctx.oracle(
        3,
        22,
        RealizabilityClass::RealLine,
        &[InequalityId::Shnurnikov],
    )?;
    r.check(
        "oracle d in [4, 22] without Shnurnikov",
        "same 9 candidates",
        if oracle == cands.survivors {
            "same 9 candidates".to_owned()
        } else {
            listing(&oracle)
        },
        oracle == cands.survivors,
    );
    let low: Vec<TVector> = oracle.iter().filter(|tv| tv.d() < 6).cloned().collect();
    r.check_eq("oracle survivors with d in {4, 5}", "none", listing(&low));

    let mut np_hits = 0;
    for d in 6..=100 {
        np_hits += exclude_near_pencil(3, d)?
            .iter()
            .filter(|c| c.satisfies_equality)
            .count();
    }
    r.check_eq(
        "near-pencils satisfying equality(n=3), 6 <= d <= 100",
        "0",
        np_hits.to_string(),
    );

    let after = shnurnikov_elimination(&cands);
    r.check_eq("after Shnurnikov", "0", after.survivors.len().to_string());
    let full = ctx.oracle(3, 22, RealizabilityClass::RealLine, &[])?;
    r.check_eq(
        "oracle d in [4, 22] with Shnurnikov",
        "none",
        listing(&full),
    );
    Ok(r)
}

fn certificate(r: &mut Report, n: u32, id: InequalityId) -> Result<Option<DominanceCertificate>> {
    let outcome = dominance_certificate(n, id)?;
    let name = format!("certificate n={n} with {}", id.name());
    match outcome.certificate() {
        Some(c) => {
            r.check(&name, "found", c.derived_inequality(6), true);
            Ok(Some(c.clone()))
        }
        None => {
            r.check(&name, "found", "inconclusive", false);
            Ok(None)
        }
    }
}

fn no_ball_quotient(ctx: &Ctx, target: &str, n: u32) -> Result<Report> {
    let mut r = Report::new(target);
    let class = RealizabilityClass::ComplexLine;
    if let Some(c) = certificate(&mut r, n, InequalityId::HirzebruchImproved)? {
        r.check(
            "forced to vanish",
            "every r >= 3",
            c.forced_zero.to_string(),
            c.forced_zero.covers_all_from_three(),
        );
        r.check_eq("residual", "9t2 = 9d", c.residual.to_string());
        let sols = residual_solutions(&c, BOUNDED_D, class)?;
        r.check_eq("residual solutions, d in [4, 30]", "none", listing(&sols));
    }
    let oracle = ctx.oracle(n, BOUNDED_D, class, &[])?;
    r.check_eq("oracle d in [4, 30], complex", "none", listing(&oracle));
    Ok(r)
}

fn thm_c(ctx: &Ctx, catalog: &Catalog) -> Result<Report> {
    let mut r = Report::new("thmC");
    let a16 = catalog.get("A1(6)")?.tv.to_compact();
    if let Some(c) = certificate(&mut r, 5, InequalityId::HirzebruchStrong)? {
        r.check_eq("forced to vanish", "{4, r >= 5}", c.forced_zero.to_string());
        r.check_eq("residual", "4t2 + 3t3 = 4d", c.residual.to_string());
        // t3 = 2d(d-3)/9 from the identity; Melchior then removes d = 9
        let complex = residual_solutions(&c, BOUNDED_D, RealizabilityClass::ComplexLine)?;
        r.check_eq(
            "residual solutions, complex",
            "d=6;t2=3;t3=4 d=9;t3=12",
            listing(&complex),
        );
        let real = residual_solutions(&c, BOUNDED_D, RealizabilityClass::RealLine)?;
        r.check_eq("residual solutions, real", a16.clone(), listing(&real));
    }
    let oracle = ctx.oracle(5, BOUNDED_D, RealizabilityClass::RealLine, &[])?;
    r.check_eq(
        "unique survivor, oracle d in [4, 30]",
        a16,
        listing(&oracle),
    );
    Ok(r)
}

fn thm_d() -> Result<Report> {
    let mut r = Report::new("thmD");
    for (label, strict) in [("strict", true), ("weak", false)] {
        let got: Vec<String> = [4, 5, 6]
            .into_iter()
            .map(|k| Ok(format!("k={k}:{}", min_n(k, strict)?)))
            .collect::<linecfg::Result<_>>()?;
        r.check_eq(
            &format!("min n, {label} comparator"),
            "k=4:16 k=5:27 k=6:41",
            got.join(" "),
        );
    }
    Ok(r)
}

pub fn reports(
    target: Target,
    jobs: usize,
    ceiling: u128,
    catalog: &Catalog,
) -> Result<Vec<Report>> {
    let ctx = Ctx { jobs, ceiling };
    let one = |t: Target| -> Result<Report> {
        match t {
            Target::ThmA => thm_a(&ctx),
            Target::ThmB => no_ball_quotient(&ctx, "thmB", 4),
            Target::ThmC => thm_c(&ctx, catalog),
            Target::N7 => no_ball_quotient(&ctx, "n7", 7),
            Target::ThmD => thm_d(),
            Target::All => unreachable!(),
        }
    };
    match target {
        Target::All => [
            Target::ThmA,
            Target::ThmB,
            Target::ThmC,
            Target::N7,
            Target::ThmD,
        ]
        .into_iter()
        .map(one)
        .collect(),
        t => Ok(vec![one(t)?]),
    }
}

pub fn run(args: &ReproduceArgs, catalog: &Catalog) -> Result<Status> {
    let reports = reports(args.target, args.jobs, args.ceiling, catalog)?;
    for r in &reports {
        if args.json {
            println!("{}", serde_json::to_string(r)?);
        } else {
            print!("{}", r.render());
        }
    }
    Ok(if reports.iter().all(|r| r.pass) {
        Status::Ok
    } else {
        Status::Mismatch
    })
}
