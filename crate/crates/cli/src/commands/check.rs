use std::fmt::Write as _;

use anyhow::Result;
use linecfg::kummer::KodairaApplicability;
use linecfg::{
    ball_quotient_orders, chern_profile, hirzebruch_polynomial, kodaira_applicability, run_all,
    ChernProfile, InequalityReport, QuadraticPolynomial, RealizabilityClass, TVector,
};
use serde::{Deserialize, Serialize};

use super::Status;
use crate::args::CheckArgs;
use crate::input;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub label: String,
    pub tv: TVector,
    pub class: RealizabilityClass,
    /// `d(d-1) = sum r(r-1) t_r`
    pub identity: bool,
    pub identity_lhs: u64,
    pub identity_rhs: u64,
    pub f0: u64,
    pub f1: u64,
    pub chern: Option<ChernProfile>,
    pub polynomial: Option<QuadraticPolynomial>,
    pub kodaira: KodairaApplicability,
    pub ball_quotient_orders: Option<Vec<u32>>,
    pub inequalities: Vec<InequalityReport>,
    pub warnings: Vec<String>,
}

/// The value, or a warning (recorded once) when the cover construction does
/// not apply.
fn construction<T>(r: linecfg::Result<T>, warnings: &mut Vec<String>) -> Option<T> {
    match r {
        Ok(v) => Some(v),
        Err(e) => {
            let msg = format!("Kummer cover: {e}");
            if !warnings.contains(&msg) {
                warnings.push(msg);
            }
            None
        }
    }
}

pub fn report(label: &str, tv: &TVector, class: RealizabilityClass, n_max: u32) -> CheckReport {
    let mut warnings = Vec::new();
    let d = tv.d() as u64;
    let identity = tv.check_identity();
    if !identity {
        warnings
            .push("the combinatorial identity fails; no arrangement has this t-vector".to_owned());
    }
    let chern = construction(chern_profile(tv), &mut warnings);
    let polynomial = construction(hirzebruch_polynomial(tv), &mut warnings);
    let orders = construction(ball_quotient_orders(tv, n_max), &mut warnings);
    let inequalities = run_all(tv, class);
    if inequalities.iter().all(|r| !r.applicable) {
        warnings.push(format!(
            "no inequality applies to this t-vector in the {class} class"
        ));
    }
    CheckReport {
        label: label.to_owned(),
        tv: tv.clone(),
        class,
        identity,
        identity_lhs: d * (d - 1),
        identity_rhs: tv.incident_pairs(),
        f0: tv.f0(),
        f1: tv.f1(),
        chern,
        polynomial,
        kodaira: kodaira_applicability(tv),
        ball_quotient_orders: orders,
        inequalities,
        warnings,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(r: &CheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}  [{}]", r.label, r.class);
    if r.label != r.tv.to_compact() {
        let _ = writeln!(s, "  t-vector: {}", r.tv);
    }
    let rel = if r.identity { "=" } else { "!=" };
    let _ = writeln!(
        s,
        "  identity: d(d-1) = {} {rel} {} = sum r(r-1) t_r",
        r.identity_lhs, r.identity_rhs
    );
    let _ = writeln!(s, "  f0 = {}, f1 = {}", r.f0, r.f1);
    if let Some(c) = &r.chern {
        let _ = writeln!(s, "  c2 / n^(d-3) = {}", c.c2_normalized);
        let _ = writeln!(s, "  c1^2 / n^(d-3) = {}", c.c1sq_normalized);
    }
    if let Some(p) = &r.polynomial {
        let _ = writeln!(s, "  P(n) = {p}");
    }
    let _ = writeln!(
        s,
        "  Kodaira hypotheses: n = 2 {}, n >= 3 {}",
        yes_no(r.kodaira.covers(2)),
        yes_no(r.kodaira.covers(3))
    );
    if let Some(orders) = &r.ball_quotient_orders {
        let _ = writeln!(s, "  ball-quotient orders: {orders:?}");
    }
    let _ = writeln!(s, "  inequalities:");
    for q in &r.inequalities {
        let _ = write!(s, "    {:<20}", q.id.name());
        if q.applicable {
            let verdict = if q.satisfied { "holds" } else { "VIOLATED" };
            let _ = writeln!(
                s,
                "lhs {}  rhs {}  slack {}  {verdict}",
                q.lhs, q.rhs, q.slack
            );
        } else {
            let _ = writeln!(
                s,
                "inapplicable: {}",
                q.reason.as_deref().unwrap_or("hypotheses fail")
            );
        }
    }
    for w in &r.warnings {
        let _ = writeln!(s, "  warning: {w}");
    }
    s
}

pub fn run(args: &CheckArgs, catalog: &linecfg::Catalog) -> Result<Status> {
    for inp in input::read(&args.input, catalog)? {
        let class = args
            .class
            .map(Into::into)
            .or(inp.class)
            .unwrap_or(RealizabilityClass::RealLine);
        let r = report(&inp.label, &inp.tv, class, args.n_max);
        if args.json {
            println!("{}", serde_json::to_string(&r)?);
        } else {
            print!("{}", render(&r));
        }
    }
    Ok(Status::Ok)
}
