use anyhow::Result;
use linecfg::catalog::EntryKind;
use linecfg::search::equality_constraint;
use linecfg::{ball_quotient_orders, hirzebruch_polynomial, Catalog, CatalogEntry, InequalityId};
use serde::{Deserialize, Serialize};

use super::check::{self, CheckReport};
use super::reproduce::Report;
use super::Status;
use crate::args::CatalogAction;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShowReport {
    pub entry: CatalogEntry,
    pub check: CheckReport,
}

fn names_or_none(names: &[&str]) -> String {
    if names.is_empty() {
        "none".to_owned()
    } else {
        names.join(", ")
    }
}

fn verify(catalog: &Catalog) -> Report {
    let mut r = Report::new("catalog");
    let genuine_bad: Vec<&str> = catalog
        .list()
        .iter()
        .filter(|e| e.kind == EntryKind::Genuine && !e.tv.check_identity())
        .map(|e| e.name.as_str())
        .collect();
    r.check_eq(
        "genuine entries failing the identity",
        "none",
        names_or_none(&genuine_bad),
    );

    for (name, poly, orders) in [
        ("A1(6)", "n^2 - 10n + 25", "[5]"),
        ("Hesse", "9n^2 - 54n + 81", "[3]"),
    ] {
        match catalog.get(name) {
            Ok(e) => {
                let p = hirzebruch_polynomial(&e.tv)
                    .map(|p| p.to_string())
                    .unwrap_or_else(|err| err.to_string());
                r.check_eq(&format!("P(n) of {name}"), poly, p);
                let o = ball_quotient_orders(&e.tv, 1000)
                    .map(|o| format!("{o:?}"))
                    .unwrap_or_else(|err| err.to_string());
                r.check_eq(&format!("ball-quotient orders of {name}"), orders, o);
            }
            Err(err) => r.check(name, "present", err.to_string(), false),
        }
    }

    let survivors: Vec<&str> = catalog
        .list()
        .iter()
        .filter(|e| e.kind == EntryKind::Eliminated)
        .filter(|e| {
            !InequalityId::Shnurnikov
                .evaluate(&e.tv, e.class)
                .obstructs()
        })
        .map(|e| e.name.as_str())
        .collect();
    r.check_eq(
        "eliminated entries not obstructed by Shnurnikov",
        "none",
        names_or_none(&survivors),
    );

    let eq3 = equality_constraint(3).expect("order 3 is valid");
    let np_bad: Vec<&str> = catalog
        .list()
        .iter()
        .filter(|e| e.kind == EntryKind::NearPencil)
        .filter(|e| e.tv.t(e.tv.d() - 2) != 1 || eq3.is_satisfied(&e.tv))
        .map(|e| e.name.as_str())
        .collect();
    r.check_eq(
        "near-pencil entries off shape or satisfying equality(n=3)",
        "none",
        names_or_none(&np_bad),
    );
    r
}

pub fn run(action: &CatalogAction, catalog: &Catalog) -> Result<Status> {
    match action {
        CatalogAction::List { json } => {
            if *json {
                println!("{}", serde_json::to_string(catalog.list())?);
            } else {
                println!(
                    "catalog version {}, {} entries",
                    catalog.version,
                    catalog.list().len()
                );
                for e in catalog.list() {
                    println!(
                        "  {:<18}{:<10}{:<32}{}",
                        e.name,
                        e.class.to_string(),
                        e.kind.to_string(),
                        e.tv
                    );
                }
            }
            Ok(Status::Ok)
        }
        CatalogAction::Show { name, json } => {
            let entry = catalog.get(name)?.clone();
            let report = check::report(&entry.name, &entry.tv, entry.class, 1000);
            if *json {
                println!(
                    "{}",
                    serde_json::to_string(&ShowReport {
                        entry,
                        check: report
                    })?
                );
            } else {
                println!("{} ({}, {})", entry.name, entry.kind, entry.class);
                println!("  {}", entry.notes);
                print!("{}", check::render(&report));
            }
            Ok(Status::Ok)
        }
        CatalogAction::Verify { json } => {
            let r = verify(catalog);
            if *json {
                println!("{}", serde_json::to_string(&r)?);
            } else {
                print!("{}", r.render());
            }
            Ok(if r.pass { Status::Ok } else { Status::Mismatch })
        }
    }
}
