//! One line per acceptance criterion. Exits nonzero if any criterion fails
//! or runs over its time budget.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use e36_core::e36::Status;
use e36_core::induced::{parametric_y_search, InducedElement, Order, PBWMonomial};
use e36_core::verify::{theorem41_scan, verify_lemma, LemmaReport};

struct Outcome {
    ok: bool,
    note: String,
}

fn report(id: &str, kv: &[(&str, &str)]) -> LemmaReport {
    let params: BTreeMap<String, String> = kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    verify_lemma(id, &params).expect("known lemma id")
}

fn summarize(reports: &[LemmaReport]) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for r in reports {
        for d in &r.details {
            match d.status {
                Status::Pass => {}
                Status::Deviation => notes.push(format!("deviation in {}: {} -> {}", r.id, d.claim, d.computed)),
                Status::Fail => {
                    ok = false;
                    notes.push(format!("{}: {} -> {}", r.id, d.claim, d.computed));
                }
            }
        }
    }
    let checks: usize = reports.iter().map(|r| r.details.len()).sum();
    let note = if notes.is_empty() { format!("{checks} checks") } else { format!("{checks} checks; {}", notes.join("; ")) };
    Outcome { ok, note }
}

type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        ("bracket oracle equivalence on 45 pairs", secs(1), Box::new(|| summarize(&[report("brackets", &[])]))),
        (
            "relation suite with exactly one deviation",
            secs(1),
            Box::new(|| {
                let r = report("relations", &[]);
                let devs = r.details.iter().filter(|d| d.status == Status::Deviation).count();
                let mut o = summarize(&[r]);
                o.ok &= devs == 1;
                o
            }),
        ),
        (
            "super Jacobi identity on a spanning set (39 elements)",
            secs(60),
            Box::new(|| summarize(&[report("jacobi", &[])])),
        ),
        ("graded dimensions 3, 6, 12, 18", secs(10), Box::new(|| summarize(&[report("dims", &[])]))),
        ("hypercharge equals degree / 3", secs(10), Box::new(|| summarize(&[report("hypercharge", &[])]))),
        ("model multiplicity one and Weyl dimensions, m,n <= 4", secs(60), Box::new(|| summarize(&[report("3.1", &[("nmax", "4")])]))),
        (
            "D-operator suite on S^{<=2} (x) F(p,q), p,q <= 3",
            secs(300),
            Box::new(|| {
                let ids = ["3.3", "3.5", "3.7", "3.8", "3.10"];
                summarize(&ids.map(|id| report(id, &[("pmax", "3")])))
            }),
        ),
        ("eight highest weight families in Lambda (x) F", secs(60), Box::new(|| summarize(&[report("3.12", &[])]))),
        (
            "kernels of e'0 and e'1 match T0..T4 on 0 <= p,q <= 4",
            secs(120),
            Box::new(|| summarize(&[report("3.13", &[]), report("3.14", &[])])),
        ),
        (
            "forced singular vector d+1 (x) 1 at y = 0",
            secs(1),
            Box::new(|| {
                let conds = parametric_y_search(0, 0, 0, 1);
                let want = InducedElement::basis(Order::MinusPlus, PBWMonomial::new([0; 3], &[], &[0]), 0);
                let ok = conds.len() == 1
                    && conds[0].condition.to_string() == "y"
                    && conds[0].vectors.len() == 1
                    && conds[0].vectors[0].1 == vec![want];
                let found: Vec<String> = conds.iter().map(|c| format!("{} = 0 at depth {}", c.condition, c.depth)).collect();
                Outcome { ok, note: found.join("; ") }
            }),
        ),
        (
            "scan p,q <= 2, r in {0,1}, depth <= 3 has only empty rows",
            secs(600),
            Box::new(|| {
                let rows = theorem41_scan(2, 2, &[0, 1], 3, false);
                let bad: Vec<String> = rows
                    .iter()
                    .filter(|r| !r.conditions.is_empty())
                    .map(|r| format!("({},{};{})", r.p, r.q, r.r))
                    .collect();
                Outcome {
                    ok: bad.is_empty() && rows.len() == 8,
                    note: if bad.is_empty() { format!("{} rows empty", rows.len()) } else { format!("nonempty rows {}", bad.join(" ")) },
                }
            }),
        ),
        (
            "filtration, reorder inclusion, Y eigenvalue, annihilation",
            secs(120),
            Box::new(|| summarize(&[report("4.2", &[]), report("4.3", &[]), report("4.4", &[("nmax", "3")])])),
        ),
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let took = start.elapsed();
        let ok = o.ok && took <= budget;
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2}. {name} [{:.2}s, budget {}s] {}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            took.as_secs_f64(),
            budget.as_secs(),
            o.note
        );
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
