use std::collections::{BTreeMap, BTreeSet};

use e36_core::e36::{named_element, Status};
use e36_core::g0rep::IrrepF;
use e36_core::induced::{InducedModule, Order, PBWMonomial};
use e36_core::parse::{parse_element, ExprError};
use e36_core::scalar::int;
use e36_core::verify::*;
use proptest::prelude::*;

fn params(kv: &[(&str, &str)]) -> BTreeMap<String, String> {
    kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn tags(r: &LineReport) -> BTreeSet<String> {
    r.lines.iter().map(|l| l.tag.clone().expect("every line is labelled")).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn lemma_ids_dispatch() {
    let r = verify_lemma("3.7", &params(&[("pmax", "3")])).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.params["pmax"], "3");
    let r = verify_lemma("relations", &BTreeMap::new()).unwrap();
    assert_eq!(r.status, Status::Deviation);
    assert_eq!(r.details.iter().filter(|d| d.status == Status::Deviation).count(), 1);
    assert_eq!(verify_lemma("9.99", &BTreeMap::new()).unwrap_err(), VerifyError::UnknownLemma("9.99".into()));
    assert!(matches!(verify_lemma("3.7", &params(&[("pmax", "three")])), Err(VerifyError::BadParam(_))));
}

#[test]
fn reports_are_deterministic() {
    let a = verify_lemma("3.12", &BTreeMap::new()).unwrap();
    let b = verify_lemma("3.12", &BTreeMap::new()).unwrap();
    assert_eq!(a.details, b.details);
}

#[test]
fn eight_families_on_f22() {
    for plus in [true, false] {
        let r = enumerate_hwv_lambda(2, 2, plus);
        assert!(r.issues.is_empty(), "{:?}", r.issues);
        assert_eq!(r.lines.len(), 8);
        assert_eq!(tags(&r), set(&["(00)'", "(+0)", "(-+)", "(0-)", "(0+)", "(-0)", "(+-)", "(00)''"]));
    }
}

#[test]
fn trivial_f_gives_exterior_powers() {
    // Each Λ^k C^3 is irreducible with highest weight d1...dk.
    for plus in [true, false] {
        let r = enumerate_hwv_lambda(0, 0, plus);
        assert!(r.issues.is_empty(), "{:?}", r.issues);
        let got: Vec<(u32, (i64, i64))> = r.lines.iter().map(|l| (l.degree, l.weight)).collect();
        assert_eq!(got, vec![(0, (0, 0)), (1, (1, 0)), (2, (0, 1)), (3, (0, 0))]);
        assert_eq!(tags(&r), set(&["(00)'", "(+0)", "(0+)", "(00)''"]));
    }
}

#[test]
fn lines_are_sl3_highest() {
    let e = |n: &str| named_element(n).unwrap();
    for (p, q) in [(1, 0), (0, 2), (2, 1)] {
        let module = InducedModule::new(IrrepF::new(p, q, 0, int(0)));
        for plus in [true, false] {
            for l in enumerate_hwv_lambda(p, q, plus).lines {
                for op in ["e1", "e2"] {
                    assert!(module.act(&e(op), &l.vector).unwrap().is_zero());
                }
                if plus {
                    assert!(module.act(&e("e3"), &l.vector).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn kernel_tables() {
    let k = |p, q, plus| tags(&kernel_e0prime(p, q, plus));
    assert_eq!(k(3, 0, true), set(&["T0", "T1"]));
    assert_eq!(k(0, 2, true), set(&["T0", "T2"]));
    assert_eq!(k(2, 1, true), set(&["T0"]));
    assert_eq!(k(0, 1, true), set(&["T0", "T2", "T3"]));
    assert_eq!(k(0, 0, true), set(&["T0", "T1", "T4"]));
    for (p, q) in [(3, 0), (0, 2), (2, 1), (0, 1), (0, 0)] {
        assert_eq!(k(p, q, false), k(p, q, true));
    }
}

#[test]
fn kernel_vectors_are_annihilated() {
    let e0p = named_element("e0prime").unwrap();
    for (p, q) in [(0, 0), (0, 1), (2, 0)] {
        let module = InducedModule::new(IrrepF::new(p, q, 0, int(0)));
        for l in kernel_e0prime(p, q, true).lines {
            assert!(module.act(&e0p, &l.vector).unwrap().is_zero());
        }
    }
}

#[test]
fn scan_examples() {
    let rows = theorem41_scan(2, 2, &[0, 1], 3, false);
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.conditions.is_empty()));
    let keys: Vec<(u32, u32, u32)> = rows.iter().map(|r| (r.p, r.q, r.r)).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);

    let boundary = theorem41_scan(0, 0, &[0], 1, true);
    assert_eq!(boundary.len(), 1);
    let c = &boundary[0].conditions;
    assert_eq!(c.len(), 1);
    assert_eq!((c[0].depth, c[0].condition.to_string()), (1, "y".to_string()));
    assert_eq!(
        c[0].vectors[0].1[0].terms().keys().next().map(|(m, f)| (*m, *f)),
        Some((PBWMonomial::new([0; 3], &[], &[0]), 0))
    );
    assert!(c[0].vectors[0].1[0].terms().len() == 1);
}

#[test]
fn scan_is_monotone_in_depth() {
    let shallow = theorem41_scan(1, 1, &[0], 1, true);
    let deep = theorem41_scan(1, 1, &[0], 3, true);
    assert_eq!(shallow.len(), deep.len());
    for (s, d) in shallow.iter().zip(&deep) {
        for c in &s.conditions {
            assert!(d.conditions.iter().any(|e| e.depth == c.depth && (e.a, e.b, e.r) == (c.a, c.b, c.r) && e.condition == c.condition));
        }
    }
}

#[test]
fn parse_examples() {
    assert_eq!(parse_element("x3*d35").unwrap(), named_element("e0prime").unwrap());
    assert_eq!(parse_element("x3*d25 - x2*d35 + 2*x5*d23").unwrap(), named_element("e0").unwrap());
    assert_eq!(parse_element("x5*d23").unwrap_err(), ExprError::Invalid("2-form is not closed".into()));
}

#[test]
fn module_order_tags() {
    let w = e36_core::induced::InducedElement::basis(Order::MinusPlus, PBWMonomial::one(), 0);
    assert!(component_partition_holds(&w));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn line_counts_agree_with_weight_multiplicities(p in 0u32..4, q in 0u32..4, plus in any::<bool>()) {
        let r = enumerate_hwv_lambda(p, q, plus);
        prop_assert!(r.issues.is_empty(), "{:?}", r.issues);
        // dim Λ ⊗ F = Σ over lines of the Weyl dimension of the line's weight.
        let total: u64 = r.lines.iter().map(|l| e36_core::g0rep::weyl_dimension(l.weight.0 as u64, l.weight.1 as u64)).sum();
        prop_assert_eq!(total, 8 * e36_core::g0rep::weyl_dimension(p as u64, q as u64));
    }
}
