use e36_core::dops::*;
use e36_core::g0rep::{bigraded_basis, hw_monomial, model_monomial, model_weight, ModelElement};
use e36_core::scalar::{falling, int, Rational};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn me(d: [u16; 3], x: [u16; 3]) -> ModelElement {
    ModelElement::from_monomial(model_monomial(d, x))
}

fn hw(p: u16, q: u16) -> SMElement {
    SMElement::from_model(ModelElement::from_monomial(hw_monomial(p, q)))
}

fn one() -> SMElement {
    SMElement::from_model(ModelElement::one())
}

fn s3(k: u16, t: ModelElement) -> SMElement {
    SMElement::term([0, 0, k], t)
}

#[test]
fn dbar_examples() {
    assert_eq!(dbar_apply(3, &one()), SMElement::term([0, 0, 1], ModelElement::one()));
    let want = SMElement::term([1, 0, 0], me([0; 3], [1, 0, 0]))
        .add(&SMElement::term([0, 1, 0], me([0; 3], [0, 1, 0])))
        .add(&SMElement::term([0, 0, 1], me([0; 3], [0, 0, 1])));
    assert_eq!(dbar_apply(1, &one()), want);
    for i in 1..=3 {
        assert!(is_sl3_hwv(&dbar_apply(i, &one())));
    }
}

#[test]
fn intertwining_examples() {
    for k in 0..=2u16 {
        for p in 0..=3u16 {
            for q in 0..=3u16 {
                let v = s3(k, ModelElement::from_monomial(hw_monomial(p, q)));
                if q > 0 {
                    let w = s3(k, ModelElement::from_monomial(hw_monomial(p, q - 1)));
                    assert_eq!(d_apply(2, &v), dbar_apply(2, &w).scale(&int(q as i64)));
                } else {
                    assert!(d_apply(2, &v).is_zero());
                }
                if q == 0 && p > 0 {
                    let w = s3(k, ModelElement::from_monomial(hw_monomial(p - 1, 0)));
                    assert_eq!(d_apply(1, &v), dbar_apply(1, &w).scale(&int((p * (p + 1)) as i64)));
                }
                assert_eq!(d_apply(3, &v), dbar_apply(3, &v));
            }
        }
    }
}

#[test]
fn intertwining_needs_s_highest() {
    // s = dh1 is not an sl(3)-highest weight vector of S; the identity fails.
    let v = SMElement::term([1, 0, 0], me([0; 3], [1, 0, 0]));
    let w = SMElement::term([1, 0, 0], ModelElement::one());
    assert_ne!(d_apply(1, &v), dbar_apply(1, &w).scale(&int(2)));
    let displayed = d1_displayed_variant().apply(&hw(1, 0));
    assert_ne!(displayed, dbar_apply(1, &one()).scale(&int(2)));
    assert_eq!(d_apply(1, &hw(1, 0)), dbar_apply(1, &one()).scale(&int(2)));
}

#[test]
fn lht_examples() {
    let v = SMElement::term([1, 0, 0], me([0; 3], [1, 0, 0])).add(&SMElement::term([0, 1, 0], me([0; 3], [0, 1, 0])));
    let l = lht(&v).unwrap();
    assert_eq!(l.sigma, [1, 0, 0]);
    assert_eq!(l.leading, me([0; 3], [1, 0, 0]));
    assert!(lht(&SMElement::zero()).is_err());
}

#[test]
fn leading_term_of_d_alpha_on_highest_vector() {
    let (p, q) = (2u16, 2u16);
    for alpha in [[1u16, 1, 0], [2, 0, 1], [0, 2, 2], [1, 0, 0]] {
        let coef = falling(&int(p as i64), alpha[0] as u32)
            * falling(&int((p + q + 1) as i64), alpha[0] as u32)
            * falling(&int(q as i64), alpha[1] as u32);
        let got = lht(&d_alpha_apply(alpha, &hw(p, q))).unwrap();
        let bar = lht(&dbar_alpha_apply(alpha, &hw(p - alpha[0], q - alpha[1]))).unwrap();
        assert_eq!(got.sigma, alpha);
        assert_eq!(got.leading, bar.leading.scale(&coef));
    }
}

#[test]
fn power_of_d1_on_weight_vectors() {
    // On a weight vector t of weight (a, b), h and h1 act by a + b + 1 and a.
    for (p, q) in [(1, 0), (2, 1), (1, 2)] {
        for m in bigraded_basis(p, q) {
            let t = ModelElement::from_monomial(m);
            let (a, b) = model_weight(&m);
            for k in 1..=3u32 {
                let v = dpow_expand(k, PowerOf::D1).apply(&SMElement::from_model(t.clone()));
                let coef = falling(&int(a + b + 1), k) * falling(&int(a), k);
                assert_eq!(v.component([k as u16, 0, 0]), t.scale(&coef));
                assert!(v.components().keys().all(|s| s <= &[k as u16, 0, 0]));
            }
        }
    }
}

#[test]
fn square_of_d1_by_hand() {
    // a^2 h (h-1) + 2 dh3 b a (h-1) + dh3^2 b^2
    let a = op_a();
    let b = op_b();
    let d = OperatorWord::hat(2);
    let hand = a
        .pow(2)
        .compose(&h_shifted(0))
        .compose(&h_shifted(1))
        .add(&d.compose(&b).compose(&a).compose(&h_shifted(1)).scale(&int(2)))
        .add(&d.pow(2).compose(&b.pow(2)));
    for v in sm_basis(1, 1, 1).iter().chain(sm_basis(2, 0, 1).iter()) {
        let twice = d_apply(1, &d_apply(1, v));
        assert_eq!(hand.apply(v), twice);
        assert_eq!(dpow_expand(2, PowerOf::D1).apply(v), twice);
    }
}

#[test]
fn cube_expansion_on_f22() {
    let e = dpow_expand(3, PowerOf::D1);
    for v in sm_basis(2, 2, 1) {
        assert_eq!(e.apply(&v), d_apply(1, &d_apply(1, &d_apply(1, &v))));
    }
}

#[test]
fn decomposition_examples() {
    let single = |a: [u16; 3]| -> BTreeMap<[u16; 3], Rational> { [(a, int(1))].into_iter().collect() };
    assert_eq!(hwv_decompose(&hw(1, 1), 1, 1).unwrap(), single([0, 0, 0]));
    let d3sq = d_alpha_apply([0, 0, 2], &hw(1, 1));
    assert_eq!(hwv_decompose(&d3sq, 1, 1).unwrap(), single([0, 0, 2]));
    let w = dbar_apply(2, &dbar_apply(1, &hw(1, 1)));
    let c = hwv_decompose(&w, 2, 2).unwrap();
    assert_eq!(hwv_reconstruct(&c, 2, 2), w);
    assert!(hwv_decompose(&SMElement::term([1, 0, 0], me([0; 3], [0, 1, 0])), 1, 0).is_err());
}

#[test]
fn d2_shift_sign() {
    // With dh transforming dually to x, h2 dh2 = -dh2, so the shift is -1.
    for v in sm_basis(1, 1, 1) {
        let lhs = d_apply(2, &hat_mul(1, &v));
        assert_eq!(lhs, hat_mul(1, &d2_shifted(-1).apply(&v)));
        assert_ne!(lhs, hat_mul(1, &d2_shifted(1).apply(&v)));
    }
}

fn arb_sm() -> impl Strategy<Value = (u32, u32, SMElement)> {
    (0u32..=3, 0u32..=3).prop_flat_map(|(p, q)| {
        let basis = sm_basis(p, q, 2);
        let n = basis.len();
        proptest::collection::vec((0..n, -3i64..4), 1..4).prop_map(move |ts| {
            let v = ts.iter().fold(SMElement::zero(), |acc, (i, c)| acc.add(&basis[*i].scale(&int(*c))));
            (p, q, v)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn d_operators_commute((_p, _q, v) in arb_sm()) {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            prop_assert_eq!(d_apply(i, &d_apply(j, &v)), d_apply(j, &d_apply(i, &v)));
        }
    }

    #[test]
    fn d_commutes_with_lower_dbar((_p, _q, v) in arb_sm()) {
        for i in 2..=3 {
            for j in 1..i {
                prop_assert_eq!(d_apply(i, &dbar_apply(j, &v)), dbar_apply(j, &d_apply(i, &v)));
            }
        }
    }

    #[test]
    fn dbar_leading_terms(a in proptest::array::uniform3(0u16..3), m in 0u16..3, n in 0u16..3) {
        let l = lht(&dbar_alpha_apply(a, &hw(m, n))).unwrap();
        prop_assert_eq!(l.sigma, a);
        prop_assert_eq!(l.leading, ModelElement::from_monomial(hw_monomial(m + a[0], n + a[1])));
    }
}
