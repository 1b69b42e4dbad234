use num::Zero;
use e36_core::scalar::*;
use proptest::prelude::*;

fn poly(n: usize, terms: &[(&[u16], i64)]) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for (e, c) in terms {
        p.add_term(Monomial::from_slice(e), &int(*c));
    }
    p
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((proptest::collection::vec(0u16..3, 5), -5i64..6), 0..5).prop_map(|ts| {
        let mut p = Polynomial::zero(5);
        for (e, c) in ts {
            p.add_term(Monomial::from_slice(&e), &int(c));
        }
        p
    })
}

#[test]
fn product_examples() {
    let x1 = Polynomial::var(5, 0).unwrap();
    let x2 = Polynomial::var(5, 1).unwrap();
    let x3 = Polynomial::var(5, 2).unwrap();
    assert_eq!(&(&x1 + &x2) * &x1, poly(5, &[(&[2], 1), (&[1, 1], 1)]));
    assert!((&x1 * &Polynomial::zero(5)).is_zero());
    assert_eq!(&x3 * &x3, poly(5, &[(&[0, 0, 2], 1)]));
}

#[test]
fn partial_examples() {
    let p = poly(5, &[(&[2, 0, 0, 1], 1)]);
    assert_eq!(p.partial(0).unwrap(), poly(5, &[(&[1, 0, 0, 1], 2)]));
    assert!(poly(5, &[(&[3], 1)]).partial(1).unwrap().is_zero());
    assert_eq!(poly(5, &[(&[0, 0, 0, 1, 1], 1)]).partial(4).unwrap(), poly(5, &[(&[0, 0, 0, 1], 1)]));
    assert!(p.partial(7).is_err());
}

#[test]
fn rationals_serialize_exactly() {
    assert_eq!(rational_to_string(&rat(-6, 4)), "-3/2");
    assert_eq!(rational_to_string(&int(2)), "2/1");
    assert_eq!(parse_rational(" -3/2 "), Some(rat(-3, 2)));
    assert_eq!(parse_rational("1/0"), None);
}

/// Sign of a permutation by counting inversions.
fn inversion_sign(p: &[u8]) -> i8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 { 1 } else { -1 }
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn partial_is_a_derivation(a in arb_poly(), b in arb_poly(), v in 0usize..5) {
        let lhs = (&a * &b).partial(v).unwrap();
        let rhs = &(&a.partial(v).unwrap() * &b) + &(&a * &b.partial(v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exterior_sorting_sign(perm in Just((0u8..6).collect::<Vec<_>>()).prop_shuffle(), len in 0usize..6) {
        let idx = &perm[..len];
        let (sign, m) = ExteriorMonomial::from_product(idx).unwrap();
        prop_assert_eq!(sign, inversion_sign(idx));
        let mut sorted = idx.to_vec();
        sorted.sort();
        prop_assert_eq!(m.indices(), sorted);
    }

    #[test]
    fn repeated_exterior_index_vanishes(idx in proptest::collection::vec(0u8..4, 2..5)) {
        let mut dup = idx.clone();
        dup.push(idx[0]);
        prop_assert!(ExteriorMonomial::from_product(&dup).is_none());
    }

    #[test]
    fn rational_roots_are_roots(roots in proptest::collection::vec((-6i64..7, 1i64..4), 1..4)) {
        let mut p = UniPoly::constant(int(1));
        for (n, d) in &roots {
            p = p.mul(&UniPoly::affine(-rat(*n, *d), int(1)));
        }
        let found = p.rational_roots();
        for (n, d) in &roots {
            prop_assert!(found.contains(&rat(*n, *d)));
        }
        for r in &found {
            prop_assert!(p.eval(r).is_zero());
        }
    }
}
