//! The sl(3) model `C[∂1,∂2,∂3,x1,x2,x3]/(P)` with `P = ∂1x1 + ∂2x2 + ∂3x3`
//! and the irreducible g0-modules `F(p,q;r;y)` built from it.
//!
//! Model polynomials use six slots: `∂1,∂2,∂3` in slots 0..3 and
//! `x1,x2,x3` in slots 3..6.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::Zero;

use crate::e36::{g0_decompose, G0Element, Weight};
use crate::e510::{AlgebraError, SuperElement};
use crate::scalar::{format_combination, format_monomial, int, monomials_of_degree, Monomial, Polynomial, Rational};

pub const MODEL_VARS: usize = 6;

fn dslot(i: usize) -> usize {
    i
}

fn xslot(i: usize) -> usize {
    3 + i
}

/// Polynomial `∂_i` (0-based) in the model ring.
pub fn model_d(i: usize) -> Polynomial {
    Polynomial::var(MODEL_VARS, dslot(i)).expect("slot in range")
}

/// Polynomial `x_i` (0-based) in the model ring.
pub fn model_x(i: usize) -> Polynomial {
    Polynomial::var(MODEL_VARS, xslot(i)).expect("slot in range")
}

/// Monomial `∂^b x^a` with exponent triples.
pub fn model_monomial(d: [u16; 3], xs: [u16; 3]) -> Monomial {
    Monomial::from_slice(&[d[0], d[1], d[2], xs[0], xs[1], xs[2]])
}

/// `∂3^q x1^p`, the highest weight monomial of bidegree `(p, q)`.
pub fn hw_monomial(p: u16, q: u16) -> Monomial {
    model_monomial([0, 0, q], [p, 0, 0])
}

/// `P = ∂1x1 + ∂2x2 + ∂3x3`.
pub fn relation_p() -> Polynomial {
    let mut p = Polynomial::zero(MODEL_VARS);
    for i in 0..3 {
        p = &p + &(&model_d(i) * &model_x(i));
    }
    p
}

fn reducible(m: &Monomial) -> bool {
    m.0[dslot(0)] > 0 && m.0[xslot(0)] > 0
}

/// Coset representative in canonical form: no monomial divisible by `∂1x1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModelElement(Polynomial);

/// Variable names of the model slots.
pub const MODEL_NAMES: [&str; MODEL_VARS] = ["dp1", "dp2", "dp3", "x1", "x2", "x3"];

impl fmt::Display for ModelElement {
    /// `[dp3*x1 - x2*dp2]` style, in monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = format_combination(
            self.0
                .terms()
                .map(|(m, c)| (format_monomial(m, &MODEL_NAMES), c.clone())),
        );
        write!(f, "[{text}]")
    }
}

impl ModelElement {
    pub fn zero() -> Self {
        ModelElement(Polynomial::zero(MODEL_VARS))
    }

    pub fn one() -> Self {
        ModelElement(Polynomial::one(MODEL_VARS))
    }

    /// Reduced image of a single monomial.
    pub fn from_monomial(m: Monomial) -> Self {
        model_reduce(&Polynomial::term(MODEL_VARS, m, int(1)))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        ModelElement(&self.0 + &other.0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ModelElement(self.0.scale(c))
    }

    /// Product in the quotient ring.
    pub fn mul(&self, other: &Self) -> Self {
        model_reduce(&(&self.0 * &other.0))
    }
}

/// Reduces modulo `P` by rewriting `∂1x1 → -∂2x2 - ∂3x3` until no monomial
/// contains `∂1x1`. Each rewrite lowers the `∂1` degree, so this terminates.
pub fn model_reduce(p: &Polynomial) -> ModelElement {
    assert_eq!(p.nvars(), MODEL_VARS, "model polynomials have six slots");
    let mut done = Polynomial::zero(MODEL_VARS);
    let mut work: BTreeMap<Monomial, Rational> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
    let lead = model_monomial([1, 0, 0], [1, 0, 0]);
    let tail = [model_monomial([0, 1, 0], [0, 1, 0]), model_monomial([0, 0, 1], [0, 0, 1])];
    while let Some((m, c)) = work.pop_last() {
        if c.is_zero() {
            continue;
        }
        if !reducible(&m) {
            done.add_term(m, &c);
            continue;
        }
        let rest = lead.quotient_of(&m);
        for t in &tail {
            let e = work.entry(rest.mul(t)).or_insert_with(Rational::zero);
            *e -= &c;
        }
    }
    ModelElement(done)
}

/// Action of `x_i ∂_j` (0-based) on the model ring:
/// `x_i ∂/∂x_j - ∂_j ∂/∂(∂_i)`.
pub fn elementary_act(i: usize, j: usize, p: &Polynomial) -> Polynomial {
    let a = &model_x(i) * &p.partial(xslot(j)).expect("slot in range");
    let b = &model_d(j) * &p.partial(dslot(i)).expect("slot in range");
    &a - &b
}

/// Action of the sl(3) part of a g0 element on a model element.
pub fn model_act_g0(g: &G0Element, m: &ModelElement) -> ModelElement {
    let mut out = Polynomial::zero(MODEL_VARS);
    for i in 0..3 {
        for j in 0..3 {
            if !g.sl3[i][j].is_zero() {
                out.add_assign_scaled(&elementary_act(i, j, &m.0), &g.sl3[i][j]);
            }
        }
    }
    model_reduce(&out)
}

/// Action of an element of sl(3) on the model.
pub fn model_act(g: &SuperElement, m: &ModelElement) -> Result<ModelElement, AlgebraError> {
    let d = g0_decompose(g).map_err(|_| AlgebraError::OutsideSubalgebra("sl(3)"))?;
    if !d.y.is_zero() || d.sl2.iter().flatten().any(|c| !c.is_zero()) {
        return Err(AlgebraError::OutsideSubalgebra("sl(3)"));
    }
    Ok(model_act_g0(&d, m))
}

/// Weight `(h1, h2)` of a model monomial.
pub fn model_weight(m: &Monomial) -> (i64, i64) {
    let w = |i: usize| m.0[xslot(i)] as i64 - m.0[dslot(i)] as i64;
    (w(0) - w(1), w(1) - w(2))
}

/// Canonical monomials of x-degree `p` and ∂-degree `q`: a basis of the
/// bigraded component of the model.
pub fn bigraded_basis(p: u32, q: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for dm in monomials_of_degree(3, q) {
        for xm in monomials_of_degree(3, p) {
            let m = model_monomial([dm.0[0], dm.0[1], dm.0[2]], [xm.0[0], xm.0[1], xm.0[2]]);
            if !reducible(&m) {
                out.push(m);
            }
        }
    }
    out.sort();
    out
}

/// Sparse vector in a module with a fixed basis.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn sparse_add_scaled(acc: &mut SparseVec, v: &SparseVec, c: &Rational) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Rational::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

/// The g0-module `F(p,q;r;y)`: bigraded component `(p,q)` of the model
/// tensored with the `(r+1)`-dimensional sl(2)-module, `Y` acting by `y`.
#[derive(Debug)]
pub struct IrrepF {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub y: Rational,
    model_basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// `sl3_action[i][j][b]`: image of model basis vector `b` under `x_i∂_j`.
    sl3_action: Vec<Vec<Vec<Vec<(usize, Rational)>>>>,
}

impl IrrepF {
    pub fn new(p: u32, q: u32, r: u32, y: Rational) -> Self {
        let model_basis = bigraded_basis(p, q);
        let index: HashMap<Monomial, usize> =
            model_basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let sl3_action = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        model_basis
                            .iter()
                            .map(|m| {
                                let img = elementary_act(i, j, &Polynomial::term(MODEL_VARS, *m, int(1)));
                                model_reduce(&img)
                                    .0
                                    .terms()
                                    .map(|(mm, c)| (index[mm], c.clone()))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        IrrepF {
            p,
            q,
            r,
            y,
            model_basis,
            index,
            sl3_action,
        }
    }

    pub fn dim(&self) -> usize {
        self.model_basis.len() * (self.r as usize + 1)
    }

    pub fn model_dim(&self) -> usize {
        self.model_basis.len()
    }

    pub fn model_basis(&self) -> &[Monomial] {
        &self.model_basis
    }

    /// Basis index of `[m] ⊗ v_k`.
    pub fn basis_index(&self, m: &Monomial, k: u32) -> Option<usize> {
        if k > self.r {
            return None;
        }
        self.index.get(m).map(|&b| b * (self.r as usize + 1) + k as usize)
    }

    /// `(model monomial, sl(2) index)` of a basis vector.
    pub fn split_index(&self, idx: usize) -> (Monomial, u32) {
        let n = self.r as usize + 1;
        (self.model_basis[idx / n], (idx % n) as u32)
    }

    /// Index of the highest weight vector `[∂3^q x1^p] ⊗ v0`.
    pub fn hw_index(&self) -> usize {
        self.basis_index(&hw_monomial(self.p as u16, self.q as u16), 0)
            .expect("highest weight monomial is canonical")
    }

    pub fn weight_of(&self, idx: usize) -> Weight {
        let (m, k) = self.split_index(idx);
        let (a, b) = model_weight(&m);
        Weight::new(a, b, self.r as i64 - 2 * k as i64, self.y.clone())
    }

    /// Coordinates of a model element of the right bidegree.
    pub fn model_coords(&self, m: &ModelElement, k: u32) -> SparseVec {
        m.0.terms()
            .map(|(mm, c)| {
                (
                    self.basis_index(mm, k).expect("model element lies in this component"),
                    c.clone(),
                )
            })
            .collect()
    }

    /// Action of a g0 element on a basis vector.
    pub fn act_basis(&self, g: &G0Element, idx: usize) -> SparseVec {
        let n = self.r as usize + 1;
        let (b, k) = (idx / n, idx % n);
        let mut out = SparseVec::new();
        let mut add = |i: usize, c: Rational| {
            if c.is_zero() {
                return;
            }
            let e = out.entry(i).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                out.remove(&i);
            }
        };
        for i in 0..3 {
            for j in 0..3 {
                let c = &g.sl3[i][j];
                if c.is_zero() {
                    continue;
                }
                for (bb, v) in &self.sl3_action[i][j][b] {
                    add(bb * n + k, c * v);
                }
            }
        }
        let r = self.r as i64;
        let kk = k as i64;
        // h3 = x4∂4 - x5∂5, e3 = x4∂5, f3 = x5∂4 on v_0..v_r.
        add(idx, &g.sl2[0][0] * int(r - 2 * kk));
        if k > 0 {
            add(idx - 1, &g.sl2[0][1] * int(kk * (r - kk + 1)));
        }
        if kk < r {
            add(idx + 1, g.sl2[1][0].clone());
        }
        add(idx, &g.y * &self.y);
        out
    }

    pub fn act(&self, g: &G0Element, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v {
            sparse_add_scaled(&mut out, &self.act_basis(g, *i), c);
        }
        out
    }
}

/// Weyl dimension `(p+1)(q+1)(p+q+2)/2` of the sl(3)-irrep `(p,q)`.
pub fn weyl_dimension(p: u64, q: u64) -> u64 {
    (p + 1) * (q + 1) * (p + q + 2) / 2
}

/// A module over g0 in which highest weight vectors can be tested.
pub trait G0Module {
    type Vector;
    fn act_g0(&self, g: &G0Element, v: &Self::Vector) -> Self::Vector;
    fn is_zero_vec(&self, v: &Self::Vector) -> bool;
    /// `Some(λ)` when `a = λ b` (`b` nonzero).
    fn proportional(&self, a: &Self::Vector, b: &Self::Vector) -> Option<Rational>;
}

impl G0Module for IrrepF {
    type Vector = SparseVec;

    fn act_g0(&self, g: &G0Element, v: &SparseVec) -> SparseVec {
        self.act(g, v)
    }

    fn is_zero_vec(&self, v: &SparseVec) -> bool {
        v.is_empty()
    }

    fn proportional(&self, a: &SparseVec, b: &SparseVec) -> Option<Rational> {
        sparse_proportional(a, b)
    }
}

pub fn sparse_proportional<K: Ord + Clone>(
    a: &BTreeMap<K, Rational>,
    b: &BTreeMap<K, Rational>,
) -> Option<Rational> {
    let (k, c) = b.iter().next()?;
    let lambda = a.get(k).cloned().unwrap_or_else(Rational::zero) / c;
    let ok = a.len() <= b.len()
        && b.iter().all(|(k, c)| a.get(k).cloned().unwrap_or_else(Rational::zero) == c * &lambda)
        && a.keys().all(|k| b.contains_key(k));
    ok.then_some(lambda)
}

/// g0 elements used by highest weight tests: raising operators and Cartan.
pub fn g0_generator(name: &str) -> G0Element {
    g0_decompose(&crate::e36::named(name)).expect("named g0 element")
}

/// True iff `e1 v = e2 v = e3 v = 0` and `v` is a nonzero eigenvector of
/// `h1, h2, h3, Y`.
pub fn hwv_test<M: G0Module>(module: &M, v: &M::Vector) -> bool {
    if module.is_zero_vec(v) {
        return false;
    }
    for e in ["e1", "e2", "e3"] {
        if !module.is_zero_vec(&module.act_g0(&g0_generator(e), v)) {
            return false;
        }
    }
    ["h1", "h2", "h3", "Y"].iter().all(|h| {
        let img = module.act_g0(&g0_generator(h), v);
        module.is_zero_vec(&img) || module.proportional(&img, v).is_some()
    })
}

pub fn build_irrep(p: u32, q: u32, r: u32, y: Rational) -> IrrepF {
    IrrepF::new(p, q, r, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e36::named;
    use crate::linalg;
    use crate::scalar::binomial;
    use proptest::prelude::*;

    fn mono(d: [u16; 3], xs: [u16; 3]) -> ModelElement {
        ModelElement(Polynomial::term(MODEL_VARS, model_monomial(d, xs), int(1)))
    }

    #[test]
    fn reduce_examples() {
        let lead = &model_d(0) * &model_x(0);
        let expected = (&(&model_d(1) * &model_x(1)) + &(&model_d(2) * &model_x(2))).scale(&int(-1));
        assert_eq!(model_reduce(&lead).poly(), &expected);
        assert_eq!(model_reduce(&model_x(0)), mono([0, 0, 0], [1, 0, 0]));
        assert!(model_reduce(&(&model_x(1) * &relation_p())).is_zero());
        // Ideal-membership oracle: p - reduce(p) is a multiple of P.
        let p = &(&(&model_d(0) * &model_d(0)) * &model_x(0)) * &model_x(0);
        let diff = &p - model_reduce(&p).poly();
        let quotient = &(&model_d(0) * &model_x(0)) - &(&(&model_d(1) * &model_x(1)) + &(&model_d(2) * &model_x(2)));
        assert_eq!(diff, &quotient * &relation_p());
    }

    #[test]
    fn act_examples() {
        let e1 = named("e1");
        assert_eq!(model_act(&e1, &mono([0, 0, 0], [0, 1, 0])).unwrap(), mono([0, 0, 0], [1, 0, 0]));
        assert_eq!(
            model_act(&e1, &mono([1, 0, 0], [0, 0, 0])).unwrap(),
            mono([0, 1, 0], [0, 0, 0]).scale(&int(-1))
        );
        for (p, q) in [(0, 0), (2, 1), (3, 3)] {
            assert!(model_act(&e1, &mono([0, 0, q], [p, 0, 0])).unwrap().is_zero());
        }
        assert!(model_act(&named("Y"), &ModelElement::one()).is_err());
    }

    #[test]
    fn relation_is_invariant() {
        for name in ["e1", "e2", "f1", "f2", "h1", "h2", "e12", "f12"] {
            let g = g0_generator(name);
            let img = model_act_g0(&g, &ModelElement(relation_p()));
            assert!(img.is_zero(), "{name}");
        }
    }

    #[test]
    fn irrep_dimensions() {
        assert_eq!(build_irrep(0, 0, 0, int(0)).dim(), 1);
        assert_eq!(build_irrep(1, 0, 0, int(0)).dim(), 3);
        assert_eq!(build_irrep(1, 1, 1, int(0)).dim(), 16);
        for m in 0..=4u64 {
            for n in 0..=4u64 {
                let count = binomial(m + 2, 2) * binomial(n + 2, 2) - binomial(m + 1, 2) * binomial(n + 1, 2);
                assert_eq!(count, weyl_dimension(m, n));
                assert_eq!(bigraded_basis(m as u32, n as u32).len() as u64, count);
            }
        }
    }

    #[test]
    fn highest_weight_vectors() {
        let f = build_irrep(2, 1, 1, int(1));
        let hw: SparseVec = [(f.hw_index(), int(1))].into_iter().collect();
        assert!(hwv_test(&f, &hw));
        assert_eq!(f.weight_of(f.hw_index()), Weight::new(2, 1, 1, int(1)));
        let f = build_irrep(1, 0, 0, int(0));
        let x2 = f.model_coords(&mono([0, 0, 0], [0, 1, 0]), 0);
        assert!(!hwv_test(&f, &x2));
    }

    #[test]
    fn multiplicity_one() {
        for m in 0..=3u32 {
            for n in 0..=3u32 {
                let f = build_irrep(m, n, 0, int(0));
                let dim = f.dim();
                let mut rows = Vec::new();
                for e in ["e1", "e2"] {
                    let g = g0_generator(e);
                    let mut block = vec![vec![Rational::zero(); dim]; dim];
                    for col in 0..dim {
                        for (row, c) in f.act_basis(&g, col) {
                            block[row][col] = c;
                        }
                    }
                    rows.extend(block);
                }
                let ker = linalg::kernel(&rows, dim);
                assert_eq!(ker.len(), 1, "({m},{n})");
                let nz: Vec<usize> = (0..dim).filter(|&i| !ker[0][i].is_zero()).collect();
                assert_eq!(nz, vec![f.hw_index()]);
            }
        }
    }

    #[test]
    fn sl2_factor_is_a_representation() {
        let f = build_irrep(0, 0, 3, int(0));
        let (e, ff, h) = (g0_generator("e3"), g0_generator("f3"), g0_generator("h3"));
        for i in 0..f.dim() {
            let v: SparseVec = [(i, int(1))].into_iter().collect();
            let mut lhs = f.act(&e, &f.act(&ff, &v));
            sparse_add_scaled(&mut lhs, &f.act(&ff, &f.act(&e, &v)), &int(-1));
            assert_eq!(lhs, f.act(&h, &v));
        }
    }

    fn sl3_names() -> Vec<&'static str> {
        vec!["e1", "e2", "e12", "f1", "f2", "f12", "h1", "h2"]
    }

    proptest! {
        #[test]
        fn action_respects_brackets(a in 0usize..8, b in 0usize..8, p in 0u32..4, q in 0u32..4, seed in 0usize..1000) {
            let names = sl3_names();
            let f = build_irrep(p, q, 0, int(0));
            let idx = seed % f.dim();
            let v: SparseVec = [(idx, int(1))].into_iter().collect();
            let (ga, gb) = (g0_generator(names[a]), g0_generator(names[b]));
            let gab = g0_decompose(&crate::e510::super_bracket(&named(names[a]), &named(names[b]))).unwrap();
            let mut lhs = f.act(&ga, &f.act(&gb, &v));
            sparse_add_scaled(&mut lhs, &f.act(&gb, &f.act(&ga, &v)), &int(-1));
            prop_assert_eq!(lhs, f.act(&gab, &v));
        }
    }
}
