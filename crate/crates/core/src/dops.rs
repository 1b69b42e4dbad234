//! Operators on `S ⊗ M`, where `S = C[∂̂1,∂̂2,∂̂3]` and `M` is the sl(3)
//! model: left multiplications by `∂̂_i` and by model elements, and the
//! sl(3) action on the tensor product (derivations on both factors).

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use thiserror::Error;

use crate::e36::G0Element;
use crate::g0rep::{g0_generator, hw_monomial, model_act_g0, model_weight, ModelElement};
use crate::linalg;
use crate::scalar::{binomial, format_monomial, int, monomials_of_degree, Monomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DopsError {
    #[error("the zero element has no highest term")]
    Zero,
    #[error("vector is not an sl(3) highest weight vector")]
    NotHighestWeight,
    #[error("no decomposition: the component of S-degree {0} is not a multiple of the expected D-monomial")]
    Singular(u32),
}

/// `Σ ∂̂^α ⊗ t_α` with `t_α` in the model.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SMElement {
    comps: BTreeMap<[u16; 3], ModelElement>,
}

impl SMElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `∂̂^α ⊗ t`.
    pub fn term(alpha: [u16; 3], t: ModelElement) -> Self {
        let mut s = Self::zero();
        s.add_component(alpha, &t);
        s
    }

    /// `1 ⊗ t`.
    pub fn from_model(t: ModelElement) -> Self {
        Self::term([0; 3], t)
    }

    pub fn components(&self) -> &BTreeMap<[u16; 3], ModelElement> {
        &self.comps
    }

    pub fn component(&self, alpha: [u16; 3]) -> ModelElement {
        self.comps.get(&alpha).cloned().unwrap_or_else(ModelElement::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add_component(&mut self, alpha: [u16; 3], t: &ModelElement) {
        if t.is_zero() {
            return;
        }
        let sum = self.component(alpha).add(t);
        if sum.is_zero() {
            self.comps.remove(&alpha);
        } else {
            self.comps.insert(alpha, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, t) in &other.comps {
            out.add_component(*a, t);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (a, t) in &self.comps {
            out.add_component(*a, &t.scale(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Components of S-degree `n`.
    pub fn s_degree_part(&self, n: u32) -> Self {
        let mut out = Self::zero();
        for (a, t) in &self.comps {
            if a.iter().map(|&x| x as u32).sum::<u32>() == n {
                out.add_component(*a, t);
            }
        }
        out
    }

    pub fn s_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.comps.keys().map(|a| a.iter().map(|&x| x as u32).sum()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl fmt::Display for SMElement {
    /// `dh1*dh3^2[x1] + [dp3]`, one summand per ∂̂-exponent, highest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .rev()
            .map(|(a, t)| {
                let hats = format_monomial(&Monomial::from_slice(a), &["dh1", "dh2", "dh3"]);
                format!("{hats}{t}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Product `∂̂^α` of hats.
fn alpha_add(a: [u16; 3], i: usize) -> [u16; 3] {
    let mut b = a;
    b[i] += 1;
    b
}

pub fn hat_mul(i: usize, v: &SMElement) -> SMElement {
    let mut out = SMElement::zero();
    for (a, t) in &v.comps {
        out.add_component(alpha_add(*a, i), t);
    }
    out
}

pub fn model_mul(m: &ModelElement, v: &SMElement) -> SMElement {
    let mut out = SMElement::zero();
    for (a, t) in &v.comps {
        out.add_component(*a, &m.mul(t));
    }
    out
}

/// Action of an sl(3) element on `S ⊗ M`, plus `shift` times the identity.
/// `x_i∂_j` sends `∂̂_k` to `-δ_ik ∂̂_j`.
pub fn sl3_act(g: &G0Element, shift: &Rational, v: &SMElement) -> SMElement {
    let mut out = SMElement::zero();
    for (a, t) in &v.comps {
        out.add_component(*a, &model_act_g0(g, t));
        if !shift.is_zero() {
            out.add_component(*a, &t.scale(shift));
        }
        for i in 0..3 {
            if a[i] == 0 {
                continue;
            }
            for j in 0..3 {
                let c = &g.sl3[i][j];
                if c.is_zero() {
                    continue;
                }
                let mut b = *a;
                b[i] -= 1;
                b[j] += 1;
                out.add_component(b, &t.scale(&(c * int(-(a[i] as i64)))));
            }
        }
    }
    out
}

/// Primitive operator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Op {
    Hat(usize),
    Model(ModelElement),
    /// `g + c` for an sl(3) element `g`.
    Sl3(G0Element, Rational),
}

impl Op {
    pub fn apply(&self, v: &SMElement) -> SMElement {
        match self {
            Op::Hat(i) => hat_mul(*i, v),
            Op::Model(m) => model_mul(m, v),
            Op::Sl3(g, c) => sl3_act(g, c, v),
        }
    }
}

/// Linear combination of compositions of primitive operators; each
/// composition is applied right to left.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OperatorWord {
    pub terms: Vec<(Rational, Vec<Op>)>,
}

impl OperatorWord {
    pub fn identity() -> Self {
        OperatorWord {
            terms: vec![(Rational::one(), vec![])],
        }
    }

    pub fn op(op: Op) -> Self {
        OperatorWord {
            terms: vec![(Rational::one(), vec![op])],
        }
    }

    pub fn hat(i: usize) -> Self {
        Self::op(Op::Hat(i))
    }

    /// sl(3) element by name, shifted by `c`.
    pub fn sl3(name: &str, c: Rational) -> Self {
        Self::op(Op::Sl3(g0_generator(name), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        OperatorWord { terms: t }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        OperatorWord {
            terms: self.terms.iter().map(|(k, w)| (k * c, w.clone())).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                let mut w = wa.clone();
                w.extend(wb.iter().cloned());
                terms.push((a * b, w));
            }
        }
        OperatorWord { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn apply(&self, v: &SMElement) -> SMElement {
        let mut out = SMElement::zero();
        for (c, word) in &self.terms {
            let mut x = v.clone();
            for op in word.iter().rev() {
                x = op.apply(&x);
                if x.is_zero() {
                    break;
                }
            }
            out = out.add(&x.scale(c));
        }
        out
    }
}

/// The sl(3) element `h1 + h2` (so that `h = h1 + h2 + 1`).
fn h_sum() -> G0Element {
    let mut g = g0_generator("h1");
    let h2 = g0_generator("h2");
    for i in 0..3 {
        for j in 0..3 {
            g.sl3[i][j] = &g.sl3[i][j] + &h2.sl3[i][j];
        }
    }
    g
}

/// `h - m = h1 + h2 + 1 - m`.
pub fn h_shifted(m: i64) -> OperatorWord {
    OperatorWord::op(Op::Sl3(h_sum(), int(1 - m)))
}

/// `A = ∂̂1 h1 + ∂̂2 f1`.
pub fn op_a() -> OperatorWord {
    OperatorWord::hat(0)
        .compose(&OperatorWord::sl3("h1", int(0)))
        .add(&OperatorWord::hat(1).compose(&OperatorWord::sl3("f1", int(0))))
}

/// `B = f12 h1 + f2 f1`.
pub fn op_b() -> OperatorWord {
    OperatorWord::sl3("f12", int(0))
        .compose(&OperatorWord::sl3("h1", int(0)))
        .add(&OperatorWord::sl3("f2", int(0)).compose(&OperatorWord::sl3("f1", int(0))))
}

/// `D1 = A h + ∂̂3 B`, `D2 = ∂̂2 h2 + ∂̂3 f2`, `D3 = ∂̂3`.
pub fn d_op(i: usize) -> OperatorWord {
    match i {
        1 => op_a().compose(&h_shifted(0)).add(&OperatorWord::hat(2).compose(&op_b())),
        2 => d2_shifted(0),
        3 => OperatorWord::hat(2),
        _ => panic!("D-operator index must be 1, 2 or 3"),
    }
}

/// `D2{+m} = ∂̂2 (h2 + m) + ∂̂3 f2`.
pub fn d2_shifted(m: i64) -> OperatorWord {
    OperatorWord::hat(1)
        .compose(&OperatorWord::sl3("h2", int(m)))
        .add(&OperatorWord::hat(2).compose(&OperatorWord::sl3("f2", int(0))))
}

/// The displayed variant `∂̂1 h1 h + ∂̂2 f12 h + ∂̂3 (f3 h1 + f2 f1)`. The
/// sl(2) element `f3` acts by zero on `S ⊗ M`, so its term drops out.
pub fn d1_displayed_variant() -> OperatorWord {
    let h = h_shifted(0);
    OperatorWord::hat(0)
        .compose(&OperatorWord::sl3("h1", int(0)))
        .compose(&h)
        .add(&OperatorWord::hat(1).compose(&OperatorWord::sl3("f12", int(0))).compose(&h))
        .add(
            &OperatorWord::hat(2)
                .compose(&OperatorWord::sl3("f2", int(0)))
                .compose(&OperatorWord::sl3("f1", int(0))),
        )
}

/// `D̄1 = ∂̂1[x1] + ∂̂2[x2] + ∂̂3[x3]`, `D̄2 = ∂̂2[∂3] - ∂̂3[∂2]`, `D̄3 = ∂̂3`,
/// as elements of `S ⊗ M`.
pub fn dbar(i: usize) -> SMElement {
    let mono = |d: [u16; 3], x: [u16; 3]| {
        ModelElement::from_monomial(crate::g0rep::model_monomial(d, x))
    };
    match i {
        1 => SMElement::term([1, 0, 0], mono([0; 3], [1, 0, 0]))
            .add(&SMElement::term([0, 1, 0], mono([0; 3], [0, 1, 0])))
            .add(&SMElement::term([0, 0, 1], mono([0; 3], [0, 0, 1]))),
        2 => SMElement::term([0, 1, 0], mono([0, 0, 1], [0; 3]))
            .sub(&SMElement::term([0, 0, 1], mono([0, 1, 0], [0; 3]))),
        3 => SMElement::term([0, 0, 1], ModelElement::one()),
        _ => panic!("index must be 1, 2 or 3"),
    }
}

/// Product in the commutative algebra `S ⊗ M`.
pub fn sm_mul(a: &SMElement, b: &SMElement) -> SMElement {
    let mut out = SMElement::zero();
    for (x, s) in &a.comps {
        for (y, t) in &b.comps {
            out.add_component([x[0] + y[0], x[1] + y[1], x[2] + y[2]], &s.mul(t));
        }
    }
    out
}

/// Left multiplication by `D̄_i`.
pub fn dbar_apply(i: usize, v: &SMElement) -> SMElement {
    sm_mul(&dbar(i), v)
}

/// `D_i v`.
pub fn d_apply(i: usize, v: &SMElement) -> SMElement {
    d_op(i).apply(v)
}

/// `D^α v = D1^{α1} D2^{α2} D3^{α3} v`.
pub fn d_alpha_apply(alpha: [u16; 3], v: &SMElement) -> SMElement {
    let mut x = v.clone();
    for _ in 0..alpha[2] {
        x = d_apply(3, &x);
    }
    for _ in 0..alpha[1] {
        x = d_apply(2, &x);
    }
    for _ in 0..alpha[0] {
        x = d_apply(1, &x);
    }
    x
}

/// `D̄^α v`.
pub fn dbar_alpha_apply(alpha: [u16; 3], v: &SMElement) -> SMElement {
    let mut x = v.clone();
    for (i, &a) in alpha.iter().enumerate() {
        for _ in 0..a {
            x = dbar_apply(i + 1, &x);
        }
    }
    x
}

/// Lexicographically highest term, `α1` most significant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LhtResult {
    pub sigma: [u16; 3],
    pub leading: ModelElement,
}

pub fn lht(v: &SMElement) -> Result<LhtResult, DopsError> {
    let (sigma, leading) = v.comps.last_key_value().ok_or(DopsError::Zero)?;
    Ok(LhtResult {
        sigma: *sigma,
        leading: leading.clone(),
    })
}

/// Which operator [`dpow_expand`] expands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PowerOf {
    D1,
    D2,
    A,
}

/// `D^k = Σ_m C(k,m) ∂^m b^m a^{k-m} (h-m)^{[k-m]}` for `D = a h + ∂ b`,
/// with `(a, b, ∂, h)` equal to `(A, B, ∂̂3, h)` for `D1`,
/// `(∂̂2, f2, ∂̂3, h2)` for `D2` and `(∂̂1, f1, ∂̂2, h1)` for `A`.
pub fn dpow_expand(k: u32, which: PowerOf) -> OperatorWord {
    let (a, b, d, h): (OperatorWord, OperatorWord, OperatorWord, Box<dyn Fn(i64) -> OperatorWord>) = match which {
        PowerOf::D1 => (op_a(), op_b(), OperatorWord::hat(2), Box::new(h_shifted)),
        PowerOf::D2 => (
            OperatorWord::hat(1),
            OperatorWord::sl3("f2", int(0)),
            OperatorWord::hat(2),
            Box::new(|m| OperatorWord::sl3("h2", int(-m))),
        ),
        PowerOf::A => (
            OperatorWord::hat(0),
            OperatorWord::sl3("f1", int(0)),
            OperatorWord::hat(1),
            Box::new(|m| OperatorWord::sl3("h1", int(-m))),
        ),
    };
    let mut out = OperatorWord::default();
    for m in 0..=k {
        let falling = (0..(k - m)).fold(OperatorWord::identity(), |acc, t| acc.compose(&h(m as i64 + t as i64)));
        let term = d
            .pow(m)
            .compose(&b.pow(m))
            .compose(&a.pow(k - m))
            .compose(&falling)
            .scale(&int(binomial(k as u64, m as u64) as i64));
        out = out.add(&term);
    }
    out
}

/// sl(3) weight of `∂̂^α ⊗ m`.
pub fn sm_weight(alpha: [u16; 3], m: &Monomial) -> (i64, i64) {
    let (a, b) = model_weight(m);
    let w = |i: usize| -(alpha[i] as i64);
    (a + w(0) - w(1), b + w(1) - w(2))
}

/// The common weight of all terms, if `v` is a weight vector.
pub fn sm_weight_of(v: &SMElement) -> Option<(i64, i64)> {
    let mut ws = v
        .comps
        .iter()
        .flat_map(|(a, t)| t.poly().terms().map(move |(m, _)| sm_weight(*a, m)));
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}

/// Highest weight test for the sl(3) action on `S ⊗ M`.
pub fn is_sl3_hwv(v: &SMElement) -> bool {
    !v.is_zero()
        && sm_weight_of(v).is_some()
        && ["e1", "e2"]
            .iter()
            .all(|e| sl3_act(&g0_generator(e), &Rational::zero(), v).is_zero())
}

fn proportion(a: &SMElement, b: &SMElement) -> Option<Rational> {
    // a = λ b
    let (alpha, t) = b.comps.iter().next()?;
    let (m, c) = t.poly().terms().next()?;
    let lambda = a.component(*alpha).poly().coeff(m) / c;
    (a == &b.scale(&lambda)).then_some(lambda)
}

/// Coefficients `c_α` with `w = Σ c_α D^α m0`, where `m0 = [∂3^q x1^p]`.
///
/// Weight and S-degree fix `α` on each S-degree component, so each
/// component is compared with a single `D^α m0`.
pub fn hwv_decompose(w: &SMElement, p: u32, q: u32) -> Result<BTreeMap<[u16; 3], Rational>, DopsError> {
    if !is_sl3_hwv(w) {
        return Err(DopsError::NotHighestWeight);
    }
    let (a, b) = sm_weight_of(w).expect("checked above");
    let m0 = SMElement::from_model(ModelElement::from_monomial(hw_monomial(p as u16, q as u16)));
    let mut out = BTreeMap::new();
    for n in w.s_degrees() {
        let part = w.s_degree_part(n);
        // α2 - α1 = a - p, α3 - α2 = b - q, α1 + α2 + α3 = n.
        let (da, db) = (a - p as i64, b - q as i64);
        let three_a1 = n as i64 - 2 * da - db;
        if three_a1 < 0 || three_a1 % 3 != 0 {
            return Err(DopsError::Singular(n));
        }
        let a1 = three_a1 / 3;
        let a2 = a1 + da;
        let a3 = a2 + db;
        if a2 < 0 || a3 < 0 {
            return Err(DopsError::Singular(n));
        }
        let alpha = [a1 as u16, a2 as u16, a3 as u16];
        let image = d_alpha_apply(alpha, &m0);
        let c = proportion(&part, &image).ok_or(DopsError::Singular(n))?;
        out.insert(alpha, c);
    }
    Ok(out)
}

/// `Σ c_α D^α m0`.
pub fn hwv_reconstruct(coeffs: &BTreeMap<[u16; 3], Rational>, p: u32, q: u32) -> SMElement {
    let m0 = SMElement::from_model(ModelElement::from_monomial(hw_monomial(p as u16, q as u16)));
    coeffs
        .iter()
        .fold(SMElement::zero(), |acc, (a, c)| acc.add(&d_alpha_apply(*a, &m0).scale(c)))
}

/// Basis of `S^{≤ smax} ⊗ F(p,q)` by monomials.
pub fn sm_basis(p: u32, q: u32, smax: u32) -> Vec<SMElement> {
    let mut out = Vec::new();
    for n in 0..=smax {
        for a in monomials_of_degree(3, n) {
            for m in crate::g0rep::bigraded_basis(p, q) {
                out.push(SMElement::term([a.0[0], a.0[1], a.0[2]], ModelElement::from_monomial(m)));
            }
        }
    }
    out
}

/// Dimension of the sl(3)-highest weight space of `S^n ⊗ F(p,q)` at a
/// weight, by exact kernel computation.
pub fn hwv_space(p: u32, q: u32, n: u32, weight: (i64, i64)) -> Vec<SMElement> {
    let basis: Vec<SMElement> = sm_basis(p, q, n)
        .into_iter()
        .filter(|v| v.s_degrees() == vec![n] && sm_weight_of(v) == Some(weight))
        .collect();
    if basis.is_empty() {
        return vec![];
    }
    let mut keys: BTreeMap<([u16; 3], Monomial, usize), usize> = BTreeMap::new();
    let images: Vec<Vec<SMElement>> = basis
        .iter()
        .map(|v| {
            ["e1", "e2"]
                .iter()
                .map(|e| sl3_act(&g0_generator(e), &Rational::zero(), v))
                .collect()
        })
        .collect();
    for img in &images {
        for (k, x) in img.iter().enumerate() {
            for (a, t) in &x.comps {
                for (m, _) in t.poly().terms() {
                    let len = keys.len();
                    keys.entry((*a, *m, k)).or_insert(len);
                }
            }
        }
    }
    let mut rows = vec![vec![Rational::zero(); basis.len()]; keys.len()];
    for (col, img) in images.iter().enumerate() {
        for (k, x) in img.iter().enumerate() {
            for (a, t) in &x.comps {
                for (m, c) in t.poly().terms() {
                    rows[keys[&(*a, *m, k)]][col] = c.clone();
                }
            }
        }
    }
    let ker = if rows.is_empty() {
        (0..basis.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); basis.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&rows, basis.len())
    };
    ker.iter()
        .map(|v| {
            basis
                .iter()
                .zip(v)
                .fold(SMElement::zero(), |acc, (b, c)| acc.add(&b.scale(c)))
        })
        .collect()
}
