//! Generalized Verma modules `M(F) = U(L_-) ⊗ F` over E(3,6).
//!
//! `U(L_-)` has the PBW basis `∂̂^α d^-_I d^+_J` (order `(-+)`) or
//! `∂̂^α d^+_J d^-_I` (order `(+-)`), where `∂̂_i` is `∂_i ∈ g_{-2}` and
//! `d^±_i ∈ g_{-1}`. The hatted elements are central in `U(L_-)`; odd
//! generators anticommute inside each group, and across groups
//! `d^+_j d^-_i = -d^-_i d^+_j + [d^+_j, d^-_i]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use num::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::e36::{e36_membership, g0_decompose, g0_weight, G0Element, Weight};
use crate::e510::{super_bracket, BasisKey, Grading, SuperElement};
use crate::g0rep::{hwv_test, sparse_proportional, G0Module, IrrepF};
use crate::linalg;
use crate::scalar::{int, rat, Rational, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InducedError {
    #[error("element does not lie in E(3,6)")]
    NotInE36,
    #[error("projection requires an element in (-+) order")]
    WrongOrder,
}

/// Which odd group comes first in a PBW monomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Order {
    /// `S Λ^- Λ^+ V`
    MinusPlus,
    /// `S Λ^+ Λ^- V`
    PlusMinus,
}

/// Generator of `L_-` (0-based index).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    Hat(usize),
    Minus(usize),
    Plus(usize),
}

impl Gen {
    pub fn element(&self) -> SuperElement {
        match *self {
            Gen::Hat(i) => SuperElement::partial(i),
            Gen::Minus(i) => SuperElement::dform(i as u8, 4),
            Gen::Plus(i) => SuperElement::dform(i as u8, 3),
        }
    }

    pub fn is_odd(&self) -> bool {
        !matches!(self, Gen::Hat(_))
    }

    pub fn weight(&self) -> Weight {
        g0_weight(&self.element()).expect("generators are weight vectors")
    }
}

/// `∂̂^α d^-_I d^+_J` with `I`, `J` stored as bit masks; the group order
/// belongs to the enclosing [`InducedElement`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PBWMonomial {
    pub alpha: [u8; 3],
    pub minus: u8,
    pub plus: u8,
}

fn bits(mask: u8) -> impl Iterator<Item = usize> {
    (0..3).filter(move |i| mask & (1 << i) != 0)
}

impl PBWMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(alpha: [u8; 3], minus: &[usize], plus: &[usize]) -> Self {
        let mask = |s: &[usize]| s.iter().fold(0u8, |m, &i| m | (1 << i));
        PBWMonomial {
            alpha,
            minus: mask(minus),
            plus: mask(plus),
        }
    }

    pub fn hat_degree(&self) -> u32 {
        self.alpha.iter().map(|&a| a as u32).sum()
    }

    pub fn minus_len(&self) -> u32 {
        self.minus.count_ones()
    }

    pub fn plus_len(&self) -> u32 {
        self.plus.count_ones()
    }

    /// `2|α| + |I| + |J|`, minus the consistent degree.
    pub fn depth(&self) -> u32 {
        2 * self.hat_degree() + self.minus_len() + self.plus_len()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn minus_indices(&self) -> Vec<usize> {
        bits(self.minus).collect()
    }

    pub fn plus_indices(&self) -> Vec<usize> {
        bits(self.plus).collect()
    }

    /// The generators of the word, left to right, for the given order.
    pub fn word(&self, order: Order) -> Vec<Gen> {
        let mut w = Vec::new();
        for (i, &a) in self.alpha.iter().enumerate() {
            w.extend(std::iter::repeat_n(Gen::Hat(i), a as usize));
        }
        let minus = bits(self.minus).map(Gen::Minus);
        let plus = bits(self.plus).map(Gen::Plus);
        match order {
            Order::MinusPlus => w.extend(minus.chain(plus)),
            Order::PlusMinus => w.extend(plus.chain(minus)),
        }
        w
    }

    pub fn weight(&self) -> Weight {
        self.word(Order::MinusPlus)
            .iter()
            .fold(Weight::new(0, 0, 0, Rational::zero()), |acc, g| acc.add(&g.weight()))
    }

    /// All monomials of the given depth, sorted.
    pub fn of_depth(depth: u32) -> Vec<PBWMonomial> {
        let mut out = Vec::new();
        for minus in 0u8..8 {
            for plus in 0u8..8 {
                let odd = minus.count_ones() + plus.count_ones();
                if odd > depth || !(depth - odd).is_multiple_of(2) {
                    continue;
                }
                let k = (depth - odd) / 2;
                for a0 in 0..=k {
                    for a1 in 0..=(k - a0) {
                        out.push(PBWMonomial {
                            alpha: [a0 as u8, a1 as u8, (k - a0 - a1) as u8],
                            minus,
                            plus,
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }
}

pub type Terms = BTreeMap<(PBWMonomial, usize), Rational>;

fn add_into(acc: &mut Terms, key: (PBWMonomial, usize), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

fn add_scaled(acc: &mut Terms, t: &Terms, c: &Rational) {
    for (k, v) in t {
        add_into(acc, *k, v * c);
    }
}

/// Finite linear combination of `monomial ⊗ v_k` in a fixed PBW order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InducedElement {
    pub order: Order,
    terms: Terms,
}

impl InducedElement {
    pub fn zero(order: Order) -> Self {
        InducedElement {
            order,
            terms: Terms::new(),
        }
    }

    pub fn basis(order: Order, mono: PBWMonomial, fidx: usize) -> Self {
        Self::from_terms(order, [((mono, fidx), Rational::one())].into_iter().collect())
    }

    pub fn from_terms(order: Order, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        InducedElement { order, terms }
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "adding elements in different orders");
        let mut t = self.terms.clone();
        add_scaled(&mut t, &other.terms, &Rational::one());
        InducedElement { order: self.order, terms: t }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut t = Terms::new();
        add_scaled(&mut t, &self.terms, c);
        InducedElement { order: self.order, terms: t }
    }

    /// Depths of the monomials that occur.
    pub fn depths(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(|(m, _)| m.depth()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

/// Cached facts about an element acting on the induced module.
#[derive(Debug)]
struct Actor {
    element: SuperElement,
    degree: i64,
    odd: bool,
    /// Expansion in generators when the degree is negative.
    negative: Vec<(Gen, Rational)>,
    g0: Option<G0Element>,
}

#[derive(Default, Debug)]
struct Interner {
    actors: Vec<Arc<Actor>>,
    ids: HashMap<SuperElement, usize>,
}

type ActKey = (usize, PBWMonomial, usize, Order);

/// `M(F)` for a fixed g0-module `F`, with caches for brackets and actions.
#[derive(Debug)]
pub struct InducedModule {
    f: Arc<IrrepF>,
    gen_bracket: HashMap<(Gen, Gen), Option<(usize, Rational)>>,
    gen_weights: HashMap<Gen, Weight>,
    interner: RwLock<Interner>,
    bracket_cache: Mutex<HashMap<(usize, Gen), Option<usize>>>,
    act_cache: Mutex<HashMap<ActKey, Arc<Terms>>>,
}

const ALL_GENS: [Gen; 9] = [
    Gen::Hat(0),
    Gen::Hat(1),
    Gen::Hat(2),
    Gen::Minus(0),
    Gen::Minus(1),
    Gen::Minus(2),
    Gen::Plus(0),
    Gen::Plus(1),
    Gen::Plus(2),
];

fn hat_expansion(e: &SuperElement) -> Option<(usize, Rational)> {
    let coords = e.coordinates();
    if coords.is_empty() {
        return None;
    }
    assert_eq!(coords.len(), 1, "bracket of two odd generators is a single ∂");
    match coords.iter().next() {
        Some((BasisKey::Field(m, k), c)) if m.degree() == 0 => Some((*k as usize, c.clone())),
        other => panic!("unexpected bracket of odd generators: {other:?}"),
    }
}

impl InducedModule {
    pub fn new(f: IrrepF) -> Self {
        Self::with_shared(Arc::new(f))
    }

    pub fn with_shared(f: Arc<IrrepF>) -> Self {
        let mut gen_bracket = HashMap::new();
        for a in ALL_GENS.iter().filter(|g| g.is_odd()) {
            for b in ALL_GENS.iter().filter(|g| g.is_odd()) {
                gen_bracket.insert((*a, *b), hat_expansion(&super_bracket(&a.element(), &b.element())));
            }
        }
        let gen_weights = ALL_GENS.iter().map(|g| (*g, g.weight())).collect();
        InducedModule {
            f,
            gen_bracket,
            gen_weights,
            interner: RwLock::new(Interner::default()),
            bracket_cache: Mutex::new(HashMap::new()),
            act_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn irrep(&self) -> &IrrepF {
        &self.f
    }

    pub fn shared_irrep(&self) -> Arc<IrrepF> {
        self.f.clone()
    }

    /// Weight of `monomial ⊗ v_k`.
    pub fn weight_of(&self, mono: &PBWMonomial, fidx: usize) -> Weight {
        mono.word(Order::MinusPlus)
            .iter()
            .fold(self.f.weight_of(fidx), |acc, g| acc.add(&self.gen_weights[g]))
    }

    fn intern(&self, e: &SuperElement) -> usize {
        if let Some(&id) = self.interner.read().expect("lock").ids.get(e) {
            return id;
        }
        let degree = e.degree(Grading::Consistent).expect("actors are homogeneous");
        let odd = degree.rem_euclid(2) == 1;
        let mut negative = Vec::new();
        let mut g0 = None;
        match degree {
            -2 | -1 => {
                for (k, c) in e.coordinates() {
                    let g = match k {
                        BasisKey::Field(_, i) => Gen::Hat(i as usize),
                        BasisKey::Form(_, fm) => {
                            let idx = fm.indices();
                            if idx[1] == 3 {
                                Gen::Plus(idx[0] as usize)
                            } else {
                                Gen::Minus(idx[0] as usize)
                            }
                        }
                    };
                    negative.push((g, c));
                }
            }
            0 => g0 = Some(g0_decompose(e).expect("degree-zero element of E(3,6) lies in g0")),
            _ => {}
        }
        let actor = Arc::new(Actor {
            element: e.clone(),
            degree,
            odd,
            negative,
            g0,
        });
        let mut w = self.interner.write().expect("lock");
        if let Some(&id) = w.ids.get(e) {
            return id;
        }
        let id = w.actors.len();
        w.actors.push(actor);
        w.ids.insert(e.clone(), id);
        id
    }

    fn actor(&self, id: usize) -> Arc<Actor> {
        self.interner.read().expect("lock").actors[id].clone()
    }

    fn bracket_id(&self, a: usize, g: Gen) -> Option<usize> {
        if let Some(r) = self.bracket_cache.lock().expect("lock").get(&(a, g)) {
            return *r;
        }
        let b = super_bracket(&self.actor(a).element, &g.element());
        let r = (!b.is_zero()).then(|| self.intern(&b));
        self.bracket_cache.lock().expect("lock").insert((a, g), r);
        r
    }

    /// Left multiplication of a normally ordered monomial by a generator.
    pub fn lmul_monomial(&self, g: Gen, mono: PBWMonomial, order: Order) -> Vec<(PBWMonomial, Rational)> {
        let insert = |mask: u8, i: usize| -> Option<(u8, Rational)> {
            if mask & (1 << i) != 0 {
                return None;
            }
            let before = (mask & ((1u8 << i) - 1)).count_ones();
            let sign = if before.is_multiple_of(2) { int(1) } else { int(-1) };
            Some((mask | (1 << i), sign))
        };
        let first_is_minus = order == Order::MinusPlus;
        match g {
            Gen::Hat(i) => {
                let mut m = mono;
                m.alpha[i] += 1;
                vec![(m, Rational::one())]
            }
            Gen::Minus(i) if first_is_minus || mono.plus == 0 => match insert(mono.minus, i) {
                Some((mask, s)) => vec![(PBWMonomial { minus: mask, ..mono }, s)],
                None => vec![],
            },
            Gen::Plus(i) if !first_is_minus || mono.minus == 0 => match insert(mono.plus, i) {
                Some((mask, s)) => vec![(PBWMonomial { plus: mask, ..mono }, s)],
                None => vec![],
            },
            _ => {
                // g belongs to the second group and the first group is nonempty:
                // g u R = -u (g R) + [g, u] R with u the first generator of the
                // first group.
                let (u, rest) = if first_is_minus {
                    let i = mono.minus.trailing_zeros() as usize;
                    (Gen::Minus(i), PBWMonomial { minus: mono.minus & !(1 << i), ..mono })
                } else {
                    let i = mono.plus.trailing_zeros() as usize;
                    (Gen::Plus(i), PBWMonomial { plus: mono.plus & !(1 << i), ..mono })
                };
                let mut acc: BTreeMap<PBWMonomial, Rational> = BTreeMap::new();
                for (m1, c1) in self.lmul_monomial(g, rest, order) {
                    for (m2, c2) in self.lmul_monomial(u, m1, order) {
                        *acc.entry(m2).or_insert_with(Rational::zero) -= &c1 * &c2;
                    }
                }
                if let Some((k, c)) = &self.gen_bracket[&(g, u)] {
                    let mut m = rest;
                    m.alpha[*k] += 1;
                    *acc.entry(m).or_insert_with(Rational::zero) += c;
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
            }
        }
    }

    fn lmul_terms(&self, g: Gen, t: &Terms, order: Order) -> Terms {
        let mut out = Terms::new();
        for ((m, f), c) in t {
            for (mm, cc) in self.lmul_monomial(g, *m, order) {
                add_into(&mut out, (mm, *f), c * cc);
            }
        }
        out
    }

    /// Left multiplication by a generator of `L_-`.
    pub fn lmul(&self, g: Gen, w: &InducedElement) -> InducedElement {
        InducedElement::from_terms(w.order, self.lmul_terms(g, &w.terms, w.order))
    }

    fn act_basis(&self, a: usize, mono: PBWMonomial, fidx: usize, order: Order) -> Arc<Terms> {
        let key = (a, mono, fidx, order);
        if let Some(t) = self.act_cache.lock().expect("lock").get(&key) {
            return t.clone();
        }
        let actor = self.actor(a);
        let mut out = Terms::new();
        if actor.degree < 0 {
            for (g, c) in &actor.negative {
                for (m, cc) in self.lmul_monomial(*g, mono, order) {
                    add_into(&mut out, (m, fidx), c * cc);
                }
            }
        } else if mono.is_one() {
            if let Some(g0) = &actor.g0 {
                for (i, c) in self.f.act_basis(g0, fidx) {
                    add_into(&mut out, (mono, i), c);
                }
            }
        } else {
            // a (u R) = [a, u] R + (-1)^{|a||u|} u (a R)
            let u = mono.word(order)[0];
            let rest = match u {
                Gen::Hat(i) => {
                    let mut r = mono;
                    r.alpha[i] -= 1;
                    r
                }
                Gen::Minus(i) => PBWMonomial { minus: mono.minus & !(1 << i), ..mono },
                Gen::Plus(i) => PBWMonomial { plus: mono.plus & !(1 << i), ..mono },
            };
            if let Some(b) = self.bracket_id(a, u) {
                add_scaled(&mut out, &self.act_basis(b, rest, fidx, order), &Rational::one());
            }
            let inner = self.act_basis(a, rest, fidx, order);
            let sign = if actor.odd && u.is_odd() { int(-1) } else { int(1) };
            add_scaled(&mut out, &self.lmul_terms(u, &inner, order), &sign);
        }
        let out = Arc::new(out);
        self.act_cache.lock().expect("lock").insert(key, out.clone());
        out
    }

    /// Action of an element of E(3,6); inhomogeneous elements are split into
    /// homogeneous components first.
    pub fn act(&self, a: &SuperElement, w: &InducedElement) -> Result<InducedElement, InducedError> {
        if !e36_membership(a) {
            return Err(InducedError::NotInE36);
        }
        Ok(self.act_unchecked(a, w))
    }

    fn act_unchecked(&self, a: &SuperElement, w: &InducedElement) -> InducedElement {
        let mut out = Terms::new();
        for part in a.homogeneous_components(Grading::Consistent).values() {
            if part.is_zero() {
                continue;
            }
            let id = self.intern(part);
            for ((m, f), c) in &w.terms {
                add_scaled(&mut out, &self.act_basis(id, *m, *f, w.order), c);
            }
        }
        InducedElement::from_terms(w.order, out)
    }

    /// Action of a basis vector, shared by the search routines.
    pub fn act_on_basis(&self, a: &SuperElement, mono: PBWMonomial, fidx: usize, order: Order) -> Arc<Terms> {
        let id = self.intern(a);
        self.act_basis(id, mono, fidx, order)
    }

    /// Re-expresses `w` in the target order.
    pub fn reorder(&self, w: &InducedElement, target: Order) -> InducedElement {
        if w.order == target {
            return w.clone();
        }
        let mut out = Terms::new();
        for ((m, f), c) in &w.terms {
            let mut t: Terms = [((PBWMonomial::one(), *f), c.clone())].into_iter().collect();
            for g in m.word(w.order).iter().rev() {
                t = self.lmul_terms(*g, &t, target);
            }
            add_scaled(&mut out, &t, &Rational::one());
        }
        InducedElement::from_terms(target, out)
    }
}

/// Part of `w` in `S^m Λ^-_i Λ^+_j F`.
pub fn component_project(w: &InducedElement, m: u32, i: u32, j: u32) -> Result<InducedElement, InducedError> {
    if w.order != Order::MinusPlus {
        return Err(InducedError::WrongOrder);
    }
    let terms = w
        .terms
        .iter()
        .filter(|((mono, _), _)| mono.hat_degree() == m && mono.minus_len() == i && mono.plus_len() == j)
        .map(|(k, c)| (*k, c.clone()))
        .collect();
    Ok(InducedElement::from_terms(Order::MinusPlus, terms))
}

impl G0Module for InducedModule {
    type Vector = InducedElement;

    fn act_g0(&self, g: &G0Element, v: &InducedElement) -> InducedElement {
        self.act_unchecked(&g.to_element(), v)
    }

    fn is_zero_vec(&self, v: &InducedElement) -> bool {
        v.is_zero()
    }

    fn proportional(&self, a: &InducedElement, b: &InducedElement) -> Option<Rational> {
        sparse_proportional(&a.terms, &b.terms)
    }
}

/// A nonzero vector of positive depth killed by `e1, e2, e3, e0, e'0`.
#[derive(Clone, Debug)]
pub struct SingularVector {
    pub vector: InducedElement,
    pub depth: u32,
    pub weight: Weight,
}

/// Elements whose joint kernel on a weight space is the space of singular
/// vectors: the raising operators of g0 together with `e0` and `e'0`.
pub fn singular_conditions() -> Vec<SuperElement> {
    ["e1", "e2", "e3", "e0prime", "e0"]
        .iter()
        .map(|n| crate::e36::named(n))
        .collect()
}

/// Candidate columns at one depth grouped by weight. Only weights that are
/// dominant for sl(3) and sl(2) can carry highest weight vectors.
fn weight_groups(module: &InducedModule, depth: u32) -> BTreeMap<Weight, Vec<(PBWMonomial, usize)>> {
    let mut groups: BTreeMap<Weight, Vec<(PBWMonomial, usize)>> = BTreeMap::new();
    for mono in PBWMonomial::of_depth(depth) {
        for fidx in 0..module.irrep().dim() {
            let w = module.weight_of(&mono, fidx);
            if w.a >= 0 && w.b >= 0 && w.r >= 0 {
                groups.entry(w).or_default().push((mono, fidx));
            }
        }
    }
    groups
}

/// Rows of the linear system "all conditions vanish" on the given columns.
fn condition_rows(module: &InducedModule, columns: &[(PBWMonomial, usize)]) -> Vec<Vec<Rational>> {
    let conds = singular_conditions();
    let mut rows: BTreeMap<(usize, PBWMonomial, usize), Vec<Rational>> = BTreeMap::new();
    for (col, (mono, fidx)) in columns.iter().enumerate() {
        for (ci, c) in conds.iter().enumerate() {
            for ((m, f), v) in module.act_on_basis(c, *mono, *fidx, Order::MinusPlus).iter() {
                rows.entry((ci, *m, *f))
                    .or_insert_with(|| vec![Rational::zero(); columns.len()])[col] = v.clone();
            }
        }
    }
    rows.into_values().collect()
}

fn element_from_kernel(columns: &[(PBWMonomial, usize)], v: &[Rational]) -> InducedElement {
    let terms = columns
        .iter()
        .zip(v)
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (*k, c.clone()))
        .collect();
    InducedElement::from_terms(Order::MinusPlus, terms)
}

/// Recomputes every defining condition of a singular vector from scratch.
pub fn is_singular(module: &InducedModule, v: &InducedElement) -> bool {
    if v.is_zero() || v.depths().contains(&0) {
        return false;
    }
    let e0 = crate::e36::named("e0");
    let e0p = crate::e36::named("e0prime");
    hwv_test(module, v)
        && module.act_unchecked(&e0, v).is_zero()
        && module.act_unchecked(&e0p, v).is_zero()
}

/// Candidate columns of one depth and weight.
type DepthGroup = (u32, Weight, Vec<(PBWMonomial, usize)>);

/// Basis of the singular vectors of each depth `1..=max_depth` and weight.
pub fn singular_search(module: &InducedModule, max_depth: u32) -> Vec<SingularVector> {
    let jobs: Vec<DepthGroup> = (1..=max_depth)
        .flat_map(|d| weight_groups(module, d).into_iter().map(move |(w, c)| (d, w, c)))
        .collect();
    let mut found: Vec<SingularVector> = jobs
        .par_iter()
        .flat_map_iter(|(depth, weight, columns)| {
            let rows = condition_rows(module, columns);
            let ker = if rows.is_empty() {
                (0..columns.len())
                    .map(|i| {
                        let mut v = vec![Rational::zero(); columns.len()];
                        v[i] = Rational::one();
                        v
                    })
                    .collect()
            } else {
                linalg::kernel(&rows, columns.len())
            };
            ker.into_iter()
                .map(|v| {
                    let vector = element_from_kernel(columns, &v);
                    assert!(is_singular(module, &vector), "kernel vector failed re-verification");
                    SingularVector {
                        vector,
                        depth: *depth,
                        weight: weight.clone(),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_by(|a, b| (a.depth, &a.weight).cmp(&(b.depth, &b.weight)));
    found
}

/// A condition on `y` under which singular vectors of one depth and
/// (sl(3), sl(2)) weight exist.
#[derive(Clone, Debug)]
pub struct YCondition {
    pub depth: u32,
    pub a: i64,
    pub b: i64,
    pub r: i64,
    /// The `Y` eigenvalue is `y + y_shift`.
    pub y_shift: Rational,
    /// Monic polynomial whose roots are the admissible `y`; the zero
    /// polynomial means every `y` is admissible.
    pub condition: UniPoly,
    pub rational_roots: Vec<Rational>,
    /// Kernel bases at each rational root (at `y = 0` when every `y` works).
    pub vectors: Vec<(Rational, Vec<InducedElement>)>,
}

/// Singular vector search with `y` left as an indeterminate.
///
/// Matrix entries are affine in `y` (only the final g0 action on `F` sees
/// `y`), so the matrices at `y = 0` and `y = 1` determine them.
pub fn parametric_y_search(p: u32, q: u32, r: u32, max_depth: u32) -> Vec<YCondition> {
    let m0 = InducedModule::new(IrrepF::new(p, q, r, int(0)));
    let m1 = InducedModule::new(IrrepF::new(p, q, r, int(1)));
    let jobs: Vec<DepthGroup> = (1..=max_depth)
        .flat_map(|d| weight_groups(&m0, d).into_iter().map(move |(w, c)| (d, w, c)))
        .collect();
    let mut out: Vec<YCondition> = jobs
        .par_iter()
        .filter_map(|(depth, weight, columns)| parametric_group(p, q, r, &m0, &m1, *depth, weight, columns))
        .collect();
    out.sort_by_key(|a| (a.depth, a.a, a.b, a.r));
    out
}

#[allow(clippy::too_many_arguments)]
fn parametric_group(
    p: u32,
    q: u32,
    r: u32,
    m0: &InducedModule,
    m1: &InducedModule,
    depth: u32,
    weight: &Weight,
    columns: &[(PBWMonomial, usize)],
) -> Option<YCondition> {
    let n = columns.len();
    let rows0 = condition_rows_keyed(m0, columns);
    let rows1 = condition_rows_keyed(m1, columns);
    let mut keys: Vec<_> = rows0.keys().chain(rows1.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let zero_row = vec![Rational::zero(); n];
    let mut constant_rows = Vec::new();
    let mut affine_rows = Vec::new();
    for k in &keys {
        let a = rows0.get(k).unwrap_or(&zero_row);
        let b1 = rows1.get(k).unwrap_or(&zero_row);
        let slope: Vec<Rational> = a.iter().zip(b1).map(|(x, y)| y - x).collect();
        if slope.iter().all(Zero::is_zero) {
            constant_rows.push(a.clone());
        } else {
            affine_rows.push((a.clone(), slope));
        }
    }
    let base = if constant_rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![Rational::zero(); n];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&constant_rows, n)
    };
    if base.is_empty() {
        return None;
    }
    let k = base.len();
    let dot = |row: &[Rational], v: &[Rational]| -> Rational { row.iter().zip(v).map(|(a, b)| a * b).sum() };
    let poly_rows: Vec<Vec<UniPoly>> = affine_rows
        .iter()
        .map(|(a, s)| {
            base.iter()
                .map(|v| UniPoly::affine(dot(a, v), dot(s, v)))
                .collect()
        })
        .collect();
    let pivots = linalg::poly_echelon_pivots(poly_rows, k);
    let condition = if pivots.len() < k {
        UniPoly::zero()
    } else {
        pivots.iter().fold(UniPoly::constant(int(1)), |acc, p| acc.mul(p))
    };
    if condition.degree() == Some(0) {
        return None;
    }
    let rational_roots = condition.rational_roots();
    let samples: Vec<Rational> = if condition.is_zero() {
        vec![Rational::zero()]
    } else {
        rational_roots.clone()
    };
    let vectors = samples
        .iter()
        .map(|y0| {
            let module = InducedModule::new(IrrepF::new(p, q, r, y0.clone()));
            let rows = condition_rows(&module, columns);
            let ker = linalg::kernel(&rows, n);
            let vs: Vec<InducedElement> = ker.iter().map(|v| element_from_kernel(columns, v)).collect();
            for v in &vs {
                assert!(is_singular(&module, v), "specialized kernel vector failed re-verification");
            }
            (y0.clone(), vs)
        })
        .collect();
    Some(YCondition {
        depth,
        a: weight.a,
        b: weight.b,
        r: weight.r,
        y_shift: &weight.y - &m0.irrep().y,
        condition,
        rational_roots,
        vectors,
    })
}

fn condition_rows_keyed(
    module: &InducedModule,
    columns: &[(PBWMonomial, usize)],
) -> BTreeMap<(usize, PBWMonomial, usize), Vec<Rational>> {
    let conds = singular_conditions();
    let mut rows: BTreeMap<(usize, PBWMonomial, usize), Vec<Rational>> = BTreeMap::new();
    for (col, (mono, fidx)) in columns.iter().enumerate() {
        for (ci, c) in conds.iter().enumerate() {
            for ((m, f), v) in module.act_on_basis(c, *mono, *fidx, Order::MinusPlus).iter() {
                rows.entry((ci, *m, *f))
                    .or_insert_with(|| vec![Rational::zero(); columns.len()])[col] = v.clone();
            }
        }
    }
    rows
}

/// `Y` eigenvalue of `S^m Λ^-_i Λ^+_j ⊗ F`: `y - (i+j)/3 - 2m/3`.
pub fn expected_y(y: &Rational, m: u32, i: u32, j: u32) -> Rational {
    y - rat((i + j) as i64, 3) - rat(2 * m as i64, 3)
}
