//! E(3,6) as the secondary-degree-zero part of E(5,10): named elements,
//! weights with respect to the Cartan subalgebra of g0, the graded pieces of
//! degrees -2..1 and the relation checks used by the verifier.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::e510::{
    poly_const, super_bracket, x, AlgebraError, BasisKey, DiffForm, Grading, SuperElement,
    TwoForm, VectorField, NVARS,
};
use crate::linalg;
use crate::scalar::{int, monomials_of_degree, rat, ExteriorMonomial, Monomial, Polynomial, Rational};

/// Names accepted by [`named_element`].
pub const NAMES: &[&str] = &[
    "h1", "h2", "h3", "Y", "e1", "e2", "e12", "f1", "f2", "f12", "e3", "f3", "f0", "e0",
    "e0prime", "e1prime", "h0", "dplus1", "dplus2", "dplus3", "dminus1", "dminus2", "dminus3",
];

fn field(terms: &[(i64, i64, usize, usize)]) -> SuperElement {
    SuperElement::from_field(crate::e510::linear_field(terms))
}

fn const_form(j: u8, k: u8) -> SuperElement {
    SuperElement::dform(j - 1, k - 1)
}

fn form_of(parts: &[(i64, usize, u8, u8)]) -> SuperElement {
    // Sum of c * x_v * d_jk with 1-based indices; v = 0 means constant.
    let mut f = DiffForm::zero();
    for &(c, v, j, k) in parts {
        let p = if v == 0 { poly_const(int(1)) } else { x(v - 1) };
        f = f.add(&DiffForm::monomial(p.scale(&int(c)), &[j - 1, k - 1]));
    }
    SuperElement::from_form(TwoForm::new(f).expect("named 2-forms are closed"))
}

/// Looks up an element of the fixed table of named elements.
pub fn named_element(name: &str) -> Result<SuperElement, AlgebraError> {
    let e = match name {
        "h1" => field(&[(1, 1, 1, 1), (-1, 1, 2, 2)]),
        "h2" => field(&[(1, 1, 2, 2), (-1, 1, 3, 3)]),
        "h3" => field(&[(1, 1, 4, 4), (-1, 1, 5, 5)]),
        "Y" => field(&[
            (2, 3, 1, 1),
            (2, 3, 2, 2),
            (2, 3, 3, 3),
            (-1, 1, 4, 4),
            (-1, 1, 5, 5),
        ]),
        "e1" => field(&[(1, 1, 1, 2)]),
        "e2" => field(&[(1, 1, 2, 3)]),
        "e12" => field(&[(1, 1, 1, 3)]),
        "f1" => field(&[(1, 1, 2, 1)]),
        "f2" => field(&[(1, 1, 3, 2)]),
        "f12" => field(&[(1, 1, 3, 1)]),
        "e3" => field(&[(1, 1, 4, 5)]),
        "f3" => field(&[(1, 1, 5, 4)]),
        "f0" => const_form(1, 4),
        "e0prime" => form_of(&[(1, 3, 3, 5)]),
        "e0" => form_of(&[(1, 3, 2, 5), (-1, 2, 3, 5), (2, 5, 2, 3)]),
        "e1prime" => form_of(&[(1, 3, 3, 4)]),
        "h0" => {
            let parts = [("h1", rat(2, 3)), ("h2", rat(1, 3)), ("h3", int(-1)), ("Y", int(-1))];
            let mut acc = SuperElement::zero();
            for (n, c) in parts {
                acc = acc.add(&named_element(n)?.scale(&c));
            }
            acc
        }
        "dplus1" => const_form(1, 4),
        "dplus2" => const_form(2, 4),
        "dplus3" => const_form(3, 4),
        "dminus1" => const_form(1, 5),
        "dminus2" => const_form(2, 5),
        "dminus3" => const_form(3, 5),
        _ => return Err(AlgebraError::UnknownName(name.to_string())),
    };
    Ok(e)
}

pub(crate) fn named(name: &str) -> SuperElement {
    named_element(name).expect("name is in the table")
}

/// `d^+_i` (sign `+`) or `d^-_i` (sign `-`), 1-based `i`.
pub fn d_pm(plus: bool, i: u8) -> SuperElement {
    const_form(i, if plus { 4 } else { 5 })
}

/// True iff every monomial of `a` has secondary degree zero.
pub fn e36_membership(a: &SuperElement) -> bool {
    a.coordinates()
        .keys()
        .all(|k| k.degree(Grading::Secondary) == 0)
}

/// Eigenvalues of `ad h1, ad h2, ad h3, ad Y`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub y: Rational,
}

impl Weight {
    pub fn new(a: i64, b: i64, r: i64, y: Rational) -> Self {
        Weight { a, b, r, y }
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            a: self.a + other.a,
            b: self.b + other.b,
            r: self.r + other.r,
            y: &self.y + &other.y,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}; {}; {})",
            self.a,
            self.b,
            self.r,
            crate::scalar::rational_to_short_string(&self.y)
        )
    }
}

/// The scalar `λ` with `[h, a] = λ a`, if any.
pub fn ad_eigenvalue(h: &SuperElement, a: &SuperElement) -> Option<Rational> {
    let image = super_bracket(h, a);
    let coords = a.coordinates();
    let (key, c) = coords.iter().next()?;
    let lambda = image.coordinates().get(key).cloned().unwrap_or_else(Rational::zero) / c;
    (image == a.scale(&lambda)).then_some(lambda)
}

fn integral(r: Rational) -> Result<i64, AlgebraError> {
    if !r.is_integer() {
        return Err(AlgebraError::NotEigenvector);
    }
    i64::try_from(r.to_integer()).map_err(|_| AlgebraError::NotEigenvector)
}

/// Weight of an ad-eigenvector of the Cartan subalgebra `<h1,h2,h3,Y>`.
pub fn g0_weight(a: &SuperElement) -> Result<Weight, AlgebraError> {
    if a.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    let ev = |n: &str| ad_eigenvalue(&named(n), a).ok_or(AlgebraError::NotEigenvector);
    Ok(Weight {
        a: integral(ev("h1")?)?,
        b: integral(ev("h2")?)?,
        r: integral(ev("h3")?)?,
        y: ev("Y")?,
    })
}

/// Monomial basis keys of E(5,10) with the given consistent degree and
/// secondary degree zero, before imposing `div = 0` or `d = 0`.
pub fn candidate_keys(consistent: i64) -> Vec<BasisKey> {
    if consistent < -2 {
        return Vec::new();
    }
    let mut keys = Vec::new();
    if consistent % 2 == 0 {
        let n = ((consistent + 2) / 2) as u32;
        for m in monomials_of_degree(NVARS, n) {
            for i in 0..NVARS as u8 {
                keys.push(BasisKey::Field(m, i));
            }
        }
    } else {
        let n = ((consistent + 1) / 2) as u32;
        for m in monomials_of_degree(NVARS, n) {
            for j in 0..NVARS as u16 {
                for k in (j + 1)..NVARS as u16 {
                    keys.push(BasisKey::Form(m, ExteriorMonomial::from_mask((1 << j) | (1 << k))));
                }
            }
        }
    }
    keys.retain(|k| k.degree(Grading::Secondary) == 0);
    keys
}

/// Basis of the graded piece `g_j` of E(3,6), computed as the kernel of
/// `div` (even `j`) or `d` (odd `j`) on secondary-degree-zero monomials.
pub fn graded_component(consistent: i64) -> Vec<SuperElement> {
    let keys = candidate_keys(consistent);
    let even = consistent % 2 == 0;
    // Image coordinates of each candidate under div or d.
    let images: Vec<BTreeMap<(Monomial, u16), Rational>> = keys
        .iter()
        .map(|k| {
            let mut out = BTreeMap::new();
            match k {
                BasisKey::Field(m, i) => {
                    let p = Polynomial::term(NVARS, *m, int(1));
                    for (mm, c) in p.partial(*i as usize).expect("index in range").terms() {
                        out.insert((*mm, 0), c.clone());
                    }
                }
                BasisKey::Form(m, fm) => {
                    let idx = fm.indices();
                    let f = DiffForm::monomial(Polynomial::term(NVARS, *m, int(1)), &idx);
                    for (em, p) in f.exterior_derivative().terms() {
                        for (mm, c) in p.terms() {
                            out.insert((*mm, em.mask()), c.clone());
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut row_keys: Vec<(Monomial, u16)> = images.iter().flat_map(|m| m.keys().copied()).collect();
    row_keys.sort();
    row_keys.dedup();
    let rows: Vec<Vec<Rational>> = row_keys
        .iter()
        .map(|rk| {
            images
                .iter()
                .map(|img| img.get(rk).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    let ker = if rows.is_empty() {
        (0..keys.len())
            .map(|i| {
                let mut v = vec![Rational::zero(); keys.len()];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        linalg::kernel(&rows, keys.len())
    };
    ker.iter()
        .map(|v| element_from_keys(&keys, v, even))
        .collect()
}

fn element_from_keys(keys: &[BasisKey], coeffs: &[Rational], even: bool) -> SuperElement {
    if even {
        let mut c: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
        for (k, v) in keys.iter().zip(coeffs) {
            if let BasisKey::Field(m, i) = k {
                c[*i as usize].add_term(*m, v);
            }
        }
        SuperElement::from_field(VectorField::new(c).expect("kernel of div"))
    } else {
        let mut f = DiffForm::zero();
        for (k, v) in keys.iter().zip(coeffs) {
            if let BasisKey::Form(m, fm) = k {
                f.add_term(*fm, &Polynomial::term(NVARS, *m, v.clone()));
            }
        }
        SuperElement::from_form(TwoForm::new(f).expect("kernel of d"))
    }
}

/// Rank of a family of elements as vectors in the monomial basis.
pub fn span_rank(elements: &[SuperElement]) -> usize {
    let coords: Vec<BTreeMap<BasisKey, Rational>> = elements.iter().map(|e| e.coordinates()).collect();
    let mut keys: Vec<BasisKey> = coords.iter().flat_map(|c| c.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Rational>> = coords
        .iter()
        .map(|c| {
            keys.iter()
                .map(|k| c.get(k).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    if keys.is_empty() {
        return 0;
    }
    linalg::rank(&rows, keys.len())
}

/// `g^+_1` (sign `+`, built from `d_{j5}`) or `g^-_1` (built from `d_{j4}`).
pub fn g1_pm(plus: bool) -> Vec<SuperElement> {
    let last = if plus { 5 } else { 4 };
    let mut out = Vec::new();
    for i in 1..=3usize {
        for j in i..=3usize {
            out.push(form_of(&[(1, i, j as u8, last), (1, j, i as u8, last)]));
        }
    }
    out
}

/// `g^±_{-1}`: `d^+_i` for sign `+`, `d^-_i` for sign `-`.
pub fn gm1_pm(plus: bool) -> Vec<SuperElement> {
    (1..=3).map(|i| d_pm(plus, i)).collect()
}

/// The sl(3) part of g0 as the eight named elements.
pub fn sl3_basis() -> Vec<SuperElement> {
    ["h1", "h2", "e1", "e2", "e12", "f1", "f2", "f12"]
        .iter()
        .map(|n| named(n))
        .collect()
}

/// `S(3)^± = g^±_{-1} + sl(3) + g^±_1`.
pub fn s3_pm(plus: bool) -> Vec<SuperElement> {
    let mut v = gm1_pm(plus);
    v.extend(sl3_basis());
    v.extend(g1_pm(plus));
    v
}

/// True iff the span of `set` is closed under the bracket.
pub fn is_closed_under_bracket(set: &[SuperElement]) -> bool {
    let base = span_rank(set);
    let mut all = set.to_vec();
    for a in set {
        for b in set {
            all.push(super_bracket(a, b));
        }
    }
    span_rank(&all) == base
}

/// Fixed spanning set of `g_{-2} + g_{-1} + g_0 + g_1` made of named and
/// structured elements: 3 + 6 + 12 + 18 elements.
pub fn spanning_set() -> Vec<(String, SuperElement)> {
    let mut out: Vec<(String, SuperElement)> = Vec::new();
    for i in 0..3 {
        out.push((format!("dp{}", i + 1), SuperElement::partial(i)));
    }
    for sign in ["minus", "plus"] {
        for i in 1..=3 {
            let n = format!("d{sign}{i}");
            out.push((n.clone(), named(&n)));
        }
    }
    for n in ["h1", "h2", "e1", "e2", "e12", "f1", "f2", "f12", "h3", "e3", "f3", "Y"] {
        out.push((n.to_string(), named(n)));
    }
    for plus in [true, false] {
        for e in g1_pm(plus) {
            out.push((e.to_string(), e));
        }
    }
    // Elements of the form x_k d_{jl} - x_j d_{kl} + 2 x_l d_{jk}, l = 4, 5.
    for l in [5usize, 4] {
        for (j, k) in [(1usize, 2usize), (1, 3), (2, 3)] {
            let e = form_of(&[(1, k, j as u8, l as u8), (-1, j, k as u8, l as u8), (2, l, j as u8, k as u8)]);
            out.push((e.to_string(), e));
        }
    }
    out
}

/// Outcome of one relation check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    /// The computation disagrees with the printed value but matches a
    /// documented correction.
    Deviation,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Deviation => "deviation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub relation: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub note: Option<String>,
}

fn check(relation: &str, computed: SuperElement, expected: SuperElement) -> RelationCheck {
    let status = if computed == expected { Status::Pass } else { Status::Fail };
    RelationCheck {
        relation: relation.to_string(),
        expected: expected.to_string(),
        computed: computed.to_string(),
        status,
        note: None,
    }
}

/// Evaluates the bracket relations among generators and the commutation
/// tables of `e'_0` and `e'_1` with `L_-`.
pub fn check_relation_suite() -> Vec<RelationCheck> {
    let b = |a: &str, c: &SuperElement| super_bracket(&named(a), c);
    let zero = SuperElement::zero();
    let mut out = vec![
        check("[e0prime, f0] = f2", b("e0prime", &named("f0")), named("f2")),
        check("[e0, f0] = h0", b("e0", &named("f0")), named("h0")),
    ];
    for (plus, label) in [(true, "(+,-)"), (false, "(-,+)")] {
        let mut first_nonzero = SuperElement::zero();
        for a in gm1_pm(plus) {
            for c in g1_pm(!plus) {
                let v = super_bracket(&a, &c);
                if !v.is_zero() && first_nonzero.is_zero() {
                    first_nonzero = v;
                }
            }
        }
        out.push(check(
            &format!("[g^{}_-1, g^{}_1] = 0 {label}", &label[1..2], &label[3..4]),
            first_nonzero,
            zero.clone(),
        ));
    }
    let f12 = named("f12");
    let table = [
        ("[e0prime, dp1] = 0", b("e0prime", &SuperElement::partial(0)), zero.clone()),
        ("[e0prime, dp2] = 0", b("e0prime", &SuperElement::partial(1)), zero.clone()),
        ("[e0prime, dp3] = -dminus3", b("e0prime", &SuperElement::partial(2)), named("dminus3").scale(&int(-1))),
        ("[e0prime, dminus1] = 0", b("e0prime", &named("dminus1")), zero.clone()),
        ("[e0prime, dminus2] = 0", b("e0prime", &named("dminus2")), zero.clone()),
        ("[e0prime, dminus3] = 0", b("e0prime", &named("dminus3")), zero.clone()),
        ("[e0prime, dplus1] = f2", b("e0prime", &named("dplus1")), named("f2")),
        ("[e0prime, dplus2] = -f12", b("e0prime", &named("dplus2")), f12.scale(&int(-1))),
        ("[e0prime, dplus3] = 0", b("e0prime", &named("dplus3")), zero.clone()),
        ("[e1prime, dminus1] = -f2", b("e1prime", &named("dminus1")), named("f2").scale(&int(-1))),
    ];
    for (rel, computed, expected) in table {
        out.push(check(rel, computed, expected));
    }
    // The printed value here is f3; the bracket rule gives f12, which is
    // the sign-flipped counterpart of [e0prime, dplus2] = -f12.
    let computed = b("e1prime", &named("dminus2"));
    let mut entry = check("[e1prime, dminus2] = f3", computed.clone(), named("f3"));
    if entry.status == Status::Fail && computed == f12 {
        entry.status = Status::Deviation;
        entry.note = Some("computed f12 (x3*dp1); printed value f3".to_string());
    }
    out.push(entry);
    out.push(check("[e1prime, dminus3] = 0", b("e1prime", &named("dminus3")), zero));
    out
}

/// A g0 element written as `Σ sl3[i][j] x_i∂_j + Σ sl2[i][j] x_{4+i}∂_{4+j} + y Y`
/// with traceless `sl3` and `sl2` blocks (0-based indices).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct G0Element {
    pub sl3: [[Rational; 3]; 3],
    pub sl2: [[Rational; 2]; 2],
    pub y: Rational,
}

impl G0Element {
    pub fn is_zero(&self) -> bool {
        self.y.is_zero()
            && self.sl3.iter().flatten().all(Zero::is_zero)
            && self.sl2.iter().flatten().all(Zero::is_zero)
    }

    /// The element as a linear vector field.
    pub fn to_element(&self) -> SuperElement {
        let mut c: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
        for j in 0..3 {
            for i in 0..3 {
                c[j].add_assign_scaled(&x(i), &self.sl3[i][j]);
            }
            c[j].add_assign_scaled(&x(j), &(&self.y * rat(2, 3)));
        }
        for j in 0..2 {
            for i in 0..2 {
                c[j + 3].add_assign_scaled(&x(i + 3), &self.sl2[i][j]);
            }
            c[j + 3].add_assign_scaled(&x(j + 3), &-self.y.clone());
        }
        SuperElement::from_field(VectorField::new(c).expect("traceless blocks plus Y"))
    }
}

/// Splits an element of g0 into its sl(3), sl(2) and `Y` parts.
pub fn g0_decompose(a: &SuperElement) -> Result<G0Element, AlgebraError> {
    if !a.odd.is_zero() {
        return Err(AlgebraError::OutsideSubalgebra("g0"));
    }
    let mut m: [[Rational; 5]; 5] = std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()));
    for (j, p) in a.even.coeffs().iter().enumerate() {
        for (mono, c) in p.terms() {
            if mono.degree() != 1 {
                return Err(AlgebraError::OutsideSubalgebra("g0"));
            }
            let i = (0..NVARS).find(|&i| mono.0[i] == 1).expect("linear monomial");
            if (i < 3) != (j < 3) {
                return Err(AlgebraError::OutsideSubalgebra("g0"));
            }
            m[i][j] = c.clone();
        }
    }
    let t3: Rational = (0..3).map(|i| m[i][i].clone()).sum();
    let y = t3 / int(2);
    let shift3 = &y * rat(2, 3);
    let sl3 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                &m[i][j] - &shift3
            } else {
                m[i][j].clone()
            }
        })
    });
    let sl2 = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            if i == j {
                &m[i + 3][j + 3] + &y
            } else {
                m[i + 3][j + 3].clone()
            }
        })
    });
    Ok(G0Element { sl3, sl2, y })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_examples() {
        assert_eq!(named_element("f0").unwrap(), SuperElement::dform(0, 3));
        assert_eq!(
            named_element("e0prime").unwrap(),
            SuperElement::form(x(2), 2, 4).unwrap()
        );
        // h0 = -x2∂2 - x3∂3 + 2 x5∂5, expanded by hand.
        assert_eq!(
            named_element("h0").unwrap(),
            field(&[(-1, 1, 2, 2), (-1, 1, 3, 3), (2, 1, 5, 5)])
        );
        assert_eq!(
            named_element("nope"),
            Err(AlgebraError::UnknownName("nope".into()))
        );
        for n in NAMES {
            assert!(e36_membership(&named(n)), "{n}");
        }
    }

    #[test]
    fn membership_examples() {
        assert!(e36_membership(&named("e0")));
        assert!(!e36_membership(&SuperElement::dform(0, 1)));
        assert!(!e36_membership(&SuperElement::partial(3)));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(g0_weight(&named("f0")), Ok(Weight::new(1, 0, 1, rat(-1, 3))));
        assert_eq!(
            g0_weight(&SuperElement::partial(2)),
            Ok(Weight::new(0, 1, 0, rat(-2, 3)))
        );
        assert_eq!(
            g0_weight(&named("e0prime")),
            Ok(Weight::new(0, -2, -1, rat(1, 3)))
        );
        assert_eq!(
            g0_weight(&named("f0").add(&SuperElement::partial(0))),
            Err(AlgebraError::NotEigenvector)
        );
    }

    #[test]
    fn graded_dimensions() {
        let dims: Vec<usize> = (-2..=1).map(|d| graded_component(d).len()).collect();
        assert_eq!(dims, vec![3, 6, 12, 18]);
    }

    #[test]
    fn spanning_set_spans_each_piece() {
        let set = spanning_set();
        assert_eq!(set.len(), 39);
        for d in -2..=1 {
            let part: Vec<SuperElement> = set
                .iter()
                .filter(|(_, e)| e.degree(Grading::Consistent) == Ok(d))
                .map(|(_, e)| e.clone())
                .collect();
            let full = graded_component(d);
            assert_eq!(span_rank(&part), full.len());
            let mut both = part.clone();
            both.extend(full);
            assert_eq!(span_rank(&both), span_rank(&part));
        }
    }

    #[test]
    fn g0_structure_constants() {
        let b = |a: &str, c: &str| super_bracket(&named(a), &named(c));
        assert_eq!(b("e1", "f1"), named("h1"));
        assert_eq!(b("h1", "e1"), named("e1").scale(&int(2)));
        assert_eq!(b("e1", "e2"), named("e12"));
        assert_eq!(b("e3", "f3"), named("h3"));
        for s in ["h1", "h2", "e1", "e2", "e12", "f1", "f2", "f12"] {
            for t in ["h3", "e3", "f3", "Y"] {
                assert!(b(s, t).is_zero(), "[{s},{t}]");
            }
        }
    }

    #[test]
    fn s3_subalgebras_close() {
        assert!(is_closed_under_bracket(&s3_pm(true)));
        assert!(is_closed_under_bracket(&s3_pm(false)));
        // Mixing signs leaves the subalgebra.
        let mut mixed = gm1_pm(true);
        mixed.extend(sl3_basis());
        mixed.extend(g1_pm(false));
        mixed.extend(gm1_pm(false));
        assert!(!is_closed_under_bracket(&mixed));
    }

    #[test]
    fn relation_suite_has_one_deviation() {
        let report = check_relation_suite();
        let fails: Vec<_> = report.iter().filter(|r| r.status == Status::Fail).collect();
        assert!(fails.is_empty(), "{fails:?}");
        let devs: Vec<_> = report.iter().filter(|r| r.status == Status::Deviation).collect();
        assert_eq!(devs.len(), 1);
        assert!(devs[0].relation.contains("e1prime, dminus2"));
    }

    #[test]
    fn decomposition_recovers_named_parts() {
        let g = g0_decompose(&named("Y")).unwrap();
        assert_eq!(g.y, int(1));
        assert!(g.sl3.iter().flatten().all(Zero::is_zero));
        let g = g0_decompose(&named("h3")).unwrap();
        assert_eq!(g.sl2[0][0], int(1));
        assert_eq!(g.sl2[1][1], int(-1));
        assert!(g.y.is_zero());
        let g = g0_decompose(&named("h0")).unwrap();
        assert_eq!(g.y, int(-1));
        assert_eq!(g.sl3[0][0], rat(2, 3));
        assert_eq!(g.sl3[1][1], rat(-1, 3));
        assert_eq!(g.sl2[0][0], int(-1));
        assert!(g0_decompose(&named("f0")).is_err());
        for n in ["h0", "Y", "e3", "f12", "h2"] {
            assert_eq!(g0_decompose(&named(n)).unwrap().to_element(), named(n));
        }
    }
}
