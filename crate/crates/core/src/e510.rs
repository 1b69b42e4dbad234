//! Elements of E(5,10): divergence-free polynomial vector fields in
//! `x1..x5` (even part) and closed polynomial 2-forms (odd part).
//!
//! Indices are 0-based internally: `x1` is slot 0, `dx1` is exterior symbol 0.

use std::collections::BTreeMap;
use std::fmt;

use num::One;
use thiserror::Error;

use crate::scalar::{int, rat, ExteriorMonomial, Monomial, Polynomial, Rational};

/// Number of commuting variables `x1..x5`.
pub const NVARS: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("vector field is not divergence-free (divergence {0})")]
    NotDivergenceFree(String),
    #[error("2-form is not closed")]
    NotClosed,
    #[error("element is zero; its degree is undefined")]
    ZeroElement,
    #[error("element is not homogeneous for the {0} grading")]
    Inhomogeneous(&'static str),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("element is not a simultaneous eigenvector of the Cartan subalgebra")]
    NotEigenvector,
    #[error("element does not lie in {0}")]
    OutsideSubalgebra(&'static str),
}

pub fn x(i: usize) -> Polynomial {
    Polynomial::var(NVARS, i).expect("x index in 0..5")
}

pub fn poly_const(c: Rational) -> Polynomial {
    Polynomial::constant(NVARS, c)
}

/// A differential form of any degree in `dx1..dx5` with polynomial
/// coefficients. No closedness is implied.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DiffForm {
    terms: BTreeMap<ExteriorMonomial, Polynomial>,
}

impl DiffForm {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `coeff * dx_{i_1} ∧ ... ∧ dx_{i_k}` for 0-based indices in the given
    /// order.
    pub fn monomial(coeff: Polynomial, indices: &[u8]) -> Self {
        let mut f = Self::zero();
        if let Some((sign, m)) = ExteriorMonomial::from_product(indices) {
            f.add_term(m, &coeff.scale(&int(sign as i64)));
        }
        f
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExteriorMonomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &ExteriorMonomial) -> Polynomial {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(NVARS))
    }

    pub fn add_term(&mut self, m: ExteriorMonomial, p: &Polynomial) {
        if p.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m)
            .or_insert_with(|| Polynomial::zero(NVARS));
        entry.add_assign_scaled(p, &Rational::one());
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(*m, p);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            out.add_term(*m, &p.scale(c));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                if let Some((sign, m)) = ma.wedge(mb) {
                    out.add_term(m, &(a * b).scale(&int(sign as i64)));
                }
            }
        }
        out
    }

    /// Exterior derivative.
    pub fn exterior_derivative(&self) -> Self {
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            for i in 0..NVARS {
                let dp = p.partial(i).expect("index in range");
                if dp.is_zero() {
                    continue;
                }
                if let Some((sign, dm)) = ExteriorMonomial::from_mask(1 << i).wedge(m) {
                    out.add_term(dm, &dp.scale(&int(sign as i64)));
                }
            }
        }
        out
    }

    /// Interior product `i_X ω`.
    pub fn contract(&self, field: &VectorField) -> Self {
        let mut out = Self::zero();
        for (m, p) in &self.terms {
            // Removing symbol i from position k of the sorted list costs (-1)^k.
            for (pos, i) in m.indices().into_iter().enumerate() {
                let a = &field.coeffs[i as usize];
                if a.is_zero() {
                    continue;
                }
                let rest = ExteriorMonomial::from_mask(m.mask() & !(1 << i));
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                out.add_term(rest, &(a * p).scale(&int(sign)));
            }
        }
        out
    }
}

/// Divergence of an arbitrary coefficient list `Σ a_i ∂_i`.
pub fn divergence(coeffs: &[Polynomial; NVARS]) -> Polynomial {
    let mut out = Polynomial::zero(NVARS);
    for (i, a) in coeffs.iter().enumerate() {
        out.add_assign_scaled(&a.partial(i).expect("index in range"), &Rational::one());
    }
    out
}

/// Exterior derivative of an unchecked 2-form given as `(j, k, b_jk)` triples.
pub fn exterior_derivative(form: &DiffForm) -> DiffForm {
    form.exterior_derivative()
}

/// Divergence-free vector field `Σ a_i ∂_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VectorField {
    coeffs: [Polynomial; NVARS],
}

impl VectorField {
    pub fn zero() -> Self {
        VectorField {
            coeffs: std::array::from_fn(|_| Polynomial::zero(NVARS)),
        }
    }

    pub fn new(coeffs: [Polynomial; NVARS]) -> Result<Self, AlgebraError> {
        let div = divergence(&coeffs);
        if !div.is_zero() {
            return Err(AlgebraError::NotDivergenceFree(format!("{div:?}")));
        }
        Ok(VectorField { coeffs })
    }

    /// `p ∂_i`; fails unless `p` is free of `x_i`.
    pub fn single(p: Polynomial, i: usize) -> Result<Self, AlgebraError> {
        let mut c: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
        c[i] = p;
        Self::new(c)
    }

    fn from_checked(coeffs: [Polynomial; NVARS]) -> Self {
        let div = divergence(&coeffs);
        assert!(div.is_zero(), "internal error: bracket produced a field with divergence {div:?}");
        VectorField { coeffs }
    }

    pub fn coeffs(&self) -> &[Polynomial; NVARS] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        VectorField {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VectorField {
            coeffs: std::array::from_fn(|i| self.coeffs[i].scale(c)),
        }
    }

    /// Applies the field as a derivation to a polynomial.
    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(NVARS);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out.add_assign_scaled(&(a * &p.partial(i).expect("index in range")), &Rational::one());
        }
        out
    }

    /// Commutator of vector fields.
    pub fn bracket(&self, other: &Self) -> Self {
        VectorField::from_checked(std::array::from_fn(|i| {
            &self.apply(&other.coeffs[i]) - &other.apply(&self.coeffs[i])
        }))
    }

    /// Lie derivative of a closed form: `L_X ω = d(i_X ω)`.
    pub fn lie_derivative(&self, form: &TwoForm) -> TwoForm {
        TwoForm::from_checked(form.form.contract(self).exterior_derivative())
    }
}

/// Closed 2-form `Σ b_jk d_jk`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TwoForm {
    form: DiffForm,
}

impl TwoForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(form: DiffForm) -> Result<Self, AlgebraError> {
        assert!(
            form.terms().all(|(m, _)| m.len() == 2),
            "TwoForm requires a homogeneous 2-form"
        );
        if !form.exterior_derivative().is_zero() {
            return Err(AlgebraError::NotClosed);
        }
        Ok(TwoForm { form })
    }

    /// `p dx_j ∧ dx_k` (0-based), validated.
    pub fn single(p: Polynomial, j: u8, k: u8) -> Result<Self, AlgebraError> {
        Self::new(DiffForm::monomial(p, &[j, k]))
    }

    fn from_checked(form: DiffForm) -> Self {
        assert!(
            form.exterior_derivative().is_zero(),
            "internal error: bracket produced a non-closed form"
        );
        TwoForm { form }
    }

    pub fn form(&self) -> &DiffForm {
        &self.form
    }

    pub fn is_zero(&self) -> bool {
        self.form.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        TwoForm {
            form: self.form.add(&other.form),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TwoForm {
            form: self.form.scale(c),
        }
    }
}

/// Sign of the permutation `perm` of `0..5` by inversion counting, or 0 when
/// an entry repeats.
pub fn levi_civita(perm: [u8; 5]) -> i64 {
    for i in 0..5 {
        for j in (i + 1)..5 {
            if perm[i] == perm[j] {
                return 0;
            }
        }
    }
    let inversions = (0..5)
        .flat_map(|i| ((i + 1)..5).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Odd-odd bracket by the rule `[a d_jk, b d_lm] = ε_{ijklm} ab ∂_i`.
pub fn odd_bracket(a: &TwoForm, b: &TwoForm) -> VectorField {
    let mut coeffs: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
    for (ma, pa) in a.form.terms() {
        for (mb, pb) in b.form.terms() {
            if ma.mask() & mb.mask() != 0 {
                continue;
            }
            let missing = (!(ma.mask() | mb.mask()) & 0b11111).trailing_zeros() as u8;
            let (ja, ka) = (ma.indices()[0], ma.indices()[1]);
            let (jb, kb) = (mb.indices()[0], mb.indices()[1]);
            let eps = levi_civita([missing, ja, ka, jb, kb]);
            coeffs[missing as usize].add_assign_scaled(&(pa * pb), &int(eps));
        }
    }
    VectorField::from_checked(coeffs)
}

/// Cross-check route for the odd-odd bracket: wedge the two forms and read
/// off the vector field whose contraction with `dx1∧…∧dx5` is the result.
pub fn wedge_volume_bracket(a: &TwoForm, b: &TwoForm) -> VectorField {
    let four = a.form.wedge(&b.form);
    let mut coeffs: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
    for (m, p) in four.terms() {
        let missing = (!m.mask() & 0b11111).trailing_zeros() as usize;
        // i_{∂_i} vol = (-1)^i (vol without dx_i), 0-based i.
        let sign = if missing.is_multiple_of(2) { 1 } else { -1 };
        coeffs[missing].add_assign_scaled(p, &int(sign));
    }
    VectorField::from_checked(coeffs)
}

/// Element of E(5,10) with an even and an odd part.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuperElement {
    pub even: VectorField,
    pub odd: TwoForm,
}

/// Which of the two integer gradings to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    Consistent,
    Secondary,
}

impl SuperElement {
    pub fn zero() -> Self {
        SuperElement {
            even: VectorField::zero(),
            odd: TwoForm::zero(),
        }
    }

    pub fn from_field(even: VectorField) -> Self {
        SuperElement {
            even,
            odd: TwoForm::zero(),
        }
    }

    pub fn from_form(odd: TwoForm) -> Self {
        SuperElement {
            even: VectorField::zero(),
            odd,
        }
    }

    /// `p ∂_i` (0-based `i`).
    pub fn field(p: Polynomial, i: usize) -> Result<Self, AlgebraError> {
        Ok(Self::from_field(VectorField::single(p, i)?))
    }

    /// `p d_jk` (0-based).
    pub fn form(p: Polynomial, j: u8, k: u8) -> Result<Self, AlgebraError> {
        Ok(Self::from_form(TwoForm::single(p, j, k)?))
    }

    /// Constant field `∂_i`.
    pub fn partial(i: usize) -> Self {
        Self::field(poly_const(Rational::one()), i).expect("constant fields are divergence-free")
    }

    /// Constant form `d_jk`.
    pub fn dform(j: u8, k: u8) -> Self {
        Self::form(poly_const(Rational::one()), j, k).expect("constant forms are closed")
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        SuperElement {
            even: self.even.add(&other.even),
            odd: self.odd.add(&other.odd),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SuperElement {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    /// Parity when the element is purely even (0) or purely odd (1).
    pub fn parity(&self) -> Option<u8> {
        match (self.even.is_zero(), self.odd.is_zero()) {
            (_, true) => Some(0),
            (true, false) => Some(1),
            (false, false) => None,
        }
    }

    /// Coordinates in the monomial basis `{x^a ∂_i} ∪ {x^a d_jk}`.
    pub fn coordinates(&self) -> BTreeMap<BasisKey, Rational> {
        let mut out = BTreeMap::new();
        for (i, p) in self.even.coeffs.iter().enumerate() {
            for (m, c) in p.terms() {
                out.insert(BasisKey::Field(*m, i as u8), c.clone());
            }
        }
        for (fm, p) in self.odd.form.terms() {
            for (m, c) in p.terms() {
                out.insert(BasisKey::Form(*m, *fm), c.clone());
            }
        }
        out
    }

    /// Splits the element into its monomial terms, each a valid element only
    /// if taken together; used for degree bookkeeping.
    fn monomial_degrees(&self, grading: Grading) -> Vec<i64> {
        let mut degs: Vec<i64> = self
            .coordinates()
            .keys()
            .map(|k| k.degree(grading))
            .collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    pub fn degree(&self, grading: Grading) -> Result<i64, AlgebraError> {
        let degs = self.monomial_degrees(grading);
        match degs.as_slice() {
            [] => Err(AlgebraError::ZeroElement),
            [d] => Ok(*d),
            _ => Err(AlgebraError::Inhomogeneous(match grading {
                Grading::Consistent => "consistent",
                Grading::Secondary => "secondary",
            })),
        }
    }

    /// Splits into homogeneous components for `grading`, keyed by degree.
    /// Each component is a valid element because both gradings are
    /// preserved by `div` and `d`.
    pub fn homogeneous_components(&self, grading: Grading) -> BTreeMap<i64, SuperElement> {
        let mut fields: BTreeMap<i64, [Polynomial; NVARS]> = BTreeMap::new();
        let mut forms: BTreeMap<i64, DiffForm> = BTreeMap::new();
        for (i, p) in self.even.coeffs.iter().enumerate() {
            for (m, c) in p.terms() {
                let d = BasisKey::Field(*m, i as u8).degree(grading);
                let entry = fields
                    .entry(d)
                    .or_insert_with(|| std::array::from_fn(|_| Polynomial::zero(NVARS)));
                entry[i].add_term(*m, c);
            }
        }
        for (fm, p) in self.odd.form.terms() {
            for (m, c) in p.terms() {
                let d = BasisKey::Form(*m, *fm).degree(grading);
                forms
                    .entry(d)
                    .or_default()
                    .add_term(*fm, &Polynomial::term(NVARS, *m, c.clone()));
            }
        }
        let mut out = BTreeMap::new();
        for (d, c) in fields {
            out.insert(d, SuperElement::from_field(VectorField::from_checked(c)));
        }
        for (d, f) in forms {
            out.entry(d)
                .or_insert_with(SuperElement::zero)
                .odd = TwoForm::from_checked(f);
        }
        out
    }
}

/// Basis monomial of E(5,10) coordinates: `x^m ∂_i` or `x^m dx_j∧dx_k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisKey {
    Field(Monomial, u8),
    Form(Monomial, ExteriorMonomial),
}

impl BasisKey {
    /// Degree of this monomial: consistent grading counts `deg x = 2`,
    /// `deg ∂ = -2`, `deg dx = -1/2`; secondary grading counts only
    /// `x4, x5` (+1), `∂4, ∂5` (-1) and `dx_i` as `deg x_i - 1/2`.
    pub fn degree(&self, grading: Grading) -> i64 {
        match (grading, self) {
            (Grading::Consistent, BasisKey::Field(m, _)) => 2 * m.degree() as i64 - 2,
            (Grading::Consistent, BasisKey::Form(m, _)) => 2 * m.degree() as i64 - 1,
            (Grading::Secondary, BasisKey::Field(m, i)) => {
                m.partial_degree(3..5) as i64 - if *i >= 3 { 1 } else { 0 }
            }
            (Grading::Secondary, BasisKey::Form(m, f)) => {
                // Twice the secondary degree of dx_j ∧ dx_k: each dx contributes ±1.
                let twice: i64 = f.indices().iter().map(|&i| if i >= 3 { 1 } else { -1 }).sum();
                m.partial_degree(3..5) as i64 + twice / 2
            }
        }
    }
}

/// Super-bracket `[a, b] = ab - (-1)^{|a||b|} ba`: commutator on fields, Lie
/// derivative between fields and forms, ε-rule between forms.
pub fn super_bracket(a: &SuperElement, b: &SuperElement) -> SuperElement {
    let even = a.even.bracket(&b.even).add(&odd_bracket(&a.odd, &b.odd));
    let odd = a
        .even
        .lie_derivative(&b.odd)
        .add(&b.even.lie_derivative(&a.odd).scale(&-Rational::one()));
    SuperElement { even, odd }
}

pub fn consistent_degree(a: &SuperElement) -> Result<i64, AlgebraError> {
    a.degree(Grading::Consistent)
}

pub fn secondary_degree(a: &SuperElement) -> Result<i64, AlgebraError> {
    a.degree(Grading::Secondary)
}

fn write_coeff_monomial(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    m: &Monomial,
    tail: &str,
) -> fmt::Result {
    use num::Signed;
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { "-" } else { "+" })?;
    }
    let abs = c.abs();
    let mut factors: Vec<String> = Vec::new();
    if !abs.is_one() {
        factors.push(crate::scalar::rational_to_short_string(&abs));
    }
    for (i, &e) in m.0.iter().enumerate().take(NVARS) {
        match e {
            0 => {}
            1 => factors.push(format!("x{}", i + 1)),
            _ => factors.push(format!("x{}^{}", i + 1, e)),
        }
    }
    factors.push(tail.to_string());
    write!(f, "{}", factors.join("*"))
}

impl fmt::Display for SuperElement {
    /// Canonical text form, e.g. `x3*d25 - x2*d35 + 2*x5*d23` (ordered by
    /// basis key), which the expression parser reads back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.coordinates();
        if coords.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in coords.iter().enumerate() {
            let (m, tail) = match k {
                BasisKey::Field(m, i) => (m, format!("dp{}", i + 1)),
                BasisKey::Form(m, fm) => {
                    let idx = fm.indices();
                    (m, format!("d{}{}", idx[0] + 1, idx[1] + 1))
                }
            };
            write_coeff_monomial(f, n == 0, c, m, &tail)?;
        }
        Ok(())
    }
}

/// `x_i ∂_j` shorthand with 1-based indices, used for the named tables.
pub fn xd(i: usize, j: usize) -> VectorField {
    let mut c: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
    c[j - 1] = x(i - 1);
    if i == j {
        // Diagonal terms are only valid in traceless combinations.
        return VectorField { coeffs: c };
    }
    VectorField::new(c).expect("off-diagonal x_i ∂_j is divergence-free")
}

/// Combines `Σ c (x_i ∂_j)` with 1-based indices and validates divergence.
pub fn linear_field(terms: &[(i64, i64, usize, usize)]) -> VectorField {
    let mut c: [Polynomial; NVARS] = std::array::from_fn(|_| Polynomial::zero(NVARS));
    for &(n, d, i, j) in terms {
        c[j - 1].add_assign_scaled(&x(i - 1), &rat(n, d));
    }
    VectorField::new(c).expect("linear field must be divergence-free")
}
