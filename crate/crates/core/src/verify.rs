//! Verification harness: each check recomputes a structural statement about
//! E(3,6), the sl(3) model, the D-operators or induced modules and collects
//! the outcome as a [`LemmaReport`].

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::dops::{
    d1_displayed_variant, d2_shifted, d_alpha_apply, d_apply, d_op, dbar_alpha_apply, dbar_apply,
    dpow_expand, h_shifted, hat_mul, hwv_decompose, hwv_reconstruct, hwv_space, is_sl3_hwv, lht, op_a,
    op_b, sl3_act, sm_basis, sm_weight_of, OperatorWord, PowerOf, SMElement,
};
use crate::e36::{
    check_relation_suite, g0_weight, graded_component, named, spanning_set, RelationCheck, Status,
};
use crate::e510::{odd_bracket, super_bracket, wedge_volume_bracket, x, Grading, SuperElement, TwoForm};
use crate::g0rep::{
    bigraded_basis, g0_generator, hw_monomial, model_act_g0, model_monomial, weyl_dimension, IrrepF,
    ModelElement,
};
use crate::induced::{
    component_project, expected_y, parametric_y_search, InducedElement, InducedModule, Order, PBWMonomial,
    Terms, YCondition,
};
use crate::linalg;
use crate::scalar::{falling, int, monomials_of_degree, rat, Monomial, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown lemma id: {0}")]
    UnknownLemma(String),
    #[error("bad parameter {0}")]
    BadParam(String),
}

/// One claim with its computed and expected values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub claim: String,
    pub computed: String,
    pub expected: String,
    pub status: Status,
}

impl Record {
    fn compare(claim: impl Into<String>, computed: impl ToString, expected: impl ToString) -> Self {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let status = if computed == expected { Status::Pass } else { Status::Fail };
        Record {
            claim: claim.into(),
            computed,
            expected,
            status,
        }
    }

    /// Passes iff `failures` is empty; the first few failures are shown.
    fn holds(claim: impl Into<String>, checked: usize, failures: &[String]) -> Self {
        let computed = if failures.is_empty() {
            format!("holds on {checked} cases")
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
            format!("{} of {checked} cases fail: {}", failures.len(), shown.join("; "))
        };
        let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
        Record {
            claim: claim.into(),
            computed,
            expected: format!("holds on {checked} cases"),
            status,
        }
    }
}

impl From<RelationCheck> for Record {
    fn from(r: RelationCheck) -> Self {
        let computed = match &r.note {
            Some(n) => format!("{} ({n})", r.computed),
            None => r.computed,
        };
        Record {
            claim: r.relation,
            computed,
            expected: r.expected,
            status: r.status,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub details: Vec<Record>,
}

impl LemmaReport {
    fn new(id: &str, params: BTreeMap<String, String>, details: Vec<Record>) -> Self {
        let status = if details.iter().any(|r| r.status == Status::Fail) {
            Status::Fail
        } else if details.iter().any(|r| r.status == Status::Deviation) {
            Status::Deviation
        } else {
            Status::Pass
        };
        LemmaReport {
            id: id.to_string(),
            params,
            status,
            details,
        }
    }
}

/// Identifiers accepted by [`verify_lemma`].
pub const LEMMA_IDS: &[&str] = &[
    "brackets", "relations", "jacobi", "dims", "hypercharge", "3.1", "3.2", "3.3", "3.4", "3.5", "3.7", "3.8",
    "3.10", "3.12", "3.13", "3.14", "4.1", "4.2", "4.3", "4.4", "module",
];

fn param(params: &BTreeMap<String, String>, key: &str, default: u32) -> Result<u32, VerifyError> {
    match params.get(key) {
        None => Ok(default),
        Some(v) => v.trim().parse().map_err(|_| VerifyError::BadParam(format!("{key}={v}"))),
    }
}

fn param_list(params: &BTreeMap<String, String>, key: &str, default: &[u32]) -> Result<Vec<u32>, VerifyError> {
    match params.get(key) {
        None => Ok(default.to_vec()),
        Some(v) => v
            .split(',')
            .map(|s| s.trim().parse().map_err(|_| VerifyError::BadParam(format!("{key}={v}"))))
            .collect(),
    }
}

/// Runs the named check. Unknown parameters are ignored; malformed values
/// of known ones are errors.
pub fn verify_lemma(id: &str, params: &BTreeMap<String, String>) -> Result<LemmaReport, VerifyError> {
    let p = |k: &str, d: u32| param(params, k, d);
    let details = match id {
        "brackets" => check_bracket_oracles(),
        "relations" => check_relation_suite().into_iter().map(Record::from).collect(),
        "jacobi" => check_jacobi(),
        "dims" => check_graded_dimensions(),
        "hypercharge" => check_hypercharge(),
        "3.1" => check_model(p("nmax", 4)?),
        "3.2" => check_dbar_structure(p("pmax", 2)?, p("smax", 2)?),
        "3.3" => check_dbar_commutation(p("pmax", 3)?),
        "3.4" => check_decomposition(p("pmax", 2)?, p("smax", 2)?),
        "3.5" => check_leading_terms(p("pmax", 3)?, p("amax", 3)?),
        "3.7" => check_commutativity(p("pmax", 3)?),
        "3.8" => check_power_expansion(p("pmax", 3)?, p("kmax", 4)?),
        "3.10" => check_d2_shifts(p("pmax", 3)?),
        "3.12" => {
            let grid = match (params.get("p"), params.get("q")) {
                (None, None) => vec![(1, 1), (2, 1), (2, 2)],
                _ => vec![(p("p", 1)?, p("q", 1)?)],
            };
            check_lambda_families(&grid)
        }
        "3.13" => check_kernel_tables(true, p("pmax", 4)?, p("qmax", 4)?),
        "3.14" => check_kernel_tables(false, p("pmax", 4)?, p("qmax", 4)?),
        "4.1" => {
            let rs = param_list(params, "r", &[0, 1])?;
            check_theorem_scan(p("pmax", 2)?, p("qmax", 2)?, &rs, p("max_depth", 3)?)
        }
        "4.2" => check_filtration(),
        "4.3" => check_y_and_reorder(),
        "4.4" => check_annihilation(p("nmax", 3)?),
        "module" => check_module_axioms(),
        _ => return Err(VerifyError::UnknownLemma(id.to_string())),
    };
    Ok(LemmaReport::new(id, params.clone(), details))
}

// ---------------------------------------------------------------------------
// Linear algebra helpers

fn identity_kernel(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rational::zero(); n];
            v[i] = Rational::one();
            v
        })
        .collect()
}

/// Joint kernel of the maps whose column images are given.
fn kernel_of_images<K: Ord + Clone>(images: &[BTreeMap<K, Rational>]) -> Vec<Vec<Rational>> {
    let n = images.len();
    let mut rows: BTreeMap<K, Vec<Rational>> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (k, c) in img {
            rows.entry(k.clone()).or_insert_with(|| vec![Rational::zero(); n])[col] = c.clone();
        }
    }
    if rows.is_empty() {
        return identity_kernel(n);
    }
    linalg::kernel(&rows.into_values().collect::<Vec<_>>(), n)
}

/// Rank of a family of sparse vectors.
fn sparse_rank<K: Ord + Clone>(vs: &[BTreeMap<K, Rational>]) -> usize {
    let keys: BTreeSet<K> = vs.iter().flat_map(|v| v.keys().cloned()).collect();
    if keys.is_empty() {
        return 0;
    }
    let index: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let rows: Vec<Vec<Rational>> = vs
        .iter()
        .map(|v| {
            let mut row = vec![Rational::zero(); keys.len()];
            for (k, c) in v {
                row[index[k]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&rows, keys.len())
}

fn sm_coords(v: &SMElement) -> BTreeMap<([u16; 3], Monomial), Rational> {
    v.components()
        .iter()
        .flat_map(|(a, t)| t.poly().terms().map(move |(m, c)| ((*a, *m), c.clone())))
        .collect()
}

fn model(d: [u16; 3], xs: [u16; 3]) -> ModelElement {
    ModelElement::from_monomial(model_monomial(d, xs))
}

fn hw_vector(p: u32, q: u32) -> SMElement {
    SMElement::from_model(ModelElement::from_monomial(hw_monomial(p as u16, q as u16)))
}

fn grid(pmax: u32, qmax: u32) -> Vec<(u32, u32)> {
    (0..=pmax).flat_map(|p| (0..=qmax).map(move |q| (p, q))).collect()
}

/// Runs `f` on every basis vector of `S^{≤smax} ⊗ F(p,q)` for the grid and
/// collects failure descriptions.
fn on_sm_bases<F>(pmax: u32, smax: u32, f: F) -> (usize, Vec<String>)
where
    F: Fn(u32, u32, &SMElement) -> Option<String> + Sync,
{
    let cases: Vec<(u32, u32, SMElement)> = grid(pmax, pmax)
        .into_iter()
        .flat_map(|(p, q)| sm_basis(p, q, smax).into_iter().map(move |v| (p, q, v)))
        .collect();
    let failures: Vec<String> = cases.par_iter().filter_map(|(p, q, v)| f(*p, *q, v)).collect();
    (cases.len(), failures)
}

// ---------------------------------------------------------------------------
// E(5,10) and E(3,6)

fn check_bracket_oracles() -> Vec<Record> {
    let forms: Vec<TwoForm> = (0..5u8)
        .flat_map(|j| ((j + 1)..5).map(move |k| (j, k)))
        .map(|(j, k)| TwoForm::single(Polynomial::one(5), j, k).expect("constant forms are closed"))
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 0..forms.len() {
        for j in (i + 1)..forms.len() {
            checked += 1;
            if odd_bracket(&forms[i], &forms[j]) != wedge_volume_bracket(&forms[i], &forms[j]) {
                failures.push(format!("pair ({i},{j})"));
            }
        }
    }
    // Linear coefficients exercise the contraction terms as well.
    let linear: Vec<TwoForm> = (0..5)
        .flat_map(|v| (0..5u8).flat_map(move |j| ((j + 1)..5).map(move |k| (v, j, k))))
        .filter_map(|(v, j, k)| TwoForm::single(x(v), j, k).ok())
        .collect();
    let mut lin_fail = Vec::new();
    for a in &linear {
        for b in &linear {
            if odd_bracket(a, b) != wedge_volume_bracket(a, b) {
                lin_fail.push(format!("{:?} {:?}", a.form().terms().count(), b.form().terms().count()));
            }
        }
    }
    vec![
        Record::compare("unordered pairs of distinct constant 2-forms", checked, 45),
        Record::holds("epsilon rule equals wedge-volume contraction on constant forms", checked, &failures),
        Record::holds(
            "epsilon rule equals wedge-volume contraction on closed linear forms",
            linear.len() * linear.len(),
            &lin_fail,
        ),
    ]
}

fn check_jacobi() -> Vec<Record> {
    let set: Vec<SuperElement> = spanning_set().into_iter().map(|(_, e)| e).collect();
    let n = set.len();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i..n).flat_map(move |j| (j..n).map(move |k| (i, j, k))))
        .collect();
    let failures: Vec<String> = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let (a, b, c) = (&set[i], &set[j], &set[k]);
            let pa = a.parity().unwrap_or(0) as i64;
            let pb = b.parity().unwrap_or(0) as i64;
            let lhs = super_bracket(a, &super_bracket(b, c));
            let sign = if pa * pb % 2 == 1 { int(-1) } else { int(1) };
            let rhs = super_bracket(&super_bracket(a, b), c).add(&super_bracket(b, &super_bracket(a, c)).scale(&sign));
            (lhs != rhs).then(|| format!("({i},{j},{k})"))
        })
        .collect();
    vec![
        Record::compare("spanning set size", n, 39),
        Record::holds("super Jacobi identity on unordered triples", triples.len(), &failures),
    ]
}

fn check_graded_dimensions() -> Vec<Record> {
    let dims: Vec<String> = (-2..=1).map(|d| graded_component(d).len().to_string()).collect();
    vec![Record::compare("dim g_-2, g_-1, g_0, g_1", dims.join(", "), "3, 6, 12, 18")]
}

fn check_hypercharge() -> Vec<Record> {
    let y = named("Y");
    let mut failures = Vec::new();
    let set = spanning_set();
    for (name, a) in &set {
        let deg = a.degree(Grading::Consistent).expect("homogeneous");
        if super_bracket(&y, a) != a.scale(&rat(deg, 3)) {
            failures.push(name.clone());
        }
    }
    vec![Record::holds("[Y, a] = (deg a / 3) a on the spanning set", set.len(), &failures)]
}

// ---------------------------------------------------------------------------
// The sl(3) model and S ⊗ M

/// Highest weight lines of the bidegree `(m, n)` component of the model.
pub fn model_hwv_lines(m: u32, n: u32) -> Vec<ModelElement> {
    let basis = bigraded_basis(m, n);
    let images: Vec<BTreeMap<(usize, Monomial), Rational>> = basis
        .iter()
        .map(|b| {
            let t = ModelElement::from_monomial(*b);
            let mut img = BTreeMap::new();
            for (k, e) in ["e1", "e2"].iter().enumerate() {
                for (mono, c) in model_act_g0(&g0_generator(e), &t).poly().terms() {
                    img.insert((k, *mono), c.clone());
                }
            }
            img
        })
        .collect();
    kernel_of_images(&images)
        .into_iter()
        .map(|v| {
            basis
                .iter()
                .zip(&v)
                .fold(ModelElement::zero(), |acc, (b, c)| acc.add(&ModelElement::from_monomial(*b).scale(c)))
        })
        .collect()
}

fn check_model(nmax: u32) -> Vec<Record> {
    let mut dim_fail = Vec::new();
    let mut hw_fail = Vec::new();
    let mut checked = 0;
    for (m, n) in grid(nmax, nmax) {
        checked += 1;
        let dim = bigraded_basis(m, n).len() as u64;
        if dim != weyl_dimension(m as u64, n as u64) {
            dim_fail.push(format!("({m},{n}): {dim}"));
        }
        let lines = model_hwv_lines(m, n);
        let hw = ModelElement::from_monomial(hw_monomial(m as u16, n as u16));
        if lines.len() != 1 || lines[0] != hw {
            hw_fail.push(format!("({m},{n}): {} lines", lines.len()));
        }
    }
    vec![
        Record::holds("bidegree component dimension equals the Weyl dimension", checked, &dim_fail),
        Record::holds("one highest weight line per bidegree, spanned by [dp3^n x1^m]", checked, &hw_fail),
    ]
}

fn dominant_weights(p: u32, q: u32, n: u32) -> BTreeSet<(i64, i64)> {
    sm_basis(p, q, n)
        .iter()
        .filter(|v| v.s_degrees() == vec![n])
        .filter_map(sm_weight_of)
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .collect()
}

/// Exponents `α` with `|α| = n`, `α1 ≤ p`, `α2 ≤ q` and the given weight.
fn admissible_alphas(p: u32, q: u32, n: u32, weight: (i64, i64)) -> Vec<[u16; 3]> {
    monomials_of_degree(3, n)
        .into_iter()
        .map(|m| [m.0[0], m.0[1], m.0[2]])
        .filter(|a| a[0] as u32 <= p && a[1] as u32 <= q)
        .filter(|a| {
            let (a1, a2, a3) = (a[0] as i64, a[1] as i64, a[2] as i64);
            (p as i64 - a1 + a2, q as i64 - a2 + a3) == weight
        })
        .collect()
}

fn check_dbar_structure(pmax: u32, smax: u32) -> Vec<Record> {
    let one = SMElement::from_model(ModelElement::one());
    let weights: Vec<String> = (1..=3)
        .map(|i| {
            let v = dbar_apply(i, &one);
            match (is_sl3_hwv(&v), sm_weight_of(&v)) {
                (true, Some((a, b))) => format!("({a},{b})"),
                _ => "not hwv".to_string(),
            }
        })
        .collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for (p, q) in grid(pmax, pmax) {
        for n in 0..=smax {
            for w in dominant_weights(p, q, n) {
                checked += 1;
                let space = hwv_space(p, q, n, w);
                let alphas = admissible_alphas(p, q, n, w);
                let images: Vec<_> = alphas
                    .iter()
                    .map(|a| {
                        sm_coords(&dbar_alpha_apply(
                            *a,
                            &hw_vector(p - a[0] as u32, q - a[1] as u32),
                        ))
                    })
                    .collect();
                let mut both: Vec<_> = space.iter().map(sm_coords).collect();
                both.extend(images.iter().cloned());
                if space.len() != alphas.len()
                    || sparse_rank(&images) != alphas.len()
                    || sparse_rank(&both) != alphas.len()
                {
                    failures.push(format!("F({p},{q}) S^{n} weight {w:?}"));
                }
            }
        }
    }
    vec![
        Record::compare("weights of the highest weight vectors Dbar1, Dbar2, Dbar3", weights.join(" "), "(0,0) (1,0) (0,1)"),
        Record::holds(
            "highest weight vectors of S^n (x) F(p,q) are spanned by Dbar^alpha [dp3^(q-a2) x1^(p-a1)]",
            checked,
            &failures,
        ),
    ]
}

fn check_dbar_commutation(pmax: u32) -> Vec<Record> {
    let (n1, f1) = on_sm_bases(pmax, 2, |p, q, v| {
        for i in 2..=3 {
            for j in 1..i {
                if d_apply(i, &dbar_apply(j, v)) != dbar_apply(j, &d_apply(i, v)) {
                    return Some(format!("D{i} Dbar{j} on F({p},{q}) {v}"));
                }
            }
        }
        None
    });
    let mut f2 = Vec::new();
    let mut n2 = 0;
    for (p, q) in grid(pmax, pmax) {
        for k in 0..=2u16 {
            n2 += 1;
            let (pp, qq) = (p as u16, q as u16);
            let s = [0, 0, k];
            let v = SMElement::term(s, model([0, 0, qq], [pp, 0, 0]));
            let rhs1 = if p == 0 {
                SMElement::zero()
            } else {
                dbar_apply(1, &SMElement::term(s, model([0, 0, qq], [pp - 1, 0, 0]))).scale(&int((p * (p + q + 1)) as i64))
            };
            let rhs2 = if q == 0 {
                SMElement::zero()
            } else {
                dbar_apply(2, &SMElement::term(s, model([0, 0, qq - 1], [pp, 0, 0]))).scale(&int(q as i64))
            };
            if d_apply(1, &v) != rhs1 || d_apply(2, &v) != rhs2 || d_apply(3, &v) != dbar_apply(3, &v) {
                f2.push(format!("({p},{q}) s = dh3^{k}"));
            }
        }
    }
    let v = SMElement::from_model(model([0; 3], [1, 0, 0]));
    let target = dbar_apply(1, &SMElement::from_model(ModelElement::one())).scale(&int(2));
    let displayed = if d1_displayed_variant().apply(&v) == target { "holds" } else { "fails" };
    vec![
        Record::holds("D_i Dbar_j = Dbar_j D_i for j < i on S^{<=2} (x) F(p,q)", n1, &f1),
        Record::holds(
            "D_i(s[dp3^q x1^p]) relates to Dbar_i for s = dh3^k (sl(3)-highest in S)",
            n2,
            &f2,
        ),
        Record::compare("displayed D1 variant intertwines on 1(x)[x1]", displayed, "fails"),
    ]
}

fn check_decomposition(pmax: u32, smax: u32) -> Vec<Record> {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (p, q) in grid(pmax, pmax) {
        for n in 0..=smax {
            for w in dominant_weights(p, q, n) {
                let space = hwv_space(p, q, n, w);
                if space.len() != admissible_alphas(p, q, n, w).len() {
                    failures.push(format!("F({p},{q}) S^{n} {w:?}: {} lines", space.len()));
                }
                for v in space {
                    checked += 1;
                    match hwv_decompose(&v, p, q) {
                        Ok(c) if hwv_reconstruct(&c, p, q) == v => {}
                        Ok(_) => failures.push(format!("F({p},{q}) {v}: reconstruction differs")),
                        Err(e) => failures.push(format!("F({p},{q}) {v}: {e}")),
                    }
                }
            }
        }
    }
    let mut vanish = Vec::new();
    let mut nv = 0;
    for (p, q) in grid(pmax, pmax) {
        for a in monomials_of_degree(3, 3).into_iter().chain(monomials_of_degree(3, 2)) {
            let alpha = [a.0[0], a.0[1], a.0[2]];
            nv += 1;
            let zero = d_alpha_apply(alpha, &hw_vector(p, q)).is_zero();
            let expect_zero = alpha[0] as u32 > p || alpha[1] as u32 > q;
            if zero != expect_zero {
                vanish.push(format!("({p},{q}) alpha {alpha:?}"));
            }
        }
    }
    vec![
        Record::holds("highest weight vectors decompose uniquely as sum c_alpha D^alpha m0", checked, &failures),
        Record::holds("D^alpha m0 = 0 exactly when alpha1 > p or alpha2 > q", nv, &vanish),
    ]
}

/// `h^[k] h1^[k] h2^[l] t` on the model.
fn cartan_falling(t: &ModelElement, k: u16, l: u16) -> ModelElement {
    let mut x = SMElement::from_model(t.clone());
    let h1 = g0_generator("h1");
    let h2 = g0_generator("h2");
    for s in 0..k as i64 {
        x = h_shifted(s).apply(&x);
        x = sl3_act(&h1, &int(-s), &x);
    }
    for s in 0..l as i64 {
        x = sl3_act(&h2, &int(-s), &x);
    }
    x.component([0; 3])
}

fn alphas_up_to(n: u32) -> Vec<[u16; 3]> {
    (0..=n)
        .flat_map(|d| monomials_of_degree(3, d))
        .map(|m| [m.0[0], m.0[1], m.0[2]])
        .collect()
}

fn check_leading_terms(pmax: u32, amax: u32) -> Vec<Record> {
    // Operator form on 1 ⊗ t.
    let mut f1 = Vec::new();
    let mut n1 = 0;
    for (p, q) in grid(pmax, pmax) {
        for b in bigraded_basis(p, q) {
            let t = ModelElement::from_monomial(b);
            for alpha in alphas_up_to(amax) {
                n1 += 1;
                let v = d_alpha_apply(alpha, &SMElement::from_model(t.clone()));
                let above = v.components().keys().any(|s| s > &alpha);
                if above || v.component(alpha) != cartan_falling(&t, alpha[0], alpha[1]) {
                    f1.push(format!("alpha {alpha:?} on {t}"));
                }
            }
        }
    }
    // The same for A^k: ∂̂1^k h1^[k].
    let mut f2 = Vec::new();
    let mut n2 = 0;
    let h1 = g0_generator("h1");
    for (p, q) in grid(pmax, pmax) {
        for b in bigraded_basis(p, q) {
            let t = ModelElement::from_monomial(b);
            for k in 1..=amax as u16 {
                n2 += 1;
                let v = op_a().pow(k as u32).apply(&SMElement::from_model(t.clone()));
                let mut expect = SMElement::from_model(t.clone());
                for s in 0..k as i64 {
                    expect = sl3_act(&h1, &int(-s), &expect);
                }
                let top = [k, 0, 0];
                if v.components().keys().any(|s| s > &top) || v.component(top) != expect.component([0; 3]) {
                    f2.push(format!("k={k} on {t}"));
                }
            }
        }
    }
    // Leading terms on the highest weight vector.
    let mut f3 = Vec::new();
    let mut n3 = 0;
    for (p, q) in grid(pmax, pmax) {
        for alpha in alphas_up_to(amax) {
            if alpha[0] as u32 > p || alpha[1] as u32 > q {
                continue;
            }
            n3 += 1;
            let coef = falling(&int(p as i64), alpha[0] as u32)
                * falling(&int((p + q + 1) as i64), alpha[0] as u32)
                * falling(&int(q as i64), alpha[1] as u32);
            let bar = dbar_alpha_apply(alpha, &hw_vector(p - alpha[0] as u32, q - alpha[1] as u32));
            let got = lht(&d_alpha_apply(alpha, &hw_vector(p, q)));
            let want = lht(&bar).map(|l| (l.sigma, l.leading.scale(&coef)));
            if got.map(|l| (l.sigma, l.leading)) != want {
                f3.push(format!("({p},{q}) alpha {alpha:?}"));
            }
        }
    }
    // lht of Dbar^alpha on [dp3^n x1^m].
    let mut f4 = Vec::new();
    let mut n4 = 0;
    for (m, n) in grid(2, 2) {
        for alpha in alphas_up_to(amax) {
            n4 += 1;
            let l = lht(&dbar_alpha_apply(alpha, &hw_vector(m, n)));
            let want = model([0, 0, n as u16 + alpha[1]], [m as u16 + alpha[0], 0, 0]);
            if l.map(|l| (l.sigma, l.leading)) != Ok((alpha, want)) {
                f4.push(format!("({m},{n}) alpha {alpha:?}"));
            }
        }
    }
    vec![
        Record::holds("lht D^alpha = dh^alpha h^[a1] h1^[a1] h2^[a2] on 1 (x) t", n1, &f1),
        Record::holds("lht A^k = dh1^k h1^[k] on 1 (x) t", n2, &f2),
        Record::holds("lht D^alpha m0 = p^[a1] (p+q+1)^[a1] q^[a2] lht Dbar^alpha [..]", n3, &f3),
        Record::holds("lht Dbar^alpha [dp3^n x1^m] = dh^alpha [dp3^(n+a2) x1^(m+a1)]", n4, &f4),
    ]
}

fn check_commutativity(pmax: u32) -> Vec<Record> {
    let (n, failures) = on_sm_bases(pmax, 2, |p, q, v| {
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            if d_apply(i, &d_apply(j, v)) != d_apply(j, &d_apply(i, v)) {
                return Some(format!("[D{i},D{j}] on F({p},{q}) {v}"));
            }
        }
        None
    });
    let (nd, fd) = on_sm_bases(1, 1, |p, q, v| {
        let d1 = d1_displayed_variant();
        (d1.apply(&d_apply(2, v)) != d_apply(2, &d1.apply(v))).then(|| format!("F({p},{q}) {v}"))
    });
    let displayed = if fd.is_empty() { "commutes" } else { "does not commute" };
    vec![
        Record::holds("[D_i, D_j] = 0 on S^{<=2} (x) F(p,q)", n, &failures),
        Record::compare(
            format!("displayed D1 variant against D2 on {nd} basis vectors of S^{{<=1}} (x) F(p,q), p,q <= 1"),
            displayed,
            "does not commute",
        ),
    ]
}

fn commutator_on(a: &OperatorWord, b: &OperatorWord, v: &SMElement) -> SMElement {
    a.apply(&b.apply(v)).sub(&b.apply(&a.apply(v)))
}

fn check_power_expansion(pmax: u32, kmax: u32) -> Vec<Record> {
    let instances = [
        (PowerOf::D1, "D1", op_a(), op_b(), OperatorWord::hat(2), h_shifted(0), d_op(1)),
        (
            PowerOf::D2,
            "D2",
            OperatorWord::hat(1),
            OperatorWord::sl3("f2", int(0)),
            OperatorWord::hat(2),
            OperatorWord::sl3("h2", int(0)),
            d_op(2),
        ),
        (
            PowerOf::A,
            "A",
            OperatorWord::hat(0),
            OperatorWord::sl3("f1", int(0)),
            OperatorWord::hat(1),
            OperatorWord::sl3("h1", int(0)),
            op_a(),
        ),
    ];
    let mut out = Vec::new();
    for (which, name, a, b, d, h, full) in &instances {
        let (n, failures) = on_sm_bases(pmax, 2, |p, q, v| {
            let checks = [
                ("[a,b]", commutator_on(a, b, v), SMElement::zero()),
                ("[d,b]", commutator_on(d, b, v), a.apply(v)),
                ("[d,a]", commutator_on(d, a, v), SMElement::zero()),
                ("[h,b]", commutator_on(h, b, v), b.apply(v).scale(&int(-2))),
                ("[h,a]", commutator_on(h, a, v), a.apply(v).scale(&int(-1))),
                ("[h,d]", commutator_on(h, d, v), d.apply(v)),
            ];
            checks
                .into_iter()
                .find(|(_, l, r)| l != r)
                .map(|(c, _, _)| format!("{c} on F({p},{q}) {v}"))
        });
        out.push(Record::holds(format!("commutation hypotheses for {name}"), n, &failures));
        let expansions: Vec<OperatorWord> = (1..=kmax).map(|k| dpow_expand(k, *which)).collect();
        let (n, failures) = on_sm_bases(pmax, 2, |p, q, v| {
            let mut iter = v.clone();
            for (k, e) in expansions.iter().enumerate() {
                iter = full.apply(&iter);
                if e.apply(v) != iter {
                    return Some(format!("k={} on F({p},{q}) {v}", k + 1));
                }
            }
            None
        });
        out.push(Record::holds(format!("expansion of {name}^k equals iterated application, k <= {kmax}"), n, &failures));
    }
    out
}

fn check_d2_shifts(pmax: u32) -> Vec<Record> {
    let d2 = d_op(2);
    let (n, failures) = on_sm_bases(pmax, 2, |p, q, v| {
        let ok = d2.apply(&hat_mul(2, v)) == hat_mul(2, &d2.apply(v))
            && d2.apply(&hat_mul(0, v)) == hat_mul(0, &d2.apply(v));
        (!ok).then(|| format!("F({p},{q}) {v}"))
    });
    let shift_holds = |m: i64| {
        let shifted = d2_shifted(m);
        on_sm_bases(pmax, 2, |p, q, v| {
            (d2.apply(&hat_mul(1, v)) != hat_mul(1, &shifted.apply(v))).then(|| format!("F({p},{q}) {v}"))
        })
    };
    let (ns, fs) = shift_holds(-1);
    let (_, fp) = shift_holds(1);
    let printed = Record {
        claim: "D2 dh2 = dh2 D2{+1} as printed".to_string(),
        computed: if fp.is_empty() {
            "holds".to_string()
        } else {
            format!("fails on {} of {ns} cases; D2 dh2 = dh2 D2{{-1}} holds", fp.len())
        },
        expected: "holds".to_string(),
        status: if fp.is_empty() { Status::Pass } else { Status::Deviation },
    };
    // Leading term of D2 f for f = b_i + 2 b_j.
    let mut failures2 = Vec::new();
    let mut checked = 0;
    let mut skipped = 0;
    let h2 = g0_generator("h2");
    for (p, q) in grid(pmax.min(2), pmax.min(2)) {
        let basis = sm_basis(p, q, 1);
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let f = basis[i].add(&basis[j].scale(&int(2)));
                let top = lht(&f).expect("nonzero");
                let a2 = top.sigma[1] as i64;
                let u = SMElement::from_model(top.leading.clone());
                if sl3_act(&h2, &int(-a2), &u).is_zero() {
                    skipped += 1;
                    continue;
                }
                checked += 1;
                let mut rhs = d2_shifted(-a2).apply(&u);
                for (k, &e) in top.sigma.iter().enumerate() {
                    for _ in 0..e {
                        rhs = hat_mul(k, &rhs);
                    }
                }
                if lht(&d_apply(2, &f)) != lht(&rhs) {
                    failures2.push(format!("F({p},{q}) f = {f}"));
                }
            }
        }
    }
    vec![
        Record::holds("[D2, dh3] = [D2, dh1] = 0", n, &failures),
        Record::holds("D2 dh2 = dh2 D2{-1}", ns, &fs),
        printed,
        Record::holds(
            format!("lht(D2 f) = lht(dh^alpha D2{{-alpha2}} u) where (h2 - alpha2) u != 0 ({skipped} pairs skipped)"),
            checked,
            &failures2,
        ),
    ]
}

// ---------------------------------------------------------------------------
// Highest weight vectors in Λ^± ⊗ F

/// A highest weight line in `Λ^± ⊗ F(p,q)`.
#[derive(Clone, Debug)]
pub struct HwvLine {
    pub tag: Option<String>,
    pub degree: u32,
    pub weight: (i64, i64),
    pub vector: InducedElement,
}

/// Lines found by [`enumerate_hwv_lambda`] or [`kernel_e0prime`], with any
/// disagreement with the expected families.
#[derive(Clone, Debug)]
pub struct LineReport {
    pub lines: Vec<HwvLine>,
    pub issues: Vec<String>,
}

fn lambda_module(p: u32, q: u32) -> InducedModule {
    InducedModule::new(IrrepF::new(p, q, 0, int(0)))
}

fn lambda_mono(plus: bool, mask: u8) -> PBWMonomial {
    if plus {
        PBWMonomial { alpha: [0; 3], minus: 0, plus: mask }
    } else {
        PBWMonomial { alpha: [0; 3], minus: mask, plus: 0 }
    }
}

/// Columns of `Λ^±_k ⊗ F` grouped by (degree, sl(3) weight).
type Columns = BTreeMap<(u32, (i64, i64)), Vec<(PBWMonomial, usize)>>;

fn lambda_columns(module: &InducedModule, plus: bool) -> Columns {
    let mut out = Columns::new();
    for mask in 0u8..8 {
        let mono = lambda_mono(plus, mask);
        for f in 0..module.irrep().dim() {
            let w = module.weight_of(&mono, f);
            out.entry((mask.count_ones(), (w.a, w.b))).or_default().push((mono, f));
        }
    }
    out
}

/// Joint kernels of `e1`, `e2` and `extra` on each dominant (degree, weight)
/// block of `Λ^± ⊗ F`.
fn lambda_kernels(
    module: &InducedModule,
    plus: bool,
    extra: Option<&SuperElement>,
) -> Vec<(u32, (i64, i64), Vec<InducedElement>)> {
    let mut ops = vec![named("e1"), named("e2")];
    ops.extend(extra.cloned());
    lambda_columns(module, plus)
        .into_iter()
        .filter(|((_, (a, b)), _)| *a >= 0 && *b >= 0)
        .map(|((deg, w), cols)| {
            let images: Vec<BTreeMap<(usize, PBWMonomial, usize), Rational>> = cols
                .iter()
                .map(|(m, f)| {
                    let mut img = BTreeMap::new();
                    for (k, op) in ops.iter().enumerate() {
                        for ((mm, ff), c) in module.act_on_basis(op, *m, *f, Order::MinusPlus).iter() {
                            img.insert((k, *mm, *ff), c.clone());
                        }
                    }
                    img
                })
                .collect();
            let vectors = kernel_of_images(&images)
                .into_iter()
                .map(|v| {
                    let terms: Terms = cols
                        .iter()
                        .zip(v)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (*k, c))
                        .collect();
                    InducedElement::from_terms(Order::MinusPlus, terms)
                })
                .collect();
            (deg, w, vectors)
        })
        .collect()
}

/// `Σ c · d_{i1} ... d_{ik} ⊗ t` with the d's in the written order (1-based).
fn lambda_vector(module: &InducedModule, plus: bool, parts: &[(i64, Vec<usize>, ModelElement)]) -> InducedElement {
    let (p, q) = (module.irrep().p, module.irrep().q);
    let mut terms = Terms::new();
    for (c, idx, t) in parts {
        if t.is_zero() {
            continue;
        }
        let zero_based: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        let mut inversions = 0;
        for a in 0..zero_based.len() {
            for b in (a + 1)..zero_based.len() {
                if zero_based[a] > zero_based[b] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { *c } else { -*c };
        let mask = zero_based.iter().fold(0u8, |m, &i| m | (1 << i));
        let mono = lambda_mono(plus, mask);
        // Components of other bidegrees are outside F and contribute nothing.
        if t.poly().terms().any(|(m, _)| m.partial_degree(0..3) != q || m.partial_degree(3..6) != p) {
            continue;
        }
        for (f, v) in module.irrep().model_coords(t, 0) {
            let e = terms.entry((mono, f)).or_insert_with(Rational::zero);
            *e += v * int(sign);
        }
    }
    terms.retain(|_, c| !c.is_zero());
    InducedElement::from_terms(Order::MinusPlus, terms)
}

const FAMILIES: [(&str, u32, (i64, i64)); 8] = [
    ("(00)'", 0, (0, 0)),
    ("(+0)", 1, (1, 0)),
    ("(-+)", 1, (-1, 1)),
    ("(0-)", 1, (0, -1)),
    ("(0+)", 2, (0, 1)),
    ("(-0)", 2, (-1, 0)),
    ("(+-)", 2, (1, -1)),
    ("(00)''", 3, (0, 0)),
];

fn xmul(t: &ModelElement, xs: [u16; 3], ds: [u16; 3]) -> ModelElement {
    model(ds, xs).mul(t)
}

/// The displayed family vector for `F(p,q)`, or `None` when its exponents
/// would be negative.
fn family_vector(module: &InducedModule, plus: bool, tag: &str) -> Option<InducedElement> {
    let (p, q) = (module.irrep().p as i64, module.irrep().q as i64);
    let base = |qq: i64, pp: i64| (qq >= 0 && pp >= 0).then(|| model([0, 0, qq as u16], [pp as u16, 0, 0]));
    let parts: Vec<(i64, Vec<usize>, ModelElement)> = match tag {
        "(00)'" => vec![(1, vec![], base(q, p)?)],
        "(+0)" => vec![(1, vec![1], base(q, p)?)],
        "(-+)" => {
            let b = base(q, p - 1)?;
            vec![(1, vec![1], xmul(&b, [0, 1, 0], [0; 3])), (-1, vec![2], xmul(&b, [1, 0, 0], [0; 3]))]
        }
        "(0-)" => {
            let b = base(q - 1, p)?;
            (1..=3)
                .map(|i| {
                    let mut d = [0; 3];
                    d[i - 1] = 1;
                    (1, vec![i], xmul(&b, [0; 3], d))
                })
                .collect()
        }
        "(0+)" => vec![(1, vec![1, 2], base(q, p)?)],
        "(-0)" => {
            let b = base(q, p - 1)?;
            vec![
                (1, vec![1, 2], xmul(&b, [0, 0, 1], [0; 3])),
                (1, vec![3, 1], xmul(&b, [0, 1, 0], [0; 3])),
                (1, vec![2, 3], xmul(&b, [1, 0, 0], [0; 3])),
            ]
        }
        "(+-)" => {
            let b = base(q - 1, p)?;
            vec![(1, vec![1, 2], xmul(&b, [0; 3], [0, 1, 0])), (1, vec![1, 3], xmul(&b, [0; 3], [0, 0, 1]))]
        }
        "(00)''" => vec![(1, vec![1, 2, 3], base(q, p)?)],
        _ => return None,
    };
    let v = lambda_vector(module, plus, &parts);
    (!v.is_zero()).then_some(v)
}

/// Multiplicity of the irreducible of highest weight `λ` in a module with
/// the given weight multiplicities, by alternating over the Weyl group.
fn weyl_multiplicity(dims: &BTreeMap<(i64, i64), usize>, (a, b): (i64, i64)) -> i64 {
    let d = |x: i64, y: i64| *dims.get(&(a + x, b + y)).unwrap_or(&0) as i64;
    // λ + ρ - wρ for the six Weyl group elements, with α1 = (2,-1), α2 = (-1,2).
    d(0, 0) - d(2, -1) - d(-1, 2) + d(3, 0) + d(0, 3) - d(2, 2)
}

fn in_span(v: &InducedElement, span: &[InducedElement]) -> bool {
    let mut all: Vec<_> = span.iter().map(|e| e.terms().clone()).collect();
    let r = sparse_rank(&all);
    all.push(v.terms().clone());
    sparse_rank(&all) == r
}

/// All sl(3)-highest weight lines of `Λ^± ⊗ F(p,q)` labelled by the
/// matching displayed family.
pub fn enumerate_hwv_lambda(p: u32, q: u32, plus: bool) -> LineReport {
    let module = lambda_module(p, q);
    let mut lines = Vec::new();
    let mut issues = Vec::new();
    let columns = lambda_columns(&module, plus);
    for (deg, w, vectors) in lambda_kernels(&module, plus, None) {
        let dims: BTreeMap<(i64, i64), usize> = columns
            .iter()
            .filter(|((d, _), _)| *d == deg)
            .map(|((_, wt), c)| (*wt, c.len()))
            .collect();
        let mult = weyl_multiplicity(&dims, w);
        if mult != vectors.len() as i64 {
            issues.push(format!(
                "degree {deg} weight {w:?}: kernel gives {} lines, weight multiplicities give {mult}",
                vectors.len()
            ));
        }
        let delta = (w.0 - p as i64, w.1 - q as i64);
        let matching: Vec<(&str, InducedElement)> = FAMILIES
            .iter()
            .filter(|(_, d, dl)| *d == deg && *dl == delta)
            .filter_map(|(tag, _, _)| family_vector(&module, plus, tag).map(|v| (*tag, v)))
            .collect();
        if matching.len() != vectors.len() {
            issues.push(format!(
                "degree {deg} weight {w:?}: {} lines but {} displayed families",
                vectors.len(),
                matching.len()
            ));
        }
        for v in vectors {
            let tag = matching
                .iter()
                .find(|(_, f)| in_span(f, std::slice::from_ref(&v)))
                .map(|(t, _)| t.to_string());
            if tag.is_none() {
                issues.push(format!("degree {deg} weight {w:?}: line matches no family"));
            }
            lines.push(HwvLine {
                tag,
                degree: deg,
                weight: w,
                vector: v,
            });
        }
    }
    LineReport { lines, issues }
}

fn check_lambda_families(grid: &[(u32, u32)]) -> Vec<Record> {
    let mut out = Vec::new();
    for &(p, q) in grid {
        for plus in [true, false] {
            let sign = if plus { "+" } else { "-" };
            let report = enumerate_hwv_lambda(p, q, plus);
            out.push(Record::holds(
                format!("lines of Lambda^{sign} (x) F({p},{q}) match displayed families with Weyl multiplicities"),
                report.lines.len(),
                &report.issues,
            ));
            if p >= 1 && q >= 1 {
                let tags: BTreeSet<String> = report.lines.iter().filter_map(|l| l.tag.clone()).collect();
                let all: BTreeSet<String> = FAMILIES.iter().map(|f| f.0.to_string()).collect();
                out.push(Record::compare(
                    format!("families found in Lambda^{sign} (x) F({p},{q})"),
                    tags.into_iter().collect::<Vec<_>>().join(" "),
                    all.into_iter().collect::<Vec<_>>().join(" "),
                ));
            }
        }
    }
    out
}

/// The types T0..T4 expected for `F(p,q)`.
pub fn expected_kernel_types(p: u32, q: u32) -> Vec<&'static str> {
    let mut t = vec!["T0"];
    if q == 0 {
        t.push("T1");
    }
    if p == 0 && q >= 1 {
        t.push("T2");
    }
    if (p, q) == (0, 1) {
        t.push("T3");
    }
    if (p, q) == (0, 0) {
        t.push("T4");
    }
    t
}

fn kernel_type_vector(module: &InducedModule, plus: bool, tag: &str) -> Option<(u32, InducedElement)> {
    let (p, q) = (module.irrep().p as i64, module.irrep().q as i64);
    let delta = |q: i64| -> Vec<(i64, Vec<usize>, ModelElement)> {
        (1..=3)
            .map(|i| {
                let mut d = [0; 3];
                d[i - 1] = 1;
                d[2] += q as u16;
                (1, vec![i], model(d, [0; 3]))
            })
            .collect()
    };
    let (deg, parts) = match tag {
        "T0" => (0, vec![(1, vec![], model([0, 0, q as u16], [p as u16, 0, 0]))]),
        "T1" if q == 0 => (1, vec![(1, vec![1], model([0; 3], [p as u16, 0, 0]))]),
        "T2" if p == 0 && q >= 1 => (1, delta(q - 1)),
        "T3" if (p, q) == (0, 1) => (
            2,
            vec![(1, vec![1, 2], model([0, 1, 0], [0; 3])), (1, vec![1, 3], model([0, 0, 1], [0; 3]))],
        ),
        "T4" if (p, q) == (0, 0) => (3, vec![(1, vec![1, 2, 3], ModelElement::one())]),
        _ => return None,
    };
    let v = lambda_vector(module, plus, &parts);
    (!v.is_zero()).then_some((deg, v))
}

/// Highest weight lines of `Λ^+ ⊗ F` killed by `e'0` (`plus`) or of
/// `Λ^- ⊗ F` killed by `e'1`, labelled by the matching type T0..T4.
pub fn kernel_e0prime(p: u32, q: u32, plus: bool) -> LineReport {
    let module = lambda_module(p, q);
    let op = named(if plus { "e0prime" } else { "e1prime" });
    let candidates: Vec<(&str, u32, InducedElement)> = ["T0", "T1", "T2", "T3", "T4"]
        .iter()
        .filter_map(|t| kernel_type_vector(&module, plus, t).map(|(d, v)| (*t, d, v)))
        .collect();
    let mut lines = Vec::new();
    let mut issues = Vec::new();
    for (deg, w, vectors) in lambda_kernels(&module, plus, Some(&op)) {
        for v in vectors {
            let tag = candidates
                .iter()
                .find(|(_, d, c)| *d == deg && in_span(c, std::slice::from_ref(&v)))
                .map(|(t, _, _)| t.to_string());
            if tag.is_none() {
                issues.push(format!("degree {deg} weight {w:?}: line matches no type"));
            }
            lines.push(HwvLine {
                tag,
                degree: deg,
                weight: w,
                vector: v,
            });
        }
    }
    LineReport { lines, issues }
}

fn check_kernel_tables(plus: bool, pmax: u32, qmax: u32) -> Vec<Record> {
    let cases = grid(pmax, qmax);
    let results: Vec<(u32, u32, LineReport)> = cases
        .par_iter()
        .map(|&(p, q)| (p, q, kernel_e0prime(p, q, plus)))
        .collect();
    let (op, sign) = if plus { ("e'0", "+") } else { ("e'1", "-") };
    results
        .into_iter()
        .map(|(p, q, r)| {
            let mut tags: Vec<String> = r.lines.iter().map(|l| l.tag.clone().unwrap_or_else(|| "?".into())).collect();
            tags.sort();
            let mut rec = Record::compare(
                format!("kernel of {op} on highest weight vectors of Lambda^{sign} (x) F({p},{q})"),
                tags.join(" "),
                expected_kernel_types(p, q).join(" "),
            );
            if !r.issues.is_empty() {
                rec.status = Status::Fail;
                rec.computed = format!("{} [{}]", rec.computed, r.issues.join("; "));
            }
            rec
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Induced modules

/// One row of the scan: `F(p,q;r;y)` with `y` free.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub conditions: Vec<YCondition>,
}

/// Parametric singular vector search over a grid of `(p, q, r)`. Without
/// `include_boundary` only `p, q ≥ 1` are scanned. Rows are sorted by
/// `(p, q, r)`.
pub fn theorem41_scan(pmax: u32, qmax: u32, rs: &[u32], max_depth: u32, include_boundary: bool) -> Vec<ScanRow> {
    let lo = if include_boundary { 0 } else { 1 };
    let mut jobs: Vec<(u32, u32, u32)> = (lo..=pmax)
        .flat_map(|p| (lo..=qmax).flat_map(move |q| rs.iter().map(move |&r| (p, q, r))))
        .collect();
    jobs.sort_unstable();
    jobs.dedup();
    let mut rows: Vec<ScanRow> = jobs
        .par_iter()
        .map(|&(p, q, r)| ScanRow {
            p,
            q,
            r,
            conditions: parametric_y_search(p, q, r, max_depth),
        })
        .collect();
    rows.sort_by_key(|row| (row.p, row.q, row.r));
    rows
}

fn check_theorem_scan(pmax: u32, qmax: u32, rs: &[u32], max_depth: u32) -> Vec<Record> {
    theorem41_scan(pmax, qmax, rs, max_depth, false)
        .into_iter()
        .map(|row| {
            let found: Vec<String> = row
                .conditions
                .iter()
                .map(|c| format!("depth {} ({},{};{}): {}", c.depth, c.a, c.b, c.r, c.condition))
                .collect();
            Record::compare(
                format!("singular vector conditions for F({},{};{};y) up to depth {max_depth}", row.p, row.q, row.r),
                if found.is_empty() { "none".to_string() } else { found.join("; ") },
                "none",
            )
        })
        .collect()
}

fn test_module() -> InducedModule {
    InducedModule::new(IrrepF::new(1, 1, 1, rat(1, 2)))
}

fn masks_up_to(k: u32) -> Vec<u8> {
    (0u8..8).filter(|m| m.count_ones() <= k).collect()
}

fn monomials(mmax: u32, kmax: u32) -> Vec<PBWMonomial> {
    let mut out = Vec::new();
    for m in 0..=mmax {
        for a in monomials_of_degree(3, m) {
            for minus in masks_up_to(kmax) {
                for plus in masks_up_to(kmax) {
                    out.push(PBWMonomial {
                        alpha: [a.0[0] as u8, a.0[1] as u8, a.0[2] as u8],
                        minus,
                        plus,
                    });
                }
            }
        }
    }
    out
}

fn check_filtration() -> Vec<Record> {
    let mut out: Vec<Record> = check_relation_suite()
        .into_iter()
        .filter(|r| r.relation.starts_with("[e0prime, d"))
        .map(Record::from)
        .collect();
    let module = test_module();
    let e0p = named("e0prime");
    let cases: Vec<(PBWMonomial, usize)> = monomials(2, 2)
        .into_iter()
        .flat_map(|m| (0..module.irrep().dim()).map(move |f| (m, f)))
        .collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(mono, f)| {
            let (m, i, j) = (mono.hat_degree(), mono.minus_len(), mono.plus_len());
            let img = module.act_on_basis(&e0p, mono, f, Order::MinusPlus);
            let bad = img.keys().any(|(mm, _)| {
                let key = (mm.hat_degree(), mm.minus_len(), mm.plus_len());
                !((m >= 1 && key == (m - 1, i + 1, j)) || (j >= 1 && key == (m, i, j - 1)))
            });
            bad.then(|| format!("{mono:?} (x) v{f}"))
        })
        .collect();
    out.push(Record::holds(
        "e'0 S^m L-_i L+_j V lies in S^(m-1) L-_(i+1) L+_j V + S^m L-_i L+_(j-1) V (m,i,j <= 2)",
        cases.len(),
        &failures,
    ));
    out
}

fn check_y_and_reorder() -> Vec<Record> {
    let module = test_module();
    let y = named("Y");
    let dim = module.irrep().dim();
    let mut yf = Vec::new();
    let mut ny = 0;
    for depth in 0..=3 {
        for mono in PBWMonomial::of_depth(depth) {
            for f in 0..dim {
                ny += 1;
                let v = InducedElement::basis(Order::MinusPlus, mono, f);
                let ev = expected_y(&module.irrep().y, mono.hat_degree(), mono.minus_len(), mono.plus_len());
                if module.act(&y, &v).expect("Y lies in E(3,6)") != v.scale(&ev) {
                    yf.push(format!("{mono:?} (x) v{f}"));
                }
            }
        }
    }
    let mut rf = Vec::new();
    let mut nr = 0;
    for minus in 0u8..8 {
        for plus in 0u8..8 {
            for f in 0..dim {
                nr += 1;
                let mono = PBWMonomial { alpha: [0; 3], minus, plus };
                let (i, j) = (minus.count_ones(), plus.count_ones());
                let w = module.reorder(&InducedElement::basis(Order::PlusMinus, mono, f), Order::MinusPlus);
                let ok = w.terms().keys().all(|(m, _)| {
                    let s = m.hat_degree();
                    s <= i.min(j) && m.minus_len() == i - s && m.plus_len() == j - s
                });
                if !ok {
                    rf.push(format!("{mono:?} (x) v{f}"));
                }
            }
        }
    }
    vec![
        Record::holds("Y acts on S^m L-_i L+_j V by y - (i+j)/3 - 2m/3 (depth <= 3)", ny, &yf),
        Record::holds("L+_j L-_i V lies in sum_s S^s L-_(i-s) L+_(j-s) V", nr, &rf),
    ]
}

fn check_annihilation(nmax: u32) -> Vec<Record> {
    let module = test_module();
    let dim = module.irrep().dim();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=nmax {
        for h in monomials_of_degree(3, n) {
            let coeff = Polynomial::term(5, Monomial::from_slice(&[h.0[0], h.0[1], h.0[2], 0, 1]), int(1));
            let g = SuperElement::field(coeff, 3).expect("divergence free");
            for k in 1..=n.min(3) {
                for mono in monomials(n - k, 3) {
                    if mono.hat_degree() != n - k || mono.minus_len() != k || mono.plus_len() != k {
                        continue;
                    }
                    for f in 0..dim {
                        checked += 1;
                        let v = InducedElement::basis(Order::MinusPlus, mono, f);
                        if !module.act(&g, &v).expect("lies in E(3,6)").is_zero() {
                            failures.push(format!("h = {g}, {mono:?} (x) v{f}"));
                        }
                    }
                }
            }
        }
    }
    vec![Record::holds(
        format!("h x5 dp4 kills S^(n-k) L-_k L+_k V for deg h = n <= {nmax}, k >= 1"),
        checked,
        &failures,
    )]
}

fn check_module_axioms() -> Vec<Record> {
    let module = InducedModule::new(IrrepF::new(1, 0, 1, rat(1, 3)));
    let dim = module.irrep().dim();
    let gens: Vec<SuperElement> = [
        "e0prime", "e0", "e1prime", "f0", "dminus3", "e1", "f2", "e3", "f3", "Y",
    ]
    .iter()
    .map(|n| named(n))
    .chain([SuperElement::partial(2)])
    .collect();
    let vectors: Vec<InducedElement> = (0..=3)
        .flat_map(PBWMonomial::of_depth)
        .step_by(7)
        .flat_map(|m| (0..dim).step_by(2).map(move |f| InducedElement::basis(Order::MinusPlus, m, f)))
        .collect();
    let mut rep = Vec::new();
    let mut nrep = 0;
    for a in &gens {
        for b in &gens {
            let pa = a.parity().unwrap_or(0) as i64;
            let pb = b.parity().unwrap_or(0) as i64;
            let sign = if pa * pb % 2 == 1 { int(-1) } else { int(1) };
            let ab = super_bracket(a, b);
            for v in &vectors {
                nrep += 1;
                let act = |e: &SuperElement, w: &InducedElement| module.act(e, w).expect("in E(3,6)");
                let lhs = act(a, &act(b, v)).add(&act(b, &act(a, v)).scale(&-sign.clone()));
                if lhs != act(&ab, v) {
                    rep.push(format!("a = {a}, b = {b}, v = {:?}", v.terms().keys().next()));
                }
            }
        }
    }
    let mut ro = Vec::new();
    let mut nro = 0;
    for a in &gens {
        for v in &vectors {
            nro += 1;
            let w = module.reorder(v, Order::PlusMinus);
            let lhs = module.reorder(&module.act(a, v).expect("in E(3,6)"), Order::PlusMinus);
            let rhs = module.act(a, &w).expect("in E(3,6)");
            if lhs != rhs || module.reorder(&w, Order::MinusPlus) != *v {
                ro.push(format!("a = {a}"));
            }
        }
    }
    let gw: Vec<String> = gens
        .iter()
        .filter(|g| g.degree(Grading::Consistent) == Ok(0))
        .filter(|g| g0_weight(g).is_err())
        .map(|g| g.to_string())
        .collect();
    vec![
        Record::holds("a(b v) - (-1)^{|a||b|} b(a v) = [a,b] v", nrep, &rep),
        Record::holds("reorder commutes with the action and round-trips", nro, &ro),
        Record::holds("degree-zero test elements are weight vectors", gens.len(), &gw),
    ]
}

/// Every singular vector found at the given bounds, checked again from
/// scratch; used by the CLI and the tests.
pub fn component_partition_holds(w: &InducedElement) -> bool {
    let mut total = InducedElement::zero(Order::MinusPlus);
    let mut seen = BTreeSet::new();
    for (m, _) in w.terms().keys() {
        seen.insert((m.hat_degree(), m.minus_len(), m.plus_len()));
    }
    for (m, i, j) in seen {
        total = total.add(&component_project(w, m, i, j).expect("(-+) order"));
    }
    total == *w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_alternation_on_the_adjoint() {
        // Weight multiplicities of sl(3) adjoint: six roots and a 2-dimensional zero weight.
        let dims: BTreeMap<(i64, i64), usize> = [
            ((1, 1), 1),
            ((2, -1), 1),
            ((-1, 2), 1),
            ((0, 0), 2),
            ((1, -2), 1),
            ((-2, 1), 1),
            ((-1, -1), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(weyl_multiplicity(&dims, (1, 1)), 1);
        assert_eq!(weyl_multiplicity(&dims, (0, 0)), 0);
    }

    #[test]
    fn expected_types() {
        assert_eq!(expected_kernel_types(0, 0), vec!["T0", "T1", "T4"]);
        assert_eq!(expected_kernel_types(0, 1), vec!["T0", "T2", "T3"]);
        assert_eq!(expected_kernel_types(2, 1), vec!["T0"]);
    }

    #[test]
    fn written_order_sets_the_sign() {
        let module = lambda_module(0, 0);
        let t = ModelElement::one();
        let a = lambda_vector(&module, true, &[(1, vec![3, 1], t.clone())]);
        let b = lambda_vector(&module, true, &[(1, vec![1, 3], t)]);
        assert_eq!(a, b.scale(&int(-1)));
    }

    #[test]
    fn parameters() {
        let p: BTreeMap<String, String> = [("r".to_string(), "0, 2".to_string())].into_iter().collect();
        assert_eq!(param_list(&p, "r", &[1]).unwrap(), vec![0, 2]);
        assert_eq!(param(&p, "pmax", 4).unwrap(), 4);
        assert!(param_list(&[("r".to_string(), "x".to_string())].into_iter().collect(), "r", &[]).is_err());
    }

    #[test]
    fn report_status_is_worst_record() {
        let pass = Record::compare("a", 1, 1);
        let dev = Record { status: Status::Deviation, ..pass.clone() };
        let fail = Record::compare("b", 1, 2);
        assert_eq!(LemmaReport::new("x", BTreeMap::new(), vec![pass.clone()]).status, Status::Pass);
        assert_eq!(LemmaReport::new("x", BTreeMap::new(), vec![pass.clone(), dev.clone()]).status, Status::Deviation);
        assert_eq!(LemmaReport::new("x", BTreeMap::new(), vec![dev, fail]).status, Status::Fail);
    }
}
