//! Expressions for elements of E(5,10).
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := [rational '*'] atom ('*' atom)*
//! atom     := 'x' digit | 'd' digit digit | 'dp' digit | ident | atom '^' nat | '(' expr ')'
//! rational := int ['/' nat]
//! ```
//!
//! `d35` is `dx3 ∧ dx5`, `dp3` is `∂3`, other identifiers are looked up
//! with [`named_element`]. A leading `-` and bare rationals are accepted.

use std::fmt;

use num::{One, Signed};
use thiserror::Error;

use crate::e36::named_element;
use crate::e510::{x, AlgebraError, DiffForm, SuperElement, TwoForm, VectorField, NVARS};
use crate::scalar::{rational_to_short_string, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid element: {0}")]
    Invalid(String),
}

fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError::Syntax { pos, msg: msg.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `x_i`, 1-based.
    X(u8),
    /// `dx_j ∧ dx_k`, 1-based.
    Form(u8, u8),
    /// `∂_i`, 1-based.
    Partial(u8),
    Named(String),
    Pow(Box<Atom>, u32),
    Group(Expr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub atoms: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X(i) => write!(f, "x{i}"),
            Atom::Form(j, k) => write!(f, "d{j}{k}"),
            Atom::Partial(i) => write!(f, "dp{i}"),
            Atom::Named(n) => f.write_str(n),
            Atom::Pow(a, n) => write!(f, "{a}^{n}"),
            Atom::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = t.coeff.abs();
            let atoms: Vec<String> = t.atoms.iter().map(Atom::to_string).collect();
            if atoms.is_empty() {
                f.write_str(&rational_to_short_string(&c))?;
            } else if c.is_one() {
                f.write_str(&atoms.join("*"))?;
            } else {
                write!(f, "{}*{}", rational_to_short_string(&c), atoms.join("*"))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<(usize, u64), ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return syntax(start, "expected a natural number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse() {
            Ok(n) => Ok((start, n)),
            Err(_) => syntax(start, "number too large"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut terms = Vec::new();
        let mut negate = self.eat(b'-');
        loop {
            let mut t = self.term()?;
            if negate {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            negate = match self.peek() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term, ExprError> {
        let mut coeff = Rational::one();
        let mut atoms = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let (_, n) = self.nat()?;
            coeff = Rational::from_integer(n.into());
            if self.eat(b'/') {
                let (pos, d) = self.nat()?;
                if d == 0 {
                    return syntax(pos, "zero denominator");
                }
                coeff /= Rational::from_integer(d.into());
            }
            if !self.eat(b'*') {
                return Ok(Term { coeff, atoms });
            }
        }
        atoms.push(self.atom()?);
        while self.eat(b'*') {
            atoms.push(self.atom()?);
        }
        Ok(Term { coeff, atoms })
    }

    fn atom(&mut self) -> Result<Atom, ExprError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return syntax(self.pos, "unexpected end of input"),
        };
        let mut a = if self.eat(b'(') {
            let e = self.expr()?;
            if !self.eat(b')') {
                return syntax(self.pos, "expected ')'");
            }
            Atom::Group(e)
        } else if self.src[start].is_ascii_alphabetic() || self.src[start] == b'_' {
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            classify(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier"))
        } else {
            return syntax(start, format!("unexpected character '{}'", self.src[start] as char));
        };
        while self.eat(b'^') {
            let (pos, n) = self.nat()?;
            let n = u32::try_from(n).or_else(|_| syntax(pos, "exponent too large"))?;
            a = Atom::Pow(Box::new(a), n);
        }
        Ok(a)
    }
}

fn classify(ident: &str) -> Atom {
    let b = ident.as_bytes();
    let digit = |c: u8| (b'1'..=b'5').contains(&c);
    match b {
        [b'x', i] if digit(*i) => Atom::X(i - b'0'),
        [b'd', j, k] if digit(*j) && digit(*k) => Atom::Form(j - b'0', k - b'0'),
        [b'd', b'p', i] if digit(*i) => Atom::Partial(i - b'0'),
        _ => Atom::Named(ident.to_string()),
    }
}

/// Parses the whole input as one expression.
pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return syntax(p.pos, "unexpected trailing input");
    }
    Ok(e)
}

/// Unvalidated value: a polynomial, a 2-form and a vector field, each
/// possibly zero.
#[derive(Clone, Debug)]
struct Raw {
    scalar: Polynomial,
    form: DiffForm,
    field: [Polynomial; NVARS],
}

impl Raw {
    fn zero() -> Self {
        Raw {
            scalar: Polynomial::zero(NVARS),
            form: DiffForm::zero(),
            field: std::array::from_fn(|_| Polynomial::zero(NVARS)),
        }
    }

    fn scalar(p: Polynomial) -> Self {
        Raw { scalar: p, ..Raw::zero() }
    }

    fn is_scalar(&self) -> bool {
        self.form.is_zero() && self.field.iter().all(Polynomial::is_zero)
    }

    fn add(&self, other: &Raw) -> Raw {
        Raw {
            scalar: &self.scalar + &other.scalar,
            form: self.form.add(&other.form),
            field: std::array::from_fn(|i| &self.field[i] + &other.field[i]),
        }
    }

    fn times_scalar(&self, p: &Polynomial) -> Raw {
        let form = self
            .form
            .terms()
            .fold(DiffForm::zero(), |acc, (m, c)| acc.add(&DiffForm::monomial(c * p, &m.indices())));
        Raw {
            scalar: &self.scalar * p,
            form,
            field: std::array::from_fn(|i| &self.field[i] * p),
        }
    }

    fn mul(&self, other: &Raw) -> Result<Raw, ExprError> {
        if other.is_scalar() {
            Ok(self.times_scalar(&other.scalar))
        } else if self.is_scalar() {
            Ok(other.times_scalar(&self.scalar))
        } else {
            Err(ExprError::Invalid(
                "product of two forms or fields is not an element".to_string(),
            ))
        }
    }

    fn of_element(e: &SuperElement) -> Raw {
        Raw {
            scalar: Polynomial::zero(NVARS),
            form: e.odd.form().clone(),
            field: e.even.coeffs().clone(),
        }
    }
}

fn eval_atom(a: &Atom) -> Result<Raw, ExprError> {
    Ok(match a {
        Atom::X(i) => Raw::scalar(x(*i as usize - 1)),
        Atom::Form(j, k) => Raw {
            form: DiffForm::monomial(Polynomial::one(NVARS), &[j - 1, k - 1]),
            ..Raw::zero()
        },
        Atom::Partial(i) => {
            let mut r = Raw::zero();
            r.field[*i as usize - 1] = Polynomial::one(NVARS);
            r
        }
        Atom::Named(n) => Raw::of_element(&named_element(n).map_err(|e| ExprError::Invalid(e.to_string()))?),
        Atom::Pow(b, n) => {
            let base = eval_atom(b)?;
            let mut acc = Raw::scalar(Polynomial::one(NVARS));
            for _ in 0..*n {
                acc = acc.mul(&base)?;
            }
            acc
        }
        Atom::Group(e) => eval_raw(e)?,
    })
}

fn eval_raw(e: &Expr) -> Result<Raw, ExprError> {
    let mut total = Raw::zero();
    for t in &e.terms {
        let mut v = Raw::scalar(Polynomial::constant(NVARS, t.coeff.clone()));
        for a in &t.atoms {
            v = v.mul(&eval_atom(a)?)?;
        }
        total = total.add(&v);
    }
    Ok(total)
}

/// Evaluates to a validated element: the field part must be
/// divergence-free and the form part closed.
pub fn evaluate(e: &Expr) -> Result<SuperElement, ExprError> {
    let raw = eval_raw(e)?;
    if !raw.scalar.is_zero() {
        return Err(ExprError::Invalid("nonzero polynomial part is not an element".to_string()));
    }
    let invalid = |e: AlgebraError| ExprError::Invalid(e.to_string());
    let even = VectorField::new(raw.field).map_err(invalid)?;
    let odd = TwoForm::new(raw.form).map_err(|e| match e {
        AlgebraError::NotClosed => ExprError::Invalid("2-form is not closed".to_string()),
        other => invalid(other),
    })?;
    Ok(SuperElement { even, odd })
}

/// Parses and evaluates.
pub fn parse_element(text: &str) -> Result<SuperElement, ExprError> {
    evaluate(&parse_expression(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e36::NAMES;
    use crate::scalar::rat;
    use proptest::prelude::*;

    #[test]
    fn named_forms_match_literals() {
        assert_eq!(parse_element("x3*d35").unwrap(), named_element("e0prime").unwrap());
        assert_eq!(
            parse_element("x3*d25 - x2*d35 + 2*x5*d23").unwrap(),
            named_element("e0").unwrap()
        );
        assert_eq!(parse_element("x1*dp2").unwrap(), named_element("e1").unwrap());
        assert_eq!(parse_element("-d53").unwrap(), parse_element("d35").unwrap());
    }

    #[test]
    fn invalid_elements_are_rejected() {
        assert!(matches!(parse_element("x5*d23"), Err(ExprError::Invalid(m)) if m.contains("closed")));
        assert!(matches!(parse_element("x1*dp1"), Err(ExprError::Invalid(m)) if m.contains("divergence")));
        assert!(matches!(parse_element("d12*d34"), Err(ExprError::Invalid(_))));
        assert!(matches!(parse_element("x1"), Err(ExprError::Invalid(_))));
        assert!(matches!(parse_element("nosuch"), Err(ExprError::Invalid(m)) if m.contains("nosuch")));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(parse_expression("x1 +").unwrap_err(), ExprError::Syntax { pos: 4, msg: "unexpected end of input".into() });
        assert!(matches!(parse_expression("(x1*d23"), Err(ExprError::Syntax { pos: 7, .. })));
        assert!(matches!(parse_expression("x1 x2"), Err(ExprError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_expression("1/0*d12"), Err(ExprError::Syntax { pos: 2, .. })));
        assert!(matches!(parse_expression("x1^"), Err(ExprError::Syntax { pos: 3, .. })));
    }

    #[test]
    fn printing_is_canonical() {
        let e = parse_expression(" -2/4 * x1 ^2*d23+ (x2 - 3) * dp1 -1").unwrap();
        assert_eq!(e.to_string(), "-1/2*x1^2*d23 + (x2 - 3)*dp1 - 1");
        assert_eq!(e.terms[0].coeff, rat(-1, 2));
    }

    #[test]
    fn powers_and_groups() {
        let a = parse_element("(x1 + x2)^2*d12").unwrap();
        let b = parse_element("x1^2*d12 + 2*x1*x2*d12 + x2^2*d12").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_element("x4^0*dp4").unwrap(), SuperElement::partial(3));
    }

    fn atom_strategy() -> BoxedStrategy<Atom> {
        let leaf = prop_oneof![
            (1u8..=5).prop_map(Atom::X),
            (1u8..=5, 1u8..=5).prop_map(|(j, k)| Atom::Form(j, k)),
            (1u8..=5).prop_map(Atom::Partial),
            proptest::sample::select(NAMES).prop_map(|n| Atom::Named(n.to_string())),
        ];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                (inner.clone(), 0u32..4).prop_map(|(a, n)| Atom::Pow(Box::new(a), n)),
                proptest::collection::vec(term_strategy(inner), 1..3).prop_map(|terms| Atom::Group(Expr { terms })),
            ]
        })
        .boxed()
    }

    fn term_strategy(atom: BoxedStrategy<Atom>) -> impl Strategy<Value = Term> {
        (-6i64..7, 1i64..5, proptest::collection::vec(atom, 0..3)).prop_map(|(n, d, atoms)| Term {
            coeff: rat(n, d),
            atoms,
        })
    }

    proptest! {
        #[test]
        fn parse_print_parse(terms in proptest::collection::vec(term_strategy(atom_strategy()), 1..4)) {
            let e = Expr { terms };
            let printed = e.to_string();
            let parsed = parse_expression(&printed).unwrap();
            prop_assert_eq!(&parsed, &e);
            prop_assert_eq!(parsed.to_string(), printed);
            let again = parse_expression(&parsed.to_string()).unwrap();
            prop_assert_eq!(again, parsed);
        }
    }
}
