use std::collections::BTreeMap;
use std::fmt;

use super::monomial::Monomial;
use crate::exactalg::{Field, Scalar};

/// A polynomial with exact coefficients. Terms are kept in descending
/// graded-lex order and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(field: Field, nvars: usize) -> Polynomial {
        Polynomial {
            field,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Polynomial {
        Polynomial::from_terms(field, nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(field: Field, nvars: usize) -> Polynomial {
        Polynomial::constant(field, nvars, field.one())
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> Polynomial {
        Polynomial::monomial(field, Monomial::variable(nvars, i))
    }

    pub fn monomial(field: Field, m: Monomial) -> Polynomial {
        let nvars = m.nvars();
        Polynomial {
            field,
            nvars,
            terms: vec![(m, field.one())],
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms(field: Field, nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { field, nvars, terms }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Scalar {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// Lowest degree of a term (`None` for the zero polynomial).
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut t = self.terms.clone();
        t.extend(other.terms.iter().cloned());
        Polynomial::from_terms(self.field, self.nvars, t)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let t = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial::from_terms(self.field, self.nvars, t)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.mul_bounded(other, None)
    }

    /// Product with every term of degree `>= n` deleted.
    pub fn multiply_truncate(&self, other: &Polynomial, n: u32) -> Polynomial {
        self.mul_bounded(other, Some(n))
    }

    fn mul_bounded(&self, other: &Polynomial, bound: Option<u32>) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
        let mut t = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(n) = bound {
                    if m1.degree() + m2.degree() >= n {
                        continue;
                    }
                }
                t.push((m1.mul(m2), c1 * c2));
            }
        }
        Polynomial::from_terms(self.field, self.nvars, t)
    }

    pub fn truncate(&self, n: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < n)
                .cloned()
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Canonical text form in the input grammar, e.g. `x^2 - 3*y*z`.
    pub fn format(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.format(vars);
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.format(&names))
    }
}
