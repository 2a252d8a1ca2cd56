//! The vector space `T/m^N` with a monomial basis.

use std::collections::HashMap;

use crate::exactalg::{Field, Scalar, Subspace};
use crate::polyring::{monomials_below, Monomial, Polynomial};

/// Monomials of degree `< N`, in descending graded-lex order, with the
/// multiplication-by-variable maps precomputed as index shifts.
#[derive(Debug, Clone)]
pub struct TruncatedSpace {
    field: Field,
    nvars: usize,
    n: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    shift: Vec<Vec<Option<usize>>>,
}

impl TruncatedSpace {
    pub fn new(field: Field, nvars: usize, n: u32) -> TruncatedSpace {
        let monomials = monomials_below(nvars, n);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let shift = (0..nvars)
            .map(|v| {
                let x = Monomial::variable(nvars, v);
                monomials.iter().map(|m| index.get(&m.mul(&x)).copied()).collect()
            })
            .collect();
        TruncatedSpace {
            field,
            nvars,
            n,
            monomials,
            index,
            shift,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The truncation exponent `N`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn unit_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    /// Coordinates of `p` with every term of degree `>= N` dropped.
    pub fn vector_of(&self, p: &Polynomial) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (m, c) in p.terms() {
            if let Some(&i) = self.index.get(m) {
                v[i] = c.clone();
            }
        }
        v
    }

    pub fn polynomial_of(&self, v: &[Scalar]) -> Polynomial {
        let terms = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.monomials[i].clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.field, self.nvars, terms)
    }

    /// `x_var * v`, truncated.
    pub fn shift(&self, var: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(j) = self.shift[var][i] {
                out[j] = c.clone();
            }
        }
        out
    }

    pub(crate) fn shift_index(&self, var: usize, i: usize) -> Option<usize> {
        self.shift[var][i]
    }

    /// `m^k` as the span of the monomials of degree `>= k`.
    pub fn max_power(&self, k: u32) -> Subspace {
        let vs: Vec<Vec<Scalar>> = (0..self.dim())
            .filter(|&i| self.monomials[i].degree() >= k)
            .map(|i| self.unit_vector(i))
            .collect();
        Subspace::span(self.field, self.dim(), &vs)
    }

    /// The smallest subspace containing `gens` that is closed under
    /// multiplication by every variable.
    pub fn ideal_span(&self, gens: &[Vec<Scalar>]) -> Subspace {
        let mut ech = Echelon::new(self.field, self.dim());
        let mut queue: Vec<Vec<Scalar>> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if let Some(r) = ech.insert(&v) {
                for var in 0..self.nvars {
                    let s = self.shift(var, &r);
                    if s.iter().any(|c| !c.is_zero()) {
                        queue.push(s);
                    }
                }
            }
        }
        ech.into_subspace()
    }

    pub fn ideal_span_polys(&self, gens: &[Polynomial]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = gens.iter().map(|g| self.vector_of(g)).collect();
        self.ideal_span(&vs)
    }
}

/// Incrementally built semi-echelon basis. Vectors are reduced against the
/// stored rows in insertion order; a stored row has zeros at the pivots of
/// all earlier rows.
#[derive(Debug, Clone)]
pub(crate) struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub(crate) fn new(field: Field, ambient: usize) -> Echelon {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub(crate) fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            if out[*p].is_zero() {
                continue;
            }
            let f = out[*p].clone();
            for (j, b) in row.iter().enumerate() {
                if !b.is_zero() {
                    out[j] = &out[j] - &(&f * b);
                }
            }
        }
        out
    }

    /// Inserts `v` if it is independent of the stored rows; returns the
    /// reduced, normalized row that was stored.
    pub(crate) fn insert(&mut self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|c| !c.is_zero())?;
        let inv = r[p].inv().expect("nonzero pivot");
        for c in r.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        self.rows.push((p, r.clone()));
        Some(r)
    }

    pub(crate) fn into_subspace(self) -> Subspace {
        let vs: Vec<Vec<Scalar>> = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::span(self.field, self.ambient, &vs)
    }
}
