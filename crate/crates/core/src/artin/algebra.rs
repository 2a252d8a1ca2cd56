//! Finite-dimensional local algebras given by structure constants.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::truncated::{Echelon, TruncatedSpace};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace};
use crate::polyring::{Monomial, Polynomial};

/// A basis of `R` consisting of products of the generators.
#[derive(Debug, Clone)]
pub struct WordBasis {
    /// `parents[w] = Some((v, i))`: word `w` is generator `i` times word
    /// `v`. Word 0 is the unit.
    pub parents: Vec<Option<(usize, usize)>>,
    /// Column `k` expresses the basis vector `e_k` in the words.
    pub coefficients: Matrix,
}

/// Data kept for algebras of the form `T/b`, linking basis vectors to
/// polynomials.
#[derive(Debug, Clone)]
pub struct PresentationData {
    pub vars: Vec<String>,
    /// `T/m^N` with `N` the truncation exponent of the model.
    pub space: TruncatedSpace,
    /// `(b + m^N)/m^N` inside `space`.
    pub relations: Subspace,
    /// Column in `space` of each basis monomial.
    pub basis_columns: Vec<usize>,
    pub basis_monomials: Vec<Monomial>,
}

/// A commutative local algebra `(R, m, k)` of finite `k`-dimension.
///
/// Elements are coordinate vectors in a fixed basis. `actions[i]` is the
/// matrix of multiplication by `generators[i]`; the generators span `m`
/// modulo `m^2`, so a subspace is an ideal exactly when it is closed under
/// every action matrix. Matrices act on column vectors.
#[derive(Debug, Clone)]
pub struct ArtinAlgebra {
    field: Field,
    dim: usize,
    unit: Vec<Scalar>,
    generators: Vec<Vec<Scalar>>,
    actions: Vec<Matrix>,
    maximal: Subspace,
    labels: Vec<String>,
    table: OnceLock<Arc<Vec<Matrix>>>,
    words: OnceLock<Arc<WordBasis>>,
    presentation: Option<Arc<PresentationData>>,
}

impl ArtinAlgebra {
    /// Model of `space / relations`, where `relations` is an ideal of
    /// `T/m^N` not containing 1. The basis is the set of non-pivot
    /// monomials, listed in increasing graded-lex order.
    pub(crate) fn from_quotient(
        space: TruncatedSpace,
        relations: Subspace,
        vars: Vec<String>,
    ) -> ArtinAlgebra {
        let field = space.field();
        let mut basis_columns = relations.non_pivots();
        basis_columns.reverse();
        let dim = basis_columns.len();
        let basis_monomials: Vec<Monomial> = basis_columns
            .iter()
            .map(|&c| space.monomials()[c].clone())
            .collect();
        let col_to_basis: HashMap<usize, usize> =
            basis_columns.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let coords = |v: &[Scalar]| -> Vec<Scalar> {
            let r = relations.reduce(v);
            basis_columns.iter().map(|&c| r[c].clone()).collect()
        };
        let nvars = space.nvars();
        let actions: Vec<Matrix> = (0..nvars)
            .map(|i| {
                let cols: Vec<Vec<Scalar>> = basis_columns
                    .iter()
                    .map(|&c| match space.shift_index(i, c) {
                        None => vec![field.zero(); dim],
                        Some(s) => match col_to_basis.get(&s) {
                            Some(&k) => {
                                let mut e = vec![field.zero(); dim];
                                e[k] = field.one();
                                e
                            }
                            None => coords(&space.unit_vector(s)),
                        },
                    })
                    .collect();
                Matrix::from_columns(field, dim, &cols)
            })
            .collect();
        let generators: Vec<Vec<Scalar>> = (0..nvars)
            .map(|i| match space.index_of(&Monomial::variable(nvars, i)) {
                Some(c) => coords(&space.unit_vector(c)),
                None => vec![field.zero(); dim],
            })
            .collect();
        let one = Monomial::one(nvars);
        let unit_idx = basis_monomials
            .iter()
            .position(|m| *m == one)
            .expect("1 is a standard monomial of a proper ideal");
        let mut unit = vec![field.zero(); dim];
        unit[unit_idx] = field.one();
        let maximal_vs: Vec<Vec<Scalar>> = (0..dim)
            .filter(|&k| k != unit_idx)
            .map(|k| {
                let mut e = vec![field.zero(); dim];
                e[k] = field.one();
                e
            })
            .collect();
        let maximal = Subspace::span(field, dim, &maximal_vs);
        let labels = basis_monomials.iter().map(|m| m.format(&vars)).collect();
        ArtinAlgebra {
            field,
            dim,
            unit,
            generators,
            actions,
            maximal,
            labels,
            table: OnceLock::new(),
            words: OnceLock::new(),
            presentation: Some(Arc::new(PresentationData {
                vars,
                space,
                relations,
                basis_columns,
                basis_monomials,
            })),
        }
    }

    /// Algebra from structure constants: `table[i]` is multiplication by the
    /// `i`-th basis vector. Checks unit, commutativity, associativity and
    /// that `maximal` is a nilpotent ideal of codimension one.
    pub fn from_table(
        field: Field,
        table: Vec<Matrix>,
        unit: Vec<Scalar>,
        maximal: Subspace,
        labels: Vec<String>,
    ) -> Result<ArtinAlgebra> {
        let dim = table.len();
        if unit.len() != dim || maximal.ambient_dim() != dim || labels.len() != dim {
            return Err(Error::DimensionMismatch("structure constants".into()));
        }
        if table.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("structure constants".into()));
        }
        let mult = |u: &[Scalar]| -> Matrix { Matrix::linear_combination(field, dim, dim, &table, u) };
        if mult(&unit) != Matrix::identity(field, dim) {
            return Err(Error::InvalidInput("unit does not act as the identity".into()));
        }
        for i in 0..dim {
            for j in 0..i {
                if table[i].column(j) != table[j].column(i) {
                    return Err(Error::InvalidInput(format!(
                        "multiplication is not commutative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        // associativity: (e_i e_j) e_k = e_i (e_j e_k), i.e. M_{e_i e_j} = M_i M_j
        for i in 0..dim {
            for j in 0..=i {
                let prod = table[i].column(j);
                if mult(&prod) != table[i].mul(&table[j])? {
                    return Err(Error::InvalidInput(format!(
                        "multiplication is not associative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        if maximal.dim() + 1 != dim || maximal.contains(&unit) {
            return Err(Error::InvalidInput(
                "maximal ideal must be a hyperplane avoiding 1".into(),
            ));
        }
        let m_basis = maximal.vectors();
        let mut sq = Vec::new();
        for u in &m_basis {
            let mu = mult(u);
            for v in &m_basis {
                sq.push(mu.mul_vec(v));
            }
        }
        for v in &sq {
            if !maximal.contains(v) {
                return Err(Error::InvalidInput("maximal ideal is not an ideal".into()));
            }
        }
        let m2 = Subspace::span(field, dim, &sq);
        let generators = maximal.complement_basis_over(&m2);
        let actions: Vec<Matrix> = generators.iter().map(|g| mult(g)).collect();
        // m is nilpotent iff repeated multiplication by the generators dies out
        let mut power = maximal.clone();
        for _ in 0..=dim {
            if power.is_zero() {
                break;
            }
            let mut next = Subspace::zero(field, dim);
            for a in &actions {
                next = next.join(&power.image_under(a)?)?;
            }
            if next == power {
                return Err(Error::InvalidInput("maximal ideal is not nilpotent".into()));
            }
            power = next;
        }
        let table_cell = OnceLock::new();
        let _ = table_cell.set(Arc::new(table));
        Ok(ArtinAlgebra {
            field,
            dim,
            unit,
            generators,
            actions,
            maximal,
            labels,
            table: table_cell,
            words: OnceLock::new(),
            presentation: None,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `k`-dimension, i.e. the length `λ(R)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn length(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut e = self.zero_vector();
        e[i] = self.field.one();
        e
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn maximal_space(&self) -> &Subspace {
        &self.maximal
    }

    pub fn presentation(&self) -> Option<&PresentationData> {
        self.presentation.as_deref()
    }

    /// Truncation exponent `N` of a presented model (`m^N = 0`).
    pub fn found_n(&self) -> Option<u32> {
        self.presentation().map(|p| p.space.n())
    }

    pub fn vars(&self) -> Option<&[String]> {
        self.presentation().map(|p| p.vars.as_slice())
    }

    /// Multiplication matrices of the basis vectors.
    pub fn table(&self) -> &[Matrix] {
        self.table.get_or_init(|| Arc::new(self.presented_table()))
    }

    fn presented_table(&self) -> Vec<Matrix> {
        let pres = self
            .presentation()
            .expect("algebras without a presentation carry their table");
        let idx: HashMap<&Monomial, usize> = pres
            .basis_monomials
            .iter()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        let mut out: Vec<Option<Matrix>> = vec![None; self.dim];
        // basis is in increasing graded-lex order, so divisors come first
        for (k, m) in pres.basis_monomials.iter().enumerate() {
            let mat = if m.is_one() {
                Matrix::identity(self.field, self.dim)
            } else {
                let v = m
                    .exponents()
                    .iter()
                    .position(|&e| e > 0)
                    .expect("non-constant monomial");
                let mut e = m.exponents().to_vec();
                e[v] -= 1;
                let parent = idx[&Monomial::new(e)];
                self.actions[v]
                    .mul(out[parent].as_ref().expect("divisor computed earlier"))
                    .expect("square")
            };
            out[k] = Some(mat);
        }
        out.into_iter().map(|m| m.expect("filled")).collect()
    }

    /// Products of generators spanning `R`, found breadth first.
    pub fn word_basis(&self) -> &WordBasis {
        self.words.get_or_init(|| Arc::new(self.compute_words()))
    }

    fn compute_words(&self) -> WordBasis {
        let mut ech = Echelon::new(self.field, self.dim);
        ech.insert(&self.unit);
        let mut parents = vec![None];
        let mut vectors = vec![self.unit.clone()];
        let mut next = 0;
        while next < vectors.len() {
            for (i, a) in self.actions.iter().enumerate() {
                let v = a.mul_vec(&vectors[next]);
                if ech.insert(&v).is_some() {
                    parents.push(Some((next, i)));
                    vectors.push(v);
                }
            }
            next += 1;
        }
        assert_eq!(vectors.len(), self.dim, "generators must generate the algebra");
        let w = Matrix::from_columns(self.field, self.dim, &vectors);
        let coefficients = w.inverse().expect("words form a basis");
        WordBasis {
            parents,
            coefficients,
        }
    }

    /// Matrix of multiplication by `u`.
    pub fn mult_matrix(&self, u: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.field, self.dim, self.dim, self.table(), u)
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.zero_vector();
        for (i, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let col = self.table()[i].mul_vec(v);
            for (a, b) in acc.iter_mut().zip(&col) {
                if !b.is_zero() {
                    *a = &*a + &(c * b);
                }
            }
        }
        acc
    }

    /// Image of a polynomial in a presented algebra.
    pub fn element_of(&self, p: &Polynomial) -> Result<Vec<Scalar>> {
        let pres = self
            .presentation()
            .ok_or_else(|| Error::InvalidInput("algebra has no polynomial presentation".into()))?;
        if p.nvars() != pres.space.nvars() {
            return Err(Error::DimensionMismatch("polynomial variable count".into()));
        }
        if p.field() != self.field {
            return Err(Error::FieldMismatch("polynomial coefficients".into()));
        }
        let v = pres.space.vector_of(p);
        let r = pres.relations.reduce(&v);
        Ok(pres.basis_columns.iter().map(|&c| r[c].clone()).collect())
    }

    /// The normal-form polynomial of an element of a presented algebra.
    pub fn polynomial_of(&self, v: &[Scalar]) -> Option<Polynomial> {
        let pres = self.presentation()?;
        let terms = v
            .iter()
            .zip(&pres.basis_monomials)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| (m.clone(), c.clone()))
            .collect();
        Some(Polynomial::from_terms(self.field, pres.space.nvars(), terms))
    }

    pub fn format_element(&self, v: &[Scalar]) -> String {
        if let (Some(p), Some(vars)) = (self.polynomial_of(v), self.vars()) {
            return p.format(vars);
        }
        let parts: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Checks the structural invariants: commuting nilpotent actions and
    /// commutative, associative multiplication on basis triples.
    pub fn check_invariants(&self) -> Result<()> {
        for (i, a) in self.actions.iter().enumerate() {
            for b in &self.actions[..i] {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::Internal("action matrices do not commute".into()));
                }
            }
            let mut p = a.clone();
            for _ in 0..self.dim {
                p = p.mul(a)?;
            }
            if !p.is_zero() {
                return Err(Error::Internal("action matrix is not nilpotent".into()));
            }
        }
        let t = self.table();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if t[i].column(j) != t[j].column(i) {
                    return Err(Error::Internal("multiplication is not commutative".into()));
                }
                let eij = t[i].column(j);
                if self.mult_matrix(&eij) != t[i].mul(&t[j])? {
                    return Err(Error::Internal("multiplication is not associative".into()));
                }
            }
        }
        Ok(())
    }
}
