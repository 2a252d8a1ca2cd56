//! Subspaces of `k^n` in canonical (reduced row-echelon) form.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A subspace stored by its RREF basis. Two subspaces are equal exactly when
/// their canonical bases agree entry by entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &Matrix) -> Subspace {
        let r = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_rows(&Matrix::from_rows(field, ambient, vectors))
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    /// Coordinates that are not pivots: a complement of this subspace is
    /// spanned by the corresponding unit vectors.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "reduce: length mismatch");
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            if out[c].is_zero() {
                continue;
            }
            let f = out[c].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    out[j] = &out[j] - &(&f * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)?))
    }

    pub fn meet(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        // u = c * B_self lies in other iff H_other * B_self^T * c = 0
        let h = other.annihilator();
        let cond = h.mul(&self.basis.transpose())?;
        let coeffs = cond.kernel();
        let vectors: Vec<Vec<Scalar>> = coeffs.vectors().iter().map(|c| self.combination(c)).collect();
        Ok(Subspace::span(self.field(), self.ambient, &vectors))
    }

    /// `(self ∩ other, self + other)`.
    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        Ok((self.meet(other)?, self.join(other)?))
    }

    /// Linear combination of the canonical basis rows.
    pub fn combination(&self, coeffs: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coeffs.len(), self.dim());
        let field = self.field();
        let mut v = vec![field.zero(); self.ambient];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] = &v[j] + &(c * b);
                }
            }
        }
        v
    }

    /// A matrix `H` with `ker H = self`.
    pub fn annihilator(&self) -> Matrix {
        let field = self.field();
        if self.is_zero() {
            return Matrix::identity(field, self.ambient);
        }
        let perp = self.basis.kernel();
        perp.basis.clone()
    }

    /// `{x : m * x ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch("preimage".into()));
        }
        if self.is_full() {
            return Ok(Subspace::full(self.field(), m.cols()));
        }
        Ok(self.annihilator().mul(m)?.kernel())
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch("image_under".into()));
        }
        if self.is_zero() {
            return Ok(Subspace::zero(self.field(), m.rows()));
        }
        let imgs = m.mul(&self.basis.transpose())?;
        Ok(imgs.column_space())
    }

    /// Basis vectors of `self` that extend a basis of `sub` (which must be
    /// contained in `self`) to a basis of `self`, chosen greedily in
    /// canonical order.
    pub fn complement_basis_over(&self, sub: &Subspace) -> Vec<Vec<Scalar>> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in self.vectors() {
            if !acc.contains(&v) {
                acc = acc
                    .join(&Subspace::span(
                        self.field(),
                        self.ambient,
                        std::slice::from_ref(&v),
                    ))
                    .expect("same ambient");
                out.push(v);
            }
        }
        out
    }
}
