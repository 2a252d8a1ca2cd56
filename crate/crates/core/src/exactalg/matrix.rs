//! Dense matrices over a [`Field`], with row reduction, kernels and solving.
//!
//! Prime-field matrices are reduced on a `u64` residue copy; rational
//! matrices go through [`Scalar`] arithmetic directly.

use std::fmt;

use super::scalar::{mod_inv, Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Solution set of `a * x = rhs`: `particular + kernel`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Subspace,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(rows * cols, data.len(), "matrix data has wrong length");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<Scalar>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row has wrong length");
            data.extend(r.iter().cloned());
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column has wrong length");
            for (i, v) in c.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix::new(self.field, self.cols, self.rows, data)
    }

    fn check_same_shape(&self, other: &Matrix, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix::new(self.field, self.rows, self.cols, data))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix::new(self.field, self.rows, self.cols, data))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix::new(self.field, self.rows, self.cols, data)
    }

    /// `Σ coeffs[i] * mats[i]`; every matrix must be `rows x cols`.
    pub fn linear_combination(
        field: Field,
        rows: usize,
        cols: usize,
        mats: &[Matrix],
        coeffs: &[Scalar],
    ) -> Matrix {
        assert_eq!(mats.len(), coeffs.len(), "one coefficient per matrix");
        if let Field::Prime(p) = field {
            let mut acc = vec![0u64; rows * cols];
            for (m, c) in mats.iter().zip(coeffs) {
                let c = c.residue();
                if c == 0 {
                    continue;
                }
                for (a, s) in acc.iter_mut().zip(&m.data) {
                    let s = s.residue();
                    if s != 0 {
                        *a = (*a + c * s) % p;
                    }
                }
            }
            return Matrix::from_residues(field, rows, cols, &acc);
        }
        let mut acc = Matrix::zeros(field, rows, cols);
        for (m, c) in mats.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (a, s) in acc.data.iter_mut().zip(&m.data) {
                if !s.is_zero() {
                    *a = &*a + &(c * s);
                }
            }
        }
        acc
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "mul: {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, m, k) = (self.rows, other.cols, self.cols);
        if let Field::Prime(p) = self.field {
            let a = self.residues();
            let b = other.residues();
            let mut out = vec![0u64; n * m];
            for i in 0..n {
                for l in 0..k {
                    let x = a[i * k + l];
                    if x == 0 {
                        continue;
                    }
                    let row = &b[l * m..(l + 1) * m];
                    let dst = &mut out[i * m..(i + 1) * m];
                    for (d, &y) in dst.iter_mut().zip(row) {
                        *d = (*d + x * y) % p;
                    }
                }
            }
            return Ok(Matrix::from_residues(self.field, n, m, &out));
        }
        let mut out = Matrix::zeros(self.field, n, m);
        for i in 0..n {
            for l in 0..k {
                let x = self.get(i, l);
                if x.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let y = other.get(l, j);
                    if y.is_zero() {
                        continue;
                    }
                    let idx = i * m + j;
                    out.data[idx] = &out.data[idx] + &(x * y);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "mul_vec: length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix::new(self.field, self.rows + other.rows, self.cols, data))
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Ok(Matrix::new(self.field, self.rows, self.cols + other.cols, data))
    }

    pub(crate) fn residues(&self) -> Vec<u64> {
        self.data.iter().map(Scalar::residue).collect()
    }

    pub(crate) fn from_residues(field: Field, rows: usize, cols: usize, r: &[u64]) -> Matrix {
        let p = match field {
            Field::Prime(p) => p,
            Field::Rational => unreachable!("residues only exist for prime fields"),
        };
        let data = r
            .iter()
            .map(|&value| Scalar::Prime { value, modulus: p })
            .collect();
        Matrix::new(field, rows, cols, data)
    }

    /// Reduced row-echelon form. The zero rows are dropped, so the returned
    /// matrix has exactly `rank` rows.
    pub fn rref(&self) -> Rref {
        let (mut data, pivots) = match self.field {
            Field::Prime(p) => {
                let mut r = self.residues();
                let pivots = rref_mod_p(&mut r, self.rows, self.cols, p);
                let m = Matrix::from_residues(self.field, self.rows, self.cols, &r);
                (m.data, pivots)
            }
            Field::Rational => {
                let mut d = self.data.clone();
                let pivots = rref_generic(&mut d, self.rows, self.cols);
                (d, pivots)
            }
        };
        let rank = pivots.len();
        data.truncate(rank * self.cols);
        Rref {
            matrix: Matrix::new(self.field, rank, self.cols, data),
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        kernel_from_rref(&r, self.cols)
    }

    /// Column space as a subspace of `k^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_rows(&self.transpose())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(self)
    }

    /// Solve `self * x = rhs` for a matrix right-hand side. Returns `None`
    /// when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Solution>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: {} equations but rhs has {} rows",
                self.rows, rhs.rows
            )));
        }
        let aug = self.hstack(rhs)?;
        let r = aug.rref();
        if r.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut particular = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &c) in r.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                particular.set(c, j, r.matrix.get(i, self.cols + j).clone());
            }
        }
        let left = Rref {
            matrix: {
                let mut m = Matrix::zeros(self.field, r.rank, self.cols);
                for i in 0..r.rank {
                    for j in 0..self.cols {
                        m.set(i, j, r.matrix.get(i, j).clone());
                    }
                }
                m
            },
            pivots: r.pivots.clone(),
            rank: r.rank,
        };
        Ok(Some(Solution {
            particular,
            kernel: kernel_from_rref(&left, self.cols),
        }))
    }

    /// Solve `self * x = v` for a single vector.
    pub fn solve_vec(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        let rhs = Matrix::from_columns(self.field, v.len(), &[v.to_vec()]);
        Ok(self.solve(&rhs)?.map(|s| s.particular.column(0)))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(s)) if s.kernel.dim() == 0 => Some(s.particular),
            _ => None,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

fn kernel_from_rref(r: &Rref, cols: usize) -> Subspace {
    let field = r.matrix.field();
    let mut is_pivot = vec![false; cols];
    for &c in &r.pivots {
        is_pivot[c] = true;
    }
    let mut vectors = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (i, &c) in r.pivots.iter().enumerate() {
            v[c] = -r.matrix.get(i, free);
        }
        vectors.push(v);
    }
    Subspace::span(field, cols, &vectors)
}

/// In-place RREF on residues mod `p`. Returns pivot columns; the first
/// `pivots.len()` rows hold the reduced basis.
pub(crate) fn rref_mod_p(d: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut nz: Vec<usize> = Vec::with_capacity(cols);
    let mut prow: Vec<u64> = vec![0; cols];
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| d[i * cols + c] != 0) else {
            continue;
        };
        if i != r {
            for j in c..cols {
                d.swap(i * cols + j, r * cols + j);
            }
        }
        let inv = mod_inv(d[r * cols + c], p);
        nz.clear();
        for j in c..cols {
            let v = d[r * cols + j] * inv % p;
            d[r * cols + j] = v;
            prow[j] = v;
            if v != 0 {
                nz.push(j);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = d[i * cols + c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            let row = &mut d[i * cols..(i + 1) * cols];
            for &j in &nz {
                row[j] = (row[j] + nf * prow[j]) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn rref_generic(d: &mut [Scalar], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut nz: Vec<usize> = Vec::with_capacity(cols);
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(i) = (r..rows).find(|&i| !d[i * cols + c].is_zero()) else {
            continue;
        };
        if i != r {
            for j in c..cols {
                d.swap(i * cols + j, r * cols + j);
            }
        }
        let inv = d[r * cols + c].inv().expect("pivot is nonzero");
        nz.clear();
        for j in c..cols {
            if !d[r * cols + j].is_zero() {
                d[r * cols + j] = &d[r * cols + j] * &inv;
                nz.push(j);
            }
        }
        let prow: Vec<Scalar> = nz.iter().map(|&j| d[r * cols + j].clone()).collect();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = d[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for (&j, pv) in nz.iter().zip(&prow) {
                let idx = i * cols + j;
                d[idx] = &d[idx] - &(&f * pv);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_itself() {
        let q = Field::Rational;
        let id = Matrix::identity(q, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Matrix::zeros(Field::Rational, 3, 3);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
        assert_eq!(r.matrix.rows(), 0);
    }

    #[test]
    fn rref_proportional_rows() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(q, &[&[1, 2]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn solve_identity() {
        let q = Field::Rational;
        let id = Matrix::identity(q, 3);
        let v = Matrix::from_i64(q, &[&[1], &[-2], &[5]]);
        let s = id.solve(&v).unwrap().unwrap();
        assert_eq!(s.particular, v);
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn solve_inconsistent() {
        let q = Field::Rational;
        let z = Matrix::zeros(q, 2, 2);
        let v = Matrix::from_i64(q, &[&[1], &[0]]);
        assert!(z.solve(&v).unwrap().is_none());
    }

    #[test]
    fn solve_underdetermined_mod_five() {
        let f5 = Field::prime(5).unwrap();
        let a = Matrix::from_i64(f5, &[&[1, 1]]);
        let rhs = Matrix::from_i64(f5, &[&[2]]);
        let s = a.solve(&rhs).unwrap().unwrap();
        assert_eq!(s.particular, Matrix::from_i64(f5, &[&[2], &[0]]));
        assert_eq!(s.kernel.dim(), 1);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let q = Field::Rational;
        let a = Matrix::identity(q, 2);
        let rhs = Matrix::zeros(q, 3, 1);
        assert!(matches!(a.solve(&rhs), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(q, 2));
        assert!(Matrix::from_i64(q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn prime_and_generic_paths_agree() {
        // same matrix reduced through residues and through Scalar arithmetic
        let f7 = Field::prime(7).unwrap();
        let m = Matrix::from_i64(f7, &[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8]]);
        let mut d = m.entries().to_vec();
        let piv = rref_generic(&mut d, 3, 4);
        let r = m.rref();
        assert_eq!(piv, r.pivots);
        assert_eq!(&d[..r.rank * 4], r.matrix.entries());
    }
}
