//! Finite modules as commuting action matrices and the maps between them.

use std::sync::{Arc, OnceLock};

use crate::artin::{ArtinAlgebra, IdealRep};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace};

/// A finite `R`-module. `actions[i]` is multiplication by the `i`-th
/// generator of the maximal ideal of `R` (see [`ArtinAlgebra::generators`]).
#[derive(Debug, Clone)]
pub struct ModuleRep {
    field: Field,
    dim: usize,
    actions: Vec<Matrix>,
    element_actions: OnceLock<Arc<Vec<Matrix>>>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.actions == other.actions
    }
}

impl Eq for ModuleRep {}

impl ModuleRep {
    /// Checks that the actions are square, commute and are nilpotent.
    pub fn new(field: Field, dim: usize, actions: Vec<Matrix>) -> Result<ModuleRep> {
        for a in &actions {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::DimensionMismatch("module action".into()));
            }
        }
        for (i, a) in actions.iter().enumerate() {
            for b in &actions[..i] {
                if a.mul(b)? != b.mul(a)? {
                    return Err(Error::InvalidInput("module actions do not commute".into()));
                }
            }
            let mut p = a.clone();
            let mut k = 1;
            while k < dim {
                p = p.mul(&p)?;
                k *= 2;
            }
            if dim > 0 && !p.is_zero() {
                return Err(Error::InvalidInput("module action is not nilpotent".into()));
            }
        }
        Ok(ModuleRep::from_parts(field, dim, actions))
    }

    pub(crate) fn from_parts(field: Field, dim: usize, actions: Vec<Matrix>) -> ModuleRep {
        ModuleRep {
            field,
            dim,
            actions,
            element_actions: OnceLock::new(),
        }
    }

    /// `R` as a module over itself.
    pub fn ring(r: &ArtinAlgebra) -> ModuleRep {
        let m = ModuleRep::from_parts(r.field(), r.dim(), r.actions().to_vec());
        let _ = m.element_actions.set(Arc::new(r.table().to_vec()));
        m
    }

    pub fn zero(field: Field, num_actions: usize) -> ModuleRep {
        ModuleRep::from_parts(field, 0, vec![Matrix::zeros(field, 0, 0); num_actions])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `k`-dimension, which is the length.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut e = self.zero_vector();
        e[i] = self.field.one();
        e
    }

    /// Action matrices of the basis vectors of `r`.
    pub fn element_actions(&self, r: &ArtinAlgebra) -> &[Matrix] {
        self.element_actions
            .get_or_init(|| Arc::new(self.compute_element_actions(r)))
    }

    fn compute_element_actions(&self, r: &ArtinAlgebra) -> Vec<Matrix> {
        assert_eq!(
            r.num_generators(),
            self.actions.len(),
            "module and algebra disagree on generators"
        );
        let words = r.word_basis();
        let mut word_mats: Vec<Matrix> = Vec::with_capacity(words.parents.len());
        for parent in &words.parents {
            let m = match parent {
                None => Matrix::identity(self.field, self.dim),
                Some((v, i)) => self.actions[*i].mul(&word_mats[*v]).expect("square"),
            };
            word_mats.push(m);
        }
        (0..r.dim())
            .map(|k| {
                Matrix::linear_combination(
                    self.field,
                    self.dim,
                    self.dim,
                    &word_mats,
                    &words.coefficients.column(k),
                )
            })
            .collect()
    }

    /// Matrix of multiplication by the ring element `u`.
    pub fn act(&self, r: &ArtinAlgebra, u: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.field, self.dim, self.dim, self.element_actions(r), u)
    }

    /// `m * sub`.
    pub fn maximal_times(&self, sub: &Subspace) -> Subspace {
        let mut acc = Subspace::zero(self.field, self.dim);
        for a in &self.actions {
            acc = acc
                .join(&sub.image_under(a).expect("square"))
                .expect("same ambient");
        }
        acc
    }

    /// `a * sub` for an ideal `a` of `r`.
    pub fn ideal_times(&self, r: &ArtinAlgebra, a: &IdealRep, sub: &Subspace) -> Subspace {
        let mut acc = Subspace::zero(self.field, self.dim);
        for g in r.minimal_generators(a) {
            acc = acc
                .join(&sub.image_under(&self.act(r, &g)).expect("square"))
                .expect("same ambient");
        }
        acc
    }

    /// `(0 :_M a)`.
    pub fn annihilated_by(&self, r: &ArtinAlgebra, a: &IdealRep) -> Subspace {
        let mut acc = Subspace::full(self.field, self.dim);
        for g in r.minimal_generators(a) {
            acc = acc.meet(&self.act(r, &g).kernel()).expect("same ambient");
        }
        acc
    }

    /// `(0 :_M m)`.
    pub fn socle(&self) -> Subspace {
        let mut acc = Subspace::full(self.field, self.dim);
        for a in &self.actions {
            acc = acc.meet(&a.kernel()).expect("same ambient");
        }
        acc
    }

    /// `ann_R(M)`.
    pub fn annihilator(&self, r: &ArtinAlgebra) -> IdealRep {
        let cols: Vec<Vec<Scalar>> = self
            .element_actions(r)
            .iter()
            .map(|m| m.entries().to_vec())
            .collect();
        let stacked = Matrix::from_columns(self.field, self.dim * self.dim, &cols);
        r.ideal_from_space(stacked.kernel())
            .expect("an annihilator is an ideal")
    }

    pub fn is_faithful(&self, r: &ArtinAlgebra) -> bool {
        self.annihilator(r).is_zero()
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.vectors()
            .iter()
            .all(|v| self.actions.iter().all(|a| sub.contains(&a.mul_vec(v))))
    }

    /// Elements whose classes form a basis of `M/mM`.
    pub fn minimal_generators(&self) -> Vec<Vec<Scalar>> {
        let full = Subspace::full(self.field, self.dim);
        full.complement_basis_over(&self.maximal_times(&full))
    }

    pub fn num_minimal_generators(&self) -> usize {
        self.dim - self.maximal_times(&Subspace::full(self.field, self.dim)).dim()
    }

    /// The submodule `sub` in the basis of its canonical rows, with the
    /// inclusion matrix.
    pub fn submodule(&self, sub: &Subspace) -> Result<(ModuleRep, Matrix)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidInput("subspace is not a submodule".into()));
        }
        let basis = sub.vectors();
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = basis
                    .iter()
                    .map(|v| sub.coordinates(&a.mul_vec(v)).expect("closed"))
                    .collect();
                Matrix::from_columns(self.field, sub.dim(), &cols)
            })
            .collect();
        let inclusion = Matrix::from_columns(self.field, self.dim, &basis);
        Ok((ModuleRep::from_parts(self.field, sub.dim(), actions), inclusion))
    }

    /// `M/sub` in the basis of the non-pivot coordinates of `sub`, with the
    /// projection matrix.
    pub fn quotient(&self, sub: &Subspace) -> Result<(ModuleRep, Matrix)> {
        if !self.is_submodule(sub) {
            return Err(Error::InvalidInput("subspace is not a submodule".into()));
        }
        let free = sub.non_pivots();
        let q = free.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = sub.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = free.iter().map(|&c| project(&a.column(c))).collect();
                Matrix::from_columns(self.field, q, &cols)
            })
            .collect();
        let proj_cols: Vec<Vec<Scalar>> = (0..self.dim).map(|c| project(&self.basis_vector(c))).collect();
        let projection = Matrix::from_columns(self.field, q, &proj_cols);
        Ok((ModuleRep::from_parts(self.field, q, actions), projection))
    }

    /// `M^∨ = Hom_R(M, ω)`, realized as the `k`-dual with transposed
    /// actions.
    pub fn matlis_dual(&self) -> ModuleRep {
        let m = ModuleRep::from_parts(
            self.field,
            self.dim,
            self.actions.iter().map(Matrix::transpose).collect(),
        );
        if let Some(e) = self.element_actions.get() {
            let _ = m
                .element_actions
                .set(Arc::new(e.iter().map(Matrix::transpose).collect()));
        }
        m
    }
}

/// An `R`-linear map; the matrix intertwines the two action families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    domain: Arc<ModuleRep>,
    codomain: Arc<ModuleRep>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(domain: Arc<ModuleRep>, codomain: Arc<ModuleRep>, matrix: Matrix) -> Result<ModuleMap> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(Error::DimensionMismatch("module map shape".into()));
        }
        if domain.actions().len() != codomain.actions().len() {
            return Err(Error::DimensionMismatch("module action counts".into()));
        }
        for (a, b) in domain.actions().iter().zip(codomain.actions()) {
            if matrix.mul(a)? != b.mul(&matrix)? {
                return Err(Error::InvalidInput("matrix is not R-linear".into()));
            }
        }
        Ok(ModuleMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub(crate) fn new_unchecked(
        domain: Arc<ModuleRep>,
        codomain: Arc<ModuleRep>,
        matrix: Matrix,
    ) -> ModuleMap {
        ModuleMap {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn zero(domain: Arc<ModuleRep>, codomain: Arc<ModuleRep>) -> ModuleMap {
        let matrix = Matrix::zeros(domain.field(), codomain.dim(), domain.dim());
        ModuleMap::new_unchecked(domain, codomain, matrix)
    }

    pub fn domain(&self) -> &Arc<ModuleRep> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<ModuleRep> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }

    pub fn image(&self) -> Subspace {
        self.matrix.column_space()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        Ok(ModuleMap::new_unchecked(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix)?,
        ))
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap::new_unchecked(self.domain.clone(), self.codomain.clone(), self.matrix.scale(c))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleMap) -> Result<ModuleMap> {
        Ok(ModuleMap::new_unchecked(
            first.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&first.matrix)?,
        ))
    }

    /// Image of the submodule `sub` of the domain.
    pub fn image_of(&self, sub: &Subspace) -> Subspace {
        sub.image_under(&self.matrix).expect("shape checked")
    }
}

/// `M^∨`.
pub fn matlis_dual(m: &ModuleRep) -> ModuleRep {
    m.matlis_dual()
}

/// `φ^∨ : N^∨ → M^∨` for `φ : M → N`.
pub fn dual_map(phi: &ModuleMap) -> ModuleMap {
    ModuleMap::new_unchecked(
        Arc::new(phi.codomain.matlis_dual()),
        Arc::new(phi.domain.matlis_dual()),
        phi.matrix.transpose(),
    )
}

/// A `k`-basis of `Hom_R(M, N)`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    domain: Arc<ModuleRep>,
    codomain: Arc<ModuleRep>,
    basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn domain(&self) -> &Arc<ModuleRep> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<ModuleRep> {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn maps(&self) -> Vec<ModuleMap> {
        self.basis.iter().map(|m| self.wrap(m.clone())).collect()
    }

    pub(crate) fn wrap(&self, m: Matrix) -> ModuleMap {
        ModuleMap::new_unchecked(self.domain.clone(), self.codomain.clone(), m)
    }

    pub fn combination_matrix(&self, coeffs: &[Scalar]) -> Matrix {
        Matrix::linear_combination(
            self.domain.field(),
            self.codomain.dim(),
            self.domain.dim(),
            &self.basis,
            coeffs,
        )
    }

    pub fn combination(&self, coeffs: &[Scalar]) -> ModuleMap {
        self.wrap(self.combination_matrix(coeffs))
    }

    /// Coordinates of `f` in the basis, if `f` belongs to the space.
    pub fn coordinates(&self, f: &Matrix) -> Option<Vec<Scalar>> {
        let field = self.domain.field();
        if self.basis.is_empty() {
            return f.is_zero().then(Vec::new);
        }
        let cols: Vec<Vec<Scalar>> = self.basis.iter().map(|m| m.entries().to_vec()).collect();
        let a = Matrix::from_columns(field, f.rows() * f.cols(), &cols);
        a.solve_vec(f.entries()).ok().flatten()
    }

    /// Sum of the images of all maps in the space.
    pub fn image_sum(&self) -> Subspace {
        let field = self.domain.field();
        let n = self.codomain.dim();
        let mut acc = Subspace::zero(field, n);
        for m in &self.basis {
            acc = acc.join(&m.column_space()).expect("same ambient");
        }
        acc
    }
}

/// `Hom_R(M, N)`.
///
/// Maps are determined by the images `n_j` of minimal generators `g_j` of
/// `M`; the `n_j` must satisfy every relation `Σ κ_j g_j = 0`, and it is
/// enough to impose the relations generating the syzygy module.
pub fn hom_basis(r: &ArtinAlgebra, m: &Arc<ModuleRep>, n: &Arc<ModuleRep>) -> HomSpace {
    let field = m.field();
    let lambda = r.dim();
    let gens = m.minimal_generators();
    let t = gens.len();
    if t == 0 || n.dim() == 0 {
        return HomSpace {
            domain: m.clone(),
            codomain: n.clone(),
            basis: Vec::new(),
        };
    }
    let m_elems = m.element_actions(r);
    let n_elems = n.element_actions(r);
    // Φ : R^t → M, column (j, k) = e_k g_j
    let mut phi_cols = Vec::with_capacity(t * lambda);
    for g in &gens {
        for e in m_elems {
            phi_cols.push(e.mul_vec(g));
        }
    }
    let phi = Matrix::from_columns(field, m.dim(), &phi_cols);
    let syz = phi.kernel();
    let mut shifted = Vec::new();
    for v in syz.vectors() {
        for a in r.actions() {
            let mut out = Vec::with_capacity(t * lambda);
            for j in 0..t {
                out.extend(a.mul_vec(&v[j * lambda..(j + 1) * lambda]));
            }
            shifted.push(out);
        }
    }
    let m_syz = Subspace::span(field, t * lambda, &shifted);
    let relations = syz.complement_basis_over(&m_syz);
    // Σ_j κ_j n_j = 0 for every relation κ
    let nd = n.dim();
    let mut eq_rows: Vec<Vec<Scalar>> = Vec::with_capacity(relations.len() * nd);
    for kappa in &relations {
        let blocks: Vec<Matrix> = (0..t)
            .map(|j| Matrix::linear_combination(field, nd, nd, n_elems, &kappa[j * lambda..(j + 1) * lambda]))
            .collect();
        for i in 0..nd {
            let mut row = Vec::with_capacity(t * nd);
            for b in &blocks {
                row.extend_from_slice(b.row(i));
            }
            eq_rows.push(row);
        }
    }
    let solutions = if eq_rows.is_empty() {
        Subspace::full(field, t * nd)
    } else {
        Matrix::from_rows(field, t * nd, &eq_rows).kernel()
    };
    let section = phi
        .solve(&Matrix::identity(field, m.dim()))
        .expect("shapes agree")
        .expect("generators span the module")
        .particular;
    let basis = solutions
        .vectors()
        .iter()
        .map(|sol| {
            let mut psi_cols = Vec::with_capacity(t * lambda);
            for j in 0..t {
                let nj = &sol[j * nd..(j + 1) * nd];
                for e in n_elems {
                    psi_cols.push(e.mul_vec(nj));
                }
            }
            let psi = Matrix::from_columns(field, nd, &psi_cols);
            psi.mul(&section).expect("shapes agree")
        })
        .collect();
    HomSpace {
        domain: m.clone(),
        codomain: n.clone(),
        basis,
    }
}
