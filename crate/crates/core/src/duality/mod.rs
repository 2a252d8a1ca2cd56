//! Matlis duality over an Artinian algebra: the canonical module, duals of
//! ideals, the trace of `ω`, the involution `f ↦ f*` on `Hom_R(ω, R)` and
//! self-dual ideals.

mod module;
mod search;
mod selfdual;

use std::sync::{Arc, OnceLock};

pub use module::{dual_map, hom_basis, matlis_dual, HomSpace, ModuleMap, ModuleRep};
pub(crate) use search::for_each_projective;
pub use search::SearchConfig;
pub use selfdual::{
    self_dual_witness, teter_check, verify_witness, SelfDualResult, SelfDualVerdict, TeterConclusion,
    TeterReport, TeterRoute,
};

use crate::artin::{ArtinAlgebra, IdealRep};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Subspace};

/// `ω_R`: the `k`-dual of `R` with transposed actions.
pub fn canonical_module(r: &ArtinAlgebra) -> ModuleRep {
    ModuleRep::ring(r).matlis_dual()
}

/// The ideal `a` as a module, with its inclusion into `R`.
pub fn as_module(r: &ArtinAlgebra, a: &IdealRep) -> (ModuleRep, ModuleMap) {
    let ring = Arc::new(ModuleRep::ring(r));
    let (sub, incl) = ring.submodule(a.space()).expect("ideals are submodules");
    let sub = Arc::new(sub);
    let map = ModuleMap::new_unchecked(sub.clone(), ring, incl);
    ((*sub).clone(), map)
}

/// `a^∨`, realized as `ω/(0 :_ω a)` through the surjection `i^∨`.
pub fn ideal_dual(r: &ArtinAlgebra, a: &IdealRep) -> ModuleRep {
    ideal_dual_with_projection(r, a).0
}

/// `a^∨` together with the matrix of `ω → a^∨`.
pub fn ideal_dual_with_projection(r: &ArtinAlgebra, a: &IdealRep) -> (ModuleRep, Matrix) {
    let omega = canonical_module(r);
    let ann = omega.annihilated_by(r, a);
    omega.quotient(&ann).expect("annihilators are submodules")
}

/// `ω*(ω)`, the sum of the images of all maps `ω → R`.
pub fn trace_of_canonical(r: &ArtinAlgebra) -> IdealRep {
    Duality::new(r).trace()
}

/// `f*` for `f : ω → R`.
pub fn star(r: &ArtinAlgebra, f: &ModuleMap) -> Result<ModuleMap> {
    Duality::new(r).star(f)
}

/// Teter's condition `f(x) y = f(y) x`, tested as `f = f*`.
pub fn is_teter_map(r: &ArtinAlgebra, f: &ModuleMap) -> Result<bool> {
    Duality::new(r).is_teter_map(f)
}

/// `h = f + f*`.
pub fn symmetrize(r: &ArtinAlgebra, f: &ModuleMap) -> Result<ModuleMap> {
    Duality::new(r).symmetrize(f)
}

/// Outcome of the claims about `h = f + f*`, with `a = f(ω)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizationCheck {
    /// `h = h*`.
    pub teter: bool,
    /// `ker h ∩ aω ⊆ ker f`.
    pub kernel_meet: bool,
    /// `ker f ⊆ ker h ⊆ (0 :_ω a^2)`.
    pub kernel_bounds: bool,
    /// Whether `(0 :_R a) ⊆ a^2`.
    pub strong_hypothesis: bool,
    /// `ker h = ker f` and `h(ω) = a`, checked when the hypothesis holds.
    pub same_kernel_and_image: Option<bool>,
}

impl SymmetrizationCheck {
    pub fn all_hold(&self) -> bool {
        self.teter && self.kernel_meet && self.kernel_bounds && self.same_kernel_and_image != Some(false)
    }
}

/// Duality data of one algebra: `R` and `ω` as modules and a basis of
/// `Hom_R(ω, R)`, computed once.
#[derive(Debug)]
pub struct Duality<'a> {
    r: &'a ArtinAlgebra,
    ring: Arc<ModuleRep>,
    omega: Arc<ModuleRep>,
    hom: OnceLock<HomSpace>,
}

impl<'a> Duality<'a> {
    pub fn new(r: &'a ArtinAlgebra) -> Duality<'a> {
        let ring = Arc::new(ModuleRep::ring(r));
        let omega = Arc::new(ring.matlis_dual());
        Duality {
            r,
            ring,
            omega,
            hom: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> &'a ArtinAlgebra {
        self.r
    }

    pub fn ring(&self) -> &Arc<ModuleRep> {
        &self.ring
    }

    pub fn omega(&self) -> &Arc<ModuleRep> {
        &self.omega
    }

    /// `Hom_R(ω, R)`.
    pub fn hom_omega_ring(&self) -> &HomSpace {
        self.hom
            .get_or_init(|| hom_basis(self.r, &self.omega, &self.ring))
    }

    pub fn trace(&self) -> IdealRep {
        let space = self.hom_omega_ring().image_sum();
        self.r
            .ideal_from_space(space)
            .expect("images of R-linear maps are ideals")
    }

    /// Wraps a matrix as a map `ω → R`, checking linearity.
    pub fn map_from_matrix(&self, m: Matrix) -> Result<ModuleMap> {
        ModuleMap::new(self.omega.clone(), self.ring.clone(), m)
    }

    /// `(0 :_ω a)`.
    pub fn omega_annihilated_by(&self, a: &IdealRep) -> Subspace {
        self.omega.annihilated_by(self.r, a)
    }

    /// `a ω`.
    pub fn ideal_times_omega(&self, a: &IdealRep) -> Subspace {
        self.omega
            .ideal_times(self.r, a, &Subspace::full(self.r.field(), self.r.dim()))
    }

    /// `x · u` for `x ∈ R`, `u ∈ ω`.
    pub fn omega_mul(&self, x: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        self.omega.act(self.r, x).mul_vec(u)
    }

    /// The image `f(ω)` as an ideal.
    pub fn image_ideal(&self, f: &ModuleMap) -> IdealRep {
        self.r
            .ideal_from_space(f.image())
            .expect("images of R-linear maps are ideals")
    }

    fn check_omega_to_ring(&self, f: &ModuleMap) -> Result<()> {
        if **f.domain() != *self.omega || **f.codomain() != *self.ring {
            return Err(Error::InvalidInput("expected a map ω → R".into()));
        }
        Ok(())
    }

    /// `f*`, the unique map with `f*(u) v = f(v) u` in `ω`.
    ///
    /// For each basis vector `u` of `ω` the endomorphism `v ↦ f(v) u` of
    /// `ω` is multiplication by a unique ring element, read off as the
    /// image of `1` under the transposed matrix and then checked.
    pub fn star(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.check_omega_to_ring(f)?;
        let r = self.r;
        let lambda = r.dim();
        let table = r.table();
        let mut cols = Vec::with_capacity(lambda);
        for u in 0..lambda {
            // E[i][j] = u(e_i f(v_j)) = (row u of table[i]) · F v_j
            let rows: Vec<Vec<_>> = table.iter().map(|t| t.row(u).to_vec()).collect();
            let e = Matrix::from_rows(r.field(), lambda, &rows).mul(f.matrix())?;
            let elem = e.transpose().mul_vec(r.unit());
            if r.mult_matrix(&elem).transpose() != e {
                return Err(Error::Internal(
                    "endomorphism of ω is not multiplication by a ring element".into(),
                ));
            }
            cols.push(elem);
        }
        let m = Matrix::from_columns(r.field(), lambda, &cols);
        Ok(ModuleMap::new_unchecked(self.omega.clone(), self.ring.clone(), m))
    }

    pub fn is_teter_map(&self, f: &ModuleMap) -> Result<bool> {
        Ok(self.star(f)?.matrix() == f.matrix())
    }

    /// `f(x) y = f(y) x` on every pair of basis vectors of `ω`.
    pub fn teter_identity_on_basis(&self, f: &ModuleMap) -> bool {
        let lambda = self.r.dim();
        let fx: Vec<Matrix> = (0..lambda)
            .map(|i| self.omega.act(self.r, &f.matrix().column(i)))
            .collect();
        (0..lambda).all(|x| (0..lambda).all(|y| fx[x].column(y) == fx[y].column(x)))
    }

    /// `h = f + f*`; requires `2` invertible and `ker f = (0 :_ω f(ω))`.
    pub fn symmetrize(&self, f: &ModuleMap) -> Result<ModuleMap> {
        self.check_omega_to_ring(f)?;
        if !self.r.field().two_invertible() {
            return Err(Error::CharacteristicTwo);
        }
        let a = self.image_ideal(f);
        if f.kernel() != self.omega_annihilated_by(&a) {
            return Err(Error::Hypothesis("ker f differs from (0 :_ω f(ω))".into()));
        }
        f.add(&self.star(f)?)
    }

    /// Evaluates the claims about `h = f + f*` by subspace computations.
    pub fn check_symmetrization(&self, f: &ModuleMap, h: &ModuleMap) -> Result<SymmetrizationCheck> {
        let r = self.r;
        let a = self.image_ideal(f);
        let ker_f = f.kernel();
        let ker_h = h.kernel();
        let teter = self.is_teter_map(h)?;
        let a_omega = self.ideal_times_omega(&a);
        let kernel_meet = ker_h.meet(&a_omega)?.is_subspace_of(&ker_f);
        let a2 = r.ideal_product(&a, &a);
        let kernel_bounds =
            ker_f.is_subspace_of(&ker_h) && ker_h.is_subspace_of(&self.omega_annihilated_by(&a2));
        let strong_hypothesis = r.annihilator(&a).is_subideal_of(&a2);
        let same_kernel_and_image = strong_hypothesis.then(|| ker_h == ker_f && h.image() == *a.space());
        Ok(SymmetrizationCheck {
            teter,
            kernel_meet,
            kernel_bounds,
            strong_hypothesis,
            same_kernel_and_image,
        })
    }

    /// `L(a) = {f : f(ω) ⊆ a, f((0 :_ω a)) = 0}` as a list of basis
    /// matrices.
    pub fn witness_family(&self, a: &IdealRep) -> Vec<Matrix> {
        let hom = self.hom_omega_ring();
        let ann = self.omega_annihilated_by(a);
        let p = a.space().annihilator();
        let k = ann.basis().transpose();
        self.constrained_family(hom.basis(), |m| {
            let mut v = p.mul(m).expect("shape").entries().to_vec();
            if ann.dim() > 0 {
                v.extend(m.mul(&k).expect("shape").entries().iter().cloned());
            }
            v
        })
    }

    /// Symmetric maps with `f(ω) ⊆ m`.
    pub fn symmetric_family(&self) -> Result<Vec<Matrix>> {
        let hom = self.hom_omega_ring();
        let p = self.r.maximal_space().annihilator();
        let stars: Vec<Matrix> = hom
            .maps()
            .iter()
            .map(|f| self.star(f).map(|g| g.matrix().clone()))
            .collect::<Result<_>>()?;
        let pairs: Vec<(Matrix, Matrix)> = hom.basis().iter().cloned().zip(stars).collect();
        let constraint = |(m, s): &(Matrix, Matrix)| {
            let mut v = s.sub(m).expect("shape").entries().to_vec();
            v.extend(p.mul(m).expect("shape").entries().iter().cloned());
            v
        };
        let field = self.r.field();
        if pairs.is_empty() {
            return Ok(Vec::new());
        }
        let cols: Vec<Vec<_>> = pairs.iter().map(constraint).collect();
        let sys = Matrix::from_columns(field, cols[0].len(), &cols);
        Ok(sys
            .kernel()
            .vectors()
            .iter()
            .map(|c| hom.combination_matrix(c))
            .collect())
    }

    fn constrained_family(
        &self,
        basis: &[Matrix],
        constraint: impl Fn(&Matrix) -> Vec<Scalar>,
    ) -> Vec<Matrix> {
        if basis.is_empty() {
            return Vec::new();
        }
        let field = self.r.field();
        let cols: Vec<Vec<_>> = basis.iter().map(&constraint).collect();
        let coeffs = if cols[0].is_empty() {
            Subspace::full(field, basis.len())
        } else {
            Matrix::from_columns(field, cols[0].len(), &cols).kernel()
        };
        let lambda = self.r.dim();
        coeffs
            .vectors()
            .iter()
            .map(|c| Matrix::linear_combination(field, lambda, lambda, basis, c))
            .collect()
    }
}
