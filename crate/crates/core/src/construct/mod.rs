//! Gorenstein covers `S ↠ R`: constructions, verification, and the bounds
//! they give on the Gorenstein colength `g(R)`.

pub(crate) mod ambient;
mod bounds;
mod covers;
mod decide;
mod kernel;

use std::sync::Arc;

pub use bounds::{g_bounds, BoundsConfig, BoundsReport, SelfDualBound, SelfDualMethod};
pub use covers::{ci_cover, find_retract, idealization, teter_cover, verify_cover, RetractSpec, CI_ATTEMPTS};
pub use decide::{colength_two_decision, Candidate, ColengthTwoReport, ColengthTwoVerdict};
pub use kernel::{thm51_construct, KernelRecord};

use crate::artin::{ArtinAlgebra, IdealRep};
use crate::duality::{hom_basis, Duality, ModuleMap, ModuleRep};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Subspace};
use crate::polyring::Polynomial;

/// Findings about a cover `ψ : S ↠ R` with kernel `b̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverChecks {
    pub gorenstein: bool,
    pub cover_length: usize,
    pub base_length: usize,
    /// `ψ((0 :_S b̄))`, which is `ψ(ω)` when `S` is Gorenstein.
    pub image: IdealRep,
    /// `λ(R/ψ(ω))`.
    pub image_colength: usize,
    /// `b̄^2 = 0`.
    pub kernel_square_zero: bool,
    /// `λ(S) - λ(R) >= λ(R/ψ(ω))`.
    pub length_inequality: bool,
    /// Equality in the inequality above holds exactly when `b̄^2 = 0`.
    pub equality_iff_square_zero: bool,
    /// `(0 :_S b̄)` has length `λ(R)` and a one-dimensional socle.
    pub annihilator_is_canonical: bool,
    /// `ker f · f(ω) = 0` for `f = ψ` restricted to `(0 :_S b̄) ≅ ω`.
    pub kernel_kills_image: bool,
    /// `f(x) y = f(y) x` on basis pairs.
    pub teter: bool,
    /// `f` certifies `ψ(ω) ≅ ψ(ω)^∨`.
    pub selfdual: bool,
}

impl CoverChecks {
    /// Every check a Gorenstein cover must pass.
    pub fn all_pass(&self) -> bool {
        self.gorenstein
            && self.length_inequality
            && self.equality_iff_square_zero
            && self.annihilator_is_canonical
            && self.kernel_kills_image
            && self.teter
            && self.selfdual
    }
}

/// A Gorenstein cover of `R` with the evidence collected while verifying it.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub cover: ArtinAlgebra,
    /// Matrix of `ψ : S → R` on the bases.
    pub projection: Matrix,
    /// `b̄ = ker ψ`.
    pub kernel: IdealRep,
    /// Generators of `c` when `S = T/c`; empty for covers built from tables.
    pub generators: Vec<Polynomial>,
    /// `f : ω_R → R` through `ω_R ≅ (0 :_S b̄)`, when `S` is Gorenstein.
    pub canonical_map: Option<ModuleMap>,
    pub checks: CoverChecks,
    /// Extra record of the kernel construction.
    pub kernel_record: Option<KernelRecord>,
}

impl CoverReport {
    /// `λ(S) - λ(R)`.
    pub fn excess(&self) -> usize {
        self.checks.cover_length - self.checks.base_length
    }

    /// `c` as text in the variables of `R`.
    pub fn format_generators(&self, vars: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| g.format(vars)).collect()
    }
}

/// Checks that `psi` is a surjective ring map `S → R` and collects the
/// facts about `ω` and `b̄ = ker ψ`.
pub(crate) fn certify(
    r: &ArtinAlgebra,
    s: ArtinAlgebra,
    psi: Matrix,
    generators: Vec<Polynomial>,
) -> Result<CoverReport> {
    if psi.rows() != r.dim() || psi.cols() != s.dim() {
        return Err(Error::DimensionMismatch("cover projection".into()));
    }
    if psi.mul_vec(s.unit()) != r.unit() {
        return Err(Error::Internal("projection does not preserve 1".into()));
    }
    let images: Vec<_> = (0..s.dim()).map(|i| psi.column(i)).collect();
    for (i, t) in s.table().iter().enumerate() {
        for j in 0..=i {
            if psi.mul_vec(&t.column(j)) != r.mul(&images[i], &images[j]) {
                return Err(Error::Internal(format!(
                    "projection is not multiplicative on basis pair ({i}, {j})"
                )));
            }
        }
    }
    if psi.rank() != r.dim() {
        return Err(Error::Internal("projection is not surjective".into()));
    }
    let kernel = s.ideal_from_space(psi.kernel())?;
    let gorenstein = s.is_gorenstein();
    let w = s.annihilator(&kernel);
    let image = r.ideal_from_space(w.space().image_under(&psi)?)?;
    let kernel_square_zero = s.ideal_product(&kernel, &kernel).is_zero();
    let excess = s.dim() - r.dim();
    let image_colength = image.colength();
    let length_inequality = excess >= image_colength;
    let equality_iff_square_zero = (excess == image_colength) == kernel_square_zero;
    let w_socle = s.ideal_meet(&w, &s.socle());
    let annihilator_is_canonical = w.dim() == r.dim() && w_socle.dim() == 1;

    let duality = Duality::new(r);
    let mut canonical_map = None;
    let (mut kernel_kills_image, mut teter, mut selfdual) = (false, false, false);
    if annihilator_is_canonical {
        let f = omega_into_cover(&duality, &s, &psi, w.space())?;
        kernel_kills_image = f.kernel().is_subspace_of(&duality.omega_annihilated_by(&image));
        teter = duality.teter_identity_on_basis(&f);
        selfdual = duality.verify_witness(&image, &f);
        canonical_map = Some(f);
    }
    let checks = CoverChecks {
        gorenstein,
        cover_length: s.dim(),
        base_length: r.dim(),
        image,
        image_colength,
        kernel_square_zero,
        length_inequality,
        equality_iff_square_zero,
        annihilator_is_canonical,
        kernel_kills_image,
        teter,
        selfdual,
    };
    Ok(CoverReport {
        cover: s,
        projection: psi,
        kernel,
        generators,
        canonical_map,
        checks,
        kernel_record: None,
    })
}

/// `ω_R → (0 :_S b̄) → R`: an isomorphism onto `W = (0 :_S b̄)` composed
/// with `ψ`. `W` is an `R`-module because `b̄` kills it.
fn omega_into_cover(
    duality: &Duality<'_>,
    s: &ArtinAlgebra,
    psi: &Matrix,
    w: &Subspace,
) -> Result<ModuleMap> {
    let r = duality.algebra();
    let field = r.field();
    let w_basis = w.vectors();
    let actions = r
        .generators()
        .iter()
        .map(|g| {
            let lift = psi
                .solve_vec(g)?
                .ok_or_else(|| Error::Internal("projection is not surjective".into()))?;
            let cols = w_basis
                .iter()
                .map(|v| {
                    w.coordinates(&s.mul(&lift, v))
                        .ok_or_else(|| Error::Internal("(0 :_S b) is not an ideal".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(field, w_basis.len(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let w_module = Arc::new(ModuleRep::new(field, w_basis.len(), actions)?);
    let hom = hom_basis(r, duality.omega(), &w_module);
    // Hom(ω, W) ≅ R, and any k-basis of R contains a unit
    let iso = hom
        .basis()
        .iter()
        .find(|m| m.rank() == r.dim())
        .ok_or_else(|| Error::Internal("(0 :_S b) is not isomorphic to ω".into()))?;
    let inclusion = Matrix::from_columns(field, s.dim(), &w_basis);
    let f = psi.mul(&inclusion)?.mul(iso)?;
    duality.map_from_matrix(f)
}
