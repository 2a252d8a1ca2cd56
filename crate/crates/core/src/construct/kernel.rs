//! The kernel construction: from a symmetric self-duality of `ā` and a
//! parameter ideal `d ⊆ a`, an ideal `ab ⊆ c ⊆ b` with `T/c` Gorenstein.

use super::ambient::{monomial_projection, primary_index, Ambient};
use super::{certify, CoverReport};
use crate::artin::{build_algebra, ArtinAlgebra, Presentation};
use crate::duality::{Duality, ModuleMap};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Subspace};
use crate::polyring::Polynomial;

/// Postconditions of the kernel construction, all of which hold on success.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct KernelRecord {
    /// `N'` with `m^{N'} ⊆ ab`, the truncation used throughout.
    pub truncation: u32,
    /// `(c :_T a) = b`.
    pub colon_equals_b: bool,
    /// `dim soc(T/c)`.
    pub socle_dim: usize,
    /// `λ(T/c) - λ(R) = λ(R/ā)`.
    pub length_identity: bool,
    /// `b^2 ⊆ c`.
    pub b_squared_in_c: bool,
}

/// Builds `c` with `c/ab = ker(φ̂ : b/ab → ω)`, where
/// `φ̂(x a') = φ(x̄)(ā')` for `x ∈ d`, `a' ∈ a`, and `φ(f(u))(z) = z u`.
///
/// `f : ω → R` must be a symmetric witness for `ā = a/b`, given on the
/// algebra `build_algebra(p)`.
pub fn thm51_construct(
    p: &Presentation,
    a_gens: &[Polynomial],
    d_gens: &[Polynomial],
    f: &ModuleMap,
) -> Result<CoverReport> {
    let field = p.field;
    let n = p.nvars();
    let r = build_algebra(p)?;
    let n_b = r.found_n().expect("presented");
    let (n_a, _) = primary_index(field, &p.vars, a_gens, p.max_n).map_err(|e| match e {
        Error::UnitIdeal => Error::Hypothesis("a must be a proper ideal".into()),
        Error::NotPrimary { .. } => Error::Hypothesis("a is not m-primary".into()),
        other => other,
    })?;
    if d_gens.len() != n || primary_index(field, &p.vars, d_gens, p.max_n).is_err() {
        return Err(Error::Hypothesis(format!(
            "d is not generated by a system of parameters ({n} elements generating an m-primary ideal)"
        )));
    }
    // m^{N_a - 1} ⊆ a and m^{N_b - 1} ⊆ b give m^{N_a + N_b - 2} ⊆ ab
    let truncation = (n_a + n_b - 2).max(2);
    let amb = Ambient::new(field, n, truncation)?;
    let a = amb.ideal(a_gens);
    let d = amb.ideal(d_gens);
    let b = amb.ideal(&p.generators);
    let ab = amb.product(a_gens, &b);
    if !d.is_subspace_of(&a) {
        return Err(Error::Hypothesis("d is not contained in a".into()));
    }
    if !b.is_subspace_of(&amb.product(a_gens, &d)) {
        return Err(Error::Hypothesis("(b) b is not contained in a·d".into()));
    }
    if !amb.colon(&b, a_gens).is_subspace_of(&d) {
        return Err(Error::Hypothesis("(c) (b :_T a) is not contained in d".into()));
    }
    if !amb.space().max_power(truncation).is_subspace_of(&ab) {
        return Err(Error::Internal("truncation does not lie inside ab".into()));
    }

    let to_r = amb.projection_to(&r)?;
    let a_bar = r.ideal_from_space(a.image_under(&to_r)?)?;
    let duality = Duality::new(&r);
    let f = duality.map_from_matrix(f.matrix().clone())?;
    if !duality.verify_witness(&a_bar, &f) {
        return Err(Error::Hypothesis(
            "(a) f is not a self-dual witness for a mod b".into(),
        ));
    }
    if !duality.teter_identity_on_basis(&f) {
        return Err(Error::Hypothesis(
            "(a) f does not satisfy Teter's condition".into(),
        ));
    }

    // φ̂ on the spanning set {x_i y : y in a basis of a} of da, modulo ab
    let lambda = r.dim();
    let a_basis = a.vectors();
    let mut products = Vec::new();
    let mut values = Vec::new();
    for x in d_gens {
        let x_bar = to_r.mul_vec(&amb.vector_of(x));
        let u = f
            .matrix()
            .solve_vec(&x_bar)?
            .ok_or_else(|| Error::Internal("d is not inside f(ω)".into()))?;
        let mx = amb.mul_matrix(x);
        for y in &a_basis {
            products.push(ab.reduce(&mx.mul_vec(y)));
            values.push(duality.omega_mul(&to_r.mul_vec(y), &u));
        }
    }
    let lhs = Matrix::from_columns(field, amb.dim(), &products);
    let rhs = Matrix::from_columns(field, lambda, &values);
    let joint = lhs.vstack(&rhs)?;
    if joint.rank() != lhs.rank() {
        return Err(Error::Hypothesis(
            "phi-hat is not well defined on da/ab (inconsistent values)".into(),
        ));
    }
    let b_basis: Vec<Vec<Scalar>> = b.vectors().iter().map(|z| ab.reduce(z)).collect();
    let targets = Matrix::from_columns(field, amb.dim(), &b_basis);
    let coeffs = lhs
        .solve(&targets)?
        .ok_or_else(|| Error::Internal("b is not inside da + ab".into()))?
        .particular;
    let psi_on_b = rhs.mul(&coeffs)?;
    let kernel_elems: Vec<Vec<Scalar>> = psi_on_b
        .kernel()
        .vectors()
        .iter()
        .map(|c| targets.mul_vec(c))
        .collect();
    let c = ab.join(&Subspace::span(field, amb.dim(), &kernel_elems))?;

    let colon_equals_b = amb.colon(&c, a_gens) == b;
    let b_squared_in_c = amb.product(&p.generators, &b).is_subspace_of(&c);
    let generators = amb.minimal_generators(&c);
    let vars = p.vars.clone();
    let s = ArtinAlgebra::from_quotient(amb.into_space(), c, vars);
    let socle_dim = s.socle_dim();
    let length_identity = s.dim() - r.dim() == a_bar.colength();
    let record = KernelRecord {
        truncation,
        colon_equals_b,
        socle_dim,
        length_identity,
        b_squared_in_c,
    };
    for (ok, what) in [
        (colon_equals_b, "(c :_T a) = b"),
        (socle_dim == 1, "dim soc(T/c) = 1"),
        (length_identity, "λ(T/c) - λ(R) = λ(R/a)"),
        (b_squared_in_c, "b^2 ⊆ c"),
    ] {
        if !ok {
            return Err(Error::Internal(format!("kernel construction violates {what}")));
        }
    }
    let psi = monomial_projection(&s, &r)?;
    let mut report = certify(&r, s, psi, generators)?;
    report.kernel_record = Some(record);
    Ok(report)
}
