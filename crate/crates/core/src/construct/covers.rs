//! Covers built directly: complete intersections, idealization, the twisted
//! idealization over an algebra retract, and verification of a given `c`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ambient::{monomial_projection, primary_index, Ambient};
use super::{certify, CoverReport};
use crate::artin::{build_algebra, ArtinAlgebra, IdealRep, Presentation};
use crate::duality::{Duality, ModuleMap};
use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar, Subspace};
use crate::polyring::Polynomial;

/// Random parameter systems tried by [`ci_cover`].
pub const CI_ATTEMPTS: usize = 32;

/// `S = R ⊕ ω` with `(r, u)(s, v) = (rs, rv + su)`; the projection is the
/// first coordinate.
pub fn idealization(r: &ArtinAlgebra) -> Result<CoverReport> {
    let field = r.field();
    let lambda = r.dim();
    let table = r.table();
    let dim = 2 * lambda;
    let mut s_table = Vec::with_capacity(dim);
    for t in table {
        // (e_i, 0) acts as L_i on R and as L_i^T on ω
        let mut m = Matrix::zeros(field, dim, dim);
        let tt = t.transpose();
        for a in 0..lambda {
            for b in 0..lambda {
                m.set(a, b, t.get(a, b).clone());
                m.set(lambda + a, lambda + b, tt.get(a, b).clone());
            }
        }
        s_table.push(m);
    }
    for j in 0..lambda {
        // (0, e_j*) sends (s, 0) to (0, s·e_j*), whose l-th entry is L_s[j][l]
        let mut m = Matrix::zeros(field, dim, dim);
        for (k, t) in table.iter().enumerate() {
            for l in 0..lambda {
                m.set(lambda + l, k, t.get(j, l).clone());
            }
        }
        s_table.push(m);
    }
    let mut unit = r.unit().to_vec();
    unit.extend(r.zero_vector());
    let maximal_vs: Vec<Vec<Scalar>> = r
        .maximal_space()
        .vectors()
        .into_iter()
        .map(|mut v| {
            v.extend(r.zero_vector());
            v
        })
        .chain((0..lambda).map(|j| {
            let mut v = vec![field.zero(); dim];
            v[lambda + j] = field.one();
            v
        }))
        .collect();
    let maximal = Subspace::span(field, dim, &maximal_vs);
    let labels = r
        .labels()
        .iter()
        .cloned()
        .chain(r.labels().iter().map(|l| format!("w({l})")))
        .collect();
    let s = ArtinAlgebra::from_table(field, s_table, unit, maximal, labels)?;
    let psi = Matrix::identity(field, lambda).hstack(&Matrix::zeros(field, lambda, lambda))?;
    certify(r, s, psi, Vec::new())
}

/// A complete-intersection cover `T/c` with `c` generated by `n` random
/// combinations of the generators of `b`.
pub fn ci_cover(p: &Presentation, seed: u64) -> Result<(Vec<Polynomial>, CoverReport)> {
    let r = build_algebra(p)?;
    let field = p.field;
    let n = p.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CI_ATTEMPTS {
        let c: Vec<Polynomial> = (0..n)
            .map(|_| {
                p.generators.iter().fold(Polynomial::zero(field, n), |acc, g| {
                    acc.add(&g.scale(&field.random(&mut rng)))
                })
            })
            .collect();
        if c.iter().any(Polynomial::is_zero) {
            continue;
        }
        // a finite local intersection number is at most the Bezout number
        let bezout = c
            .iter()
            .map(|g| g.degree().unwrap_or(0) as u64)
            .fold(1u64, |acc, d| acc.saturating_mul(d));
        let max_n = p
            .max_n
            .min(bezout.saturating_add(1).min(u32::MAX as u64) as u32)
            .max(2);
        let Ok((_, s)) = primary_index(field, &p.vars, &c, max_n) else {
            continue;
        };
        let psi = monomial_projection(&s, &r)?;
        let report = certify(&r, s, psi, c.clone())?;
        if !report.checks.gorenstein {
            return Err(Error::Internal(
                "complete intersection with a socle of dimension above one".into(),
            ));
        }
        return Ok((c, report));
    }
    Err(Error::Hypothesis(format!(
        "no parameter system found among {CI_ATTEMPTS} random combinations of the generators"
    )))
}

/// Verifies `S = T/c` as a cover of `R = T/b`.
pub fn verify_cover(p: &Presentation, c: &[Polynomial]) -> Result<CoverReport> {
    let r = build_algebra(p)?;
    let (n_c, s) = primary_index(p.field, &p.vars, c, p.max_n)?;
    let n = n_c.max(r.found_n().expect("presented"));
    let amb = Ambient::new(p.field, p.nvars(), n)?;
    if !amb.ideal(c).is_subspace_of(&amb.ideal(&p.generators)) {
        return Err(Error::Hypothesis("c is not contained in b".into()));
    }
    let psi = monomial_projection(&s, &r)?;
    certify(&r, s, psi, c.to_vec())
}

/// A subalgebra `T₀` with `R = T₀ ⊕ a` as vector spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetractSpec {
    pub ideal: IdealRep,
    /// A basis of `T₀`.
    pub basis: Vec<Vec<Scalar>>,
}

impl RetractSpec {
    pub fn span(&self, r: &ArtinAlgebra) -> Subspace {
        Subspace::span(r.field(), r.dim(), &self.basis)
    }

    /// Contains `1`, closed under products, meets `a` in zero, and has the
    /// complementary dimension.
    pub fn is_valid(&self, r: &ArtinAlgebra) -> bool {
        let span = self.span(r);
        if span.dim() != self.basis.len() || !span.contains(r.unit()) {
            return false;
        }
        let closed = self
            .basis
            .iter()
            .all(|u| self.basis.iter().all(|v| span.contains(&r.mul(u, v))));
        closed
            && span.dim() + self.ideal.dim() == r.dim()
            && span
                .meet(self.ideal.space())
                .map(|m| m.is_zero())
                .unwrap_or(false)
    }
}

/// Vectors tried exhaustively when looking for a colength-two retract.
const RETRACT_ENUMERATION_LIMIT: u64 = 1 << 16;

/// An algebra retract of `R` with respect to `a`, for `λ(R/a) <= 2`.
///
/// Colength two needs `t ∈ m \ a` with `t^2 = 0`; `t` ranges over
/// `t₀ + a` for a fixed `t₀`.
pub fn find_retract(r: &ArtinAlgebra, a: &IdealRep) -> Option<RetractSpec> {
    let field = r.field();
    let spec = |basis: Vec<Vec<Scalar>>| {
        let s = RetractSpec {
            ideal: a.clone(),
            basis,
        };
        s.is_valid(r).then_some(s)
    };
    match a.colength() {
        0 => None,
        1 => spec(vec![r.unit().to_vec()]),
        2 => {
            let m = r.maximal_space();
            let t0 = m.complement_basis_over(a.space()).into_iter().next()?;
            let a_basis = a.vectors();
            let try_t = |t: Vec<Scalar>| -> Option<RetractSpec> {
                r.mul(&t, &t)
                    .iter()
                    .all(Scalar::is_zero)
                    .then(|| spec(vec![r.unit().to_vec(), t]))
                    .flatten()
            };
            if let Some(s) = try_t(t0.clone()) {
                return Some(s);
            }
            // Newton steps 2 t δ = -t^2 with δ ∈ a
            let mut t = t0.clone();
            for _ in 0..r.dim() {
                let sq = r.mul(&t, &t);
                let lt = r.mult_matrix(&t);
                let two_t_on_a = Matrix::from_columns(
                    field,
                    r.dim(),
                    &a_basis
                        .iter()
                        .map(|v| lt.mul_vec(v).iter().map(|x| x + x).collect::<Vec<Scalar>>())
                        .collect::<Vec<_>>(),
                );
                let rhs: Vec<Scalar> = sq.iter().map(|x| -x).collect();
                let Ok(Some(c)) = two_t_on_a.solve_vec(&rhs) else {
                    break;
                };
                let delta = a.space().combination(&c);
                t = t.iter().zip(&delta).map(|(x, d)| x + d).collect();
                if let Some(s) = try_t(t.clone()) {
                    return Some(s);
                }
            }
            let elems = field.elements()?;
            let q = elems.len() as u64;
            let count = q.checked_pow(a_basis.len() as u32)?;
            if count > RETRACT_ENUMERATION_LIMIT || a_basis.is_empty() {
                return None;
            }
            (0..count).find_map(|mut idx| {
                let coeffs: Vec<Scalar> = (0..a_basis.len())
                    .map(|_| {
                        let c = elems[(idx % q) as usize].clone();
                        idx /= q;
                        c
                    })
                    .collect();
                let delta = a.space().combination(&coeffs);
                try_t(t0.iter().zip(&delta).map(|(x, d)| x + d).collect())
            })
        }
        _ if a.is_zero() => spec((0..r.dim()).map(|i| r.basis_vector(i)).collect()),
        _ => None,
    }
}

/// `S = T₀ ⊕ ω` with `(s, x)(t, y) = (st, sy + tx + (f(x) y + f(y) x)/2)`
/// and `ψ(t, x) = t + f(x)`.
pub fn teter_cover(
    r: &ArtinAlgebra,
    a: &IdealRep,
    f: &ModuleMap,
    retract: &RetractSpec,
) -> Result<CoverReport> {
    let field = r.field();
    if !field.two_invertible() {
        return Err(Error::CharacteristicTwo);
    }
    if a.is_unit() {
        return Err(Error::Hypothesis("a must be a proper ideal".into()));
    }
    let duality = Duality::new(r);
    let f = duality.map_from_matrix(f.matrix().clone())?;
    if !duality.verify_witness(a, &f) {
        return Err(Error::Hypothesis("f is not a self-dual witness for a".into()));
    }
    if !r.annihilator(a).is_subideal_of(&r.ideal_product(a, a)) {
        return Err(Error::Hypothesis("(0 :_R a) is not contained in a^2".into()));
    }
    if retract.ideal != *a || !retract.is_valid(r) {
        return Err(Error::Hypothesis(
            "not an algebra retract with respect to a".into(),
        ));
    }
    let lambda = r.dim();
    let k = retract.basis.len();
    let dim = k + lambda;
    let t_span = retract.span(r);
    let t_coords = |v: &[Scalar]| -> Result<Vec<Scalar>> {
        let basis = Matrix::from_columns(field, lambda, &retract.basis);
        basis
            .solve_vec(v)?
            .ok_or_else(|| Error::Internal("retract is not closed".into()))
    };
    debug_assert_eq!(t_span.dim(), k);
    let half = field.from_i64(2).inv()?;
    let omega = duality.omega();
    // multiplication by f(e_j) on ω, for each basis vector e_j of ω
    let f_acts: Vec<Matrix> = (0..lambda).map(|j| omega.act(r, &f.matrix().column(j))).collect();
    let mut table = Vec::with_capacity(dim);
    for u in &retract.basis {
        let mut m = Matrix::zeros(field, dim, dim);
        for (c, v) in retract.basis.iter().enumerate() {
            for (row, x) in t_coords(&r.mul(u, v))?.into_iter().enumerate() {
                m.set(row, c, x);
            }
        }
        let act = omega.act(r, u);
        for a_ in 0..lambda {
            for b in 0..lambda {
                m.set(k + a_, k + b, act.get(a_, b).clone());
            }
        }
        table.push(m);
    }
    for j in 0..lambda {
        let mut m = Matrix::zeros(field, dim, dim);
        let ej = {
            let mut e = vec![field.zero(); lambda];
            e[j] = field.one();
            e
        };
        for (c, v) in retract.basis.iter().enumerate() {
            let col = omega.act(r, v).mul_vec(&ej);
            for (row, x) in col.into_iter().enumerate() {
                m.set(k + row, c, x);
            }
        }
        for l in 0..lambda {
            // (f(e_j) e_l + f(e_l) e_j) / 2
            let sum: Vec<Scalar> = f_acts[j]
                .column(l)
                .iter()
                .zip(f_acts[l].column(j))
                .map(|(x, y)| &(x + &y) * &half)
                .collect();
            for (row, x) in sum.into_iter().enumerate() {
                m.set(k + row, k + l, x);
            }
        }
        table.push(m);
    }
    let mut unit = t_coords(r.unit())?;
    unit.extend(vec![field.zero(); lambda]);
    let functional = r.maximal_space().annihilator();
    let t_max: Vec<Vec<Scalar>> = functional
        .mul(&Matrix::from_columns(field, lambda, &retract.basis))?
        .kernel()
        .vectors()
        .into_iter()
        .map(|mut v| {
            v.extend(vec![field.zero(); lambda]);
            v
        })
        .chain((0..lambda).map(|j| {
            let mut v = vec![field.zero(); dim];
            v[k + j] = field.one();
            v
        }))
        .collect();
    let maximal = Subspace::span(field, dim, &t_max);
    let labels = (0..k)
        .map(|i| format!("t{i}"))
        .chain(r.labels().iter().map(|l| format!("w({l})")))
        .collect();
    let s = ArtinAlgebra::from_table(field, table, unit, maximal, labels)?;
    let basis = Matrix::from_columns(field, lambda, &retract.basis);
    let psi = basis.hstack(f.matrix())?;
    let report = certify(r, s, psi, Vec::new())?;
    if !report.checks.gorenstein {
        return Err(Error::Internal("twisted idealization is not Gorenstein".into()));
    }
    if report.excess() != a.colength() {
        return Err(Error::Internal(format!(
            "twisted idealization has excess {} instead of {}",
            report.excess(),
            a.colength()
        )));
    }
    Ok(report)
}
