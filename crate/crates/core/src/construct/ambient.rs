//! Ideals of `T = k[x_1..x_n]` computed inside a truncation `T/m^N`.

use crate::artin::{build_algebra, ArtinAlgebra, Presentation, TruncatedSpace, MAX_TRUNCATION_DIM};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace};
use crate::polyring::{Monomial, Polynomial};

/// `T/m^N` together with the multiplication maps needed for ideal
/// products and colons. Only exact for ideals containing `m^N`.
pub(crate) struct Ambient {
    space: TruncatedSpace,
    shifts: Vec<Matrix>,
}

impl Ambient {
    pub(crate) fn new(field: Field, nvars: usize, n: u32) -> Result<Ambient> {
        let space = TruncatedSpace::new(field, nvars, n);
        if space.dim() > MAX_TRUNCATION_DIM {
            return Err(Error::OverBound(format!(
                "dim T/m^{n} = {} exceeds {MAX_TRUNCATION_DIM}",
                space.dim()
            )));
        }
        let dim = space.dim();
        let shifts = (0..nvars)
            .map(|v| {
                let cols: Vec<Vec<Scalar>> =
                    (0..dim).map(|i| space.shift(v, &space.unit_vector(i))).collect();
                Matrix::from_columns(field, dim, &cols)
            })
            .collect();
        Ok(Ambient { space, shifts })
    }

    pub(crate) fn space(&self) -> &TruncatedSpace {
        &self.space
    }

    pub(crate) fn into_space(self) -> TruncatedSpace {
        self.space
    }

    /// Multiplication by each variable.
    pub(crate) fn shifts(&self) -> &[Matrix] {
        &self.shifts
    }

    pub(crate) fn field(&self) -> Field {
        self.space.field()
    }

    pub(crate) fn dim(&self) -> usize {
        self.space.dim()
    }

    pub(crate) fn ideal(&self, gens: &[Polynomial]) -> Subspace {
        self.space.ideal_span_polys(gens)
    }

    /// Multiplication by `p` on `T/m^N`.
    pub(crate) fn mul_matrix(&self, p: &Polynomial) -> Matrix {
        let n = self.space.n();
        let nvars = self.space.nvars();
        let cols: Vec<Vec<Scalar>> = self
            .space
            .monomials()
            .iter()
            .map(|m| {
                let q = p.multiply_truncate(&Polynomial::monomial(self.field(), m.clone()), n);
                debug_assert_eq!(q.nvars(), nvars);
                self.space.vector_of(&q)
            })
            .collect();
        Matrix::from_columns(self.field(), self.dim(), &cols)
    }

    /// `a·J` for `a = (gens)` and an ideal `J`.
    pub(crate) fn product(&self, gens: &[Polynomial], j: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.field(), self.dim());
        for g in gens {
            let img = j.image_under(&self.mul_matrix(g)).expect("square");
            out = out.join(&img).expect("same ambient");
        }
        out
    }

    /// `(c : (gens))`.
    pub(crate) fn colon(&self, c: &Subspace, gens: &[Polynomial]) -> Subspace {
        let mut out = Subspace::full(self.field(), self.dim());
        for g in gens {
            let pre = c.preimage(&self.mul_matrix(g)).expect("square");
            out = out.meet(&pre).expect("same ambient");
        }
        out
    }

    /// `m·J`.
    pub(crate) fn maximal_times(&self, j: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.field(), self.dim());
        for s in &self.shifts {
            out = out
                .join(&j.image_under(s).expect("square"))
                .expect("same ambient");
        }
        out
    }

    /// `(c : m)`.
    pub(crate) fn socle_colon(&self, c: &Subspace) -> Subspace {
        let mut out = Subspace::full(self.field(), self.dim());
        for s in &self.shifts {
            out = out.meet(&c.preimage(s).expect("square")).expect("same ambient");
        }
        out
    }

    /// Minimal generators of an ideal, as polynomials.
    pub(crate) fn minimal_generators(&self, j: &Subspace) -> Vec<Polynomial> {
        j.complement_basis_over(&self.maximal_times(j))
            .iter()
            .map(|v| self.space.polynomial_of(v))
            .collect()
    }

    /// The map `T/m^N → R` sending each monomial to its class.
    pub(crate) fn projection_to(&self, r: &ArtinAlgebra) -> Result<Matrix> {
        let cols = self
            .space
            .monomials()
            .iter()
            .map(|m| r.element_of(&Polynomial::monomial(self.field(), m.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), r.dim(), &cols))
    }

    pub(crate) fn vector_of(&self, p: &Polynomial) -> Vec<Scalar> {
        self.space.vector_of(p)
    }
}

/// The least `N` with `m^{N-1} ⊆ (gens)`, or the error of [`build_algebra`].
pub(crate) fn primary_index(
    field: Field,
    vars: &[String],
    gens: &[Polynomial],
    max_n: u32,
) -> Result<(u32, ArtinAlgebra)> {
    let p = Presentation::new(field, vars.to_vec(), gens.to_vec())?.with_max_n(max_n);
    let a = build_algebra(&p)?;
    let n = a.found_n().expect("presented algebra");
    Ok((n, a))
}

/// `ψ : S → R` for two quotients of the same polynomial ring, sending each
/// standard monomial of `S` to its class in `R`.
pub(crate) fn monomial_projection(s: &ArtinAlgebra, r: &ArtinAlgebra) -> Result<Matrix> {
    let pres = s
        .presentation()
        .ok_or_else(|| Error::InvalidInput("cover has no polynomial presentation".into()))?;
    let cols = pres
        .basis_monomials
        .iter()
        .map(|m: &Monomial| r.element_of(&Polynomial::monomial(r.field(), m.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(r.field(), r.dim(), &cols))
}
