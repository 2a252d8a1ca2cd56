//! Ideal arithmetic inside an [`ArtinAlgebra`].

use super::algebra::ArtinAlgebra;
use super::truncated::Echelon;
use crate::error::{Error, Result};
use crate::exactalg::{Scalar, Subspace};
use crate::polyring::Polynomial;

/// An ideal of an Artinian algebra, stored as a canonical subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealRep {
    space: Subspace,
}

impl IdealRep {
    /// Wraps a subspace without checking closure; see
    /// [`ArtinAlgebra::ideal_from_space`] for the checked version.
    pub(crate) fn new_unchecked(space: Subspace) -> IdealRep {
        IdealRep { space }
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `λ(R/a)`.
    pub fn colength(&self) -> usize {
        self.space.codim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.space.is_full()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }

    pub fn is_subideal_of(&self, other: &IdealRep) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.space.vectors()
    }
}

impl ArtinAlgebra {
    /// The ideal generated by the vectors `gens`.
    pub fn ideal_generated(&self, gens: &[Vec<Scalar>]) -> IdealRep {
        let mut ech = Echelon::new(self.field(), self.dim());
        let mut queue: Vec<Vec<Scalar>> = gens.to_vec();
        while let Some(v) = queue.pop() {
            if let Some(r) = ech.insert(&v) {
                for a in self.actions() {
                    let s = a.mul_vec(&r);
                    if s.iter().any(|c| !c.is_zero()) {
                        queue.push(s);
                    }
                }
            }
        }
        IdealRep::new_unchecked(ech.into_subspace())
    }

    /// The ideal generated by the images of polynomials.
    pub fn ideal_span(&self, gens: &[Polynomial]) -> Result<IdealRep> {
        let vs = gens
            .iter()
            .map(|g| self.element_of(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.ideal_generated(&vs))
    }

    /// Accepts `space` as an ideal if it is closed under multiplication.
    pub fn ideal_from_space(&self, space: Subspace) -> Result<IdealRep> {
        if space.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch("ideal ambient".into()));
        }
        if !self.is_ideal(&space) {
            return Err(Error::InvalidInput("subspace is not an ideal".into()));
        }
        Ok(IdealRep::new_unchecked(space))
    }

    pub fn is_ideal(&self, space: &Subspace) -> bool {
        space
            .vectors()
            .iter()
            .all(|v| self.actions().iter().all(|a| space.contains(&a.mul_vec(v))))
    }

    pub fn zero_ideal(&self) -> IdealRep {
        IdealRep::new_unchecked(Subspace::zero(self.field(), self.dim()))
    }

    pub fn unit_ideal(&self) -> IdealRep {
        IdealRep::new_unchecked(Subspace::full(self.field(), self.dim()))
    }

    pub fn maximal_ideal(&self) -> IdealRep {
        IdealRep::new_unchecked(self.maximal_space().clone())
    }

    /// `m * a`.
    pub fn maximal_times(&self, a: &IdealRep) -> IdealRep {
        let mut acc = Subspace::zero(self.field(), self.dim());
        for m in self.actions() {
            acc = acc
                .join(&a.space.image_under(m).expect("square"))
                .expect("same ambient");
        }
        IdealRep::new_unchecked(acc)
    }

    /// `m^k`.
    pub fn maximal_power(&self, k: usize) -> IdealRep {
        let mut p = self.unit_ideal();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = self.maximal_times(&p);
        }
        p
    }

    pub fn ideal_sum(&self, a: &IdealRep, b: &IdealRep) -> IdealRep {
        IdealRep::new_unchecked(a.space.join(&b.space).expect("same ambient"))
    }

    pub fn ideal_meet(&self, a: &IdealRep, b: &IdealRep) -> IdealRep {
        IdealRep::new_unchecked(a.space.meet(&b.space).expect("same ambient"))
    }

    pub fn ideal_product(&self, a: &IdealRep, b: &IdealRep) -> IdealRep {
        let mut acc = Subspace::zero(self.field(), self.dim());
        for g in self.minimal_generators(a) {
            let img = b.space.image_under(&self.mult_matrix(&g)).expect("square");
            acc = acc.join(&img).expect("same ambient");
        }
        IdealRep::new_unchecked(acc)
    }

    /// `(a :_R b) = {r : r b ⊆ a}`.
    pub fn colon_ideal(&self, a: &IdealRep, b: &IdealRep) -> IdealRep {
        let mut acc = Subspace::full(self.field(), self.dim());
        for g in self.minimal_generators(b) {
            let pre = a.space.preimage(&self.mult_matrix(&g)).expect("square");
            acc = acc.meet(&pre).expect("same ambient");
        }
        IdealRep::new_unchecked(acc)
    }

    /// `(0 :_R a)`.
    pub fn annihilator(&self, a: &IdealRep) -> IdealRep {
        self.colon_ideal(&self.zero_ideal(), a)
    }

    /// `soc(R) = (0 :_R m)`.
    pub fn socle(&self) -> IdealRep {
        let mut acc = Subspace::full(self.field(), self.dim());
        for a in self.actions() {
            acc = acc.meet(&a.kernel()).expect("same ambient");
        }
        IdealRep::new_unchecked(acc)
    }

    pub fn socle_dim(&self) -> usize {
        self.socle().dim()
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle_dim() == 1
    }

    /// Elements of `a` whose classes form a basis of `a/ma`.
    pub fn minimal_generators(&self, a: &IdealRep) -> Vec<Vec<Scalar>> {
        a.space.complement_basis_over(&self.maximal_times(a).space)
    }

    /// `μ(a) = dim a/ma`.
    pub fn num_minimal_generators(&self, a: &IdealRep) -> usize {
        a.dim() - self.maximal_times(a).dim()
    }

    /// `h(i) = dim m^i/m^{i+1}` up to the last nonzero value.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.unit_ideal();
        while !cur.is_zero() {
            let next = self.maximal_times(&cur);
            out.push(cur.dim() - next.dim());
            cur = next;
        }
        out
    }

    /// Smallest `n` with `m^n = 0`.
    pub fn loewy_length(&self) -> usize {
        self.hilbert_function().len()
    }
}
