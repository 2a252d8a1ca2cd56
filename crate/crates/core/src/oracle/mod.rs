//! Brute-force ground truth over tiny prime fields: every ideal, exact
//! self-duality, and an exhaustive search for Gorenstein quotients.

use std::collections::HashSet;

use crate::artin::{build_algebra, ArtinAlgebra, IdealRep, Presentation};
use crate::construct::ambient::Ambient;
use crate::duality::{for_each_projective, Duality, SearchConfig, SelfDualVerdict};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix, Scalar, Subspace};
use crate::polyring::Polynomial;

/// Bounds of the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct EnumConfig {
    /// Largest `λ(R)` accepted.
    pub max_length: usize,
    /// Largest characteristic accepted; only prime fields are enumerated.
    pub max_field: u64,
    /// Largest cover excess searched.
    pub max_extra: usize,
    /// Cap on the number of subspaces held at once.
    pub max_ideals: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_length: 8,
            max_field: 3,
            max_extra: 3,
            max_ideals: 200_000,
        }
    }
}

impl EnumConfig {
    pub fn with_max_extra(self, max_extra: usize) -> EnumConfig {
        EnumConfig { max_extra, ..self }
    }

    /// Whether `r` is within the bounds.
    pub fn admits(&self, r: &ArtinAlgebra) -> bool {
        self.check(r).is_ok()
    }

    fn check_field(&self, field: Field) -> Result<u64> {
        match field {
            Field::Prime(p) if p <= self.max_field => Ok(p),
            _ => Err(Error::OverBound(format!(
                "exhaustive search needs a prime field with p <= {}, got {field}",
                self.max_field
            ))),
        }
    }

    fn check(&self, r: &ArtinAlgebra) -> Result<u64> {
        let p = self.check_field(r.field())?;
        if r.dim() > self.max_length {
            return Err(Error::OverBound(format!(
                "length {} exceeds {}",
                r.dim(),
                self.max_length
            )));
        }
        Ok(p)
    }
}

/// Members of one family enumerated by the self-duality decision.
const SELFDUAL_ENUMERATION_LIMIT: u64 = 1 << 24;

/// The subspaces `J'` with `mJ ⊆ J' ⊂ J` of codimension one, where `m` is
/// generated by `actions`: the hyperplanes of `J/mJ` lifted to `J`.
fn maximal_subideals(p: u64, actions: &[Matrix], j: &Subspace) -> Vec<Subspace> {
    let field = j.field();
    let mut mj = Subspace::zero(field, j.ambient_dim());
    for a in actions {
        mj = mj.join(&j.image_under(a).expect("square")).expect("same ambient");
    }
    let tops = j.complement_basis_over(&mj);
    let mut out = Vec::new();
    for_each_projective(p, tops.len(), |normal| {
        let lead = normal.iter().position(|&c| c != 0).expect("nonzero");
        let mut vs = mj.vectors();
        for (i, g) in tops.iter().enumerate() {
            if i == lead {
                continue;
            }
            // g_i - ν_i g_lead lies in the hyperplane ν^⊥
            let c = field.from_i64(normal[i] as i64);
            vs.push(g.iter().zip(&tops[lead]).map(|(x, y)| x - &(&c * y)).collect());
        }
        out.push(Subspace::span(field, j.ambient_dim(), &vs));
        false
    });
    out
}

/// Sort key: dimension, then the entries of the canonical basis.
fn canonical_key(s: &Subspace) -> (usize, Vec<String>) {
    (
        s.dim(),
        s.basis().entries().iter().map(Scalar::to_string).collect(),
    )
}

/// Every ideal of `R`, each once, ordered by dimension and canonical basis.
pub fn enumerate_ideals(r: &ArtinAlgebra, cfg: &EnumConfig) -> Result<Vec<IdealRep>> {
    let p = cfg.check(r)?;
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut level = vec![Subspace::full(r.field(), r.dim())];
    seen.insert(level[0].clone());
    while !level.is_empty() {
        let mut next = Vec::new();
        for j in &level {
            for sub in maximal_subideals(p, r.actions(), j) {
                if seen.insert(sub.clone()) {
                    next.push(sub);
                }
            }
        }
        if seen.len() > cfg.max_ideals {
            return Err(Error::OverBound(format!("more than {} ideals", cfg.max_ideals)));
        }
        level = next;
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort_by_cached_key(canonical_key);
    Ok(out.into_iter().map(IdealRep::new_unchecked).collect())
}

/// Exact answer to `a ≅ a^∨`, by enumeration when random trials fail.
pub fn decide_selfdual(r: &ArtinAlgebra, a: &IdealRep, cfg: &EnumConfig) -> Result<bool> {
    cfg.check(r)?;
    let search = SearchConfig {
        seed: 0,
        trials: 20,
        exhaustive_limit: SELFDUAL_ENUMERATION_LIMIT,
    };
    match Duality::new(r).self_dual_witness(a, &search).verdict {
        SelfDualVerdict::Yes(_) => Ok(true),
        SelfDualVerdict::CertifiedNo => Ok(false),
        SelfDualVerdict::ProbableNo { .. } => {
            Err(Error::OverBound("witness family too large to enumerate".into()))
        }
    }
}

/// `min λ(R/a)` over self-dual ideals `a`, with every ideal attaining it.
pub fn min_selfdual_colength_exhaustive(
    r: &ArtinAlgebra,
    cfg: &EnumConfig,
) -> Result<(usize, Vec<IdealRep>)> {
    let mut ideals = enumerate_ideals(r, cfg)?;
    ideals.sort_by_key(IdealRep::colength);
    let duality = Duality::new(r);
    let search = SearchConfig {
        seed: 0,
        trials: 20,
        exhaustive_limit: SELFDUAL_ENUMERATION_LIMIT,
    };
    let mut best: Option<usize> = None;
    let mut witnesses = Vec::new();
    for a in ideals {
        if best.is_some_and(|b| a.colength() > b) {
            break;
        }
        match duality.self_dual_witness(&a, &search).verdict {
            SelfDualVerdict::Yes(_) => {
                best = Some(a.colength());
                witnesses.push(a);
            }
            SelfDualVerdict::CertifiedNo => {}
            SelfDualVerdict::ProbableNo { .. } => {
                return Err(Error::OverBound("witness family too large to enumerate".into()))
            }
        }
    }
    let value = best.expect("the zero ideal is self-dual");
    Ok((value, witnesses))
}

/// The least `λ(T/c) - λ(R)` over ideals `c ⊆ b` with `T/c` Gorenstein and
/// excess at most `cfg.max_extra`, together with generators of one such
/// `c`; `None` when there is none within the bound.
pub fn gcolength_upper_exhaustive(
    pres: &Presentation,
    cfg: &EnumConfig,
) -> Result<Option<(usize, Vec<Polynomial>)>> {
    let r = build_algebra(pres)?;
    let p = cfg.check(&r)?;
    if r.is_gorenstein() {
        return Ok(Some((0, pres.generators.clone())));
    }
    let n_b = r.found_n().expect("presented");
    // λ(S) >= loewy(S) + edim(S) - 1 and edim(S) >= edim(R), so the
    // candidates contain m^N for this N
    let edim = r.hilbert_function().get(1).copied().unwrap_or(0);
    let reach = (r.dim() + cfg.max_extra + 1).saturating_sub(edim) as u32;
    let amb = Ambient::new(pres.field, pres.nvars(), n_b.max(reach).max(2))?;
    let b = amb.ideal(&pres.generators);
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut level = vec![b];
    for extra in 1..=cfg.max_extra {
        let mut next = Vec::new();
        for j in &level {
            for c in maximal_subideals(p, amb.shifts(), j) {
                if !seen.insert(c.clone()) {
                    continue;
                }
                if amb.socle_colon(&c).dim() == c.dim() + 1 {
                    return Ok(Some((extra, amb.minimal_generators(&c))));
                }
                next.push(c);
            }
        }
        if seen.len() > cfg.max_ideals {
            return Err(Error::OverBound(format!(
                "more than {} candidate ideals",
                cfg.max_ideals
            )));
        }
        level = next;
    }
    Ok(None)
}
