//! Self-dual ideals and the `g(R) <= 1` criteria.

use super::search::{search_rank, RankSearch, SearchConfig};
use super::{Duality, ModuleMap};
use crate::artin::{ArtinAlgebra, IdealRep};
use crate::error::Result;
use crate::exactalg::{Matrix, Subspace};

enum OntoSearch {
    Found(Matrix),
    Exhausted,
    GaveUp { trials: usize },
}

#[derive(Debug, Clone)]
pub enum SelfDualVerdict {
    /// A surjection `f : ω → a` with `ker f = (0 :_ω a)`.
    Yes(ModuleMap),
    /// The whole family was enumerated without finding one.
    CertifiedNo,
    /// Random trials failed and the family was too large to enumerate.
    ProbableNo { trials: usize },
}

#[derive(Debug, Clone)]
pub struct SelfDualResult {
    pub verdict: SelfDualVerdict,
    pub seed: u64,
    /// Dimension of the family of candidate maps.
    pub family_dim: usize,
}

impl SelfDualResult {
    pub fn is_yes(&self) -> bool {
        matches!(self.verdict, SelfDualVerdict::Yes(_))
    }

    pub fn is_certified_no(&self) -> bool {
        matches!(self.verdict, SelfDualVerdict::CertifiedNo)
    }

    pub fn witness(&self) -> Option<&ModuleMap> {
        match &self.verdict {
            SelfDualVerdict::Yes(f) => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self.verdict {
            SelfDualVerdict::Yes(_) => "certified-yes",
            SelfDualVerdict::CertifiedNo => "certified-no",
            SelfDualVerdict::ProbableNo { .. } => "probable-no",
        }
    }
}

/// Decides whether `a ≅ a^∨` by looking for a witness map `ω → a`.
pub fn self_dual_witness(r: &ArtinAlgebra, a: &IdealRep, cfg: &SearchConfig) -> SelfDualResult {
    Duality::new(r).self_dual_witness(a, cfg)
}

/// Re-checks a witness: `f` is `R`-linear, `f(ω) = a`, `ker f = (0 :_ω a)`.
pub fn verify_witness(r: &ArtinAlgebra, a: &IdealRep, f: &ModuleMap) -> bool {
    Duality::new(r).verify_witness(a, f)
}

#[derive(Debug, Clone)]
pub enum TeterRoute {
    /// A symmetric map with image `m`.
    Found(ModuleMap),
    Exhausted,
    GaveUp {
        trials: usize,
    },
    NotRun,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TeterConclusion {
    /// `g(R) = 0`.
    Gorenstein,
    /// `g(R) <= 1`, so `g(R) = 1` for non-Gorenstein `R`.
    AtMostOne,
    /// `g(R) >= 2`, certified by an exhaustive empty search.
    AtLeastTwo,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct TeterReport {
    pub gorenstein: bool,
    pub teter_route: TeterRoute,
    /// `m ≅ m^∨` search; absent for Gorenstein rings.
    pub m_selfdual_route: Option<SelfDualResult>,
    pub two_invertible: bool,
    pub socle_in_m2: bool,
    pub conclusion: TeterConclusion,
    pub seed: u64,
    pub trials: usize,
}

impl TeterReport {
    /// Both hypotheses of the `m ≅ m^∨` criterion hold.
    pub fn m_selfdual_criterion_applies(&self) -> bool {
        self.two_invertible && self.socle_in_m2
    }

    /// A symmetric map `ω → R` with image `m`, if one was found.
    pub fn symmetric_witness(&self) -> Option<&ModuleMap> {
        match &self.teter_route {
            TeterRoute::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Runs both `g(R) <= 1` criteria.
pub fn teter_check(r: &ArtinAlgebra, cfg: &SearchConfig) -> Result<TeterReport> {
    Duality::new(r).teter_check(cfg)
}

impl Duality<'_> {
    pub fn self_dual_witness(&self, a: &IdealRep, cfg: &SearchConfig) -> SelfDualResult {
        let family = self.witness_family(a);
        let family_dim = family.len();
        let verdict = match self.search_onto(&family, a, cfg) {
            OntoSearch::Found(matrix) => {
                let f = self.map_from_matrix(matrix).expect("family members are R-linear");
                assert!(self.verify_witness(a, &f), "witness failed its certificate");
                SelfDualVerdict::Yes(f)
            }
            OntoSearch::Exhausted => SelfDualVerdict::CertifiedNo,
            OntoSearch::GaveUp { trials } => SelfDualVerdict::ProbableNo { trials },
        };
        SelfDualResult {
            verdict,
            seed: cfg.seed,
            family_dim,
        }
    }

    pub fn verify_witness(&self, a: &IdealRep, f: &ModuleMap) -> bool {
        let Ok(f) = self.map_from_matrix(f.matrix().clone()) else {
            return false;
        };
        f.image() == *a.space() && f.kernel() == self.omega_annihilated_by(a)
    }

    pub fn teter_check(&self, cfg: &SearchConfig) -> Result<TeterReport> {
        let r = self.algebra();
        let gorenstein = r.is_gorenstein();
        let two_invertible = r.field().two_invertible();
        let m2 = r.maximal_power(2);
        let socle_in_m2 = r.socle().is_subideal_of(&m2);
        let mut report = TeterReport {
            gorenstein,
            teter_route: TeterRoute::NotRun,
            m_selfdual_route: None,
            two_invertible,
            socle_in_m2,
            conclusion: TeterConclusion::Gorenstein,
            seed: cfg.seed,
            trials: cfg.trials,
        };
        if gorenstein {
            return Ok(report);
        }
        let m = r.maximal_ideal();
        let family = self.symmetric_family()?;
        report.teter_route = match self.search_onto(&family, &m, cfg) {
            OntoSearch::Found(matrix) => TeterRoute::Found(self.map_from_matrix(matrix)?),
            OntoSearch::Exhausted => TeterRoute::Exhausted,
            OntoSearch::GaveUp { trials } => TeterRoute::GaveUp { trials },
        };
        let m_selfdual = self.self_dual_witness(&m, cfg);
        let m_selfdual_certifies = m_selfdual.is_yes() && report.m_selfdual_criterion_applies();
        report.m_selfdual_route = Some(m_selfdual);
        report.conclusion = match report.teter_route {
            TeterRoute::Found(_) => TeterConclusion::AtMostOne,
            _ if m_selfdual_certifies => TeterConclusion::AtMostOne,
            TeterRoute::Exhausted => TeterConclusion::AtLeastTwo,
            _ => TeterConclusion::Unknown,
        };
        Ok(report)
    }

    /// Looks for `f` in `span(family)` with `f(ω) = a`, where every member
    /// already maps `ω` into `a`. By Nakayama only the induced maps
    /// `ω/mω → a/ma` matter, so the search runs on those small matrices.
    fn search_onto(&self, family: &[Matrix], a: &IdealRep, cfg: &SearchConfig) -> OntoSearch {
        let r = self.algebra();
        let field = r.field();
        let lambda = r.dim();
        let ma = r.maximal_times(a);
        let target = a.dim() - ma.dim();
        let h = ma.space().annihilator();
        let u = Matrix::from_columns(field, lambda, &self.omega().minimal_generators());
        let mut chosen = Vec::new();
        let mut tops = Vec::new();
        let mut span = Subspace::zero(field, h.rows() * u.cols());
        for f in family {
            let top = h.mul(f).and_then(|hf| hf.mul(&u)).expect("shape");
            let flat = top.entries().to_vec();
            if span.contains(&flat) {
                continue;
            }
            span = span
                .join(&Subspace::span(field, flat.len(), &[flat]))
                .expect("same ambient");
            chosen.push(f.clone());
            tops.push(top);
        }
        match search_rank(field, h.rows(), u.cols(), &tops, target, cfg) {
            RankSearch::Found { coefficients } => OntoSearch::Found(Matrix::linear_combination(
                field,
                lambda,
                lambda,
                &chosen,
                &coefficients,
            )),
            RankSearch::Exhausted => OntoSearch::Exhausted,
            RankSearch::GaveUp { trials } => OntoSearch::GaveUp { trials },
        }
    }
}
