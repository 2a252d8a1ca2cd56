//! Deciding `g(R) <= 2` through self-dual ideals of colength at most two.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ambient::Ambient;
use super::covers::{find_retract, teter_cover, verify_cover};
use super::kernel::thm51_construct;
use super::CoverReport;
use crate::artin::{build_algebra, ArtinAlgebra, IdealRep, Presentation};
use crate::duality::{Duality, SearchConfig, SelfDualResult, TeterConclusion, TeterReport};
use crate::error::Result;
use crate::exactalg::{Field, Scalar};
use crate::polyring::Polynomial;

/// Coefficient height of the hyperplanes enumerated over `Q`.
const RATIONAL_HEIGHT: i64 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColengthTwoVerdict {
    Gorenstein,
    AtMostOne,
    AtMostTwo,
    /// No cover of excess at most two was built. `certified` means every
    /// ideal of colength at most two was shown not to be self-dual, so
    /// `g(R) >= 3`.
    NotFound {
        certified: bool,
    },
}

/// One colength-two ideal `a = (ℓ_1, .., ℓ_{n-1}, x_j^2)` of `T`.
#[derive(Debug, Clone)]
pub struct Candidate {
    /// A system of parameters generating `a`.
    pub generators: Vec<Polynomial>,
    pub ideal: IdealRep,
    pub selfdual: SelfDualResult,
    pub b_in_a2: bool,
    pub b_in_a3: bool,
    /// `(b :_T a) ⊆ a^2`; with `d = a` this is `(b :_T a) ⊆ d ∩ a^2`.
    pub colon_in_a2: bool,
    pub cover: Option<CoverReport>,
    /// Why no cover was built from a self-dual candidate.
    pub failure: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ColengthTwoReport {
    pub b_in_m6: bool,
    pub two_invertible: bool,
    pub gorenstein: bool,
    /// The colength-one routes; absent for Gorenstein rings.
    pub teter: Option<TeterReport>,
    pub candidates: Vec<Candidate>,
    /// The scanned hyperplanes are all of them.
    pub exhaustive: bool,
    pub verdict: ColengthTwoVerdict,
    /// A cover realizing the verdict.
    pub cover: Option<CoverReport>,
    pub seed: u64,
    pub trials: usize,
}

impl ColengthTwoReport {
    /// Both hypotheses of the colength-two criterion hold.
    pub fn hypotheses_hold(&self) -> bool {
        self.b_in_m6 && self.two_invertible
    }

    /// The least colength of an ideal shown self-dual here, if any.
    pub fn least_selfdual_colength(&self) -> Option<usize> {
        if self.gorenstein {
            return Some(0);
        }
        let m_selfdual = self
            .teter
            .as_ref()
            .and_then(|t| t.m_selfdual_route.as_ref())
            .is_some_and(|h| h.is_yes());
        if m_selfdual {
            return Some(1);
        }
        self.candidates.iter().any(|c| c.selfdual.is_yes()).then_some(2)
    }

    /// Largest `k` such that no ideal of colength below `k` is self-dual,
    /// as far as the certified verdicts show.
    pub fn certified_selfdual_floor(&self) -> usize {
        if self.gorenstein {
            return 0;
        }
        let m_no = self
            .teter
            .as_ref()
            .and_then(|t| t.m_selfdual_route.as_ref())
            .is_some_and(|h| h.is_certified_no());
        if !m_no {
            return 1;
        }
        if self.exhaustive
            && self.verdict != ColengthTwoVerdict::AtMostOne
            && self.candidates.iter().all(|c| c.selfdual.is_certified_no())
        {
            3
        } else {
            2
        }
    }
}

/// Scans colengths 0, 1 and 2 for self-dual ideals and builds a cover for
/// the first one the constructive routes accept.
pub fn colength_two_decision(p: &Presentation, cfg: &SearchConfig) -> Result<ColengthTwoReport> {
    let r = build_algebra(p)?;
    let field = p.field;
    let n = p.nvars();
    let b_in_m6 = p.generators.iter().all(|g| g.order().is_none_or(|o| o >= 6));
    let mut report = ColengthTwoReport {
        b_in_m6,
        two_invertible: field.two_invertible(),
        gorenstein: r.is_gorenstein(),
        teter: None,
        candidates: Vec::new(),
        exhaustive: false,
        verdict: ColengthTwoVerdict::Gorenstein,
        cover: None,
        seed: cfg.seed,
        trials: cfg.trials,
    };
    if report.gorenstein {
        report.cover = verify_cover(p, &p.generators).ok();
        return Ok(report);
    }
    let duality = Duality::new(&r);
    let teter = duality.teter_check(cfg)?;
    report.cover = colength_one_cover(p, &r, &teter);
    let at_most_one = report.cover.is_some() || teter.conclusion == TeterConclusion::AtMostOne;
    report.teter = Some(teter);
    if at_most_one {
        report.verdict = ColengthTwoVerdict::AtMostOne;
        return Ok(report);
    }

    let (normals, exhaustive) = hyperplane_normals(field, n, cfg);
    report.exhaustive = exhaustive;
    let n_b = r.found_n().expect("presented");
    let amb = Ambient::new(field, n, n_b.max(6))?;
    let b = amb.ideal(&p.generators);
    for normal in normals {
        let gens = hyperplane_ideal(field, n, &normal);
        let elems = gens.iter().map(|g| r.element_of(g)).collect::<Result<Vec<_>>>()?;
        let ideal = r.ideal_generated(&elems);
        if ideal.colength() != 2 {
            continue;
        }
        let selfdual = duality.self_dual_witness(&ideal, cfg);
        let mut cand = Candidate {
            generators: gens,
            ideal,
            selfdual,
            b_in_a2: false,
            b_in_a3: false,
            colon_in_a2: false,
            cover: None,
            failure: None,
        };
        if let Some(f) = cand.selfdual.witness().cloned() {
            let a = amb.ideal(&cand.generators);
            let a2 = amb.product(&cand.generators, &a);
            let a3 = amb.product(&cand.generators, &a2);
            cand.b_in_a2 = b.is_subspace_of(&a2);
            cand.b_in_a3 = b.is_subspace_of(&a3);
            cand.colon_in_a2 = amb.colon(&b, &cand.generators).is_subspace_of(&a2);
            let attempt = if !report.two_invertible {
                Err("2 is not invertible, so f cannot be symmetrized".to_string())
            } else if !(cand.b_in_a2 && cand.colon_in_a2) {
                let mut why = "b ⊆ a·d and (b :_T a) ⊆ d ∩ a^2 do not both hold".to_string();
                if cand.b_in_a3 {
                    why.push_str(" although b ⊆ a^3");
                }
                Err(why)
            } else {
                duality
                    .symmetrize(&f)
                    .and_then(|h| thm51_construct(p, &cand.generators, &cand.generators, &h))
                    .map_err(|e| e.to_string())
            };
            match attempt {
                Ok(cover) => cand.cover = Some(cover),
                Err(why) => cand.failure = Some(why),
            }
        }
        let done = cand.cover.is_some();
        if done {
            report.cover = cand.cover.clone();
        }
        report.candidates.push(cand);
        if done {
            break;
        }
    }
    report.verdict = if report.cover.is_some() {
        ColengthTwoVerdict::AtMostTwo
    } else {
        ColengthTwoVerdict::NotFound {
            certified: report.certified_selfdual_floor() >= 3,
        }
    };
    Ok(report)
}

/// A cover of excess one from the symmetric map with image `m` (kernel
/// construction with `a = d = m_T`) or else from `m ≅ m^∨` through the
/// twisted idealization over `k`.
fn colength_one_cover(p: &Presentation, r: &ArtinAlgebra, teter: &TeterReport) -> Option<CoverReport> {
    let n = p.nvars();
    let vars: Vec<Polynomial> = (0..n).map(|i| Polynomial::variable(p.field, n, i)).collect();
    if let Some(f) = teter.symmetric_witness() {
        if let Ok(cover) = thm51_construct(p, &vars, &vars, f) {
            return Some(cover);
        }
    }
    let f = teter.m_selfdual_route.as_ref()?.witness()?;
    if !teter.m_selfdual_criterion_applies() {
        return None;
    }
    let m = r.maximal_ideal();
    let retract = find_retract(r, &m)?;
    teter_cover(r, &m, f, &retract).ok()
}

/// `(ℓ_i = x_i - (c_i/c_j) x_j for i ≠ j, x_j^2)` for the first `j` with
/// `c_j ≠ 0`: the colength-two ideal whose linear part is `c^⊥`.
fn hyperplane_ideal(field: Field, n: usize, normal: &[Scalar]) -> Vec<Polynomial> {
    let j = normal
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero normal vector");
    let xj = Polynomial::variable(field, n, j);
    let mut gens: Vec<Polynomial> = (0..n)
        .filter(|&i| i != j)
        .map(|i| {
            let ratio = normal[i].div(&normal[j]).expect("nonzero pivot");
            Polynomial::variable(field, n, i).sub(&xj.scale(&ratio))
        })
        .collect();
    gens.push(xj.mul(&xj));
    gens
}

/// Normal vectors of hyperplanes in `m/m^2`: every projective point over a
/// finite field; small heights plus random ones over `Q`.
fn hyperplane_normals(field: Field, n: usize, cfg: &SearchConfig) -> (Vec<Vec<Scalar>>, bool) {
    let mut out = Vec::new();
    match field.elements() {
        Some(elems) => {
            let q = elems.len();
            let total = q.pow(n as u32);
            for idx in 1..total {
                let mut i = idx;
                let v: Vec<Scalar> = (0..n)
                    .map(|_| {
                        let c = elems[i % q].clone();
                        i /= q;
                        c
                    })
                    .collect();
                let lead = v.iter().find(|c| !c.is_zero()).expect("nonzero");
                if lead.is_one() {
                    out.push(v);
                }
            }
            (out, true)
        }
        None => {
            let span = (2 * RATIONAL_HEIGHT + 1) as usize;
            for idx in 1..span.pow(n as u32) {
                let mut i = idx;
                let v: Vec<i64> = (0..n)
                    .map(|_| {
                        let c = (i % span) as i64 - RATIONAL_HEIGHT;
                        i /= span;
                        c
                    })
                    .collect();
                let lead = v.iter().find(|&&c| c != 0);
                let g = v.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
                if lead.is_some_and(|&c| c > 0) && g == 1 {
                    out.push(v.iter().map(|&c| field.from_i64(c)).collect());
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.trials {
                let v: Vec<Scalar> = (0..n).map(|_| field.random(&mut rng)).collect();
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(v);
                }
            }
            (out, false)
        }
    }
}
