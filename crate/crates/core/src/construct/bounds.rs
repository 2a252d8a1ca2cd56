//! The chain `λ(R/ω*(ω)) <= min{λ(R/a) : a ≅ a^∨} <= g(R) <= λ(R)` with
//! every available upper bound.

use serde::Serialize;

use super::covers::ci_cover;
use super::decide::{colength_two_decision, ColengthTwoVerdict};
use crate::artin::{build_algebra, Presentation};
use crate::duality::{trace_of_canonical, SearchConfig, TeterConclusion};
use crate::error::{Error, Result};
use crate::oracle::{gcolength_upper_exhaustive, min_selfdual_colength_exhaustive, EnumConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BoundsConfig {
    pub search: SearchConfig,
    /// Colengths scanned for self-dual ideals when the oracle is out of reach.
    pub max_colength: usize,
    pub oracle: EnumConfig,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            search: SearchConfig::default(),
            max_colength: 2,
            oracle: EnumConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelfDualMethod {
    /// Every ideal was enumerated.
    Oracle,
    /// Colengths up to the configured bound were scanned.
    Scan,
}

/// What is known about `min{λ(R/a) : a ≅ a^∨}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SelfDualBound {
    /// A proven lower bound.
    pub lower: usize,
    /// The least colength of a self-dual ideal actually exhibited.
    pub found: Option<usize>,
    pub method: SelfDualMethod,
}

impl SelfDualBound {
    /// The minimum is known exactly.
    pub fn is_exact(&self) -> bool {
        self.found == Some(self.lower)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct BoundsReport {
    pub length: usize,
    /// `λ(R/ω*(ω))`.
    pub lower_trace: usize,
    pub lower_selfdual: SelfDualBound,
    /// `λ(R)`, from `R ⋉ ω`.
    pub upper_idealization: usize,
    /// Excess of a random complete-intersection cover.
    pub upper_ci: Option<usize>,
    /// `1` when a symmetric map onto `m`, or `m ≅ m^∨` under its
    /// hypotheses, shows `g(R) <= 1`; `0` for Gorenstein rings.
    pub upper_teter: Option<usize>,
    /// Excess of the best explicitly constructed and verified cover.
    pub upper_construction: Option<usize>,
    /// Exhaustive search over quotients of the same polynomial ring.
    pub upper_oracle: Option<usize>,
    pub g_certified: Option<usize>,
    pub two_invertible: bool,
    pub teter: Option<TeterConclusion>,
    pub colength_two: ColengthTwoVerdict,
    /// The colength-two hypotheses hold and a self-dual ideal of colength at
    /// most two exists, so the self-dual minimum equals `g(R)`.
    pub closing_remark: bool,
}

impl BoundsReport {
    pub fn min_upper(&self) -> usize {
        [
            Some(self.upper_idealization),
            self.upper_ci,
            self.upper_teter,
            self.upper_construction,
            self.upper_oracle,
        ]
        .into_iter()
        .flatten()
        .min()
        .expect("idealization bound is always present")
    }

    /// `lower-trace <= lower-selfdual <= min(uppers) <= λ(R)`, and no
    /// self-dual ideal below the proven lower bound.
    pub fn chain_holds(&self) -> bool {
        self.lower_trace <= self.lower_selfdual.lower
            && self.lower_selfdual.lower <= self.min_upper()
            && self.min_upper() <= self.length
            && self
                .lower_selfdual
                .found
                .is_none_or(|f| f >= self.lower_selfdual.lower)
    }
}

/// Collects every lower and upper bound on `g(R)` and certifies `g(R)`
/// when they meet.
pub fn g_bounds(p: &Presentation, cfg: &BoundsConfig) -> Result<BoundsReport> {
    let r = build_algebra(p)?;
    let lower_trace = trace_of_canonical(&r).colength();
    let two = colength_two_decision(p, &cfg.search)?;
    let upper_ci = ci_cover(p, cfg.search.seed).ok().map(|(_, c)| c.excess());
    let upper_construction = two.cover.as_ref().map(|c| c.excess());
    let teter = two.teter.as_ref().map(|t| t.conclusion);
    let upper_teter = match (two.gorenstein, teter) {
        (true, _) => Some(0),
        (false, Some(TeterConclusion::AtMostOne)) => Some(1),
        _ => None,
    };

    let mut upper_oracle = None;
    let oracle_lower = if cfg.oracle.admits(&r) {
        upper_oracle = gcolength_upper_exhaustive(p, &cfg.oracle)
            .ok()
            .flatten()
            .map(|(e, _)| e);
        min_selfdual_colength_exhaustive(&r, &cfg.oracle).ok()
    } else {
        None
    };
    let lower_selfdual = match oracle_lower {
        Some((v, _)) => SelfDualBound {
            lower: v,
            found: Some(v),
            method: SelfDualMethod::Oracle,
        },
        None => {
            let floor = two.certified_selfdual_floor().min(cfg.max_colength + 1);
            SelfDualBound {
                lower: floor.max(lower_trace),
                found: two.least_selfdual_colength().filter(|&c| c <= cfg.max_colength),
                method: SelfDualMethod::Scan,
            }
        }
    };
    let closing_remark = two.hypotheses_hold() && lower_selfdual.found.is_some_and(|f| f <= 2);
    let mut report = BoundsReport {
        length: r.dim(),
        lower_trace,
        lower_selfdual,
        upper_idealization: r.dim(),
        upper_ci,
        upper_teter,
        upper_construction,
        upper_oracle,
        g_certified: None,
        two_invertible: two.two_invertible,
        teter,
        colength_two: two.verdict,
        closing_remark,
    };
    if !report.chain_holds() {
        return Err(Error::Internal(format!(
            "bound chain violated: trace {} selfdual {:?} uppers min {} length {}",
            report.lower_trace,
            report.lower_selfdual,
            report.min_upper(),
            report.length
        )));
    }
    let upper = report.min_upper();
    report.g_certified = (report.lower_selfdual.lower == upper).then_some(upper);
    Ok(report)
}
