//! Reports: a fixed top-level layout rendered as JSON or as plain text.

use serde::Serialize;
use serde_json::{json, Value};

use crate::artin::{ArtinAlgebra, IdealRep};
use crate::construct::CoverReport;
use crate::duality::{SelfDualResult, TeterReport, TeterRoute};

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct AlgebraSummary {
    pub field: String,
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    pub length: usize,
    pub embedding_dim: usize,
    pub hilbert: Vec<usize>,
    pub socle_dim: usize,
    pub gorenstein: bool,
}

impl AlgebraSummary {
    pub fn new(r: &ArtinAlgebra, ideal: Vec<String>) -> AlgebraSummary {
        let hilbert = r.hilbert_function();
        AlgebraSummary {
            field: r.field().to_string(),
            vars: r.vars().map(<[String]>::to_vec).unwrap_or_default(),
            ideal,
            length: r.dim(),
            embedding_dim: hilbert.get(1).copied().unwrap_or(0),
            hilbert,
            socle_dim: r.socle_dim(),
            gorenstein: r.is_gorenstein(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub algebra: AlgebraSummary,
    pub payload: Value,
    pub verdicts: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let a = &self.algebra;
        let hilbert: Vec<String> = a.hilbert.iter().map(usize::to_string).collect();
        let mut out = format!(
            "command: {}\nseed: {}\nalgebra: {}[{}]/({})\n  length {}, embedding dimension {}, Hilbert ({}), socle dimension {}, Gorenstein {}\n",
            self.command,
            self.seed,
            a.field,
            a.vars.join(", "),
            a.ideal.join(", "),
            a.length,
            a.embedding_dim,
            hilbert.join(", "),
            a.socle_dim,
            a.gorenstein
        );
        if let Value::Object(map) = &self.payload {
            for (k, v) in map {
                render(&mut out, k, v, 0);
            }
        }
        let verdicts = if self.verdicts.is_empty() {
            "none".to_string()
        } else {
            self.verdicts.join(", ")
        };
        out.push_str(&format!("verdicts: {verdicts}\n"));
        out
    }
}

fn render(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (k, w) in map {
                render(out, k, w, depth + 1);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, w) in items.iter().enumerate() {
                render(out, &format!("[{i}]"), w, depth + 1);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar_text).collect();
            out.push_str(&format!("{pad}{key}: [{}]\n", parts.join(", ")));
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// Minimal generators of `a` as text.
pub fn ideal_text(r: &ArtinAlgebra, a: &IdealRep) -> Vec<String> {
    r.minimal_generators(a)
        .iter()
        .map(|v| r.format_element(v))
        .collect()
}

pub fn cover_payload(c: &CoverReport, vars: &[String]) -> Value {
    let k = &c.checks;
    json!({
        "cover-length": k.cover_length,
        "base-length": k.base_length,
        "excess": c.excess(),
        "generators": c.format_generators(vars),
        "checks": {
            "gorenstein": k.gorenstein,
            "image-colength": k.image_colength,
            "kernel-square-zero": k.kernel_square_zero,
            "length-inequality": k.length_inequality,
            "equality-iff-square-zero": k.equality_iff_square_zero,
            "annihilator-is-canonical": k.annihilator_is_canonical,
            "kernel-kills-image": k.kernel_kills_image,
            "teter": k.teter,
            "selfdual": k.selfdual,
            "all-pass": k.all_pass(),
        },
        "kernel-record": c.kernel_record,
    })
}

pub fn selfdual_payload(res: &SelfDualResult, trials: usize) -> Value {
    json!({
        "verdict": res.label(),
        "family-dim": res.family_dim,
        "seed": res.seed,
        "trials": trials,
    })
}

fn route_label(route: &TeterRoute) -> &'static str {
    match route {
        TeterRoute::Found(_) => "certified-yes",
        TeterRoute::Exhausted => "certified-no",
        TeterRoute::GaveUp { .. } => "probable-no",
        TeterRoute::NotRun => "not-run",
    }
}

pub fn teter_payload(t: &TeterReport) -> Value {
    json!({
        "conclusion": t.conclusion,
        "symmetric-map-onto-m": route_label(&t.teter_route),
        "m-selfdual": t.m_selfdual_route.as_ref().map(SelfDualResult::label),
        "two-invertible": t.two_invertible,
        "socle-in-m2": t.socle_in_m2,
        "m-selfdual-criterion-applies": t.m_selfdual_criterion_applies(),
        "seed": t.seed,
        "trials": t.trials,
    })
}
