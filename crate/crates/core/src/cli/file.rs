//! The `.alg` input format.
//!
//! ```text
//! # comment
//! field rational | field prime <p>
//! vars <name> <name> ...
//! ideal <poly>, <poly>, ...
//! aux <label> = <poly>, ...
//! ```
//!
//! `ideal` may repeat; its generators accumulate.

use std::collections::BTreeMap;

use crate::artin::Presentation;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::polyring::{parse_polynomial, Polynomial};

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraFile {
    pub field: Field,
    pub vars: Vec<String>,
    pub ideal: Vec<Polynomial>,
    /// Named auxiliary ideals such as `a`, `d` or `cover`.
    pub aux: BTreeMap<String, Vec<Polynomial>>,
}

fn at_line(n: usize, e: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("line {n}: {e}"))
}

fn parse_list(text: &str, vars: &[String], field: Field, line: usize) -> Result<Vec<Polynomial>> {
    text.split(',')
        .map(|t| parse_polynomial(t.trim(), vars, field).map_err(|e| at_line(line, e)))
        .collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        let mut field = None;
        let mut vars: Option<Vec<String>> = None;
        let mut ideal = Vec::new();
        let mut aux = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let n = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match keyword {
                "field" => {
                    if field.is_some() {
                        return Err(at_line(n, "duplicate field line"));
                    }
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    field = Some(match words.as_slice() {
                        ["rational"] => Field::Rational,
                        ["prime", p] => {
                            let p: u64 = p.parse().map_err(|_| at_line(n, format!("bad prime `{p}`")))?;
                            Field::prime(p).map_err(|e| at_line(n, e))?
                        }
                        _ => return Err(at_line(n, "expected `field rational` or `field prime <p>`")),
                    });
                }
                "vars" => {
                    if vars.is_some() {
                        return Err(at_line(n, "duplicate vars line"));
                    }
                    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                    if names.is_empty() {
                        return Err(at_line(n, "no variables declared"));
                    }
                    vars = Some(names);
                }
                "ideal" | "aux" => {
                    let (Some(f), Some(v)) = (field, vars.as_ref()) else {
                        return Err(at_line(n, "field and vars must precede ideals"));
                    };
                    if keyword == "ideal" {
                        ideal.extend(parse_list(rest, v, f, n)?);
                        continue;
                    }
                    let (label, body) = rest
                        .split_once('=')
                        .ok_or_else(|| at_line(n, "expected `aux <label> = <polys>`"))?;
                    let label = label.trim();
                    if label.is_empty() || label.contains(char::is_whitespace) {
                        return Err(at_line(n, format!("bad label `{label}`")));
                    }
                    if aux
                        .insert(label.to_string(), parse_list(body, v, f, n)?)
                        .is_some()
                    {
                        return Err(at_line(n, format!("duplicate aux `{label}`")));
                    }
                }
                other => return Err(at_line(n, format!("unknown keyword `{other}`"))),
            }
        }
        let field = field.ok_or_else(|| Error::InvalidInput("missing field line".into()))?;
        let vars = vars.ok_or_else(|| Error::InvalidInput("missing vars line".into()))?;
        Ok(AlgebraFile {
            field,
            vars,
            ideal,
            aux,
        })
    }

    /// Reads the ideal lines of a secondary file against this file's ring.
    /// `field` and `vars` lines there, if present, must agree.
    pub fn parse_ideal_file(&self, text: &str) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let n = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match keyword {
                "field" if rest.trim() == self.field.to_string() => {}
                "vars" if rest.split_whitespace().eq(self.vars.iter().map(String::as_str)) => {}
                "field" | "vars" => {
                    return Err(at_line(n, format!("`{keyword}` differs from the algebra file")))
                }
                "ideal" => out.extend(parse_list(rest, &self.vars, self.field, n)?),
                "aux" => {}
                other => return Err(at_line(n, format!("unknown keyword `{other}`"))),
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidInput("no ideal lines in cover file".into()));
        }
        Ok(out)
    }

    pub fn presentation(&self, max_n: u32) -> Result<Presentation> {
        if self.ideal.is_empty() {
            return Err(Error::InvalidInput("missing ideal line".into()));
        }
        Ok(Presentation::new(self.field, self.vars.clone(), self.ideal.clone())?.with_max_n(max_n))
    }

    pub fn aux(&self, label: &str) -> Result<&[Polynomial]> {
        self.aux
            .get(label)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::InvalidInput(format!("no `aux {label} = ...` line")))
    }
}
