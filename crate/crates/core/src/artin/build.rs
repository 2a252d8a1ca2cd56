use super::algebra::ArtinAlgebra;
use super::truncated::TruncatedSpace;
use crate::error::{Error, Result};
use crate::exactalg::Field;
use crate::polyring::{monomials_of_degree, parse_polynomial, Polynomial};

pub const DEFAULT_MAX_N: u32 = 50;

/// Largest `dim T/m^N` the search will build before giving up.
pub const MAX_TRUNCATION_DIM: usize = 1500;

/// A presentation `k[x_1..x_n]/(generators)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    pub field: Field,
    pub vars: Vec<String>,
    pub generators: Vec<Polynomial>,
    pub max_n: u32,
}

impl Presentation {
    pub fn new(field: Field, vars: Vec<String>, generators: Vec<Polynomial>) -> Result<Presentation> {
        if vars.is_empty() {
            return Err(Error::InvalidInput("at least one variable is required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        for g in &generators {
            if g.nvars() != vars.len() {
                return Err(Error::DimensionMismatch("generator variable count".into()));
            }
            if g.field() != field {
                return Err(Error::FieldMismatch("generator coefficients".into()));
            }
        }
        Ok(Presentation {
            field,
            vars,
            generators,
            max_n: DEFAULT_MAX_N,
        })
    }

    /// Parses generator strings in the given variables.
    pub fn parse(field: Field, vars: &[&str], generators: &[&str]) -> Result<Presentation> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let gens = generators
            .iter()
            .map(|g| parse_polynomial(g, &vars, field))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(field, vars, gens)
    }

    pub fn with_max_n(mut self, max_n: u32) -> Presentation {
        self.max_n = max_n;
        self
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.format(&self.vars)).collect()
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Builds `R = T/b` by finding the least `N` with `m^{N-1} ⊆ b + m^N`,
/// which by Nakayama means `m^{N-1} ⊆ b`, and computing in `T/m^N`.
pub fn build_algebra(p: &Presentation) -> Result<ArtinAlgebra> {
    if p.generators.iter().any(|g| !g.constant_term().is_zero()) {
        return Err(Error::UnitIdeal);
    }
    let nvars = p.nvars();
    for n in 2..=p.max_n {
        if binomial(nvars + n as usize - 1, nvars) > MAX_TRUNCATION_DIM {
            return Err(Error::NotPrimary {
                max_n: p.max_n,
                detail: format!(" (stopped at N = {n}: dim T/m^N exceeds {MAX_TRUNCATION_DIM})"),
            });
        }
        let space = TruncatedSpace::new(p.field, nvars, n);
        let rel = space.ideal_span_polys(&p.generators);
        let top_in_rel = monomials_of_degree(nvars, n - 1).iter().all(|m| {
            let i = space.index_of(m).expect("degree below N");
            rel.contains(&space.unit_vector(i))
        });
        if top_in_rel {
            return Ok(ArtinAlgebra::from_quotient(space, rel, p.vars.clone()));
        }
    }
    Err(Error::NotPrimary {
        max_n: p.max_n,
        detail: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(52, 3), 22100);
    }
}
