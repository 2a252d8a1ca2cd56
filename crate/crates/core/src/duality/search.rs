//! Searching a linear family of matrices for a member of a given rank.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactalg::{Field, Matrix, Scalar};

/// Parameters of the randomized and exhaustive witness searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    /// Random members tried before any enumeration.
    pub trials: usize,
    /// Enumerate the whole family when `|k|^dim` is at most this.
    pub exhaustive_limit: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trials: 20,
            exhaustive_limit: 1 << 20,
        }
    }
}

impl SearchConfig {
    pub fn with_seed(seed: u64) -> SearchConfig {
        SearchConfig {
            seed,
            ..SearchConfig::default()
        }
    }

    /// No random trials; answers come from enumeration only.
    pub fn exhaustive() -> SearchConfig {
        SearchConfig {
            trials: 0,
            ..SearchConfig::default()
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) enum RankSearch {
    /// Coefficients of a member of the requested rank.
    Found {
        coefficients: Vec<Scalar>,
    },
    /// Every member was checked.
    Exhausted,
    GaveUp {
        trials: usize,
    },
}

/// `p^d` if it does not exceed `limit`.
pub(crate) fn family_size(field: Field, d: usize, limit: u64) -> Option<u64> {
    let p = field.order()?;
    let mut acc: u64 = 1;
    for _ in 0..d {
        acc = acc.checked_mul(p)?;
        if acc > limit {
            return None;
        }
    }
    Some(acc)
}

/// Looks for a member of `span(family)` of rank `target`. All members are
/// `rows x cols` and none has rank above `target` by construction.
pub(crate) fn search_rank(
    field: Field,
    rows: usize,
    cols: usize,
    family: &[Matrix],
    target: usize,
    cfg: &SearchConfig,
) -> RankSearch {
    if target == 0 {
        return RankSearch::Found {
            coefficients: vec![field.zero(); family.len()],
        };
    }
    if family.is_empty() {
        return RankSearch::Exhausted;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let coeffs: Vec<Scalar> = family.iter().map(|_| field.random(&mut rng)).collect();
        let m = Matrix::linear_combination(field, rows, cols, family, &coeffs);
        if m.rank() >= target {
            return RankSearch::Found { coefficients: coeffs };
        }
    }
    if let (Field::Prime(p), Some(_)) = (field, family_size(field, family.len(), cfg.exhaustive_limit)) {
        let residues: Vec<Vec<u64>> = family.iter().map(Matrix::residues).collect();
        let mut found = None;
        for_each_projective(p, family.len(), |c| {
            let mut acc = vec![0u64; rows * cols];
            for (ci, m) in c.iter().zip(&residues) {
                if *ci == 0 {
                    continue;
                }
                for (a, s) in acc.iter_mut().zip(m) {
                    *a = (*a + ci * s) % p;
                }
            }
            let mut work = acc.clone();
            let rank = crate::exactalg::rref_mod_p(&mut work, rows, cols, p).len();
            if rank >= target {
                found = Some(c.to_vec());
                return true;
            }
            false
        });
        return match found {
            Some(c) => RankSearch::Found {
                coefficients: c.iter().map(|&x| field.from_i64(x as i64)).collect(),
            },
            None => RankSearch::Exhausted,
        };
    }
    RankSearch::GaveUp { trials: cfg.trials }
}

/// Calls `visit` on one representative (first nonzero entry 1) of every
/// line in `F_p^d`; stops early when `visit` returns true.
pub(crate) fn for_each_projective(p: u64, d: usize, mut visit: impl FnMut(&[u64]) -> bool) -> bool {
    let mut c = vec![0u64; d];
    for lead in 0..d {
        c.iter_mut().for_each(|x| *x = 0);
        c[lead] = 1;
        let tail = (d - lead - 1) as u32;
        for mut n in 0..p.pow(tail) {
            for x in c[lead + 1..].iter_mut().rev() {
                *x = n % p;
                n /= p;
            }
            if visit(&c) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_points_are_counted_once() {
        for (p, d) in [(2u64, 1usize), (2, 3), (3, 2), (5, 3)] {
            let mut seen = std::collections::HashSet::new();
            for_each_projective(p, d, |c| {
                assert!(seen.insert(c.to_vec()));
                false
            });
            let expected = (p.pow(d as u32) - 1) / (p - 1);
            assert_eq!(seen.len() as u64, expected);
        }
    }
}
