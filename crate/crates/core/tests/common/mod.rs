#![allow(dead_code)]

use gcolength::artin::{build_algebra, ArtinAlgebra, Presentation};
use gcolength::exactalg::{Field, Matrix, Scalar, Subspace};
use gcolength::polyring::{parse_polynomial, Polynomial};

pub fn algebra(field: Field, vars: &[&str], gens: &[&str]) -> ArtinAlgebra {
    build_algebra(&presentation(field, vars, gens)).unwrap()
}

pub fn presentation(field: Field, vars: &[&str], gens: &[&str]) -> Presentation {
    Presentation::parse(field, vars, gens).unwrap()
}

pub fn polys(p: &Presentation, texts: &[&str]) -> Vec<Polynomial> {
    texts
        .iter()
        .map(|t| parse_polynomial(t, &p.vars, p.field).unwrap())
        .collect()
}

pub fn f(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub const XYZ: [&str; 3] = ["X", "Y", "Z"];
pub const SQUARE_GENS: [&str; 6] = ["X^2", "X*Y", "X*Z", "Y^2", "Y*Z", "Z^2"];
pub const KNOWN_COVER: [&str; 5] = ["X^2 - Y^2", "X^2 - Z^2", "X*Y", "X*Z", "Y*Z"];

/// `k[X,Y,Z]/(X,Y,Z)^2`.
pub fn example(field: Field) -> Presentation {
    presentation(field, &XYZ, &SQUARE_GENS)
}

/// Partitions of `n` as weakly decreasing column heights.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Minimal monomial generators of the ideal whose standard monomials are
/// `x^i y^j` with `j < heights[i]`.
pub fn staircase_generators(heights: &[u32]) -> Vec<String> {
    let mono = |i: u32, j: u32| -> String {
        match (i, j) {
            (0, 0) => "1".into(),
            (i, 0) => format!("x^{i}"),
            (0, j) => format!("y^{j}"),
            (i, j) => format!("x^{i}*y^{j}"),
        }
    };
    let k = heights.len();
    let mut gens = vec![mono(0, heights[0])];
    for i in 1..=k {
        let h = if i == k { 0 } else { heights[i] };
        if h < heights[i - 1] {
            gens.push(mono(i as u32, h));
        }
    }
    gens
}

/// All monomial quotients of `k[x,y]` of length at most `max_len`.
pub fn monomial_corpus(field: Field, max_len: u32) -> Vec<(String, ArtinAlgebra)> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for part in partitions(n) {
            let gens = staircase_generators(&part);
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let r = algebra(field, &["x", "y"], &refs);
            assert_eq!(r.length(), n as usize);
            out.push((gens.join(", "), r));
        }
    }
    out
}

/// `{F : F A_i = B_i F}` by solving the full Kronecker system.
pub fn naive_hom_dim(field: Field, a: &[Matrix], b: &[Matrix], m: usize, n: usize) -> usize {
    let mut rows = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        for r in 0..n {
            for c in 0..m {
                let mut row = vec![field.zero(); n * m];
                for l in 0..m {
                    let idx = r * m + l;
                    row[idx] = &row[idx] + ai.get(l, c);
                }
                for l in 0..n {
                    let idx = l * m + c;
                    row[idx] = &row[idx] - bi.get(r, l);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return n * m;
    }
    Matrix::from_rows(field, n * m, &rows).kernel().dim()
}

pub fn random_vector(field: Field, len: usize, rng: &mut impl rand::Rng) -> Vec<Scalar> {
    (0..len).map(|_| field.random(rng)).collect()
}

pub fn all_subspaces_dim(field: Field, ambient: usize) -> Vec<Subspace> {
    // only for tiny prime fields: enumerate spans of all vector lists by
    // growing canonical forms
    let elems = field.elements().unwrap();
    let mut vectors = vec![Vec::new()];
    for _ in 0..ambient {
        let mut next = Vec::new();
        for v in &vectors {
            for e in &elems {
                let mut w: Vec<Scalar> = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        vectors = next;
    }
    let mut seen = std::collections::HashSet::new();
    let mut frontier = vec![Subspace::zero(field, ambient)];
    seen.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if s.contains(v) {
                continue;
            }
            let t = s
                .join(&Subspace::span(field, ambient, std::slice::from_ref(v)))
                .unwrap();
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort_by_key(|s| s.dim());
    out
}
