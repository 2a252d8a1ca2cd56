mod common;

use common::*;
use gcolength::artin::build_algebra;
use gcolength::duality::{trace_of_canonical, Duality, SearchConfig};
use gcolength::error::Error;
use gcolength::exactalg::Field;
use gcolength::oracle::*;

#[test]
fn chain_ring_ideal_counts() {
    let cfg = EnumConfig::default();
    let r = algebra(f(2), &["x"], &["x^2"]);
    assert_eq!(enumerate_ideals(&r, &cfg).unwrap().len(), 3);
    let r = algebra(f(2), &["x"], &["x^3"]);
    assert_eq!(enumerate_ideals(&r, &cfg).unwrap().len(), 4);
}

#[test]
fn ideal_count_matches_direct_filter() {
    for (field, gens) in [
        (f(2), vec!["x^2", "x*y", "y^2"]),
        (f(3), vec!["x^2", "x*y", "y^2"]),
        (f(2), vec!["x^2", "y^2"]),
        (f(2), vec!["x^3", "x*y", "y^2"]),
    ] {
        let r = algebra(field, &["x", "y"], &gens);
        let ideals = enumerate_ideals(&r, &EnumConfig::default()).unwrap();
        let direct = all_subspaces_dim(field, r.dim())
            .into_iter()
            .filter(|s| r.is_ideal(s))
            .count();
        assert_eq!(ideals.len(), direct, "{gens:?} over {field}");
        assert!(ideals.iter().any(|a| a.is_zero()));
        assert!(ideals.iter().any(|a| a.is_unit()));
    }
    // 0, three lines in the socle, m, R
    let r = algebra(f(2), &["x", "y"], &["x^2", "x*y", "y^2"]);
    assert_eq!(enumerate_ideals(&r, &EnumConfig::default()).unwrap().len(), 6);
}

#[test]
fn enumeration_is_deterministic_and_refuses_big_inputs() {
    let r = algebra(f(3), &["x", "y"], &["x^2", "x*y^2", "y^3"]);
    let a = enumerate_ideals(&r, &EnumConfig::default()).unwrap();
    let b = enumerate_ideals(&r, &EnumConfig::default()).unwrap();
    assert_eq!(a, b);

    let big = algebra(f(2), &["x", "y"], &["x^3", "y^3"]);
    assert!(matches!(
        enumerate_ideals(&big, &EnumConfig::default()),
        Err(Error::OverBound(_))
    ));
    let q = algebra(Field::Rational, &["x"], &["x^2"]);
    assert!(matches!(
        enumerate_ideals(&q, &EnumConfig::default()),
        Err(Error::OverBound(_))
    ));
    let f5 = algebra(f(5), &["x"], &["x^2"]);
    assert!(!EnumConfig::default().admits(&f5));
}

#[test]
fn min_selfdual_colength_examples() {
    let cfg = EnumConfig::default();
    let g = algebra(f(2), &["x", "y"], &["x^2", "y^2"]);
    let (v, w) = min_selfdual_colength_exhaustive(&g, &cfg).unwrap();
    assert_eq!(v, 0);
    assert!(w[0].is_unit());

    let r = algebra(f(2), &["x", "y"], &["x^2", "x*y", "y^2"]);
    let (v, w) = min_selfdual_colength_exhaustive(&r, &cfg).unwrap();
    assert_eq!(v, 1);
    assert_eq!(w, vec![r.maximal_ideal()]);

    let r = build_algebra(&example(f(3))).unwrap();
    assert_eq!(min_selfdual_colength_exhaustive(&r, &cfg).unwrap().0, 1);
}

#[test]
fn gcolength_upper_examples() {
    let cfg = EnumConfig::default();
    let p = presentation(f(2), &["x", "y"], &["x^2", "y^3"]);
    let (v, c) = gcolength_upper_exhaustive(&p, &cfg).unwrap().unwrap();
    assert_eq!(v, 0);
    assert_eq!(c, p.generators);

    let p = presentation(f(2), &["x", "y"], &["x^2", "x*y", "y^2"]);
    let (v, c) = gcolength_upper_exhaustive(&p, &cfg).unwrap().unwrap();
    assert_eq!(v, 1);
    let cover = gcolength::construct::verify_cover(&p, &c).unwrap();
    assert_eq!(cover.checks.cover_length, 4);
    assert!(cover.checks.gorenstein);

    let p = example(f(3));
    let (v, c) = gcolength_upper_exhaustive(&p, &cfg).unwrap().unwrap();
    assert_eq!(v, 1);
    let cover = gcolength::construct::verify_cover(&p, &c).unwrap();
    assert_eq!(cover.checks.cover_length, 5);
    assert!(cover.checks.all_pass());
}

#[test]
fn upper_search_reports_none_within_the_bound() {
    // (x,y)^3 has g = λ(R/trace) >= 2, so no cover of excess 1 exists
    let p = presentation(f(2), &["x", "y"], &["x^3", "x^2*y", "x*y^2", "y^3"]);
    let r = build_algebra(&p).unwrap();
    assert!(trace_of_canonical(&r).colength() >= 2);
    let cfg = EnumConfig::default().with_max_extra(1);
    assert_eq!(gcolength_upper_exhaustive(&p, &cfg).unwrap(), None);
}

#[test]
fn selfdual_minimum_dominates_the_trace_bound() {
    for field in [f(2), f(3)] {
        for (name, r) in monomial_corpus(field, 6) {
            let (v, _) = min_selfdual_colength_exhaustive(&r, &EnumConfig::default()).unwrap();
            assert!(v >= trace_of_canonical(&r).colength(), "{name} over {field}");
        }
    }
}

#[test]
fn randomized_witness_agrees_with_exhaustive_decision() {
    let cfg = EnumConfig::default();
    for field in [f(2), f(3)] {
        for (name, r) in monomial_corpus(field, 5) {
            let d = Duality::new(&r);
            for a in enumerate_ideals(&r, &cfg).unwrap() {
                let exact = decide_selfdual(&r, &a, &cfg).unwrap();
                for seed in 0..3 {
                    let res = d.self_dual_witness(&a, &SearchConfig::with_seed(seed));
                    if res.is_yes() {
                        assert!(exact, "{name} over {field}");
                    } else {
                        assert!(!exact, "{name} over {field}, seed {seed}: {}", res.label());
                    }
                }
            }
        }
    }
}
