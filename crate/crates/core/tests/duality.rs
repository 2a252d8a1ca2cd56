mod common;

use std::sync::Arc;

use common::*;
use gcolength::artin::ArtinAlgebra;
use gcolength::duality::{
    as_module, canonical_module, dual_map, hom_basis, ideal_dual, ideal_dual_with_projection, matlis_dual,
    self_dual_witness, teter_check, trace_of_canonical, Duality, ModuleMap, ModuleRep, SearchConfig,
    TeterConclusion, TeterRoute,
};
use gcolength::exactalg::{Field, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn xyz(field: Field) -> ArtinAlgebra {
    algebra(field, &XYZ, &SQUARE_GENS)
}

fn three_point(field: Field) -> ArtinAlgebra {
    algebra(field, &["x", "y"], &["x^2", "x*y", "y^2"])
}

fn dual_numbers() -> ArtinAlgebra {
    algebra(Field::Rational, &["x"], &["x^2"])
}

#[test]
fn canonical_module_of_dual_numbers_is_free() {
    let r = dual_numbers();
    let omega = Arc::new(canonical_module(&r));
    assert_eq!(omega.dim(), 2);
    let ring = Arc::new(ModuleRep::ring(&r));
    let hom = hom_basis(&r, &ring, &omega);
    assert!(hom.maps().iter().any(|f| f.is_injective()));
}

#[test]
fn canonical_module_socle_and_generators() {
    let r = xyz(Field::Rational);
    let omega = canonical_module(&r);
    assert_eq!(omega.dim(), 4);
    assert_eq!(omega.socle().dim(), 1);

    let r = three_point(Field::Rational);
    let omega = canonical_module(&r);
    // cosocle by brute force: dim ω minus the rank of the stacked images
    let stacked = omega.actions()[0].hstack(&omega.actions()[1]).unwrap();
    assert_eq!(omega.dim() - stacked.rank(), 2);
    assert_eq!(omega.num_minimal_generators(), 2);
}

#[test]
fn ideals_as_modules() {
    let r = dual_numbers();
    let (zero, incl) = as_module(&r, &r.zero_ideal());
    assert_eq!(zero.dim(), 0);
    assert_eq!(incl.matrix().cols(), 0);
    let (whole, incl) = as_module(&r, &r.unit_ideal());
    assert_eq!(whole.dim(), 2);
    assert_eq!(incl.matrix(), &Matrix::identity(r.field(), 2));
    let (m, _) = as_module(&r, &r.maximal_ideal());
    assert_eq!(m.dim(), 1);
    assert!(m.actions().iter().all(Matrix::is_zero));
}

#[test]
fn hom_dimensions() {
    let r = xyz(Field::Rational);
    let d = Duality::new(&r);
    let ring = d.ring().clone();
    let omega = d.omega().clone();
    assert_eq!(hom_basis(&r, &ring, &omega).dim(), 4);
    assert_eq!(hom_basis(&r, &ring, &ring).dim(), 4);
    assert_eq!(hom_basis(&r, &omega, &omega).dim(), 4);
    let hom = d.hom_omega_ring();
    assert_eq!(hom.dim(), 9);
    let naive = naive_hom_dim(r.field(), omega.actions(), ring.actions(), 4, 4);
    assert_eq!(naive, 9);
    for f in hom.maps() {
        ModuleMap::new(omega.clone(), ring.clone(), f.matrix().clone()).unwrap();
    }
}

#[test]
fn hom_agrees_with_kronecker_solve_on_corpus() {
    for (name, r) in monomial_corpus(f(5), 7) {
        let d = Duality::new(&r);
        let (ring, omega) = (d.ring(), d.omega());
        let n = r.dim();
        for (m1, m2) in [(omega, ring), (ring, omega), (omega, omega)] {
            let fast = hom_basis(&r, m1, m2).dim();
            let slow = naive_hom_dim(r.field(), m1.actions(), m2.actions(), n, n);
            assert_eq!(fast, slow, "{name}");
        }
    }
}

#[test]
fn matlis_dual_properties() {
    let r = xyz(f(3));
    let omega = canonical_module(&r);
    let dd = matlis_dual(&matlis_dual(&omega));
    assert_eq!(dd.actions(), omega.actions());
    assert_eq!(matlis_dual(&ModuleRep::ring(&r)), omega);
    let ring = Arc::new(ModuleRep::ring(&r));
    let zero = ModuleMap::zero(ring.clone(), ring.clone());
    assert!(dual_map(&zero).is_zero());
    for k in 0..3 {
        let a = r.maximal_power(k);
        let ann = omega.annihilated_by(&r, &a);
        assert_eq!(ann.dim(), a.colength());
    }
}

#[test]
fn dual_of_surjection_is_injection() {
    let r = three_point(f(3));
    let m = r.maximal_ideal();
    let (dual, proj) = ideal_dual_with_projection(&r, &m);
    let omega = Arc::new(canonical_module(&r));
    let p = ModuleMap::new(omega, Arc::new(dual), proj).unwrap();
    assert!(p.is_surjective());
    assert!(dual_map(&p).is_injective());
}

#[test]
fn ideal_duals() {
    let r = xyz(Field::Rational);
    assert_eq!(ideal_dual(&r, &r.unit_ideal()), canonical_module(&r));
    assert_eq!(ideal_dual(&r, &r.zero_ideal()).dim(), 0);
    assert_eq!(ideal_dual(&r, &r.maximal_ideal()).dim(), 3);
}

#[test]
fn traces() {
    let r = dual_numbers();
    assert!(trace_of_canonical(&r).is_unit());
    let r = xyz(Field::Rational);
    assert_eq!(trace_of_canonical(&r), r.maximal_ideal());
    let r = three_point(Field::Rational);
    let t = trace_of_canonical(&r);
    assert_eq!(t, r.maximal_ideal());
    assert_eq!(t.colength(), 1);
}

#[test]
fn star_basics() {
    let r = xyz(f(5));
    let d = Duality::new(&r);
    let zero = ModuleMap::zero(d.omega().clone(), d.ring().clone());
    assert!(d.star(&zero).unwrap().is_zero());

    let k = algebra(Field::Rational, &["x"], &["x"]);
    let d = Duality::new(&k);
    let id = d.map_from_matrix(Matrix::identity(k.field(), 1)).unwrap();
    assert_eq!(d.star(&id).unwrap(), id);
}

#[test]
fn star_is_an_involution_satisfying_its_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in [
        xyz(f(5)),
        three_point(f(5)),
        algebra(f(5), &["x", "y"], &["x^3", "x*y^2", "y^3"]),
    ] {
        let d = Duality::new(&r);
        let hom = d.hom_omega_ring();
        for _ in 0..5 {
            let f = hom.combination(&random_vector(r.field(), hom.dim(), &mut rng));
            let s = d.star(&f).unwrap();
            assert_eq!(d.star(&s).unwrap(), f);
            assert_eq!(s.matrix(), &f.matrix().transpose());
            for u in 0..r.dim() {
                for v in 0..r.dim() {
                    let eu = r.basis_vector(u);
                    let ev = r.basis_vector(v);
                    let lhs = d.omega_mul(&s.apply(&eu), &ev);
                    let rhs = d.omega_mul(&f.apply(&ev), &eu);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn symmetrize_examples() {
    let r = xyz(Field::Rational);
    let d = Duality::new(&r);
    let zero = ModuleMap::zero(d.omega().clone(), d.ring().clone());
    assert!(d.symmetrize(&zero).unwrap().is_zero());

    let witness = d
        .self_dual_witness(&r.maximal_ideal(), &SearchConfig::default())
        .witness()
        .cloned()
        .unwrap();
    let h = d.symmetrize(&witness).unwrap();
    assert!(h.image().is_subspace_of(r.maximal_space()));
    let check = d.check_symmetrization(&witness, &h).unwrap();
    assert!(check.teter && check.kernel_meet && check.kernel_bounds);
    assert!(!check.strong_hypothesis);
    assert_eq!(check.same_kernel_and_image, None);
}

#[test]
fn symmetric_input_doubles() {
    let r = three_point(f(3));
    let d = Duality::new(&r);
    let report = d.teter_check(&SearchConfig::default()).unwrap();
    let f = report.symmetric_witness().unwrap().clone();
    let h = d.symmetrize(&f).unwrap();
    assert_eq!(h.matrix(), &f.matrix().scale(&r.field().from_i64(2)));
    assert_eq!(h.kernel(), f.kernel());
    assert_eq!(h.image(), f.image());
}

#[test]
fn characteristic_two_is_rejected() {
    let r = three_point(f(2));
    let d = Duality::new(&r);
    let zero = ModuleMap::zero(d.omega().clone(), d.ring().clone());
    assert_eq!(
        d.symmetrize(&zero).unwrap_err(),
        gcolength::Error::CharacteristicTwo
    );
}

#[test]
fn teter_maps() {
    let r = algebra(f(5), &["x", "y"], &["x^3", "x*y^2", "y^3"]);
    let d = Duality::new(&r);
    let zero = ModuleMap::zero(d.omega().clone(), d.ring().clone());
    assert!(d.is_teter_map(&zero).unwrap());
    let hom = d.hom_omega_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = loop {
        let f = hom.combination(&random_vector(r.field(), hom.dim(), &mut rng));
        if d.star(&f).unwrap() != f {
            break f;
        }
    };
    assert!(!d.is_teter_map(&f).unwrap());
    assert!(!d.teter_identity_on_basis(&f));
    let g = f.add(&d.star(&f).unwrap()).unwrap();
    assert!(d.is_teter_map(&g).unwrap());
    assert!(d.teter_identity_on_basis(&g));
}

#[test]
fn self_dual_witness_examples() {
    let cfg = SearchConfig::default();
    let r = dual_numbers();
    assert!(self_dual_witness(&r, &r.unit_ideal(), &cfg).is_yes());
    let r = xyz(f(3));
    assert!(!self_dual_witness(&r, &r.unit_ideal(), &cfg).is_yes());
    let m = r.maximal_ideal();
    let exhaustive = self_dual_witness(&r, &m, &SearchConfig::exhaustive());
    let f = exhaustive.witness().unwrap();
    assert_eq!(f.image(), *m.space());
    assert!(self_dual_witness(&r, &r.zero_ideal(), &cfg).is_yes());
    let unit = self_dual_witness(&r, &r.unit_ideal(), &SearchConfig::exhaustive());
    assert!(unit.is_certified_no());
}

#[test]
fn teter_check_examples() {
    let cfg = SearchConfig::default();
    let r = algebra(Field::Rational, &["x"], &["x^2"]);
    assert_eq!(
        teter_check(&r, &cfg).unwrap().conclusion,
        TeterConclusion::Gorenstein
    );

    let r = xyz(f(3));
    let rep = teter_check(&r, &cfg).unwrap();
    assert_eq!(rep.conclusion, TeterConclusion::AtMostOne);
    assert!(matches!(rep.teter_route, TeterRoute::Found(_)));

    let r = three_point(f(3));
    let rep = teter_check(&r, &cfg).unwrap();
    assert_eq!(rep.conclusion, TeterConclusion::AtMostOne);
    assert!(!rep.socle_in_m2);
    assert!(!rep.m_selfdual_criterion_applies());
    let s = algebra(f(3), &["x", "y"], &["x^2", "y^2"]);
    assert!(s.is_gorenstein());
    assert_eq!(s.length(), r.length() + 1);
}

#[test]
fn gorenstein_agrees_with_free_canonical_module() {
    for (name, r) in monomial_corpus(f(5), 6) {
        let d = Duality::new(&r);
        let hom = hom_basis(&r, d.ring(), d.omega());
        let cfg = SearchConfig::default();
        let iso = gcolength::duality::SearchConfig { trials: 50, ..cfg };
        let found = hom_has_iso(hom.basis(), r.field(), r.dim(), &iso);
        assert_eq!(r.is_gorenstein(), r.socle_dim() == 1, "{name}");
        assert_eq!(r.is_gorenstein(), found, "{name}");
    }
}

fn hom_has_iso(basis: &[Matrix], field: Field, n: usize, cfg: &SearchConfig) -> bool {
    // Hom(R, ω) ≅ ω via evaluation at 1, so a generic member is an
    // isomorphism exactly when one exists.
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials).any(|_| {
        let c = random_vector(field, basis.len(), &mut rng);
        Matrix::linear_combination(field, n, n, basis, &c).rank() == n
    })
}
