use rand::Rng;

use super::*;
use crate::cobar::{cobar_mul, mc_residual, MaurerCartanElement};
use crate::graded::*;
use crate::holim::{compose, hom_diff, HolimMorphism};
use crate::linear::int;
use crate::random::{self, GradedBasis, TestRng};

fn random_matrix<L: Ord + Clone>(
    basis: &GradedBasis<L>,
    rng: &mut TestRng,
    target: &[i64],
    source: &[i64],
    degree: i64,
    truncation: usize,
) -> MatrixCobar<L> {
    let mut terms = SparseVector::zero();
    for _ in 0..6 {
        let i = rng.gen_range(0..target.len());
        let j = rng.gen_range(0..source.len());
        let x = random::homogeneous(basis, rng, degree - target[i] + source[j], truncation, truncation, 1);
        for (w, c) in x.terms().iter() {
            terms.add_term((i, j, w.clone()), c.clone());
        }
    }
    MatrixCobar::new(terms, truncation)
}

fn regular_is_valid<B: Bialgebra>(alg: &B) {
    let m = AInfinityComodule::regular(alg, 4).unwrap();
    let report = ainf_identity_residuals(alg, &m);
    assert!(report.is_valid(), "{}: {:?}", alg.name(), report.first_nonzero());
    assert_eq!(report.componentwise, None, "{}", alg.name());
    let maps = m.structure_maps(alg);
    assert!(maps[2..].iter().flatten().all(SparseVector::is_zero));
}

#[test]
fn regular_comodules_are_strict() {
    regular_is_valid(&FiniteGroupFunctionHopf::cyclic(2));
    regular_is_valid(&FiniteGroupFunctionHopf::symmetric3());
    regular_is_valid(&ExteriorPrimitiveHopf);
    regular_is_valid(&DgSweedlerHopf);
    assert_eq!(AInfinityComodule::regular(&UpperTriangularHopf, 3).unwrap_err(), AinfError::NotFinite);
}

#[test]
fn broken_coaction_is_detected() {
    let s = DgSweedlerHopf;
    let m = AInfinityComodule::regular(&s, 3).unwrap();
    let mut maps = m.structure_maps(&s);
    maps[1][1] = SparseVector::zero();
    let broken = AInfinityComodule::from_structure_maps(&s, m.names().to_vec(), m.degrees().to_vec(), &maps, 3).unwrap();
    let report = ainf_identity_residuals(&s, &broken);
    assert!(!report.is_valid());
    assert_eq!(report.componentwise, None);
}

fn one_dimensional<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let basis = GradedBasis::new(alg, &window);
    let groups = random::grouplikes(alg, &window);
    let mut rng = random::rng(seed);
    for _ in 0..30 {
        let a = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let m = AInfinityComodule::from_object(&a);
        assert!(ainf_identity_residuals(alg, &m).is_valid());
        assert_eq!(m.to_object(alg).unwrap().element(), a.element());
        let maps = m.structure_maps(alg);
        for n in 0..=4 {
            let expected: Image<B::Label> =
                crate::cobar::indexed::suspend(alg, &a.component(n)).iter().map(|(w, c)| ((0, w.clone()), c.clone())).collect();
            assert_eq!(maps[n][0], expected);
        }

        // a degree-one element that is not Maurer-Cartan
        let x = random::homogeneous(&basis, &mut rng, 1, 4, 4, 4);
        let terms = x.terms().iter().map(|(w, c)| ((0, 0, w.clone()), c.clone())).collect();
        let k = AInfinityComodule::new(alg, vec!["k".into()], vec![0], MatrixCobar::new(terms, 4)).unwrap();
        let report = ainf_identity_residuals(alg, &k);
        assert_eq!(report.componentwise, None);
        let residual = mc_residual(alg, &x);
        for n in 0..=4 {
            let expected: Image<B::Label> = crate::cobar::indexed::suspend(alg, &residual.component(n))
                .iter()
                .map(|(w, c)| ((0, w.clone()), c.clone()))
                .collect();
            assert_eq!(report.residuals[n][0], expected, "{}: weight {n}", alg.name());
        }
        assert_eq!(report.first_nonzero().map(|(n, _)| n), residual.weights().into_iter().next());
    }
}

#[test]
fn one_dimensional_comodules_are_maurer_cartan_elements() {
    one_dimensional(&UpperTriangularHopf, Window::new(1, 1), 1);
    one_dimensional(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 2);
    one_dimensional(&ExteriorPrimitiveHopf, Window::default(), 3);
    one_dimensional(&DgSweedlerHopf, Window::default(), 4);
}

#[test]
fn dictionary_matches_the_holim_category() {
    let s = DgSweedlerHopf;
    let window = Window::default();
    let basis = GradedBasis::new(&s, &window);
    let groups = random::grouplikes(&s, &window);
    let mut rng = random::rng(5);
    for i in 0..30 {
        let a = random::maurer_cartan(&s, &basis, &groups, &mut rng, 4);
        let b = random::maurer_cartan(&s, &basis, &groups, &mut rng, 4);
        let c = random::maurer_cartan(&s, &basis, &groups, &mut rng, 4);
        let (ka, kb, kc) = (AInfinityComodule::from_object(&a), AInfinityComodule::from_object(&b), AInfinityComodule::from_object(&c));
        let m = (i % 4) as i64 - 1;
        let x = random::homogeneous(&basis, &mut rng, m, 4, 4, 4);
        let y = random::homogeneous(&basis, &mut rng, 1 - m, 4, 4, 4);
        let f = HolimMorphism::new(&s, &a, &b, m, x.clone()).unwrap();
        let g = HolimMorphism::new(&s, &b, &c, 1 - m, y.clone()).unwrap();
        let af = AInfinityMorphism::from_cobar(&s, &ka, &kb, m, &x).unwrap();
        let ag = AInfinityMorphism::from_cobar(&s, &kb, &kc, 1 - m, &y).unwrap();
        assert_eq!(ainf_hom_diff(&s, &af).to_cobar().unwrap(), *hom_diff(&s, &f).element());
        assert_eq!(ainf_compose(&s, &ag, &af).unwrap().to_cobar().unwrap(), *compose(&g, &f).unwrap().element());
        assert_eq!(cobar_mul(&y, &x).unwrap(), *compose(&g, &f).unwrap().element());
    }
}

fn hom_laws<B: Bialgebra>(alg: &B, seed: u64) {
    let n = 3;
    let window = Window::default();
    let basis = GradedBasis::new(alg, &window);
    let groups = random::grouplikes(alg, &window);
    let mut rng = random::rng(seed);
    let regular = AInfinityComodule::regular(alg, n).unwrap();
    let unit = AInfinityComodule::from_object(&MaurerCartanElement::unit_object(alg, n));
    for i in 0..12 {
        let twisted = AInfinityComodule::from_object(&random::maurer_cartan(alg, &basis, &groups, &mut rng, n));
        let objects = [&regular, &unit, &twisted];
        let (p, q, r, t) = (objects[i % 3], objects[(i + 1) % 3], objects[(i / 3) % 3], objects[(i + 2) % 3]);
        let mut mor = |s: &AInfinityComodule<B::Label>, t: &AInfinityComodule<B::Label>, m: i64| {
            let e = random_matrix(&basis, &mut rng, t.degrees(), s.degrees(), m, n);
            AInfinityMorphism::new(alg, s, t, m, e).unwrap()
        };
        let f = mor(p, q, (i % 3) as i64 - 1);
        let g = mor(q, r, (i % 2) as i64);
        let h = mor(r, t, 1);

        let (df, check) = ainf_hom_diff_checked(alg, &f);
        assert_eq!(check, None, "{}", alg.name());
        assert!(ainf_hom_diff(alg, &df).is_zero(), "{}: d² on {:?}", alg.name(), f.element());

        assert_eq!(ainf_compose(alg, &AInfinityMorphism::identity(q), &f).unwrap(), f);
        assert_eq!(ainf_compose(alg, &f, &AInfinityMorphism::identity(p)).unwrap(), f);
        let (gf, check) = ainf_compose_checked(alg, &g, &f).unwrap();
        assert_eq!(check, None);
        assert_eq!(ainf_compose(alg, &h, &gf).unwrap(), ainf_compose(alg, &ainf_compose(alg, &h, &g).unwrap(), &f).unwrap());

        let sign = Sign::pow(g.degree()).to_rational();
        let lhs = ainf_hom_diff(alg, &gf);
        let rhs = ainf_compose(alg, &ainf_hom_diff(alg, &g), &f)
            .unwrap()
            .element()
            .add(&ainf_compose(alg, &g, &ainf_hom_diff(alg, &f)).unwrap().element().scale(&sign));
        assert_eq!(lhs.element(), &rhs, "{}: Leibniz", alg.name());
    }
}

#[test]
fn hom_complexes_of_comodules() {
    hom_laws(&FiniteGroupFunctionHopf::cyclic(2), 11);
    hom_laws(&ExteriorPrimitiveHopf, 12);
    hom_laws(&DgSweedlerHopf, 13);
}

#[test]
fn strict_morphisms_measure_colinearity() {
    let z3 = FiniteGroupFunctionHopf::cyclic(3);
    let m = AInfinityComodule::regular(&z3, 3).unwrap();
    let basis = z3.basis(&Window::default());
    let lambda = [int(2), int(-1), int(5)];
    // φ = (λ ⊗ id)Δ commutes with the coaction
    let colinear: Vec<Image<GroupElement>> = basis
        .iter()
        .map(|l| {
            z3.coproduct(l)
                .iter()
                .map(|(w, c)| ((basis.iter().position(|b| *b == w[1]).unwrap(), Vec::new()), c * &lambda[w[0].0]))
                .collect()
        })
        .collect();
    let f = AInfinityMorphism::from_maps(&z3, &m, &m, 0, &[colinear]).unwrap();
    assert!(ainf_hom_diff(&z3, &f).is_zero());

    let projection: Vec<Image<GroupElement>> =
        (0..3).map(|j| if j == 0 { SparseVector::basis((0, Vec::new())) } else { SparseVector::zero() }).collect();
    let p = AInfinityMorphism::from_maps(&z3, &m, &m, 0, &[projection]).unwrap();
    let dp = ainf_hom_diff(&z3, &p);
    assert!(!dp.is_zero());
    assert!(dp.maps(&z3)[1].iter().any(|x| !x.is_zero()));
}

fn module_structure<B: Bialgebra>(alg: &B, m: &AInfinityComodule<B::Label>, seed: u64) {
    let basis = GradedBasis::new(alg, &Window::default());
    let mut rng = random::rng(seed);
    let n = m.truncation();
    for i in 0..40 {
        let j = rng.gen_range(0..m.dimension());
        let p = (i % 4) as i64 - 1;
        let w = random::homogeneous(&basis, &mut rng, p - m.degrees()[j], n, n, 3);
        let x: Image<B::Label> = w.terms().iter().map(|(w, c)| ((j, w.clone()), c.clone())).collect();
        let dx = module_differential(alg, m, &x);
        assert!(module_differential(alg, m, &dx).is_zero(), "{}: D² on {:?}", alg.name(), x);
        let v = random::homogeneous(&basis, &mut rng, (i % 3) as i64, n, n, 3);
        let lhs = module_differential(alg, m, &module_action(&x, &v));
        let mut rhs = module_action(&dx, &v);
        rhs.add_scaled(&module_action(&x, &crate::cobar::cobar_diff(alg, &v)), &Sign::pow(p).to_rational());
        assert_eq!(lhs, rhs, "{}: module Leibniz", alg.name());
    }
}

#[test]
fn coactions_make_m_tensor_cobar_a_dg_module() {
    let s = DgSweedlerHopf;
    module_structure(&s, &AInfinityComodule::regular(&s, 4).unwrap(), 21);
    let e = ExteriorPrimitiveHopf;
    module_structure(&e, &AInfinityComodule::regular(&e, 4).unwrap(), 22);
    let groups = random::grouplikes(&s, &Window::default());
    let basis = GradedBasis::new(&s, &Window::default());
    let a = random::maurer_cartan(&s, &basis, &groups, &mut random::rng(23), 4);
    module_structure(&s, &AInfinityComodule::from_object(&a), 24);
}
