use super::*;
use crate::cobar::{cobar_coaug_diff, cobar_diff, gauge_act, MaurerCartanElement};
use crate::graded::*;
use crate::linear::{int, SparseVector};
use crate::random::{self, GradedBasis};

fn mono(x: i32, y: i32, z: u32) -> Monomial {
    Monomial::new(x, y, z)
}

fn ext_window(source: &HolimObject<Monomial>, target: &HolimObject<Monomial>, degree: i64) -> HomWindow<Monomial> {
    HomWindow { source: source.clone(), target: target.clone(), degree, max_weight: 2, window: Window::new(2, 2) }
}

#[test]
fn characters() {
    let ut = UpperTriangularHopf;
    let unit = character_from_grouplike(&ut, &ut.unit(), 3).unwrap();
    assert_eq!(unit, MaurerCartanElement::unit_object(&ut, 3));
    assert!(character_from_grouplike(&ut, &SparseVector::basis(mono(1, -1, 0)), 3).is_ok());
    assert!(character_from_grouplike(&ut, &SparseVector::basis(mono(0, 0, 1)), 3).is_err());
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    assert!(character_from_grouplike(&z2, &SparseVector::basis(GroupElement(0)), 3).is_err());
    assert_eq!(object(MaurerCartanElement::<Monomial>::zero(3)).unwrap_err(), HolimError::NotInvertible);
}

#[test]
fn morphism_degrees_are_checked() {
    let ut = UpperTriangularHopf;
    let unit = MaurerCartanElement::unit_object(&ut, 3);
    let f = CobarElement::generator(mono(0, 0, 1), 3);
    assert!(HolimMorphism::new(&ut, &unit, &unit, 1, f.clone()).is_ok());
    assert_eq!(
        HolimMorphism::new(&ut, &unit, &unit, 0, f).unwrap_err(),
        HolimError::ComponentDegree { weight: 1, found: 0, expected: -1 }
    );
}

#[test]
fn endomorphisms_of_the_unit_object_are_the_coaugmented_cobar() {
    let s = DgSweedlerHopf;
    let basis = GradedBasis::new(&s, &Window::default());
    let unit = MaurerCartanElement::unit_object(&s, 4);
    let mut rng = random::rng(3);
    for m in -2..4 {
        for _ in 0..10 {
            let x = random::homogeneous(&basis, &mut rng, m, 4, 4, 3);
            let f = HolimMorphism::new(&s, &unit, &unit, m, x.clone()).unwrap();
            assert_eq!(hom_diff(&s, &f).element(), &cobar_coaug_diff(&s, &x));
        }
    }
    let zero = MaurerCartanElement::zero(4);
    let x = random::homogeneous(&basis, &mut rng, 1, 3, 4, 3);
    let f = HolimMorphism::new(&s, &zero, &zero, 1, x.clone()).unwrap();
    assert_eq!(hom_diff(&s, &f).element(), &cobar_diff(&s, &x));
}

fn category_laws<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let basis = GradedBasis::new(alg, &window);
    let groups = random::grouplikes(alg, &window);
    let mut rng = random::rng(seed);
    let lo = basis.degrees().min().unwrap() - 1;
    let n = 4;
    let obj = |rng: &mut random::TestRng| random::maurer_cartan(alg, &basis, &groups, rng, n);
    for i in 0..30 {
        let (a, b, c, d) = (obj(&mut rng), obj(&mut rng), obj(&mut rng), obj(&mut rng));
        let deg = |k: i64| lo + (i + k) % 5;
        let mut mor = |s: &HolimObject<B::Label>, t: &HolimObject<B::Label>, m: i64| {
            HolimMorphism::new(alg, s, t, m, random::homogeneous(&basis, &mut rng, m, 4, n, 3)).unwrap()
        };
        let f = mor(&a, &b, deg(0));
        let g = mor(&b, &c, deg(1));
        let h = mor(&c, &d, deg(2));

        let (df, check) = hom_diff_checked(alg, &f);
        assert!(check.agrees(), "{}: {:?}", alg.name(), check);
        assert!(hom_diff(alg, &df).is_zero(), "{}: d² on {}", alg.name(), f.element());

        assert_eq!(compose(&HolimMorphism::identity(&b), &f).unwrap(), f);
        assert_eq!(compose(&f, &HolimMorphism::identity(&a)).unwrap(), f);
        assert_eq!(
            compose(&compose(&h, &g).unwrap(), &f).unwrap(),
            compose(&h, &compose(&g, &f).unwrap()).unwrap()
        );
        let (gf, check) = compose_checked(alg, &g, &f).unwrap();
        assert!(check.agrees(), "{}: {:?}", alg.name(), check);

        let sign = Sign::pow(g.degree()).to_rational();
        let lhs = hom_diff(alg, &gf);
        let rhs = compose(&hom_diff(alg, &g), &f).unwrap().element()
            + &compose(&g, &hom_diff(alg, &f)).unwrap().element().scale(&sign);
        assert_eq!(lhs.element(), &rhs, "{}: Leibniz", alg.name());
        assert!(compose(&f, &g).is_err() || a == c);
    }
}

#[test]
fn hom_complexes_form_a_dg_category() {
    category_laws(&UpperTriangularHopf, Window::new(1, 1), 1);
    category_laws(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 2);
    category_laws(&FiniteGroupFunctionHopf::symmetric3(), Window::default(), 3);
    category_laws(&ExteriorPrimitiveHopf, Window::default(), 4);
    category_laws(&DgSweedlerHopf, Window::default(), 5);
}

#[test]
fn gauge_witness_is_a_closed_isomorphism_in_the_category() {
    let s = DgSweedlerHopf;
    let basis = GradedBasis::new(&s, &Window::default());
    let mut rng = random::rng(9);
    let a = MaurerCartanElement::unit_object(&s, 4);
    let f = random::gauge_element(&basis, &mut rng, 4);
    let fa = gauge_act(&s, &f, &a).unwrap();
    let iso = HolimMorphism::new(&s, &a, &fa, 0, f).unwrap();
    assert!(hom_diff(&s, &iso).is_zero());
}

#[test]
fn identity_class_in_degree_zero() {
    let ut = UpperTriangularHopf;
    let unit = MaurerCartanElement::unit_object(&ut, 2);
    let h = hom_cohomology(&ut, &ext_window(&unit, &unit, 0)).unwrap();
    assert!(h.dimension >= 1);
    assert!(h.is_windowed_cycle(&CobarElement::one(2)));
}

#[test]
fn ext_one_between_trivial_and_xy_inverse() {
    let ut = UpperTriangularHopf;
    let one = character_from_grouplike(&ut, &ut.unit(), 2).unwrap();
    let chi = character_from_grouplike(&ut, &SparseVector::basis(mono(1, -1, 0)), 2).unwrap();
    let h = hom_cohomology(&ut, &ext_window(&one, &chi, 1)).unwrap();

    let difference: Tensor<Monomial> = [(vec![mono(0, 0, 0)], int(1)), (vec![mono(1, -1, 0)], int(-1))].into_iter().collect();
    let difference = CobarElement::new(difference, 2);
    let class = CobarElement::generator(mono(0, -1, 1), 2);
    for x in [&difference, &class] {
        let f = HolimMorphism::new(&ut, &one, &chi, 1, x.clone()).unwrap();
        assert!(hom_diff(&ut, &f).is_zero(), "{x} is not a cycle");
        assert!(h.is_windowed_cycle(x));
    }
    // Hom⁰ is spanned by the empty word, whose differential is xy⁻¹ − 1
    let pre = h.boundary_witness(&difference.scale(&int(-1))).unwrap();
    assert_eq!(pre, CobarElement::one(2));
    assert!(h.boundary_witness(&class).is_none());
    assert_eq!(h.boundary_rank, 1);
    assert!(h.dimension >= 1);
    assert!(h.leak.is_none() || h.ensure_closed().is_err());
}

#[test]
fn leaky_windows_are_reported() {
    let ut = UpperTriangularHopf;
    let one = MaurerCartanElement::unit_object(&ut, 2);
    let h = hom_cohomology(&ut, &ext_window(&one, &one, 1)).unwrap();
    // Δ(z²) contains x²⊗z², outside a window with Laurent bound 1
    let w = HomWindow { window: Window::new(1, 2), ..ext_window(&one, &one, 1) };
    let tight = hom_cohomology(&ut, &w).unwrap();
    assert!(tight.leak.is_some());
    assert!(matches!(tight.ensure_closed(), Err(HolimError::WindowNotClosed(_))));
    assert!(h.chain_dimension > tight.chain_dimension);
}
