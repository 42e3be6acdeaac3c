use super::indexed::{check_compose, check_hom_diff};
use super::*;
use crate::graded::*;
use crate::linear::{int, SparseVector};
use crate::random::{self, GradedBasis};

fn t<L: Ord + Clone>(terms: &[(&[L], i64)]) -> Tensor<L> {
    terms.iter().map(|(w, c)| (w.to_vec(), int(*c))).collect()
}

const Z: Monomial = Monomial::new(0, 0, 1);
const X: Monomial = Monomial::new(1, 0, 0);
const Y: Monomial = Monomial::new(0, 1, 0);
const ONE: Monomial = Monomial::ONE;

#[test]
fn differential_of_a_generator_is_minus_the_coproduct() {
    let ut = UpperTriangularHopf;
    let dz = cobar_diff(&ut, &CobarElement::generator(Z, 3));
    assert_eq!(dz.terms(), &t(&[(&[X, Z], -1), (&[Z, Y], -1)]));

    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let (e0, e1) = (GroupElement(0), GroupElement(1));
    let d = cobar_diff(&z2, &CobarElement::generator(e0, 3));
    assert_eq!(d.terms(), &t(&[(&[e0, e0], -1), (&[e1, e1], -1)]));
}

#[test]
fn differential_respects_truncation() {
    let ut = UpperTriangularHopf;
    assert!(cobar_diff(&ut, &CobarElement::generator(Z, 1)).is_zero());
}

#[test]
fn coaugmented_differential() {
    let ut = UpperTriangularHopf;
    assert!(cobar_coaug_diff(&ut, &CobarElement::one(4)).is_zero());
    let d = cobar_coaug_diff(&ut, &CobarElement::generator(Z, 4));
    assert_eq!(d.terms(), &t(&[(&[X, Z], -1), (&[Z, Y], -1), (&[ONE, Z], 1), (&[Z, ONE], 1)]));
}

#[test]
fn product_basics() {
    let z = CobarElement::generator(Z, 3);
    assert_eq!(cobar_mul(&CobarElement::one(3), &z).unwrap(), z);
    assert_eq!(cobar_mul(&z, &z).unwrap().terms(), &t(&[(&[Z, Z], 1)]));
    assert_eq!(
        cobar_mul(&z, &CobarElement::generator(Z, 4)).unwrap_err(),
        CobarError::TruncationMismatch(3, 4)
    );
}

fn random_setup<B: Bialgebra>(alg: &B, window: Window) -> (GradedBasis<B::Label>, Vec<Element<B::Label>>) {
    (GradedBasis::new(alg, &window), random::grouplikes(alg, &window))
}

fn degrees_for(basis: &GradedBasis<impl Clone + Ord>) -> Vec<i64> {
    let lo = basis.degrees().min().unwrap();
    let hi = basis.degrees().max().unwrap();
    (lo - 1..=hi + 3).collect()
}

fn square_zero<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, _) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let degrees = degrees_for(&basis);
    let mut nonzero = 0;
    for i in 0..100 {
        let deg = degrees[i % degrees.len()];
        let x = random::homogeneous(&basis, &mut rng, deg, 5, 5, 3);
        let dx = cobar_diff(alg, &x);
        nonzero += usize::from(!dx.is_zero());
        assert!(cobar_diff(alg, &dx).is_zero(), "{}: d² ≠ 0 on {x}", alg.name());
        assert!(cobar_coaug_diff(alg, &cobar_coaug_diff(alg, &x)).is_zero(), "{}: coaug d² on {x}", alg.name());
        // the truncation is a quotient: reducing after differentiating agrees
        let bigger = CobarElement::new(x.terms().clone(), 6);
        assert_eq!(cobar_diff(alg, &bigger).retruncate(5), dx);
    }
    assert!(nonzero > 20, "{}: too few nontrivial inputs", alg.name());
}

#[test]
fn cobar_differentials_square_to_zero() {
    square_zero(&UpperTriangularHopf, Window::new(1, 2), 1);
    square_zero(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 2);
    square_zero(&FiniteGroupFunctionHopf::symmetric3(), Window::default(), 3);
    square_zero(&ExteriorPrimitiveHopf, Window::default(), 4);
    square_zero(&DgSweedlerHopf, Window::default(), 5);
}

fn leibniz<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, _) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let degrees = degrees_for(&basis);
    for i in 0..100 {
        let p = degrees[i % degrees.len()];
        let q = degrees[(i / degrees.len()) % degrees.len()];
        let x = random::homogeneous(&basis, &mut rng, p, 3, 5, 2);
        let y = random::homogeneous(&basis, &mut rng, q, 3, 5, 2);
        let sign = Sign::pow(p).to_rational();
        for d in [cobar_diff::<B>, cobar_coaug_diff::<B>] {
            let lhs = d(alg, &cobar_mul(&x, &y).unwrap());
            let rhs = &cobar_mul(&d(alg, &x), &y).unwrap() + &cobar_mul(&x, &d(alg, &y)).unwrap().scale(&sign);
            assert_eq!(lhs, rhs, "{}: Leibniz on {x} and {y}", alg.name());
        }
    }
}

#[test]
fn differentials_are_derivations() {
    leibniz(&UpperTriangularHopf, Window::new(1, 1), 11);
    leibniz(&FiniteGroupFunctionHopf::cyclic(3), Window::default(), 12);
    leibniz(&ExteriorPrimitiveHopf, Window::default(), 13);
    leibniz(&DgSweedlerHopf, Window::default(), 14);
}

#[test]
fn maurer_cartan_examples() {
    let ut = UpperTriangularHopf;
    let g = SparseVector::basis(Monomial::new(1, -1, 0));
    let r = mc_check(&ut, &CobarElement::from_element(&g, 4));
    assert!(r.is_mc());
    assert!(r.indexed.agrees());
    assert!(mc_check(&ut, MaurerCartanElement::unit_object(&ut, 4).element()).is_mc());

    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let (e0, e1) = (GroupElement(0), GroupElement(1));
    let unit = MaurerCartanElement::unit_object(&z2, 4);
    assert_eq!(unit.first_component(), FirstComponent::Grouplike);
    let report = mc_check(&z2, &CobarElement::generator(e0, 4));
    assert!(!report.is_mc());
    let (w, residual) = report.first_nonzero().unwrap();
    assert_eq!(w, 2);
    assert_eq!(residual, &t(&[(&[e1, e1], -1)]));
    assert!(report.indexed.agrees(), "{:?}", report.indexed);
    assert!(MaurerCartanElement::from_grouplike(&z2, &SparseVector::basis(e0), 4).is_err());
    let sign: Element<GroupElement> = [(e0, int(1)), (e1, int(-1))].into_iter().collect();
    assert!(MaurerCartanElement::from_grouplike(&z2, &sign, 4).is_ok());
}

#[test]
fn nontrivial_higher_components_exist() {
    let s = DgSweedlerHopf;
    let (basis, groups) = random_setup(&s, Window::default());
    let mut rng = random::rng(7);
    let found = (0..20).any(|_| {
        let a = random::maurer_cartan(&s, &basis, &groups, &mut rng, 4);
        !a.component(2).is_zero() && !a.component(3).is_zero()
    });
    assert!(found);
}

fn indexed_routes_agree<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, groups) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let degrees = degrees_for(&basis);
    for i in 0..40 {
        // random elements that are not Maurer-Cartan exercise every term
        let x = random::homogeneous(&basis, &mut rng, 1, 4, 4, 4);
        let report = mc_check(alg, &x);
        assert!(report.indexed.agrees(), "{}: {:?}", alg.name(), report.indexed);

        let a = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let b = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let m = degrees[i % degrees.len()];
        let f = random::homogeneous(&basis, &mut rng, m, 4, 4, 4);
        let df = twisted_diff(alg, &f, &b, &a).unwrap();
        let check = check_hom_diff(alg, &f, a.element(), b.element(), &df);
        assert!(check.agrees(), "{}: {:?}", alg.name(), check);
        // raw twists that are not Maurer-Cartan also satisfy the identity
        let check = check_hom_diff(alg, &f, &x, &x, &twisted_diff_raw(alg, &f, &x, &x).unwrap());
        assert!(check.agrees(), "{}: {:?}", alg.name(), check);

        let g = random::homogeneous(&basis, &mut rng, degrees[(i + 1) % degrees.len()], 4, 4, 4);
        let gf = cobar_mul(&g, &f).unwrap();
        let check = check_compose(alg, &g, &f, &gf);
        assert!(check.agrees(), "{}: {:?}", alg.name(), check);
    }
}

#[test]
fn componentwise_formulas_agree() {
    indexed_routes_agree(&UpperTriangularHopf, Window::new(1, 1), 21);
    indexed_routes_agree(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 22);
    indexed_routes_agree(&ExteriorPrimitiveHopf, Window::default(), 23);
    indexed_routes_agree(&DgSweedlerHopf, Window::default(), 24);
}

fn twisting<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, groups) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let zero = MaurerCartanElement::zero(4);
    let unit = MaurerCartanElement::unit_object(alg, 4);
    let degrees = degrees_for(&basis);
    for i in 0..100 {
        let x = random::homogeneous(&basis, &mut rng, degrees[i % degrees.len()], 4, 4, 3);
        assert_eq!(twisted_diff(alg, &x, &zero, &zero).unwrap(), cobar_diff(alg, &x));
        assert_eq!(twisted_diff(alg, &x, &unit, &unit).unwrap(), cobar_coaug_diff(alg, &x));
        let a = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let b = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let dx = twisted_diff(alg, &x, &a, &b).unwrap();
        assert!(twisted_diff(alg, &dx, &a, &b).unwrap().is_zero(), "{}: twisted d² on {x}", alg.name());
    }
}

#[test]
fn twisted_differentials_square_to_zero() {
    twisting(&UpperTriangularHopf, Window::new(1, 1), 31);
    twisting(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 32);
    twisting(&ExteriorPrimitiveHopf, Window::default(), 33);
    twisting(&DgSweedlerHopf, Window::default(), 34);
}

fn gauge<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, groups) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let n = 4;
    for _ in 0..100 {
        let a = random::maurer_cartan(alg, &basis, &groups, &mut rng, n);
        assert_eq!(gauge_act(alg, &CobarElement::one(n), &a).unwrap(), a);
        let f = random::gauge_element(&basis, &mut rng, n);
        let g = random::gauge_element(&basis, &mut rng, n);
        let fa = gauge_act(alg, &f, &a).unwrap();
        assert!(mc_check(alg, fa.element()).is_mc());
        let fg = cobar_mul(&f, &g).unwrap();
        assert_eq!(gauge_act(alg, &fg, &a).unwrap(), gauge_act(alg, &f, &gauge_act(alg, &g, &a).unwrap()).unwrap());
        let pure = gauge_act(alg, &f, &MaurerCartanElement::zero(n)).unwrap();
        assert!(mc_check(alg, pure.element()).is_mc());
        let w = gauge_isomorphism_witness(alg, &f, &a).unwrap();
        assert!(w.certified(), "{}: witness for {f}", alg.name());
        assert_eq!(w.target, fa);
    }
}

#[test]
fn gauge_action() {
    gauge(&UpperTriangularHopf, Window::new(1, 1), 41);
    gauge(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 42);
    gauge(&ExteriorPrimitiveHopf, Window::default(), 43);
    gauge(&DgSweedlerHopf, Window::default(), 44);
}

#[test]
fn gauge_rejects_non_invertible() {
    let s = DgSweedlerHopf;
    let a = MaurerCartanElement::unit_object(&s, 3);
    let f = CobarElement::new(t(&[(&[SweedlerBasis::TH], 1)]), 3);
    assert_eq!(gauge_act(&s, &f, &a).unwrap_err(), CobarError::NotInvertible);
    assert_eq!(inverse(&CobarElement::<SweedlerBasis>::zero(3)).unwrap_err(), CobarError::NotInvertible);
}

#[test]
fn sweedler_gauge_example() {
    // f = 1 + 1/2·[θ] is a non-scalar gauge transformation of 𝕀
    let s = DgSweedlerHopf;
    let a = MaurerCartanElement::unit_object(&s, 4);
    let f = &CobarElement::one(4) + &CobarElement::generator(SweedlerBasis::TH, 4).scale(&crate::linear::rat(1, 2));
    let w = gauge_isomorphism_witness(&s, &f, &a).unwrap();
    assert!(w.certified());
    assert_ne!(w.target, a);
    assert_eq!(cobar_mul(&w.morphism, &w.inverse).unwrap(), CobarElement::one(4));
}

fn cdg<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, groups) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let degrees = degrees_for(&basis);
    let samples: Vec<_> =
        (0..20).map(|i| random::homogeneous(&basis, &mut rng, degrees[i % degrees.len()], 3, 4, 3)).collect();
    let unit = MaurerCartanElement::unit_object(alg, 4);
    let zero = MaurerCartanElement::zero(4);
    let id = CdgMorphism::canonical(&unit, &unit);
    assert!(id.change.is_zero());
    assert!(cdg_morphism_check(alg, &id, &samples).unwrap().passed());
    let to_zero = CdgMorphism::canonical(&zero, &unit);
    assert_eq!(to_zero.change, unit.element().scale(&int(-1)));
    assert!(cdg_morphism_check(alg, &to_zero, &samples).unwrap().passed());
    let wrong = CdgMorphism { change: unit.element().clone(), ..to_zero.clone() };
    assert!(!cdg_morphism_check(alg, &wrong, &samples).unwrap().passed());
    for _ in 0..20 {
        let a = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let b = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let c = random::maurer_cartan(alg, &basis, &groups, &mut rng, 4);
        let ab = CdgMorphism::canonical(&a, &b);
        let bc = CdgMorphism::canonical(&b, &c);
        assert!(cdg_morphism_check(alg, &ab, &samples).unwrap().passed());
        let ac = cdg_compose(&bc, &ab).unwrap();
        assert!(cdg_morphism_check(alg, &ac, &samples).unwrap().passed());
        assert_eq!(ac.change, CdgMorphism::canonical(&a, &c).change);
    }
}

#[test]
fn cdg_morphisms() {
    cdg(&UpperTriangularHopf, Window::new(1, 1), 51);
    cdg(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 52);
    cdg(&ExteriorPrimitiveHopf, Window::default(), 53);
    cdg(&DgSweedlerHopf, Window::default(), 54);
}

/// `h[a₁|…|aₙ] = −ε(a₁)[a₂|…|aₙ]`, a contraction of the positive-weight part.
fn contraction<B: Bialgebra>(alg: &B, x: &CobarElement<B::Label>) -> CobarElement<B::Label> {
    let mut out = SparseVector::zero();
    for (w, c) in x.terms().iter() {
        if let Some((first, rest)) = w.split_first() {
            out.add_term(rest.to_vec(), -(alg.counit(first) * c));
        }
    }
    CobarElement::new(out, x.truncation())
}

fn acyclic<B: Bialgebra>(alg: &B, window: Window, seed: u64) {
    let (basis, _) = random_setup(alg, window);
    let mut rng = random::rng(seed);
    let degrees = degrees_for(&basis);
    for i in 0..100 {
        let weight = 1 + i % 4;
        let x = random::homogeneous(&basis, &mut rng, degrees[i % degrees.len()], weight, 5, 3);
        let x = CobarElement::new(x.terms().filter(|w| !w.is_empty()), 5);
        let dh = cobar_diff(alg, &contraction(alg, &x));
        let hd = contraction(alg, &cobar_diff(alg, &x));
        assert_eq!(&dh + &hd, x, "{}: contraction fails on {x}", alg.name());
    }
}

#[test]
fn counit_contracts_positive_weights() {
    acyclic(&UpperTriangularHopf, Window::new(1, 1), 61);
    acyclic(&FiniteGroupFunctionHopf::symmetric3(), Window::default(), 62);
    acyclic(&ExteriorPrimitiveHopf, Window::default(), 63);
    acyclic(&DgSweedlerHopf, Window::default(), 64);
}
