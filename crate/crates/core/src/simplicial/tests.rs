use super::*;
use crate::cobar::{cobar_coaug_diff, CobarElement};
use crate::graded::*;
use crate::linear::{int, SparseVector};
use crate::random::{self, GradedBasis, TestRng};

fn chain(v: &[usize]) -> Chain {
    Chain::new(v.to_vec()).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn chains_and_small_levels() {
    assert!(Chain::new(vec![]).is_err());
    assert!(Chain::new(vec![1, 1]).is_err());
    assert!(Chain::new(vec![2, 1]).is_err());
    assert_eq!(chain(&[0, 2]).degree(), -1);
    for n in 0..=5 {
        let l = LComplex::new(n);
        assert_eq!(l.basis().len(), (1 << (n + 1)) - 1);
        assert_eq!(l.dim(), l.basis().len());
    }
    let l1 = LComplex::new(1);
    assert_eq!(l1.differential(&chain(&[0, 1])), &SparseVector::basis(chain(&[1])) - &SparseVector::basis(chain(&[0])));
    assert!(l1.differential(&chain(&[0])).is_zero());
    assert_eq!(l1.comultiplication(&chain(&[0])), SparseVector::basis((chain(&[0]), chain(&[0]))));
    let expected: ChainTensor =
        &SparseVector::basis((chain(&[0]), chain(&[0, 1]))) + &SparseVector::basis((chain(&[0, 1]), chain(&[1])));
    assert_eq!(l1.comultiplication(&chain(&[0, 1])), expected);
}

#[test]
fn l_complexes_up_to_five() {
    for n in 0..=5 {
        let report = LComplex::new(n).check();
        assert!(report.passed(), "{report:?}");
    }
}

#[test]
fn monotone_maps_act_naturally() {
    let report = check_naturality(4);
    assert!(report.passed(), "{report:?}");
    assert!(report.composites > 10_000);
}

#[test]
fn cosimplicial_map_examples() {
    let f01: ChainVector = SparseVector::basis(chain(&[0, 1]));
    assert_eq!(l_cosimplicial_map(&[0, 1], 1, &f01).unwrap(), f01);
    assert!(l_cosimplicial_map(&[0, 0], 0, &f01).unwrap().is_zero());
    let f0: ChainVector = SparseVector::basis(chain(&[0]));
    assert_eq!(l_cosimplicial_map(&[0], 1, &f0).unwrap(), f0);
    assert_eq!(l_cosimplicial_map(&[1], 1, &f0).unwrap(), SparseVector::basis(chain(&[1])));
    assert!(matches!(l_cosimplicial_map(&[1, 0], 1, &f01), Err(SimplicialError::NotMonotone { .. })));
    assert!(matches!(l_cosimplicial_map(&[0, 2], 1, &f01), Err(SimplicialError::NotMonotone { .. })));
    assert_eq!(MonotoneMap::coface(2, 1).values(), &[0, 2]);
    assert_eq!(MonotoneMap::codegeneracy(1, 0).values(), &[0, 0, 1]);
    assert!(MonotoneMap::identity(2).after(&MonotoneMap::identity(1)).is_err());
}

#[test]
fn moore_complex_of_standard_simplices() {
    let point = moore_complex(&StandardSimplex::new(0, 4), 2).unwrap();
    assert_eq!(point.dims(), vec![1, 0, 0]);
    for n in 0..=4 {
        let cap = n + 1;
        let x = StandardSimplex::new(n, cap + 2);
        let moore = moore_complex(&x, cap).unwrap();
        assert!(moore.d_squared_is_zero());
        let expected: Vec<usize> = (0..=cap).map(|k| if k <= n { binomial(n + 1, k + 1) } else { 0 }).collect();
        assert_eq!(moore.dims(), expected, "kΔ[{n}]");
        assert_eq!(moore.dims().iter().sum::<usize>(), (1 << (n + 1)) - 1);
        // the quotient basis is the nondegenerate simplices and d is the one of Lⁿ
        let l = LComplex::new(n);
        for q in 1..=n {
            for (i, &rep) in moore.levels[q].representatives.iter().enumerate() {
                let c = chain(x.simplex(q, rep));
                let image = moore.differentials[q][i]
                    .map_keys(|&j| chain(x.simplex(q - 1, moore.levels[q - 1].representatives[j])));
                assert_eq!(image, l.differential(&c));
            }
        }
    }
}

struct BrokenSimplex(StandardSimplex);

impl SimplicialSpace for BrokenSimplex {
    fn dim(&self, q: usize) -> usize {
        self.0.dim(q)
    }
    fn face(&self, q: usize, i: usize, j: usize) -> SparseVector<usize> {
        // swaps the two outer faces
        let i = if i == 0 { q } else if i == q { 0 } else { i };
        self.0.face(q, i, j)
    }
    fn degeneracy(&self, q: usize, i: usize, j: usize) -> SparseVector<usize> {
        self.0.degeneracy(q, i, j)
    }
}

#[test]
fn broken_faces_are_rejected() {
    let err = moore_complex(&BrokenSimplex(StandardSimplex::new(1, 4)), 2).unwrap_err();
    assert!(matches!(err, SimplicialError::SimplicialIdentity { .. }), "{err}");
}

fn elementary_maps<B: Bialgebra>(alg: &B, n: usize) -> Vec<ConvolutionElement<B::Label>> {
    let labels = alg.basis(&Window::default());
    LComplex::new(n)
        .basis()
        .into_iter()
        .flat_map(|c| labels.iter().map(move |l| (c.clone(), l.clone())))
        .map(|(c, l)| ConvolutionElement::new(n, SparseVector::basis((c, l))).unwrap())
        .collect()
}

fn degree_of<B: Bialgebra>(alg: &B, u: &ConvolutionElement<B::Label>) -> i64 {
    let (c, l) = u.terms().keys().next().unwrap();
    term_degree(alg, c, l)
}

/// `μ (u⊗v) Δ` evaluated chain by chain, as an independent route.
fn product_via_delta<B: Bialgebra>(
    alg: &B,
    u: &ConvolutionElement<B::Label>,
    v: &ConvolutionElement<B::Label>,
) -> ConvolutionElement<B::Label> {
    let n = u.level();
    let l = LComplex::new(n);
    let mut terms = SparseVector::zero();
    for c in l.basis() {
        for ((x, y), e) in l.comultiplication(&c).iter() {
            for (a, f) in u.value(x).iter() {
                for (b, g) in v.value(y).iter() {
                    let sign = Sign::koszul(alg.degree(b) + y.length() as i64, x.degree());
                    for (ab, h) in alg.product(a, b).iter() {
                        terms.add_term((c.clone(), ab.clone()), sign.apply(&(e * f * g * h)));
                    }
                }
            }
        }
    }
    ConvolutionElement::new(n, terms).unwrap()
}

fn convolution_laws<B: Bialgebra>(alg: &B, max_level: usize, exhaustive_triples: bool, rng: &mut TestRng) {
    for n in 0..=max_level {
        let maps = elementary_maps(alg, n);
        let unit = convolution_unit(alg, n);
        let mul = |u: &ConvolutionElement<B::Label>, v: &ConvolutionElement<B::Label>| convolution_product(alg, u, v).unwrap();
        for u in &maps {
            assert_eq!(&mul(&unit, u), u);
            assert_eq!(&mul(u, &unit), u);
            assert!(convolution_diff(alg, &convolution_diff(alg, u)).is_zero());
            for v in &maps {
                let uv = mul(u, v);
                assert_eq!(uv, product_via_delta(alg, u, v));
                let lhs = convolution_diff(alg, &uv);
                let sign = Sign::pow(degree_of(alg, u)).to_rational();
                let rhs = mul(&convolution_diff(alg, u), v).checked_add(&mul(u, &convolution_diff(alg, v)).scale(&sign));
                assert_eq!(lhs, rhs.unwrap(), "Leibniz at level {n}");
            }
        }
        let triples: Vec<[usize; 3]> = if exhaustive_triples {
            let k = maps.len();
            (0..k * k * k).map(|t| [t / (k * k), (t / k) % k, t % k]).collect()
        } else {
            use rand::Rng;
            (0..300).map(|_| [0; 3].map(|_| rng.gen_range(0..maps.len()))).collect()
        };
        for [a, b, c] in triples {
            let (u, v, w) = (&maps[a], &maps[b], &maps[c]);
            assert_eq!(mul(&mul(u, v), w), mul(u, &mul(v, w)));
        }
    }
    assert_eq!(
        convolution_product(alg, &ConvolutionElement::zero(1), &ConvolutionElement::zero(2)),
        Err(SimplicialError::LevelMismatch(1, 2))
    );
}

#[test]
fn convolution_algebras_of_finite_builtins() {
    let mut rng = random::rng(11);
    convolution_laws(&FiniteGroupFunctionHopf::cyclic(2), 3, true, &mut rng);
    convolution_laws(&ExteriorPrimitiveHopf, 3, true, &mut rng);
    convolution_laws(&DgSweedlerHopf, 3, false, &mut rng);
    convolution_laws(&FiniteGroupFunctionHopf::symmetric3(), 2, false, &mut rng);
}

#[test]
fn resolution_map_is_a_multiplicative_quasi_isomorphism() {
    for n in 0..=3 {
        for report in [
            resolution_map_checks(&FiniteGroupFunctionHopf::cyclic(2), n, &Window::default()),
            resolution_map_checks(&ExteriorPrimitiveHopf, n, &Window::default()),
            resolution_map_checks(&DgSweedlerHopf, n, &Window::default()),
        ] {
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.quasi_isomorphism(), Some(true));
        }
    }
    let s3 = resolution_map_checks(&FiniteGroupFunctionHopf::symmetric3(), 2, &Window::default());
    assert_eq!(s3.quasi_isomorphism(), Some(true));
    let ut = resolution_map_checks(&UpperTriangularHopf, 2, &Window::new(1, 1));
    assert!(ut.chain_map && ut.multiplicative && ut.cosimplicial);
    assert_eq!(ut.cone_homology, None);
}

#[test]
fn resolution_examples() {
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let labels = z2.basis(&Window::default());
    let a: Element<_> = SparseVector::basis(labels[0].clone());
    let b: Element<_> = SparseVector::basis(labels[1].clone());
    let ra = resolution_map(2, &a);
    assert_eq!(ra.value(&chain(&[1])), a);
    assert!(ra.value(&chain(&[0, 1])).is_zero());
    assert_eq!(
        convolution_product(&z2, &ra, &resolution_map(2, &b)).unwrap(),
        resolution_map(2, &mul_elements(&z2, &a, &b))
    );
}

#[test]
fn homotopy_contracts_onto_constants() {
    fn run<B: Bialgebra>(alg: &B, rng: &mut TestRng) {
        use rand::Rng;
        let window = Window::default();
        let degrees: Vec<i64> = (-3..=3).filter(|&d| !closed_basis(alg, 2, d, &window).is_empty()).collect();
        for _ in 0..20 {
            let d = degrees[rng.gen_range(0..degrees.len())];
            let closed = closed_basis(alg, 2, d, &window);
            let mut s = ConvolutionElement::zero(2);
            for u in &closed {
                s = s.checked_add(&u.scale(&random::coefficient(rng))).unwrap();
            }
            assert!(convolution_diff(alg, &s).is_zero());
            assert!(homotopy_residual(alg, &s).is_zero(), "s = {:?}", s.terms());
        }
    }
    let mut rng = random::rng(12);
    run(&FiniteGroupFunctionHopf::cyclic(2), &mut rng);
    run(&ExteriorPrimitiveHopf, &mut rng);
    run(&DgSweedlerHopf, &mut rng);
}

#[test]
fn pullbacks_are_multiplicative_and_functorial() {
    let alg = DgSweedlerHopf;
    let maps = elementary_maps(&alg, 2);
    for m in 0..=2 {
        for phi in MonotoneMap::all(m, 2) {
            for u in &maps {
                assert_eq!(
                    pullback(&phi, &convolution_diff(&alg, u)).unwrap(),
                    convolution_diff(&alg, &pullback(&phi, u).unwrap())
                );
                for v in maps.iter().step_by(5) {
                    let lhs = pullback(&phi, &convolution_product(&alg, u, v).unwrap()).unwrap();
                    let rhs = convolution_product(&alg, &pullback(&phi, u).unwrap(), &pullback(&phi, v).unwrap());
                    assert_eq!(lhs, rhs.unwrap());
                }
            }
            for p in 0..=m {
                for psi in MonotoneMap::all(p, m) {
                    let composite = phi.after(&psi).unwrap();
                    for u in &maps {
                        let twice = pullback(&psi, &pullback(&phi, u).unwrap()).unwrap();
                        assert_eq!(pullback(&composite, u).unwrap(), twice);
                    }
                }
            }
        }
    }
    assert!(pullback(&MonotoneMap::identity(1), &maps[0]).is_err());
}

#[test]
fn matching_maps_are_surjective() {
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let zero = matching_map_check(&z2, 0, &Window::default());
    assert!(zero.passed());
    assert_eq!(zero.codomain_dim, 0);
    let one = matching_map_check(&z2, 1, &Window::default());
    assert!(one.passed());
    assert_eq!(one.corank(), 0);
    assert_eq!(one.codomain_dim, 2 * 2);
    for n in 0..=5 {
        let r = matching_map_check(&z2, n, &Window::default());
        assert!(r.subcomplex && r.subcoalgebra && r.surjective(), "{r:?}");
    }
    for n in 0..=3 {
        assert!(matching_map_check(&ExteriorPrimitiveHopf, n, &Window::default()).passed());
        assert!(matching_map_check(&DgSweedlerHopf, n, &Window::default()).passed());
        assert!(matching_map_check(&FiniteGroupFunctionHopf::symmetric3(), n, &Window::default()).passed());
        assert!(matching_map_check(&UpperTriangularHopf, n, &Window::new(1, 1)).passed());
    }
}

fn random_totalization<B: Bialgebra>(
    basis: &GradedBasis<B::Label>,
    rng: &mut TestRng,
    truncation: usize,
    total: i64,
) -> TotalizationElement<B::Label> {
    let mut terms = SparseVector::zero();
    for n in 0..=truncation {
        if basis.reachable(n).contains(&(total - n as i64)) {
            terms += &random::tensor(basis, rng, n, total - n as i64, 2);
        }
    }
    TotalizationElement::new(terms, truncation)
}

fn totalization_laws<B: Bialgebra>(alg: &B, window: Window, truncation: usize, count: usize, seed: u64) {
    use rand::Rng;
    let basis = GradedBasis::new(alg, &window);
    let mut rng = random::rng(seed);
    let tot = fat_totalization(alg, truncation);
    let unit = tot.unit();
    for _ in 0..count {
        let degrees: Vec<i64> = [0i64; 3].map(|_| rng.gen_range(-2..=3)).to_vec();
        let [x, y, z] = [0, 1, 2].map(|i| random_totalization::<B>(&basis, &mut rng, truncation, degrees[i]));
        assert!(tot.diff(&tot.diff(&x)).is_zero(), "d² on {:?}", x.terms());
        assert_eq!(tot.mul(&unit, &x).unwrap(), x);
        assert_eq!(tot.mul(&x, &unit).unwrap(), x);
        let xy = tot.mul(&x, &y).unwrap();
        assert_eq!(tot.mul(&xy, &z).unwrap(), tot.mul(&x, &tot.mul(&y, &z).unwrap()).unwrap());
        let sign = Sign::pow(degrees[0]).to_rational();
        let mut rhs = tot.mul(&tot.diff(&x), &y).unwrap().terms().clone();
        rhs.add_scaled(tot.mul(&x, &tot.diff(&y)).unwrap().terms(), &sign);
        assert_eq!(tot.diff(&xy).terms(), &rhs, "Leibniz");
        assert_eq!(naturality_failures(alg, &x, truncation.min(3)), 0);
        // the product is a signed concatenation
        let mut concat_product = SparseVector::zero();
        for (u, c) in x.terms().iter() {
            for (v, d) in y.terms().iter() {
                if u.len() + v.len() <= truncation {
                    let s = Sign::koszul(total_degree(alg, v), u.len() as i64);
                    concat_product.add_term([u.clone(), v.clone()].concat(), s.apply(&(c * d)));
                }
            }
        }
        assert_eq!(xy.terms(), &concat_product);
        // the differential on the top chain is the Hom differential of the natural transformation
        for n in 1..=truncation {
            let top = Chain::full(n);
            let mut expected = tensor_differential(alg, &natural_component(alg, &x, n, &top));
            let l = LComplex::new(n);
            let hom_sign = -Sign::pow(degrees[0]);
            for (c, e) in l.differential(&top).iter() {
                expected.add_scaled(&natural_component(alg, &x, n, c), &hom_sign.apply(e));
            }
            assert_eq!(tot.diff(&x).component(n), expected);
        }
    }
}

#[test]
fn fat_totalization_is_a_dg_algebra() {
    totalization_laws(&FiniteGroupFunctionHopf::cyclic(2), Window::default(), 4, 20, 21);
    totalization_laws(&FiniteGroupFunctionHopf::symmetric3(), Window::default(), 4, 10, 22);
    totalization_laws(&ExteriorPrimitiveHopf, Window::default(), 4, 20, 23);
    totalization_laws(&DgSweedlerHopf, Window::default(), 4, 20, 24);
    totalization_laws(&UpperTriangularHopf, Window::new(1, 1), 4, 10, 25);
}

#[test]
fn fat_totalization_small_cases() {
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let tot = fat_totalization(&z2, 0);
    let scalar = tot.element(crate::graded::scalar(int(3)));
    assert!(tot.diff(&scalar).is_zero());
    assert_eq!(tot.mul(&scalar, &scalar).unwrap(), tot.element(crate::graded::scalar(int(9))));
    // a scalar in weight 0 is closed, as 1 is in the coaugmented Cobar construction
    let tot = fat_totalization(&z2, 3);
    let x0 = tot.element(crate::graded::scalar(int(2)));
    assert!(tot.diff(&x0).is_zero());
    assert!(cobar_coaug_diff(&z2, &CobarElement::scalar(int(2), 3)).is_zero());
    assert!(tot.mul(&x0, &fat_totalization(&z2, 2).unit()).is_err());
}

#[test]
fn unsigned_differential_needs_signs() {
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    let tot = fat_totalization(&z2, 3);
    let x0 = tot.element(crate::graded::scalar(int(1)));
    let once = tot.diff_unsigned(&x0);
    assert!(!once.is_zero());
    assert!(!tot.diff_unsigned(&once).is_zero());
}

#[test]
fn totalization_matches_coaugmented_cobar() {
    fn certify<B: Bialgebra>(alg: &B, window: Window, truncation: usize) -> IsomorphismCertificate {
        let cert = totalization_vs_cobar(alg, truncation, &window).unwrap_or_else(|e| panic!("{}: {e}", alg.name()));
        println!("{} N={truncation}: twist {}, signs {:?}", alg.name(), cert.twist, cert.signs);
        let expected: Vec<Sign> = (0..=truncation as i64).map(|n| Sign::pow(n * (n + 1) / 2)).collect();
        assert!(cert.solutions.contains(&expected));
        if truncation >= 2 {
            assert!(cert.unique());
            assert_eq!(cert.signs, expected);
        }
        cert
    }
    let z2 = FiniteGroupFunctionHopf::cyclic(2);
    for n in 0..=1 {
        // below weight 2 the identity already intertwines
        let cert = certify(&z2, Window::default(), n);
        assert!(cert.signs.iter().all(|s| *s == Sign::PLUS));
        assert_eq!(cert.twist, Twist::None);
    }
    assert_eq!(certify(&z2, Window::default(), 4).twist, Twist::None);
    assert_eq!(certify(&FiniteGroupFunctionHopf::symmetric3(), Window::default(), 4).twist, Twist::None);
    assert_eq!(certify(&UpperTriangularHopf, Window::new(1, 1), 3).twist, Twist::None);
    assert_eq!(certify(&ExteriorPrimitiveHopf, Window::default(), 4).twist, Twist::Positional);
    assert_eq!(certify(&DgSweedlerHopf, Window::default(), 4).twist, Twist::Positional);
}

#[test]
fn certificate_maps_products_and_differentials() {
    let alg = DgSweedlerHopf;
    let cert = totalization_vs_cobar(&alg, 3, &Window::default()).unwrap();
    let tot = fat_totalization(&alg, 3);
    let basis = GradedBasis::new(&alg, &Window::default());
    let mut rng = random::rng(31);
    for _ in 0..20 {
        let x = random_totalization::<DgSweedlerHopf>(&basis, &mut rng, 3, 1);
        let y = random_totalization::<DgSweedlerHopf>(&basis, &mut rng, 3, 0);
        assert_eq!(cert.apply(&alg, &tot.diff(&x)), cobar_coaug_diff(&alg, &cert.apply(&alg, &x)));
        let product = crate::cobar::cobar_mul(&cert.apply(&alg, &x), &cert.apply(&alg, &y)).unwrap();
        assert_eq!(cert.apply(&alg, &tot.mul(&x, &y).unwrap()), product);
    }
}
