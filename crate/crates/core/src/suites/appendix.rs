use rand::Rng;

use super::{Check, CheckResult, Context};
use crate::cobar::{cobar_coaug_diff, cobar_mul};
use crate::graded::{Bialgebra, Sign, Window};
use crate::linear::SparseVector;
use crate::random::{self, TestRng};
use crate::simplicial::{
    check_naturality, closed_basis, convolution_diff, convolution_product, convolution_unit, fat_totalization,
    homotopy_residual, matching_map_check, moore_complex, naturality_failures, pullback, resolution_map_checks,
    term_degree, total_degree, totalization_vs_cobar, verify_simplicial_identities, ConvolutionElement, LComplex,
    MonotoneMap, StandardSimplex, TotalizationElement,
};

/// Highest level of `Lⁿ` checked exhaustively.
const L_LEVELS: usize = 5;
/// Highest level of the convolution algebras and resolutions.
const CONVOLUTION_LEVELS: usize = 3;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn l_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut check = Check::new("appendix.l.complexes");
    for n in 0..=L_LEVELS {
        let r = LComplex::new(n).check();
        check.cases += r.dim;
        if !r.passed() && check.witness.is_none() {
            check.witness = Some(format!("{r:?}"));
        }
    }
    check.note(format!("d² = 0, coassociativity and Δ a chain map on every chain of Lⁿ for n ≤ {L_LEVELS}"));
    out.push(check.finish());

    let mut check = Check::new("appendix.l.naturality");
    let r = check_naturality(L_LEVELS - 1);
    check.case(r.passed(), || format!("{r:?}"));
    check.cases = r.maps + r.composites;
    check.note(format!("every monotone map between levels ≤ {}", L_LEVELS - 1));
    out.push(check.finish());

    let mut check = Check::new("appendix.l.moore");
    for n in 0..=3 {
        let cap = n;
        let x = StandardSimplex::new(n, cap + 2);
        if let Err(e) = verify_simplicial_identities(&x, cap) {
            check.case(false, || format!("Δ[{n}]: {e}"));
            continue;
        }
        let Some(m) = check.ok(moore_complex(&x, cap)) else { continue };
        let expected: Vec<usize> = (0..=cap).map(|k| binomial(n + 1, k + 1)).collect();
        check.case(m.dims() == expected, || format!("Δ[{n}]: normalized dimensions {:?}, expected {expected:?}", m.dims()));
        check.case(m.d_squared_is_zero(), || format!("Δ[{n}]: d² ≠ 0 on the normalized complex"));
    }
    check.note("normalized chains of Δ[n] match the chains of Lⁿ for n ≤ 3");
    out.push(check.finish());
    out
}

fn elementary_maps<B: Bialgebra>(alg: &B, n: usize) -> Vec<ConvolutionElement<B::Label>> {
    let labels = alg.basis(&Window::default());
    LComplex::new(n)
        .basis()
        .into_iter()
        .flat_map(|c| labels.iter().map(move |l| (c.clone(), l.clone())))
        .map(|(c, l)| ConvolutionElement::new(n, SparseVector::basis((c, l))).expect("chain of Lⁿ"))
        .collect()
}

fn degree_of<B: Bialgebra>(alg: &B, u: &ConvolutionElement<B::Label>) -> i64 {
    let (c, l) = u.terms().keys().next().expect("elementary");
    term_degree(alg, c, l)
}

/// `μ (u⊗v) Δ` evaluated chain by chain.
fn product_via_delta<B: Bialgebra>(
    alg: &B,
    u: &ConvolutionElement<B::Label>,
    v: &ConvolutionElement<B::Label>,
) -> ConvolutionElement<B::Label> {
    let l = LComplex::new(u.level());
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
    ConvolutionElement::new(u.level(), terms).expect("chains of Lⁿ")
}

fn convolution_checks<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let mut out = Vec::new();
    let levels = CONVOLUTION_LEVELS;

    let id = "appendix.convolution.laws";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for n in 0..=levels {
        let maps = elementary_maps(alg, n);
        let unit = convolution_unit(alg, n);
        let mul = |u: &ConvolutionElement<B::Label>, v: &ConvolutionElement<B::Label>| convolution_product(alg, u, v).expect("same level");
        for u in &maps {
            check.case(&mul(&unit, u) == u && &mul(u, &unit) == u, || format!("unit law at level {n} on {:?}", u.terms()));
            let ddu = convolution_diff(alg, &convolution_diff(alg, u));
            check.case(ddu.is_zero(), || format!("d² ≠ 0 at level {n} on {:?}", u.terms()));
        }
        for _ in 0..ctx.samples() {
            let [u, v, w] = [0; 3].map(|_| &maps[rng.gen_range(0..maps.len())]);
            let uv = mul(u, v);
            check.case(uv == product_via_delta(alg, u, v), || format!("product at level {n}: {:?} · {:?}", u.terms(), v.terms()));
            let sign = Sign::pow(degree_of(alg, u)).to_rational();
            let rhs = mul(&convolution_diff(alg, u), v).checked_add(&mul(u, &convolution_diff(alg, v)).scale(&sign));
            let lhs = convolution_diff(alg, &uv);
            check.case(rhs.as_ref() == Ok(&lhs), || format!("Leibniz at level {n}: {:?} · {:?}", u.terms(), v.terms()));
            check.case(mul(&uv, w) == mul(u, &mul(v, w)), || format!("associativity at level {n}"));
        }
    }
    check.note(format!("levels ≤ {levels}: unit and d² on every elementary map, products on sampled pairs and triples"));
    out.push(check.finish());

    let mut check = Check::new("appendix.resolution.quasi-isomorphism");
    for n in 0..=levels {
        let r = resolution_map_checks(alg, n, &ctx.params.window);
        check.case(r.passed() && r.quasi_isomorphism() == Some(true), || format!("{r:?}"));
    }
    check.note("r is a multiplicative chain map into the cosimplicial resolution with acyclic cone");
    out.push(check.finish());

    let id = "appendix.resolution.homotopy";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let level = 2;
    let closed: Vec<_> = (-3..=3)
        .map(|d| closed_basis(alg, level, d, &ctx.params.window))
        .filter(|b| !b.is_empty())
        .collect();
    for _ in 0..ctx.samples() {
        let basis = &closed[rng.gen_range(0..closed.len())];
        let mut s = ConvolutionElement::zero(level);
        for u in basis {
            s = s.checked_add(&u.scale(&random::coefficient(&mut rng))).expect("same level");
        }
        let r = homotopy_residual(alg, &s);
        check.case(r.is_zero(), || format!("s = {:?}: r(s(f₀)) − s − dt = {:?}", s.terms(), r.terms()));
    }
    out.push(check.finish());

    let id = "appendix.resolution.pullbacks";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let maps = elementary_maps(alg, 2);
    for m in 0..=2 {
        for phi in MonotoneMap::all(m, 2) {
            for _ in 0..ctx.samples().div_ceil(10) {
                let (u, v) = (&maps[rng.gen_range(0..maps.len())], &maps[rng.gen_range(0..maps.len())]);
                let du = pullback(&phi, &convolution_diff(alg, u)).expect("level");
                let pu = pullback(&phi, u).expect("level");
                check.case(du == convolution_diff(alg, &pu), || format!("{phi:?}^* does not commute with d"));
                let lhs = pullback(&phi, &convolution_product(alg, u, v).expect("level")).expect("level");
                let rhs = convolution_product(alg, &pu, &pullback(&phi, v).expect("level")).expect("level");
                check.case(lhs == rhs, || format!("{phi:?}^* is not multiplicative"));
                for psi in MonotoneMap::all(m.saturating_sub(1), m) {
                    let composite = phi.after(&psi).expect("composable");
                    let twice = pullback(&psi, &pu).expect("level");
                    check.case(pullback(&composite, u).ok() == Some(twice), || format!("functoriality of {phi:?} after {psi:?}"));
                }
            }
        }
    }
    out.push(check.finish());
    out
}

fn random_totalization<B: Bialgebra>(ctx: &Context<B>, rng: &mut TestRng, truncation: usize, total: i64) -> TotalizationElement<B::Label> {
    let mut terms = SparseVector::zero();
    for n in 0..=truncation {
        if ctx.basis.reachable(n).contains(&(total - n as i64)) {
            terms += &random::tensor(&ctx.basis, rng, n, total - n as i64, 2);
        }
    }
    TotalizationElement::new(terms, truncation)
}

fn totalization_checks<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let n = ctx.n();
    let tot = fat_totalization(alg, n);
    let mut out = Vec::new();

    let id = "appendix.totalization.square-zero";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let mut count = 0;
    for i in 0..ctx.samples() {
        let x = random_totalization(ctx, &mut rng, n, ctx.degree(i));
        let dx = tot.diff(&x);
        count += usize::from(!dx.is_zero());
        let ddx = tot.diff(&dx);
        check.case(ddx.is_zero(), || format!("d² ≠ 0 on {:?}", x.terms()));
    }
    check.note(format!("nonzero first differential on {count} of {} inputs", ctx.samples()));
    out.push(check.finish());

    let id = "appendix.totalization.algebra";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let unit = tot.unit();
    for _ in 0..ctx.samples() {
        let degrees = [0; 3].map(|_| rng.gen_range(-2..=3i64));
        let [x, y, z] = degrees.map(|d| random_totalization(ctx, &mut rng, n, d));
        let mul = |a: &TotalizationElement<B::Label>, b: &TotalizationElement<B::Label>| tot.mul(a, b).expect("same truncation");
        check.case(mul(&unit, &x) == x && mul(&x, &unit) == x, || format!("unit law on {:?}", x.terms()));
        let xy = mul(&x, &y);
        check.case(mul(&xy, &z) == mul(&x, &mul(&y, &z)), || format!("associativity on {:?}", x.terms()));
        let mut rhs = mul(&tot.diff(&x), &y).terms().clone();
        rhs.add_scaled(mul(&x, &tot.diff(&y)).terms(), &Sign::pow(degrees[0]).to_rational());
        check.case(tot.diff(&xy).terms() == &rhs, || format!("Leibniz on {:?} · {:?}", x.terms(), y.terms()));
        let failures = naturality_failures(alg, &x, n.min(3));
        check.case(failures == 0, || format!("{failures} naturality failures on {:?}", x.terms()));
    }
    out.push(check.finish());

    let level = n.min(4);
    let id = "appendix.totalization.certificate";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    if let Some(cert) = check.ok(totalization_vs_cobar(alg, level, &ctx.params.window)) {
        check.cases = cert.words_checked + cert.products_checked;
        check.case(level < 2 || cert.unique(), || format!("{} sign normalizations found", cert.solutions.len()));
        let small = fat_totalization(alg, level);
        for _ in 0..ctx.samples() {
            let (p, q) = (rng.gen_range(-1..=2), rng.gen_range(-1..=2));
            let x = random_totalization(ctx, &mut rng, level, p);
            let y = random_totalization(ctx, &mut rng, level, q);
            let dx = cert.apply(alg, &small.diff(&x));
            check.case(dx == cobar_coaug_diff(alg, &cert.apply(alg, &x)), || format!("differential not intertwined on {:?}", x.terms()));
            let product = cobar_mul(&cert.apply(alg, &x), &cert.apply(alg, &y)).expect("same truncation");
            let image = cert.apply(alg, &small.mul(&x, &y).expect("same truncation"));
            check.case(image == product, || format!("product not intertwined on {:?}", x.terms()));
        }
        let signs: String = cert.signs.iter().map(|s| if *s == Sign::PLUS { '+' } else { '-' }).collect();
        check.note(format!("N = {level}: twist {}, weight signs {signs}{}", cert.twist, if cert.unique() { ", unique" } else { "" }));
    }
    out.push(check.finish());

    let id = "appendix.totalization.degrees";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let d = ctx.degree(i);
        let x = random_totalization(ctx, &mut rng, n, d);
        check.case(x.terms().keys().all(|w| total_degree(alg, w) == d), || format!("{:?} is not of degree {d}", x.terms()));
        let dx = tot.diff(&x);
        check.case(dx.terms().keys().all(|w| total_degree(alg, w) == d + 1), || format!("d does not raise degree on {:?}", x.terms()));
    }
    out.push(check.finish());
    out
}

pub(super) fn appendix<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let mut out = l_checks();
    let alg = ctx.alg;
    if alg.is_finite_dimensional() {
        out.extend(convolution_checks(ctx));
    } else {
        let reason = "needs a finite-dimensional algebra";
        for id in [
            "appendix.convolution.laws",
            "appendix.resolution.homotopy",
            "appendix.resolution.pullbacks",
            "appendix.resolution.quasi-isomorphism",
        ] {
            out.push(CheckResult::skip(id, reason));
        }
        let mut check = Check::new("appendix.resolution.chain-map");
        for n in 0..=2 {
            let r = resolution_map_checks(alg, n, &ctx.params.window);
            check.case(r.chain_map && r.multiplicative && r.cosimplicial, || format!("{r:?}"));
        }
        check.note("levels ≤ 2 on the window; cone homology needs a finite basis");
        out.push(check.finish());
    }
    let mut check = Check::new("appendix.matching");
    for n in 0..=CONVOLUTION_LEVELS {
        let r = matching_map_check(alg, n, &ctx.params.window);
        check.case(r.passed(), || format!("{r:?}"));
    }
    out.push(check.finish());
    out.extend(totalization_checks(ctx));
    out
}
