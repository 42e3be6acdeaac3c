use rand::Rng;

use super::{Check, CheckResult, Context};
use crate::ainfty::{
    ainf_compose, ainf_hom_diff, ainf_hom_diff_checked, ainf_identity_residuals, AInfinityComodule, AInfinityMorphism,
    Image, MatrixCobar,
};
use crate::cobar::indexed::{check_hom_diff, suspend, CrossCheck};
use crate::cobar::{
    cobar_coaug_diff, cobar_diff, cobar_mul, gauge_act, gauge_isomorphism_witness, mc_check, mc_residual,
    twisted_diff, twisted_diff_raw, CobarElement, MaurerCartanElement,
};
use crate::graded::{
    check_bialgebra_axioms, concat, mul_elements, simplicial_identities_check, AxiomReport, Bialgebra, ShowTensor,
    Sign,
};
use crate::holim::{compose, compose_checked, hom_diff, hom_diff_checked, HolimMorphism};
use crate::linear::SparseVector;
use crate::monoidal::{
    associativity_check, bar_diff, letterwise, pattern_coproduct, tensor, tensor_component, tensor_raw,
    tensor_via_braces, BarElement, Variant,
};
use crate::random::{self, TestRng};

fn slug(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '-' }).collect()
}

fn from_axioms(prefix: &str, report: AxiomReport) -> Vec<CheckResult> {
    report
        .checks
        .into_iter()
        .map(|c| {
            let mut check = Check::new(&format!("{prefix}.{}", slug(&c.name)));
            check.cases = c.cases;
            check.witness = c.witness;
            check.finish()
        })
        .collect()
}

pub(super) fn axioms<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let mut out = from_axioms("axioms", check_bialgebra_axioms(ctx.alg, &ctx.params.window));
    let depth = ctx.n().min(if ctx.alg.is_finite_dimensional() { 3 } else { 2 });
    out.extend(from_axioms("axioms.cosimplicial", simplicial_identities_check(ctx.alg, depth, &ctx.params.window)));
    out
}

fn mc_element<B: Bialgebra>(ctx: &Context<B>, rng: &mut TestRng) -> MaurerCartanElement<B::Label> {
    random::maurer_cartan(ctx.alg, &ctx.basis, &ctx.grouplikes, rng, ctx.n())
}

fn sample<B: Bialgebra>(ctx: &Context<B>, rng: &mut TestRng, degree: i64, terms: usize) -> CobarElement<B::Label> {
    random::homogeneous(&ctx.basis, rng, degree, ctx.n(), ctx.n(), terms)
}

fn nontrivial(count: usize, total: usize) -> String {
    format!("nonzero first differential on {count} of {total} inputs")
}

pub(super) fn cobar<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let mut out = Vec::new();

    for (id, diff) in [
        ("cobar.diff.square-zero", cobar_diff as fn(&B, &CobarElement<B::Label>) -> CobarElement<B::Label>),
        ("cobar.coaug.square-zero", cobar_coaug_diff),
    ] {
        let mut check = Check::new(id);
        let mut rng = ctx.params.rng(id);
        let mut count = 0;
        for i in 0..ctx.samples() {
            let x = sample(ctx, &mut rng, ctx.degree(i), 3);
            let dx = diff(alg, &x);
            count += usize::from(!dx.is_zero());
            let ddx = diff(alg, &dx);
            check.case(ddx.is_zero(), || format!("d²({x}) = {ddx}"));
        }
        check.note(nontrivial(count, ctx.samples()));
        out.push(check.finish());
    }

    let id = "cobar.diff.leibniz";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let (p, q) = (ctx.degree(i), ctx.degree(i + 1 + rng.gen_range(0..3)));
        let (x, y) = (sample(ctx, &mut rng, p, 3), sample(ctx, &mut rng, q, 3));
        let (Some(xy), Some(a), Some(b)) = (
            check.ok(cobar_mul(&x, &y)),
            check.ok(cobar_mul(&cobar_diff(alg, &x), &y)),
            check.ok(cobar_mul(&x, &cobar_diff(alg, &y))),
        ) else {
            continue;
        };
        let rhs = &a + &b.scale(&Sign::pow(p).to_rational());
        let lhs = cobar_diff(alg, &xy);
        check.case(lhs == rhs, || format!("x = {x}, y = {y}: d(xy) = {lhs}, dx·y ± x·dy = {rhs}"));
    }
    out.push(check.finish());

    let id = "cobar.twisted.square-zero";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let x = sample(ctx, &mut rng, ctx.degree(i), 3);
        let (a, b) = (mc_element(ctx, &mut rng), mc_element(ctx, &mut rng));
        let Some(dx) = check.ok(twisted_diff(alg, &x, &a, &b)) else { continue };
        let Some(ddx) = check.ok(twisted_diff(alg, &dx, &a, &b)) else { continue };
        check.case(ddx.is_zero(), || format!("x = {x}, a = {}, b = {}: d² = {ddx}", a.element(), b.element()));
    }
    out.push(check.finish());

    let id = "cobar.twisted.specializations";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let zero = MaurerCartanElement::zero(ctx.n());
    let unit = MaurerCartanElement::unit_object(alg, ctx.n());
    for i in 0..ctx.samples() {
        let x = sample(ctx, &mut rng, ctx.degree(i), 3);
        let plain = twisted_diff(alg, &x, &zero, &zero).expect("same truncation");
        check.case(plain == cobar_diff(alg, &x), || format!("twist by 0 differs from d on {x}"));
        let coaug = twisted_diff(alg, &x, &unit, &unit).expect("same truncation");
        check.case(coaug == cobar_coaug_diff(alg, &x), || format!("twist by 1 differs from the coaugmented d on {x}"));
    }
    out.push(check.finish());
    out
}

fn literal_note(literal: usize, total: usize, first: Option<usize>) -> String {
    match first {
        None => format!("literal index pattern agrees up to sign on all {total} inputs"),
        Some(w) => format!("literal index pattern differs on {literal} of {total} inputs (first at weight {w}); reconciled formula agrees"),
    }
}

/// Folds a cross-check into `check`, counting literal-pattern disagreements.
fn cross(check: &mut Check, c: &CrossCheck, literal: &mut (usize, Option<usize>), context: impl FnOnce() -> String) {
    check.case(c.agrees(), || format!("{}: {}: {:?}", c.formula, context(), c.reconciled));
    if let Some(d) = &c.literal {
        literal.0 += 1;
        literal.1.get_or_insert(d.weight);
    }
}

pub(super) fn mc<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let n = ctx.n();
    let mut out = Vec::new();

    let id = "mc.random.maurer-cartan";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let a = mc_element(ctx, &mut rng);
        let report = mc_check(alg, a.element());
        check.case(report.is_mc(), || format!("{}: residual {:?}", a.element(), report.first_nonzero().map(|(w, _)| w)));
    }
    out.push(check.finish());

    let id = "mc.indexed.components";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let mut literal = (0, None);
    for _ in 0..ctx.samples() {
        // degree-one elements that are not Maurer-Cartan exercise every term
        let x = sample(ctx, &mut rng, 1, 4);
        let report = mc_check(alg, &x);
        cross(&mut check, &report.indexed, &mut literal, || x.to_string());
    }
    check.note(literal_note(literal.0, ctx.samples(), literal.1));
    out.push(check.finish());

    let id = "mc.gauge.maurer-cartan";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let a = mc_element(ctx, &mut rng);
        let f = random::gauge_element(&ctx.basis, &mut rng, n);
        if let Some(fa) = check.ok(gauge_act(alg, &f, &a)) {
            let r = mc_check(alg, fa.element());
            check.case(r.is_mc(), || format!("f = {f}, a = {}: f.a is not Maurer-Cartan", a.element()));
        }
        if let Some(pure) = check.ok(gauge_act(alg, &f, &MaurerCartanElement::zero(n))) {
            check.case(mc_check(alg, pure.element()).is_mc(), || format!("f = {f}: f.0 is not Maurer-Cartan"));
        }
    }
    out.push(check.finish());

    let id = "mc.gauge.witness";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let a = mc_element(ctx, &mut rng);
        let f = random::gauge_element(&ctx.basis, &mut rng, n);
        let (Some(w), Some(fa)) = (check.ok(gauge_isomorphism_witness(alg, &f, &a)), check.ok(gauge_act(alg, &f, &a))) else {
            continue;
        };
        check.case(w.certified() && w.target == fa, || {
            format!(
                "f = {f}, a = {}: closed {} / {}, inverse {}",
                a.element(),
                w.morphism_closed,
                w.inverse_closed,
                w.two_sided_inverse
            )
        });
    }
    out.push(check.finish());

    let id = "mc.gauge.group-action";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let a = mc_element(ctx, &mut rng);
        let f = random::gauge_element(&ctx.basis, &mut rng, n);
        let g = random::gauge_element(&ctx.basis, &mut rng, n);
        let unit = gauge_act(alg, &CobarElement::one(n), &a);
        check.case(unit.as_ref() == Ok(&a), || format!("1.a ≠ a for a = {}", a.element()));
        let fg = cobar_mul(&f, &g).expect("same truncation");
        let once = gauge_act(alg, &fg, &a);
        let twice = gauge_act(alg, &g, &a).and_then(|ga| gauge_act(alg, &f, &ga));
        check.case(once.is_ok() && once == twice, || format!("(fg).a ≠ f.(g.a) for f = {f}, g = {g}, a = {}", a.element()));
    }
    out.push(check.finish());
    out
}

struct Triple<L: Ord> {
    f: HolimMorphism<L>,
    g: HolimMorphism<L>,
    h: HolimMorphism<L>,
}

/// Random composable morphisms `a → b → c → d` of random degrees.
fn composable<B: Bialgebra>(ctx: &Context<B>, rng: &mut TestRng, i: usize) -> Triple<B::Label> {
    let objects: Vec<_> = (0..4).map(|_| mc_element(ctx, rng)).collect();
    let mut morphism = |k: usize| {
        let m = ctx.degree(i + k * 2);
        let x = sample(ctx, rng, m, 3);
        HolimMorphism::new(ctx.alg, &objects[k], &objects[k + 1], m, x).expect("homogeneous sample")
    };
    Triple { f: morphism(0), g: morphism(1), h: morphism(2) }
}

pub(super) fn holim<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let mut out = Vec::new();

    let id = "holim.hom-diff.square-zero";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        let ddf = hom_diff(alg, &hom_diff(alg, &t.f));
        check.case(ddf.is_zero(), || format!("f = {}: d²f = {}", t.f.element(), ddf.element()));
    }
    out.push(check.finish());

    let id = "holim.indexed.hom-diff";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let mut literal = (0, None);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        let (_, c) = hom_diff_checked(alg, &t.f);
        cross(&mut check, &c, &mut literal, || t.f.element().to_string());
        // twists that are not Maurer-Cartan satisfy the same identity
        let x = sample(ctx, &mut rng, 1, 3);
        let raw = twisted_diff_raw(alg, t.f.element(), &x, &x).expect("same truncation");
        let c = check_hom_diff(alg, t.f.element(), &x, &x, &raw);
        cross(&mut check, &c, &mut literal, || format!("{} twisted by {x}", t.f.element()));
    }
    check.note(literal_note(literal.0, 2 * ctx.samples(), literal.1));
    out.push(check.finish());

    let id = "holim.indexed.compose";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let mut literal = (0, None);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        if let Some((_, c)) = check.ok(compose_checked(alg, &t.g, &t.f)) {
            cross(&mut check, &c, &mut literal, || format!("g = {}, f = {}", t.g.element(), t.f.element()));
        }
    }
    check.note(literal_note(literal.0, ctx.samples(), literal.1));
    out.push(check.finish());

    let id = "holim.compose.leibniz";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        let (Some(gf), Some(a), Some(b)) = (
            check.ok(compose(&t.g, &t.f)),
            check.ok(compose(&hom_diff(alg, &t.g), &t.f)),
            check.ok(compose(&t.g, &hom_diff(alg, &t.f))),
        ) else {
            continue;
        };
        let lhs = hom_diff(alg, &gf);
        let rhs = a.element() + &b.element().scale(&Sign::pow(t.g.degree()).to_rational());
        check.case(lhs.element() == &rhs, || format!("g = {}, f = {}", t.g.element(), t.f.element()));
    }
    out.push(check.finish());

    let id = "holim.compose.associativity";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        let left = compose(&t.h, &t.g).and_then(|hg| compose(&hg, &t.f));
        let right = compose(&t.g, &t.f).and_then(|gf| compose(&t.h, &gf));
        check.case(left.is_ok() && left == right, || format!("h = {}, g = {}, f = {}", t.h.element(), t.g.element(), t.f.element()));
        let id_f = compose(&HolimMorphism::identity(t.f.target()), &t.f);
        check.case(id_f.as_ref() == Ok(&t.f), || format!("id∘f ≠ f for f = {}", t.f.element()));
    }
    out.push(check.finish());
    out
}

/// A random morphism between regular comodules.
fn random_matrix<B: Bialgebra>(
    ctx: &Context<B>,
    rng: &mut TestRng,
    target: &[i64],
    source: &[i64],
    degree: i64,
) -> MatrixCobar<B::Label> {
    let n = ctx.n();
    let mut terms = SparseVector::zero();
    for _ in 0..6 {
        let i = rng.gen_range(0..target.len());
        let j = rng.gen_range(0..source.len());
        let x = random::homogeneous(&ctx.basis, rng, degree - target[i] + source[j], n, n, 1);
        for (w, c) in x.terms().iter() {
            terms.add_term((i, j, w.clone()), c.clone());
        }
    }
    MatrixCobar::new(terms, n)
}

fn image<L: Ord + Clone>(t: &crate::graded::Tensor<L>) -> Image<L> {
    t.iter().map(|(w, c)| ((0, w.clone()), c.clone())).collect()
}

pub(super) fn ainfty<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let n = ctx.n();
    let mut out = Vec::new();

    let id = "ainfty.one-dimensional.identities";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let a = mc_element(ctx, &mut rng);
        let m = AInfinityComodule::from_object(&a);
        let report = ainf_identity_residuals(alg, &m);
        check.case(report.is_valid() && report.componentwise.is_none(), || {
            format!("a = {}: residual at {:?}, {:?}", a.element(), report.first_nonzero().map(|(w, _)| w), report.componentwise)
        });
        let back = m.to_object(alg);
        check.case(back.as_ref().map(|b| b.element()) == Ok(a.element()), || format!("round trip of {}", a.element()));
    }
    out.push(check.finish());

    let id = "ainfty.indexed.identities";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let x = sample(ctx, &mut rng, 1, 4);
        let terms = x.terms().iter().map(|(w, c)| ((0, 0, w.clone()), c.clone())).collect();
        let Some(k) = check.ok(AInfinityComodule::new(alg, vec!["k".into()], vec![0], MatrixCobar::new(terms, n))) else {
            continue;
        };
        let report = ainf_identity_residuals(alg, &k);
        check.case(report.componentwise.is_none(), || format!("x = {x}: {:?}", report.componentwise));
        let residual = mc_residual(alg, &x);
        for w in 0..=n {
            let expected = image(&suspend(alg, &residual.component(w)));
            check.case(report.residuals[w][0] == expected, || format!("x = {x}: weight {w} residual is not the suspended Maurer-Cartan residual"));
        }
    }
    out.push(check.finish());

    let regular = if alg.is_finite_dimensional() { AInfinityComodule::regular(alg, n).ok() } else { None };

    let id = "ainfty.hom-diff.square-zero";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let m = ctx.degree(i);
        let f = match (&regular, i % 2) {
            (Some(r), 1) => {
                let e = random_matrix(ctx, &mut rng, r.degrees(), r.degrees(), m);
                check.ok(AInfinityMorphism::new(alg, r, r, m, e))
            }
            _ => {
                let (a, b) = (mc_element(ctx, &mut rng), mc_element(ctx, &mut rng));
                let x = sample(ctx, &mut rng, m, 3);
                let (s, t) = (AInfinityComodule::from_object(&a), AInfinityComodule::from_object(&b));
                check.ok(AInfinityMorphism::from_cobar(alg, &s, &t, m, &x))
            }
        };
        let Some(f) = f else { continue };
        let ddf = ainf_hom_diff(alg, &ainf_hom_diff(alg, &f));
        check.case(ddf.is_zero(), || format!("morphism of degree {m} with d² ≠ 0"));
    }
    check.note(if regular.is_some() { "one-dimensional and regular comodules" } else { "one-dimensional comodules" });
    out.push(check.finish());

    let id = "ainfty.indexed.hom-diff";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let m = ctx.degree(i);
        let (a, b) = (mc_element(ctx, &mut rng), mc_element(ctx, &mut rng));
        let x = sample(ctx, &mut rng, m, 3);
        let (s, t) = (AInfinityComodule::from_object(&a), AInfinityComodule::from_object(&b));
        let Some(f) = check.ok(AInfinityMorphism::from_cobar(alg, &s, &t, m, &x)) else { continue };
        let (_, c) = ainf_hom_diff_checked(alg, &f);
        check.case(c.is_none(), || format!("f = {x}: {c:?}"));
        if let Some(r) = &regular {
            let e = random_matrix(ctx, &mut rng, r.degrees(), r.degrees(), m);
            if let Some(g) = check.ok(AInfinityMorphism::new(alg, r, r, m, e)) {
                let (_, c) = ainf_hom_diff_checked(alg, &g);
                check.case(c.is_none(), || format!("regular comodule: {c:?}"));
            }
        }
    }
    out.push(check.finish());

    let id = "ainfty.dictionary";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        let t = composable(ctx, &mut rng, i);
        let comodule = |o: &MaurerCartanElement<B::Label>| AInfinityComodule::from_object(o);
        let lift = |f: &HolimMorphism<B::Label>| {
            AInfinityMorphism::from_cobar(alg, &comodule(f.source()), &comodule(f.target()), f.degree(), f.element())
        };
        let (Some(f), Some(g)) = (check.ok(lift(&t.f)), check.ok(lift(&t.g))) else { continue };
        let df = ainf_hom_diff(alg, &f).to_cobar();
        check.case(df.as_ref() == Some(hom_diff(alg, &t.f).element()), || format!("d differs on {}", t.f.element()));
        let gf = ainf_compose(alg, &g, &f).ok().and_then(|x| x.to_cobar());
        let expected = compose(&t.g, &t.f).ok();
        check.case(gf.is_some() && gf.as_ref() == expected.as_ref().map(|x| x.element()), || {
            format!("composition differs on g = {}, f = {}", t.g.element(), t.f.element())
        });
    }
    out.push(check.finish());

    let id = "ainfty.regular.identities";
    out.push(match &regular {
        None => CheckResult::skip(id, "the regular comodule needs a finite-dimensional algebra"),
        Some(r) => {
            let mut check = Check::new(id);
            let report = ainf_identity_residuals(alg, r);
            check.case(report.is_valid(), || format!("residual at weight {:?}", report.first_nonzero().map(|(w, _)| w)));
            check.case(report.componentwise.is_none(), || format!("{:?}", report.componentwise));
            let maps = r.structure_maps(alg);
            check.case(maps.iter().skip(2).flatten().all(SparseVector::is_zero), || "higher coaction maps are nonzero".into());
            check.note(format!("dimension {}", r.dimension()));
            check.finish()
        }
    });
    out
}

fn random_bar<B: Bialgebra>(ctx: &Context<B>, rng: &mut TestRng) -> BarElement<B::Label> {
    let n = ctx.n();
    let mut terms = SparseVector::zero();
    for _ in 0..3 {
        let len = rng.gen_range(1..=3);
        let mut bw = Vec::new();
        for _ in 0..len {
            let weight = rng.gen_range(0..=n);
            let degrees: Vec<i64> = ctx.basis.reachable(weight).into_iter().collect();
            let degree = degrees[rng.gen_range(0..degrees.len())];
            if let Some(word) = ctx.basis.word(rng, weight, degree) {
                bw.push(word);
            }
        }
        terms.add_term(bw, random::coefficient(rng));
    }
    BarElement::new(terms, n)
}

pub(super) fn monoidal<B: Bialgebra>(ctx: &Context<B>) -> Vec<CheckResult> {
    let alg = ctx.alg;
    let n = ctx.n();
    let mut out = Vec::new();

    let id = "monoidal.tensor.maurer-cartan";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for _ in 0..ctx.samples() {
        let (a, b) = (mc_element(ctx, &mut rng), mc_element(ctx, &mut rng));
        for variant in [Variant::Left, Variant::Right] {
            let Some(t) = check.ok(tensor(alg, variant, &a, &b)) else { continue };
            check.case(mc_check(alg, t.element()).is_mc(), || format!("{variant} tensor of {} and {}", a.element(), b.element()));
        }
    }
    out.push(check.finish());

    for variant in [Variant::Left, Variant::Right] {
        let id = format!("monoidal.associativity.{variant}");
        let mut check = Check::new(&id);
        let mut rng = ctx.params.rng(&id);
        for _ in 0..ctx.samples() {
            let [a, b, c] = [0; 3].map(|_| mc_element(ctx, &mut rng));
            let Some(r) = check.ok(associativity_check(alg, &a, &b, &c, variant)) else { continue };
            check.case(r.holds(), || {
                format!("a = {}, b = {}, c = {}: first difference at weight {:?}", a.element(), b.element(), c.element(), r.first_mismatch())
            });
        }
        out.push(check.finish());
    }

    let id = "monoidal.weight-two";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    if n >= 2 {
        for _ in 0..ctx.samples() {
            let (a, b) = (mc_element(ctx, &mut rng), mc_element(ctx, &mut rng));
            let (a, b) = (a.element(), b.element());
            let (a1, a2, b1, b2) = (a.component(1), a.component(2), b.component(1), b.component(2));
            let left = &letterwise(alg, &concat(&a1, &a1), &b2) + &letterwise(alg, &a2, &pattern_coproduct(alg, &b1, &[2]));
            let right = &letterwise(alg, &a2, &concat(&b1, &b1)) + &letterwise(alg, &pattern_coproduct(alg, &a1, &[2]), &b2);
            let got = tensor_component(alg, Variant::Left, a, b, 2);
            check.case(got == left, || format!("left: {} vs {}", ShowTensor(&got), ShowTensor(&left)));
            let got = tensor_component(alg, Variant::Right, a, b, 2);
            check.case(got == right, || format!("right: {} vs {}", ShowTensor(&got), ShowTensor(&right)));
            let got = tensor_component(alg, Variant::Left, a, b, 1);
            let expected = letterwise(alg, &a1, &b1);
            check.case(got == expected, || format!("weight one: {} vs {}", ShowTensor(&got), ShowTensor(&expected)));
        }
    }
    out.push(if n < 2 { CheckResult::skip(id, "needs truncation ≥ 2") } else { check.finish() });

    let id = "monoidal.braces";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    for i in 0..ctx.samples() {
        // arbitrary elements, not only Maurer-Cartan ones
        let a = sample(ctx, &mut rng, ctx.degree(i), 3);
        let b = sample(ctx, &mut rng, ctx.degree(i + 1), 3);
        for variant in [Variant::Left, Variant::Right] {
            let (Some(direct), Some(braces)) = (check.ok(tensor_raw(alg, variant, &a, &b)), check.ok(tensor_via_braces(alg, variant, &a, &b))) else {
                continue;
            };
            check.case(direct == braces, || format!("{variant}: a = {a}, b = {b}: {direct} vs {braces}"));
        }
    }
    out.push(check.finish());

    let id = "monoidal.bar.square-zero";
    let mut check = Check::new(id);
    let mut rng = ctx.params.rng(id);
    let mut count = 0;
    for _ in 0..ctx.samples() {
        let e = random_bar(ctx, &mut rng);
        let d = bar_diff(alg, &e);
        count += usize::from(!d.is_zero());
        let dd = bar_diff(alg, &d);
        check.case(dd.is_zero(), || format!("d²({e}) = {dd}"));
    }
    check.note(nontrivial(count, ctx.samples()));
    out.push(check.finish());

    let id = "monoidal.grouplikes";
    let mut check = Check::new(id);
    for g in &ctx.grouplikes {
        for h in &ctx.grouplikes {
            let a = MaurerCartanElement::from_grouplike(alg, g, n).expect("grouplike");
            let b = MaurerCartanElement::from_grouplike(alg, h, n).expect("grouplike");
            let expected = MaurerCartanElement::from_grouplike(alg, &mul_elements(alg, g, h), n).expect("grouplike");
            for variant in [Variant::Left, Variant::Right] {
                let t = tensor(alg, variant, &a, &b);
                check.case(t.as_ref() == Ok(&expected), || format!("{variant}: {g} ⊗ {h}"));
            }
        }
    }
    check.note(format!("{} grouplikes", ctx.grouplikes.len()));
    out.push(check.finish());
    out
}
