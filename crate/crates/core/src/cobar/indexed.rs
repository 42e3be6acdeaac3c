//! Componentwise formulations of the Maurer-Cartan equation, the Hom
//! differential and composition, written in terms of the components
//! `aₙ ∈ A^{⊗n}` and evaluated by explicit index loops.
//!
//! A Cobar word and a tensor are identified through the suspension
//! `s^{⊗n}(a₁⊗…⊗aₙ) = (−1)^{Σₗ (n−l)|aₗ|} [a₁|…|aₙ]`. Under it the Cobar
//! differential restricted to `A^{⊗n}` is `(−1)ⁿ d_⊗`, a coproduct in slot
//! `j` picks up `(−1)^j`, and `Φ(u)Φ(v) = (−1)^{q|u|} Φ(u⊗v)` for `v` of
//! weight `q`. The reconciled formulas below are the resulting equations;
//! the literal ones follow the textbook index pattern with no suspension
//! signs and are compared only up to a sign per weight.

use std::collections::BTreeMap;

use super::{total_degree, CobarElement};
use crate::graded::{apply_slot, concat, tensor_differential, Bialgebra, ShowTensor, Sign, Tensor};
use crate::linear::SparseVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub weight: usize,
    pub normative: String,
    pub indexed: String,
}

/// Result of evaluating one formula by two routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub formula: &'static str,
    /// First weight where the reconciled index formula disagrees.
    pub reconciled: Option<Discrepancy>,
    /// First weight where the literal index pattern disagrees even up to sign.
    pub literal: Option<Discrepancy>,
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.reconciled.is_none()
    }
}

/// Sign of the suspension isomorphism on a word.
pub fn suspension_sign<B: Bialgebra>(alg: &B, w: &[B::Label]) -> Sign {
    let n = w.len() as i64;
    let exponent: i64 = w.iter().enumerate().map(|(l, a)| (n - 1 - l as i64) * alg.degree(a)).sum();
    Sign::pow(exponent)
}

/// Translates between Cobar words and tensors; the map is an involution.
pub fn suspend<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        out.add_term(w.clone(), suspension_sign(alg, w).apply(c));
    }
    out
}

/// Tensor components in weights `0..=N`.
pub fn components<B: Bialgebra>(alg: &B, x: &CobarElement<B::Label>) -> Vec<Tensor<B::Label>> {
    let t = suspend(alg, x.terms());
    (0..=x.truncation()).map(|n| t.filter(|w| w.len() == n)).collect()
}

fn comp<L: Ord + Clone>(cs: &[Tensor<L>], k: usize) -> Tensor<L> {
    cs.get(k).cloned().unwrap_or_default()
}

/// `Σⱼ sign(j) (id^{⊗j−1} ⊗ Δ ⊗ id)(t)` over slots `j = 1..=weight`.
fn coproduct_sum<B: Bialgebra>(alg: &B, t: &Tensor<B::Label>, weight: usize, sign: impl Fn(usize) -> Sign) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for j in 1..=weight {
        let term = apply_slot(alg, t, j - 1, 0, |l| alg.coproduct(l));
        out.add_scaled(&term, &sign(j).to_rational());
    }
    out
}

/// Weight-`n` residual of the componentwise Maurer-Cartan equations:
/// `d aₙ + Σⱼ (−1)^{n+j} Δⱼ aₙ₋₁ + Σₖ (−1)^{n+(n−k)(1−k)} aₖ ⊗ aₙ₋ₖ`.
pub fn mc_equation_reconciled<B: Bialgebra>(alg: &B, a: &[Tensor<B::Label>], n: usize) -> Tensor<B::Label> {
    let ni = n as i64;
    let mut out = tensor_differential(alg, &comp(a, n));
    if n >= 2 {
        out += &coproduct_sum(alg, &comp(a, n - 1), n - 1, |j| Sign::pow(ni + j as i64));
        for k in 1..n {
            let ki = k as i64;
            let s = Sign::pow(ni + (ni - ki) * (1 - ki));
            out.add_scaled(&concat(&comp(a, k), &comp(a, n - k)), &s.to_rational());
        }
    }
    out
}

/// `d aₙ + Σₖ (−1)^{n−k} aₙ₋ₖ ⊗ aₖ − Σₖ (−1)^{n−k} Δₖ aₙ₋₁`, components
/// taken as raw words.
pub fn mc_equation_literal<B: Bialgebra>(alg: &B, a: &[Tensor<B::Label>], n: usize) -> Tensor<B::Label> {
    let mut out = tensor_differential(alg, &comp(a, n));
    for k in 1..n {
        let s = Sign::pow((n - k) as i64);
        out.add_scaled(&concat(&comp(a, n - k), &comp(a, k)), &s.to_rational());
    }
    if n >= 2 {
        out -= &coproduct_sum(alg, &comp(a, n - 1), n - 1, |k| Sign::pow((n - k) as i64));
    }
    out
}

fn raw_components<L: Ord + Clone>(x: &CobarElement<L>) -> Vec<Tensor<L>> {
    (0..=x.truncation()).map(|n| x.component(n)).collect()
}

fn agree_up_to_sign<L: Ord + Clone>(x: &Tensor<L>, y: &Tensor<L>) -> bool {
    x == y || *x == -y
}

fn compare<B: Bialgebra>(
    alg: &B,
    formula: &'static str,
    normative: &CobarElement<B::Label>,
    reconciled: impl Fn(usize) -> Tensor<B::Label>,
    literal: impl Fn(usize) -> Tensor<B::Label>,
    weight_sign: impl Fn(usize) -> Sign,
) -> CrossCheck {
    let mut first = None;
    let mut first_literal = None;
    for n in 0..=normative.truncation() {
        let expected = normative.component(n);
        if first.is_none() {
            let idx = suspend(alg, &reconciled(n)).scale(&weight_sign(n).to_rational());
            if idx != expected {
                first = Some(Discrepancy {
                    weight: n,
                    normative: ShowTensor(&expected).to_string(),
                    indexed: ShowTensor(&idx).to_string(),
                });
            }
        }
        if first_literal.is_none() {
            let lit = literal(n);
            if !agree_up_to_sign(&lit, &expected) {
                first_literal = Some(Discrepancy {
                    weight: n,
                    normative: ShowTensor(&expected).to_string(),
                    indexed: ShowTensor(&lit).to_string(),
                });
            }
        }
    }
    CrossCheck { formula, reconciled: first, literal: first_literal }
}

/// Compares the Cobar residual `da + a·a` with the componentwise equations.
pub fn check_mc_equations<B: Bialgebra>(
    alg: &B,
    a: &CobarElement<B::Label>,
    residual: &CobarElement<B::Label>,
) -> CrossCheck {
    let susp = components(alg, a);
    let raw = raw_components(a);
    compare(
        alg,
        "maurer-cartan components",
        residual,
        |n| mc_equation_reconciled(alg, &susp, n),
        |n| mc_equation_literal(alg, &raw, n),
        |n| Sign::pow(n as i64),
    )
}

/// Splits an element by total degree.
pub fn by_degree<B: Bialgebra>(alg: &B, x: &CobarElement<B::Label>) -> BTreeMap<i64, CobarElement<B::Label>> {
    let mut parts: BTreeMap<i64, Tensor<B::Label>> = BTreeMap::new();
    for (w, c) in x.terms().iter() {
        parts.entry(total_degree(alg, w)).or_default().add_term(w.clone(), c.clone());
    }
    parts.into_iter().map(|(d, t)| (d, CobarElement::new(t, x.truncation()))).collect()
}

/// Weight-`n` component of the differential of `f : a → b` of degree `m`:
/// `d fₙ + Σⱼ (−1)^{n+j} Δⱼ fₙ₋₁ + Σₖ (−1)^{n+(n−k)(1−k)} bₖ⊗fₙ₋ₖ
///  − Σₖ (−1)^{m+n+k(m−n+k)} fₙ₋ₖ⊗aₖ`, both product sums over `k = 1..=n`.
pub fn hom_diff_reconciled<B: Bialgebra>(
    alg: &B,
    f: &[Tensor<B::Label>],
    m: i64,
    source: &[Tensor<B::Label>],
    target: &[Tensor<B::Label>],
    n: usize,
) -> Tensor<B::Label> {
    let ni = n as i64;
    let mut out = tensor_differential(alg, &comp(f, n));
    if n >= 2 {
        out += &coproduct_sum(alg, &comp(f, n - 1), n - 1, |j| Sign::pow(ni + j as i64));
    }
    for k in 1..=n {
        let ki = k as i64;
        let s = Sign::pow(ni + (ni - ki) * (1 - ki));
        out.add_scaled(&concat(&comp(target, k), &comp(f, n - k)), &s.to_rational());
        let s = Sign::pow(m + ni + ki * (m - ni + ki));
        out.add_scaled(&concat(&comp(f, n - k), &comp(source, k)), &(-s.to_rational()));
    }
    out
}

/// The textbook index pattern: source on the left, target on the right,
/// product sums over `k = 1..n−1`.
pub fn hom_diff_literal<B: Bialgebra>(
    alg: &B,
    f: &[Tensor<B::Label>],
    m: i64,
    source: &[Tensor<B::Label>],
    target: &[Tensor<B::Label>],
    n: usize,
) -> Tensor<B::Label> {
    let ni = n as i64;
    let mut out = tensor_differential(alg, &comp(f, n));
    for k in 1..n {
        let ki = k as i64;
        out.add_scaled(&concat(&comp(source, k), &comp(f, n - k)), &Sign::pow(ni - ki).to_rational());
        out.add_scaled(&concat(&comp(f, k), &comp(target, n - k)), &(-Sign::pow(m * (ni - ki + 1)).to_rational()));
    }
    if n >= 2 {
        out += &coproduct_sum(alg, &comp(f, n - 1), n - 1, |k| Sign::pow(ni - k as i64 + m));
    }
    out
}

/// Compares the twisted differential of `f : source → target` with the
/// componentwise formula, degree by degree.
pub fn check_hom_diff<B: Bialgebra>(
    alg: &B,
    f: &CobarElement<B::Label>,
    source: &CobarElement<B::Label>,
    target: &CobarElement<B::Label>,
    normative: &CobarElement<B::Label>,
) -> CrossCheck {
    let src = components(alg, source);
    let tgt = components(alg, target);
    let src_raw = raw_components(source);
    let tgt_raw = raw_components(target);
    let parts: Vec<(i64, Vec<Tensor<B::Label>>, Vec<Tensor<B::Label>>)> = by_degree(alg, f)
        .into_iter()
        .map(|(m, part)| (m, components(alg, &part), raw_components(&part)))
        .collect();
    compare(
        alg,
        "hom differential components",
        normative,
        |n| {
            let mut out = SparseVector::zero();
            for (m, fs, _) in &parts {
                out += &hom_diff_reconciled(alg, fs, *m, &src, &tgt, n);
            }
            out
        },
        |n| {
            let mut out = SparseVector::zero();
            for (m, _, raw) in &parts {
                out += &hom_diff_literal(alg, raw, *m, &src_raw, &tgt_raw, n);
            }
            out
        },
        |n| Sign::pow(n as i64),
    )
}

/// `(g∘f)ₙ = Σₖ (−1)^{(n−k)(l−k)} gₖ ⊗ fₙ₋ₖ` for `g` of degree `l`.
pub fn compose_reconciled<L: Ord + Clone>(g: &[Tensor<L>], l: i64, f: &[Tensor<L>], n: usize) -> Tensor<L> {
    let mut out = SparseVector::zero();
    for k in 0..=n {
        let s = Sign::pow((n - k) as i64 * (l - k as i64));
        out.add_scaled(&concat(&comp(g, k), &comp(f, n - k)), &s.to_rational());
    }
    out
}

/// `Σₖ (−1)^{m(n−k)} gₖ ⊗ fₙ₋ₖ` for `f` of degree `m`, raw words.
pub fn compose_literal<L: Ord + Clone>(g: &[Tensor<L>], f: &[Tensor<L>], m: i64, n: usize) -> Tensor<L> {
    let mut out = SparseVector::zero();
    for k in 0..=n {
        let s = Sign::pow(m * (n - k) as i64);
        out.add_scaled(&concat(&comp(g, k), &comp(f, n - k)), &s.to_rational());
    }
    out
}

/// Compares the Cobar product `g·f` with the componentwise composition.
pub fn check_compose<B: Bialgebra>(
    alg: &B,
    g: &CobarElement<B::Label>,
    f: &CobarElement<B::Label>,
    normative: &CobarElement<B::Label>,
) -> CrossCheck {
    let gs: Vec<_> = by_degree(alg, g).into_iter().map(|(l, p)| (l, components(alg, &p), raw_components(&p))).collect();
    let fs: Vec<_> = by_degree(alg, f).into_iter().map(|(m, p)| (m, components(alg, &p), raw_components(&p))).collect();
    compare(
        alg,
        "composition components",
        normative,
        |n| {
            let mut out = SparseVector::zero();
            for (l, gc, _) in &gs {
                for (_, fc, _) in &fs {
                    out += &compose_reconciled(gc, *l, fc, n);
                }
            }
            out
        },
        |n| {
            let mut out = SparseVector::zero();
            for (_, _, gr) in &gs {
                for (m, _, fr) in &fs {
                    out += &compose_literal(gr, fr, *m, n);
                }
            }
            out
        },
        |_| Sign::PLUS,
    )
}
