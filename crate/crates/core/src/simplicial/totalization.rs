use std::fmt;

use super::chains::{Chain, LComplex, MonotoneMap};
use super::SimplicialError;
use crate::cobar::{cobar_coaug_diff, CobarElement};
use crate::graded::{
    apply_face, one, slot_product, tensor_differential, word_degree, words_of_weight, Bialgebra, Sign, Tensor, Window,
};
use crate::linear::SparseVector;

/// `x = (x₀, …, x_N)` with `xₙ ∈ A^{⊗n}`, stored as one tensor. A word of
/// weight `n` and internal degree `p` has total degree `p + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalizationElement<L: Ord> {
    terms: Tensor<L>,
    truncation: usize,
}

impl<L: Ord + Clone> TotalizationElement<L> {
    pub fn new(terms: Tensor<L>, truncation: usize) -> Self {
        Self { terms: terms.filter(|w| w.len() <= truncation), truncation }
    }

    pub fn zero(truncation: usize) -> Self {
        Self { terms: SparseVector::zero(), truncation }
    }

    pub fn terms(&self) -> &Tensor<L> {
        &self.terms
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn component(&self, n: usize) -> Tensor<L> {
        self.terms.filter(|w| w.len() == n)
    }

    fn same_truncation(&self, other: &Self) -> Result<usize, SimplicialError> {
        if self.truncation == other.truncation {
            Ok(self.truncation)
        } else {
            Err(SimplicialError::LevelMismatch(self.truncation, other.truncation))
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SimplicialError> {
        let n = self.same_truncation(other)?;
        Ok(Self { terms: &self.terms - &other.terms, truncation: n })
    }
}

pub fn total_degree<B: Bialgebra>(alg: &B, w: &[B::Label]) -> i64 {
    word_degree(alg, w) + w.len() as i64
}

/// `∂^{I} : A^{⊗m} → A^{⊗n}` for the injection `[m] → [n]` with image `I`,
/// composed from the elementary faces at the missing indices, smallest first.
pub fn coface_inclusion<B: Bialgebra>(alg: &B, t: &Tensor<B::Label>, image: &[usize], n: usize) -> Tensor<B::Label> {
    let mut out = t.clone();
    for j in (0..=n).filter(|j| !image.contains(j)) {
        out = out.map_linear(|w| apply_face(alg, w, j).expect("face index in range"));
    }
    out
}

/// The value `φⁿ(c)` of the natural transformation `L^• → A^•` attached to
/// `x`: `∂^{c}(x_k)` for `c` of length `k`.
pub fn natural_component<B: Bialgebra>(alg: &B, x: &TotalizationElement<B::Label>, n: usize, c: &Chain) -> Tensor<B::Label> {
    coface_inclusion(alg, &x.component(c.length()), c.vertices(), n)
}

/// Counts failures of `φⁿ(ι_* c) = ι(φᵐ(c))` over injective `ι : [m] → [n]`,
/// `m ≤ n ≤ bound`, and all chains `c` of `Lᵐ`.
pub fn naturality_failures<B: Bialgebra>(alg: &B, x: &TotalizationElement<B::Label>, bound: usize) -> usize {
    let mut failures = 0;
    for n in 0..=bound {
        for m in 0..=n {
            for iota in MonotoneMap::injective(m, n) {
                for c in LComplex::new(m).basis() {
                    let image = iota.push_chain(&c).expect("injective");
                    let lhs = natural_component(alg, x, n, &image);
                    let rhs = coface_inclusion(alg, &natural_component(alg, x, m, &c), iota.values(), n);
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
    }
    failures
}

/// The fat totalization `∏_{n≤N} A^{⊗n}[−n]` as a DG-algebra.
#[derive(Clone, Copy, Debug)]
pub struct FatTotalization<'a, B> {
    alg: &'a B,
    truncation: usize,
}

pub fn fat_totalization<B: Bialgebra>(alg: &B, truncation: usize) -> FatTotalization<'_, B> {
    FatTotalization { alg, truncation }
}

impl<B: Bialgebra> FatTotalization<'_, B> {
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn element(&self, terms: Tensor<B::Label>) -> TotalizationElement<B::Label> {
        TotalizationElement::new(terms, self.truncation)
    }

    pub fn unit(&self) -> TotalizationElement<B::Label> {
        self.element(one())
    }

    /// `d(x)ₙ = d(xₙ) − (−1)^{|x|} Σᵢ (−1)ⁱ ∂ⁱ(xₙ₋₁)`, the Hom differential
    /// of the natural transformation evaluated on `f_{0<…<n}`.
    pub fn diff(&self, x: &TotalizationElement<B::Label>) -> TotalizationElement<B::Label> {
        let mut out = tensor_differential(self.alg, &x.terms);
        for (w, c) in x.terms.iter() {
            if w.len() >= self.truncation {
                continue;
            }
            let sign = -Sign::pow(total_degree(self.alg, w));
            for i in 0..=w.len() + 1 {
                let face = apply_face(self.alg, w, i).expect("face index in range");
                out.add_scaled(&face, &(sign * Sign::pow(i as i64)).apply(c));
            }
        }
        self.element(out)
    }

    /// The differential without face signs, `d(xₙ) − Σᵢ ∂ⁱ(xₙ₋₁)`.
    /// Kept for comparison; it does not square to zero in general.
    pub fn diff_unsigned(&self, x: &TotalizationElement<B::Label>) -> TotalizationElement<B::Label> {
        let mut out = tensor_differential(self.alg, &x.terms);
        for (w, c) in x.terms.iter() {
            if w.len() >= self.truncation {
                continue;
            }
            for i in 0..=w.len() + 1 {
                out.add_scaled(&apply_face(self.alg, w, i).expect("face index in range"), &-c.clone());
            }
        }
        self.element(out)
    }

    /// `(a·b)ₙ = Σᵢ (−1)^{|b|i} ∂^{(0…i)}(aᵢ) · ∂^{(i…n)}(b_{n−i})`, the
    /// convolution product on `f_{0<…<n}`.
    pub fn mul(
        &self,
        a: &TotalizationElement<B::Label>,
        b: &TotalizationElement<B::Label>,
    ) -> Result<TotalizationElement<B::Label>, SimplicialError> {
        let big_n = a.same_truncation(b)?;
        let mut out = SparseVector::zero();
        for n in 0..=big_n {
            for i in 0..=n {
                let ai = a.component(i);
                if ai.is_zero() {
                    continue;
                }
                let left = coface_inclusion(self.alg, &ai, &(0..=i).collect::<Vec<_>>(), n);
                for (w, c) in b.component(n - i).iter() {
                    let sign = Sign::koszul(total_degree(self.alg, w), i as i64);
                    let single = SparseVector::single(w.clone(), sign.apply(c));
                    let right = coface_inclusion(self.alg, &single, &(i..=n).collect::<Vec<_>>(), n);
                    out += &slot_product(self.alg, &left, &right);
                }
            }
        }
        Ok(self.element(out))
    }
}

/// A Koszul-type twist applied on top of the per-weight signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    None,
    /// `(−1)^{Σₗ l|aₗ|}` on `a₁⊗…⊗aₙ`, positions counted from 1.
    Positional,
}

impl Twist {
    fn sign<B: Bialgebra>(self, alg: &B, w: &[B::Label]) -> Sign {
        match self {
            Twist::None => Sign::PLUS,
            Twist::Positional => {
                Sign::pow(w.iter().enumerate().map(|(l, a)| (l as i64 + 1) * alg.degree(a)).sum::<i64>())
            }
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::None => "none",
            Twist::Positional => "positional",
        })
    }
}

/// The diagonal map `Ψ(w) = σ_{|w|} · twist(w) · [w]` from the fat
/// totalization to the coaugmented Cobar construction, with the evidence
/// that it intertwines differentials and products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismCertificate {
    pub truncation: usize,
    pub twist: Twist,
    /// `σ₀, …, σ_N`: the first of `solutions`.
    pub signs: Vec<Sign>,
    /// Every sign vector with `σ₀ = +1` that works for `twist`.
    pub solutions: Vec<Vec<Sign>>,
    pub words_checked: usize,
    pub products_checked: usize,
}

impl IsomorphismCertificate {
    pub fn unique(&self) -> bool {
        self.solutions.len() == 1
    }

    pub fn apply<B: Bialgebra>(&self, alg: &B, x: &TotalizationElement<B::Label>) -> CobarElement<B::Label> {
        let terms = x.terms.iter().map(|(w, c)| (w.clone(), self.sign(alg, w).apply(c))).collect();
        CobarElement::new(terms, x.truncation)
    }

    fn sign<B: Bialgebra>(&self, alg: &B, w: &[B::Label]) -> Sign {
        self.signs[w.len()] * self.twist.sign(alg, w)
    }
}

/// Both differentials on one basis word, and the product of two.
struct Evidence<L: Ord> {
    differentials: Vec<(Vec<L>, Tensor<L>, Tensor<L>)>,
    products: Vec<(Vec<L>, Vec<L>, Tensor<L>)>,
}

fn intertwines<B: Bialgebra>(alg: &B, evidence: &Evidence<B::Label>, twist: Twist, signs: &[Sign]) -> bool {
    let psi = |w: &[B::Label]| signs[w.len()] * twist.sign(alg, w);
    let differentials = evidence.differentials.iter().all(|(w, holim, cobar)| {
        let mut mapped = SparseVector::zero();
        for (v, c) in holim.iter() {
            mapped.add_term(v.clone(), psi(v).apply(c));
        }
        mapped == cobar.scale(&psi(w).to_rational())
    });
    differentials
        && evidence.products.iter().all(|(u, v, product)| {
            let mut mapped = SparseVector::zero();
            for (w, c) in product.iter() {
                mapped.add_term(w.clone(), psi(w).apply(c));
            }
            let concat = SparseVector::basis([u.clone(), v.clone()].concat());
            mapped == concat.scale(&(psi(u) * psi(v)).to_rational())
        })
}

/// Finds every per-weight sign vector (under the trivial twist, then the
/// positional one) making `Ψ` intertwine differentials and products on all
/// words of weight `≤ N` in the basis labels of `window`.
pub fn totalization_vs_cobar<B: Bialgebra>(
    alg: &B,
    truncation: usize,
    window: &Window,
) -> Result<IsomorphismCertificate, SimplicialError> {
    let labels = alg.basis(window);
    let words: Vec<Vec<Vec<B::Label>>> = (0..=truncation).map(|n| words_of_weight(&labels, n)).collect();
    let tot = fat_totalization(alg, truncation);
    let mut evidence = Evidence { differentials: Vec::new(), products: Vec::new() };
    for w in words.iter().flatten() {
        let holim = tot.diff(&tot.element(SparseVector::basis(w.clone()))).terms;
        let cobar = cobar_coaug_diff(alg, &CobarElement::new(SparseVector::basis(w.clone()), truncation));
        evidence.differentials.push((w.clone(), holim, cobar.terms().clone()));
    }
    for i in 0..=truncation {
        for j in 0..=truncation - i {
            for u in &words[i] {
                for v in &words[j] {
                    let a = tot.element(SparseVector::basis(u.clone()));
                    let b = tot.element(SparseVector::basis(v.clone()));
                    evidence.products.push((u.clone(), v.clone(), tot.mul(&a, &b)?.terms));
                }
            }
        }
    }
    let candidates: Vec<Vec<Sign>> = (0..1usize << truncation)
        .map(|mask| {
            std::iter::once(Sign::PLUS)
                .chain((0..truncation).map(|k| if mask & (1 << k) == 0 { Sign::PLUS } else { Sign::MINUS }))
                .collect()
        })
        .collect();
    for twist in [Twist::None, Twist::Positional] {
        let solutions: Vec<Vec<Sign>> =
            candidates.iter().filter(|signs| intertwines(alg, &evidence, twist, signs)).cloned().collect();
        if let Some(first) = solutions.first() {
            return Ok(IsomorphismCertificate {
                truncation,
                twist,
                signs: first.clone(),
                solutions: solutions.clone(),
                words_checked: evidence.differentials.len(),
                products_checked: evidence.products.len(),
            });
        }
    }
    Err(SimplicialError::NoSignNormalization { truncation })
}
