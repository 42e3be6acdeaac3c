//! Tensor products of homotopy characters and multibraces on `Cobar(A)`.
//!
//! All formulas act on Cobar words in the letter model (`[a₁|…|aₙ]` with
//! unsigned concatenation), where the tensor formulas hold verbatim with
//! no signs. `tensor_left` is the composition sum of right multibraces
//! `{a_{i₁}, …, a_{i_k}} b_k` and `tensor_right` the sum of left
//! multibraces `a_k {b_{i₁}, …, b_{i_k}}`.

mod bar;
mod braces;
mod morphism;

pub use bar::{bar_diff, BarElement};
pub use braces::{
    brace_left_tensor, brace_right_tensor, compositions, increasing_slots, letterwise, letterwise_product,
    multibrace_left, multibrace_right, pattern_coproduct, pattern_coproduct_word,
};
pub use morphism::{
    all_sign_assignments, morphism_tensor, sign_search_morphism_tensor, FamilySign, MorphismPair, SignAssignment,
    SignSearchReport,
};

use std::fmt;

use thiserror::Error;

use crate::cobar::{CobarElement, CobarError, FirstComponent, MaurerCartanElement};
use crate::graded::{concat, Bialgebra, Tensor};
use crate::linear::SparseVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error(transparent)]
    Cobar(#[from] CobarError),
}

/// The two tensor products of characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `Σ (a_{i₁}⊗…⊗a_{i_k})(Δ^{i₁−1}⊗…⊗Δ^{i_k−1})(b_k)`
    Left,
    /// `Σ (Δ^{i₁−1}⊗…⊗Δ^{i_k−1})(a_k)(b_{i₁}⊗…⊗b_{i_k})`
    Right,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Left => "left",
            Variant::Right => "right",
        })
    }
}

fn row<L: Ord + Clone>(x: &CobarElement<L>, parts: &[usize]) -> Tensor<L> {
    parts.iter().fold(crate::graded::one(), |acc, &i| concat(&acc, &x.component(i)))
}

/// Weight-`n` component of `a ⊗ b`, evaluated directly from the formula.
pub fn tensor_component<B: Bialgebra>(
    alg: &B,
    variant: Variant,
    a: &CobarElement<B::Label>,
    b: &CobarElement<B::Label>,
    n: usize,
) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for parts in compositions(n) {
        let k = parts.len();
        out += &match variant {
            Variant::Left => letterwise(alg, &row(a, &parts), &pattern_coproduct(alg, &b.component(k), &parts)),
            Variant::Right => letterwise(alg, &pattern_coproduct(alg, &a.component(k), &parts), &row(b, &parts)),
        };
    }
    out
}

/// `a ⊗ b` as a Cobar element, without the Maurer-Cartan check.
pub fn tensor_raw<B: Bialgebra>(
    alg: &B,
    variant: Variant,
    a: &CobarElement<B::Label>,
    b: &CobarElement<B::Label>,
) -> Result<CobarElement<B::Label>, MonoidalError> {
    let n = a.truncation();
    if b.truncation() != n {
        return Err(CobarError::TruncationMismatch(n, b.truncation()).into());
    }
    let mut terms = SparseVector::zero();
    for w in 0..=n {
        terms += &tensor_component(alg, variant, a, b, w);
    }
    Ok(CobarElement::new(terms, n))
}

/// The same element assembled from multibraces: right braces for
/// [`Variant::Left`], left braces for [`Variant::Right`].
pub fn tensor_via_braces<B: Bialgebra>(
    alg: &B,
    variant: Variant,
    a: &CobarElement<B::Label>,
    b: &CobarElement<B::Label>,
) -> Result<CobarElement<B::Label>, MonoidalError> {
    let n = a.truncation();
    if b.truncation() != n {
        return Err(CobarError::TruncationMismatch(n, b.truncation()).into());
    }
    let mut terms = SparseVector::zero();
    for w in 0..=n {
        for parts in compositions(w) {
            let k = parts.len();
            terms += &match variant {
                Variant::Left => {
                    let xs: Vec<_> = parts.iter().map(|&i| a.component(i)).collect();
                    brace_right_tensor(alg, &xs, &b.component(k))
                }
                Variant::Right => {
                    let ys: Vec<_> = parts.iter().map(|&i| b.component(i)).collect();
                    brace_left_tensor(alg, &a.component(k), &ys)
                }
            };
        }
    }
    Ok(CobarElement::new(terms, n))
}

/// `a ⊗ b`, validated as a Maurer-Cartan element.
pub fn tensor<B: Bialgebra>(
    alg: &B,
    variant: Variant,
    a: &MaurerCartanElement<B::Label>,
    b: &MaurerCartanElement<B::Label>,
) -> Result<MaurerCartanElement<B::Label>, MonoidalError> {
    let element = tensor_raw(alg, variant, a.element(), b.element())?;
    let evidence = match (a.first_component(), b.first_component()) {
        (FirstComponent::Grouplike, FirstComponent::Grouplike) => FirstComponent::Grouplike,
        (FirstComponent::Unverified, _) | (_, FirstComponent::Unverified) => FirstComponent::Unverified,
        _ => FirstComponent::Product,
    };
    Ok(MaurerCartanElement::with_evidence(alg, element, evidence)?)
}

pub fn tensor_left<B: Bialgebra>(
    alg: &B,
    a: &MaurerCartanElement<B::Label>,
    b: &MaurerCartanElement<B::Label>,
) -> Result<MaurerCartanElement<B::Label>, MonoidalError> {
    tensor(alg, Variant::Left, a, b)
}

pub fn tensor_right<B: Bialgebra>(
    alg: &B,
    a: &MaurerCartanElement<B::Label>,
    b: &MaurerCartanElement<B::Label>,
) -> Result<MaurerCartanElement<B::Label>, MonoidalError> {
    tensor(alg, Variant::Right, a, b)
}

/// Per-weight comparison of `(a⊗b)⊗c` with `a⊗(b⊗c)`.
#[derive(Clone, Debug)]
pub struct AssociativityReport<L: Ord> {
    pub variant: Variant,
    /// `(a⊗b)⊗c − a⊗(b⊗c)` in each weight `0..=N`.
    pub differences: Vec<Tensor<L>>,
}

impl<L: Ord + Clone> AssociativityReport<L> {
    pub fn holds(&self) -> bool {
        self.differences.iter().all(|d| d.is_zero())
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.differences.iter().position(|d| !d.is_zero())
    }
}

pub fn associativity_check<B: Bialgebra>(
    alg: &B,
    a: &MaurerCartanElement<B::Label>,
    b: &MaurerCartanElement<B::Label>,
    c: &MaurerCartanElement<B::Label>,
    variant: Variant,
) -> Result<AssociativityReport<B::Label>, MonoidalError> {
    let ab = tensor_raw(alg, variant, a.element(), b.element())?;
    let bc = tensor_raw(alg, variant, b.element(), c.element())?;
    let left = tensor_raw(alg, variant, &ab, c.element())?;
    let right = tensor_raw(alg, variant, a.element(), &bc)?;
    let diff = &left - &right;
    let differences = (0..=diff.truncation()).map(|n| diff.component(n)).collect();
    Ok(AssociativityReport { variant, differences })
}
