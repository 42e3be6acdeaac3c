use super::indexed::{self, CrossCheck};
use super::{cobar_diff, cobar_mul, CobarElement, CobarError};
use crate::graded::{as_tensor, coproduct_element, counit_element, diff_element, Bialgebra, Element, ShowTensor, Tensor};
use num_traits::One;

/// What is known about the weight-1 component `a₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FirstComponent {
    /// `a₁` is grouplike, hence invertible.
    Grouplike,
    /// The element is a gauge transform of one with grouplike `a₁`.
    GaugeOfGrouplike,
    /// `a₁ = a'₁b'₁` for two objects with certified first components.
    Product,
    /// Only the Maurer-Cartan equation has been verified.
    Unverified,
}

/// A degree-one element `a` of truncated Cobar with `da + a·a = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaurerCartanElement<L: Ord> {
    element: CobarElement<L>,
    first: FirstComponent,
}

impl<L: Ord + Clone + std::fmt::Display> MaurerCartanElement<L> {
    /// Validates the degree and the Maurer-Cartan equation up to the truncation.
    pub fn new<B: Bialgebra<Label = L>>(alg: &B, element: CobarElement<L>) -> Result<Self, CobarError> {
        Self::with_evidence(alg, element, FirstComponent::Unverified)
    }

    pub(crate) fn with_evidence<B: Bialgebra<Label = L>>(
        alg: &B,
        element: CobarElement<L>,
        first: FirstComponent,
    ) -> Result<Self, CobarError> {
        element.require_degree(alg, 1)?;
        let residual = mc_residual(alg, &element);
        if let Some(n) = residual.weights().into_iter().next() {
            return Err(CobarError::NotMaurerCartan {
                weight: n,
                residual: ShowTensor(&residual.component(n)).to_string(),
            });
        }
        Ok(Self { element, first })
    }

    /// The character `(g, 0, 0, …)` of a grouplike `g`.
    pub fn from_grouplike<B: Bialgebra<Label = L>>(alg: &B, g: &Element<L>, truncation: usize) -> Result<Self, CobarError> {
        let rendered = || g.to_string();
        let tg = as_tensor(g);
        let grouplike = diff_element(alg, g).is_zero()
            && coproduct_element(alg, g) == crate::graded::concat(&tg, &tg)
            && counit_element(alg, g).is_one();
        if !grouplike {
            return Err(CobarError::NotGrouplike(rendered()));
        }
        Self::with_evidence(alg, CobarElement::from_element(g, truncation), FirstComponent::Grouplike)
    }

    /// The distinguished object `𝕀 = (1_A, 0, 0, …)`.
    pub fn unit_object<B: Bialgebra<Label = L>>(alg: &B, truncation: usize) -> Self {
        Self::from_grouplike(alg, &alg.unit(), truncation).expect("the unit is grouplike")
    }

}

impl<L: Ord + Clone> MaurerCartanElement<L> {
    /// The zero Maurer-Cartan element; not an object of the homotopy limit
    /// since `a₁ = 0` is not invertible.
    pub fn zero(truncation: usize) -> Self {
        Self { element: CobarElement::zero(truncation), first: FirstComponent::Unverified }
    }

    pub fn element(&self) -> &CobarElement<L> {
        &self.element
    }

    pub fn first_component(&self) -> FirstComponent {
        self.first
    }

    pub fn truncation(&self) -> usize {
        self.element.truncation()
    }

    pub fn component(&self, n: usize) -> Tensor<L> {
        self.element.component(n)
    }
}

/// `d(a) + a·a`.
pub fn mc_residual<B: Bialgebra>(alg: &B, a: &CobarElement<B::Label>) -> CobarElement<B::Label> {
    &cobar_diff(alg, a) + &cobar_mul(a, a).expect("same truncation")
}

#[derive(Clone, Debug)]
pub struct McReport<L: Ord> {
    /// Residual component in each weight `0..=N`.
    pub residuals: Vec<Tensor<L>>,
    /// Whether every term has total degree 1.
    pub degree_ok: bool,
    /// Comparison with the componentwise formulation.
    pub indexed: CrossCheck,
}

impl<L: Ord + Clone> McReport<L> {
    pub fn is_mc(&self) -> bool {
        self.degree_ok && self.residuals.iter().all(Tensor::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(usize, &Tensor<L>)> {
        self.residuals.iter().enumerate().find(|(_, r)| !r.is_zero())
    }
}

/// Residuals of the Maurer-Cartan equation per weight, together with an
/// independent evaluation through the componentwise equations.
pub fn mc_check<B: Bialgebra>(alg: &B, a: &CobarElement<B::Label>) -> McReport<B::Label> {
    let residual = mc_residual(alg, a);
    let residuals = (0..=a.truncation()).map(|n| residual.component(n)).collect();
    McReport {
        residuals,
        degree_ok: a.require_degree(alg, 1).is_ok(),
        indexed: indexed::check_mc_equations(alg, a, &residual),
    }
}
