//! The homotopy limit DG-category of a DG-bialgebra.
//!
//! Objects are Maurer-Cartan elements of `Cobar(A)` whose first component
//! is certified invertible. The Hom complex `Hom(a, b)` is the twisted
//! bimodule `_bCobar(A)_a`: the target twists on the left and the source on
//! the right, so that composition is the Cobar product `g∘f = g·f`.

mod cohomology;
#[cfg(test)]
mod tests;

pub use cohomology::{hom_cohomology, words_of_degree, HomCohomology, HomWindow, WindowLeak};

use thiserror::Error;

use crate::cobar::indexed::{check_compose, check_hom_diff, CrossCheck};
use crate::cobar::{cobar_mul, twisted_diff, CobarElement, CobarError, FirstComponent, MaurerCartanElement};
use crate::graded::{Bialgebra, Element};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolimError {
    #[error(transparent)]
    Cobar(#[from] CobarError),
    #[error("first component is not certified invertible")]
    NotInvertible,
    #[error("component of weight {weight} has internal degree {found}, expected {expected}")]
    ComponentDegree { weight: usize, found: i64, expected: i64 },
    #[error("window is not closed under the differential: {0}")]
    WindowNotClosed(String),
}

pub type HolimObject<L> = MaurerCartanElement<L>;

/// The object `(g, 0, 0, …)` of a grouplike `g`.
pub fn character_from_grouplike<B: Bialgebra>(
    alg: &B,
    g: &Element<B::Label>,
    truncation: usize,
) -> Result<HolimObject<B::Label>, HolimError> {
    Ok(MaurerCartanElement::from_grouplike(alg, g, truncation)?)
}

/// Admits a Maurer-Cartan element as an object when its first component
/// comes with invertibility evidence.
pub fn object<L: Ord + Clone>(a: MaurerCartanElement<L>) -> Result<HolimObject<L>, HolimError> {
    match a.first_component() {
        FirstComponent::Unverified => Err(HolimError::NotInvertible),
        _ => Ok(a),
    }
}

/// A homogeneous morphism `source → target` of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolimMorphism<L: Ord> {
    source: HolimObject<L>,
    target: HolimObject<L>,
    degree: i64,
    element: CobarElement<L>,
}

impl<L: Ord + Clone + std::fmt::Display> HolimMorphism<L> {
    /// Validates that the weight-`n` component has internal degree `m − n`.
    pub fn new<B: Bialgebra<Label = L>>(
        alg: &B,
        source: &HolimObject<L>,
        target: &HolimObject<L>,
        degree: i64,
        element: CobarElement<L>,
    ) -> Result<Self, HolimError> {
        element.same_truncation(source.element())?;
        element.same_truncation(target.element())?;
        for (w, _) in element.terms().iter() {
            let found = crate::graded::word_degree(alg, w);
            let expected = degree - w.len() as i64;
            if found != expected {
                return Err(HolimError::ComponentDegree { weight: w.len(), found, expected });
            }
        }
        Ok(Self { source: source.clone(), target: target.clone(), degree, element })
    }

    pub fn identity(object: &HolimObject<L>) -> Self {
        Self {
            source: object.clone(),
            target: object.clone(),
            degree: 0,
            element: CobarElement::one(object.truncation()),
        }
    }
}

impl<L: Ord + Clone> HolimMorphism<L> {
    pub fn source(&self) -> &HolimObject<L> {
        &self.source
    }

    pub fn target(&self) -> &HolimObject<L> {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn element(&self) -> &CobarElement<L> {
        &self.element
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }
}

/// `d(f) = d f + b·f − (−1)^m f·a` for `f : a → b` of degree `m`.
pub fn hom_diff<B: Bialgebra>(alg: &B, f: &HolimMorphism<B::Label>) -> HolimMorphism<B::Label> {
    let element = twisted_diff(alg, &f.element, &f.target, &f.source).expect("validated truncations");
    HolimMorphism { source: f.source.clone(), target: f.target.clone(), degree: f.degree + 1, element }
}

/// The Hom differential together with its componentwise evaluation.
pub fn hom_diff_checked<B: Bialgebra>(alg: &B, f: &HolimMorphism<B::Label>) -> (HolimMorphism<B::Label>, CrossCheck) {
    let df = hom_diff(alg, f);
    let check = check_hom_diff(alg, &f.element, f.source.element(), f.target.element(), &df.element);
    (df, check)
}

/// `g∘f` for `f : a → b` and `g : b → c`.
pub fn compose<L: Ord + Clone>(g: &HolimMorphism<L>, f: &HolimMorphism<L>) -> Result<HolimMorphism<L>, HolimError> {
    if f.target != g.source {
        return Err(CobarError::ObjectMismatch("target of the first morphism is not the source of the second".into()).into());
    }
    Ok(HolimMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        degree: f.degree + g.degree,
        element: cobar_mul(&g.element, &f.element)?,
    })
}

/// Composition together with its componentwise evaluation.
pub fn compose_checked<B: Bialgebra>(
    alg: &B,
    g: &HolimMorphism<B::Label>,
    f: &HolimMorphism<B::Label>,
) -> Result<(HolimMorphism<B::Label>, CrossCheck), HolimError> {
    let gf = compose(g, f)?;
    let check = check_compose(alg, &g.element, &f.element, &gf.element);
    Ok((gf, check))
}
