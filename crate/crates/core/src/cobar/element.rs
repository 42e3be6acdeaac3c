use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use super::total_degree;
use crate::graded::{as_tensor, Bialgebra, Element, ShowTensor, Tensor};
use crate::linear::{Rational, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CobarError {
    #[error("truncations differ: {0} and {1}")]
    TruncationMismatch(usize, usize),
    #[error("weight-0 component is zero, so the element is not invertible")]
    NotInvertible,
    #[error("element is not homogeneous of total degree {expected}")]
    Degree { expected: i64 },
    #[error("not a Maurer-Cartan element: residual {residual} in weight {weight}")]
    NotMaurerCartan { weight: usize, residual: String },
    #[error("{0} is not grouplike")]
    NotGrouplike(String),
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
}

/// An element of `Cobar(A)` modulo weights above `truncation`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CobarElement<L: Ord> {
    terms: Tensor<L>,
    truncation: usize,
}

impl<L: Ord + Clone> CobarElement<L> {
    /// Wraps a tensor, dropping words longer than `truncation`.
    pub fn new(terms: Tensor<L>, truncation: usize) -> Self {
        let terms = if terms.keys().any(|w| w.len() > truncation) {
            terms.filter(|w| w.len() <= truncation)
        } else {
            terms
        };
        Self { terms, truncation }
    }

    pub fn zero(truncation: usize) -> Self {
        Self { terms: SparseVector::zero(), truncation }
    }

    /// The unit: the empty word.
    pub fn one(truncation: usize) -> Self {
        Self::scalar(Rational::from_integer(1.into()), truncation)
    }

    pub fn scalar(c: Rational, truncation: usize) -> Self {
        Self::new(SparseVector::single(Vec::new(), c), truncation)
    }

    /// An element of `A` placed in weight 1.
    pub fn from_element(e: &Element<L>, truncation: usize) -> Self {
        Self::new(as_tensor(e), truncation)
    }

    pub fn generator(label: L, truncation: usize) -> Self {
        Self::new(SparseVector::basis(vec![label]), truncation)
    }

    pub fn terms(&self) -> &Tensor<L> {
        &self.terms
    }

    pub fn into_terms(self) -> Tensor<L> {
        self.terms
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The weight-`n` component.
    pub fn component(&self, n: usize) -> Tensor<L> {
        self.terms.filter(|w| w.len() == n)
    }

    pub fn weights(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Vec::len).collect()
    }

    pub fn weight0(&self) -> Rational {
        self.terms.get(&Vec::new())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { terms: self.terms.scale(c), truncation: self.truncation }
    }

    /// Reduces to a smaller truncation.
    pub fn retruncate(&self, truncation: usize) -> Self {
        Self::new(self.terms.clone(), truncation.min(self.truncation))
    }

    pub(crate) fn same_truncation(&self, other: &Self) -> Result<usize, CobarError> {
        if self.truncation == other.truncation {
            Ok(self.truncation)
        } else {
            Err(CobarError::TruncationMismatch(self.truncation, other.truncation))
        }
    }

    /// Total degree when homogeneous; `None` for zero or mixed degree.
    pub fn total_degree<B: Bialgebra<Label = L>>(&self, alg: &B) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|w| total_degree(alg, w));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Checks homogeneity of total degree `expected`; zero passes.
    pub fn require_degree<B: Bialgebra<Label = L>>(&self, alg: &B, expected: i64) -> Result<(), CobarError> {
        if self.terms.keys().all(|w| total_degree(alg, w) == expected) {
            Ok(())
        } else {
            Err(CobarError::Degree { expected })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CobarError> {
        let n = self.same_truncation(other)?;
        Ok(Self { terms: &self.terms + &other.terms, truncation: n })
    }
}

/// Addition requires equal truncations and panics otherwise; use
/// [`CobarElement::checked_add`] for a fallible version.
impl<L: Ord + Clone> Add for &CobarElement<L> {
    type Output = CobarElement<L>;
    fn add(self, rhs: Self) -> CobarElement<L> {
        self.checked_add(rhs).expect("adding Cobar elements of different truncation")
    }
}

impl<L: Ord + Clone> Sub for &CobarElement<L> {
    type Output = CobarElement<L>;
    fn sub(self, rhs: Self) -> CobarElement<L> {
        self + &(-rhs)
    }
}

impl<L: Ord + Clone> Neg for &CobarElement<L> {
    type Output = CobarElement<L>;
    fn neg(self) -> CobarElement<L> {
        CobarElement { terms: -&self.terms, truncation: self.truncation }
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for CobarElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ShowTensor(&self.terms))
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for CobarElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CobarElement(N={}, {:?})", self.truncation, self.terms)
    }
}

impl<L: Ord + Clone> CobarElement<L> {
    pub fn is_scalar_multiple_of_one(&self) -> bool {
        self.terms.keys().all(Vec::is_empty) && !self.weight0().is_zero()
    }
}
