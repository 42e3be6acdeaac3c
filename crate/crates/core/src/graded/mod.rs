//! Graded vector spaces with enumerable bases, tensor words, and
//! differential graded bialgebras.
//!
//! Grading is cohomological: differentials raise degree by one.

mod axioms;
mod exterior;
mod group;
pub mod sign;
mod sweedler;
mod table;
mod tensor;
mod upper_triangular;

pub use axioms::{check_bialgebra_axioms, simplicial_identities_check, words_of_weight, AxiomCheck, AxiomReport, ShowTensor};
pub use exterior::{ExteriorBasis, ExteriorPrimitiveHopf};
pub use group::{FiniteGroupFunctionHopf, GroupElement, GroupError};
pub use sign::Sign;
pub use sweedler::{DgSweedlerHopf, SweedlerBasis};
pub use table::{TableBialgebra, TableBuilder, TableError, TableLabel};
pub use tensor::*;
pub use upper_triangular::{Monomial, UpperTriangularHopf};

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::linear::{Rational, SparseVector};

/// A word `a₁ ⊗ … ⊗ aₙ` of basis labels; the empty word is the unit of `A^{⊗0} = k`.
pub type Word<L> = Vec<L>;

/// An element of `A`.
pub type Element<L> = SparseVector<L>;

/// An element of `⊕ₙ A^{⊗n}`, with each word carrying its own weight.
pub type Tensor<L> = SparseVector<Word<L>>;

/// Bounds for enumerating bases of infinite-dimensional algebras.
///
/// `laurent` bounds the absolute value of Laurent exponents and `poly` bounds
/// polynomial exponents. Finite-dimensional algebras ignore the window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub laurent: i32,
    pub poly: u32,
}

impl Window {
    pub const fn new(laurent: i32, poly: u32) -> Self {
        Self { laurent, poly }
    }
}

impl Default for Window {
    fn default() -> Self {
        Self::new(1, 1)
    }
}

/// A unital, counital differential graded bialgebra over ℚ, given by its
/// structure constants on a basis.
///
/// Implementations must be immutable after construction.
pub trait Bialgebra {
    type Label: Clone + Ord + Hash + Debug + Display;

    fn name(&self) -> String;

    fn degree(&self, label: &Self::Label) -> i64;

    fn unit(&self) -> Element<Self::Label>;

    fn product(&self, a: &Self::Label, b: &Self::Label) -> Element<Self::Label>;

    /// `Δ(a)` as a combination of weight-2 words.
    fn coproduct(&self, a: &Self::Label) -> Tensor<Self::Label>;

    fn counit(&self, a: &Self::Label) -> Rational;

    fn differential(&self, a: &Self::Label) -> Element<Self::Label>;

    /// Basis labels inside `window`; the whole basis when finite-dimensional.
    fn basis(&self, window: &Window) -> Vec<Self::Label>;

    fn is_finite_dimensional(&self) -> bool;
}
