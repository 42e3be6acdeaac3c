use std::fmt;

use super::Image;
use crate::cobar::{diff_tensor, total_degree};
use crate::graded::{Bialgebra, ShowTensor, Sign, Word};
use crate::linear::SparseVector;

/// A term `E_{ij} ⊗ w`: the elementary map `e_j ↦ e_i` tensored with a Cobar word.
pub type MatrixKey<L> = (usize, usize, Word<L>);

/// An element of `Hom(P, Q) ⊗ Cobar(A)` modulo weights above the truncation.
///
/// With `|E_{ij}| = |q_i| − |p_j|`, the product is
/// `(E⊗u)(E'⊗v) = (−1)^{|u|·|E'|} EE' ⊗ uv` and the differential is
/// `d(E⊗w) = (−1)^{|E|} E ⊗ dw`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixCobar<L: Ord> {
    pub(crate) terms: SparseVector<MatrixKey<L>>,
    pub(crate) truncation: usize,
}

impl<L: Ord + Clone> MatrixCobar<L> {
    pub fn new(terms: SparseVector<MatrixKey<L>>, truncation: usize) -> Self {
        Self { terms: terms.filter(|(_, _, w)| w.len() <= truncation), truncation }
    }

    pub fn zero(truncation: usize) -> Self {
        Self { terms: SparseVector::zero(), truncation }
    }

    pub fn identity(dimension: usize, truncation: usize) -> Self {
        let terms = (0..dimension).map(|i| ((i, i, Vec::new()), crate::linear::int(1))).collect();
        Self { terms, truncation }
    }

    pub fn terms(&self) -> &SparseVector<MatrixKey<L>> {
        &self.terms
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Terms of tensor weight `n`.
    pub fn weight(&self, n: usize) -> Self {
        Self { terms: self.terms.filter(|(_, _, w)| w.len() == n), truncation: self.truncation }
    }

    pub fn scale(&self, c: &crate::linear::Rational) -> Self {
        Self { terms: self.terms.scale(c), truncation: self.truncation }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms += &other.terms;
        Self { terms, truncation: self.truncation }
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for MatrixCobar<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((i, j, w), c) in self.terms.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let word = ShowTensor(&SparseVector::single(w.clone(), c.clone())).to_string();
            write!(f, "E{i},{j}·({word})")?;
        }
        Ok(())
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for MatrixCobar<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MatrixCobar").field("terms", &self.terms).field("truncation", &self.truncation).finish()
    }
}

/// Degrees of the basis of the three spaces involved in a product.
pub(crate) fn product<B: Bialgebra>(
    alg: &B,
    x: &MatrixCobar<B::Label>,
    y: &MatrixCobar<B::Label>,
    middle: &[i64],
    source: &[i64],
) -> MatrixCobar<B::Label> {
    let n = x.truncation;
    let mut out = SparseVector::zero();
    for ((i, j, u), c) in x.terms.iter() {
        let du = total_degree(alg, u);
        for ((k, l, v), c2) in y.terms.iter() {
            if j != k || u.len() + v.len() > n {
                continue;
            }
            let sign = Sign::pow(du * (middle[*k] - source[*l]));
            let mut w = u.clone();
            w.extend(v.iter().cloned());
            out.add_term((*i, *l, w), sign.apply(&(c * c2)));
        }
    }
    MatrixCobar { terms: out, truncation: n }
}

pub(crate) fn differential<B: Bialgebra>(
    alg: &B,
    x: &MatrixCobar<B::Label>,
    target: &[i64],
    source: &[i64],
) -> MatrixCobar<B::Label> {
    let n = x.truncation;
    let mut out = SparseVector::zero();
    for ((i, j, w), c) in x.terms.iter() {
        let dw = diff_tensor(alg, &SparseVector::single(w.clone(), c.clone()), n);
        let sign = Sign::pow(target[*i] - source[*j]);
        for (v, c2) in dw.iter() {
            out.add_term((*i, *j, v.clone()), sign.apply(c2));
        }
    }
    MatrixCobar { terms: out, truncation: n }
}

/// `X·(e_j ⊗ 1)` for every source basis vector `e_j`.
pub(crate) fn act_on_basis<B: Bialgebra>(
    alg: &B,
    x: &MatrixCobar<B::Label>,
    source: &[i64],
) -> Vec<Image<B::Label>> {
    let mut out = vec![SparseVector::zero(); source.len()];
    for ((i, j, w), c) in x.terms.iter() {
        let sign = Sign::pow(total_degree(alg, w) * source[*j]);
        out[*j].add_term((*i, w.clone()), sign.apply(c));
    }
    out
}

/// Inverse of [`act_on_basis`].
pub(crate) fn from_images<B: Bialgebra>(
    alg: &B,
    images: &[Image<B::Label>],
    source: &[i64],
    truncation: usize,
) -> MatrixCobar<B::Label> {
    let mut terms = SparseVector::zero();
    for (j, image) in images.iter().enumerate() {
        for ((i, w), c) in image.iter() {
            let sign = Sign::pow(total_degree(alg, w) * source[j]);
            terms.add_term((*i, j, w.clone()), sign.apply(c));
        }
    }
    MatrixCobar::new(terms, truncation)
}
