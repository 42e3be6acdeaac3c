use std::fmt;

use crate::cobar::{diff_tensor, total_degree};
use crate::graded::{Bialgebra, ShowTensor, Sign, Word};
use crate::linear::SparseVector;

/// An element of `Bar(B) = T(B[1])` for `B` the Cobar construction truncated
/// at weight `N`. A bar word `[b₁|…|bₙ]` lists Cobar words `bᵢ`.
#[derive(Clone, PartialEq, Eq)]
pub struct BarElement<L: Ord> {
    terms: SparseVector<Vec<Word<L>>>,
    truncation: usize,
}

impl<L: Ord + Clone> BarElement<L> {
    /// Drops bar words with a letter of Cobar weight above the truncation.
    pub fn new(terms: SparseVector<Vec<Word<L>>>, truncation: usize) -> Self {
        Self { terms: terms.filter(|bw| bw.iter().all(|w| w.len() <= truncation)), truncation }
    }

    pub fn zero(truncation: usize) -> Self {
        Self { terms: SparseVector::zero(), truncation }
    }

    pub fn letter(word: Word<L>, truncation: usize) -> Self {
        Self::new(SparseVector::basis(vec![word]), truncation)
    }

    pub fn terms(&self) -> &SparseVector<Vec<Word<L>>> {
        &self.terms
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// Bar weight: the largest number of letters in a term.
    pub fn weight(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }
}

impl<L: Ord + Clone> BarElement<L> {
    /// Degree of a bar word: `Σ (|bᵢ| − 1)` with `|bᵢ|` the Cobar total degree.
    pub fn word_degree<B: Bialgebra<Label = L>>(alg: &B, bw: &[Word<L>]) -> i64 {
        bw.iter().map(|w| total_degree(alg, w) - 1).sum()
    }

    /// The common degree of all terms, if homogeneous.
    pub fn degree<B: Bialgebra<Label = L>>(&self, alg: &B) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|bw| Self::word_degree(alg, bw));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for BarElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (bw, c) in self.terms.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})[")?;
            for (i, w) in bw.iter().enumerate() {
                if i > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{}", ShowTensor(&SparseVector::basis(w.clone())))?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for BarElement<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BarElement").field("terms", &self.terms).field("truncation", &self.truncation).finish()
    }
}

/// The bar differential: `d_B` and the product `μ` on cogenerators, extended
/// as a coderivation.
///
/// `d[b₁|…|bₙ] = Σᵢ −(−1)^{εᵢ₋₁} [… | d bᵢ | …] + Σᵢ (−1)^{εᵢ} [… | bᵢbᵢ₊₁ | …]`
/// with `εᵢ = Σ_{j≤i} (|bⱼ| − 1)`. Products of weight above `N` vanish.
pub fn bar_diff<B: Bialgebra>(alg: &B, e: &BarElement<B::Label>) -> BarElement<B::Label> {
    let n = e.truncation;
    let mut out = SparseVector::zero();
    for (bw, c) in e.terms.iter() {
        let mut eps = 0i64;
        for i in 0..bw.len() {
            let before = Sign::pow(eps);
            let db = diff_tensor(alg, &SparseVector::basis(bw[i].clone()), n);
            for (w, d) in db.iter() {
                let mut nb = bw.clone();
                nb[i] = w.clone();
                out.add_term(nb, -before.apply(&(c * d)));
            }
            eps += total_degree(alg, &bw[i]) - 1;
            if i + 1 < bw.len() && bw[i].len() + bw[i + 1].len() <= n {
                let mut merged = bw[i].clone();
                merged.extend(bw[i + 1].iter().cloned());
                let mut nb = Vec::with_capacity(bw.len() - 1);
                nb.extend_from_slice(&bw[..i]);
                nb.push(merged);
                nb.extend_from_slice(&bw[i + 2..]);
                out.add_term(nb, Sign::pow(eps).apply(c));
            }
        }
    }
    BarElement { terms: out, truncation: n }
}
