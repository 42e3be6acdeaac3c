//! The Cobar construction of a DG-bialgebra, truncated in tensor weight.
//!
//! A word `[a₁|…|aₙ]` is stored as the tensor word `a₁⊗…⊗aₙ`; letter `aᵢ`
//! has total degree `|aᵢ| + 1`. On a generator the differential is
//!
//! ```text
//! d[a] = −[d_A a] − Σ (−1)^{|a'|} [a'|a'']
//! ```
//!
//! extended to words as a degree-one derivation. The product is
//! concatenation. Everything of weight above the truncation `N` is
//! discarded, which is a quotient of DG-algebras since both operations are
//! weight-nondecreasing.

mod cdg;
mod element;
mod gauge;
pub mod indexed;
mod mc;
mod twisted;

pub use cdg::{cdg_compose, cdg_morphism_check, CdgMorphism, CdgReport};
pub use element::{CobarElement, CobarError};
pub use gauge::{gauge_act, gauge_isomorphism_witness, inverse, GaugeWitness};
pub use mc::{mc_check, mc_residual, FirstComponent, MaurerCartanElement, McReport};
pub use twisted::{cobar_coaug_diff, twisted_diff, twisted_diff_raw};

use crate::graded::{word_degree, Bialgebra, Sign, Tensor};
use crate::linear::SparseVector;

/// Total degree of a Cobar word: internal degree plus weight.
pub fn total_degree<B: Bialgebra>(alg: &B, w: &[B::Label]) -> i64 {
    word_degree(alg, w) + w.len() as i64
}

/// Cobar differential on raw tensors, discarding weights above `n`.
pub fn diff_tensor<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, n: usize) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        let mut passed = 0i64;
        for j in 0..w.len() {
            let sign = Sign::pow(passed);
            let letter = &w[j];
            for (l, e) in alg.differential(letter).iter() {
                let mut nw = w.clone();
                nw[j] = l.clone();
                out.add_term(nw, -sign.apply(&(c * e)));
            }
            if w.len() < n {
                for (pair, e) in alg.coproduct(letter).iter() {
                    let s = sign * Sign::pow(alg.degree(&pair[0]));
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.extend_from_slice(&w[..j]);
                    nw.extend_from_slice(pair);
                    nw.extend_from_slice(&w[j + 1..]);
                    out.add_term(nw, -s.apply(&(c * e)));
                }
            }
            passed += alg.degree(letter) + 1;
        }
    }
    out
}

/// Concatenation product on raw tensors, discarding weights above `n`.
pub fn mul_tensor<L: Ord + Clone>(x: &Tensor<L>, y: &Tensor<L>, n: usize) -> Tensor<L> {
    let mut out = SparseVector::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            if u.len() + v.len() > n {
                continue;
            }
            let mut w = Vec::with_capacity(u.len() + v.len());
            w.extend_from_slice(u);
            w.extend_from_slice(v);
            out.add_term(w, c * d);
        }
    }
    out
}

pub fn truncate<L: Ord + Clone>(x: &Tensor<L>, n: usize) -> Tensor<L> {
    x.filter(|w| w.len() <= n)
}

pub fn cobar_diff<B: Bialgebra>(alg: &B, x: &CobarElement<B::Label>) -> CobarElement<B::Label> {
    CobarElement::new(diff_tensor(alg, x.terms(), x.truncation()), x.truncation())
}

pub fn cobar_mul<L: Ord + Clone>(x: &CobarElement<L>, y: &CobarElement<L>) -> Result<CobarElement<L>, CobarError> {
    let n = x.same_truncation(y)?;
    Ok(CobarElement::new(mul_tensor(x.terms(), y.terms(), n), n))
}

#[cfg(test)]
mod tests;
