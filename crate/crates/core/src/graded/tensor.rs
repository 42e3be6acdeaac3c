use num_traits::{One, Zero};
use thiserror::Error;

use super::{Bialgebra, Element, Sign, Tensor, Word};
use crate::linear::{Rational, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{op} index {index} out of range for weight {weight}")]
    OutOfRange { op: &'static str, index: usize, weight: usize },
}

pub fn word_degree<B: Bialgebra>(alg: &B, word: &[B::Label]) -> i64 {
    word.iter().map(|l| alg.degree(l)).sum()
}

/// Degree of a homogeneous element, `None` for zero or mixed degrees.
pub fn element_degree<B: Bialgebra>(alg: &B, e: &Element<B::Label>) -> Option<i64> {
    homogeneous(e.keys().map(|l| alg.degree(l)))
}

/// Internal degree of a homogeneous tensor, `None` for zero or mixed degrees.
pub fn tensor_degree<B: Bialgebra>(alg: &B, t: &Tensor<B::Label>) -> Option<i64> {
    homogeneous(t.keys().map(|w| word_degree(alg, w)))
}

fn homogeneous(mut degrees: impl Iterator<Item = i64>) -> Option<i64> {
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

pub fn scalar<L: Ord + Clone>(c: Rational) -> Tensor<L> {
    SparseVector::single(Vec::new(), c)
}

/// Views an element of `A` as a combination of weight-1 words.
pub fn as_tensor<L: Ord + Clone>(e: &Element<L>) -> Tensor<L> {
    e.map_keys(|l| vec![l.clone()])
}

pub fn word<L: Clone>(letters: &[L]) -> Word<L> {
    letters.to_vec()
}

pub fn mul_elements<B: Bialgebra>(alg: &B, a: &Element<B::Label>, b: &Element<B::Label>) -> Element<B::Label> {
    let mut out = SparseVector::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_scaled(&alg.product(x, y), &(c * d));
        }
    }
    out
}

pub fn diff_element<B: Bialgebra>(alg: &B, a: &Element<B::Label>) -> Element<B::Label> {
    a.map_linear(|l| alg.differential(l))
}

pub fn coproduct_element<B: Bialgebra>(alg: &B, a: &Element<B::Label>) -> Tensor<B::Label> {
    a.map_linear(|l| alg.coproduct(l))
}

pub fn counit_element<B: Bialgebra>(alg: &B, a: &Element<B::Label>) -> Rational {
    a.iter().fold(Rational::zero(), |acc, (l, c)| acc + c * alg.counit(l))
}

/// Concatenation of words, bilinearly extended. No sign is introduced.
pub fn concat<L: Ord + Clone>(x: &Tensor<L>, y: &Tensor<L>) -> Tensor<L> {
    let mut out = SparseVector::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            let mut w = u.clone();
            w.extend(v.iter().cloned());
            out.add_term(w, c * d);
        }
    }
    out
}

/// Product in the algebra `A^{⊗n}`: `(x₁⊗…⊗xₙ)(y₁⊗…⊗yₙ) = ± x₁y₁⊗…⊗xₙyₙ`,
/// the sign coming from moving each `y_j` past `x_{j+1} … x_n`.
/// Pairs of words of different weight contribute nothing.
pub fn slot_product<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, y: &Tensor<B::Label>) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            if u.len() != v.len() {
                continue;
            }
            out.add_scaled(&slot_product_words(alg, u, v), &(c * d));
        }
    }
    out
}

pub fn slot_product_words<B: Bialgebra>(alg: &B, u: &[B::Label], v: &[B::Label]) -> Tensor<B::Label> {
    let n = u.len();
    let du: Vec<i64> = u.iter().map(|l| alg.degree(l)).collect();
    let mut sign = Sign::PLUS;
    for j in 0..n {
        let dv = alg.degree(&v[j]);
        for &d in &du[j + 1..] {
            sign *= Sign::koszul(dv, d);
        }
    }
    let mut acc: Tensor<B::Label> = scalar(sign.to_rational());
    for j in 0..n {
        let prod = as_tensor(&alg.product(&u[j], &v[j]));
        acc = concat(&acc, &prod);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Replaces the letter in position `slot` of every word by `op(letter)`,
/// with the Koszul sign of moving an operator of degree `op_degree` past
/// the letters to its left. `op` may return words of any weight.
pub fn apply_slot<B, F>(alg: &B, x: &Tensor<B::Label>, slot: usize, op_degree: i64, mut op: F) -> Tensor<B::Label>
where
    B: Bialgebra,
    F: FnMut(&B::Label) -> Tensor<B::Label>,
{
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        assert!(slot < w.len(), "slot {slot} out of range for weight {}", w.len());
        let image = op(&w[slot]);
        if image.is_zero() {
            continue;
        }
        let sign = Sign::koszul(op_degree, word_degree(alg, &w[..slot]));
        for (v, d) in image.iter() {
            let mut nw = Vec::with_capacity(w.len() + v.len());
            nw.extend(w[..slot].iter().cloned());
            nw.extend(v.iter().cloned());
            nw.extend(w[slot + 1..].iter().cloned());
            out.add_term(nw, sign.apply(&(c * d)));
        }
    }
    out
}

/// The differential of `A^{⊗n}`: `Σⱼ ± id ⊗ … ⊗ d ⊗ … ⊗ id`.
pub fn tensor_differential<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        let single = SparseVector::single(w.clone(), c.clone());
        for j in 0..w.len() {
            out += &apply_slot(alg, &single, j, 1, |l| as_tensor(&alg.differential(l)));
        }
    }
    out
}

/// The face `∂ⁱₙ : A^{⊗n} → A^{⊗n+1}`: unit insertion for `i = 0` and
/// `i = n+1`, the coproduct in slot `i` otherwise.
pub fn apply_face<B: Bialgebra>(alg: &B, w: &[B::Label], i: usize) -> Result<Tensor<B::Label>, IndexError> {
    let n = w.len();
    if i > n + 1 {
        return Err(IndexError::OutOfRange { op: "face", index: i, weight: n });
    }
    let single: Tensor<B::Label> = SparseVector::basis(w.to_vec());
    let unit = as_tensor(&alg.unit());
    Ok(if i == 0 {
        concat(&unit, &single)
    } else if i == n + 1 {
        concat(&single, &unit)
    } else {
        apply_slot(alg, &single, i - 1, 0, |l| alg.coproduct(l))
    })
}

/// The degeneracy `sⁱₙ : A^{⊗n} → A^{⊗n−1}`: the counit in slot `i`.
pub fn apply_degeneracy<B: Bialgebra>(alg: &B, w: &[B::Label], i: usize) -> Result<Tensor<B::Label>, IndexError> {
    let n = w.len();
    if i >= n {
        return Err(IndexError::OutOfRange { op: "degeneracy", index: i, weight: n });
    }
    let single: Tensor<B::Label> = SparseVector::basis(w.to_vec());
    Ok(apply_slot(alg, &single, i, 0, |l| scalar(alg.counit(l))))
}

/// Linear extension of a face to tensors whose words all have the same weight.
pub fn face_tensor<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, i: usize) -> Result<Tensor<B::Label>, IndexError> {
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&apply_face(alg, w, i)?, c);
    }
    Ok(out)
}

pub fn degeneracy_tensor<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, i: usize) -> Result<Tensor<B::Label>, IndexError> {
    let mut out = SparseVector::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&apply_degeneracy(alg, w, i)?, c);
    }
    Ok(out)
}

/// Iterated coproduct `Δ⁽ᵏ⁾ : A → A^{⊗k}`, iterating on the left factor.
/// `k = 0` is the counit and `k = 1` the identity.
pub fn iterated_coproduct<B: Bialgebra>(alg: &B, a: &B::Label, k: usize) -> Tensor<B::Label> {
    match k {
        0 => scalar(alg.counit(a)),
        1 => SparseVector::basis(vec![a.clone()]),
        _ => {
            let mut acc = alg.coproduct(a);
            for _ in 2..k {
                acc = apply_slot(alg, &acc, 0, 0, |l| alg.coproduct(l));
            }
            acc
        }
    }
}

/// Iterated coproduct applied to every letter of a word and interleaved:
/// the `k` tensor factors of `w` each of weight `w.len()`, in the order
/// they appear as `Δ⁽ᵏ⁾(w₁) ⊗ … ⊗ Δ⁽ᵏ⁾(wₙ)` regrouped so that factor `i`
/// is `w₁⁽ⁱ⁾ ⊗ … ⊗ wₙ⁽ⁱ⁾`. This is `Δ⁽ᵏ⁾` of the algebra `A^{⊗n}`.
pub fn iterated_coproduct_word<B: Bialgebra>(alg: &B, w: &[B::Label], k: usize) -> SparseVector<Vec<Word<B::Label>>> {
    let mut acc: SparseVector<Vec<Word<B::Label>>> = SparseVector::basis(vec![Vec::new(); k]);
    for (pos, letter) in w.iter().enumerate() {
        let pieces = iterated_coproduct(alg, letter, k);
        let mut next = SparseVector::zero();
        for (groups, c) in acc.iter() {
            // piece i moves past groups i+1..k
            for (piece, d) in pieces.iter() {
                let mut sign = Sign::PLUS;
                for i in 0..k {
                    let later: i64 = groups[i + 1..].iter().map(|g| word_degree(alg, g)).sum();
                    sign *= Sign::koszul(alg.degree(&piece[i]), later);
                }
                let mut ng = groups.clone();
                for i in 0..k {
                    ng[i].push(piece[i].clone());
                }
                next.add_term(ng, sign.apply(&(c * d)));
            }
        }
        acc = next;
        debug_assert!(acc.keys().all(|g| g.iter().all(|x| x.len() == pos + 1)));
    }
    acc
}

pub fn one<L: Ord + Clone>() -> Tensor<L> {
    scalar(Rational::one())
}
