use crate::cobar::CobarElement;
use crate::graded::{concat, iterated_coproduct, Bialgebra, Tensor, Word};
use crate::linear::{Rational, SparseVector};

/// All compositions `(i₁, …, i_k)` of `n` into positive parts, in
/// lexicographic order. The empty composition is the only one of 0.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Increasing `k`-subsets of `0..n`.
pub fn increasing_slots(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..=n - (k - acc.len()) {
            acc.push(i);
            go(i + 1, n, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// `(Δ^{r₁−1} ⊗ … ⊗ Δ^{r_k−1})` on a word of length `k`.
pub fn pattern_coproduct_word<B: Bialgebra>(alg: &B, w: &[B::Label], arities: &[usize]) -> Tensor<B::Label> {
    assert_eq!(w.len(), arities.len(), "one arity per letter");
    let mut out: Tensor<B::Label> = SparseVector::basis(Vec::new());
    for (l, &r) in w.iter().zip(arities) {
        out = concat(&out, &iterated_coproduct(alg, l, r));
        if out.is_zero() {
            break;
        }
    }
    out
}

/// [`pattern_coproduct_word`] on the words of length `arities.len()`;
/// other words are dropped.
pub fn pattern_coproduct<B: Bialgebra>(alg: &B, t: &Tensor<B::Label>, arities: &[usize]) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (w, c) in t.iter() {
        if w.len() == arities.len() {
            out.add_scaled(&pattern_coproduct_word(alg, w, arities), c);
        }
    }
    out
}

/// Letterwise product of two Cobar words of equal length. In the letter
/// model the brace and tensor formulas hold without signs.
pub fn letterwise_product<B: Bialgebra>(alg: &B, u: &[B::Label], v: &[B::Label]) -> Tensor<B::Label> {
    assert_eq!(u.len(), v.len());
    let mut out: Tensor<B::Label> = SparseVector::basis(Vec::new());
    for (x, y) in u.iter().zip(v) {
        out = concat(&out, &crate::graded::as_tensor(&alg.product(x, y)));
        if out.is_zero() {
            break;
        }
    }
    out
}

/// Bilinear [`letterwise_product`]; pairs of different length contribute nothing.
pub fn letterwise<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, y: &Tensor<B::Label>) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (u, c) in x.iter() {
        for (v, d) in y.iter() {
            if u.len() == v.len() {
                out.add_scaled(&letterwise_product(alg, u, v), &(c * d));
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Side {
    /// `Δ^{|yⱼ|−1}(c) · yⱼ`
    Left,
    /// `xⱼ · Δ^{|xⱼ|−1}(c)`
    Right,
}

fn brace_words<B: Bialgebra>(alg: &B, host: &[B::Label], inserted: &[&Word<B::Label>], side: Side) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for slots in increasing_slots(host.len(), inserted.len()) {
        let mut term: Tensor<B::Label> = SparseVector::basis(Vec::new());
        let mut next = 0;
        for (s, c) in host.iter().enumerate() {
            let piece = if next < slots.len() && slots[next] == s {
                let w = inserted[next];
                next += 1;
                let expanded = iterated_coproduct(alg, c, w.len());
                let w = SparseVector::basis(w.clone());
                match side {
                    Side::Left => letterwise(alg, &expanded, &w),
                    Side::Right => letterwise(alg, &w, &expanded),
                }
            } else {
                SparseVector::basis(vec![c.clone()])
            };
            term = concat(&term, &piece);
            if term.is_zero() {
                break;
            }
        }
        out += &term;
    }
    out
}

/// Left multibrace `E_{1,k}(x; y₁, …, y_k) = x{y₁, …, y_k}` on tensors.
pub fn brace_left_tensor<B: Bialgebra>(alg: &B, x: &Tensor<B::Label>, ys: &[Tensor<B::Label>]) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (xw, xc) in x.iter() {
        for_each_choice(ys, |words, c| {
            out.add_scaled(&brace_words(alg, xw, words, Side::Left), &(xc * &c));
        });
    }
    out
}

/// Right multibrace `E_{k,1}(x₁, …, x_k; y) = {x₁, …, x_k}y` on tensors.
pub fn brace_right_tensor<B: Bialgebra>(alg: &B, xs: &[Tensor<B::Label>], y: &Tensor<B::Label>) -> Tensor<B::Label> {
    let mut out = SparseVector::zero();
    for (yw, yc) in y.iter() {
        for_each_choice(xs, |words, c| {
            out.add_scaled(&brace_words(alg, yw, words, Side::Right), &(yc * &c));
        });
    }
    out
}

/// `x{y₁, …, y_k}` in truncated Cobar, truncated at `x`'s truncation.
/// Vanishes on words of `x` shorter than `k`.
pub fn multibrace_left<B: Bialgebra>(
    alg: &B,
    x: &CobarElement<B::Label>,
    ys: &[CobarElement<B::Label>],
) -> CobarElement<B::Label> {
    let ys: Vec<_> = ys.iter().map(|y| y.terms().clone()).collect();
    CobarElement::new(brace_left_tensor(alg, x.terms(), &ys), x.truncation())
}

/// `{x₁, …, x_k}y` in truncated Cobar, truncated at `y`'s truncation.
pub fn multibrace_right<B: Bialgebra>(
    alg: &B,
    xs: &[CobarElement<B::Label>],
    y: &CobarElement<B::Label>,
) -> CobarElement<B::Label> {
    let xs: Vec<_> = xs.iter().map(|x| x.terms().clone()).collect();
    CobarElement::new(brace_right_tensor(alg, &xs, y.terms()), y.truncation())
}

/// Calls `f` with one word from each tensor and the product of coefficients.
fn for_each_choice<L: Ord + Clone>(ts: &[Tensor<L>], mut f: impl FnMut(&[&Word<L>], Rational)) {
    fn go<'a, L: Ord + Clone>(
        ts: &'a [Tensor<L>],
        acc: &mut Vec<&'a Word<L>>,
        coeff: Rational,
        f: &mut dyn FnMut(&[&Word<L>], Rational),
    ) {
        match ts.split_first() {
            None => f(acc, coeff),
            Some((t, rest)) => {
                for (w, c) in t.iter() {
                    acc.push(w);
                    go(rest, acc, &coeff * c, f);
                    acc.pop();
                }
            }
        }
    }
    go(ts, &mut Vec::with_capacity(ts.len()), crate::linear::int(1), &mut f);
}
