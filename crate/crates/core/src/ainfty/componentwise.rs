use super::Image;
use crate::graded::{apply_slot, tensor_differential, word_degree, Bialgebra, Sign};
use crate::linear::SparseVector;

fn at<L: Ord + Clone>(maps: &[Vec<Image<L>>], n: usize, j: usize) -> Image<L> {
    maps.get(n).and_then(|m| m.get(j)).cloned().unwrap_or_default()
}

/// Weight-`n` part of `Σₖ (−1)^{k|s|} (outerₙ₋ₖ ⊗ id) innerₖ`, where `s` is
/// the tensor produced by the outer map.
pub fn maps_compose<B: Bialgebra>(
    alg: &B,
    outer: &[Vec<Image<B::Label>>],
    inner: &[Vec<Image<B::Label>>],
    n: usize,
) -> Vec<Image<B::Label>> {
    let sources = inner.first().map_or(0, Vec::len);
    (0..sources)
        .map(|j| {
            let mut out = SparseVector::zero();
            for k in 0..=n {
                for ((i, t), c) in at(inner, k, j).iter() {
                    for ((p, s), c2) in at(outer, n - k, *i).iter() {
                        let sign = Sign::pow(k as i64 * word_degree(alg, s));
                        let mut w = s.clone();
                        w.extend(t.iter().cloned());
                        out.add_term((*p, w), sign.apply(&(c * c2)));
                    }
                }
            }
            out
        })
        .collect()
}

/// Weight-`n` part of the differential of `M ⊗ Cobar(C)` applied to images
/// in map form: `(−1)^{|e|+n} (id ⊗ d)xₙ + Σⱼ (−1)^{|e|+j} (id ⊗ Δⱼ)xₙ₋₁`.
pub fn maps_diff<B: Bialgebra>(alg: &B, x: &[Vec<Image<B::Label>>], target: &[i64], n: usize) -> Vec<Image<B::Label>> {
    let sources = x.first().map_or(0, Vec::len);
    (0..sources)
        .map(|j| {
            let mut out = SparseVector::zero();
            for ((i, t), c) in at(x, n, j).iter() {
                let dt = tensor_differential(alg, &SparseVector::single(t.clone(), c.clone()));
                let sign = Sign::pow(target[*i] + n as i64);
                for (w, c2) in dt.iter() {
                    out.add_term((*i, w.clone()), sign.apply(c2));
                }
            }
            if n >= 2 {
                for ((i, t), c) in at(x, n - 1, j).iter() {
                    let single = SparseVector::single(t.clone(), c.clone());
                    for slot in 1..n {
                        let sign = Sign::pow(target[*i] + slot as i64);
                        for (w, c2) in apply_slot(alg, &single, slot - 1, 0, |l| alg.coproduct(l)).iter() {
                            out.add_term((*i, w.clone()), sign.apply(c2));
                        }
                    }
                }
            }
            out
        })
        .collect()
}
