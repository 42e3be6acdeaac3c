use super::{diff_tensor, mul_tensor, total_degree, CobarElement, CobarError, MaurerCartanElement};
use crate::graded::{as_tensor, Bialgebra, Sign};
use crate::linear::SparseVector;

/// `d(x) + c₁·x − (−1)^{|x|} x·c₂`, applied term by term, for arbitrary
/// `c₁`, `c₂` (no Maurer-Cartan validation).
pub fn twisted_diff_raw<B: Bialgebra>(
    alg: &B,
    x: &CobarElement<B::Label>,
    left: &CobarElement<B::Label>,
    right: &CobarElement<B::Label>,
) -> Result<CobarElement<B::Label>, CobarError> {
    let n = x.same_truncation(left)?;
    x.same_truncation(right)?;
    let mut out = diff_tensor(alg, x.terms(), n);
    out += &mul_tensor(left.terms(), x.terms(), n);
    for (w, c) in x.terms().iter() {
        let sign = Sign::pow(total_degree(alg, w) + 1);
        let single = SparseVector::single(w.clone(), sign.apply(c));
        out += &mul_tensor(&single, right.terms(), n);
    }
    Ok(CobarElement::new(out, n))
}

/// The differential of the bimodule `_{c₁}Cobar(A)_{c₂}`.
pub fn twisted_diff<B: Bialgebra>(
    alg: &B,
    x: &CobarElement<B::Label>,
    left: &MaurerCartanElement<B::Label>,
    right: &MaurerCartanElement<B::Label>,
) -> Result<CobarElement<B::Label>, CobarError> {
    twisted_diff_raw(alg, x, left.element(), right.element())
}

/// The coaugmented Cobar differential: the Cobar differential twisted on
/// both sides by `1_A`. On a generator of degree 0 it is
/// `−Δ(z) + 1⊗z + z⊗1`.
pub fn cobar_coaug_diff<B: Bialgebra>(alg: &B, x: &CobarElement<B::Label>) -> CobarElement<B::Label> {
    let one = CobarElement::new(as_tensor(&alg.unit()), x.truncation());
    twisted_diff_raw(alg, x, &one, &one).expect("same truncation")
}
