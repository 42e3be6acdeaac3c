use super::{cobar_mul, total_degree, twisted_diff, CobarElement, CobarError, MaurerCartanElement};
use crate::graded::{Bialgebra, Sign, ShowTensor};
use crate::linear::SparseVector;

/// The CDG-morphism `(id, β) : _aCobar(A)_a → _bCobar(A)_b` between
/// twisted algebras with zero curvature.
#[derive(Clone, Debug)]
pub struct CdgMorphism<L: Ord> {
    pub source: MaurerCartanElement<L>,
    pub target: MaurerCartanElement<L>,
    pub change: CobarElement<L>,
}

impl<L: Ord + Clone> CdgMorphism<L> {
    /// The morphism with change of curvature `β = a − b`, which is the one
    /// satisfying both identities.
    pub fn canonical(source: &MaurerCartanElement<L>, target: &MaurerCartanElement<L>) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            change: source.element() - target.element(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgReport {
    pub samples: usize,
    /// First sample `x` with `d_a(x) ≠ d_b(x) + [β, x]`, and the residual.
    pub curve_failure: Option<(String, String)>,
    /// `d_b(β) + β²`, rendered; zero when the identity holds.
    pub curve2_residual: String,
    pub curve2_ok: bool,
}

impl CdgReport {
    pub fn passed(&self) -> bool {
        self.curve_failure.is_none() && self.curve2_ok
    }
}

/// Graded commutator `[β, x] = βx − (−1)^{|x|} xβ` for `β` of degree 1.
fn bracket<B: Bialgebra>(alg: &B, beta: &CobarElement<B::Label>, x: &CobarElement<B::Label>) -> Result<CobarElement<B::Label>, CobarError> {
    let n = x.truncation();
    let mut signed = SparseVector::zero();
    for (w, c) in x.terms().iter() {
        signed.add_term(w.clone(), Sign::pow(total_degree(alg, w)).apply(c));
    }
    let signed = CobarElement::new(signed, n);
    Ok(&cobar_mul(beta, x)? - &cobar_mul(&signed, beta)?)
}

/// Checks `d_a(x) = d_b(x) + [β, x]` on the samples and
/// `0 = d_b(β) + β²` (both curvatures zero).
pub fn cdg_morphism_check<B: Bialgebra>(
    alg: &B,
    m: &CdgMorphism<B::Label>,
    samples: &[CobarElement<B::Label>],
) -> Result<CdgReport, CobarError> {
    let mut curve_failure = None;
    for x in samples {
        let lhs = twisted_diff(alg, x, &m.source, &m.source)?;
        let rhs = &twisted_diff(alg, x, &m.target, &m.target)? + &bracket(alg, &m.change, x)?;
        let residual = &lhs - &rhs;
        if !residual.is_zero() {
            curve_failure = Some((x.to_string(), ShowTensor(residual.terms()).to_string()));
            break;
        }
    }
    let curve2 = &twisted_diff(alg, &m.change, &m.target, &m.target)? + &cobar_mul(&m.change, &m.change)?;
    Ok(CdgReport {
        samples: samples.len(),
        curve_failure,
        curve2_ok: curve2.is_zero(),
        curve2_residual: curve2.to_string(),
    })
}

/// `(id, γ) ∘ (id, β) = (id, β + γ)`.
pub fn cdg_compose<L: Ord + Clone>(second: &CdgMorphism<L>, first: &CdgMorphism<L>) -> Result<CdgMorphism<L>, CobarError> {
    if first.target != second.source {
        return Err(CobarError::ObjectMismatch("middle objects differ".into()));
    }
    Ok(CdgMorphism {
        source: first.source.clone(),
        target: second.target.clone(),
        change: first.change.checked_add(&second.change)?,
    })
}
