use num_traits::{One, Zero};

use super::{cobar_diff, cobar_mul, twisted_diff, CobarElement, CobarError, FirstComponent, MaurerCartanElement};
use crate::graded::Bialgebra;
use crate::linear::Rational;

/// The inverse of `f = λ(1 + u)` with `λ ≠ 0` and `u` of positive weight,
/// `λ⁻¹ Σₖ (−u)ᵏ`, which terminates under truncation.
pub fn inverse<L: Ord + Clone>(f: &CobarElement<L>) -> Result<CobarElement<L>, CobarError> {
    let lambda = f.weight0();
    if lambda.is_zero() {
        return Err(CobarError::NotInvertible);
    }
    let n = f.truncation();
    let inv_lambda = Rational::one() / &lambda;
    let one = CobarElement::one(n);
    let minus_u = &one - &f.scale(&inv_lambda);
    let mut power = one.clone();
    let mut sum = one;
    for _ in 0..n {
        power = cobar_mul(&power, &minus_u)?;
        if power.is_zero() {
            break;
        }
        sum = &sum + &power;
    }
    Ok(sum.scale(&inv_lambda))
}

/// `f.a = f a f⁻¹ + f d(f⁻¹)` for an invertible `f` of total degree 0.
pub fn gauge_act<B: Bialgebra>(
    alg: &B,
    f: &CobarElement<B::Label>,
    a: &MaurerCartanElement<B::Label>,
) -> Result<MaurerCartanElement<B::Label>, CobarError> {
    f.require_degree(alg, 0)?;
    let finv = inverse(f)?;
    let conj = cobar_mul(&cobar_mul(f, a.element())?, &finv)?;
    let gauge = cobar_mul(f, &cobar_diff(alg, &finv))?;
    let evidence = match a.first_component() {
        FirstComponent::Grouplike => FirstComponent::GaugeOfGrouplike,
        other => other,
    };
    MaurerCartanElement::with_evidence(alg, &conj + &gauge, evidence)
}

/// An invertible gauge element viewed as a closed isomorphism `a → f.a`.
#[derive(Clone, Debug)]
pub struct GaugeWitness<L: Ord> {
    pub source: MaurerCartanElement<L>,
    pub target: MaurerCartanElement<L>,
    /// `f`, a morphism `a → f.a`.
    pub morphism: CobarElement<L>,
    /// `f⁻¹`, a morphism `f.a → a`.
    pub inverse: CobarElement<L>,
    pub morphism_closed: bool,
    pub inverse_closed: bool,
    pub two_sided_inverse: bool,
}

impl<L: Ord> GaugeWitness<L> {
    pub fn certified(&self) -> bool {
        self.morphism_closed && self.inverse_closed && self.two_sided_inverse
    }
}

/// Certifies that `f` is a closed isomorphism between `a` and `f.a` in the
/// homotopy limit category, whose Hom complex `Hom(a, b)` is the bimodule
/// `_bCobar(A)_a` with the target twisting on the left.
pub fn gauge_isomorphism_witness<B: Bialgebra>(
    alg: &B,
    f: &CobarElement<B::Label>,
    a: &MaurerCartanElement<B::Label>,
) -> Result<GaugeWitness<B::Label>, CobarError> {
    let target = gauge_act(alg, f, a)?;
    let finv = inverse(f)?;
    let morphism_closed = twisted_diff(alg, f, &target, a)?.is_zero();
    let inverse_closed = twisted_diff(alg, &finv, a, &target)?.is_zero();
    let one = CobarElement::one(f.truncation());
    let two_sided_inverse = cobar_mul(f, &finv)? == one && cobar_mul(&finv, f)? == one;
    Ok(GaugeWitness {
        source: a.clone(),
        target,
        morphism: f.clone(),
        inverse: finv,
        morphism_closed,
        inverse_closed,
        two_sided_inverse,
    })
}
