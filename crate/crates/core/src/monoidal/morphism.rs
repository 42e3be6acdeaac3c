//! Tensor product of morphisms with unknown signs, and a brute-force search
//! for sign assignments that make it a chain map.
//!
//! The families below are written for Hom complexes with the source
//! twisting on the left, where `f : a → x` sits between `a`'s on its left
//! and `x`'s on its right. Here the target twists on the left, so a
//! morphism `f : x → a` of this crate plays the role of `f : a → x` below,
//! and likewise `g : y → b`. The candidate `f ⊗ g` lives in
//! `Hom(x⊗y, a⊗b)` (left tensor product on objects) and has three
//! summand families:
//!
//! 1. `g₀ (a_{i₁}⊗…⊗a_{i_{m−1}}⊗f_{i_m}⊗x_{i_{m+1}}⊗…⊗x_{i_k}) (Δ^{i₁−1}⊗…)(b_k)`
//! 2. `f₀ (x_{i₁}⊗…⊗x_{i_k}) (Δ^{i₁−1}⊗…)(g_k)`
//! 3. `(a…f_{i_m}…x ⊗ x_{j₁}⊗…⊗x_{j_l}) ((Δ…)(b_k) ⊗ (Δ…)(g_l))`
//!
//! Only `a`, `b`, `x`, `f` and `g` enter; `y` is seen through the
//! closedness test. Each family gets a constant sign and
//! optionally an alternating sign in the position `m` of `f` (family 2: in
//! the number of parts `k`).

use std::fmt;

use num_traits::Zero;

use super::{compositions, letterwise, pattern_coproduct, tensor, MonoidalError, Variant};
use crate::cobar::{twisted_diff, CobarElement};
use crate::graded::{concat, Bialgebra, Sign, Tensor};
use crate::holim::HolimMorphism;
use crate::linear::{Rational, SparseVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySign {
    pub constant: Sign,
    pub alternating: bool,
}

impl FamilySign {
    fn at(self, position: usize) -> Sign {
        if self.alternating {
            self.constant * Sign::pow(position as i64)
        } else {
            self.constant
        }
    }
}

/// One sign rule per summand family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignAssignment(pub [FamilySign; 3]);

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|s| format!("{:?}{}", s.constant, if s.alternating { "alt" } else { "" }))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The 64 assignments: a constant sign and an alternation flag per family.
pub fn all_sign_assignments() -> Vec<SignAssignment> {
    let options: Vec<FamilySign> = [Sign::PLUS, Sign::MINUS]
        .into_iter()
        .flat_map(|constant| [false, true].into_iter().map(move |alternating| FamilySign { constant, alternating }))
        .collect();
    let mut out = Vec::with_capacity(64);
    for &s1 in &options {
        for &s2 in &options {
            for &s3 in &options {
                out.push(SignAssignment([s1, s2, s3]));
            }
        }
    }
    out
}

/// A pair of morphisms to be tensored.
#[derive(Clone, Debug)]
pub struct MorphismPair<L: Ord> {
    pub f: HolimMorphism<L>,
    pub g: HolimMorphism<L>,
}

fn scalar_part<L: Ord + Clone>(x: &CobarElement<L>) -> Rational {
    x.terms().get(&Vec::new())
}

/// `a_{i₁}⊗…⊗a_{i_{m−1}}⊗f_{i_m}⊗x_{i_{m+1}}⊗…⊗x_{i_k}`
fn mixed_row<L: Ord + Clone>(
    a: &CobarElement<L>,
    f: &CobarElement<L>,
    x: &CobarElement<L>,
    parts: &[usize],
    m: usize,
) -> Tensor<L> {
    let mut out = crate::graded::one();
    for (p, &i) in parts.iter().enumerate() {
        let factor = match p.cmp(&m) {
            std::cmp::Ordering::Less => a.component(i),
            std::cmp::Ordering::Equal => f.component(i),
            std::cmp::Ordering::Greater => x.component(i),
        };
        out = concat(&out, &factor);
    }
    out
}

fn plain_row<L: Ord + Clone>(x: &CobarElement<L>, parts: &[usize]) -> Tensor<L> {
    parts.iter().fold(crate::graded::one(), |acc, &i| concat(&acc, &x.component(i)))
}

/// The candidate `f ⊗ g` under a sign assignment, truncated at `N`.
pub fn morphism_tensor<B: Bialgebra>(
    alg: &B,
    f: &HolimMorphism<B::Label>,
    g: &HolimMorphism<B::Label>,
    signs: &SignAssignment,
) -> CobarElement<B::Label> {
    // the three families are written for the source-on-the-left Hom convention
    let (a, x) = (f.target().element(), f.source().element());
    let b = g.target().element();
    let (fe, ge) = (f.element(), g.element());
    let n_max = fe.truncation();
    let (f0, g0) = (scalar_part(fe), scalar_part(ge));
    let [s1, s2, s3] = signs.0;
    let mut out = SparseVector::zero();
    for n in 0..=n_max {
        for parts in compositions(n) {
            let k = parts.len();
            if !g0.is_zero() {
                let expanded = pattern_coproduct(alg, &b.component(k), &parts);
                for m in 0..k {
                    let term = letterwise(alg, &mixed_row(a, fe, x, &parts, m), &expanded);
                    out.add_scaled(&term, &s1.at(m).apply(&g0));
                }
            }
            if !f0.is_zero() {
                let term = letterwise(alg, &plain_row(x, &parts), &pattern_coproduct(alg, &ge.component(k), &parts));
                out.add_scaled(&term, &s2.at(k).apply(&f0));
            }
        }
        for i in 1..n {
            let j = n - i;
            for p1 in compositions(i) {
                let k = p1.len();
                let left_b = pattern_coproduct(alg, &b.component(k), &p1);
                if left_b.is_zero() {
                    continue;
                }
                for p2 in compositions(j) {
                    let right_g = pattern_coproduct(alg, &ge.component(p2.len()), &p2);
                    if right_g.is_zero() {
                        continue;
                    }
                    let expanded = concat(&left_b, &right_g);
                    let tail = plain_row(x, &p2);
                    for m in 0..k {
                        let row = concat(&mixed_row(a, fe, x, &p1, m), &tail);
                        out.add_scaled(&letterwise(alg, &row, &expanded), &s3.at(m).to_rational());
                    }
                }
            }
        }
    }
    CobarElement::new(out, n_max)
}

/// Outcome of [`sign_search_morphism_tensor`].
#[derive(Clone, Debug)]
pub struct SignSearchReport {
    pub candidates: usize,
    pub battery: usize,
    pub consistent: Vec<SignAssignment>,
}

impl SignSearchReport {
    /// The consistent assignments, or `None` when there are none.
    pub fn result(&self) -> Option<&[SignAssignment]> {
        (!self.consistent.is_empty()).then_some(&self.consistent[..])
    }
}

/// Keeps the candidates for which `f ⊗ g` is closed in
/// `Hom(source(f)⊗source(g), target(f)⊗target(g))` for
/// every closed pair in the battery. The result is only a report.
pub fn sign_search_morphism_tensor<B: Bialgebra>(
    alg: &B,
    battery: &[MorphismPair<B::Label>],
    candidates: &[SignAssignment],
) -> Result<SignSearchReport, MonoidalError> {
    let mut objects = Vec::with_capacity(battery.len());
    for pair in battery {
        let source = tensor(alg, Variant::Left, pair.f.source(), pair.g.source())?;
        let target = tensor(alg, Variant::Left, pair.f.target(), pair.g.target())?;
        objects.push((source, target));
    }
    let mut consistent = Vec::new();
    'candidates: for signs in candidates {
        for (pair, (source, target)) in battery.iter().zip(&objects) {
            let t = morphism_tensor(alg, &pair.f, &pair.g, signs);
            if !twisted_diff(alg, &t, target, source)?.is_zero() {
                continue 'candidates;
            }
        }
        consistent.push(*signs);
    }
    Ok(SignSearchReport { candidates: candidates.len(), battery: battery.len(), consistent })
}
