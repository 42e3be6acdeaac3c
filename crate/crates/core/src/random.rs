//! Seeded generation of test inputs.
//!
//! Every generator draws from a ChaCha8 stream seeded with an explicit
//! `u64`, so a seed determines the inputs on every platform. Coefficients
//! are small nonzero integers with an occasional half or third.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cobar::{gauge_act, CobarElement, MaurerCartanElement};
use crate::graded::{as_tensor, concat, coproduct_element, counit_element, diff_element, Bialgebra, Element, Tensor, Window};
use crate::linear::{int, rat, Rational, SparseVector};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn coefficient(rng: &mut TestRng) -> Rational {
    let n = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    match rng.gen_range(0..6) {
        0 => rat(n, 2),
        1 => rat(n, 3),
        _ => int(n),
    }
}

/// Basis labels of a windowed algebra grouped by degree.
pub struct GradedBasis<L> {
    by_degree: BTreeMap<i64, Vec<L>>,
}

impl<L: Clone + Ord> GradedBasis<L> {
    pub fn new<B: Bialgebra<Label = L>>(alg: &B, window: &Window) -> Self {
        let mut by_degree: BTreeMap<i64, Vec<L>> = BTreeMap::new();
        for l in alg.basis(window) {
            by_degree.entry(alg.degree(&l)).or_default().push(l);
        }
        Self { by_degree }
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn of_degree(&self, d: i64) -> &[L] {
        self.by_degree.get(&d).map_or(&[], Vec::as_slice)
    }

    /// Internal degrees reachable by words of the given weight.
    pub fn reachable(&self, weight: usize) -> BTreeSet<i64> {
        let mut sums = BTreeSet::from([0]);
        for _ in 0..weight {
            sums = sums.iter().flat_map(|s| self.by_degree.keys().map(move |d| s + d)).collect();
        }
        sums
    }

    /// A random word of the given weight and internal degree, or `None`
    /// when none exists.
    pub fn word(&self, rng: &mut TestRng, weight: usize, degree: i64) -> Option<Vec<L>> {
        let reach: Vec<BTreeSet<i64>> = (0..weight).map(|w| self.reachable(w)).collect();
        if !self.reachable(weight).contains(&degree) {
            return None;
        }
        let mut remaining = degree;
        let mut word = Vec::with_capacity(weight);
        for slot in 0..weight {
            let left = weight - slot - 1;
            let feasible: Vec<i64> =
                self.by_degree.keys().copied().filter(|&d| reach[left].contains(&(remaining - d))).collect();
            let d = *feasible.choose(rng)?;
            word.push(self.of_degree(d).choose(rng)?.clone());
            remaining -= d;
        }
        Some(word)
    }
}

/// A random Cobar element of the given total degree with up to `terms`
/// terms in weights `0..=max_weight`. May be zero when no word fits.
pub fn homogeneous<L: Clone + Ord>(
    basis: &GradedBasis<L>,
    rng: &mut TestRng,
    total_degree: i64,
    max_weight: usize,
    truncation: usize,
    terms: usize,
) -> CobarElement<L> {
    let mut t = SparseVector::zero();
    let weights: Vec<usize> = (0..=max_weight.min(truncation))
        .filter(|&w| basis.reachable(w).contains(&(total_degree - w as i64)))
        .collect();
    if weights.is_empty() {
        return CobarElement::zero(truncation);
    }
    for _ in 0..terms {
        let w = *weights.choose(rng).expect("nonempty");
        if let Some(word) = basis.word(rng, w, total_degree - w as i64) {
            t.add_term(word, coefficient(rng));
        }
    }
    CobarElement::new(t, truncation)
}

/// A random element of `A` of the given degree.
pub fn element<L: Clone + Ord>(basis: &GradedBasis<L>, rng: &mut TestRng, degree: i64, terms: usize) -> Element<L> {
    let labels = basis.of_degree(degree);
    let mut e = SparseVector::zero();
    if labels.is_empty() {
        return e;
    }
    for _ in 0..terms {
        e.add_term(labels.choose(rng).unwrap().clone(), coefficient(rng));
    }
    e
}

pub fn is_grouplike<B: Bialgebra>(alg: &B, g: &Element<B::Label>) -> bool {
    let t = as_tensor(g);
    diff_element(alg, g).is_zero()
        && counit_element(alg, g) == int(1)
        && coproduct_element(alg, g) == concat(&t, &t)
}

/// Grouplike elements found among degree-0 basis labels and, for small
/// bases, among all combinations with coefficients in `{−1, 0, 1}`.
pub fn grouplikes<B: Bialgebra>(alg: &B, window: &Window) -> Vec<Element<B::Label>> {
    let degree0: Vec<B::Label> = alg.basis(window).into_iter().filter(|l| alg.degree(l) == 0).collect();
    let mut candidates: Vec<Element<B::Label>> = vec![alg.unit()];
    if degree0.len() <= 6 {
        let total = 3usize.pow(degree0.len() as u32);
        for code in 1..total {
            let mut c = code;
            let mut e = SparseVector::zero();
            for l in &degree0 {
                e.add_term(l.clone(), int((c % 3) as i64 - 1));
                c /= 3;
            }
            candidates.push(e);
        }
    } else {
        candidates.extend(degree0.iter().map(|l| SparseVector::basis(l.clone())));
    }
    let mut found: Vec<Element<B::Label>> = Vec::new();
    for g in candidates {
        if !found.contains(&g) && is_grouplike(alg, &g) {
            found.push(g);
        }
    }
    found
}

/// A gauge element `λ + u` of total degree 0 with `λ ≠ 0` and `u` of
/// positive weight.
pub fn gauge_element<L: Clone + Ord>(basis: &GradedBasis<L>, rng: &mut TestRng, truncation: usize) -> CobarElement<L> {
    let lambda = coefficient(rng);
    let mut u = homogeneous(basis, rng, 0, truncation, truncation, 4);
    u = CobarElement::new(u.terms().filter(|w| !w.is_empty()), truncation);
    &CobarElement::scalar(lambda, truncation) + &u
}

/// A Maurer-Cartan element in the gauge orbit of a random grouplike.
pub fn maurer_cartan<B: Bialgebra>(
    alg: &B,
    basis: &GradedBasis<B::Label>,
    grouplikes: &[Element<B::Label>],
    rng: &mut TestRng,
    truncation: usize,
) -> MaurerCartanElement<B::Label> {
    let g = grouplikes.choose(rng).expect("at least one grouplike");
    let base = MaurerCartanElement::from_grouplike(alg, g, truncation).expect("grouplike");
    let f = gauge_element(basis, rng, truncation);
    gauge_act(alg, &f, &base).expect("gauge action preserves Maurer-Cartan elements")
}

/// A random tensor of the given weight and internal degree.
pub fn tensor<L: Clone + Ord>(basis: &GradedBasis<L>, rng: &mut TestRng, weight: usize, degree: i64, terms: usize) -> Tensor<L> {
    let mut t = SparseVector::zero();
    for _ in 0..terms {
        if let Some(w) = basis.word(rng, weight, degree) {
            t.add_term(w, coefficient(rng));
        }
    }
    t
}
