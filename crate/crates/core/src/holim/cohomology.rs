use std::collections::{BTreeMap, BTreeSet};

use super::{hom_diff, HolimError, HolimMorphism, HolimObject};
use crate::cobar::CobarElement;
use crate::graded::{Bialgebra, ShowTensor, Tensor, Window, Word};
use crate::linear::{in_span, rank_of, SparseMatrix, SparseVector};

/// A finite slice of `Hom^m(source, target)`: words of weight at most
/// `max_weight` whose letters come from the windowed basis.
#[derive(Clone, Debug)]
pub struct HomWindow<L: Ord> {
    pub source: HolimObject<L>,
    pub target: HolimObject<L>,
    pub degree: i64,
    pub max_weight: usize,
    pub window: Window,
}

/// A windowed element whose differential leaves the window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowLeak {
    pub degree: i64,
    pub element: String,
    pub image: String,
}

/// Cohomology of the windowed slice in one degree.
///
/// Cycles are exact. Boundaries are only those of windowed elements, so a
/// class reported nonzero is nonzero within the window; `leak` records
/// whether the window fails to be closed under the differential.
#[derive(Clone, Debug)]
pub struct HomCohomology<L: Ord> {
    pub degree: i64,
    pub chain_dimension: usize,
    pub cycle_dimension: usize,
    pub boundary_rank: usize,
    /// `dim ker − dim(ker ∩ im)` within the window.
    pub dimension: usize,
    /// Cycles whose classes form a basis of the windowed cohomology.
    pub representatives: Vec<CobarElement<L>>,
    pub leak: Option<WindowLeak>,
    truncation: usize,
    lower: Vec<(Word<L>, Tensor<L>)>,
    cycles: Vec<Tensor<L>>,
}

impl<L: Ord + Clone> HomCohomology<L> {
    pub fn ensure_closed(&self) -> Result<(), HolimError> {
        match &self.leak {
            None => Ok(()),
            Some(l) => Err(HolimError::WindowNotClosed(format!("d({}) = {} in degree {}", l.element, l.image, l.degree + 1))),
        }
    }

    /// Whether `x` lies in the span of the windowed cycles.
    pub fn is_windowed_cycle(&self, x: &CobarElement<L>) -> bool {
        in_span(x.terms(), &self.cycles).is_some()
    }

    /// A windowed preimage of `x` under the differential, if one exists.
    pub fn boundary_witness(&self, x: &CobarElement<L>) -> Option<CobarElement<L>> {
        let images: Vec<Tensor<L>> = self.lower.iter().map(|(_, im)| im.clone()).collect();
        let coeffs = in_span(x.terms(), &images)?;
        let mut pre = SparseVector::zero();
        for ((w, _), c) in self.lower.iter().zip(coeffs) {
            pre.add_term(w.clone(), c);
        }
        Some(CobarElement::new(pre, self.truncation))
    }
}

/// Words of the given weight and internal degree over the windowed basis.
pub fn words_of_degree<B: Bialgebra>(alg: &B, window: &Window, weight: usize, degree: i64) -> Vec<Word<B::Label>> {
    let mut by_degree: BTreeMap<i64, Vec<B::Label>> = BTreeMap::new();
    for l in alg.basis(window) {
        by_degree.entry(alg.degree(&l)).or_default().push(l);
    }
    // reachable[k]: internal degrees of words of length k
    let mut reachable = vec![BTreeSet::from([0i64])];
    for k in 0..weight {
        let next = reachable[k].iter().flat_map(|s| by_degree.keys().map(move |d| s + d)).collect();
        reachable.push(next);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(weight);
    extend(&by_degree, &reachable, weight, degree, &mut prefix, &mut out);
    out
}

fn extend<L: Clone>(
    by_degree: &BTreeMap<i64, Vec<L>>,
    reachable: &[BTreeSet<i64>],
    left: usize,
    degree: i64,
    prefix: &mut Vec<L>,
    out: &mut Vec<Vec<L>>,
) {
    if left == 0 {
        if degree == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for (d, labels) in by_degree {
        if !reachable[left - 1].contains(&(degree - d)) {
            continue;
        }
        for l in labels {
            prefix.push(l.clone());
            extend(by_degree, reachable, left - 1, degree - d, prefix, out);
            prefix.pop();
        }
    }
}

fn slice<B: Bialgebra>(alg: &B, w: &HomWindow<B::Label>, degree: i64) -> Vec<Word<B::Label>> {
    (0..=w.max_weight).flat_map(|n| words_of_degree(alg, &w.window, n, degree - n as i64)).collect()
}

/// Windowed cohomology of `Hom(source, target)` in `degree`.
pub fn hom_cohomology<B: Bialgebra>(alg: &B, w: &HomWindow<B::Label>) -> Result<HomCohomology<B::Label>, HolimError> {
    let truncation = w.source.truncation();
    let max_weight = w.max_weight.min(truncation);
    let w = HomWindow { max_weight, ..w.clone() };
    let diff = |word: &Word<B::Label>, degree: i64| -> Result<Tensor<B::Label>, HolimError> {
        let f = CobarElement::new(SparseVector::basis(word.clone()), truncation);
        let f = HolimMorphism::new(alg, &w.source, &w.target, degree, f)?;
        Ok(hom_diff(alg, &f).element().terms().clone())
    };

    let below = slice(alg, &w, w.degree - 1);
    let here = slice(alg, &w, w.degree);
    let above: BTreeSet<Word<B::Label>> = slice(alg, &w, w.degree + 1).into_iter().collect();
    let here_set: BTreeSet<&Word<B::Label>> = here.iter().collect();

    let mut leak = None;
    let mut note = |degree: i64, word: &Word<B::Label>, image: &Tensor<B::Label>, inside: &dyn Fn(&Word<B::Label>) -> bool| {
        if leak.is_none() && image.keys().any(|k| !inside(k)) {
            leak = Some(WindowLeak {
                degree,
                element: ShowTensor(&SparseVector::basis(word.clone())).to_string(),
                image: ShowTensor(image).to_string(),
            });
        }
    };

    let mut lower = Vec::with_capacity(below.len());
    for word in below {
        let image = diff(&word, w.degree - 1)?;
        note(w.degree - 1, &word, &image, &|k| here_set.contains(k));
        lower.push((word, image));
    }
    let mut images = Vec::with_capacity(here.len());
    for word in &here {
        let image = diff(word, w.degree)?;
        note(w.degree, word, &image, &|k| above.contains(k));
        images.push(image);
    }

    let cycles = SparseMatrix::from_columns(here.clone(), &images).kernel_basis();
    let boundaries: Vec<Tensor<B::Label>> = lower.iter().map(|(_, im)| im.clone()).filter(|t| !t.is_zero()).collect();
    let boundary_rank = rank_of(&boundaries);

    let mut spanning = boundaries.clone();
    let mut representatives = Vec::new();
    for z in &cycles {
        if in_span(z, &spanning).is_none() {
            spanning.push(z.clone());
            representatives.push(CobarElement::new(z.clone(), truncation));
        }
    }
    Ok(HomCohomology {
        degree: w.degree,
        chain_dimension: here.len(),
        cycle_dimension: cycles.len(),
        boundary_rank,
        dimension: representatives.len(),
        representatives,
        leak,
        truncation,
        lower,
        cycles,
    })
}
