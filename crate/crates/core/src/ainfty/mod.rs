//! A∞-comodules over a DG-coalgebra and their Hom complexes.
//!
//! A right A∞-comodule on a finite-dimensional graded space `M` is given by
//! coaction maps `μₙ : M → M ⊗ C^{⊗n}` of degree `1 − n` for `n ≥ 0`, with
//! `μ₀` the differential of `M`. Equivalently it is a degree-one element
//! `δ = Σ μₙ` of `End(M) ⊗ Cobar(C)` with `dδ + δ² = 0`, and the coaction
//! data makes `M ⊗ Cobar(C)` a right DG-module over `Cobar(C)`.
//!
//! Morphisms `M → N` of degree `m` are elements `f` of `Hom(M, N) ⊗ Cobar(C)`
//! of total degree `m`, with `d(f) = df + δ_N f − (−1)^m f δ_M` and
//! composition the product. For `M = k` these are exactly the objects and
//! morphisms of the homotopy limit category, with `aₙ = μₙ`.
//!
//! Structure maps are exposed in map form: `μₙ(e_j)` as a combination of
//! `e_i ⊗ t` with `t` a plain tensor in `A^{⊗n}`, related to Cobar words by
//! the suspension signs of [`crate::cobar::indexed`].

mod componentwise;
mod matrix;
#[cfg(test)]
mod tests;

pub use componentwise::{maps_compose, maps_diff};
pub use matrix::{MatrixCobar, MatrixKey};

use thiserror::Error;

use crate::cobar::indexed::suspension_sign;
use crate::cobar::{diff_tensor, total_degree, CobarElement, CobarError, MaurerCartanElement};
use crate::graded::{Bialgebra, ShowTensor, Sign, Window, Word};
use crate::linear::SparseVector;

/// `Σ c·(e_i ⊗ w)`: an element of `M ⊗ Cobar(C)` or, in map form, of
/// `M ⊗ T(C)`.
pub type Image<L> = SparseVector<(usize, Word<L>)>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AinfError {
    #[error("basis index {index} out of range for dimension {dimension}")]
    Index { index: usize, dimension: usize },
    #[error("term {term} has total degree {found}, expected {expected}")]
    Degree { term: String, found: i64, expected: i64 },
    #[error("{0} names for {1} degrees")]
    Shape(usize, usize),
    #[error("comodule is not one-dimensional in degree 0")]
    NotOneDimensional,
    #[error("the regular comodule needs a finite-dimensional algebra")]
    NotFinite,
    #[error("comodule mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Cobar(#[from] CobarError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityComodule<L: Ord> {
    names: Vec<String>,
    degrees: Vec<i64>,
    structure: MatrixCobar<L>,
}

fn check_homogeneous<B: Bialgebra>(
    alg: &B,
    x: &MatrixCobar<B::Label>,
    target: &[i64],
    source: &[i64],
    expected: i64,
) -> Result<(), AinfError> {
    for ((i, j, w), _) in x.terms().iter() {
        for (index, dimension) in [(*i, target.len()), (*j, source.len())] {
            if index >= dimension {
                return Err(AinfError::Index { index, dimension });
            }
        }
        let found = total_degree(alg, w) + target[*i] - source[*j];
        if found != expected {
            let term = format!("E{i},{j}·({})", ShowTensor(&SparseVector::basis(w.clone())));
            return Err(AinfError::Degree { term, found, expected });
        }
    }
    Ok(())
}

/// Applies the suspension to the words of an image.
pub fn suspend_image<B: Bialgebra>(alg: &B, x: &Image<B::Label>) -> Image<B::Label> {
    let mut out = SparseVector::zero();
    for ((i, w), c) in x.iter() {
        out.add_term((*i, w.clone()), suspension_sign(alg, w).apply(c));
    }
    out
}

/// Map form of `X`: the suspended images `X·(e_j ⊗ 1)`, split by weight.
fn map_form<B: Bialgebra>(alg: &B, x: &MatrixCobar<B::Label>, source: &[i64]) -> Vec<Vec<Image<B::Label>>> {
    let images: Vec<Image<B::Label>> =
        matrix::act_on_basis(alg, x, source).iter().map(|im| suspend_image(alg, im)).collect();
    (0..=x.truncation())
        .map(|n| images.iter().map(|im| im.filter(|(_, w)| w.len() == n)).collect())
        .collect()
}

fn from_map_form<B: Bialgebra>(
    alg: &B,
    maps: &[Vec<Image<B::Label>>],
    source: &[i64],
    truncation: usize,
) -> MatrixCobar<B::Label> {
    let mut images = vec![SparseVector::zero(); source.len()];
    for by_source in maps {
        for (j, im) in by_source.iter().enumerate() {
            images[j] += &suspend_image(alg, im);
        }
    }
    matrix::from_images(alg, &images, source, truncation)
}

impl<L: Ord + Clone + std::fmt::Display> AInfinityComodule<L> {
    /// Validates indices and that `δ` has total degree one.
    pub fn new<B: Bialgebra<Label = L>>(
        alg: &B,
        names: Vec<String>,
        degrees: Vec<i64>,
        structure: MatrixCobar<L>,
    ) -> Result<Self, AinfError> {
        if names.len() != degrees.len() {
            return Err(AinfError::Shape(names.len(), degrees.len()));
        }
        check_homogeneous(alg, &structure, &degrees, &degrees, 1)?;
        Ok(Self { names, degrees, structure })
    }

    /// Builds the comodule from structure maps in map form, `maps[n][j] = μₙ(e_j)`.
    pub fn from_structure_maps<B: Bialgebra<Label = L>>(
        alg: &B,
        names: Vec<String>,
        degrees: Vec<i64>,
        maps: &[Vec<Image<L>>],
        truncation: usize,
    ) -> Result<Self, AinfError> {
        for by_source in maps {
            if by_source.len() != degrees.len() {
                return Err(AinfError::Shape(by_source.len(), degrees.len()));
            }
        }
        let structure = from_map_form(alg, maps, &degrees, truncation);
        Self::new(alg, names, degrees, structure)
    }

    /// `A` as a comodule over itself: `μ₀ = d_A`, `μ₁(m) = Σ (−1)^{|m'|} m' ⊗ m''`.
    pub fn regular<B: Bialgebra<Label = L>>(alg: &B, truncation: usize) -> Result<Self, AinfError> {
        if !alg.is_finite_dimensional() {
            return Err(AinfError::NotFinite);
        }
        let basis = alg.basis(&Window::default());
        let index = |l: &L| basis.iter().position(|b| b == l).expect("basis is closed");
        let degrees: Vec<i64> = basis.iter().map(|l| alg.degree(l)).collect();
        let mut mu0 = Vec::new();
        let mut mu1 = Vec::new();
        for l in &basis {
            mu0.push(alg.differential(l).iter().map(|(m, c)| ((index(m), Vec::new()), c.clone())).collect());
            mu1.push(
                alg.coproduct(l)
                    .iter()
                    .map(|(w, c)| ((index(&w[0]), vec![w[1].clone()]), Sign::pow(alg.degree(&w[0])).apply(c)))
                    .collect(),
            );
        }
        let names = basis.iter().map(|l| l.to_string()).collect();
        Self::from_structure_maps(alg, names, degrees, &[mu0, mu1], truncation)
    }

    /// The one-dimensional comodule `k` with `μₙ = aₙ`.
    pub fn from_object(a: &MaurerCartanElement<L>) -> Self {
        let terms = a.element().terms().iter().map(|(w, c)| ((0, 0, w.clone()), c.clone())).collect();
        Self {
            names: vec!["k".into()],
            degrees: vec![0],
            structure: MatrixCobar::new(terms, a.truncation()),
        }
    }

    /// Inverse of [`Self::from_object`]; validates the Maurer-Cartan equation.
    pub fn to_object<B: Bialgebra<Label = L>>(&self, alg: &B) -> Result<MaurerCartanElement<L>, AinfError> {
        if self.degrees != [0] {
            return Err(AinfError::NotOneDimensional);
        }
        let terms = self.structure.terms().iter().map(|((_, _, w), c)| (w.clone(), c.clone())).collect();
        Ok(MaurerCartanElement::new(alg, CobarElement::new(terms, self.truncation()))?)
    }
}

impl<L: Ord + Clone> AInfinityComodule<L> {
    pub fn dimension(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &MatrixCobar<L> {
        &self.structure
    }

    pub fn truncation(&self) -> usize {
        self.structure.truncation()
    }

    /// Structure maps in map form, `[n][j] = μₙ(e_j)`.
    pub fn structure_maps<B: Bialgebra<Label = L>>(&self, alg: &B) -> Vec<Vec<Image<L>>> {
        map_form(alg, &self.structure, &self.degrees)
    }
}

/// The first weight where two evaluations of the same map disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDiscrepancy {
    pub weight: usize,
    pub basis: usize,
    pub normative: String,
    pub componentwise: String,
}

fn show_image<L: Ord + Clone + std::fmt::Display>(x: &Image<L>) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = x
        .iter()
        .map(|((i, w), c)| format!("{c}·e{i}⊗({})", ShowTensor(&SparseVector::basis(w.clone()))))
        .collect();
    parts.join(" + ")
}

fn compare_maps<L: Ord + Clone + std::fmt::Display>(
    normative: &[Vec<Image<L>>],
    componentwise: impl Fn(usize) -> Vec<Image<L>>,
) -> Option<MapDiscrepancy> {
    for (n, expected) in normative.iter().enumerate() {
        let got = componentwise(n);
        for (j, (e, g)) in expected.iter().zip(&got).enumerate() {
            if e != g {
                return Some(MapDiscrepancy { weight: n, basis: j, normative: show_image(e), componentwise: show_image(g) });
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct AinfReport<L: Ord> {
    /// Residual of the A∞-identities in map form, `[n][j]`.
    pub residuals: Vec<Vec<Image<L>>>,
    /// Disagreement between `dδ + δ²` and the componentwise identities.
    pub componentwise: Option<MapDiscrepancy>,
}

impl<L: Ord + Clone> AinfReport<L> {
    pub fn is_valid(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// First weight with a nonzero residual, with the residuals on each basis vector.
    pub fn first_nonzero(&self) -> Option<(usize, &[Image<L>])> {
        self.residuals
            .iter()
            .enumerate()
            .find(|(_, r)| r.iter().any(|x| !x.is_zero()))
            .map(|(n, r)| (n, r.as_slice()))
    }
}

/// Residuals of the A∞-identities `Σ ± (μₗ ⊗ id)μₖ + (id ⊗ d)μₙ + Σ ± Δⱼ μₙ₋₁`
/// per weight, computed as `dδ + δ²` and cross-checked componentwise.
pub fn ainf_identity_residuals<B: Bialgebra>(alg: &B, m: &AInfinityComodule<B::Label>) -> AinfReport<B::Label> {
    let d = &m.degrees;
    let residual = matrix::differential(alg, &m.structure, d, d).add(&matrix::product(alg, &m.structure, &m.structure, d, d));
    let residuals = map_form(alg, &residual, d);
    let mu = m.structure_maps(alg);
    let componentwise = compare_maps(&residuals, |n| {
        let mut out = maps_diff(alg, &mu, d, n);
        for (o, x) in out.iter_mut().zip(maps_compose(alg, &mu, &mu, n)) {
            *o += &x;
        }
        out
    });
    AinfReport { residuals, componentwise }
}

/// The differential of `M ⊗ Cobar(C)`: `D(e⊗w) = δ·(e⊗w) + (−1)^{|e|} e ⊗ dw`.
pub fn module_differential<B: Bialgebra>(
    alg: &B,
    m: &AInfinityComodule<B::Label>,
    x: &Image<B::Label>,
) -> Image<B::Label> {
    let n = m.truncation();
    let mut out = SparseVector::zero();
    for ((k, w), c) in x.iter() {
        for ((i, j, u), c2) in m.structure.terms().iter() {
            if j != k || u.len() + w.len() > n {
                continue;
            }
            let sign = Sign::pow(total_degree(alg, u) * m.degrees[*k]);
            let mut v = u.clone();
            v.extend(w.iter().cloned());
            out.add_term((*i, v), sign.apply(&(c * c2)));
        }
        let dw = diff_tensor(alg, &SparseVector::single(w.clone(), c.clone()), n);
        let sign = Sign::pow(m.degrees[*k]);
        for (v, c2) in dw.iter() {
            out.add_term((*k, v.clone()), sign.apply(c2));
        }
    }
    out
}

/// The right action `(e ⊗ w)·v = e ⊗ wv`.
pub fn module_action<L: Ord + Clone>(x: &Image<L>, v: &CobarElement<L>) -> Image<L> {
    let mut out = SparseVector::zero();
    for ((i, w), c) in x.iter() {
        for (u, c2) in v.terms().iter() {
            if w.len() + u.len() <= v.truncation() {
                let mut word = w.clone();
                word.extend(u.iter().cloned());
                out.add_term((*i, word), c * c2);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinityMorphism<L: Ord> {
    source: AInfinityComodule<L>,
    target: AInfinityComodule<L>,
    degree: i64,
    element: MatrixCobar<L>,
}

impl<L: Ord + Clone + std::fmt::Display> AInfinityMorphism<L> {
    pub fn new<B: Bialgebra<Label = L>>(
        alg: &B,
        source: &AInfinityComodule<L>,
        target: &AInfinityComodule<L>,
        degree: i64,
        element: MatrixCobar<L>,
    ) -> Result<Self, AinfError> {
        for t in [source.truncation(), target.truncation()] {
            if t != element.truncation() {
                return Err(CobarError::TruncationMismatch(t, element.truncation()).into());
            }
        }
        check_homogeneous(alg, &element, &target.degrees, &source.degrees, degree)?;
        Ok(Self { source: source.clone(), target: target.clone(), degree, element })
    }

    /// Builds a morphism from components in map form, `maps[n][j] = fₙ(e_j)`.
    pub fn from_maps<B: Bialgebra<Label = L>>(
        alg: &B,
        source: &AInfinityComodule<L>,
        target: &AInfinityComodule<L>,
        degree: i64,
        maps: &[Vec<Image<L>>],
    ) -> Result<Self, AinfError> {
        let element = from_map_form(alg, maps, &source.degrees, source.truncation());
        Self::new(alg, source, target, degree, element)
    }

    /// The morphism of one-dimensional comodules given by a Cobar element.
    pub fn from_cobar<B: Bialgebra<Label = L>>(
        alg: &B,
        source: &AInfinityComodule<L>,
        target: &AInfinityComodule<L>,
        degree: i64,
        f: &CobarElement<L>,
    ) -> Result<Self, AinfError> {
        let terms = f.terms().iter().map(|(w, c)| ((0, 0, w.clone()), c.clone())).collect();
        Self::new(alg, source, target, degree, MatrixCobar::new(terms, f.truncation()))
    }
}

impl<L: Ord + Clone> AInfinityMorphism<L> {
    pub fn identity(m: &AInfinityComodule<L>) -> Self {
        Self {
            source: m.clone(),
            target: m.clone(),
            degree: 0,
            element: MatrixCobar::identity(m.dimension(), m.truncation()),
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn element(&self) -> &MatrixCobar<L> {
        &self.element
    }

    pub fn source(&self) -> &AInfinityComodule<L> {
        &self.source
    }

    pub fn target(&self) -> &AInfinityComodule<L> {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    /// Components `fₙ` in map form, `[n][j]`.
    pub fn maps<B: Bialgebra<Label = L>>(&self, alg: &B) -> Vec<Vec<Image<L>>> {
        map_form(alg, &self.element, &self.source.degrees)
    }

    /// The underlying Cobar element when both ends are one-dimensional.
    pub fn to_cobar(&self) -> Option<CobarElement<L>> {
        if self.source.dimension() != 1 || self.target.dimension() != 1 {
            return None;
        }
        let terms = self.element.terms().iter().map(|((_, _, w), c)| (w.clone(), c.clone())).collect();
        Some(CobarElement::new(terms, self.element.truncation()))
    }
}

/// `d(f) = df + δ_N f − (−1)^m f δ_M`.
pub fn ainf_hom_diff<B: Bialgebra>(alg: &B, f: &AInfinityMorphism<B::Label>) -> AInfinityMorphism<B::Label> {
    let (s, t) = (&f.source.degrees, &f.target.degrees);
    let df = matrix::differential(alg, &f.element, t, s);
    let left = matrix::product(alg, &f.target.structure, &f.element, t, s);
    let right = matrix::product(alg, &f.element, &f.source.structure, s, s);
    let sign = -Sign::pow(f.degree).to_rational();
    let element = df.add(&left).add(&right.scale(&sign));
    AInfinityMorphism { source: f.source.clone(), target: f.target.clone(), degree: f.degree + 1, element }
}

/// The Hom differential with its componentwise evaluation
/// `(id⊗d)fₙ + Σ ±Δⱼ fₙ₋₁ + Σ ±(μ^N ⊗ id)f − (−1)^m Σ ±(f ⊗ id)μ^M`.
pub fn ainf_hom_diff_checked<B: Bialgebra>(
    alg: &B,
    f: &AInfinityMorphism<B::Label>,
) -> (AInfinityMorphism<B::Label>, Option<MapDiscrepancy>) {
    let df = ainf_hom_diff(alg, f);
    let normative = df.maps(alg);
    let fs = f.maps(alg);
    let mu_s = f.source.structure_maps(alg);
    let mu_t = f.target.structure_maps(alg);
    let sign = -Sign::pow(f.degree).to_rational();
    let check = compare_maps(&normative, |n| {
        let mut out = maps_diff(alg, &fs, &f.target.degrees, n);
        for (o, x) in out.iter_mut().zip(maps_compose(alg, &mu_t, &fs, n)) {
            *o += &x;
        }
        for (o, x) in out.iter_mut().zip(maps_compose(alg, &fs, &mu_s, n)) {
            o.add_scaled(&x, &sign);
        }
        out
    });
    (df, check)
}

/// `g∘f` for `f : M → N` and `g : N → P`.
pub fn ainf_compose<B: Bialgebra>(
    alg: &B,
    g: &AInfinityMorphism<B::Label>,
    f: &AInfinityMorphism<B::Label>,
) -> Result<AInfinityMorphism<B::Label>, AinfError> {
    if f.target != g.source {
        return Err(AinfError::Mismatch("target of the first morphism is not the source of the second".into()));
    }
    let element = matrix::product(alg, &g.element, &f.element, &f.target.degrees, &f.source.degrees);
    Ok(AInfinityMorphism { source: f.source.clone(), target: g.target.clone(), degree: f.degree + g.degree, element })
}

/// Composition with its componentwise evaluation `Σ ±(gₗ ⊗ id)fₖ`.
pub fn ainf_compose_checked<B: Bialgebra>(
    alg: &B,
    g: &AInfinityMorphism<B::Label>,
    f: &AInfinityMorphism<B::Label>,
) -> Result<(AInfinityMorphism<B::Label>, Option<MapDiscrepancy>), AinfError> {
    let gf = ainf_compose(alg, g, f)?;
    let (gs, fs) = (g.maps(alg), f.maps(alg));
    let check = compare_maps(&gf.maps(alg), |n| maps_compose(alg, &gs, &fs, n));
    Ok((gf, check))
}
