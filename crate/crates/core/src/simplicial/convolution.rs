use std::collections::BTreeMap;

use super::chains::{Chain, LComplex, MonotoneMap};
use super::SimplicialError;
use crate::graded::{Bialgebra, Element, Sign, Window};
use crate::linear::{SparseMatrix, SparseVector};

/// A linear map `Lⁿ → A`, stored as a combination of elementary maps
/// `(c, a)` sending the chain `c` to `a` and every other chain to zero.
/// `(c, a)` has degree `|a| + k` for `c` of length `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionElement<L: Ord> {
    n: usize,
    terms: SparseVector<(Chain, L)>,
}

pub fn term_degree<B: Bialgebra>(alg: &B, c: &Chain, l: &B::Label) -> i64 {
    alg.degree(l) + c.length() as i64
}

impl<L: Ord + Clone> ConvolutionElement<L> {
    pub fn new(n: usize, terms: SparseVector<(Chain, L)>) -> Result<Self, SimplicialError> {
        if let Some((c, _)) = terms.keys().find(|(c, _)| c.last() > n) {
            return Err(SimplicialError::ChainOutOfRange { chain: c.vertices().to_vec(), level: n });
        }
        Ok(Self { n, terms })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, terms: SparseVector::zero() }
    }

    /// The map with value `a` on `c`.
    pub fn elementary(n: usize, c: Chain, a: &Element<L>) -> Result<Self, SimplicialError> {
        Self::new(n, a.map_keys(|l| (c.clone(), l.clone())))
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &SparseVector<(Chain, L)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn value(&self, c: &Chain) -> Element<L> {
        self.terms.iter().filter(|((d, _), _)| d == c).map(|((_, l), e)| (l.clone(), e.clone())).collect()
    }

    fn by_chain(&self) -> BTreeMap<&Chain, Vec<(&L, &crate::linear::Rational)>> {
        let mut out: BTreeMap<&Chain, Vec<_>> = BTreeMap::new();
        for ((c, l), e) in self.terms.iter() {
            out.entry(c).or_default().push((l, e));
        }
        out
    }

    fn check_level(&self, other: &Self) -> Result<usize, SimplicialError> {
        if self.n == other.n {
            Ok(self.n)
        } else {
            Err(SimplicialError::LevelMismatch(self.n, other.n))
        }
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SimplicialError> {
        let n = self.check_level(other)?;
        Ok(Self { n, terms: &self.terms - &other.terms })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SimplicialError> {
        let n = self.check_level(other)?;
        Ok(Self { n, terms: &self.terms + &other.terms })
    }

    pub fn scale(&self, c: &crate::linear::Rational) -> Self {
        Self { n: self.n, terms: self.terms.scale(c) }
    }
}

/// The unit of `A^[n]`: `f_i ↦ 1` and longer chains to zero.
pub fn convolution_unit<B: Bialgebra>(alg: &B, n: usize) -> ConvolutionElement<B::Label> {
    resolution_map(n, &alg.unit())
}

/// `r(a)(f_i) = a`, `r(a)` zero on chains of positive length.
pub fn resolution_map<L: Ord + Clone>(n: usize, a: &Element<L>) -> ConvolutionElement<L> {
    let mut terms = SparseVector::zero();
    for i in 0..=n {
        for (l, e) in a.iter() {
            terms.add_term((Chain::vertex(i), l.clone()), e.clone());
        }
    }
    ConvolutionElement { n, terms }
}

/// `d(φ) = d_A ∘ φ − (−1)^{|φ|} φ ∘ d_L`
pub fn convolution_diff<B: Bialgebra>(alg: &B, u: &ConvolutionElement<B::Label>) -> ConvolutionElement<B::Label> {
    let mut terms = SparseVector::zero();
    for ((c, l), e) in u.terms.iter() {
        for (dl, f) in alg.differential(l).iter() {
            terms.add_term((c.clone(), dl.clone()), e * f);
        }
        // φ(d c') picks up the coefficient of c in d c', nonzero when c'
        // is c with one more vertex, inserted at position p
        let sign = -Sign::pow(term_degree(alg, c, l));
        for v in (0..=u.n).filter(|v| !c.vertices().contains(v)) {
            let p = c.vertices().iter().filter(|&&w| w < v).count();
            let mut vertices = c.vertices().to_vec();
            vertices.insert(p, v);
            let longer = Chain::new(vertices).expect("insertion keeps order");
            terms.add_term((longer, l.clone()), (sign * Sign::pow(p as i64)).apply(e));
        }
    }
    ConvolutionElement { n: u.n, terms }
}

/// `(u∗v)(c) = μ (u⊗v) Δ(c)` with `(u⊗v)(x⊗y) = (−1)^{|v||x|} u(x)v(y)`.
pub fn convolution_product<B: Bialgebra>(
    alg: &B,
    u: &ConvolutionElement<B::Label>,
    v: &ConvolutionElement<B::Label>,
) -> Result<ConvolutionElement<B::Label>, SimplicialError> {
    let n = u.check_level(v)?;
    let mut terms = SparseVector::zero();
    let right = v.by_chain();
    for ((x, a), e) in u.terms.iter() {
        for (y, values) in right.range::<Chain, _>(Chain::vertex(x.last())..) {
            if y.first() != x.last() {
                break;
            }
            let c = x.join(y).expect("matching endpoints");
            for &(b, f) in values {
                let sign = Sign::koszul(term_degree(alg, y, b), x.degree());
                for (ab, g) in alg.product(a, b).iter() {
                    terms.add_term((c.clone(), ab.clone()), sign.apply(&(e * f * g)));
                }
            }
        }
    }
    Ok(ConvolutionElement { n, terms })
}

/// `φ^* : A^[n] → A^[m]` for `φ : [m] → [n]`, `(φ^*u)(c) = u(φ_* c)`.
pub fn pullback<L: Ord + Clone>(
    phi: &MonotoneMap,
    u: &ConvolutionElement<L>,
) -> Result<ConvolutionElement<L>, SimplicialError> {
    if phi.target() != u.n {
        return Err(SimplicialError::LevelMismatch(phi.target(), u.n));
    }
    let values = u.by_chain();
    let mut terms = SparseVector::zero();
    for c in LComplex::new(phi.source()).basis() {
        if let Some(image) = phi.push_chain(&c) {
            for (l, e) in values.get(&image).into_iter().flatten() {
                terms.add_term((c.clone(), (*l).clone()), (*e).clone());
            }
        }
    }
    Ok(ConvolutionElement { n: phi.source(), terms })
}

/// The homotopy from the surjectivity argument:
/// `t(f_{i₀<…<i_k}) = −(−1)^{|s|} s(f_{0<i₀<…<i_k})` for `i₀ > 0`, zero
/// otherwise. The sign accounts for the `(−1)^{|φ|}` in the Hom differential.
pub fn homotopy<B: Bialgebra>(alg: &B, s: &ConvolutionElement<B::Label>) -> ConvolutionElement<B::Label> {
    let mut terms = SparseVector::zero();
    for ((c, l), e) in s.terms.iter() {
        if c.first() == 0 && c.length() > 0 {
            let tail = Chain::new(c.vertices()[1..].to_vec()).expect("suffix of a chain");
            terms.add_term((tail, l.clone()), (-Sign::pow(term_degree(alg, c, l))).apply(e));
        }
    }
    ConvolutionElement { n: s.n, terms }
}

/// `r(s(f₀)) − s − d(t)` for the homotopy `t` of `s`; zero for closed `s`.
pub fn homotopy_residual<B: Bialgebra>(alg: &B, s: &ConvolutionElement<B::Label>) -> ConvolutionElement<B::Label> {
    let restricted = resolution_map(s.n, &s.value(&Chain::vertex(0)));
    let dt = convolution_diff(alg, &homotopy(alg, s));
    let lhs = restricted.checked_sub(s).expect("same level");
    lhs.checked_sub(&dt).expect("same level")
}

/// Elementary maps of the given degree, with labels from `window`.
pub fn convolution_basis<B: Bialgebra>(
    alg: &B,
    n: usize,
    degree: i64,
    window: &Window,
) -> Vec<ConvolutionElement<B::Label>> {
    let labels = alg.basis(window);
    let mut out = Vec::new();
    for c in LComplex::new(n).basis() {
        for l in &labels {
            if term_degree(alg, &c, l) == degree {
                out.push(ConvolutionElement { n, terms: SparseVector::basis((c.clone(), l.clone())) });
            }
        }
    }
    out
}

/// A basis of the closed maps of the given degree. Requires a finite basis
/// in `window`, which is the case for finite-dimensional algebras.
pub fn closed_basis<B: Bialgebra>(
    alg: &B,
    n: usize,
    degree: i64,
    window: &Window,
) -> Vec<ConvolutionElement<B::Label>> {
    let basis = convolution_basis(alg, n, degree, window);
    let columns: Vec<(Chain, B::Label)> =
        basis.iter().map(|u| u.terms.keys().next().expect("elementary").clone()).collect();
    let images: Vec<_> = basis.iter().map(|u| convolution_diff(alg, u).terms).collect();
    SparseMatrix::from_columns(columns, &images)
        .kernel_basis()
        .into_iter()
        .map(|terms| ConvolutionElement { n, terms })
        .collect()
}

/// Outcome of [`resolution_map_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionReport {
    pub level: usize,
    pub chain_map: bool,
    pub multiplicative: bool,
    pub cosimplicial: bool,
    /// Cone homology dimensions by degree; `None` for infinite algebras.
    pub cone_homology: Option<BTreeMap<i64, usize>>,
}

impl ResolutionReport {
    pub fn quasi_isomorphism(&self) -> Option<bool> {
        self.cone_homology.as_ref().map(|h| h.values().all(|&d| d == 0))
    }

    pub fn passed(&self) -> bool {
        self.chain_map && self.multiplicative && self.cosimplicial && self.quasi_isomorphism() != Some(false)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum ConeBasis<L> {
    Shift(L),
    Map(Chain, L),
}

/// Checks that `r : A → A^[n]` is a multiplicative chain map, compatible
/// with every `φ^*` for monotone `φ : [m] → [n]`, `m ≤ n`, and, for
/// finite-dimensional `A`, that its mapping cone is acyclic.
pub fn resolution_map_checks<B: Bialgebra>(alg: &B, n: usize, window: &Window) -> ResolutionReport {
    let labels = alg.basis(window);
    let single = |l: &B::Label| -> Element<B::Label> { SparseVector::basis(l.clone()) };
    let chain_map = labels.iter().all(|l| {
        convolution_diff(alg, &resolution_map(n, &single(l)))
            == resolution_map(n, &alg.differential(l))
    });
    let multiplicative = labels.iter().all(|a| {
        labels.iter().all(|b| {
            let lhs = convolution_product(alg, &resolution_map(n, &single(a)), &resolution_map(n, &single(b)));
            lhs.expect("same level") == resolution_map(n, &alg.product(a, b))
        })
    });
    let cosimplicial = (0..=n).all(|m| {
        MonotoneMap::all(m, n).iter().all(|phi| {
            labels.iter().all(|l| {
                pullback(phi, &resolution_map(n, &single(l))).expect("levels match")
                    == resolution_map(m, &single(l))
            })
        })
    });
    let cone_homology = alg.is_finite_dimensional().then(|| cone_homology(alg, n, &labels));
    ResolutionReport { level: n, chain_map, multiplicative, cosimplicial, cone_homology }
}

/// Homology of `Cone(r)` with `Cone^q = A^{q+1} ⊕ A^[n]^q` and
/// `d(a, u) = (−da, r(a) + du)`.
fn cone_homology<B: Bialgebra>(alg: &B, n: usize, labels: &[B::Label]) -> BTreeMap<i64, usize> {
    let mut by_degree: BTreeMap<i64, Vec<ConeBasis<B::Label>>> = BTreeMap::new();
    for l in labels {
        by_degree.entry(alg.degree(l) - 1).or_default().push(ConeBasis::Shift(l.clone()));
    }
    for c in LComplex::new(n).basis() {
        for l in labels {
            by_degree.entry(term_degree(alg, &c, l)).or_default().push(ConeBasis::Map(c.clone(), l.clone()));
        }
    }
    let image = |b: &ConeBasis<B::Label>| -> SparseVector<ConeBasis<B::Label>> {
        match b {
            ConeBasis::Shift(l) => {
                let mut out: SparseVector<_> = alg.differential(l).map_keys(|m| ConeBasis::Shift(m.clone())).scale(&crate::linear::int(-1));
                let r = resolution_map(n, &SparseVector::basis(l.clone()));
                out += &r.terms.map_keys(|(c, m)| ConeBasis::Map(c.clone(), m.clone()));
                out
            }
            ConeBasis::Map(c, l) => {
                let u = ConvolutionElement { n, terms: SparseVector::basis((c.clone(), l.clone())) };
                convolution_diff(alg, &u).terms.map_keys(|(c, m)| ConeBasis::Map(c.clone(), m.clone()))
            }
        }
    };
    let ranks: BTreeMap<i64, usize> = by_degree
        .iter()
        .map(|(&q, basis)| {
            let images: Vec<_> = basis.iter().map(image).collect();
            (q, SparseMatrix::from_columns(basis.clone(), &images).rank())
        })
        .collect();
    by_degree
        .iter()
        .map(|(&q, basis)| {
            let incoming = ranks.get(&(q - 1)).copied().unwrap_or(0);
            (q, basis.len() - ranks[&q] - incoming)
        })
        .collect()
}

/// Outcome of [`matching_map_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingReport {
    pub level: usize,
    /// `L̄ⁿ`, all chains but `f_{0<…<n}`, is closed under `d`.
    pub subcomplex: bool,
    /// `L̄ⁿ` is closed under `Δ`.
    pub subcoalgebra: bool,
    pub rank: usize,
    pub codomain_dim: usize,
}

impl MatchingReport {
    pub fn corank(&self) -> usize {
        self.codomain_dim - self.rank
    }

    pub fn surjective(&self) -> bool {
        self.corank() == 0
    }

    pub fn passed(&self) -> bool {
        self.subcomplex && self.subcoalgebra && self.surjective()
    }
}

/// The matching map `A^[n] → Hom(L̄ⁿ, A)` forgetting the value on
/// `f_{0<…<n}`, with surjectivity certified by an exact rank.
pub fn matching_map_check<B: Bialgebra>(alg: &B, n: usize, window: &Window) -> MatchingReport {
    let l = LComplex::new(n);
    let top = Chain::full(n);
    let reduced: Vec<Chain> = l.basis().into_iter().filter(|c| *c != top).collect();
    let subcomplex = reduced.iter().all(|c| l.differential(c).keys().all(|d| *d != top));
    let subcoalgebra = reduced.iter().all(|c| l.comultiplication(c).keys().all(|(x, y)| *x != top && *y != top));
    let labels = alg.basis(window);
    let columns: Vec<(Chain, B::Label)> =
        l.basis().into_iter().flat_map(|c| labels.iter().map(move |a| (c.clone(), a.clone()))).collect();
    let images: Vec<SparseVector<(Chain, B::Label)>> = columns
        .iter()
        .map(|(c, a)| if *c == top { SparseVector::zero() } else { SparseVector::basis((c.clone(), a.clone())) })
        .collect();
    let rank = SparseMatrix::from_columns(columns, &images).rank();
    MatchingReport { level: n, subcomplex, subcoalgebra, rank, codomain_dim: reduced.len() * labels.len() }
}
