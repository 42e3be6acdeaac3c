use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::SimplicialError;
use crate::graded::Sign;
use crate::linear::{int, SparseMatrix, SparseVector};

/// A basis chain `f_{i₀<…<i_k}` of `Lⁿ`, of degree `−k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Chain(Vec<usize>);

impl Chain {
    pub fn new(vertices: Vec<usize>) -> Result<Self, SimplicialError> {
        if vertices.is_empty() || vertices.windows(2).any(|p| p[0] >= p[1]) {
            return Err(SimplicialError::NotIncreasing(vertices));
        }
        Ok(Self(vertices))
    }

    pub fn vertex(i: usize) -> Self {
        Self(vec![i])
    }

    /// `f_{0<…<n}`
    pub fn full(n: usize) -> Self {
        Self((0..=n).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("chains are nonempty")
    }

    /// `k` for `f_{i₀<…<i_k}`.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }

    pub fn degree(&self) -> i64 {
        -(self.length() as i64)
    }

    fn drop(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(j);
        Self(v)
    }

    /// The chain through `self` followed by `other`, which must start where
    /// `self` ends.
    pub fn join(&self, other: &Chain) -> Option<Chain> {
        (self.last() == other.first()).then(|| {
            let mut v = self.0.clone();
            v.extend_from_slice(&other.0[1..]);
            Chain(v)
        })
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "f{}", parts.join("<"))
    }
}

pub type ChainVector = SparseVector<Chain>;
pub type ChainTensor = SparseVector<(Chain, Chain)>;

/// The DG-coalgebra `Lⁿ`, the normalized chains of `Δ[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LComplex {
    n: usize,
}

impl LComplex {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        (1 << (self.n + 1)) - 1
    }

    pub fn contains(&self, c: &Chain) -> bool {
        c.last() <= self.n
    }

    /// All chains, shortest first and lexicographic within a length.
    pub fn basis(&self) -> Vec<Chain> {
        let mut out: Vec<Chain> = (1u32..(1 << (self.n + 1)))
            .map(|mask| Chain((0..=self.n).filter(|i| mask & (1 << i) != 0).collect()))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `d(f_{i₀<…<i_k}) = Σⱼ (−1)ʲ f_{i₀<…î_j…<i_k}`, zero on vertices.
    pub fn differential(&self, c: &Chain) -> ChainVector {
        let mut out = SparseVector::zero();
        if c.length() > 0 {
            for j in 0..c.0.len() {
                out.add_term(c.drop(j), Sign::pow(j as i64).to_rational());
            }
        }
        out
    }

    pub fn diff_vector(&self, x: &ChainVector) -> ChainVector {
        x.map_linear(|c| self.differential(c))
    }

    /// `Δ(f_{i₀<…<i_k}) = Σⱼ f_{i₀<…<i_j} ⊗ f_{i_j<…<i_k}`
    pub fn comultiplication(&self, c: &Chain) -> ChainTensor {
        (0..c.0.len())
            .map(|j| ((Chain(c.0[..=j].to_vec()), Chain(c.0[j..].to_vec())), int(1)))
            .collect()
    }

    /// `d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy`
    pub fn diff_tensor(&self, t: &ChainTensor) -> ChainTensor {
        let mut out = SparseVector::zero();
        for ((x, y), c) in t.iter() {
            for (dx, e) in self.differential(x).iter() {
                out.add_term((dx.clone(), y.clone()), c * e);
            }
            let sign = Sign::pow(x.degree());
            for (dy, e) in self.differential(y).iter() {
                out.add_term((x.clone(), dy.clone()), sign.apply(&(c * e)));
            }
        }
        out
    }

    /// Runs the structural checks on every basis chain.
    pub fn check(&self) -> LReport {
        let mut report = LReport { level: self.n, dim: self.basis().len(), ..LReport::default() };
        for c in self.basis() {
            if !self.diff_vector(&self.differential(&c)).is_zero() {
                report.d_squared_failures += 1;
            }
            let delta = self.comultiplication(&c);
            let mut left = SparseVector::zero();
            let mut right = SparseVector::zero();
            for ((x, y), e) in delta.iter() {
                for ((x1, x2), f) in self.comultiplication(x).iter() {
                    left.add_term((x1.clone(), x2.clone(), y.clone()), e * f);
                }
                for ((y1, y2), f) in self.comultiplication(y).iter() {
                    right.add_term((x.clone(), y1.clone(), y2.clone()), e * f);
                }
            }
            if left != right {
                report.coassociativity_failures += 1;
            }
            let via_d = self.differential(&c).map_linear(|x| self.comultiplication(x));
            if self.diff_tensor(&delta) != via_d {
                report.chain_map_failures += 1;
            }
        }
        report
    }
}

/// Failure counts of [`LComplex::check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LReport {
    pub level: usize,
    pub dim: usize,
    pub d_squared_failures: usize,
    pub coassociativity_failures: usize,
    pub chain_map_failures: usize,
}

impl LReport {
    pub fn passed(&self) -> bool {
        self.d_squared_failures == 0 && self.coassociativity_failures == 0 && self.chain_map_failures == 0
    }
}

/// A monotone map `[n] → [m]`, stored by its values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self, SimplicialError> {
        if values.is_empty() || values.windows(2).any(|p| p[0] > p[1]) || values.iter().any(|&v| v > target) {
            return Err(SimplicialError::NotMonotone { values, target });
        }
        Ok(Self { target, values })
    }

    pub fn identity(n: usize) -> Self {
        Self { target: n, values: (0..=n).collect() }
    }

    /// The coface `δⁱ : [n−1] → [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        Self { target: n, values: (0..=n).filter(|&v| v != i).collect() }
    }

    /// The codegeneracy `σⁱ : [n+1] → [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        Self { target: n, values: (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|p| p[0] < p[1])
    }

    /// `self ∘ inner`
    pub fn after(&self, inner: &MonotoneMap) -> Result<MonotoneMap, SimplicialError> {
        if inner.target != self.source() {
            return Err(SimplicialError::LevelMismatch(inner.target, self.source()));
        }
        Ok(Self { target: self.target, values: inner.values.iter().map(|&v| self.values[v]).collect() })
    }

    /// Image of a chain, `None` when the map is not injective on it.
    pub fn push_chain(&self, c: &Chain) -> Option<Chain> {
        let image: Vec<usize> = c.0.iter().map(|&v| self.values[v]).collect();
        image.windows(2).all(|p| p[0] < p[1]).then_some(Chain(image))
    }

    /// `φ_* : Lⁿ → Lᵐ`
    pub fn push(&self, x: &ChainVector) -> ChainVector {
        let mut out = SparseVector::zero();
        for (c, e) in x.iter() {
            if let Some(image) = self.push_chain(c) {
                out.add_term(image, e.clone());
            }
        }
        out
    }

    pub fn push_tensor(&self, t: &ChainTensor) -> ChainTensor {
        let mut out = SparseVector::zero();
        for ((x, y), e) in t.iter() {
            if let (Some(a), Some(b)) = (self.push_chain(x), self.push_chain(y)) {
                out.add_term((a, b), e.clone());
            }
        }
        out
    }

    /// All monotone maps `[n] → [m]`.
    pub fn all(n: usize, m: usize) -> Vec<MonotoneMap> {
        fn go(len: usize, m: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if acc.len() == len {
                out.push(acc.clone());
                return;
            }
            let start = acc.last().copied().unwrap_or(0);
            for v in start..=m {
                acc.push(v);
                go(len, m, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n + 1, m, &mut Vec::new(), &mut out);
        out.into_iter().map(|values| MonotoneMap { target: m, values }).collect()
    }

    /// The injective monotone maps `[n] → [m]`, the morphisms of `Δ⁺`.
    pub fn injective(n: usize, m: usize) -> Vec<MonotoneMap> {
        Self::all(n, m).into_iter().filter(MonotoneMap::is_injective).collect()
    }
}

/// `φ_*` on `Lⁿ` for a list of values `φ(0), …, φ(n)` into `[m]`.
pub fn l_cosimplicial_map(values: &[usize], m: usize, x: &ChainVector) -> Result<ChainVector, SimplicialError> {
    Ok(MonotoneMap::new(values.to_vec(), m)?.push(x))
}

/// Failure counts for the naturality checks of [`check_naturality`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NaturalityReport {
    pub maps: usize,
    pub composites: usize,
    pub chain_map_failures: usize,
    pub comultiplication_failures: usize,
    pub functoriality_failures: usize,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.chain_map_failures == 0 && self.comultiplication_failures == 0 && self.functoriality_failures == 0
    }
}

/// Checks that every monotone `φ : [n] → [m]` with `n, m ≤ bound` gives a
/// chain map commuting with `Δ`, and that `(ψφ)_* = ψ_*φ_*`.
pub fn check_naturality(bound: usize) -> NaturalityReport {
    let mut report = NaturalityReport::default();
    for n in 0..=bound {
        let source = LComplex::new(n);
        let chains = source.basis();
        for m in 0..=bound {
            let target = LComplex::new(m);
            for phi in MonotoneMap::all(n, m) {
                report.maps += 1;
                for c in &chains {
                    let x = SparseVector::basis(c.clone());
                    if phi.push(&source.diff_vector(&x)) != target.diff_vector(&phi.push(&x)) {
                        report.chain_map_failures += 1;
                    }
                    let via_target = phi.push(&x).map_linear(|y| target.comultiplication(y));
                    if phi.push_tensor(&source.comultiplication(c)) != via_target {
                        report.comultiplication_failures += 1;
                    }
                }
                for p in 0..=bound {
                    for psi in MonotoneMap::all(m, p) {
                        report.composites += 1;
                        let composite = psi.after(&phi).expect("composable");
                        for c in &chains {
                            let x = SparseVector::basis(c.clone());
                            if composite.push(&x) != psi.push(&phi.push(&x)) {
                                report.functoriality_failures += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// A simplicial vector space given levelwise on bases `0..dim(q)`.
pub trait SimplicialSpace {
    fn dim(&self, q: usize) -> usize;
    /// `dᵢ : X_q → X_{q−1}` on a basis vector, `q ≥ 1`, `i ≤ q`.
    fn face(&self, q: usize, i: usize, j: usize) -> SparseVector<usize>;
    /// `sᵢ : X_q → X_{q+1}` on a basis vector, `i ≤ q`.
    fn degeneracy(&self, q: usize, i: usize, j: usize) -> SparseVector<usize>;
}

fn apply<F: Fn(usize) -> SparseVector<usize>>(x: &SparseVector<usize>, f: F) -> SparseVector<usize> {
    x.map_linear(|&j| f(j))
}

/// The standard simplex `kΔ[n]`: level `q` has a basis of monotone maps
/// `[q] → [n]`.
#[derive(Clone, Debug)]
pub struct StandardSimplex {
    n: usize,
    levels: Vec<Vec<Vec<usize>>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
}

impl StandardSimplex {
    /// Levels `0..=max_level` are materialized; [`moore_complex`] with cap
    /// `c` reads levels up to `c + 2`.
    pub fn new(n: usize, max_level: usize) -> Self {
        let levels: Vec<Vec<Vec<usize>>> =
            (0..=max_level).map(|q| MonotoneMap::all(q, n).into_iter().map(|m| m.values).collect()).collect();
        let index = levels.iter().map(|l| l.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect()).collect();
        Self { n, levels, index }
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn simplex(&self, q: usize, j: usize) -> &[usize] {
        &self.levels[q][j]
    }

    fn lookup(&self, q: usize, s: Vec<usize>) -> SparseVector<usize> {
        SparseVector::basis(self.index[q][&s])
    }
}

impl SimplicialSpace for StandardSimplex {
    fn dim(&self, q: usize) -> usize {
        self.levels.get(q).map_or(0, Vec::len)
    }

    fn face(&self, q: usize, i: usize, j: usize) -> SparseVector<usize> {
        let mut s = self.levels[q][j].clone();
        s.remove(i);
        self.lookup(q - 1, s)
    }

    fn degeneracy(&self, q: usize, i: usize, j: usize) -> SparseVector<usize> {
        let mut s = self.levels[q][j].clone();
        s.insert(i, s[i]);
        self.lookup(q + 1, s)
    }
}

/// Verifies the simplicial identities on basis vectors of levels `≤ cap`,
/// reporting the first violation.
pub fn verify_simplicial_identities<X: SimplicialSpace>(x: &X, cap: usize) -> Result<(), SimplicialError> {
    let fail = |identity: &'static str, q: usize, i: usize, j: usize| Err(SimplicialError::SimplicialIdentity { identity, q, i, j });
    for q in 0..=cap {
        for b in 0..x.dim(q) {
            let v = SparseVector::basis(b);
            for j in 0..=q {
                let s = x.degeneracy(q, j, b);
                if apply(&s, |t| x.face(q + 1, j, t)) != v || apply(&s, |t| x.face(q + 1, j + 1, t)) != v {
                    return fail("d_j s_j = d_{j+1} s_j = id", q, j, j);
                }
                for i in 0..=q + 1 {
                    let lhs = apply(&s, |t| x.face(q + 1, i, t));
                    if i < j {
                        let rhs = apply(&x.face(q, i, b), |t| x.degeneracy(q - 1, j - 1, t));
                        if lhs != rhs {
                            return fail("d_i s_j = s_{j-1} d_i", q, i, j);
                        }
                    } else if i > j + 1 {
                        let rhs = apply(&x.face(q, i - 1, b), |t| x.degeneracy(q - 1, j, t));
                        if lhs != rhs {
                            return fail("d_i s_j = s_j d_{i-1}", q, i, j);
                        }
                    }
                }
                for i in 0..=j {
                    let lhs = apply(&s, |t| x.degeneracy(q + 1, i, t));
                    let rhs = apply(&x.degeneracy(q, i, b), |t| x.degeneracy(q + 1, j + 1, t));
                    if lhs != rhs {
                        return fail("s_i s_j = s_{j+1} s_i", q, i, j);
                    }
                }
            }
            if q >= 2 {
                for j in 1..=q {
                    for i in 0..j {
                        let lhs = apply(&x.face(q, j, b), |t| x.face(q - 1, i, t));
                        let rhs = apply(&x.face(q, i, b), |t| x.face(q - 1, j - 1, t));
                        if lhs != rhs {
                            return fail("d_i d_j = d_{j-1} d_i", q, i, j);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// One level of the normalized Moore complex: `X_q / D_q` with the
/// classes of `representatives` as basis.
#[derive(Clone, Debug)]
pub struct MooreLevel {
    pub degree: i64,
    pub representatives: Vec<usize>,
    reduced: Vec<(usize, SparseVector<usize>)>,
}

impl MooreLevel {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of `v` in the quotient basis.
    fn coordinates(&self, v: &SparseVector<usize>) -> SparseVector<usize> {
        let mut v = v.clone();
        for (pivot, row) in &self.reduced {
            let c = v.get(pivot);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        let position: BTreeMap<usize, usize> = self.representatives.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        v.map_keys(|k| position[k])
    }
}

/// `N(X)` with `N(X)^{−q} = X_q / D_q` and `d = Σ (−1)ⁱ dᵢ`.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    pub levels: Vec<MooreLevel>,
    /// `differentials[q]` maps level `q` to level `q − 1` (empty for `q = 0`),
    /// one image per basis vector.
    pub differentials: Vec<Vec<SparseVector<usize>>>,
}

impl MooreComplex {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(MooreLevel::dim).collect()
    }

    pub fn d_squared_is_zero(&self) -> bool {
        (2..self.levels.len()).all(|q| {
            self.differentials[q].iter().all(|v| v.map_linear(|&j| self.differentials[q - 1][j].clone()).is_zero())
        })
    }
}

pub fn moore_complex<X: SimplicialSpace>(x: &X, cap: usize) -> Result<MooreComplex, SimplicialError> {
    verify_simplicial_identities(x, cap)?;
    let mut levels = Vec::with_capacity(cap + 1);
    for q in 0..=cap {
        let columns: Vec<usize> = (0..x.dim(q)).collect();
        let generators: Vec<SparseVector<usize>> = if q == 0 {
            Vec::new()
        } else {
            (0..x.dim(q - 1)).flat_map(|b| (0..q).map(move |i| (i, b))).map(|(i, b)| x.degeneracy(q - 1, i, b)).collect()
        };
        let (rref, pivots) = SparseMatrix::new(columns.clone(), generators).expect("indices in range").rref();
        let pivot_columns: Vec<usize> = pivots.iter().map(|&p| columns[p]).collect();
        let reduced = pivot_columns.iter().copied().zip(rref.rows().iter().cloned()).collect();
        let representatives = columns.into_iter().filter(|c| !pivot_columns.contains(c)).collect();
        levels.push(MooreLevel { degree: -(q as i64), representatives, reduced });
    }
    let mut differentials = vec![Vec::new()];
    for q in 1..=cap {
        let images = levels[q]
            .representatives
            .iter()
            .map(|&b| {
                let mut v = SparseVector::zero();
                for i in 0..=q {
                    v.add_scaled(&x.face(q, i, b), &Sign::pow(i as i64).to_rational());
                }
                levels[q - 1].coordinates(&v)
            })
            .collect();
        differentials.push(images);
    }
    Ok(MooreComplex { levels, differentials })
}
