use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{Rational, SparseVector};

type Row = BTreeMap<usize, Rational>;

/// A matrix stored as sparse rows over an ordered list of column keys.
///
/// Row entries refer to columns by key; the position of a key in `columns`
/// fixes the elimination order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<K: Ord> {
    columns: Vec<K>,
    rows: Vec<SparseVector<K>>,
}

impl<K: Ord + Clone> SparseMatrix<K> {
    /// Builds a matrix, rejecting rows that mention keys outside `columns`.
    pub fn new(columns: Vec<K>, rows: Vec<SparseVector<K>>) -> Option<Self> {
        let known: BTreeSet<&K> = columns.iter().collect();
        if rows.iter().all(|r| r.keys().all(|k| known.contains(k))) {
            Some(Self { columns, rows })
        } else {
            None
        }
    }

    /// The matrix of a linear map whose columns are `images` of the domain
    /// basis `columns`; rows are indexed by the codomain keys that occur.
    pub fn from_columns<C: Ord + Clone>(columns: Vec<K>, images: &[SparseVector<C>]) -> Self {
        assert_eq!(columns.len(), images.len(), "one image per column");
        let mut by_row: BTreeMap<C, SparseVector<K>> = BTreeMap::new();
        for (key, image) in columns.iter().zip(images) {
            for (c, coeff) in image.iter() {
                by_row.entry(c.clone()).or_default().add_term(key.clone(), coeff.clone());
            }
        }
        Self { columns, rows: by_row.into_values().collect() }
    }

    pub fn identity(columns: Vec<K>) -> Self {
        let rows = columns.iter().map(|k| SparseVector::basis(k.clone())).collect();
        Self { columns, rows }
    }

    pub fn columns(&self) -> &[K] {
        &self.columns
    }

    pub fn rows(&self) -> &[SparseVector<K>] {
        &self.rows
    }

    /// Matrix-vector product: one coordinate per row.
    pub fn apply(&self, v: &SparseVector<K>) -> Vec<Rational> {
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    fn index_rows(&self) -> Vec<Row> {
        let position: BTreeMap<&K, usize> = self.columns.iter().enumerate().map(|(i, k)| (k, i)).collect();
        self.rows
            .iter()
            .map(|r| r.iter().map(|(k, c)| (position[k], c.clone())).collect())
            .collect()
    }

    /// Reduced row-echelon form (zero rows dropped) and the pivot column indices.
    pub fn rref(&self) -> (SparseMatrix<K>, Vec<usize>) {
        let (rows, pivots) = rref_rows(self.index_rows());
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|(i, c)| (self.columns[i].clone(), c)).collect())
            .collect();
        (SparseMatrix { columns: self.columns.clone(), rows }, pivots)
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.index_rows()).1.len()
    }

    /// An exact basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<SparseVector<K>> {
        let (rows, pivots) = rref_rows(self.index_rows());
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.columns.len()).filter(|c| !pivot_set.contains(c)) {
            let mut v = SparseVector::basis(self.columns[free].clone());
            for (row, &p) in rows.iter().zip(&pivots) {
                if let Some(c) = row.get(&free) {
                    v.add_term(self.columns[p].clone(), -c.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Gaussian elimination to reduced row-echelon form. Pivots are chosen at the
/// smallest available column index, so earlier columns are preferred.
fn rref_rows(input: Vec<Row>) -> (Vec<Row>, Vec<usize>) {
    // pivot column -> normalized row with that leading column
    let mut echelon: BTreeMap<usize, Row> = BTreeMap::new();
    for mut row in input {
        loop {
            let Some((&lead, coeff)) = row.iter().next() else { break };
            match echelon.get(&lead) {
                Some(pivot_row) => {
                    let factor = coeff.clone();
                    subtract_scaled(&mut row, pivot_row, &factor);
                }
                None => {
                    let inv = Rational::one() / coeff.clone();
                    for c in row.values_mut() {
                        *c *= &inv;
                    }
                    echelon.insert(lead, row);
                    break;
                }
            }
        }
    }
    // back substitution, from the last pivot upwards
    let pivots: Vec<usize> = echelon.keys().copied().collect();
    for &p in pivots.iter().rev() {
        let pivot_row = echelon[&p].clone();
        for (&q, row) in echelon.range_mut(..p) {
            debug_assert!(q < p);
            if let Some(c) = row.get(&p).cloned() {
                subtract_scaled(row, &pivot_row, &c);
            }
        }
    }
    let rows = echelon.into_values().collect();
    (rows, pivots)
}

fn subtract_scaled(row: &mut Row, pivot: &Row, factor: &Rational) {
    for (&k, c) in pivot {
        let delta = c * factor;
        let slot = row.entry(k).or_insert_with(Rational::zero);
        *slot -= delta;
        if slot.is_zero() {
            row.remove(&k);
        }
    }
}

/// Decides whether `v` lies in the span of `gens`, returning exact coefficients
/// `c` with `v = Σ cᵢ gensᵢ` when it does.
pub fn in_span<K: Ord + Clone>(v: &SparseVector<K>, gens: &[SparseVector<K>]) -> Option<Vec<Rational>> {
    // columns 0..k are the generators, column k is v
    let k = gens.len();
    let mut by_key: BTreeMap<&K, Row> = BTreeMap::new();
    for (j, g) in gens.iter().enumerate() {
        for (key, c) in g.iter() {
            by_key.entry(key).or_default().insert(j, c.clone());
        }
    }
    for (key, c) in v.iter() {
        by_key.entry(key).or_default().insert(k, c.clone());
    }
    let (rows, pivots) = rref_rows(by_key.into_values().collect());
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = vec![Rational::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        coeffs[p] = row.get(&k).cloned().unwrap_or_else(Rational::zero);
    }
    Some(coeffs)
}

/// Rank of a family of vectors.
pub fn rank_of<K: Ord + Clone>(vectors: &[SparseVector<K>]) -> usize {
    let mut positions: BTreeMap<&K, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.keys() {
            let next = positions.len();
            positions.entry(k).or_insert(next);
        }
    }
    let rows = vectors
        .iter()
        .map(|v| v.iter().map(|(k, c)| (positions[k], c.clone())).collect())
        .collect();
    rref_rows(rows).1.len()
}

/// A basis of the span of `vectors` in reduced echelon form.
pub fn span_basis<K: Ord + Clone>(vectors: &[SparseVector<K>]) -> Vec<SparseVector<K>> {
    let mut keys: Vec<K> = vectors.iter().flat_map(|v| v.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let position: BTreeMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let rows = vectors
        .iter()
        .map(|v| v.iter().map(|(k, c)| (position[k], c.clone())).collect())
        .collect();
    rref_rows(rows)
        .0
        .into_iter()
        .map(|r| r.into_iter().map(|(i, c)| (keys[i].clone(), c)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, rat};

    fn vec_of(entries: &[(usize, Rational)]) -> SparseVector<usize> {
        entries.iter().cloned().collect()
    }

    fn dense(rows: &[&[Rational]]) -> SparseMatrix<usize> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().cloned().enumerate().collect::<SparseVector<usize>>())
            .collect();
        SparseMatrix::new((0..cols).collect(), rows).unwrap()
    }

    #[test]
    fn rref_rank_one() {
        let m = dense(&[&[int(1), int(2)], &[int(2), int(4)]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.rows(), &[vec_of(&[(0, int(1)), (1, int(2))])]);
    }

    #[test]
    fn rref_identity() {
        let m = SparseMatrix::identity(vec![0usize, 1, 2]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(r, m);
    }

    #[test]
    fn rref_fractions() {
        let m = dense(&[&[rat(1, 2), rat(1, 3)], &[rat(1, 4), rat(1, 6)]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0]);
        assert_eq!(r.rows(), &[vec_of(&[(0, int(1)), (1, rat(2, 3))])]);
    }

    #[test]
    fn kernels() {
        assert!(SparseMatrix::identity(vec![0usize, 1, 2]).kernel_basis().is_empty());
        let zero = SparseMatrix::new(vec![0usize, 1], vec![SparseVector::zero(), SparseVector::zero()]).unwrap();
        assert_eq!(zero.kernel_basis(), vec![SparseVector::basis(0), SparseVector::basis(1)]);
        let m = dense(&[&[int(1), int(1)]]);
        assert_eq!(m.kernel_basis(), vec![vec_of(&[(0, int(-1)), (1, int(1))])]);
    }

    #[test]
    fn span_membership() {
        assert_eq!(in_span::<usize>(&SparseVector::zero(), &[]), Some(vec![]));
        let e0 = SparseVector::basis(0usize);
        let e1 = SparseVector::basis(1usize);
        let w = in_span(&(&e0 + &e1), &[e0.clone(), e1.clone()]).unwrap();
        assert_eq!(w, vec![int(1), int(1)]);
        assert_eq!(in_span(&e1, &[&e0 + &e1]), None);
    }

    #[test]
    fn rows_outside_declared_columns_are_rejected() {
        assert!(SparseMatrix::new(vec![0usize], vec![SparseVector::basis(3usize)]).is_none());
    }
}
