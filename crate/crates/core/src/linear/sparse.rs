use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Rational;

/// A finite linear combination of basis keys with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector<K: Ord> {
    entries: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for SparseVector<K> {
    fn default() -> Self {
        Self { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::single(key, Rational::one())
    }

    pub fn single(key: K, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(key, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Rational {
        self.entries.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, key: &K) -> Option<&Rational> {
        self.entries.get(key)
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.entries.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.entries.keys()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Applies a linear map given on basis keys, summing the results.
    pub fn map_linear<K2, F>(&self, mut f: F) -> SparseVector<K2>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> SparseVector<K2>,
    {
        let mut out = SparseVector::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels keys, merging coefficients of keys that collide.
    pub fn map_keys<K2, F>(&self, mut f: F) -> SparseVector<K2>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> K2,
    {
        let mut out = SparseVector::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> Rational {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small
            .iter()
            .filter_map(|(k, c)| large.entries.get(k).map(|d| c * d))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn into_entries(self) -> BTreeMap<K, Rational> {
        self.entries
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for SparseVector<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<'a, K: Ord + Clone> IntoIterator for &'a SparseVector<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&SparseVector<K>> for SparseVector<K> {
    fn add_assign(&mut self, rhs: &SparseVector<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&SparseVector<K>> for SparseVector<K> {
    fn sub_assign(&mut self, rhs: &SparseVector<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn add(self, rhs: Self) -> SparseVector<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for SparseVector<K> {
    type Output = SparseVector<K>;
    fn add(mut self, rhs: Self) -> SparseVector<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn sub(self, rhs: Self) -> SparseVector<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for SparseVector<K> {
    type Output = SparseVector<K>;
    fn sub(mut self, rhs: Self) -> SparseVector<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn neg(self) -> SparseVector<K> {
        SparseVector { entries: self.entries.iter().map(|(k, c)| (k.clone(), -c.clone())).collect() }
    }
}

impl<K: Ord + Clone> Neg for SparseVector<K> {
    type Output = SparseVector<K>;
    fn neg(self) -> SparseVector<K> {
        -&self
    }
}

impl<K: Ord + Clone> Mul<&Rational> for &SparseVector<K> {
    type Output = SparseVector<K>;
    fn mul(self, rhs: &Rational) -> SparseVector<K> {
        self.scale(rhs)
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for SparseVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(k, c)| (k, c.to_string()))).finish()
    }
}

impl<K: Ord + fmt::Display> fmt::Display for SparseVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.entries.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{abs}·{k}")?;
            }
        }
        Ok(())
    }
}
