use std::fmt;

use thiserror::Error;

use super::{Bialgebra, Element, Tensor, Window};
use crate::linear::{int, Rational, SparseVector};

/// The delta function `e_g` of a group element `g`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement(pub usize);

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is empty or not square")]
    Shape,
    #[error("entry {0} out of range")]
    Entry(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
}

/// Functions on a finite group, with basis the delta functions.
#[derive(Clone, Debug)]
pub struct FiniteGroupFunctionHopf {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroupFunctionHopf {
    /// Builds the algebra from a multiplication table `table[g][h] = gh`.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::Shape);
        }
        if let Some(&bad) = table.iter().flatten().find(|&&e| e >= n) {
            return Err(GroupError::Entry(bad));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        for g in 0..n {
            if !(0..n).any(|h| table[g][h] == identity) {
                return Err(GroupError::NoInverse(g));
            }
        }
        Ok(Self { name: name.into(), table, identity })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("cyclic-{n}"), table).expect("cyclic group table")
    }

    /// The symmetric group on three letters, elements listed as permutations
    /// in lexicographic order.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        Self::from_table("symmetric-3", table).expect("S3 table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        GroupElement(self.table[g.0][h.0])
    }
}

impl Bialgebra for FiniteGroupFunctionHopf {
    type Label = GroupElement;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn degree(&self, _: &GroupElement) -> i64 {
        0
    }

    fn unit(&self) -> Element<GroupElement> {
        (0..self.order()).map(|g| (GroupElement(g), int(1))).collect()
    }

    fn product(&self, a: &GroupElement, b: &GroupElement) -> Element<GroupElement> {
        if a == b {
            SparseVector::basis(*a)
        } else {
            SparseVector::zero()
        }
    }

    fn coproduct(&self, g: &GroupElement) -> Tensor<GroupElement> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.table[u][v] == g.0)
            .map(|(u, v)| (vec![GroupElement(u), GroupElement(v)], int(1)))
            .collect()
    }

    fn counit(&self, g: &GroupElement) -> Rational {
        int(i64::from(g.0 == self.identity))
    }

    fn differential(&self, _: &GroupElement) -> Element<GroupElement> {
        SparseVector::zero()
    }

    fn basis(&self, _: &Window) -> Vec<GroupElement> {
        (0..self.order()).map(GroupElement).collect()
    }

    fn is_finite_dimensional(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(FiniteGroupFunctionHopf::from_table("t", vec![]).unwrap_err(), GroupError::Shape);
        assert_eq!(
            FiniteGroupFunctionHopf::from_table("t", vec![vec![0, 0], vec![0, 0]]).unwrap_err(),
            GroupError::NoIdentity
        );
        assert_eq!(FiniteGroupFunctionHopf::from_table("t", vec![vec![3]]).unwrap_err(), GroupError::Entry(3));
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = FiniteGroupFunctionHopf::symmetric3();
        let (a, b) = (GroupElement(1), GroupElement(2));
        assert_ne!(s3.multiply(a, b), s3.multiply(b, a));
    }

    #[test]
    fn z2_coproduct() {
        let z2 = FiniteGroupFunctionHopf::cyclic(2);
        let d = z2.coproduct(&GroupElement(0));
        let expected: Tensor<GroupElement> = [
            (vec![GroupElement(0), GroupElement(0)], int(1)),
            (vec![GroupElement(1), GroupElement(1)], int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
    }
}
