//! The Koszul sign rule.
//!
//! Moving a symbol of degree `p` past a symbol of degree `q` contributes
//! `(-1)^(pq)`. Every sign in the crate is produced through this module.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use crate::linear::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sign {
    negative: bool,
}

impl Sign {
    pub const PLUS: Sign = Sign { negative: false };
    pub const MINUS: Sign = Sign { negative: true };

    /// `(-1)^exponent`.
    pub fn pow(exponent: i64) -> Sign {
        Sign { negative: exponent.rem_euclid(2) == 1 }
    }

    /// Sign for moving a degree-`p` symbol past a degree-`q` symbol.
    pub fn koszul(p: i64, q: i64) -> Sign {
        Sign::pow(p * q)
    }

    pub fn is_negative(self) -> bool {
        self.negative
    }

    pub fn to_i64(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn to_rational(self) -> Rational {
        crate::linear::int(self.to_i64())
    }

    pub fn apply(self, c: &Rational) -> Rational {
        if self.negative {
            -c.clone()
        } else {
            c.clone()
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign { negative: self.negative ^ rhs.negative }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        self.negative ^= rhs.negative;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        Sign { negative: !self.negative }
    }
}

impl fmt::Debug for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })
    }
}

/// Sign of rearranging graded symbols: position `i` of the output holds the
/// input symbol `perm[i]`. Computed from the inversions, so it does not depend
/// on how the permutation is decomposed.
pub fn permutation_sign(degrees: &[i64], perm: &[usize]) -> Sign {
    assert_eq!(degrees.len(), perm.len());
    let mut sign = Sign::PLUS;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign *= Sign::koszul(degrees[perm[i]], degrees[perm[j]]);
            }
        }
    }
    sign
}

/// Applies adjacent transpositions `(k, k+1)` in order to the identity
/// arrangement and accumulates the Koszul sign of each swap.
pub fn transposition_sign(degrees: &[i64], swaps: &[usize]) -> (Sign, Vec<usize>) {
    let mut arrangement: Vec<usize> = (0..degrees.len()).collect();
    let mut sign = Sign::PLUS;
    for &k in swaps {
        sign *= Sign::koszul(degrees[arrangement[k]], degrees[arrangement[k + 1]]);
        arrangement.swap(k, k + 1);
    }
    (sign, arrangement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identity_is_plus() {
        assert_eq!(permutation_sign(&[1, 3, 5], &[0, 1, 2]), Sign::PLUS);
    }

    #[test]
    fn odd_symbols_anticommute() {
        assert_eq!(permutation_sign(&[1, 1], &[1, 0]), Sign::MINUS);
        assert_eq!(permutation_sign(&[2, 1], &[1, 0]), Sign::PLUS);
        assert_eq!(Sign::koszul(-1, 3), Sign::MINUS);
    }

    proptest! {
        #[test]
        fn sign_is_independent_of_decomposition(
            degrees in proptest::collection::vec(-3i64..4, 2..7),
            raw_swaps in proptest::collection::vec(0usize..100, 0..30),
        ) {
            let n = degrees.len();
            let swaps: Vec<usize> = raw_swaps.iter().map(|s| s % (n - 1)).collect();
            let (by_swaps, arrangement) = transposition_sign(&degrees, &swaps);
            prop_assert_eq!(by_swaps, permutation_sign(&degrees, &arrangement));
        }
    }
}
