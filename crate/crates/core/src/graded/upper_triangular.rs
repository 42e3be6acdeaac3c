use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;

use super::{Bialgebra, Element, Tensor, Window};
use crate::linear::{int, Rational, SparseVector};

/// The monomial `x^a y^b z^c` with `a, b ∈ ℤ`, `c ≥ 0`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub x: i32,
    pub y: i32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub const fn new(x: i32, y: i32, z: u32) -> Self {
        Self { x, y, z }
    }

    /// Parses the display form, e.g. `1`, `x`, `x^-1y^2z`.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text == "1" {
            return Some(Self::ONE);
        }
        let mut m = Self::ONE;
        let mut rest = text;
        let mut last = None;
        while let Some(var) = rest.chars().next() {
            rest = &rest[1..];
            let (exp, tail) = match rest.strip_prefix('^') {
                Some(after) => {
                    let end = after
                        .char_indices()
                        .find(|&(i, ch)| !(ch.is_ascii_digit() || (i == 0 && ch == '-')))
                        .map_or(after.len(), |(i, _)| i);
                    (after[..end].parse::<i32>().ok()?, &after[end..])
                }
                None => (1, rest),
            };
            rest = tail;
            let order = "xyz".find(var)?;
            if last.is_some_and(|l| l >= order) || exp == 0 {
                return None;
            }
            last = Some(order);
            match var {
                'x' => m.x = exp,
                'y' => m.y = exp,
                _ => m.z = u32::try_from(exp).ok()?,
            }
        }
        Some(m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return f.write_str("1");
        }
        for (var, exp) in [('x', self.x as i64), ('y', self.y as i64), ('z', self.z as i64)] {
            match exp {
                0 => {}
                1 => write!(f, "{var}")?,
                e => write!(f, "{var}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Regular functions on the group of invertible upper triangular 2×2
/// matrices `[[x, z], [0, y]]`: the Laurent-polynomial Hopf algebra
/// `k[x^±1, y^±1, z]` with `Δ(z) = x⊗z + z⊗y`, concentrated in degree 0.
#[derive(Clone, Copy, Debug, Default)]
pub struct UpperTriangularHopf;

impl Bialgebra for UpperTriangularHopf {
    type Label = Monomial;

    fn name(&self) -> String {
        "upper-triangular".into()
    }

    fn degree(&self, _: &Monomial) -> i64 {
        0
    }

    fn unit(&self) -> Element<Monomial> {
        SparseVector::basis(Monomial::ONE)
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> Element<Monomial> {
        SparseVector::basis(Monomial::new(a.x + b.x, a.y + b.y, a.z + b.z))
    }

    /// `Δ(x^a y^b z^c) = Σₖ C(c,k) x^{a+k} y^b z^{c−k} ⊗ x^a y^{b+c−k} z^k`,
    /// the binomial expansion of `(x⊗x)^a (y⊗y)^b (x⊗z + z⊗y)^c`.
    fn coproduct(&self, m: &Monomial) -> Tensor<Monomial> {
        (0..=m.z)
            .map(|k| {
                let left = Monomial::new(m.x + k as i32, m.y, m.z - k);
                let right = Monomial::new(m.x, m.y + (m.z - k) as i32, k);
                let c = binomial(BigInt::from(m.z), BigInt::from(k));
                (vec![left, right], Rational::from_integer(c))
            })
            .collect()
    }

    fn counit(&self, m: &Monomial) -> Rational {
        int(i64::from(m.z == 0))
    }

    fn differential(&self, _: &Monomial) -> Element<Monomial> {
        SparseVector::zero()
    }

    fn basis(&self, window: &Window) -> Vec<Monomial> {
        let l = window.laurent;
        let mut out = Vec::new();
        for x in -l..=l {
            for y in -l..=l {
                for z in 0..=window.poly {
                    out.push(Monomial::new(x, y, z));
                }
            }
        }
        out
    }

    fn is_finite_dimensional(&self) -> bool {
        false
    }
}
