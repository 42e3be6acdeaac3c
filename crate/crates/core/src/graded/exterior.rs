use std::fmt;

use super::{Bialgebra, Element, Tensor, Window};
use crate::linear::{int, Rational, SparseVector};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExteriorBasis {
    One,
    T,
}

impl fmt::Display for ExteriorBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExteriorBasis::One => "1",
            ExteriorBasis::T => "t",
        })
    }
}

/// The exterior algebra on one primitive generator `t` of degree 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExteriorPrimitiveHopf;

impl Bialgebra for ExteriorPrimitiveHopf {
    type Label = ExteriorBasis;

    fn name(&self) -> String {
        "exterior".into()
    }

    fn degree(&self, l: &ExteriorBasis) -> i64 {
        match l {
            ExteriorBasis::One => 0,
            ExteriorBasis::T => 1,
        }
    }

    fn unit(&self) -> Element<ExteriorBasis> {
        SparseVector::basis(ExteriorBasis::One)
    }

    fn product(&self, a: &ExteriorBasis, b: &ExteriorBasis) -> Element<ExteriorBasis> {
        use ExteriorBasis::*;
        match (a, b) {
            (One, x) | (x, One) => SparseVector::basis(*x),
            (T, T) => SparseVector::zero(),
        }
    }

    fn coproduct(&self, a: &ExteriorBasis) -> Tensor<ExteriorBasis> {
        use ExteriorBasis::*;
        match a {
            One => SparseVector::basis(vec![One, One]),
            T => [(vec![T, One], int(1)), (vec![One, T], int(1))].into_iter().collect(),
        }
    }

    fn counit(&self, a: &ExteriorBasis) -> Rational {
        int(i64::from(*a == ExteriorBasis::One))
    }

    fn differential(&self, _: &ExteriorBasis) -> Element<ExteriorBasis> {
        SparseVector::zero()
    }

    fn basis(&self, _: &Window) -> Vec<ExteriorBasis> {
        vec![ExteriorBasis::One, ExteriorBasis::T]
    }

    fn is_finite_dimensional(&self) -> bool {
        true
    }
}
