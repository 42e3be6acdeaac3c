use std::fmt;

use super::{Bialgebra, Element, Tensor, Window};
use crate::linear::{int, Rational, SparseVector};

/// The basis element `g^g θ^theta`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SweedlerBasis {
    pub g: bool,
    pub theta: bool,
}

impl SweedlerBasis {
    pub const ONE: Self = Self { g: false, theta: false };
    pub const G: Self = Self { g: true, theta: false };
    pub const TH: Self = Self { g: false, theta: true };
    pub const GTH: Self = Self { g: true, theta: true };
}

impl fmt::Display for SweedlerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.g, self.theta) {
            (false, false) => "1",
            (true, false) => "g",
            (false, true) => "th",
            (true, true) => "gth",
        })
    }
}

/// A four-dimensional DG bialgebra with a nonzero differential and a
/// generator in negative degree.
///
/// Basis `1, g, θ, gθ` with `|θ| = −1`, `g² = 1`, `θ² = 0`, `gθ = θg`;
/// `g` is grouplike, `Δθ = θ⊗1 + g⊗θ`, and `dθ = g − 1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DgSweedlerHopf;

impl Bialgebra for DgSweedlerHopf {
    type Label = SweedlerBasis;

    fn name(&self) -> String {
        "dg-sweedler".into()
    }

    fn degree(&self, l: &SweedlerBasis) -> i64 {
        -i64::from(l.theta)
    }

    fn unit(&self) -> Element<SweedlerBasis> {
        SparseVector::basis(SweedlerBasis::ONE)
    }

    fn product(&self, a: &SweedlerBasis, b: &SweedlerBasis) -> Element<SweedlerBasis> {
        if a.theta && b.theta {
            return SparseVector::zero();
        }
        SparseVector::basis(SweedlerBasis { g: a.g ^ b.g, theta: a.theta || b.theta })
    }

    fn coproduct(&self, a: &SweedlerBasis) -> Tensor<SweedlerBasis> {
        use SweedlerBasis as S;
        match (a.g, a.theta) {
            (false, false) => SparseVector::basis(vec![S::ONE, S::ONE]),
            (true, false) => SparseVector::basis(vec![S::G, S::G]),
            (false, true) => [(vec![S::TH, S::ONE], int(1)), (vec![S::G, S::TH], int(1))].into_iter().collect(),
            (true, true) => [(vec![S::GTH, S::G], int(1)), (vec![S::ONE, S::GTH], int(1))].into_iter().collect(),
        }
    }

    fn counit(&self, a: &SweedlerBasis) -> Rational {
        int(i64::from(!a.theta))
    }

    fn differential(&self, a: &SweedlerBasis) -> Element<SweedlerBasis> {
        if !a.theta {
            return SparseVector::zero();
        }
        let sign = if a.g { -1 } else { 1 };
        [(SweedlerBasis::G, int(sign)), (SweedlerBasis::ONE, int(-sign))].into_iter().collect()
    }

    fn basis(&self, _: &Window) -> Vec<SweedlerBasis> {
        vec![SweedlerBasis::ONE, SweedlerBasis::G, SweedlerBasis::TH, SweedlerBasis::GTH]
    }

    fn is_finite_dimensional(&self) -> bool {
        true
    }
}
