//! Cosimplicial resolutions and the fat totalization.
//!
//! `Lⁿ` is the DG-coalgebra of normalized chains on `Δ[n]`, with basis
//! `f_{i₀<…<i_k}` in degree `−k`. For a DG-algebra `A`, `A^[n] = Hom(Lⁿ, A)`
//! under convolution resolves the constant cosimplicial object on `A`. For
//! a DG-bialgebra the cosimplicial algebra `[n] ↦ A^{⊗n}` has a fat
//! totalization `∏ A^{⊗n}[−n]`, which [`totalization_vs_cobar`] identifies
//! with the coaugmented Cobar construction.

mod chains;
mod convolution;
#[cfg(test)]
mod tests;
mod totalization;

pub use chains::{
    check_naturality, l_cosimplicial_map, moore_complex, verify_simplicial_identities, Chain, ChainTensor,
    ChainVector, LComplex, LReport, MonotoneMap, MooreComplex, MooreLevel, NaturalityReport, SimplicialSpace,
    StandardSimplex,
};
pub use convolution::{
    closed_basis, convolution_basis, convolution_diff, convolution_product, convolution_unit, homotopy,
    homotopy_residual, matching_map_check, pullback, resolution_map, resolution_map_checks, term_degree,
    ConvolutionElement, MatchingReport, ResolutionReport,
};
pub use totalization::{
    coface_inclusion, fat_totalization, natural_component, naturality_failures, total_degree,
    totalization_vs_cobar, FatTotalization, IsomorphismCertificate, TotalizationElement, Twist,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("chain {0:?} is not a nonempty strictly increasing sequence")]
    NotIncreasing(Vec<usize>),
    #[error("chain {chain:?} does not lie in level {level}")]
    ChainOutOfRange { chain: Vec<usize>, level: usize },
    #[error("{values:?} is not a monotone map into [{target}]")]
    NotMonotone { values: Vec<usize>, target: usize },
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("simplicial identity {identity} fails at level {q} (i = {i}, j = {j})")]
    SimplicialIdentity { identity: &'static str, q: usize, i: usize, j: usize },
    #[error("no diagonal sign normalization intertwines the fat totalization with Cobar at truncation {truncation}")]
    NoSignNormalization { truncation: usize },
}
