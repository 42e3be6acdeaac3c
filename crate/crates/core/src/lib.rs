pub mod ainfty;
pub mod cobar;
pub mod graded;
pub mod holim;
pub mod linear;
pub mod monoidal;
pub mod random;
pub mod simplicial;
pub mod specfile;
pub mod suites;
