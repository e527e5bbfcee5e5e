//! Matrix supersymmetric quantum mechanics: the symbolic supercharge algebra
//! and a numeric check that partner potentials share their spectra.

mod numeric;
mod symbolic;

pub use numeric::{
    discretize, lowest_eigenvalues, partner_potentials, spectral_pairing_report, PairedLevels,
    PairingKind, PartnerPotentials, SpectrumConfig, SpectrumError, SpectrumReport, Superpotential,
    Tridiagonal, UnpairedLevel, SPECTRUM_CONVENTION,
};
pub use symbolic::{
    build_matrix_supercharges, check_matrix_susy_algebra, check_matrix_susy_algebra_with,
    matrix_hamiltonian, partner_blocks, MatrixOperator, SusyControls, Weyl1,
};
