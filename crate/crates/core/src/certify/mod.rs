//! Weighted incidence certificates.
//!
//! A labeling `B` of a connected k-uniform hypergraph with vertex sums 1,
//! edge products `alpha` and unit cycle products pins the spectral radius to
//! `alpha^{-1/k}`; relaxing to sums `<= 1` and products `>= alpha` gives an
//! upper bound, strict when some constraint is slack.
//!
//! Radii here are in the adjacency-tensor normalization with entries
//! `1/(k-1)!`. The original formulation of this method uses the unscaled
//! tensor, whose radius is `(k-1)!` times larger.

mod check;
mod root;
mod tables;

pub use check::{
    check_alpha_normal, check_alpha_normal_with, check_consistent, cycle_basis, cycle_product,
    CertificateVerdict, CheckOptions, CycleWitness, RhoBound, VerdictKind, WeightedIncidence,
    Witness,
};
pub use root::{quartic, root_monotonicity_scan, solve_bl1_alpha, AlphaRoot};
pub use tables::{build_bl1_certificate, build_bl2_certificate, build_certificate, Certificate};
