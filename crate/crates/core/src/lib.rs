//! Spectral radii of k-uniform hypergraph adjacency tensors, weighted
//! incidence certificates, the bicyclic families `B_m^P`, `B_m^L(1)`,
//! `B_m^L(2)`, and generalized power hypergraphs.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod certify;
pub mod error;
pub mod families;
pub mod hypergraph;
pub mod io;
pub mod isomorphism;
pub mod power;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{bp_to_bl2_swap, gen_b_l1, gen_b_l2, gen_b_p, Family, LabeledHypergraph};
pub use hypergraph::{EdgeSwap, Hypergraph};
pub use isomorphism::are_isomorphic;
pub use power::{gen_power, lift_eigenvector, predicted_rho, PowerMap, PowerSpec};
pub use spectral::{
    apply_adjacency, eigen_residual, rayleigh, spectral_radius, SolverOptions, SpectralResult,
};
