//! Exact rational linear algebra for points of `E(w)`, used as an independent
//! check of the combinatorial transform.

pub mod commuting;
pub mod matrix;
pub mod oracle;
pub mod rep;

pub use commuting::{commutes, commuting_basis, CommutingBasis};
pub use matrix::RationalMatrix;
pub use oracle::{fourier_oracle, generic_orbit, GenericOrbit, OracleParams};
pub use rep::{endomorphism_dim, jordan_rep, orbit_label, QuiverRep};
