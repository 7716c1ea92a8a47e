//! Combinatorics of triangular arrays, which classify the orbits of
//! `GL(w_1) x ... x GL(w_n)` on representations of the equioriented type A
//! quiver `1 -> 2 -> ... -> n`.
//!
//! The crate covers enumeration of `P(w)`, the closure order (chutewise
//! dominance) and orbit dimensions, the combinatorial Fourier transform `T` and
//! its inverse `T'`, and an exact-arithmetic geometric oracle that computes the
//! Fourier transform on orbit labels directly from generic commuting
//! representations.
//!
//! ```
//! use triarray::{transform_t, TriangularArray};
//!
//! let y: TriangularArray = "0,0,3/0,3/3".parse().unwrap();
//! assert_eq!(transform_t(&y).to_string(), "3,0,0/3,0/3");
//! ```

pub mod cli;
pub mod dims;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod multisegment;
pub mod order;
pub mod poset;
pub mod transform;
pub mod triangle;
pub mod verify;

pub use dims::{fiber_dim, flag_dim, orbit_dim};
pub use enumerate::enumerate;
pub use error::{Error, Result};
pub use multisegment::{nu, nu_bar, Multisegment};
pub use order::{
    compare, coweight_pairing, leq, leq_chutewise, leq_geometric, AdaptedRootOrder, Comparison, OrderMethod,
};
pub use poset::{hasse, OrbitPoset};
pub use transform::{transform_t, transform_t_prime};
pub use triangle::{parse_triangle, DimVector, TriangularArray};
