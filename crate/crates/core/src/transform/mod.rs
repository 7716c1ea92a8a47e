//! Operations on triangular arrays culminating in the combinatorial Fourier
//! transform.

pub mod fourier;
pub mod invariants;
pub mod ops;
pub mod procedures;
pub mod trace;

pub use fourier::{
    transform_t, transform_t_prime, transform_t_prime_traced, transform_t_prime_with_q_sequences, transform_t_traced,
};
pub use invariants::{inv_i, inv_j, inv_k, ExtendedIndex};
pub use ops::{adjoin_chute, adjoin_ladder, can_lower, can_raise, del_chute, del_ladder, lower, raise, top};
pub use procedures::{iterate_a, proc_a, proc_b, proc_big_a, BResult, StepState};
pub use trace::Trace;
