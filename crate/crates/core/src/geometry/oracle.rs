//! The Fourier transform on orbit labels, computed geometrically: the label of
//! the dense orbit meeting `C(jordan_rep(Y))`.
//!
//! Sampling uses ChaCha8 seeded with `seed`; trial `t` reads stream `t`, so each
//! trial is reproducible on its own and trials can run in any order.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dims::orbit_dim;
use crate::error::{Error, Result};
use crate::geometry::commuting::{commuting_basis, CommutingBasis};
use crate::geometry::rep::{jordan_rep, orbit_label, QuiverRep};
use crate::order::leq_chutewise_unchecked;
use crate::triangle::TriangularArray;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleParams {
    pub seed: u64,
    pub trials: usize,
    pub range: i64,
}

impl Default for OracleParams {
    fn default() -> Self {
        OracleParams { seed: 0, trials: 3, range: 7 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericOrbit {
    pub label: TriangularArray,
    /// Labels of the individual trials, in trial order.
    pub samples: Vec<TriangularArray>,
    pub commuting_dim: usize,
}

impl GenericOrbit {
    /// Every sample lies below the returned label.
    pub fn is_monotone(&self) -> bool {
        self.samples.iter().all(|s| leq_chutewise_unchecked(s, &self.label))
    }
}

/// Coefficients for trial `trial`, uniform in `[-range, range]`.
pub fn trial_coefficients(seed: u64, trial: u64, count: usize, range: i64) -> Vec<i64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    (0..count).map(|_| rng.random_range(-range..=range)).collect()
}

fn sample(cb: &CommutingBasis, coefficients: &[i64]) -> Result<TriangularArray> {
    orbit_label(&cb.combine(coefficients))
}

pub fn generic_orbit(x: &QuiverRep, params: &OracleParams) -> Result<GenericOrbit> {
    if params.trials < 1 {
        return Err(Error::Index("trials must be at least 1".into()));
    }
    if params.range < 1 {
        return Err(Error::Index("range must be at least 1".into()));
    }
    let cb = commuting_basis(x);
    let samples = (0..params.trials)
        .into_par_iter()
        .map(|t| sample(&cb, &trial_coefficients(params.seed, t as u64, cb.dim(), params.range)))
        .collect::<Result<Vec<_>>>()?;
    // larger orbits have strictly larger dimension, so the top sample by
    // dimension is the only candidate for the maximum
    let mut best = 0;
    for (k, s) in samples.iter().enumerate() {
        if orbit_dim(s) > orbit_dim(&samples[best]) {
            best = k;
        }
    }
    Ok(GenericOrbit { label: samples[best].clone(), samples, commuting_dim: cb.dim() })
}

pub fn fourier_oracle(y: &TriangularArray, params: &OracleParams) -> Result<TriangularArray> {
    Ok(generic_orbit(&jordan_rep(y), params)?.label)
}
