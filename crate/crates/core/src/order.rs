//! The closure order on `P(w)`.
//!
//! Three routes are provided and must agree:
//! - chutewise dominance: `Y <= Z` iff every partial sum of every chute of `Y`
//!   is at least the corresponding partial sum of `Z`;
//! - segment sums of the multisegments `b = nu(Y)`, `c = nu(Z)` over the
//!   rectangles `l <= i <= k <= j <= n`;
//! - the chamber-coweight form, summing `<lambda^t, alpha^s> nu(Y)^s` along the
//!   adapted root order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multisegment::nu;
use crate::triangle::TriangularArray;

fn check_same_dim(y: &TriangularArray, z: &TriangularArray) -> Result<()> {
    let (a, b) = (y.dim_vector(), z.dim_vector());
    if a != b {
        return Err(Error::DimMismatch { left: a.entries().to_vec(), right: b.entries().to_vec() });
    }
    Ok(())
}

/// Chutewise dominance `Y <=_c Z`.
pub fn leq_chutewise(y: &TriangularArray, z: &TriangularArray) -> Result<bool> {
    check_same_dim(y, z)?;
    Ok(leq_chutewise_unchecked(y, z))
}

pub(crate) fn leq_chutewise_unchecked(y: &TriangularArray, z: &TriangularArray) -> bool {
    y.chutes().iter().zip(z.chutes()).all(|(cy, cz)| {
        let (mut sy, mut sz) = (0u64, 0u64);
        cy.iter().zip(cz).all(|(&a, &b)| {
            sy += a as u64;
            sz += b as u64;
            sy >= sz
        })
    })
}

/// Result of comparing two arrays in the closure order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "<",
            Comparison::Equal => "=",
            Comparison::Greater => ">",
            Comparison::Incomparable => "incomparable",
        })
    }
}

pub fn compare(y: &TriangularArray, z: &TriangularArray, method: OrderMethod) -> Result<Comparison> {
    let le = leq(y, z, method)?;
    let ge = leq(z, y, method)?;
    Ok(match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Less,
        (false, true) => Comparison::Greater,
        (false, false) => Comparison::Incomparable,
    })
}

/// Which formula decides the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMethod {
    Chutewise,
    Segments,
    Coweights,
}

pub fn leq(y: &TriangularArray, z: &TriangularArray, method: OrderMethod) -> Result<bool> {
    match method {
        OrderMethod::Chutewise => leq_chutewise(y, z),
        OrderMethod::Segments | OrderMethod::Coweights => leq_geometric(y, z, method),
    }
}

/// `<phi_{lk}, gamma_{ij}>` for roots at or before `phi_{lk}` in the adapted
/// order: 1 if `n >= j >= k` and `k >= i >= l`, otherwise 0.
pub fn coweight_pairing(n: usize, l: usize, k: usize, i: usize, j: usize) -> Result<u32> {
    if !(1 <= l && l <= k && k <= n) {
        return Err(Error::Index(format!("coweight index ({l},{k}) outside 1 <= l <= k <= {n}")));
    }
    if !(1 <= i && i <= j && j <= n) {
        return Err(Error::Index(format!("root index ({i},{j}) outside 1 <= i <= j <= {n}")));
    }
    Ok((n >= j && j >= k && k >= i && i >= l) as u32)
}

/// Positive roots `gamma_{ij}` in the order adapted to the equioriented quiver,
/// `gamma_{nn}, gamma_{n-1,n}, gamma_{n-1,n-1}, ..., gamma_{1n}, ..., gamma_{11}`,
/// together with the parallel chamber coweights `phi_{lk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedRootOrder {
    n: usize,
    roots: Vec<(usize, usize)>,
    coweights: Vec<(usize, usize)>,
}

impl AdaptedRootOrder {
    pub fn new(n: usize) -> Self {
        let mut roots = Vec::with_capacity(n * (n + 1) / 2);
        for i in (1..=n).rev() {
            for j in (i..=n).rev() {
                roots.push((i, j));
            }
        }
        // phi_{lk} runs through the same index pattern as gamma_{ij}
        let coweights = roots.clone();
        AdaptedRootOrder { n, roots, coweights }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &[(usize, usize)] {
        &self.roots
    }

    pub fn coweights(&self) -> &[(usize, usize)] {
        &self.coweights
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// `Y <= Z` via one of the multisegment formulas.
pub fn leq_geometric(y: &TriangularArray, z: &TriangularArray, method: OrderMethod) -> Result<bool> {
    check_same_dim(y, z)?;
    let (b, c) = (nu(y), nu(z));
    let n = y.size();
    match method {
        OrderMethod::Segments | OrderMethod::Chutewise => {
            for k in 1..=n {
                for l in 1..=k {
                    let mut sb = 0u64;
                    let mut sc = 0u64;
                    for i in l..=k {
                        for j in k..=n {
                            sb += b.get(i, j) as u64;
                            sc += c.get(i, j) as u64;
                        }
                    }
                    if sb < sc {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        OrderMethod::Coweights => {
            let order = AdaptedRootOrder::new(n);
            for (t, &(l, k)) in order.coweights().iter().enumerate() {
                let mut sb = 0u64;
                let mut sc = 0u64;
                for &(i, j) in &order.roots()[..=t] {
                    let p = coweight_pairing(n, l, k, i, j)? as u64;
                    sb += p * b.get(i, j) as u64;
                    sc += p * c.get(i, j) as u64;
                }
                if sb < sc {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
