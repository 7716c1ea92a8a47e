//! Integer-valued invariants `I`, `J` and `K_i` that steer the procedures.

use std::fmt;

use crate::error::{Error, Result};
use crate::triangle::TriangularArray;

/// A column index or the distinguished value `Infinity`.
///
/// Every finite value orders before `Infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedIndex {
    Finite(usize),
    Infinity,
}

impl ExtendedIndex {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedIndex::Finite(j) => Some(j),
            ExtendedIndex::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedIndex::Finite(_))
    }
}

impl fmt::Display for ExtendedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedIndex::Finite(j) => write!(f, "{j}"),
            ExtendedIndex::Infinity => f.write_str("inf"),
        }
    }
}

fn check_k(y: &TriangularArray, k: usize) -> Result<()> {
    if k < 1 || k > y.size() {
        return Err(Error::Index(format!("k = {k} outside 1..={}", y.size())));
    }
    Ok(())
}

/// Smallest `j >= k` with `y_{1j} > 0`.
pub fn inv_i(y: &TriangularArray, k: usize) -> Result<ExtendedIndex> {
    check_k(y, k)?;
    Ok((k..=y.size()).find(|&j| y.get(1, j) > 0).map_or(ExtendedIndex::Infinity, ExtendedIndex::Finite))
}

/// Smallest `j > I(y, k)` with `y_{1j} < y_{2,j-1}`, i.e. the first column past
/// `I` where the top chute can be raised. The scan also runs when `I = 1`.
pub fn inv_j(y: &TriangularArray, k: usize) -> Result<ExtendedIndex> {
    let start = match inv_i(y, k)? {
        ExtendedIndex::Finite(j) => j,
        ExtendedIndex::Infinity => return Ok(ExtendedIndex::Infinity),
    };
    let n = y.size();
    Ok((start + 1..=n).find(|&j| y.get(1, j) < y.get(2, j - 1)).map_or(ExtendedIndex::Infinity, ExtendedIndex::Finite))
}

/// `max({1} u {j : 2 <= j <= k, y_{ij} < y_{i+1,j-1}})`: the largest column
/// `<= k` at which chute `i` can be raised. Requires `1 <= i <= n - k + 1`.
pub fn inv_k(y: &TriangularArray, i: usize, k: usize) -> Result<usize> {
    let n = y.size();
    if k < 1 || i < 1 || i + k > n + 1 {
        return Err(Error::Index(format!("K_{i}(Y, {k}) needs 1 <= i <= n - k + 1 with n = {n}")));
    }
    Ok((2..=k).rev().find(|&j| y.get(i, j) < y.get(i + 1, j - 1)).unwrap_or(1))
}
