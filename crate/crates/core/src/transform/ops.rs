//! Elementary operations: deleting and adjoining chutes and ladders, and
//! raising or lowering a single entry.

use crate::error::{Error, Result};
use crate::triangle::TriangularArray;

/// Deletes the first chute.
pub fn del_chute(y: &TriangularArray) -> Result<TriangularArray> {
    let n = y.size();
    if n < 2 {
        return Err(Error::Size(n));
    }
    Ok(TriangularArray::from_chutes_unchecked(y.chutes()[1..].to_vec()))
}

/// Deletes the last ladder.
pub fn del_ladder(y: &TriangularArray) -> Result<TriangularArray> {
    let n = y.size();
    if n < 2 {
        return Err(Error::Size(n));
    }
    let chutes = y.chutes()[..n - 1].iter().map(|c| c[..c.len() - 1].to_vec()).collect();
    Ok(TriangularArray::from_chutes_unchecked(chutes))
}

/// Makes `q` (length `n + 1`) the new first chute. Needs `q_j <= y_{1,j-1}`
/// for `2 <= j <= n + 1` so that the result is a triangular array.
pub fn adjoin_chute(y: &TriangularArray, q: &[u32]) -> Result<TriangularArray> {
    let n = y.size();
    if q.len() != n + 1 {
        return Err(Error::Shape(format!("new chute has {} entries, expected {}", q.len(), n + 1)));
    }
    let mut chutes = Vec::with_capacity(n + 1);
    chutes.push(q.to_vec());
    chutes.extend(y.chutes().iter().cloned());
    TriangularArray::from_chutes(chutes)
}

/// Adjoins `q` (length `n + 1`, weakly decreasing) as the new last ladder:
/// `y_{i, n-i+2} = q_{n-i+2}`.
pub fn adjoin_ladder(y: &TriangularArray, q: &[u32]) -> Result<TriangularArray> {
    let n = y.size();
    if q.len() != n + 1 {
        return Err(Error::Shape(format!("new ladder has {} entries, expected {}", q.len(), n + 1)));
    }
    if q.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NotDecreasing(q.to_vec()));
    }
    let mut chutes: Vec<Vec<u32>> = y.chutes().to_vec();
    chutes.push(Vec::new());
    for (i0, chute) in chutes.iter_mut().enumerate() {
        // chute i = i0 + 1 gains column n - i + 2, holding q_{n-i+2}
        chute.push(q[n - i0]);
    }
    Ok(TriangularArray::from_chutes_unchecked(chutes))
}

/// The first chute `(y_{11}, ..., y_{1n})`.
pub fn top(y: &TriangularArray) -> Vec<u32> {
    y.chute(1).to_vec()
}

fn check_position(y: &TriangularArray, i: usize, j: usize) -> Result<()> {
    let n = y.size();
    if i < 1 || i > n || j < 1 || j > n - i + 1 {
        return Err(Error::Index(format!("position ({i},{j}) outside a triangle of size {n}")));
    }
    Ok(())
}

/// Whether `raise(y, i, j)` is defined: `j = 1` or `y_{ij} < y_{i+1,j-1}`.
pub fn can_raise(y: &TriangularArray, i: usize, j: usize) -> bool {
    check_position(y, i, j).is_ok() && (j == 1 || y.get(i, j) < y.get(i + 1, j - 1))
}

/// Whether `lower(y, i, j)` is defined.
pub fn can_lower(y: &TriangularArray, i: usize, j: usize) -> bool {
    check_position(y, i, j).is_ok() && if i == 1 { y.get(1, j) > 0 } else { y.get(i, j) > y.get_or_zero(i - 1, j + 1) }
}

/// Adds one to `y_{ij}`.
pub fn raise(y: &TriangularArray, i: usize, j: usize) -> Result<TriangularArray> {
    check_position(y, i, j)?;
    if !can_raise(y, i, j) {
        return Err(Error::UndefinedMove { op: "raise", chute: i, column: j });
    }
    let mut out = y.clone();
    out.chutes_mut()[i - 1][j - 1] += 1;
    Ok(out)
}

/// Subtracts one from `y_{ij}`.
pub fn lower(y: &TriangularArray, i: usize, j: usize) -> Result<TriangularArray> {
    check_position(y, i, j)?;
    if !can_lower(y, i, j) {
        return Err(Error::UndefinedMove { op: "lower", chute: i, column: j });
    }
    let mut out = y.clone();
    out.chutes_mut()[i - 1][j - 1] -= 1;
    Ok(out)
}
