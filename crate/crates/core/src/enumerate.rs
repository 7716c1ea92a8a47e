//! Enumeration of `P(w)`.
//!
//! Arrays are produced in descending lexicographic order of their concatenated
//! chutes, so the zero representation (all mass in column 1) comes first and the
//! first chute varies slowest.

use crate::triangle::{DimVector, TriangularArray};

/// All triangular arrays with chute sums `w`.
pub fn enumerate(w: &DimVector) -> Vec<TriangularArray> {
    let n = w.len();
    let mut out = Vec::new();
    let mut chutes: Vec<Vec<u32>> = Vec::with_capacity(n);
    extend(w, &mut chutes, &mut out);
    out
}

/// Number of elements of `P(w)` without materializing them.
pub fn count(w: &DimVector) -> usize {
    enumerate(w).len()
}

fn extend(w: &DimVector, chutes: &mut Vec<Vec<u32>>, out: &mut Vec<TriangularArray>) {
    let n = w.len();
    let i = chutes.len() + 1;
    if i > n {
        out.push(TriangularArray::from_chutes_unchecked(chutes.clone()));
        return;
    }
    let len = n - i + 1;
    // y[i][j] >= y[i-1][j+1]
    let lower: Vec<u32> = match chutes.last() {
        Some(prev) => (0..len).map(|j0| prev[j0 + 1]).collect(),
        None => vec![0; len],
    };
    let floor: u32 = lower.iter().sum();
    let target = w.get(i);
    if floor > target {
        return;
    }
    let mut row = lower.clone();
    compositions_desc(&lower, target - floor, 0, &mut row, &mut |row| {
        chutes.push(row.to_vec());
        extend(w, chutes, out);
        chutes.pop();
    });
}

/// Visits every `row >= lower` (entrywise) with `sum(row - lower) = slack`,
/// in descending lexicographic order.
fn compositions_desc(lower: &[u32], slack: u32, pos: usize, row: &mut [u32], visit: &mut dyn FnMut(&[u32])) {
    if pos + 1 == lower.len() {
        row[pos] = lower[pos] + slack;
        visit(row);
        return;
    }
    for extra in (0..=slack).rev() {
        row[pos] = lower[pos] + extra;
        compositions_desc(lower, slack - extra, pos + 1, row, visit);
    }
}
