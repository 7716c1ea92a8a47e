//! Orbit dimensions.
//!
//! `dim O_Y` splits as the dimension of the space of kernel flags of type `Y`
//! plus the dimension of the representations preserving a fixed such flag.

use crate::triangle::TriangularArray;

/// `sum_{i < n} sum_{j < k} y_{ij} y_{ik}`.
pub fn flag_dim(y: &TriangularArray) -> u64 {
    let n = y.size();
    let mut total = 0u64;
    for i in 1..n {
        let chute = y.chute(i);
        let mut prefix = 0u64;
        for &v in chute {
            total += prefix * v as u64;
            prefix += v as u64;
        }
    }
    total
}

/// `sum_{i < n} sum_{j < k} y_{i+1,j} y_{ik}`.
pub fn fiber_dim(y: &TriangularArray) -> u64 {
    let n = y.size();
    let mut total = 0u64;
    for i in 1..n {
        let below = y.chute(i + 1);
        let mut prefix = 0u64;
        for k in 2..=n - i + 1 {
            prefix += below[k - 2] as u64;
            total += prefix * y.get(i, k) as u64;
        }
    }
    total
}

pub fn orbit_dim(y: &TriangularArray) -> u64 {
    flag_dim(y) + fiber_dim(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    /// Literal double sums over `1 <= j < k <= n - i + 1`.
    fn naive(y: &TriangularArray) -> (u64, u64) {
        let n = y.size();
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..n {
            for k in 1..=n - i + 1 {
                for j in 1..k {
                    a += y.get(i, j) as u64 * y.get(i, k) as u64;
                    b += y.get(i + 1, j) as u64 * y.get(i, k) as u64;
                }
            }
        }
        (a, b)
    }

    #[test]
    fn w333_values() {
        assert_eq!(orbit_dim(&t("0,0,3/0,3/3")), 18);
        assert_eq!(orbit_dim(&t("1,1,1/1,2/3")), 15);
        assert_eq!(orbit_dim(&t("3,0,0/3,0/3")), 0);
    }

    #[test]
    fn split() {
        let y = t("1,1,1/1,2/3");
        assert_eq!((flag_dim(&y), fiber_dim(&y)), (5, 10));
        let y = t("0,0,3/0,3/3");
        assert_eq!((flag_dim(&y), fiber_dim(&y)), (0, 18));
        let z = TriangularArray::zero(4).unwrap();
        assert_eq!((flag_dim(&z), fiber_dim(&z)), (0, 0));
    }

    #[test]
    fn matches_literal_sums() {
        for w in ["3,3,3", "2,1,3,2", "1,2", "4"] {
            for y in crate::enumerate::enumerate(&w.parse().unwrap()) {
                assert_eq!((flag_dim(&y), fiber_dim(&y)), naive(&y), "{y}");
            }
        }
    }
}
