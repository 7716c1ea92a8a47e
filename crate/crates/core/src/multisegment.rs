//! Multisegments (Kostant partitions) and their bijection with triangular arrays.

use std::fmt;

use crate::triangle::{DimVector, TriangularArray};

/// Multiplicities `b_{ij}`, `1 <= i <= j <= n`, of the indecomposables `R_{ij}`
/// whose dimension vector is `e_i + ... + e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multisegment {
    n: usize,
    // row i-1 holds b_{i,i}, ..., b_{i,n}
    b: Vec<Vec<u32>>,
}

impl Multisegment {
    pub fn zero(n: usize) -> Self {
        Multisegment { n, b: (1..=n).map(|i| vec![0; n - i + 1]).collect() }
    }

    /// Builds from a list of `((i, j), multiplicity)`; indices are 1-based.
    pub fn from_entries(n: usize, entries: &[((usize, usize), u32)]) -> Self {
        let mut m = Multisegment::zero(n);
        for &((i, j), v) in entries {
            m.set(i, j, v);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(1 <= i && i <= j && j <= self.n, "segment [{i},{j}] out of range");
        self.b[i - 1][j - i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        assert!(1 <= i && i <= j && j <= self.n, "segment [{i},{j}] out of range");
        self.b[i - 1][j - i] = v;
    }

    /// Nonzero `((i, j), b_{ij})` in order of `i` then `j`.
    pub fn support(&self) -> Vec<((usize, usize), u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                let v = self.get(i, j);
                if v > 0 {
                    out.push(((i, j), v));
                }
            }
        }
        out
    }

    /// `sum b_{ij} (e_i + ... + e_j)`.
    pub fn dim_vector(&self) -> DimVector {
        let mut w = vec![0u32; self.n];
        for i in 1..=self.n {
            for j in i..=self.n {
                let v = self.get(i, j);
                for wk in &mut w[i - 1..j] {
                    *wk += v;
                }
            }
        }
        DimVector::new(w).expect("n >= 1")
    }

    pub fn add(&self, other: &Multisegment) -> Multisegment {
        assert_eq!(self.n, other.n);
        let b = self.b.iter().zip(&other.b).map(|(x, y)| x.iter().zip(y).map(|(a, c)| a + c).collect()).collect();
        Multisegment { n: self.n, b }
    }

    /// `(b_{ij}) -> (b_{n-j+1, n-i+1})`, a bijection `B(w) -> B(w*)`.
    pub fn reverse(&self) -> Multisegment {
        let n = self.n;
        let mut out = Multisegment::zero(n);
        for i in 1..=n {
            for j in i..=n {
                out.set(n - j + 1, n - i + 1, self.get(i, j));
            }
        }
        out
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support().iter().map(|((i, j), v)| format!("{v}x[{i},{j}]")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `nu(Y)_{ij} = y_{i, j-i+1} - y_{i-1, j-i+2}`, with chute 0 read as zero.
pub fn nu(y: &TriangularArray) -> Multisegment {
    let n = y.size();
    let mut b = Multisegment::zero(n);
    for i in 1..=n {
        for j in i..=n {
            let here = y.get(i, j - i + 1);
            let above = y.get_or_zero(i - 1, j - i + 2);
            // the ladder invariant guarantees here >= above
            b.set(i, j, here - above);
        }
    }
    b
}

/// `nu_bar(b)_{ij} = sum_{h <= i} b_{h, i+j-1}`.
pub fn nu_bar(b: &Multisegment) -> TriangularArray {
    let n = b.size();
    let chutes =
        (1..=n).map(|i| (1..=n - i + 1).map(|j| (1..=i).map(|h| b.get(h, i + j - 1)).sum()).collect()).collect();
    TriangularArray::from_chutes_unchecked(chutes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    #[test]
    fn nu_examples() {
        let b = nu(&t("0,1,2/1,2/3"));
        assert_eq!(b, Multisegment::from_entries(3, &[((1, 2), 1), ((1, 3), 2), ((3, 3), 1)]));
        assert_eq!(b.dim_vector().entries(), &[3, 3, 3]);
        assert_eq!(nu(&t("5")), Multisegment::from_entries(1, &[((1, 1), 5)]));
        assert_eq!(nu(&t("0,0,3/0,3/3")), Multisegment::from_entries(3, &[((1, 3), 3)]));
    }

    #[test]
    fn nu_bar_examples() {
        let b = Multisegment::from_entries(3, &[((1, 2), 1), ((1, 3), 2), ((3, 3), 1)]);
        assert_eq!(nu_bar(&b), t("0,1,2/1,2/3"));
        assert_eq!(nu_bar(&Multisegment::zero(3)), TriangularArray::zero(3).unwrap());
        assert_eq!(nu_bar(&Multisegment::from_entries(3, &[((1, 3), 3)])), t("0,0,3/0,3/3"));
    }

    #[test]
    fn reverse_examples() {
        let s = Multisegment::from_entries(2, &[((1, 2), 1)]);
        assert_eq!(s.reverse(), s);
        let b = Multisegment::from_entries(2, &[((1, 1), 1), ((2, 2), 2)]);
        assert_eq!(b.reverse(), Multisegment::from_entries(2, &[((2, 2), 1), ((1, 1), 2)]));
        let f = Multisegment::from_entries(3, &[((1, 3), 3)]);
        assert_eq!(f.reverse(), f);
    }

    #[test]
    fn nu_is_additive_on_direct_sums() {
        let y = t("0,1/1");
        let s = y.direct_sum(&y).unwrap();
        assert_eq!(nu(&s), Multisegment::from_entries(2, &[((1, 2), 2)]));
        assert_eq!(nu(&s), nu(&y).add(&nu(&y)));
    }
}
