//! Dense exact rational matrices.
//!
//! Rank and kernel use fraction-free (Bareiss) elimination on integer rows
//! obtained by clearing denominators, so every intermediate quantity is an
//! integer minor of the input and no rational arithmetic happens in the inner
//! loop.

#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    /// Builds from integer rows; `cols` is needed when there are no rows.
    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, BigRational::from_integer(BigInt::from(v)));
            }
        }
        m
    }

    pub fn from_rational_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<BigRational> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols, "ragged matrix rows");
        RationalMatrix { rows: r, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = RationalMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(t, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &BigRational) -> RationalMatrix {
        let data = self.data.iter().map(|a| a * s).collect();
        RationalMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Rows scaled by the lcm of their denominators.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn exact_rank(&self) -> usize {
        let mut rows = self.integer_rows();
        bareiss_forward(&mut rows, self.cols)
    }

    /// Integer basis of the right kernel `{v : M v = 0}`; one vector per free
    /// column, each with content 1.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let mut rows = self.integer_rows();
        let (pivots, d) = bareiss_gauss_jordan(&mut rows, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigInt::zero(); self.cols];
                v[f] = d.clone();
                for (t, &p) in pivots.iter().enumerate() {
                    v[p] = -rows[t][f].clone();
                }
                let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !g.is_zero() && !g.is_one() {
                    for x in &mut v {
                        *x /= &g;
                    }
                }
                v
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan over the rationals.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RationalMatrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                    inv.data.swap(p * n + c, col * n + c);
                }
            }
            let piv = a.get(col, col).clone();
            for c in 0..n {
                a.data[col * n + c] /= &piv;
                inv.data[col * n + c] /= &piv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let da = a.get(col, c) * &f;
                    let di = inv.get(col, c) * &f;
                    a.data[r * n + c] -= da;
                    inv.data[r * n + c] -= di;
                }
            }
        }
        Some(inv)
    }

    /// Applies the matrix to an integer vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, x)| acc + a * BigRational::from_integer(x.clone()))
            })
            .collect()
    }
}

/// Bareiss elimination below the pivots only; returns the rank.
fn bareiss_forward(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let m = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let piv = rows[r][col].clone();
        for i in r + 1..m {
            let f = rows[i][col].clone();
            for j in col..cols {
                let v = (&piv * &rows[i][j] - &f * &rows[r][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = piv;
        r += 1;
    }
    r
}

/// Fraction-free Gauss-Jordan. On return every pivot entry equals the returned
/// common value `d`, and every other entry of a pivot column is zero. Rows past
/// the pivot count are zero.
fn bareiss_gauss_jordan(rows: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, BigInt) {
    let m = rows.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let piv = rows[r][col].clone();
        for i in 0..m {
            if i == r {
                continue;
            }
            let f = rows[i][col].clone();
            for j in 0..cols {
                let num = &piv * &rows[i][j] - &f * &rows[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step was not exact");
                rows[i][j] = q;
            }
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    if prev.is_negative() {
        // keep the common pivot positive; negating every row preserves the kernel
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        prev = -prev;
    }
    (pivots, prev)
}

fn fmt_rational(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse { position: 1, message: format!("not a rational number: {s:?}") };
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Serialized as an array of rows of `"p/q"` strings. A matrix with no rows
/// loses its column count, which is recovered from the dimension vector.
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|r| self.row(r).iter().map(fmt_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(D::Error::custom("ragged matrix rows"));
            }
            let parsed: std::result::Result<Vec<_>, _> = row.iter().map(|s| parse_rational(s)).collect();
            out.push(parsed.map_err(D::Error::custom)?);
        }
        Ok(RationalMatrix::from_rational_rows(out, cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    /// Rank by plain Gaussian elimination over the rationals.
    fn rational_rank(m: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
            a.swap(rank, p);
            for r in rank + 1..a.len() {
                let f = &a[r][col] / &a[rank][col];
                for c in col..m.cols() {
                    let d = &a[rank][c] * &f;
                    a[r][c] -= d;
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn rank_examples() {
        for k in 0..5 {
            assert_eq!(RationalMatrix::identity(k).exact_rank(), k);
        }
        assert_eq!(RationalMatrix::zeros(3, 4).exact_rank(), 0);
        assert_eq!(RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]], 2).exact_rank(), 1);
        assert_eq!(RationalMatrix::zeros(0, 3).exact_rank(), 0);
        assert_eq!(RationalMatrix::zeros(3, 0).exact_rank(), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let m = RationalMatrix::from_rational_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]], 2);
        assert_eq!(m.exact_rank(), 1);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]], 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_i64_rows(&[vec![2, 1], vec![7, 4]], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));
        assert!(RationalMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]], 2).inverse().is_none());
    }

    #[test]
    fn json_strings() {
        let m = RationalMatrix::from_rational_rows(vec![vec![q(1, 2), q(-3, 1)]], 2);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3/1"]]"#);
        let back: RationalMatrix = serde_json::from_str(r#"[["1/2","-3"]]"#).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<RationalMatrix>(r#"[["1/0"]]"#).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec((-3i64..=3, 1i64..=3), c), r).prop_map(move |rows| {
                let rows = rows.into_iter().map(|row| row.into_iter().map(|(p, d)| q(p, d)).collect()).collect();
                RationalMatrix::from_rational_rows(rows, c)
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_rational_elimination(m in small_matrix()) {
            prop_assert_eq!(m.exact_rank(), rational_rank(&m));
        }

        #[test]
        fn kernel_is_a_basis_of_the_null_space(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - rational_rank(&m));
            for v in &k {
                prop_assert!(m.apply(v).iter().all(Zero::is_zero));
            }
            if !k.is_empty() {
                let rows: Vec<Vec<BigRational>> = k
                    .iter()
                    .map(|v| v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                    .collect();
                let kk = RationalMatrix::from_rational_rows(rows, m.cols());
                prop_assert_eq!(rational_rank(&kk), k.len());
            }
        }
    }
}
