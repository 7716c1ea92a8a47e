//! Points of `E(w)`: representations `C^{w_1} -> C^{w_2} -> ... -> C^{w_n}`
//! over the rationals, and their orbit labels.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::matrix::RationalMatrix;
use crate::triangle::{DimVector, TriangularArray};

/// `maps[i - 1]` is `x_i`, a `w_{i+1} x w_i` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuiverRep {
    w: DimVector,
    maps: Vec<RationalMatrix>,
}

#[derive(Deserialize)]
struct QuiverRepJson {
    w: DimVector,
    maps: Vec<RationalMatrix>,
}

impl<'de> Deserialize<'de> for QuiverRep {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QuiverRepJson::deserialize(d)?;
        // an empty row list carries no column count; rebuild from w
        let maps =
            j.maps
                .into_iter()
                .enumerate()
                .map(|(k, m)| {
                    if m.rows() == 0 && k < j.w.len() {
                        RationalMatrix::zeros(0, j.w.entries()[k] as usize)
                    } else {
                        m
                    }
                })
                .collect();
        QuiverRep::new(j.w, maps).map_err(serde::de::Error::custom)
    }
}

impl QuiverRep {
    pub fn new(w: DimVector, maps: Vec<RationalMatrix>) -> Result<Self> {
        let n = w.len();
        if maps.len() != n - 1 {
            return Err(Error::Shape(format!("{} maps given for {} vertices", maps.len(), n)));
        }
        for (k, m) in maps.iter().enumerate() {
            let (src, dst) = (w.entries()[k] as usize, w.entries()[k + 1] as usize);
            if m.rows() != dst || m.cols() != src {
                return Err(Error::Shape(format!(
                    "x_{} is {}x{}, expected {}x{}",
                    k + 1,
                    m.rows(),
                    m.cols(),
                    dst,
                    src
                )));
            }
        }
        Ok(QuiverRep { w, maps })
    }

    /// The zero representation of dimension `w`.
    pub fn zero(w: &DimVector) -> Self {
        let maps = w.entries().windows(2).map(|p| RationalMatrix::zeros(p[1] as usize, p[0] as usize)).collect();
        QuiverRep { w: w.clone(), maps }
    }

    pub fn dim_vector(&self) -> &DimVector {
        &self.w
    }

    /// `x_i`, 1-based.
    pub fn map(&self, i: usize) -> &RationalMatrix {
        &self.maps[i - 1]
    }

    pub fn maps(&self) -> &[RationalMatrix] {
        &self.maps
    }

    pub fn add(&self, other: &QuiverRep) -> QuiverRep {
        assert_eq!(self.w, other.w);
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        QuiverRep { w: self.w.clone(), maps }
    }

    pub fn scale(&self, s: &BigRational) -> QuiverRep {
        QuiverRep { w: self.w.clone(), maps: self.maps.iter().map(|m| m.scale(s)).collect() }
    }

    /// `(g_1, ..., g_n) . x = (g_2 x_1 g_1^{-1}, ..., g_n x_{n-1} g_{n-1}^{-1})`.
    pub fn act(&self, g: &[RationalMatrix]) -> Result<QuiverRep> {
        let n = self.w.len();
        if g.len() != n {
            return Err(Error::Shape(format!("{} group elements for {} vertices", g.len(), n)));
        }
        let inverses: Vec<RationalMatrix> = g
            .iter()
            .enumerate()
            .map(|(k, gk)| gk.inverse().ok_or_else(|| Error::Shape(format!("g_{} is not invertible", k + 1))))
            .collect::<Result<_>>()?;
        let maps = self.maps.iter().enumerate().map(|(k, x)| g[k + 1].mul(x).mul(&inverses[k])).collect();
        QuiverRep::new(self.w.clone(), maps)
    }

    /// Composition `x_{i+j-1} ... x_{i+1} x_i : C^{w_i} -> C^{w_{i+j}}`.
    pub fn path(&self, i: usize, j: usize) -> RationalMatrix {
        let mut p = RationalMatrix::identity(self.w.get(i) as usize);
        for step in i..i + j {
            p = self.map(step).mul(&p);
        }
        p
    }
}

/// Index of `u_{ij}^{(k)}` in the basis of `C^{w_i}` ordered by `(j, k)`.
fn basis_index(y: &TriangularArray, i: usize, j: usize, k: usize) -> usize {
    y.chute(i)[..j - 1].iter().map(|&v| v as usize).sum::<usize>() + (k - 1)
}

/// The normal form of type `Y`: `x_i(u_{ij}^{(k)}) = u_{i+1,j-1}^{(k)}` for
/// `j > 1`, and `0` for `j = 1`.
pub fn jordan_rep(y: &TriangularArray) -> QuiverRep {
    let w = y.dim_vector();
    let n = y.size();
    let mut maps = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = RationalMatrix::zeros(w.get(i + 1) as usize, w.get(i) as usize);
        for j in 2..=n - i + 1 {
            for k in 1..=y.get(i, j) as usize {
                m.set(basis_index(y, i + 1, j - 1, k), basis_index(y, i, j, k), BigRational::one());
            }
        }
        maps.push(m);
    }
    QuiverRep { w, maps }
}

/// Recovers `Y` from `dim ker x_{i+j-1} ... x_i = y_{i1} + ... + y_{ij}`.
pub fn orbit_label(x: &QuiverRep) -> Result<TriangularArray> {
    let w = x.dim_vector();
    let n = w.len();
    let mut chutes = Vec::with_capacity(n);
    for i in 1..=n {
        let wi = w.get(i) as i64;
        let mut prev = 0i64;
        let mut chute = Vec::with_capacity(n - i + 1);
        for j in 1..=n - i {
            let s = wi - x.path(i, j).exact_rank() as i64;
            chute.push(s - prev);
            prev = s;
        }
        chute.push(wi - prev);
        chutes.push(chute);
    }
    TriangularArray::new(chutes).map_err(|e| Error::Internal(format!("kernel dimensions are inconsistent: {e}")))
}

/// `dim End(M(x))`: tuples `(g_1, ..., g_n)` with `g_{i+1} x_i = x_i g_i`.
pub fn endomorphism_dim(x: &QuiverRep) -> usize {
    use num_traits::Zero;
    let w: Vec<usize> = x.dim_vector().entries().iter().map(|&v| v as usize).collect();
    let mut offsets = Vec::with_capacity(w.len());
    let mut total = 0;
    for &d in &w {
        offsets.push(total);
        total += d * d;
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * w[v] + c;
    let mut equations = Vec::new();
    for a in 0..w.len().saturating_sub(1) {
        let xa = &x.maps[a];
        for r in 0..w[a + 1] {
            for c in 0..w[a] {
                let mut row = vec![BigRational::zero(); total];
                for t in 0..w[a + 1] {
                    row[var(a + 1, r, t)] += xa.get(t, c);
                }
                for t in 0..w[a] {
                    row[var(a, t, c)] -= xa.get(r, t);
                }
                equations.push(row);
            }
        }
    }
    total - RationalMatrix::from_rational_rows(equations, total).exact_rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> TriangularArray {
        s.parse().unwrap()
    }

    #[test]
    fn jordan_examples() {
        let x = jordan_rep(&t("0,1/1"));
        assert_eq!(x.map(1), &RationalMatrix::from_i64_rows(&[vec![1]], 1));
        let x = jordan_rep(&t("1,0/1"));
        assert_eq!(x.map(1), &RationalMatrix::from_i64_rows(&[vec![0]], 1));
        let x = jordan_rep(&t("0,3,0/3,0/3"));
        assert_eq!(x.map(1), &RationalMatrix::identity(3));
        assert!(x.map(2).is_zero());
    }

    #[test]
    fn labels() {
        let w: DimVector = "2,2".parse().unwrap();
        assert_eq!(orbit_label(&QuiverRep::zero(&w)).unwrap(), t("2,0/2"));
        let x = QuiverRep::new("1,1".parse().unwrap(), vec![RationalMatrix::from_i64_rows(&[vec![1]], 1)]).unwrap();
        assert_eq!(orbit_label(&x).unwrap(), t("0,1/1"));
        let x = QuiverRep::new("3".parse().unwrap(), vec![]).unwrap();
        assert_eq!(orbit_label(&x).unwrap(), t("3"));
    }

    #[test]
    fn round_trip_w333() {
        for y in crate::enumerate::enumerate(&"3,3,3".parse().unwrap()) {
            assert_eq!(orbit_label(&jordan_rep(&y)).unwrap(), y);
        }
    }

    #[test]
    fn endomorphisms() {
        assert_eq!(endomorphism_dim(&jordan_rep(&t("0,1/1"))), 1);
        assert_eq!(endomorphism_dim(&jordan_rep(&t("1,0/1"))), 2);
        assert_eq!(endomorphism_dim(&jordan_rep(&t("3,0,0/3,0/3"))), 27);
        assert_eq!(endomorphism_dim(&jordan_rep(&t("0,0,3/0,3/3"))), 9);
    }

    #[test]
    fn shape_checks() {
        let bad = QuiverRep::new("1,2".parse().unwrap(), vec![RationalMatrix::zeros(1, 2)]);
        assert!(matches!(bad, Err(Error::Shape(_))));
        assert!(QuiverRep::new("1,2".parse().unwrap(), vec![]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = jordan_rep(&t("0,1,0/1,0/2"));
        let s = serde_json::to_string(&x).unwrap();
        let back: QuiverRep = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let z = QuiverRep::zero(&"0,2".parse().unwrap());
        let back: QuiverRep = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        assert_eq!(back, z);
    }
}
