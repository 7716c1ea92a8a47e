//! Triangular arrays and dimension vectors.
//!
//! A triangular array of size `n` is a ragged array `y[i][j]`, `1 <= i <= n`,
//! `1 <= j <= n - i + 1`, of nonnegative integers. Row `i` is called chute `i`,
//! the anti-diagonal `y[k][1], y[k-1][2], ..., y[1][k]` is ladder `k`, and
//! entries must weakly decrease along every ladder when read from chute `k`
//! up to chute `1`:
//!
//! ```text
//! y[i][j] >= y[i-1][j+1]
//! ```
//!
//! All public indices are 1-based; storage is 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions `(w_1, ..., w_n)` of the vector spaces at the quiver vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(Vec<u32>);

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Shape("dimension vector must have at least one entry".into()));
        }
        Ok(DimVector(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `w_i`, 1-based.
    pub fn get(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// `w* = (w_n, ..., w_1)`.
    pub fn reverse(&self) -> DimVector {
        DimVector(self.0.iter().rev().copied().collect())
    }

    /// Dimension of the representation space `E(w)`, i.e. `sum_i w_i w_{i+1}`.
    pub fn rep_space_dim(&self) -> u64 {
        self.0.windows(2).map(|p| p[0] as u64 * p[1] as u64).sum()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

impl FromStr for DimVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, part) in s.split(',').enumerate() {
            let t = part.trim();
            let v: u32 = t.parse().map_err(|_| Error::Parse {
                position: idx + 1,
                message: format!("dimension entry {} is not a nonnegative integer: {t:?}", idx + 1),
            })?;
            entries.push(v);
        }
        DimVector::new(entries)
    }
}

/// A validated triangular array (an element of `P(w)` for `w` its chute sums).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TriangleJson", into = "TriangleJson")]
pub struct TriangularArray {
    chutes: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    n: usize,
    chutes: Vec<Vec<i64>>,
}

impl TryFrom<TriangleJson> for TriangularArray {
    type Error = Error;

    fn try_from(j: TriangleJson) -> Result<Self> {
        if j.n != j.chutes.len() {
            return Err(Error::Shape(format!("declared size {} but {} chutes given", j.n, j.chutes.len())));
        }
        TriangularArray::new(j.chutes)
    }
}

impl From<TriangularArray> for TriangleJson {
    fn from(t: TriangularArray) -> Self {
        TriangleJson { n: t.size(), chutes: t.chutes.iter().map(|c| c.iter().map(|&v| v as i64).collect()).collect() }
    }
}

impl TriangularArray {
    /// Validates a ragged array given chute by chute.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Shape("a triangular array has size at least 1".into()));
        }
        let mut chutes = Vec::with_capacity(n);
        for (i0, chute) in entries.into_iter().enumerate() {
            if chute.len() != n - i0 {
                return Err(Error::Shape(format!("chute {} has {} entries, expected {}", i0 + 1, chute.len(), n - i0)));
            }
            let mut row = Vec::with_capacity(chute.len());
            for (j0, v) in chute.into_iter().enumerate() {
                if v < 0 {
                    return Err(Error::NegativeEntry { chute: i0 + 1, column: j0 + 1, value: v });
                }
                let v = u32::try_from(v).map_err(|_| {
                    Error::Index(format!("entry {v} at chute {}, column {} is too large", i0 + 1, j0 + 1))
                })?;
                row.push(v);
            }
            chutes.push(row);
        }
        Self::from_chutes(chutes)
    }

    /// Validates already nonnegative chutes.
    pub fn from_chutes(chutes: Vec<Vec<u32>>) -> Result<Self> {
        let n = chutes.len();
        if n == 0 {
            return Err(Error::Shape("a triangular array has size at least 1".into()));
        }
        for (i0, c) in chutes.iter().enumerate() {
            if c.len() != n - i0 {
                return Err(Error::Shape(format!("chute {} has {} entries, expected {}", i0 + 1, c.len(), n - i0)));
            }
        }
        let t = TriangularArray { chutes };
        t.check_ladders()?;
        Ok(t)
    }

    /// The all-zero array of size `n`.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("a triangular array has size at least 1".into()));
        }
        Ok(TriangularArray { chutes: (0..n).map(|i| vec![0; n - i]).collect() })
    }

    /// Constructor for callers that have already established the invariants.
    pub(crate) fn from_chutes_unchecked(chutes: Vec<Vec<u32>>) -> Self {
        debug_assert!(Self::from_chutes(chutes.clone()).is_ok());
        TriangularArray { chutes }
    }

    fn check_ladders(&self) -> Result<()> {
        let n = self.size();
        for i in 2..=n {
            for j in 1..=n - i + 1 {
                let value = self.get(i, j);
                let upper = self.get(i - 1, j + 1);
                if value < upper {
                    return Err(Error::LadderViolation {
                        chute: i,
                        column: j,
                        value,
                        upper_chute: i - 1,
                        upper_column: j + 1,
                        upper,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.chutes.len()
    }

    /// `y_{ij}`, 1-based. Panics outside the triangle.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.chutes[i - 1][j - 1]
    }

    /// `y_{ij}` with the convention that entries outside the triangle
    /// (including chute 0) are zero.
    pub fn get_or_zero(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 || i > self.size() {
            return 0;
        }
        self.chutes[i - 1].get(j - 1).copied().unwrap_or(0)
    }

    /// Chute `i`, 1-based.
    pub fn chute(&self, i: usize) -> &[u32] {
        &self.chutes[i - 1]
    }

    pub fn chutes(&self) -> &[Vec<u32>] {
        &self.chutes
    }

    /// Ladder `k` read from chute `k` (column 1) up to chute 1 (column `k`).
    pub fn ladder(&self, k: usize) -> Vec<u32> {
        (1..=k).rev().map(|i| self.get(i, k - i + 1)).collect()
    }

    /// Column `j`: `y_{1j}, ..., y_{n-j+1,j}`.
    pub fn column(&self, j: usize) -> Vec<u32> {
        (1..=self.size() + 1 - j).map(|i| self.get(i, j)).collect()
    }

    /// Chute sums, `udim(Y)`.
    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.chutes.iter().map(|c| c.iter().sum()).collect())
    }

    /// Entrywise sum; the representation of the sum is the direct sum.
    pub fn direct_sum(&self, other: &TriangularArray) -> Result<TriangularArray> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        let chutes =
            self.chutes.iter().zip(&other.chutes).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect();
        Ok(TriangularArray::from_chutes_unchecked(chutes))
    }

    /// Constant along ladders.
    pub fn is_injective(&self) -> bool {
        let n = self.size();
        (2..=n).all(|i| (1..=n - i + 1).all(|j| self.get(i, j) == self.get(i - 1, j + 1)))
    }

    /// Supported on the last ladder only.
    pub fn is_projective(&self) -> bool {
        let n = self.size();
        (1..=n).all(|i| (1..=n - i + 1).all(|j| i + j > n || self.get(i, j) == 0))
    }

    /// Mutable access for the elementary operations, which re-establish the
    /// invariants themselves.
    pub(crate) fn chutes_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.chutes
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangle serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { position: e.column(), message: e.to_string() })
    }
}

impl fmt::Display for TriangularArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.chutes.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            write_joined(f, c)?;
        }
        Ok(())
    }
}

impl FromStr for TriangularArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_triangle(s)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    for (k, v) in xs.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Parses the chute-by-chute text format, e.g. `"0,1,2/1,2/3"`.
/// Whitespace is ignored; reported positions are 1-based character offsets.
pub fn parse_triangle(text: &str) -> Result<TriangularArray> {
    let mut chutes: Vec<Vec<i64>> = vec![Vec::new()];
    let mut current: Option<i64> = None;
    let mut negative = false;
    let mut token_start = 1;

    let finish = |chutes: &mut Vec<Vec<i64>>,
                  current: &mut Option<i64>,
                  negative: &mut bool,
                  pos: usize,
                  start: usize|
     -> Result<()> {
        match current.take() {
            Some(v) => {
                chutes.last_mut().unwrap().push(if *negative { -v } else { v });
                *negative = false;
                Ok(())
            }
            None => Err(Error::Parse {
                position: if *negative { start } else { pos },
                message: "expected an integer entry".into(),
            }),
        }
    };

    let mut last_pos = 0;
    for (pos0, ch) in text.chars().enumerate() {
        let pos = pos0 + 1;
        last_pos = pos;
        match ch {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                if current.is_none() && !negative {
                    token_start = pos;
                }
                let d = ch.to_digit(10).unwrap() as i64;
                let v = current.unwrap_or(0);
                current = Some(
                    v.checked_mul(10)
                        .and_then(|v| v.checked_add(d))
                        .ok_or(Error::Parse { position: token_start, message: "entry too large".into() })?,
                );
            }
            '-' if current.is_none() && !negative => {
                negative = true;
                token_start = pos;
            }
            ',' => finish(&mut chutes, &mut current, &mut negative, pos, token_start)?,
            '/' => {
                finish(&mut chutes, &mut current, &mut negative, pos, token_start)?;
                chutes.push(Vec::new());
            }
            other => return Err(Error::Parse { position: pos, message: format!("unexpected character {other:?}") }),
        }
    }
    if text.trim().is_empty() {
        return Err(Error::Shape("empty triangle".into()));
    }
    finish(&mut chutes, &mut current, &mut negative, last_pos + 1, token_start)?;
    TriangularArray::new(chutes)
}
