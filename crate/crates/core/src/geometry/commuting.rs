//! The space `C(x)` of representations `y in E(w*)` commuting with `x in E(w)`.
//!
//! `y_m` maps `C^{w_{n-m+1}} -> C^{w_{n-m}}`, so `x` and `y` together form a
//! double quiver. They commute when, at every vertex `i + 1`,
//!
//! ```text
//! x_i y_{n-i} + y_{n-i-1} x_{i+1} = 0        (i = 0, ..., n - 1)
//! ```
//!
//! where the terms involving `x_0`, `y_n`, `y_0` or `x_n` are dropped.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::geometry::matrix::RationalMatrix;
use crate::geometry::rep::QuiverRep;

#[derive(Debug, Clone)]
pub struct CommutingBasis {
    pub x: QuiverRep,
    pub basis: Vec<QuiverRep>,
}

impl CommutingBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum_b c_b basis_b`.
    pub fn combine(&self, coefficients: &[i64]) -> QuiverRep {
        assert_eq!(coefficients.len(), self.basis.len());
        let w_star = self.x.dim_vector().reverse();
        let mut y = QuiverRep::zero(&w_star);
        for (b, &c) in self.basis.iter().zip(coefficients) {
            if c != 0 {
                y = y.add(&b.scale(&BigRational::from_integer(BigInt::from(c))));
            }
        }
        y
    }
}

/// Unknowns are the entries of `y_1, ..., y_{n-1}`, row-major, in that order.
struct Layout {
    // (rows, cols, offset) of y_m at index m - 1
    blocks: Vec<(usize, usize, usize)>,
    total: usize,
}

impl Layout {
    fn new(w: &[u32]) -> Self {
        let n = w.len();
        let mut blocks = Vec::with_capacity(n.saturating_sub(1));
        let mut offset = 0;
        for m in 1..n {
            let (rows, cols) = (w[n - m - 1] as usize, w[n - m] as usize);
            blocks.push((rows, cols, offset));
            offset += rows * cols;
        }
        Layout { blocks, total: offset }
    }

    fn var(&self, m: usize, r: usize, c: usize) -> usize {
        let (_, cols, offset) = self.blocks[m - 1];
        offset + r * cols + c
    }
}

/// A basis of `C(x)`, from the exact kernel of the commuting equations.
pub fn commuting_basis(x: &QuiverRep) -> CommutingBasis {
    let w = x.dim_vector().entries().to_vec();
    let n = w.len();
    let layout = Layout::new(&w);
    let mut equations: Vec<Vec<BigRational>> = Vec::new();

    for i in 0..n {
        // the equation lives on C^{w_{i+1}}
        let d = w[i] as usize;
        for r in 0..d {
            for c in 0..d {
                let mut row = vec![BigRational::zero(); layout.total];
                // x_i y_{n-i}, with x_i : w_i -> w_{i+1}
                if i >= 1 {
                    let xi = x.map(i);
                    for t in 0..w[i - 1] as usize {
                        let a = xi.get(r, t);
                        if !a.is_zero() {
                            row[layout.var(n - i, t, c)] += a;
                        }
                    }
                }
                // y_{n-i-1} x_{i+1}, with x_{i+1} : w_{i+1} -> w_{i+2}
                if i + 2 <= n {
                    let xn = x.map(i + 1);
                    for t in 0..w[i + 1] as usize {
                        let a = xn.get(t, c);
                        if !a.is_zero() {
                            row[layout.var(n - i - 1, r, t)] += a;
                        }
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    equations.push(row);
                }
            }
        }
    }

    let system = RationalMatrix::from_rational_rows(equations, layout.total);
    let kernel = system.kernel_basis();
    let w_star = x.dim_vector().reverse();
    let basis = kernel
        .into_iter()
        .map(|v| {
            let maps = layout
                .blocks
                .iter()
                .map(|&(rows, cols, offset)| {
                    let data = (0..rows)
                        .map(|r| {
                            (0..cols).map(|c| BigRational::from_integer(v[offset + r * cols + c].clone())).collect()
                        })
                        .collect();
                    RationalMatrix::from_rational_rows(data, cols)
                })
                .collect();
            QuiverRep::new(w_star.clone(), maps).expect("block shapes follow w*")
        })
        .collect();
    CommutingBasis { x: x.clone(), basis }
}

/// Whether `x` and `y` satisfy the commuting equations.
pub fn commutes(x: &QuiverRep, y: &QuiverRep) -> bool {
    let w = x.dim_vector().entries();
    let n = w.len();
    assert_eq!(y.dim_vector(), &x.dim_vector().reverse());
    (0..n).all(|i| {
        let d = w[i] as usize;
        let mut acc = RationalMatrix::zeros(d, d);
        if i >= 1 {
            acc = acc.add(&x.map(i).mul(y.map(n - i)));
        }
        if i + 2 <= n {
            acc = acc.add(&y.map(n - i - 1).mul(x.map(i + 1)));
        }
        acc.is_zero()
    })
}
