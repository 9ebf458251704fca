//! Square matrices over `Z[t, 1/t]` and their exact determinants.

use std::fmt;
use std::ops::{Add, Index, IndexMut};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::IntMatrix;

/// Largest size accepted by [`DetMethod::Cofactor`]; the expansion memoizes
/// one polynomial per column subset.
pub const COFACTOR_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMethod {
    /// Fraction-free elimination with exact polynomial division.
    #[default]
    Bareiss,
    /// Laplace expansion along rows, memoized over column subsets.
    Cofactor,
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Constant matrix with the given integer entries.
    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        Ok(Self {
            n: m.rows(),
            entries: m.entries().iter().cloned().map(LaurentPoly::from).collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<LaurentPoly>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Square submatrix on the given rows and columns (same count required).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::Shape(format!(
                "minor needs as many rows as columns, got {} and {}",
                rows.len(),
                cols.len()
            )));
        }
        for &i in rows.iter().chain(cols) {
            if i >= self.n {
                return Err(Error::IndexOutOfRange {
                    what: "poly matrix",
                    index: i,
                    len: self.n,
                });
            }
        }
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|ij| self[ij].clone())
            .collect();
        Ok(Self {
            n: rows.len(),
            entries,
        })
    }

    /// The matrix with one row and one column removed.
    pub fn minor_matrix(&self, row: usize, col: usize) -> Result<Self> {
        let keep = |skip: usize| (0..self.n).filter(move |&k| k != skip).collect::<Vec<_>>();
        if row >= self.n || col >= self.n {
            return Err(Error::IndexOutOfRange {
                what: "poly matrix",
                index: row.max(col),
                len: self.n,
            });
        }
        self.submatrix(&keep(row), &keep(col))
    }

    /// Row `dst` += `factor` * row `src`.
    pub fn add_row_multiple(&mut self, src: usize, dst: usize, factor: &LaurentPoly) {
        for j in 0..self.n {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += &delta;
        }
    }

    /// Column `dst` += `factor` * column `src`.
    pub fn add_col_multiple(&mut self, src: usize, dst: usize, factor: &LaurentPoly) {
        for i in 0..self.n {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += &delta;
        }
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Substitutes an integer for `t`; fails if a negative power makes an
    /// entry non-integral.
    pub fn eval_int(&self, t0: i64) -> Result<IntMatrix> {
        let vals = self
            .entries
            .iter()
            .map(|p| p.eval_int(t0))
            .collect::<Result<Vec<BigInt>>>()?;
        IntMatrix::new(self.n, self.n, vals)
    }

    pub fn det(&self, method: DetMethod) -> Result<LaurentPoly> {
        match method {
            DetMethod::Bareiss => Ok(self.det_bareiss()),
            DetMethod::Cofactor => self.det_cofactor(),
        }
    }

    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.entries.clone();
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return LaurentPoly::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = &(&a[i * n + j] * &pivot) - &(&lead * &a[k * n + j]);
                    a[i * n + j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division must be exact");
                }
                a[i * n + k] = LaurentPoly::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Laplace expansion. `memo[mask]` holds the determinant of the bottom
    /// `popcount(mask)` rows restricted to the columns in `mask`.
    pub fn det_cofactor(&self) -> Result<LaurentPoly> {
        let n = self.n;
        if n > COFACTOR_LIMIT {
            return Err(Error::GuardExceeded {
                what: "cofactor expansion size",
                size: n as u128,
                limit: COFACTOR_LIMIT as u128,
            });
        }
        let full = (1usize << n) - 1;
        let mut memo = vec![LaurentPoly::zero(); full + 1];
        memo[0] = LaurentPoly::one();
        let mut masks: Vec<usize> = (1..=full).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = n - mask.count_ones() as usize;
            let mut acc = LaurentPoly::zero();
            let mut below = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = &self[(row, j)];
                let rest = &memo[mask & !(1 << j)];
                if !entry.is_zero() && !rest.is_zero() {
                    let term = entry * rest;
                    if below % 2 == 0 {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
                below += 1;
            }
            memo[mask] = acc;
        }
        Ok(memo.swap_remove(full))
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        &self.entries[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        &mut self.entries[i * self.n + j]
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n, "size mismatch in matrix sum");
        PolyMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.n {
            let line: Vec<String> = (0..self.n)
                .map(|j| format!("{:>width$}", cells[i * self.n + j]))
                .collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix({}x{})\n{self}", self.n, self.n)
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}
