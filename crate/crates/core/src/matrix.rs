//! Dense matrices over the integers.
//!
//! Every entry is a [`BigInt`], so no operation in this crate can overflow or
//! round. The JSON wire format writes integers as decimal strings:
//!
//! ```json
//! {"rows": 2, "cols": 2, "entries": [["1", "-2"], ["0", "3"]]}
//! ```

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// An elementary transformation. Applying any of these (or a finite chain of
/// them) to a coloring matrix leaves the knot invariants unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemOp {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// `row[dst] += factor * row[src]`
    AddRowMultiple {
        src: usize,
        dst: usize,
        factor: BigInt,
    },
    /// `col[dst] += factor * col[src]`
    AddColMultiple {
        src: usize,
        dst: usize,
        factor: BigInt,
    },
    /// Append one row and one column, zero except a 1 in the new corner.
    AugmentUnit,
    /// Inverse of [`ElemOp::AugmentUnit`]; the last row and column must be
    /// zero except for a unit in the corner.
    DropUnit,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of anything convertible into [`BigInt`].
    /// Ragged input is rejected.
    pub fn from_rows<T, R>(rows: R) -> Result<Self>
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != ncols) {
            return Err(Error::Shape(format!(
                "row {bad} has {} entries, expected {ncols}",
                rows[bad].len()
            )));
        }
        let nrows = rows.len();
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// The submatrix on the given row and column index lists, in the order
    /// given.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self[(i, j)].clone()))
            .collect();
        Self {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Removes one row and one column.
    pub fn minor_matrix(&self, row: usize, col: usize) -> Result<Self> {
        self.check_row(row)?;
        self.check_col(col)?;
        let rs: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        Ok(self.submatrix(&rs, &cs))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &self[(i, j)]).sum())
            .collect()
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                what: "rows",
                index: i,
                len: self.rows,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                what: "columns",
                index: j,
                len: self.cols,
            });
        }
        Ok(())
    }

    pub(crate) fn swap_rows_mut(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols_mut(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub(crate) fn add_row_multiple_mut(&mut self, src: usize, dst: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * factor;
            self[(dst, j)] += v;
        }
    }

    pub(crate) fn add_col_multiple_mut(&mut self, src: usize, dst: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * factor;
            self[(i, dst)] += v;
        }
    }

    /// Applies one elementary transformation, returning a new matrix.
    pub fn elem_transform(&self, op: &ElemOp) -> Result<Self> {
        let mut m = self.clone();
        match op {
            ElemOp::SwapRows(a, b) => {
                m.check_row(*a)?;
                m.check_row(*b)?;
                m.swap_rows_mut(*a, *b);
            }
            ElemOp::SwapCols(a, b) => {
                m.check_col(*a)?;
                m.check_col(*b)?;
                m.swap_cols_mut(*a, *b);
            }
            ElemOp::AddRowMultiple { src, dst, factor } => {
                m.check_row(*src)?;
                m.check_row(*dst)?;
                if src == dst {
                    return Err(Error::Shape("add_row_multiple needs src != dst".into()));
                }
                m.add_row_multiple_mut(*src, *dst, factor);
            }
            ElemOp::AddColMultiple { src, dst, factor } => {
                m.check_col(*src)?;
                m.check_col(*dst)?;
                if src == dst {
                    return Err(Error::Shape("add_col_multiple needs src != dst".into()));
                }
                m.add_col_multiple_mut(*src, *dst, factor);
            }
            ElemOp::AugmentUnit => {
                let mut out = Self::zeros(self.rows + 1, self.cols + 1);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        out[(i, j)] = self[(i, j)].clone();
                    }
                }
                out[(self.rows, self.cols)] = BigInt::one();
                return Ok(out);
            }
            ElemOp::DropUnit => {
                if self.rows == 0 || self.cols == 0 {
                    return Err(Error::DropUnit("matrix is empty".into()));
                }
                let (r, c) = (self.rows - 1, self.cols - 1);
                if !self[(r, c)].abs().is_one() {
                    return Err(Error::DropUnit(format!(
                        "corner entry is {}, expected +-1",
                        self[(r, c)]
                    )));
                }
                let stray_row = (0..c).any(|j| !self[(r, j)].is_zero());
                let stray_col = (0..r).any(|i| !self[(i, c)].is_zero());
                if stray_row || stray_col {
                    return Err(Error::DropUnit(
                        "last row/column has non-zero entries off the corner".into(),
                    ));
                }
                let rs: Vec<usize> = (0..r).collect();
                let cs: Vec<usize> = (0..c).collect();
                return Ok(self.submatrix(&rs, &cs));
            }
        }
        Ok(m)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(bareiss_det(self.clone()))
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// meant as an oracle for small matrices.
    pub fn det_cofactor(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(cofactor(self, 0, &cols))
    }
}

fn cofactor(m: &IntMatrix, row: usize, cols: &[usize]) -> BigInt {
    if cols.is_empty() {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for (k, &c) in cols.iter().enumerate() {
        let a = &m[(row, c)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a * cofactor(m, row + 1, &rest);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn bareiss_det(mut a: IntMatrix) -> BigInt {
    let n = a.rows;
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(p) => {
                    a.swap_rows_mut(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                a[(i, j)] = q;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// Rows on separate lines, entries right-aligned.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|e| format!("{e:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Serializers writing integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn one<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn many<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<IntWire>>,
}

/// Integers travel as decimal strings; bare JSON integers are accepted on
/// input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntWire {
    Str(String),
    Num(i64),
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .map(|e| IntWire::Str(e.to_string()))
                        .collect()
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(d)?;
        if wire.entries.len() != wire.rows {
            return Err(D::Error::custom(format!(
                "declared {} rows but found {}",
                wire.rows,
                wire.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(wire.rows * wire.cols);
        for (i, row) in wire.entries.into_iter().enumerate() {
            if row.len() != wire.cols {
                return Err(D::Error::custom(format!(
                    "row {i} has {} entries, declared {} columns",
                    row.len(),
                    wire.cols
                )));
            }
            for e in row {
                entries.push(match e {
                    IntWire::Num(n) => BigInt::from(n),
                    IntWire::Str(s) => s
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| D::Error::custom(format!("not an integer: {s:?}")))?,
                });
            }
        }
        IntMatrix::new(wire.rows, wire.cols, entries).map_err(D::Error::custom)
    }
}
