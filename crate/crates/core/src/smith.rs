//! Smith normal form and the gcd-of-minors description of invariant factors.
//!
//! [`smith_normal_form`] is the production route: an elimination that only
//! uses elementary transformations. [`minors_gcd_profile`] enumerates minors
//! directly and is kept as an independent oracle for small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Largest `min(rows, cols)` accepted by [`minors_gcd_profile`] by default.
pub const DEFAULT_MINOR_GUARD: usize = 8;

/// Canonical invariant factors `d1 | d2 | ...`, nonnegative, zeros last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmithForm {
    #[serde(serialize_with = "crate::matrix::decimal::many")]
    pub diag: Vec<BigInt>,
    pub original_rows: usize,
    pub original_cols: usize,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// Checks the divisibility chain and the zeros-last layout.
    pub fn check_chain(&self) -> bool {
        let len_ok = self.diag.len() == self.original_rows.min(self.original_cols);
        let nonneg = self.diag.iter().all(|d| !d.is_negative());
        let chain = self.diag.windows(2).all(|w| divides(&w[0], &w[1]));
        len_ok && nonneg && chain
    }
}

/// `Δi` = gcd of all `i x i` minors, for `i = 1..=len`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaProfile {
    #[serde(serialize_with = "crate::matrix::decimal::many")]
    pub deltas: Vec<BigInt>,
}

impl DeltaProfile {
    /// `Δ(order)`, 1-based.
    pub fn delta(&self, order: usize) -> Option<&BigInt> {
        order.checked_sub(1).and_then(|i| self.deltas.get(i))
    }
}

/// `a | b` with the conventions that everything divides 0 and 0 divides only 0.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let size = rows.min(cols);
    let mut a = m.clone();
    let mut diag = Vec::with_capacity(size);

    for k in 0..size {
        if !diagonalize_corner(&mut a, k) {
            break;
        }
        diag.push(a[(k, k)].abs());
    }
    diag.resize(size, BigInt::zero());

    let snf = SmithForm {
        diag,
        original_rows: rows,
        original_cols: cols,
    };
    assert!(snf.check_chain(), "Smith form violates d_i | d_(i+1)");
    snf
}

/// Clears row and column `k` of the working submatrix `a[k.., k..]` and makes
/// the pivot divide everything left below-right of it. Returns false when the
/// submatrix is zero.
fn diagonalize_corner(a: &mut IntMatrix, k: usize) -> bool {
    let (rows, cols) = (a.rows(), a.cols());
    loop {
        let Some((pi, pj)) = min_abs_entry(a, k) else {
            return false;
        };
        a.swap_rows_mut(k, pi);
        a.swap_cols_mut(k, pj);
        let pivot = a[(k, k)].clone();

        let mut clean = true;
        for i in k + 1..rows {
            if a[(i, k)].is_zero() {
                continue;
            }
            let q = &a[(i, k)] / &pivot;
            a.add_row_multiple_mut(k, i, &-q);
            clean &= a[(i, k)].is_zero();
        }
        for j in k + 1..cols {
            if a[(k, j)].is_zero() {
                continue;
            }
            let q = &a[(k, j)] / &pivot;
            a.add_col_multiple_mut(k, j, &-q);
            clean &= a[(k, j)].is_zero();
        }
        if !clean {
            // a remainder smaller than the pivot is left; it becomes the next pivot
            continue;
        }

        let offender = (k + 1..rows)
            .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[(i, j)] % &pivot).is_zero());
        match offender {
            Some((i, _)) => a.add_row_multiple_mut(i, k, &BigInt::one()),
            None => return true,
        }
    }
}

fn min_abs_entry(a: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..a.rows() {
        for j in k..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some(((i, j), abs));
                if unit {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Gcd of all `i x i` minors for `i = 1..=max_order`, by enumeration.
///
/// Refuses matrices with `min(rows, cols) > guard`; the number of minors grows
/// binomially and [`smith_normal_form`] should be used instead.
pub fn minors_gcd_profile(m: &IntMatrix, max_order: usize, guard: usize) -> Result<DeltaProfile> {
    let size = m.rows().min(m.cols());
    if size > guard {
        return Err(Error::GuardExceeded {
            what: "minor enumeration",
            size: size as u128,
            limit: guard as u128,
        });
    }
    if max_order > size {
        return Err(Error::OrderOutOfRange {
            order: max_order,
            max: size,
        });
    }
    let mut deltas = Vec::with_capacity(max_order);
    for order in 1..=max_order {
        let mut g = BigInt::zero();
        for rs in combinations(m.rows(), order) {
            for cs in combinations(m.cols(), order) {
                let minor = m.submatrix(&rs, &cs).det()?;
                g = g.gcd(&minor);
            }
        }
        deltas.push(g);
    }
    Ok(DeltaProfile { deltas })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `d1 = Δ1`, `di = Δi / Δ(i-1)`; once some `Δi` vanishes every later factor is 0.
pub fn invariant_factors_from_minors(p: &DeltaProfile) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(p.deltas.len());
    let mut prev = BigInt::one();
    for d in &p.deltas {
        if prev.is_zero() || d.is_zero() {
            out.push(BigInt::zero());
            prev = BigInt::zero();
            continue;
        }
        let (q, r) = d.div_rem(&prev);
        if !r.is_zero() {
            return Err(Error::InexactDivision {
                numerator: d.to_string(),
                denominator: prev.to_string(),
            });
        }
        out.push(q.abs());
        prev = d.clone();
    }
    Ok(out)
}

/// Strips the unit entries. An all-unit (or empty) diagonal becomes `[1]`.
pub fn normal_form(s: &SmithForm) -> Vec<BigInt> {
    strip_units(&s.diag)
}

pub fn strip_units(diag: &[BigInt]) -> Vec<BigInt> {
    let out: Vec<BigInt> = diag
        .iter()
        .filter(|d| !d.abs().is_one())
        .map(|d| d.abs())
        .collect();
    if out.is_empty() {
        vec![BigInt::one()]
    } else {
        out
    }
}
