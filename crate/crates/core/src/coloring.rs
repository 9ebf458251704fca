//! Fox colorings: coloring matrices, the knot determinant and r-coloring
//! counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::KnotDiagram;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::smith::{normal_form, smith_normal_form, SmithForm};

/// Default cap on search nodes for [`brute_force_count`].
pub const DEFAULT_ENUMERATION_GUARD: u64 = 10_000_000;

/// One row per crossing, one column per arc: `+1` at both under arcs and `-2`
/// at the over arc, summed where arcs coincide.
pub fn coloring_matrix(d: &KnotDiagram) -> IntMatrix {
    let n = d.n();
    let mut m = IntMatrix::zeros(n, n);
    for (c, x) in d.crossings().iter().enumerate() {
        m[(c, x.under_in)] += 1;
        m[(c, x.under_out)] += 1;
        m[(c, x.over)] -= 2;
    }
    m
}

/// Removes one row and one column from an `n x n` matrix, `n >= 2`.
pub fn reduced_coloring_matrix(m: &IntMatrix, row: usize, col: usize) -> Result<IntMatrix> {
    if m.rows() < 2 || !m.is_square() {
        return Err(Error::Shape(format!(
            "reduction needs a square matrix of size at least 2, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    m.minor_matrix(row, col)
}

/// `|det|` of a reduced coloring matrix. The crossingless and one-crossing
/// diagrams both give 1.
pub fn knot_determinant(d: &KnotDiagram) -> BigInt {
    let n = d.n();
    if n <= 1 {
        return BigInt::one();
    }
    let m = coloring_matrix(d);
    let det = |r, c| {
        reduced_coloring_matrix(&m, r, c)
            .and_then(|red| red.det())
            .expect("square reduction")
            .abs()
    };
    let value = det(n - 1, n - 1);
    if n <= 5 {
        for r in 0..n {
            for c in 0..n {
                assert_eq!(
                    det(r, c),
                    value,
                    "reduced determinant depends on ({r}, {c})"
                );
            }
        }
    }
    value
}

fn check_modulus(r: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidModulus(r));
    }
    Ok(())
}

/// Number of solutions over `Z_r` of a system with the given Smith diagonal
/// and `cols` unknowns: a factor `gcd(d, r)` per diagonal entry (`r` for a
/// zero entry) and `r` per unknown beyond the diagonal.
pub fn count_from_smith(s: &SmithForm, r: u64) -> Result<BigInt> {
    check_modulus(r)?;
    let r = BigInt::from(r);
    let mut count = BigInt::one();
    for d in &s.diag {
        count *= if d.is_zero() { r.clone() } else { d.gcd(&r) };
    }
    for _ in s.diag.len()..s.original_cols {
        count *= &r;
    }
    Ok(count)
}

/// r-coloring count via the Smith normal form. The crossingless diagram has
/// `r` colorings.
pub fn count_colorings(d: &KnotDiagram, r: u64) -> Result<BigInt> {
    check_modulus(r)?;
    if d.n() == 0 {
        return Ok(BigInt::from(r));
    }
    count_from_smith(&smith_normal_form(&coloring_matrix(d)), r)
}

pub fn has_nontrivial_colorings(d: &KnotDiagram, r: u64) -> Result<bool> {
    Ok(count_colorings(d, r)? > BigInt::from(r))
}

pub fn brute_force_count(d: &KnotDiagram, r: u64) -> Result<BigInt> {
    brute_force_count_with_guard(d, r, DEFAULT_ENUMERATION_GUARD)
}

/// Exhaustive enumeration of arc colorings mod `r`, pruned by propagating each
/// crossing equation as soon as two of its arcs determine the third. Fails
/// once more than `guard` candidate assignments have been tried.
pub fn brute_force_count_with_guard(d: &KnotDiagram, r: u64, guard: u64) -> Result<BigInt> {
    check_modulus(r)?;
    if d.n() == 0 {
        return Ok(BigInt::from(r));
    }
    let mut touching = vec![Vec::new(); d.n()];
    for (c, x) in d.crossings().iter().enumerate() {
        for a in [x.over, x.under_in, x.under_out] {
            if !touching[a].contains(&c) {
                touching[a].push(c);
            }
        }
    }
    let mut s = Search {
        d,
        r,
        touching,
        colors: vec![None; d.n()],
        tried: 0,
        guard,
    };
    Ok(BigInt::from(s.count()?))
}

struct Search<'a> {
    d: &'a KnotDiagram,
    r: u64,
    touching: Vec<Vec<usize>>,
    colors: Vec<Option<u64>>,
    tried: u64,
    guard: u64,
}

impl Search<'_> {
    fn count(&mut self) -> Result<u128> {
        let Some(arc) = self.colors.iter().position(Option::is_none) else {
            return Ok(1);
        };
        let mut total = 0;
        for v in 0..self.r {
            self.tried += 1;
            if self.tried > self.guard {
                return Err(Error::GuardExceeded {
                    what: "coloring enumeration",
                    size: self.tried as u128,
                    limit: self.guard as u128,
                });
            }
            let mut trail = Vec::new();
            if self.assign(arc, v, &mut trail) {
                total += self.count()?;
            }
            for a in trail {
                self.colors[a] = None;
            }
        }
        Ok(total)
    }

    /// Sets `arc = v` and everything it forces; false on a violated equation.
    fn assign(&mut self, arc: usize, v: u64, trail: &mut Vec<usize>) -> bool {
        let r = self.r;
        self.colors[arc] = Some(v);
        trail.push(arc);
        let mut queue = vec![arc];
        while let Some(a) = queue.pop() {
            for &c in &self.touching[a] {
                let x = self.d.crossings()[c];
                let (o, i, u) = (
                    self.colors[x.over],
                    self.colors[x.under_in],
                    self.colors[x.under_out],
                );
                let forced = match (o, i, u) {
                    (Some(o), Some(i), Some(u)) => {
                        if (i + u) % r != (2 * o) % r {
                            return false;
                        }
                        None
                    }
                    (Some(o), Some(i), None) => Some((x.under_out, (2 * o + r - i) % r)),
                    (Some(o), None, Some(u)) => Some((x.under_in, (2 * o + r - u) % r)),
                    _ => None,
                };
                if let Some((b, val)) = forced {
                    self.colors[b] = Some(val);
                    trail.push(b);
                    queue.push(b);
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringReport {
    pub matrix: IntMatrix,
    pub smith: SmithForm,
    #[serde(serialize_with = "crate::matrix::decimal::many")]
    pub normal: Vec<BigInt>,
    #[serde(serialize_with = "crate::matrix::decimal::one")]
    pub determinant: BigInt,
    #[serde(serialize_with = "crate::matrix::decimal::many")]
    pub torsion: Vec<BigInt>,
}

pub fn coloring_report(d: &KnotDiagram) -> ColoringReport {
    let matrix = coloring_matrix(d);
    let smith = smith_normal_form(&matrix);
    ColoringReport {
        normal: normal_form(&smith),
        determinant: knot_determinant(d),
        torsion: smith.diag.clone(),
        matrix,
        smith,
    }
}
