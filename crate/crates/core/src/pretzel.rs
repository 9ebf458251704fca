//! Closed forms for the coloring invariants of pretzel knots `P(n1, ..., nN)`.
//!
//! The cyclic `N x N` coloring matrix of a pretzel knot is equivalent to
//! `diag(Δ1, Δ2/Δ1, ..., Δ(N-1)/Δ(N-2), 0)`, where for `i <= N - 2` the value
//! `Δi` is the gcd of all products of `i` distinct tassel values and
//! `Δ(N-1)` is the sum of all products of `N - 1` of them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diagram::PretzelSpec;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::smith::{combinations, invariant_factors_from_minors, DeltaProfile};

fn check(spec: &PretzelSpec) -> Result<()> {
    if spec.len() < 3 {
        return Err(Error::InvalidSpec(format!(
            "closed forms need N >= 3 tassels, got {spec}"
        )));
    }
    if spec.tassels().contains(&0) {
        return Err(Error::InvalidSpec(format!("zero tassel in {spec}")));
    }
    Ok(())
}

/// Row `k` encodes `-n_k a_k + (n_k + n_{k+1}) a_{k+1} - n_{k+1} a_{k+2} = 0`,
/// indices mod `N`.
pub fn pretzel_coloring_matrix(spec: &PretzelSpec) -> Result<IntMatrix> {
    check(spec)?;
    let n = spec.tassels();
    let len = n.len();
    let mut m = IntMatrix::zeros(len, len);
    for k in 0..len {
        let (a, b) = (n[k], n[(k + 1) % len]);
        m[(k, k)] += -a;
        m[(k, (k + 1) % len)] += a + b;
        m[(k, (k + 2) % len)] += -b;
    }
    Ok(m)
}

fn subset_products(values: &[i64], size: usize) -> impl Iterator<Item = BigInt> + '_ {
    combinations(values.len(), size)
        .into_iter()
        .map(|s| s.iter().map(|&i| BigInt::from(values[i])).product())
}

/// `Δi` for `1 <= i <= N`, nonnegative.
pub fn pretzel_delta(spec: &PretzelSpec, i: usize) -> Result<BigInt> {
    check(spec)?;
    let n = spec.len();
    if i == 0 || i > n {
        return Err(Error::OrderOutOfRange { order: i, max: n });
    }
    let v = spec.tassels();
    Ok(if i == n {
        BigInt::zero()
    } else if i == n - 1 {
        subset_products(v, i).sum::<BigInt>().abs()
    } else {
        subset_products(v, i).fold(BigInt::zero(), |g, p| g.gcd(&p))
    })
}

pub fn pretzel_delta_profile(spec: &PretzelSpec) -> Result<DeltaProfile> {
    let deltas = (1..=spec.len())
        .map(|i| pretzel_delta(spec, i))
        .collect::<Result<_>>()?;
    Ok(DeltaProfile { deltas })
}

/// `(Δ1, Δ2/Δ1, ..., Δ(N-1)/Δ(N-2), 0)`; an inexact quotient is an error.
pub fn pretzel_diagonal(spec: &PretzelSpec) -> Result<Vec<BigInt>> {
    invariant_factors_from_minors(&pretzel_delta_profile(spec)?)
}

/// `|Δ(N-1)|`, the knot determinant.
pub fn pretzel_determinant(spec: &PretzelSpec) -> Result<BigInt> {
    pretzel_delta(spec, spec.len() - 1)
}
