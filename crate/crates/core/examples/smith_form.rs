//! Smith normal form of an integer matrix, checked against the gcd-of-minors
//! route.
//!
//! Run with `cargo run --example smith_form`.

use knotinv::smith::{
    invariant_factors_from_minors, minors_gcd_profile, normal_form, smith_normal_form,
    DEFAULT_MINOR_GUARD,
};
use knotinv::{ElemOp, IntMatrix};

fn main() -> knotinv::Result<()> {
    let m = IntMatrix::from_rows(vec![vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    println!("matrix:\n{m}");

    let s = smith_normal_form(&m);
    println!(
        "diagonal:    {:?}",
        s.diag.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!(
        "normal form: {:?}",
        normal_form(&s)
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    let profile = minors_gcd_profile(&m, 3, DEFAULT_MINOR_GUARD)?;
    let oracle = invariant_factors_from_minors(&profile)?;
    println!(
        "Δ profile:   {:?}",
        profile
            .deltas
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("agrees with minors: {}", oracle == s.diag);

    // elementary transformations leave the diagonal alone
    let moved = m
        .elem_transform(&ElemOp::AddRowMultiple {
            src: 0,
            dst: 2,
            factor: 7.into(),
        })?
        .elem_transform(&ElemOp::SwapCols(0, 1))?;
    println!(
        "after row/column operations: {}",
        smith_normal_form(&moved).diag == s.diag
    );
    Ok(())
}
