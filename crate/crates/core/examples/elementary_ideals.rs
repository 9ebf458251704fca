//! Elementary ideals of an Alexander presentation: the first is generated by
//! the determinant, later ones by smaller minors.
//!
//! Run with `cargo run --example elementary_ideals`.

use knotinv::seifert::{
    alexander_polynomial, alexander_polynomial_r, alexander_presentation, seifert_odd_pretzel,
    OddPretzelSpec, SeifertMatrix, DEFAULT_IDEAL_GUARD,
};
use knotinv::IntMatrix;

fn main() -> knotinv::Result<()> {
    let mut family: Vec<(String, SeifertMatrix)> = Vec::new();
    for s in ["Podd(0,0,0)", "Podd(1,1,1)", "Podd(1,1,1,1,1)"] {
        let spec: OddPretzelSpec = s.parse()?;
        family.push((spec.to_pretzel().to_string(), seifert_odd_pretzel(&spec)));
    }
    // a Seifert matrix of the square knot, trefoil # trefoil
    let square = IntMatrix::from_rows(vec![
        vec![-1i64, 1, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, 1, -1],
        vec![0, 0, 0, 1],
    ])?;
    family.push(("square knot".into(), SeifertMatrix::new(square)?));

    for (name, s) in family {
        let p = alexander_presentation(&s);
        println!("{name}: Δ = {}", alexander_polynomial(&s));
        for r in 1..=p.size() {
            println!(
                "  Δ_{r} = {}",
                alexander_polynomial_r(&p, r, DEFAULT_IDEAL_GUARD)?
            );
        }
    }
    Ok(())
}
