//! Alexander polynomials of odd pretzel knots from their Seifert matrices,
//! with the closed form and the determinant check `|Δ(-1)| = det`.
//!
//! Run with `cargo run --example alexander_odd`.

use knotinv::pretzel::pretzel_determinant;
use knotinv::seifert::{
    alexander_polynomial, check_odd_closed_form, seifert_odd_pretzel, OddClosedForm, OddPretzelSpec,
};

fn main() -> knotinv::Result<()> {
    for s in [
        "Podd(0,0,0)",
        "Podd(1,1,1)",
        "Podd(1,2,3)",
        "Podd(1,2,3,1,1)",
        "Podd(0,1,0,2,1,1,3)",
    ] {
        let spec: OddPretzelSpec = s.parse()?;
        let seifert = seifert_odd_pretzel(&spec);
        let p = alexander_polynomial(&seifert);
        let check = check_odd_closed_form(&spec, OddClosedForm::Corrected);
        println!("{spec} = {}", spec.to_pretzel());
        println!(
            "  Seifert matrix:\n{}",
            indent(&seifert.matrix().to_string())
        );
        println!("  Δ(t)  = {p}");
        println!("  closed form agrees: {}", check.agree);
        println!(
            "  Δ(1) = {}, Δ(-1) = {}, coloring determinant {}",
            p.eval_int(1)?,
            p.eval_int(-1)?,
            pretzel_determinant(&spec.to_pretzel())?
        );
    }
    Ok(())
}

fn indent(s: &str) -> String {
    s.lines()
        .map(|l| format!("    {l}"))
        .collect::<Vec<_>>()
        .join("\n")
}
