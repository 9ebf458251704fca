//! Fox r-colorings of the trefoil and of a few pretzel knots, counted from the
//! Smith normal form and by direct enumeration.
//!
//! Run with `cargo run --example colorings`.

use knotinv::coloring::{brute_force_count, coloring_report, count_colorings, knot_determinant};
use knotinv::diagram::{pretzel_diagram, KnotDiagram, PretzelSpec};

fn main() -> knotinv::Result<()> {
    let trefoil = KnotDiagram::trefoil();
    let report = coloring_report(&trefoil);
    println!("trefoil coloring matrix:\n{}", report.matrix);
    println!("determinant {}", report.determinant);
    for r in 2..=9 {
        println!(
            "  mod {r}: {} colorings (enumeration: {})",
            count_colorings(&trefoil, r)?,
            brute_force_count(&trefoil, r)?
        );
    }

    for s in ["P(3,5,7)", "P(2,2,2)", "P(5,3,7,4)"] {
        let spec: PretzelSpec = s.parse()?;
        let d = pretzel_diagram(&spec)?;
        let det = knot_determinant(&d);
        let counts: Vec<String> = [3u64, 5, 7]
            .iter()
            .map(|&r| Ok(format!("{r}:{}", count_colorings(&d, r)?)))
            .collect::<knotinv::Result<_>>()?;
        println!(
            "{s}: {} crossings, {} component(s), determinant {det}, counts {}",
            d.n(),
            d.component_count(),
            counts.join(" ")
        );
    }
    Ok(())
}
