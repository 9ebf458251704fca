//! Reidemeister I and II insertions change the coloring matrix but not its
//! normal form.
//!
//! Run with `cargo run --example reidemeister`.

use knotinv::coloring::{coloring_matrix, count_colorings};
use knotinv::diagram::KnotDiagram;
use knotinv::smith::{normal_form, smith_normal_form};

fn describe(label: &str, d: &KnotDiagram) -> knotinv::Result<()> {
    let nf = normal_form(&smith_normal_form(&coloring_matrix(d)));
    println!(
        "{label:<22} crossings {:>2}  normal form {:<8} 3-colorings {}",
        d.n(),
        nf.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
        count_colorings(d, 3)?
    );
    Ok(())
}

fn main() -> knotinv::Result<()> {
    let trefoil = KnotDiagram::trefoil();
    describe("trefoil", &trefoil)?;
    let kinked = trefoil.reidemeister_one_insert(0)?;
    describe("+ R1 on arc 0", &kinked)?;
    let poked = kinked.reidemeister_two_insert(1, 3)?;
    describe("+ R2 arcs 1 under 3", &poked)?;
    let again = poked.reidemeister_two_insert(4, 0)?;
    describe("+ R2 arcs 4 under 0", &again)?;
    println!(
        "\n{}",
        serde_json::to_string_pretty(&again).expect("serializable")
    );
    Ok(())
}
