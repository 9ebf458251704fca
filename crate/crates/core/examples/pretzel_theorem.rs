//! The closed-form diagonal of a pretzel coloring matrix against the generic
//! Smith normal form, both for the cyclic N x N matrix and for the full
//! diagram.
//!
//! Run with `cargo run --example pretzel_theorem -- "P(3,6,9,12)"`.

use knotinv::coloring::coloring_matrix;
use knotinv::diagram::{pretzel_diagram, PretzelSpec};
use knotinv::pretzel::{pretzel_coloring_matrix, pretzel_delta_profile, pretzel_diagonal};
use knotinv::smith::{normal_form, smith_normal_form, strip_units};

fn main() -> knotinv::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        [
            "P(1,1,1)",
            "P(3,5,7)",
            "P(2,4,6)",
            "P(3,6,9,12)",
            "P(5,3,7,4)",
        ]
        .map(String::from)
        .to_vec()
    } else {
        specs
    };
    for s in specs {
        let spec: PretzelSpec = s.parse()?;
        let closed = pretzel_diagonal(&spec)?;
        let cyclic = smith_normal_form(&pretzel_coloring_matrix(&spec)?).diag;
        let full = normal_form(&smith_normal_form(&coloring_matrix(&pretzel_diagram(
            &spec,
        )?)));
        let deltas = pretzel_delta_profile(&spec)?.deltas;
        println!("{spec}");
        println!("  Δ:           {}", join(&deltas));
        println!("  closed form: {}", join(&closed));
        println!(
            "  N x N SNF:   {}  ({})",
            join(&cyclic),
            verdict(cyclic == closed)
        );
        println!(
            "  diagram NF:  {}  ({})",
            join(&full),
            verdict(full == strip_units(&closed))
        );
    }
    Ok(())
}

fn join(v: &[num_bigint::BigInt]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "agrees"
    } else {
        "DIFFERS"
    }
}
