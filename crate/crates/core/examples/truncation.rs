//! Finite truncations of a generalized inverse limit: size, connectedness,
//! coordinate projections and the fissile cell diagnostic.
//!
//! Run with `cargo run --release --example truncation`.

use svdyn::constructions::corpus;
use svdyn::mahavier::{
    build_truncation, fissile_cell_diagnostic, irreducibility_probe, project, shift, truncation_connected,
};
use svdyn::rational::{one, zero};

fn main() {
    for name in ["tent", "ex2_10", "ex2_15", "diag_plus_point"] {
        let r = corpus(name).unwrap();
        for depth in 1..=4 {
            let c = build_truncation(&r, depth).expect("small depths fit the default caps");
            let d = fissile_cell_diagnostic(&r, &c);
            println!(
                "{name} depth {depth}: {} cells, connected={}, fissile fraction {}",
                c.cells.len(),
                truncation_connected(&c),
                d.fraction
            );
        }
    }

    let tent = corpus("tent").unwrap();
    let c = build_truncation(&tent, 3).unwrap();
    println!("tent x_3 realizes {}", project(&c, 3).unwrap());
    println!("dropping the lead leaves {} cells", shift(&c, &tent).unwrap().cells.len());

    let a = vec![zero(); 4];
    let mut b = vec![zero(); 4];
    b[3] = one();
    if let Some(probe) = irreducibility_probe(&c, &a, &b).unwrap() {
        println!("shortest cell path: {} cells, whole complex: {}", probe.cells.len(), probe.whole_complex);
    }
}
