//! Replace the full square by a light single-valued graph that keeps a
//! chosen 3-cycle, then check the result.
//!
//! Run with `cargo run --example desingularize`.

use svdyn::constructions::{corpus, desingularize_with_plan};
use svdyn::dynamics::find_cycles;
use svdyn::format::serialize;
use svdyn::rational::rat;
use svdyn::classify;

fn main() {
    let square = corpus("square").unwrap();
    let cycle = [rat(1, 5), rat(3, 5), rat(2, 5)];
    let (g, plan) = desingularize_with_plan(&square, &cycle).expect("the square admits every cycle");
    let plan = plan.expect("the square has a rectangle");
    for (comp, route) in plan.components.iter().zip(&plan.routes) {
        println!("component {comp}: {} route vertices", route.len());
    }
    print!("{}", serialize(&g));

    let p = classify(&g);
    println!("ivp={} light={} almost_nonfissile={} interior_empty={}", p.ivp, p.light, p.almost_nonfissile, p.interior_empty);
    println!("period-3 cycles in the output: {}", find_cycles(&g, 3, 1_000_000).cycles.len());
}
