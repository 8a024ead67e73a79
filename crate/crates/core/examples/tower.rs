//! Interval towers along backward trajectories, and the sufficient
//! condition for organic behaviour.
//!
//! Run with `cargo run --example tower`.

use svdyn::constructions::corpus::{self, corpus};
use svdyn::dynamics::{j_tower, organic_sufficient, Organic};
use svdyn::rational::{rat, zero};

fn main() {
    let tent = corpus("tent").unwrap();
    // Backward trajectories: each entry is a value of the map at the next.
    let xs = vec![zero(), zero(), zero(), zero()];
    let ys = vec![rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)];
    let tower = j_tower(&tent, &xs, &ys, 3).expect("both trajectories follow the graph");
    for (k, level) in tower.levels.iter().enumerate() {
        println!("J_{k} = {level}");
    }
    println!("nested: {:?}, reaches [0,1]: {}", tower.nested, tower.reaches_unit);

    let named = [("tent", corpus("tent").unwrap()), ("zigzag", corpus::zigzag()), ("ex2_9_pl", corpus("ex2_9_pl").unwrap())];
    for (name, r) in named {
        match organic_sufficient(&r, 4).unwrap() {
            Organic::Sufficient { p, r, q, s } => {
                println!("{name}: 0 is in f^{r}({p}) and 1 is in f^{s}({q})")
            }
            Organic::Unknown => println!("{name}: undecided at depth 4"),
        }
    }
}
