//! Images, preimages, composition and transposition of set-valued maps.
//!
//! Run with `cargo run --example images`.

use svdyn::constructions::corpus;
use svdyn::dynamics::iterate_image;
use svdyn::rational::rat;
use svdyn::IntervalSet;

fn main() {
    let tent = corpus("tent").unwrap();
    let start = IntervalSet::closed(rat(1, 10), rat(1, 8));
    for n in 0..=5 {
        println!("f^{n}[{start}] = {}", iterate_image(&tent, &start, n));
    }

    let twice = tent.compose(&tent);
    println!("tent composed with itself has {} pieces", twice.pieces().len());
    println!("preimage of {{1}}: {}", tent.preimage(&IntervalSet::point(rat(1, 1))));

    let ex = corpus("ex2_15").unwrap();
    println!("ex2_15 at x=1: {}", ex.slice(&rat(1, 1)));
    println!("transpose of ex2_15 at y=1: {}", ex.transpose().slice(&rat(1, 1)));
}
