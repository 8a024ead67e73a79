//! Classify every relation in the built-in corpus and show the witnesses
//! that explain each failing property.
//!
//! Run with `cargo run --example classify`.

use svdyn::constructions::{corpus, NAMES};
use svdyn::classify;

fn main() {
    for name in NAMES {
        let r = corpus(name).expect("corpus names are valid");
        let p = classify(&r);
        println!("{name}");
        println!(
            "  ivp={} weak_ivp={} light={} almost_nonfissile={} interior_empty={}",
            p.ivp, p.weak_ivp, p.light, p.almost_nonfissile, p.interior_empty
        );
        let w = &p.witnesses;
        if let Some((a, b)) = &w.strip_failure {
            println!("  the strip over [{a}, {b}] cuts the graph");
        }
        if let Some(d) = &w.discontinuity {
            println!("  {:?} limit at x={} misses y={}", d.side, d.x, d.y);
        }
        if let Some(f) = &w.weak_ivp_failure {
            println!("  weak IVP fails for x1={} y1={} x2={}", f.x1, f.y1, f.x2);
        }
        if let Some(y) = &w.non_light_level {
            println!("  the level y={y} has a preimage with interior");
        }
        if !p.fissile_set.is_empty() {
            let regions: Vec<String> = p.fissile_set.regions.iter().map(|r| r.to_string()).collect();
            println!("  fissile regions: {}", regions.join(" "));
        }
    }
}
