//! Exact-period cycles of the tent map and the periods a 3-cycle forces.
//!
//! Run with `cargo run --example cycles`.

use svdyn::constructions::corpus;
use svdyn::dynamics::{find_cycles, sarkovskii_precedes, verify_sarkovskii_span, SpanOutcome, DEFAULT_CYCLE_BUDGET};

fn main() {
    let tent = corpus("tent").unwrap();
    for p in 1..=4 {
        let search = find_cycles(&tent, p, DEFAULT_CYCLE_BUDGET);
        println!("period {p}: {} cycles (complete: {})", search.cycles.len(), search.complete);
        for c in &search.cycles {
            let pts: Vec<String> = c.points().iter().map(|x| x.to_string()).collect();
            println!("  {}", pts.join(" -> "));
        }
    }

    println!("3 comes before 5 in the ordering: {}", sarkovskii_precedes(3, 5));
    let span = verify_sarkovskii_span(&tent, 3, 8, DEFAULT_CYCLE_BUDGET).expect("tent has a 3-cycle");
    for (m, outcome) in &span.entries {
        let status = match outcome {
            SpanOutcome::Found(c) => format!("found, starting at {}", c.points()[0]),
            SpanOutcome::NotFoundWithinBudget => "not found within budget".to_string(),
            SpanOutcome::Violation => "violation".to_string(),
        };
        println!("period {m}: {status}");
    }
}
