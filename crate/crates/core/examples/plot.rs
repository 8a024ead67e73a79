//! Write SVG drawings of a relation and of a two-coordinate projection of
//! one of its truncations.
//!
//! Run with `cargo run --example plot -- OUT_DIR`.

use std::path::PathBuf;

use svdyn::constructions::corpus;
use svdyn::mahavier::build_truncation;
use svdyn::plot::svg;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".to_string()));
    let r = corpus("ex2_11").unwrap();
    std::fs::write(dir.join("ex2_11.svg"), svg(&r, "ex2_11"))?;

    let c = build_truncation(&corpus("tent").unwrap(), 2).unwrap();
    std::fs::write(dir.join("tent_x0_x2.svg"), svg(&c.project_pair(0, 2), "tent (x0, x2)"))?;
    println!("wrote ex2_11.svg and tent_x0_x2.svg to {}", dir.display());
    Ok(())
}
