//! Read a `.plrel` file, report parse errors with their line, and write the
//! canonical form back.
//!
//! Run with `cargo run --example plrel -- FILE`, or without arguments to
//! parse a built-in sample.

use svdyn::format::{parse, serialize};

const SAMPLE: &str = "\
plrel v1
# a tent with a flat top
seg 0 0 1/3 1
seg 1/3 1 2/3 1
seg 2/3 1 1 0
seg 1/6 1/2 1/3 1   # overlaps the first piece
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable file"),
        None => SAMPLE.to_string(),
    };
    match parse(&text) {
        Ok(r) => print!("{}", serialize(&r)),
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }
    }
}
