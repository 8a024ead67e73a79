//! SVG rendering of relation graphs.
//!
//! Drawing happens in a unit view box with the y-axis pointing up.
//! Coordinates are converted from exact rationals to 12-place decimals only
//! when the markup is written, so output is byte-for-byte deterministic.

use std::fmt::Write;

use crate::piece::{Piece, Point};
use crate::rational::{one, to_decimal, Rational};
use crate::relation::PLRelation;

const PLACES: u32 = 12;

fn num(r: &Rational) -> String {
    to_decimal(r, PLACES)
}

/// Screen coordinates of a graph point.
fn screen(p: &Point) -> (String, String) {
    (num(&p.x), num(&(one() - &p.y)))
}

pub fn svg(r: &PLRelation, title: &str) -> String {
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.05 -0.05 1.1 1.1\" width=\"440\" height=\"440\">\n",
    );
    let _ = writeln!(s, "  <title>{}</title>", escape(title));
    s.push_str(
        "  <rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.003\"/>\n",
    );
    for p in r.pieces() {
        match p {
            Piece::Rect(lo, hi) => {
                let (x, _) = screen(lo);
                let (_, y) = screen(hi);
                let _ = writeln!(
                    s,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{}\" height=\"{}\" fill=\"#4a6fa5\" fill-opacity=\"0.35\" stroke=\"#4a6fa5\" stroke-width=\"0.004\"/>",
                    num(&(&hi.x - &lo.x)),
                    num(&(&hi.y - &lo.y))
                );
            }
            Piece::Segment(a, b) => {
                let (x1, y1) = screen(a);
                let (x2, y2) = screen(b);
                let _ = writeln!(
                    s,
                    "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#1b2a41\" stroke-width=\"0.006\" stroke-linecap=\"round\"/>"
                );
            }
            Piece::Point(a) => {
                let (cx, cy) = screen(a);
                let _ = writeln!(s, "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"0.01\" fill=\"#1b2a41\"/>");
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::corpus;

    #[test]
    fn crossing_diagonals() {
        let out = svg(&corpus("ex2_10").unwrap(), "x");
        assert_eq!(out.matches("<line").count(), 2);
        // (0,0) is drawn at the bottom left.
        assert!(out.contains("x1=\"0\" y1=\"1\" x2=\"1\" y2=\"0\""));
        assert!(out.contains("x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\""));
    }

    #[test]
    fn rectangles_and_points() {
        let out = svg(&corpus("diag_plus_point").unwrap(), "d");
        assert_eq!(out.matches("<circle").count(), 1);
        let sq = svg(&corpus("square").unwrap(), "s");
        assert!(sq.contains("<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"#4a6fa5\""));
    }

    #[test]
    fn deterministic() {
        let t = corpus("tent").unwrap();
        assert_eq!(svg(&t, "t"), svg(&t, "t"));
    }
}
