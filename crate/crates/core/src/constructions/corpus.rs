//! Named example relations.

use thiserror::Error;

use crate::piece::{Piece, Point};
use crate::rational::{int, one, rat, zero, Rational};
use crate::relation::PLRelation;

pub const NAMES: [&str; 8] =
    ["ex2_10", "ex2_11", "ex2_15", "ex2_9_pl", "tent", "diag", "diag_plus_point", "square"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown corpus relation `{0}` (expected one of: {names})", names = NAMES.join(", "))]
pub struct UnknownName(pub String);

fn p(x: Rational, y: Rational) -> Point {
    Point::new(x, y)
}

/// A polyline through the given vertices.
pub fn polyline(vertices: &[(Rational, Rational)]) -> PLRelation {
    let pieces = vertices.windows(2).map(|w| {
        Piece::segment(p(w[0].0.clone(), w[0].1.clone()), p(w[1].0.clone(), w[1].1.clone()))
    });
    PLRelation::new(pieces).expect("polyline vertices lie in the unit square")
}

/// The relation registered under `name`.
pub fn corpus(name: &str) -> Result<PLRelation, UnknownName> {
    let r = match name {
        "ex2_10" => PLRelation::new([
            Piece::seg(zero(), zero(), one(), one()),
            Piece::seg(zero(), one(), one(), zero()),
        ]),
        "ex2_11" => PLRelation::new([
            Piece::seg(zero(), zero(), one(), rat(1, 3)),
            Piece::seg(rat(1, 2), zero(), one(), one()),
        ]),
        "ex2_15" => PLRelation::new([
            Piece::seg(zero(), zero(), one(), zero()),
            Piece::seg(one(), zero(), one(), one()),
        ]),
        "ex2_9_pl" => return Ok(zigzag()),
        "tent" => return Ok(tent()),
        "diag" => Ok(PLRelation::identity()),
        "diag_plus_point" => PLRelation::new([
            Piece::seg(zero(), zero(), one(), one()),
            Piece::point(zero(), one()),
        ]),
        "square" => PLRelation::new([Piece::rect(zero(), zero(), one(), one())]),
        other => return Err(UnknownName(other.to_string())),
    };
    Ok(r.expect("corpus pieces lie in the unit square"))
}

/// `x ↦ 1 - |2x - 1|`.
pub fn tent() -> PLRelation {
    polyline(&[(zero(), zero()), (rat(1, 2), one()), (one(), zero())])
}

/// Two full oscillations through the band `[0, ½]` on `[0, ¼]`, then a
/// linear rise to `(1, 1)`.
pub fn zigzag() -> PLRelation {
    polyline(&[
        (zero(), rat(1, 4)),
        (rat(1, 16), rat(1, 2)),
        (rat(1, 8), zero()),
        (rat(3, 16), rat(1, 2)),
        (rat(1, 4), zero()),
        (rat(1, 3), rat(1, 4)),
        (int(1), one()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalSet;

    #[test]
    fn every_name_resolves() {
        for n in NAMES {
            let r = corpus(n).unwrap();
            assert!(r.domain_is_full(), "{n}");
        }
        assert!(corpus("nope").is_err());
    }

    #[test]
    fn two_branch_slice_at_quarter() {
        assert_eq!(corpus("ex2_11").unwrap().slice(&rat(1, 4)), IntervalSet::point(rat(1, 12)));
    }

    #[test]
    fn right_edge_slice_is_full() {
        assert_eq!(corpus("ex2_15").unwrap().slice(&one()), IntervalSet::unit());
    }

    #[test]
    fn diag_is_one_segment() {
        let d = corpus("diag").unwrap();
        assert_eq!(d.pieces(), &[Piece::seg(zero(), zero(), one(), one())]);
    }
}
