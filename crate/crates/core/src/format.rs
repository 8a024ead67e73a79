//! The line-oriented `.plrel` relation format.
//!
//! ```text
//! plrel v1
//! # tent map
//! seg 0 0 1/2 1
//! seg 1/2 1 1 0
//! ```
//!
//! Piece lines are `pt X Y`, `seg X1 Y1 X2 Y2` or `rect X1 Y1 X2 Y2`.
//! Numbers are `p/q` or integers; `#` starts a comment.

use thiserror::Error;

use crate::piece::{coordinate_ok, Piece};
use crate::rational::{parse_rational, Rational};
use crate::relation::PLRelation;

pub const HEADER: &str = "plrel v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `{HEADER}` header")]
    MissingHeader,
    #[error("line {line}: expected `{HEADER}`, found `{found}`")]
    BadHeader { line: usize, found: String },
    #[error("line {line}: unknown piece kind `{kind}`")]
    UnknownKind { line: usize, kind: String },
    #[error("line {line}: `{kind}` takes {expected} numbers, got {got}")]
    Arity { line: usize, kind: String, expected: usize, got: usize },
    #[error("line {line}: malformed rational `{token}`")]
    BadRational { line: usize, token: String },
    #[error("line {line}: coordinate {value} is outside [0,1]")]
    OutOfRange { line: usize, value: Rational },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MissingHeader => None,
            ParseError::BadHeader { line, .. }
            | ParseError::UnknownKind { line, .. }
            | ParseError::Arity { line, .. }
            | ParseError::BadRational { line, .. }
            | ParseError::OutOfRange { line, .. } => Some(*line),
        }
    }
}

fn parse_piece(line: usize, words: &[&str]) -> Result<Piece, ParseError> {
    let kind = words[0];
    let expected = match kind {
        "pt" => 2,
        "seg" | "rect" => 4,
        _ => return Err(ParseError::UnknownKind { line, kind: kind.to_string() }),
    };
    let nums = &words[1..];
    if nums.len() != expected {
        return Err(ParseError::Arity { line, kind: kind.to_string(), expected, got: nums.len() });
    }
    let mut v = Vec::with_capacity(expected);
    for token in nums {
        let value = parse_rational(token)
            .ok_or_else(|| ParseError::BadRational { line, token: token.to_string() })?;
        if !coordinate_ok(&value) {
            return Err(ParseError::OutOfRange { line, value });
        }
        v.push(value);
    }
    let mut it = v.into_iter();
    let mut next = || it.next().unwrap();
    Ok(match kind {
        "pt" => Piece::point(next(), next()),
        "seg" => Piece::seg(next(), next(), next(), next()),
        _ => Piece::rect(next(), next(), next(), next()),
    })
}

pub fn parse(text: &str) -> Result<PLRelation, ParseError> {
    let mut header_seen = false;
    let mut pieces = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !header_seen {
            if content.split_whitespace().collect::<Vec<_>>() != ["plrel", "v1"] {
                return Err(ParseError::BadHeader { line, found: content.to_string() });
            }
            header_seen = true;
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        pieces.push(parse_piece(line, &words)?);
    }
    if !header_seen {
        return Err(ParseError::MissingHeader);
    }
    Ok(PLRelation::new(pieces).expect("coordinates were range-checked per line"))
}

/// Canonical text: the header then one normalized piece per line.
pub fn serialize(r: &PLRelation) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for p in r.pieces() {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{corpus, NAMES};
    use crate::rational::int;

    #[test]
    fn diagonal_and_tent() {
        assert_eq!(parse("plrel v1\nseg 0/1 0/1 1/1 1/1").unwrap(), PLRelation::identity());
        assert_eq!(parse("plrel v1\nseg 0 0 1/2 1\nseg 1/2 1 1 0").unwrap(), corpus("tent").unwrap());
    }

    #[test]
    fn range_error_carries_line() {
        let e = parse("plrel v1\nrect 0 0 1 2").unwrap_err();
        assert_eq!(e, ParseError::OutOfRange { line: 2, value: int(2) });
        assert_eq!(e.line(), Some(2));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse("# nothing\n"), Err(ParseError::MissingHeader));
        assert!(matches!(parse("plrel v2"), Err(ParseError::BadHeader { line: 1, .. })));
        assert!(matches!(parse("plrel v1\ncircle 0 0"), Err(ParseError::UnknownKind { line: 2, .. })));
        assert!(matches!(parse("plrel v1\nseg 0 0 1"), Err(ParseError::Arity { got: 3, .. })));
        assert!(matches!(parse("plrel v1\npt 1/0 0"), Err(ParseError::BadRational { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header comment\nplrel v1 # trailing\n\n  pt 1/2 1/2  # centre\n";
        assert_eq!(parse(text).unwrap().pieces().len(), 1);
    }

    #[test]
    fn corpus_round_trips() {
        for n in NAMES {
            let r = corpus(n).unwrap();
            let text = serialize(&r);
            assert_eq!(parse(&text).unwrap(), r, "{n}");
            assert!(text.lines().skip(1).all(|l| l.split_whitespace().skip(1).all(|t| t.contains('/'))));
        }
    }
}
