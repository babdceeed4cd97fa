//! Reading and writing semigroups in the two supported formats:
//! JSON `{ "conductor": [c1,c2], "small_elements": [[x,y],...] }` and
//! plain text (`c c1 c2` header line, then one `x y` pair per line).

use crate::point::Point;
use crate::semigroup::{GoodSemigroup, VerifyReport};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("axiom violations:\n{0}")]
    Invalid(VerifyReport),
}

/// The on-disk JSON shape.
#[derive(Serialize, Deserialize)]
pub struct SemigroupFile {
    pub conductor: Point,
    pub small_elements: Vec<Point>,
}

/// Parse either format into raw candidate data, without verification.
/// JSON is detected by a leading `{`.
pub fn parse_candidate(text: &str) -> Result<(Point, BTreeSet<Point>), ReadError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let file: SemigroupFile =
            serde_json::from_str(trimmed).map_err(|e| ReadError::Parse(e.to_string()))?;
        Ok((file.conductor, file.small_elements.into_iter().collect()))
    } else {
        parse_plain(text)
    }
}

fn parse_plain(text: &str) -> Result<(Point, BTreeSet<Point>), ReadError> {
    let mut conductor = None;
    let mut points = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || ReadError::Parse(format!("line {}: expected `x y` pair", lineno + 1));
        match fields.as_slice() {
            ["c", a, b] => {
                let c = Point::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                if conductor.replace(c).is_some() {
                    return Err(ReadError::Parse(format!(
                        "line {}: duplicate conductor line",
                        lineno + 1
                    )));
                }
            }
            [a, b] => {
                points.insert(Point::new(
                    a.parse().map_err(|_| bad())?,
                    b.parse().map_err(|_| bad())?,
                ));
            }
            _ => return Err(bad()),
        }
    }
    let conductor =
        conductor.ok_or_else(|| ReadError::Parse("missing conductor line `c c1 c2`".into()))?;
    Ok((conductor, points))
}

/// Parse and verify.
pub fn read_semigroup(text: &str) -> Result<GoodSemigroup, ReadError> {
    let (c, pts) = parse_candidate(text)?;
    GoodSemigroup::new(c, pts).map_err(ReadError::Invalid)
}

pub fn write_json(s: &GoodSemigroup) -> String {
    let file = SemigroupFile {
        conductor: s.conductor(),
        small_elements: s.small_elements().iter().copied().collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

pub fn write_plain(s: &GoodSemigroup) -> String {
    let mut out = format!("c {} {}\n", s.conductor().x, s.conductor().y);
    for p in s.small_elements() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}
