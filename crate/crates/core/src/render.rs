//! Figure-style rendering of a semigroup on a finite window: • for
//! members below the Apéry set, the level index for Apéry elements,
//! blank for non-members.

use crate::levels::LevelPartition;
use crate::point::{Box2, Point};
use crate::semigroup::GoodSemigroup;
use crate::symmetry;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenderFormat {
    Ascii,
    Svg,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Annotate {
    Membership,
    Apery,
    Levels,
    Duality,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RenderSpec {
    pub format: RenderFormat,
    pub window: Box2,
    pub annotate: Annotate,
}

const MAX_SIDE: u32 = 200;

fn level_symbol(i: usize) -> char {
    if i <= 9 {
        char::from_digit(i as u32, 10).unwrap()
    } else {
        char::from_u32('a' as u32 + (i as u32 - 10)).unwrap_or('?')
    }
}

/// The mark for one lattice point, or None for blank.
fn cell(
    s: &GoodSemigroup,
    p: Option<&LevelPartition>,
    duals: Option<&[crate::truncated::TruncatedSet]>,
    annotate: Annotate,
    pt: Point,
) -> Option<char> {
    if !s.contains(pt) {
        // duality marks live on Δ-sets which stay inside S, so blank is right
        return None;
    }
    match annotate {
        Annotate::Membership => Some('\u{2022}'),
        Annotate::Apery => Some(if s.in_apery(pt) { '*' } else { '\u{2022}' }),
        Annotate::Levels => {
            if !s.in_apery(pt) {
                return Some('\u{2022}');
            }
            let lvl = p.and_then(|p| p.level_of(pt.into()));
            Some(lvl.map_or('?', level_symbol))
        }
        Annotate::Duality => {
            if !s.in_apery(pt) {
                return Some('\u{2022}');
            }
            let lvl = duals.and_then(|d| {
                d.iter()
                    .position(|set| set.contains(pt))
                    .map(|i| i + 1)
            });
            Some(lvl.map_or('?', level_symbol))
        }
    }
}

pub fn render(
    s: &GoodSemigroup,
    p: Option<&LevelPartition>,
    spec: &RenderSpec,
) -> Result<String, String> {
    let w = spec.window;
    if w.width() > MAX_SIDE || w.height() > MAX_SIDE {
        return Err(format!(
            "window {}×{} exceeds the {MAX_SIDE}×{MAX_SIDE} limit",
            w.width(),
            w.height()
        ));
    }
    let owned_partition;
    let partition = match (p, spec.annotate) {
        (Some(p), _) => Some(p),
        (None, Annotate::Levels | Annotate::Duality) => {
            owned_partition = crate::levels::compute_levels(s).map_err(|e| e.to_string())?;
            Some(&owned_partition)
        }
        _ => None,
    };
    let duals = if spec.annotate == Annotate::Duality {
        Some(symmetry::dual_levels(s, partition.expect("computed above")).dual_levels)
    } else {
        None
    };
    let mark = |pt: Point| cell(s, partition, duals.as_deref(), spec.annotate, pt);
    match spec.format {
        RenderFormat::Ascii => Ok(ascii(w, mark)),
        RenderFormat::Svg => Ok(svg(w, mark)),
        RenderFormat::Tikz => Ok(tikz(w, mark)),
    }
}

fn ascii(w: Box2, mark: impl Fn(Point) -> Option<char>) -> String {
    let mut out = String::new();
    for y in (w.lo.y..=w.hi.y).rev() {
        let mut row = String::new();
        for x in w.lo.x..=w.hi.x {
            row.push(mark(Point::new(x, y)).unwrap_or(' '));
            row.push(' ');
        }
        out.push_str(row.trim_end());
        out.push('\n');
    }
    out
}

fn svg(w: Box2, mark: impl Fn(Point) -> Option<char>) -> String {
    const CELL: u32 = 20;
    let width = w.width() * CELL;
    let height = w.height() * CELL;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    );
    out.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for y in w.lo.y..=w.hi.y {
        for x in w.lo.x..=w.hi.x {
            let Some(ch) = mark(Point::new(x, y)) else {
                continue;
            };
            let cx = (x - w.lo.x) * CELL + CELL / 2;
            let cy = height - ((y - w.lo.y) * CELL + CELL / 2);
            if ch == '\u{2022}' {
                out.push_str(&format!(
                    "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"black\"/>\n"
                ));
            } else {
                out.push_str(&format!(
                    "  <text x=\"{cx}\" y=\"{cy}\" font-size=\"12\" \
                     text-anchor=\"middle\" dominant-baseline=\"middle\">{ch}</text>\n"
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn tikz(w: Box2, mark: impl Fn(Point) -> Option<char>) -> String {
    let mut out = String::from("\\begin{tikzpicture}[scale=0.5]\n");
    out.push_str(&format!(
        "  \\draw[very thin, gray!30] ({},{}) grid ({},{});\n",
        w.lo.x, w.lo.y, w.hi.x, w.hi.y
    ));
    for y in w.lo.y..=w.hi.y {
        for x in w.lo.x..=w.hi.x {
            let Some(ch) = mark(Point::new(x, y)) else {
                continue;
            };
            if ch == '\u{2022}' {
                out.push_str(&format!("  \\fill ({x},{y}) circle (3pt);\n"));
            } else {
                out.push_str(&format!("  \\node at ({x},{y}) {{{ch}}};\n"));
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::minimal_semigroup;

    #[test]
    fn origin_cell_is_level_one() {
        let s = minimal_semigroup();
        let spec = RenderSpec {
            format: RenderFormat::Ascii,
            window: Box2::from_origin(Point::ZERO),
            annotate: Annotate::Levels,
        };
        assert_eq!(render(&s, None, &spec).unwrap(), "1\n");
    }

    #[test]
    fn window_cap_enforced() {
        let s = minimal_semigroup();
        let spec = RenderSpec {
            format: RenderFormat::Ascii,
            window: Box2::from_origin(Point::new(500, 2)),
            annotate: Annotate::Membership,
        };
        assert!(render(&s, None, &spec).is_err());
    }

    #[test]
    fn ascii_marks_levels() {
        let s = minimal_semigroup();
        let spec = RenderSpec {
            format: RenderFormat::Ascii,
            window: Box2::from_origin(Point::new(2, 2)),
            annotate: Annotate::Levels,
        };
        let grid = render(&s, None, &spec).unwrap();
        let rows: Vec<&str> = grid.lines().collect();
        // y = 2 on top; (0,0) bottom-left is level 1; (2,2) = (1,1)+(1,1)
        // sits below the Apéry set and gets a dot
        assert_eq!(rows[2].chars().next(), Some('1'));
        assert_eq!(rows[0], "  2 \u{2022}");
    }

    #[test]
    fn svg_and_tikz_are_wellformed() {
        let s = minimal_semigroup();
        for format in [RenderFormat::Svg, RenderFormat::Tikz] {
            let spec = RenderSpec {
                format,
                window: Box2::from_origin(Point::new(3, 3)),
                annotate: Annotate::Apery,
            };
            let out = render(&s, None, &spec).unwrap();
            assert!(out.contains("circle"));
        }
    }
}
