//! Built-in fixtures transcribed point-for-point from plotted figures,
//! plus the figure-level annotations used by the test suite.
//!
//! The semigroup data proper (conductor + small elements) is vendored as
//! JSON in the crate's `fixtures/` directory and embedded here; the
//! constants below additionally record every plotted point of each
//! figure and its level label so tests can validate the transcription.

use crate::io::read_semigroup;
use crate::point::{Box2, Point};
use crate::semigroup::GoodSemigroup;

pub const FIG1_PLOTTED: &[(u32, u32)] = &[(0, 0), (2, 3), (2, 4), (3, 3), (3, 6), (3, 7), (3, 8), (3, 9), (3, 10), (3, 11), (3, 12), (3, 13), (3, 14), (4, 3), (4, 6), (4, 7), (4, 8), (5, 3), (5, 6), (5, 7), (5, 9), (5, 10), (5, 11), (5, 12), (5, 13), (5, 14), (6, 3), (6, 6), (6, 7), (6, 9), (6, 10), (6, 11), (6, 12), (6, 13), (6, 14), (7, 3), (7, 6), (7, 7), (7, 9), (7, 10), (7, 11), (7, 12), (7, 13), (7, 14), (8, 3), (8, 6), (8, 7), (8, 9), (8, 10), (8, 11), (8, 12), (8, 13), (8, 14)];

pub const FIG1_LEVEL_MARKS: &[&[(u32, u32)]] = &[
    &[(0, 0)],
    &[(2, 4), (3, 3)],
    &[(3, 6), (3, 7), (3, 8), (4, 3), (5, 3), (6, 3), (7, 3), (8, 3)],
    &[(3, 9), (3, 10), (3, 11), (3, 12), (3, 13), (3, 14), (4, 8), (5, 7), (6, 7), (7, 7), (8, 7)],
    &[(6, 12), (6, 13), (6, 14), (7, 11), (8, 11)],
];

pub const FIG3_PLOTTED: &[(u32, u32)] = &[(0, 0), (4, 3), (7, 6), (7, 9), (7, 12), (7, 13), (8, 6), (11, 9), (11, 12), (11, 15), (11, 16), (11, 17), (12, 9), (14, 12), (14, 15), (14, 16), (14, 18), (14, 19), (14, 20), (14, 21), (14, 22), (14, 23), (14, 24), (14, 25), (14, 26), (14, 27), (14, 28), (14, 29), (14, 30), (14, 31), (14, 32), (14, 33), (14, 34), (14, 35), (15, 12), (15, 15), (15, 16), (15, 18), (15, 19), (15, 20), (15, 21), (15, 22), (15, 23), (15, 24), (15, 25), (15, 26), (15, 27), (15, 28), (15, 29), (15, 30), (15, 31), (15, 32), (15, 33), (15, 34), (15, 35), (16, 12), (16, 15), (16, 16), (16, 18), (16, 19), (16, 20), (18, 12), (18, 15), (18, 16), (18, 18), (18, 19), (18, 21), (18, 22), (18, 23), (18, 24), (18, 25), (18, 26), (18, 27), (18, 28), (18, 29), (18, 30), (18, 31), (18, 32), (18, 33), (18, 34), (18, 35), (19, 12), (19, 15), (19, 16), (19, 18), (19, 19), (19, 21), (19, 22), (19, 23), (19, 24), (19, 25), (19, 26), (19, 27), (19, 28), (19, 29), (19, 30), (19, 31), (19, 32), (19, 33), (19, 34), (19, 35), (20, 12), (20, 15), (20, 16), (20, 18), (20, 19), (20, 21), (20, 22), (20, 23), (21, 12), (21, 15), (21, 16), (21, 18), (21, 19), (21, 21), (21, 22), (21, 24), (21, 25), (21, 26), (21, 27), (21, 28), (21, 29), (21, 30), (21, 31), (21, 32), (21, 33), (21, 34), (21, 35), (22, 12), (22, 15), (22, 16), (22, 18), (22, 19), (22, 21), (22, 22), (22, 24), (22, 25), (22, 26), (22, 27), (22, 28), (22, 29), (22, 30), (22, 31), (22, 32), (22, 33), (22, 34), (22, 35), (23, 12), (23, 15), (23, 16), (23, 18), (23, 19), (23, 21), (23, 22), (23, 24), (23, 25), (23, 26), (23, 27), (23, 28), (23, 29), (23, 30), (23, 31), (23, 32), (23, 33), (23, 34), (23, 35), (24, 12), (24, 15), (24, 16), (24, 18), (24, 19), (24, 21), (24, 22), (24, 24), (24, 25), (24, 26), (25, 12), (25, 15), (25, 16), (25, 18), (25, 19), (25, 21), (25, 22), (25, 24), (25, 25), (25, 27), (25, 28), (25, 29), (25, 30), (25, 31), (25, 32), (25, 33), (25, 34), (25, 35), (26, 12), (26, 15), (26, 16), (26, 18), (26, 19), (26, 21), (26, 22), (26, 24), (26, 25), (26, 27), (26, 28), (26, 29), (26, 30), (26, 31), (26, 32), (26, 33), (26, 34), (26, 35), (27, 12), (27, 15), (27, 16), (27, 18), (27, 19), (27, 21), (27, 22), (27, 24), (27, 25), (27, 27), (27, 28), (27, 29), (27, 30), (27, 31), (27, 32), (27, 33), (27, 34), (27, 35), (28, 12), (28, 15), (28, 16), (28, 18), (28, 19), (28, 21), (28, 22), (28, 24), (28, 25), (28, 27), (28, 28), (28, 29), (28, 30), (28, 31), (28, 32), (28, 33), (28, 34), (28, 35), (29, 12), (29, 15), (29, 16), (29, 18), (29, 19), (29, 21), (29, 22), (29, 24), (29, 25), (29, 27), (29, 28), (29, 29), (29, 30), (29, 31), (29, 32), (29, 33), (29, 34), (29, 35), (30, 12), (30, 15), (30, 16), (30, 18), (30, 19), (30, 21), (30, 22), (30, 24), (30, 25), (30, 27), (30, 28), (30, 29), (30, 30), (30, 31), (30, 32), (30, 33), (30, 34), (30, 35), (31, 12), (31, 15), (31, 16), (31, 18), (31, 19), (31, 21), (31, 22), (31, 24), (31, 25), (31, 27), (31, 28), (31, 29), (31, 30), (31, 31), (31, 32), (31, 33), (31, 34), (31, 35), (32, 12), (32, 15), (32, 16), (32, 18), (32, 19), (32, 21), (32, 22), (32, 24), (32, 25), (32, 27), (32, 28), (32, 29), (32, 30), (32, 31), (32, 32), (32, 33), (32, 34), (32, 35), (33, 12), (33, 15), (33, 16), (33, 18), (33, 19), (33, 21), (33, 22), (33, 24), (33, 25), (33, 27), (33, 28), (33, 29), (33, 30), (33, 31), (33, 32), (33, 33), (33, 34), (33, 35)];

pub const FIG3_LEVEL_MARKS: &[&[(u32, u32)]] = &[
    &[(0, 0)],
    &[(7, 6), (7, 9), (7, 12), (7, 13)],
    &[(11, 17), (14, 12), (14, 15), (14, 16)],
    &[(14, 18), (14, 19), (14, 20), (14, 21), (14, 22), (14, 23), (14, 24), (14, 25), (14, 26), (14, 27), (14, 28), (14, 29), (14, 30), (14, 31), (14, 32), (14, 33), (14, 34), (14, 35), (15, 16), (16, 15), (16, 16), (18, 12), (19, 12), (20, 12), (21, 12)],
    &[(15, 21), (15, 22), (15, 23), (15, 24), (15, 25), (15, 26), (15, 27), (15, 28), (15, 29), (15, 30), (15, 31), (15, 32), (15, 33), (15, 34), (15, 35), (16, 18), (16, 19), (16, 20), (18, 16), (19, 16), (20, 16), (21, 15), (21, 16), (22, 12), (23, 12), (24, 12), (25, 12), (26, 12), (27, 12), (28, 12), (29, 12), (30, 12), (31, 12), (32, 12), (33, 12)],
    &[(21, 18), (21, 19), (21, 21), (21, 22), (21, 24), (21, 25), (21, 26), (21, 27), (21, 28), (21, 29), (21, 30), (21, 31), (21, 32), (21, 33), (21, 34), (21, 35), (22, 16), (23, 16), (24, 16), (25, 16), (26, 16), (27, 16), (28, 16), (29, 16), (30, 16), (31, 16), (32, 16), (33, 16)],
    &[(28, 30), (28, 31), (28, 32), (28, 33), (28, 34), (28, 35), (29, 29), (30, 29), (31, 29), (32, 29), (33, 29)],
];

pub const FIG4_PLOTTED: &[(u32, u32)] = &[(0, 0), (4, 2), (6, 3), (8, 4), (10, 5), (12, 6), (13, 7), (13, 8), (13, 9), (13, 10), (13, 11), (13, 12), (13, 13), (13, 14), (13, 15), (13, 16), (13, 17), (13, 18), (13, 19), (13, 20), (14, 7), (16, 8), (17, 9), (17, 10), (17, 11), (17, 12), (17, 13), (17, 14), (17, 15), (17, 16), (17, 17), (17, 18), (17, 19), (17, 20), (18, 9), (19, 10), (19, 11), (19, 12), (19, 13), (19, 14), (19, 15), (19, 16), (19, 17), (19, 18), (19, 19), (19, 20), (20, 10), (21, 11), (21, 12), (21, 13), (21, 14), (21, 15), (21, 16), (21, 17), (21, 18), (21, 19), (21, 20), (22, 11), (23, 12), (23, 13), (23, 14), (23, 15), (23, 16), (23, 17), (23, 18), (23, 19), (23, 20), (24, 12), (25, 13), (25, 14), (25, 15), (25, 16), (25, 17), (25, 18), (25, 19), (25, 20), (26, 13), (26, 14), (26, 15), (26, 16), (26, 17), (26, 18), (26, 19), (26, 20), (27, 13), (27, 14), (27, 15), (27, 16), (27, 17), (27, 18), (27, 19), (27, 20), (28, 13), (28, 14), (29, 13), (29, 15), (29, 16), (29, 17), (29, 18), (29, 19), (29, 20), (30, 13), (30, 15), (30, 16), (30, 17), (30, 18), (30, 19), (30, 20), (31, 13), (31, 15), (31, 16), (31, 17), (31, 18), (31, 19), (31, 20), (32, 13), (32, 15), (32, 16), (32, 17), (32, 18), (32, 19), (32, 20), (33, 13), (33, 15), (33, 16), (33, 17), (33, 18), (33, 19), (33, 20), (34, 13), (34, 15), (34, 16), (34, 17), (34, 18), (34, 19), (34, 20), (35, 13), (35, 15), (35, 16), (35, 17), (35, 18), (35, 19), (35, 20)];

pub const FIG4_LEVEL_MARKS: &[&[(u32, u32)]] = &[
    &[(0, 0)],
    &[(6, 3)],
    &[(13, 7), (13, 8), (13, 9), (13, 10), (13, 11), (13, 12), (13, 13), (13, 14), (13, 15), (13, 16), (13, 17), (13, 18), (13, 19), (13, 20)],
    &[(19, 10), (19, 11), (19, 12), (19, 13), (19, 14), (19, 15), (19, 16), (19, 17), (19, 18), (19, 19), (19, 20)],
    &[(26, 14), (26, 15), (26, 16), (26, 17), (26, 18), (26, 19), (26, 20), (27, 13), (28, 13), (29, 13), (30, 13), (31, 13), (32, 13), (33, 13), (34, 13), (35, 13)],
    &[(32, 17), (32, 18), (32, 19), (32, 20), (33, 16), (34, 16), (35, 16)],
];

pub const FIG5_PLOTTED: &[(u32, u32)] = &[(0, 0), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (3, 10), (3, 11), (4, 3), (4, 4), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (4, 10), (4, 11), (5, 3), (5, 4), (5, 5), (6, 3), (6, 4), (6, 6), (6, 7), (6, 8), (6, 9), (6, 10), (6, 11), (7, 3), (7, 4), (7, 6), (7, 7), (7, 8), (7, 9), (7, 10), (7, 11), (8, 3), (8, 4), (8, 6), (8, 7), (8, 8), (8, 9), (8, 10), (8, 11), (9, 3), (9, 4), (9, 6), (9, 7), (9, 8), (9, 9), (9, 10), (9, 11), (10, 3), (10, 4), (10, 6), (10, 7), (10, 8), (10, 9), (10, 10), (10, 11), (11, 3), (11, 4), (11, 6), (11, 7), (11, 8), (11, 9), (11, 10), (11, 11)];

pub const FIG5_LEVEL_MARKS: &[&[(u32, u32)]] = &[
    &[(0, 0)],
    &[(3, 4), (4, 3)],
    &[(3, 5), (4, 4), (5, 3)],
    &[(3, 6), (3, 7), (3, 8), (3, 9), (3, 10), (3, 11), (4, 5), (5, 4), (6, 3), (7, 3), (8, 3), (9, 3), (10, 3), (11, 3)],
    &[(4, 6), (4, 7), (4, 8), (4, 9), (4, 10), (4, 11), (5, 5), (6, 4), (7, 4), (8, 4), (9, 4), (10, 4), (11, 4)],
    &[(8, 9), (8, 10), (8, 11), (9, 8), (10, 8), (11, 8)],
];

/// Plot window of each figure (upper corner of the drawn grid).
pub fn plot_window(name: &str) -> Option<Box2> {
    let hi = match name {
        "fig1" => (8, 14),
        "fig3" => (33, 35),
        "fig4" => (35, 20),
        "fig5" => (11, 11),
        _ => return None,
    };
    Some(Box2::from_origin(Point::new(hi.0, hi.1)))
}

/// Every plotted point of the figure (members of S within the plot window).
pub fn plotted(name: &str) -> Option<&'static [(u32, u32)]> {
    match name {
        "fig1" => Some(FIG1_PLOTTED),
        "fig3" => Some(FIG3_PLOTTED),
        "fig4" => Some(FIG4_PLOTTED),
        "fig5" => Some(FIG5_PLOTTED),
        _ => None,
    }
}

/// The level labels printed in the figure: entry i−1 lists the plotted
/// members of A_i within the plot window.
pub fn level_marks(name: &str) -> Option<&'static [&'static [(u32, u32)]]> {
    match name {
        "fig1" => Some(FIG1_LEVEL_MARKS),
        "fig3" => Some(FIG3_LEVEL_MARKS),
        "fig4" => Some(FIG4_LEVEL_MARKS),
        "fig5" => Some(FIG5_LEVEL_MARKS),
        _ => None,
    }
}

pub const FIXTURE_NAMES: &[&str] = &["fig1", "fig3", "fig4", "fig5"];

/// Load a fixture by name. If the environment variable `GS_FIXTURE_DIR` is
/// set, `<dir>/<name>.json` (or `.txt`) takes precedence over the embedded
/// data.
pub fn by_name(name: &str) -> Option<GoodSemigroup> {
    if let Ok(dir) = std::env::var("GS_FIXTURE_DIR") {
        for ext in ["json", "txt"] {
            let path = std::path::Path::new(&dir).join(format!("{name}.{ext}"));
            if let Ok(text) = std::fs::read_to_string(&path) {
                return read_semigroup(&text).ok();
            }
        }
    }
    let text = match name {
        "fig1" => include_str!("../fixtures/fig1.json"),
        "fig3" => include_str!("../fixtures/fig3.json"),
        "fig4" => include_str!("../fixtures/fig4.json"),
        "fig5" => include_str!("../fixtures/fig5.json"),
        _ => return None,
    };
    Some(read_semigroup(text).expect("embedded fixture is valid"))
}
