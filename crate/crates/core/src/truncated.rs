//! Finite representation of the eventually-periodic subsets of ℕ² this
//! library works with: a set of points inside a window, vertical and
//! horizontal rays leaving the window, and an optional full quadrant.

use crate::point::{Box2, Point, PointZ};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A subset of ℕ² that is explicit inside `window` and continues outside it
/// only along declared rays / a quadrant:
///
/// * every `x ∈ vertical_rays` contributes the half-line
///   {(x, y) : y > window.hi.y};
/// * every `y ∈ horizontal_rays` contributes {(x, y) : x > window.hi.x};
/// * `quadrant_from = Some(q)` contributes q + ℕ².
///
/// Points inside the window are always listed in `points`, including the
/// segments of rays/quadrant that intersect it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TruncatedSet {
    pub window: Box2,
    pub points: BTreeSet<Point>,
    pub vertical_rays: BTreeSet<u32>,
    pub horizontal_rays: BTreeSet<u32>,
    pub quadrant_from: Option<Point>,
}

impl TruncatedSet {
    pub fn empty(window: Box2) -> Self {
        TruncatedSet {
            window,
            points: BTreeSet::new(),
            vertical_rays: BTreeSet::new(),
            horizontal_rays: BTreeSet::new(),
            quadrant_from: None,
        }
    }

    /// Membership over all of ℤ² (false outside ℕ²).
    pub fn contains_z(&self, p: PointZ) -> bool {
        match p.to_point() {
            Some(q) => self.contains(q),
            None => false,
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        if self.window.contains(p) {
            return self.points.contains(&p);
        }
        if let Some(q) = self.quadrant_from {
            if q.leq(p) {
                return true;
            }
        }
        if p.y > self.window.hi.y
            && p.x <= self.window.hi.x
            && self.vertical_rays.contains(&p.x)
        {
            return true;
        }
        if p.x > self.window.hi.x
            && p.y <= self.window.hi.y
            && self.horizontal_rays.contains(&p.y)
        {
            return true;
        }
        false
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
            && self.vertical_rays.is_empty()
            && self.horizontal_rays.is_empty()
            && self.quadrant_from.is_none()
    }

    /// Whether the set is finite, i.e. carries no rays or quadrant.
    pub fn is_finite(&self) -> bool {
        self.vertical_rays.is_empty()
            && self.horizontal_rays.is_empty()
            && self.quadrant_from.is_none()
    }

    /// Minimal elements with respect to the componentwise order. For a set
    /// with rays this is still finite and realised inside the window,
    /// because every ray point is ≥ some window point of the same ray.
    pub fn minimal_elements(&self) -> Vec<Point> {
        let mut mins: Vec<Point> = Vec::new();
        // staircase sweep: ascending x, keep the lowest y seen so far
        let mut best_y: Option<u32> = None;
        let mut by_x: Vec<Point> = self.points.iter().copied().collect();
        by_x.sort_by_key(|p| (p.x, p.y));
        let mut seen_x: Option<u32> = None;
        for p in by_x {
            if seen_x == Some(p.x) {
                continue; // only the lowest point of each column can be minimal
            }
            seen_x = Some(p.x);
            if best_y.map_or(true, |b| p.y < b) {
                mins.push(p);
                best_y = Some(p.y);
            }
        }
        mins
    }

    /// The set difference restricted to the common window. Both operands
    /// must share a window; ray/quadrant structure is subtracted too.
    pub fn difference(&self, other: &TruncatedSet) -> TruncatedSet {
        assert_eq!(self.window, other.window, "window mismatch in difference");
        let mut out = TruncatedSet::empty(self.window);
        out.points = self
            .points
            .iter()
            .copied()
            .filter(|p| !other.contains(*p))
            .collect();
        out.vertical_rays = self
            .vertical_rays
            .iter()
            .copied()
            .filter(|x| {
                let probe = Point::new(*x, self.window.hi.y + 1);
                !other.contains(probe)
            })
            .collect();
        out.horizontal_rays = self
            .horizontal_rays
            .iter()
            .copied()
            .filter(|y| {
                let probe = Point::new(self.window.hi.x + 1, *y);
                !other.contains(probe)
            })
            .collect();
        // a quadrant minus anything is not representable here in general;
        // callers never subtract from a quadrant-carrying set
        assert!(
            self.quadrant_from.is_none(),
            "difference from a quadrant-carrying set is unsupported"
        );
        out
    }

    /// All points of the set inside `clip` (clip must sit inside the window
    /// or extend beyond it; ray points beyond the window are materialised).
    pub fn points_within(&self, clip: Box2) -> Vec<Point> {
        clip.iter().filter(|p| self.contains(*p)).collect()
    }

    pub fn insert(&mut self, p: Point) {
        debug_assert!(self.window.contains(p));
        self.points.insert(p);
    }
}
