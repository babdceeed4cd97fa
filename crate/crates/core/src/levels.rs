//! Partition of the Apéry set into levels A₁, …, A_N by the iterated
//! "maximal w.r.t. ≤≤, minus infima" construction, plus level queries,
//! classification and the basis chain.

use crate::point::{Axis, Box2, Point, PointZ};
use crate::semigroup::GoodSemigroup;
use crate::truncated::TruncatedSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// The ordered levels A₁, …, A_N of Ap(S), as truncated sets on a common
/// window.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LevelPartition {
    pub levels: Vec<TruncatedSet>,
    pub window: Box2,
}

#[derive(Debug, Error)]
pub enum LevelsError {
    #[error("level iteration did not terminate within {0} rounds (corrupt input?)")]
    NonTermination(usize),
}

/// Shape of a level per its infinite lines.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelShape {
    Finite,
    OneLineVertical,
    OneLineHorizontal,
    TwoLines,
}

/// Classification of one level: its shape and the anchoring ray coordinates.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LevelClass {
    pub shape: LevelShape,
    pub vertical_rays: Vec<u32>,
    pub horizontal_rays: Vec<u32>,
}

/// Whether α is strictly dominated (≪) by some element of R, treating ray
/// flags as points with an arbitrarily large free coordinate.
fn dominated(r: &TruncatedSet, alpha: Point) -> bool {
    if r.points.iter().any(|&b| alpha.ll(b)) {
        return true;
    }
    // a vertical ray at x' > α.x contains (x', y) with y unbounded
    r.vertical_rays.iter().any(|&x| x > alpha.x)
        || r.horizontal_rays.iter().any(|&y| y > alpha.y)
}

/// Whether B has an element strictly above α in α's column (ray-aware).
fn column_successor_in(b: &TruncatedSet, alpha: Point) -> bool {
    b.vertical_rays.contains(&alpha.x)
        || b.points
            .iter()
            .any(|&q| q.x == alpha.x && q.y > alpha.y)
}

fn row_successor_in(b: &TruncatedSet, alpha: Point) -> bool {
    b.horizontal_rays.contains(&alpha.y)
        || b.points
            .iter()
            .any(|&q| q.y == alpha.y && q.x > alpha.x)
}

/// Compute the level partition of Ap(S) on the default window.
///
/// Each round takes B = {α ∈ R : α maximal w.r.t. ≤≤}, removes from B the
/// set C of its elements expressible as β₁ ∧ β₂ with β₁, β₂ ∈ B ∖ {α}, and
/// strips D = B ∖ C from R. The collected Ds, in reverse removal order,
/// are the levels.
pub fn compute_levels(s: &GoodSemigroup) -> Result<LevelPartition, LevelsError> {
    let window = s.default_window();
    let mut remaining = s.apery_set(window);
    let budget = remaining.points.len() + 2;
    let mut removed: Vec<TruncatedSet> = Vec::new();
    let mut rounds = 0;
    while !remaining.is_empty() {
        rounds += 1;
        if rounds > budget {
            return Err(LevelsError::NonTermination(budget));
        }
        let mut b = TruncatedSet::empty(window);
        for &p in &remaining.points {
            if !dominated(&remaining, p) {
                b.insert(p);
            }
        }
        // only the outermost ray of each direction is undominated
        if let Some(&x) = remaining.vertical_rays.iter().next_back() {
            b.vertical_rays.insert(x);
        }
        if let Some(&y) = remaining.horizontal_rays.iter().next_back() {
            b.horizontal_rays.insert(y);
        }
        // α = β₁ ∧ β₂ with β₁, β₂ ∈ B ∖ {α} forces β₁ strictly above α in
        // its column and β₂ strictly to its right in its row (or the
        // symmetric labelling); ray elements of B are never infima.
        let mut d = b.clone();
        for &p in &b.points {
            if column_successor_in(&b, p) && row_successor_in(&b, p) {
                d.points.remove(&p);
            }
        }
        remaining.points.retain(|p| !d.points.contains(p));
        remaining
            .vertical_rays
            .retain(|x| !d.vertical_rays.contains(x));
        remaining
            .horizontal_rays
            .retain(|y| !d.horizontal_rays.contains(y));
        removed.push(d);
    }
    removed.reverse();
    Ok(LevelPartition {
        levels: removed,
        window,
    })
}

impl LevelPartition {
    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// 1-based index of the level containing p, or None if p ∉ Ap(S).
    /// Points beyond the window are resolved through the ray flags (each
    /// stable line lies in a single level).
    pub fn level_of(&self, p: PointZ) -> Option<usize> {
        let q = p.to_point()?;
        for (i, level) in self.levels.iter().enumerate() {
            if level.contains(q) {
                return Some(i + 1);
            }
        }
        None
    }

    /// Classify every level by its ray flags.
    pub fn classify(&self) -> Vec<LevelClass> {
        self.levels
            .iter()
            .map(|level| {
                let v: Vec<u32> = level.vertical_rays.iter().copied().collect();
                let h: Vec<u32> = level.horizontal_rays.iter().copied().collect();
                let shape = match (v.is_empty(), h.is_empty()) {
                    (true, true) => LevelShape::Finite,
                    (false, true) => LevelShape::OneLineVertical,
                    (true, false) => LevelShape::OneLineHorizontal,
                    (false, false) => LevelShape::TwoLines,
                };
                LevelClass {
                    shape,
                    vertical_rays: v,
                    horizontal_rays: h,
                }
            })
            .collect()
    }
}

/// Classify levels and check the expected shape counts: with m = max(e₁,e₂)
/// and k = min(e₁,e₂), the top k levels carry two lines, the next m − k one
/// line on the side of the larger multiplicity, and the remaining e − m
/// levels are finite.
pub fn classify_levels(
    p: &LevelPartition,
    s: &GoodSemigroup,
) -> Result<Vec<LevelClass>, String> {
    let classes = p.classify();
    let e = s.min_nonzero();
    let (m, k) = (e.x.max(e.y) as usize, e.x.min(e.y) as usize);
    let n = classes.len();
    for (i, c) in classes.iter().enumerate() {
        let expected = if i + k >= n {
            LevelShape::TwoLines
        } else if i + m >= n {
            if e.x > e.y {
                LevelShape::OneLineVertical
            } else {
                LevelShape::OneLineHorizontal
            }
        } else {
            LevelShape::Finite
        };
        if c.shape != expected {
            return Err(format!(
                "level {} has shape {:?}, expected {:?} (e = {})",
                i + 1,
                c.shape,
                expected,
                e
            ));
        }
    }
    Ok(classes)
}

/// Construct the chain (0,0) = α₁ < α₂ < … < α_N with α_i ∈ A_i.
///
/// From α_i: if some β ∈ A_{i+1} strictly dominates α_i, take the
/// lexicographically least such β. Otherwise α_i is the infimum of its two
/// Δ-arms' A_{i+1} points; the successor is taken on an arm whose opposite
/// arm lies entirely in Ap(S), lexicographically least when both qualify.
pub fn apery_basis_chain(
    s: &GoodSemigroup,
    p: &LevelPartition,
) -> Result<Vec<Point>, String> {
    let window = p.window;
    let mut chain = vec![Point::ZERO];
    for i in 0..p.n() - 1 {
        let cur = chain[i];
        let next_level = &p.levels[i + 1];
        // materialise the next level inside the window; ray elements beyond
        // the window are never needed: the window's stable lines already
        // contain in-window representatives of every ray
        let candidates: Vec<Point> = next_level.points.iter().copied().collect();
        if let Some(&b) = candidates.iter().find(|&&b| cur.ll(b)) {
            chain.push(b);
            continue;
        }
        let arm_points = |axis: Axis| -> Vec<Point> {
            candidates
                .iter()
                .copied()
                .filter(|&b| b != cur && b.coord(axis) == cur.coord(axis) && b.coord(axis.other()) > cur.coord(axis.other()))
                .collect()
        };
        // whether the whole arm Δ_axis^S(cur) lies in Ap(S)
        let arm_in_ap = |axis: Axis| -> bool {
            let arm = s.delta_s(cur.into(), if axis == Axis::X { crate::semigroup::DeltaPart::One } else { crate::semigroup::DeltaPart::Two }, window);
            arm.points.iter().all(|&q| s.in_apery(q))
        };
        let col = arm_points(Axis::X); // Δ₁-arm members of A_{i+1}
        let row = arm_points(Axis::Y);
        let mut choice: Option<Point> = None;
        // successor on the Δ₁-arm requires Δ₂^S(cur) ⊆ Ap(S), and vice versa
        if !col.is_empty() && arm_in_ap(Axis::Y) {
            choice = col.iter().copied().min();
        }
        if !row.is_empty() && arm_in_ap(Axis::X) {
            let alt = row.iter().copied().min();
            choice = match (choice, alt) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (None, b) => b,
                (a, None) => a,
            };
        }
        match choice {
            Some(b) => chain.push(b),
            None => {
                return Err(format!(
                    "no valid successor of {cur} into level {} (invalid semigroup?)",
                    i + 2
                ))
            }
        }
    }
    Ok(chain)
}

/// Some β ∈ A_{i−1} with β ≤ p, for p ∈ A_i, i ≥ 2. Existence is a theorem
/// about good semigroups; absence is reported (fuzzing hook).
pub fn previous_level_witness(p: &LevelPartition, point: Point) -> Result<Point, String> {
    let i = p
        .level_of(point.into())
        .ok_or_else(|| format!("{point} is not an Apéry element"))?;
    if i < 2 {
        return Err(format!("{point} is in A1, which has no previous level"));
    }
    let prev = &p.levels[i - 2];
    let mut candidates: BTreeSet<Point> = prev
        .points
        .iter()
        .copied()
        .filter(|b| b.leq(point))
        .collect();
    // for query points beyond the window, ray elements are also candidates
    for &x in &prev.vertical_rays {
        if x <= point.x && point.y > p.window.hi.y {
            candidates.insert(Point::new(x, p.window.hi.y + 1).meet(point));
        }
    }
    for &y in &prev.horizontal_rays {
        if y <= point.y && point.x > p.window.hi.x {
            candidates.insert(Point::new(p.window.hi.x + 1, y).meet(point));
        }
    }
    candidates
        .into_iter()
        .next()
        .ok_or_else(|| format!("no element of A{} lies below {point}", i - 1))
}
