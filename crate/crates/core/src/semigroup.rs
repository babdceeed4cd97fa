//! The canonical finite representation of a local good subsemigroup of ℕ²
//! and its primitive queries: membership, axiom verification, projections,
//! Δ-sets and the Apéry set.

use crate::numerical::NumericalSemigroup;
use crate::point::{diff, Axis, Box2, Point, PointZ};
use crate::truncated::TruncatedSet;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

/// A single axiom violation found by [`verify_axioms`].
#[derive(Clone, PartialEq, Eq, Debug, Error, Serialize, Deserialize)]
pub enum Violation {
    #[error("point {0} lies outside the box [0, conductor]")]
    PointOutsideBox(Point),
    #[error("(0, 0) is missing")]
    ZeroMissing,
    #[error("the conductor is not listed among the small elements")]
    ConductorMissing,
    #[error("not local: {0} is a nonzero element with a zero coordinate")]
    NotLocal(Point),
    #[error("additive closure fails: clamp({0} + {1}) is missing")]
    ClosureFails(Point, Point),
    #[error("(G1) fails: {0} ∧ {1} is missing")]
    InfimumMissing(Point, Point),
    #[error("(G2) fails for {0}, {1}: no δ with δ_{2} greater and the other coordinate equal to the minimum")]
    CompletionMissing(Point, Point, Axis),
    #[error("conductor is not minimal in coordinate {0}")]
    ConductorNotMinimal(Axis),
}

/// Outcome of verifying a candidate (conductor, point set) pair.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_ok() {
            write!(f, "ok")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

/// Which arm(s) of Δ to take.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DeltaPart {
    One,
    Two,
    Both,
}

fn clamp_contains(points: &BTreeSet<Point>, conductor: Point, p: Point) -> bool {
    points.contains(&p.clamp_to(conductor))
}

/// Check whether `(conductor, points)` defines a local good semigroup under
/// clamped membership. Every violation is reported with a witness.
pub fn verify_axioms(conductor: Point, points: &BTreeSet<Point>) -> VerifyReport {
    let mut violations = Vec::new();
    let boxed = Box2::from_origin(conductor);
    for &p in points {
        if !boxed.contains(p) {
            violations.push(Violation::PointOutsideBox(p));
        }
    }
    if !violations.is_empty() {
        // remaining checks assume well-formed input
        return VerifyReport { violations };
    }
    if !points.contains(&Point::ZERO) {
        violations.push(Violation::ZeroMissing);
    }
    if !points.contains(&conductor) {
        violations.push(Violation::ConductorMissing);
    }
    for &p in points {
        if p != Point::ZERO && (p.x == 0 || p.y == 0) {
            violations.push(Violation::NotLocal(p));
        }
    }
    let member = |p: Point| clamp_contains(points, conductor, p);
    for &a in points {
        for &b in points.range(a..) {
            if !member(a + b) {
                violations.push(Violation::ClosureFails(a, b));
            }
            if !points.contains(&a.meet(b)) {
                violations.push(Violation::InfimumMissing(a, b));
            }
            if a == b {
                continue;
            }
            // (G2): shared coordinate i, differing coordinate j
            if a.x == b.x && a.y != b.y {
                let min_y = a.y.min(b.y);
                let hi = conductor.x.max(a.x + 1);
                if !(a.x + 1..=hi).any(|t| member(Point::new(t, min_y))) {
                    violations.push(Violation::CompletionMissing(a, b, Axis::X));
                }
            }
            if a.y == b.y && a.x != b.x {
                let min_x = a.x.min(b.x);
                let hi = conductor.y.max(a.y + 1);
                if !(a.y + 1..=hi).any(|t| member(Point::new(min_x, t))) {
                    violations.push(Violation::CompletionMissing(a, b, Axis::Y));
                }
            }
        }
    }
    // Minimality of the conductor: under clamped membership, c is shrinkable
    // in x exactly when the full row {(x, y) : x ≥ c.x − 1, y ≥ c.y} ⊆ S,
    // i.e. when (c.x − 1, c.y) is a member.
    if conductor.x > 0 && points.contains(&Point::new(conductor.x - 1, conductor.y)) {
        violations.push(Violation::ConductorNotMinimal(Axis::X));
    }
    if conductor.y > 0 && points.contains(&Point::new(conductor.x, conductor.y - 1)) {
        violations.push(Violation::ConductorNotMinimal(Axis::Y));
    }
    VerifyReport { violations }
}

/// A local good subsemigroup of ℕ², immutable after construction.
///
/// Membership is total: a point is in S iff its componentwise clamp to the
/// conductor is among the small elements (the set is periodic past γ).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GoodSemigroup {
    conductor: Point,
    small_elements: BTreeSet<Point>,
    gamma: Point,
    min_nonzero: Point,
}

impl GoodSemigroup {
    /// Construct after full verification; the report of the first failure
    /// is returned on invalid data.
    pub fn new(conductor: Point, small_elements: BTreeSet<Point>) -> Result<Self, VerifyReport> {
        let report = verify_axioms(conductor, &small_elements);
        if !report.is_ok() {
            return Err(report);
        }
        Ok(Self::new_unchecked(conductor, small_elements))
    }

    /// Construct, first shrinking a non-minimal conductor. `points` must
    /// contain every member of S below `conductor`.
    pub fn normalized(conductor: Point, points: BTreeSet<Point>) -> Result<Self, VerifyReport> {
        let (c, pts) = normalize_conductor(conductor, points);
        Self::new(c, pts)
    }

    pub(crate) fn new_unchecked(conductor: Point, small_elements: BTreeSet<Point>) -> Self {
        let min_nonzero = small_elements
            .iter()
            .copied()
            .filter(|&p| p != Point::ZERO)
            .reduce(Point::meet)
            .unwrap_or(conductor);
        debug_assert!(small_elements.contains(&min_nonzero));
        let gamma = Point::new(
            conductor.x.saturating_sub(1),
            conductor.y.saturating_sub(1),
        );
        GoodSemigroup {
            conductor,
            small_elements,
            gamma,
            min_nonzero,
        }
    }

    pub fn conductor(&self) -> Point {
        self.conductor
    }

    /// γ = c − (1, 1).
    pub fn gamma(&self) -> Point {
        self.gamma
    }

    /// e, the smallest nonzero element.
    pub fn min_nonzero(&self) -> Point {
        self.min_nonzero
    }

    pub fn small_elements(&self) -> &BTreeSet<Point> {
        &self.small_elements
    }

    /// Number of Apéry levels, e₁ + e₂.
    pub fn level_count(&self) -> usize {
        (self.min_nonzero.x + self.min_nonzero.y) as usize
    }

    pub fn contains(&self, p: Point) -> bool {
        self.small_elements.contains(&p.clamp_to(self.conductor))
    }

    /// Membership over ℤ²: false off ℕ².
    pub fn contains_z(&self, p: PointZ) -> bool {
        p.to_point().is_some_and(|q| self.contains(q))
    }

    /// The semigroup with the two coordinates swapped.
    pub fn transpose(&self) -> GoodSemigroup {
        GoodSemigroup {
            conductor: self.conductor.swapped(),
            small_elements: self.small_elements.iter().map(|p| p.swapped()).collect(),
            gamma: self.gamma.swapped(),
            min_nonzero: self.min_nonzero.swapped(),
        }
    }

    /// Default working window [0, γ + e + (2, 2)]: one layer beyond the
    /// last unstable line, so domination queries on boundary lines are
    /// faithful to the infinite set.
    pub fn default_window(&self) -> Box2 {
        Box2::from_origin(self.gamma + self.min_nonzero + Point::new(2, 2))
    }

    /// The projection S_axis ⊆ ℕ, a numerical semigroup.
    pub fn projection(&self, axis: Axis) -> NumericalSemigroup {
        let coords: BTreeSet<u32> = self
            .small_elements
            .iter()
            .map(|p| p.coord(axis))
            .collect();
        NumericalSemigroup::from_elements(&coords, self.conductor.coord(axis))
    }

    /// Whether Δ_axis^S(p) ≠ ∅, over the ℤ² semantics of Δ: the constraint
    /// on a negative free coordinate is vacuous, and a negative shared
    /// coordinate empties the set.
    pub fn delta_axis_nonempty(&self, p: PointZ, axis: Axis) -> bool {
        let (shared, free) = match axis {
            Axis::X => (p.x, p.y),
            Axis::Y => (p.y, p.x),
        };
        if shared < 0 {
            return false;
        }
        let shared = shared as u32;
        let lo = if free < 0 { 0 } else { free as u32 + 1 };
        let hi = lo.max(self.conductor.coord(axis.other()));
        (lo..=hi).any(|t| {
            let q = match axis {
                Axis::X => Point::new(shared, t),
                Axis::Y => Point::new(t, shared),
            };
            self.contains(q)
        })
    }

    /// Whether Δ^S(p) = Δ₁^S(p) ∪ Δ₂^S(p) is empty.
    pub fn delta_is_empty(&self, p: PointZ) -> bool {
        !self.delta_axis_nonempty(p, Axis::X) && !self.delta_axis_nonempty(p, Axis::Y)
    }

    /// Finite description of Δ^S(p) (one arm or both) on `window`.
    /// Requires window.hi ≥ γ + e + (1, 1) so the ray flags are meaningful.
    pub fn delta_s(&self, p: PointZ, part: DeltaPart, window: Box2) -> TruncatedSet {
        debug_assert!((self.gamma + self.min_nonzero + Point::ONE).leq(window.hi));
        let mut out = TruncatedSet::empty(window);
        let in_arm = |q: Point, axis: Axis| -> bool {
            let (shared, free) = match axis {
                Axis::X => (p.x, p.y),
                Axis::Y => (p.y, p.x),
            };
            shared == q.coord(axis) as i64 && (q.coord(axis.other()) as i64) > free
        };
        let want = |axis: Axis| matches!((part, axis), (DeltaPart::Both, _) | (DeltaPart::One, Axis::X) | (DeltaPart::Two, Axis::Y));
        for q in window.iter() {
            if self.contains(q)
                && ((want(Axis::X) && in_arm(q, Axis::X)) || (want(Axis::Y) && in_arm(q, Axis::Y)))
            {
                out.insert(q);
            }
        }
        // Rays: membership along a line is constant past the conductor, so
        // one probe just outside the window decides the whole tail.
        if want(Axis::X) && p.x >= 0 && p.x <= window.hi.x as i64 {
            let probe = Point::new(p.x as u32, window.hi.y + 1);
            if self.contains(probe) && in_arm(probe, Axis::X) {
                out.vertical_rays.insert(p.x as u32);
            }
        }
        if want(Axis::Y) && p.y >= 0 && p.y <= window.hi.y as i64 {
            let probe = Point::new(window.hi.x + 1, p.y as u32);
            if self.contains(probe) && in_arm(probe, Axis::Y) {
                out.horizontal_rays.insert(p.y as u32);
            }
        }
        out
    }

    /// Whether p ∈ Ap(S) = {α ∈ S : α − e ∉ S}.
    pub fn in_apery(&self, p: Point) -> bool {
        self.contains(p) && !self.contains_z(diff(p, self.min_nonzero))
    }

    /// Ap(S) truncated to `window`, with ray flags for the stable lines.
    /// Requires window.hi ≥ γ + e + (1, 1).
    pub fn apery_set(&self, window: Box2) -> TruncatedSet {
        debug_assert!((self.gamma + self.min_nonzero + Point::ONE).leq(window.hi));
        let mut out = TruncatedSet::empty(window);
        for q in window.iter() {
            if self.in_apery(q) {
                out.insert(q);
            }
        }
        // Past γ + e + 1 both membership tests are constant along a line,
        // so a single probe decides each ray.
        for x in 0..=window.hi.x {
            if self.in_apery(Point::new(x, window.hi.y + 1)) {
                out.vertical_rays.insert(x);
            }
        }
        for y in 0..=window.hi.y {
            if self.in_apery(Point::new(window.hi.x + 1, y)) {
                out.horizontal_rays.insert(y);
            }
        }
        out
    }

    /// e + S as a truncated set on `window` (a good ideal of S).
    pub fn shifted_by_e(&self, window: Box2) -> TruncatedSet {
        self.shifted(self.min_nonzero, window)
    }

    /// t + S on `window`.
    pub fn shifted(&self, t: Point, window: Box2) -> TruncatedSet {
        let mut out = TruncatedSet::empty(window);
        for q in window.iter() {
            if self.contains_z(diff(q, t)) {
                out.insert(q);
            }
        }
        for x in 0..=window.hi.x {
            if self.contains_z(diff(Point::new(x, window.hi.y + 1), t)) {
                out.vertical_rays.insert(x);
            }
        }
        for y in 0..=window.hi.y {
            if self.contains_z(diff(Point::new(window.hi.x + 1, y), t)) {
                out.horizontal_rays.insert(y);
            }
        }
        // The quadrant flag covers the region beyond both window edges; it
        // is exact only when every member out there is ≥ t + c.
        if (t + self.conductor).leq(window.hi + Point::ONE) {
            out.quadrant_from = Some(t + self.conductor);
        }
        out
    }
}

/// Greedily shrink a conductor to its minimal value, dropping points that
/// fall outside the new box. `points` must list every member below
/// `conductor` under clamp semantics.
pub fn normalize_conductor(
    mut conductor: Point,
    mut points: BTreeSet<Point>,
) -> (Point, BTreeSet<Point>) {
    loop {
        let mut changed = false;
        if conductor.x > 0 && points.contains(&Point::new(conductor.x - 1, conductor.y)) {
            conductor.x -= 1;
            points.retain(|p| p.x <= conductor.x);
            changed = true;
        }
        if conductor.y > 0 && points.contains(&Point::new(conductor.x, conductor.y - 1)) {
            conductor.y -= 1;
            points.retain(|p| p.y <= conductor.y);
            changed = true;
        }
        if !changed {
            return (conductor, points);
        }
    }
}

/// The smallest local good semigroup {0} ∪ ((1,1) + ℕ²).
pub fn minimal_semigroup() -> GoodSemigroup {
    let pts: BTreeSet<Point> = [Point::ZERO, Point::ONE].into_iter().collect();
    GoodSemigroup::new(Point::ONE, pts).expect("minimal semigroup is valid")
}
