//! Lattice points in ℕ² and ℤ², with the componentwise partial order.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Add;

/// A point of ℕ², the element type of a good semigroup.
///
/// The derived `Ord` is lexicographic and is used only for storage in
/// ordered collections; the semigroup-theoretic (partial) order is exposed
/// through [`Point::leq`], [`Point::lt`] and [`Point::ll`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct Point {
    pub x: u32,
    pub y: u32,
}

/// A point of ℤ². Used for query arguments like γ − α that may leave ℕ²;
/// never stored inside a semigroup.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointZ {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ZERO: Point = Point { x: 0, y: 0 };
    pub const ONE: Point = Point { x: 1, y: 1 };

    pub const fn new(x: u32, y: u32) -> Self {
        Point { x, y }
    }

    /// Componentwise order α ≤ β.
    pub fn leq(self, other: Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// Strict componentwise order α < β (≤ and ≠).
    pub fn lt(self, other: Point) -> bool {
        self.leq(other) && self != other
    }

    /// Strict domination α ≪ β: both coordinates strictly smaller.
    pub fn ll(self, other: Point) -> bool {
        self.x < other.x && self.y < other.y
    }

    /// α ≤≤ β: equal, or strictly dominated.
    pub fn lele(self, other: Point) -> bool {
        self == other || self.ll(other)
    }

    /// Infimum α ∧ β.
    pub fn meet(self, other: Point) -> Point {
        Point::new(self.x.min(other.x), self.y.min(other.y))
    }

    /// Componentwise maximum.
    pub fn join(self, other: Point) -> Point {
        Point::new(self.x.max(other.x), self.y.max(other.y))
    }

    /// Componentwise clamp to `cap`.
    pub fn clamp_to(self, cap: Point) -> Point {
        self.meet(cap)
    }

    pub fn checked_sub(self, other: Point) -> Option<Point> {
        Some(Point::new(
            self.x.checked_sub(other.x)?,
            self.y.checked_sub(other.y)?,
        ))
    }

    pub fn coord(self, axis: Axis) -> u32 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
        }
    }

    pub fn swapped(self) -> Point {
        Point::new(self.y, self.x)
    }
}

impl PointZ {
    pub const fn new(x: i64, y: i64) -> Self {
        PointZ { x, y }
    }

    pub fn leq(self, other: PointZ) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn is_nonnegative(self) -> bool {
        self.x >= 0 && self.y >= 0
    }

    /// Back to ℕ², if both coordinates are nonnegative.
    pub fn to_point(self) -> Option<Point> {
        if self.is_nonnegative() {
            Some(Point::new(self.x as u32, self.y as u32))
        } else {
            None
        }
    }

    pub fn swapped(self) -> PointZ {
        PointZ::new(self.y, self.x)
    }
}

impl From<Point> for PointZ {
    fn from(p: Point) -> Self {
        PointZ::new(p.x as i64, p.y as i64)
    }
}

impl From<[u32; 2]> for Point {
    fn from(v: [u32; 2]) -> Self {
        Point::new(v[0], v[1])
    }
}

impl From<Point> for [u32; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(u32, u32)> for Point {
    fn from(v: (u32, u32)) -> Self {
        Point::new(v.0, v.1)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, other: Point) -> Point {
        Point::new(self.x + other.x, self.y + other.y)
    }
}

impl Add for PointZ {
    type Output = PointZ;
    fn add(self, other: PointZ) -> PointZ {
        PointZ::new(self.x + other.x, self.y + other.y)
    }
}

impl std::ops::Sub for PointZ {
    type Output = PointZ;
    fn sub(self, other: PointZ) -> PointZ {
        PointZ::new(self.x - other.x, self.y - other.y)
    }
}

/// p − q over ℤ², even when p, q ∈ ℕ².
pub fn diff(p: Point, q: Point) -> PointZ {
    PointZ::new(p.x as i64 - q.x as i64, p.y as i64 - q.y as i64)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for PointZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for PointZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One of the two coordinate axes (the two valuation components).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "1"),
            Axis::Y => write!(f, "2"),
        }
    }
}

/// An inclusive axis-aligned box [lo, hi] ⊂ ℕ².
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Box2 {
    pub lo: Point,
    pub hi: Point,
}

impl Box2 {
    pub fn new(lo: Point, hi: Point) -> Self {
        assert!(lo.leq(hi), "box lower corner must be ≤ upper corner");
        Box2 { lo, hi }
    }

    pub fn from_origin(hi: Point) -> Self {
        Box2::new(Point::ZERO, hi)
    }

    pub fn contains(&self, p: Point) -> bool {
        self.lo.leq(p) && p.leq(self.hi)
    }

    pub fn contains_z(&self, p: PointZ) -> bool {
        p.to_point().is_some_and(|q| self.contains(q))
    }

    /// Row-major iteration over all lattice points in the box.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        let (lo, hi) = (self.lo, self.hi);
        (lo.y..=hi.y).flat_map(move |y| (lo.x..=hi.x).map(move |x| Point::new(x, y)))
    }

    pub fn width(&self) -> u32 {
        self.hi.x - self.lo.x + 1
    }

    pub fn height(&self) -> u32 {
        self.hi.y - self.lo.y + 1
    }
}
