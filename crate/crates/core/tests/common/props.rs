//! Per-semigroup invariant checks shared by the property suite and the
//! acceptance gate. Each function panics with a witness on violation.

use std::collections::BTreeSet;

use good_semigroup::levels::{compute_levels, previous_level_witness, LevelPartition};
use good_semigroup::point::diff;
use good_semigroup::symmetry::{
    check_simmetria, classify_projection_line, delta_subset_apery, dual_levels,
    dual_minimals_check, dual_sequence, is_symmetric, large_conductor_check,
    projection_pairing_check, LineClass,
};
use good_semigroup::{Axis, Box2, GoodSemigroup, Point};

use super::{all_fixtures, randoms, symmetric_randoms};

/// Everything the per-semigroup checks need, computed once.
pub struct Ctx {
    pub s: GoodSemigroup,
    pub p: LevelPartition,
    pub win: Box2,
    pub ge: Point,
    /// Apéry elements materialized on the default window.
    pub apery: Vec<Point>,
}

pub fn ctx(s: &GoodSemigroup) -> Ctx {
    let p = compute_levels(s).expect("level iteration terminates");
    let win = s.default_window();
    let apery = win.iter().filter(|&q| s.in_apery(q)).collect();
    Ctx {
        s: s.clone(),
        p,
        win,
        ge: s.gamma() + s.min_nonzero(),
        apery,
    }
}

impl Ctx {
    pub fn level(&self, q: Point) -> usize {
        self.p
            .level_of(q.into())
            .unwrap_or_else(|| panic!("{q} should be an Apéry element"))
    }

    /// Materialized points of Δ₁^S(α), the part of column x = α.x above α.
    pub fn arm1(&self, a: Point) -> Vec<Point> {
        (a.y + 1..=self.win.hi.y)
            .map(|m| Point::new(a.x, m))
            .filter(|&q| self.s.contains(q))
            .collect()
    }

    /// Materialized points of Δ₂^S(α), the part of row y = α.y right of α.
    pub fn arm2(&self, a: Point) -> Vec<Point> {
        (a.x + 1..=self.win.hi.x)
            .map(|t| Point::new(t, a.y))
            .filter(|&q| self.s.contains(q))
            .collect()
    }

    /// Whether Δ₁^S(α) ⊆ Ap(S). The tail of the column is stable past
    /// γ₂ + e₂ + 1, so one probe above the window decides it.
    pub fn arm1_in_apery(&self, a: Point) -> bool {
        let probe = Point::new(a.x, self.win.hi.y + 1);
        self.arm1(a).iter().all(|&q| self.s.in_apery(q))
            && (!self.s.contains(probe) || self.s.in_apery(probe))
    }

    pub fn arm2_in_apery(&self, a: Point) -> bool {
        let probe = Point::new(self.win.hi.x + 1, a.y);
        self.arm2(a).iter().all(|&q| self.s.in_apery(q))
            && (!self.s.contains(probe) || self.s.in_apery(probe))
    }

    pub fn in_es(&self, q: Point) -> bool {
        self.s.contains_z(diff(q, self.s.min_nonzero()))
    }

    /// No element of S lies strictly between α and β (α < β).
    pub fn consecutive_in_s(&self, a: Point, b: Point) -> bool {
        !Box2::new(a, b)
            .iter()
            .any(|m| m != a && m != b && self.s.contains(m))
    }
}

/// A corpus of semigroups plus their transposes, so one-sided statements
/// get exercised on both orientations.
pub fn corpus(random_count: usize) -> Vec<Ctx> {
    let mut out = Vec::new();
    for (_, s) in all_fixtures() {
        out.push(ctx(&s.transpose()));
        out.push(ctx(&s));
    }
    for s in randoms(random_count) {
        out.push(ctx(&s.transpose()));
        out.push(ctx(&s));
    }
    out
}

pub fn symmetric_corpus(random_count: usize) -> Vec<Ctx> {
    let mut out: Vec<Ctx> = all_fixtures()
        .into_iter()
        .filter(|(_, s)| is_symmetric(&s))
        .map(|(_, s)| ctx(&s))
        .collect();
    assert!(out.len() >= 2, "expected symmetric fixtures in the corpus");
    out.extend(symmetric_randoms(random_count).iter().map(ctx));
    out
}

/// Every level but the last reaches the next one: each α ∈ A_i is either
/// dominated by some β ∈ A_{i+1}, or is the meet of a pair in A_{i+1}.
pub fn check_reaches_next_level(c: &Ctx) {
    for i in 1..c.p.n() {
        let next = &c.p.levels[i]; // A_{i+1}, zero-based index i
        for a in c.p.levels[i - 1].points_within(c.win) {
            if !a.leq(c.ge) {
                continue; // witnesses for boundary lines live off-window
            }
            let pts = next.points_within(c.win);
            let dominated = pts.iter().any(|&b| a.ll(b));
            let above = pts.iter().any(|&b| b.x == a.x && b.y > a.y);
            let right = pts.iter().any(|&b| b.y == a.y && b.x > a.x);
            assert!(
                dominated || (above && right),
                "{a} in level {i} reaches no element of level {}",
                i + 1
            );
        }
    }
}

/// Levels respect the order: a higher-or-equal level never dominates a
/// lower one, and going up in ≤ never goes down in level.
pub fn check_levels_monotone(c: &Ctx) {
    let leveled: Vec<(Point, usize)> = c.apery.iter().map(|&q| (q, c.level(q))).collect();
    for &(a, i) in &leveled {
        for &(b, j) in &leveled {
            if b.leq(a) {
                assert!(j <= i, "{b} (level {j}) ≤ {a} (level {i})");
            }
            if j >= i {
                assert!(!b.ll(a), "{b} (level {j}) strictly dominates {a} (level {i})");
            }
        }
    }
}

/// Two elements of the same level on one column push everything strictly
/// to the right (and weakly above) into higher levels.
pub fn check_column_pairs_push_right_up(c: &Ctx) {
    let leveled: Vec<(Point, usize)> = c.apery.iter().map(|&q| (q, c.level(q))).collect();
    for &(a, i) in &leveled {
        for &(b, j) in &leveled {
            if j != i || b.x != a.x || b.y <= a.y {
                continue;
            }
            for &(d, k) in &leveled {
                if d.x > a.x && d.y >= a.y {
                    assert!(k > i, "{d} (level {k}) should exceed level {i} given {a}, {b}");
                }
            }
        }
    }
}

/// Apéry elements consecutive in S sit on consecutive levels when one
/// dominates the other, and on equal-or-consecutive levels when they
/// share a coordinate.
pub fn check_consecutive_adjacent_levels(c: &Ctx) {
    for &a in &c.apery {
        for &b in &c.apery {
            if !a.lt(b) || !c.consecutive_in_s(a, b) {
                continue;
            }
            let (i, j) = (c.level(a), c.level(b));
            if a.ll(b) {
                assert_eq!(j, i + 1, "{a}→{b} consecutive, levels {i},{j}");
            } else {
                assert!(j == i || j == i + 1, "{a}→{b} share a coordinate, levels {i},{j}");
            }
        }
    }
}

/// From any non-top element, walking Apéry-consecutive steps that stay in
/// the same level eventually exposes a consecutive successor one level up.
/// (A single step does not always suffice: an element can have a unique
/// successor in its own level, e.g. a column interior.)
pub fn check_successor_chains_climb(c: &Ctx) {
    let apery: &[Point] = &c.apery;
    let successors = |a: Point| -> Vec<Point> {
        apery
            .iter()
            .copied()
            .filter(|&b| {
                a.lt(b)
                    && !Box2::new(a, b)
                        .iter()
                        .any(|m| m != a && m != b && a.lt(m) && m.lt(b) && c.s.in_apery(m))
            })
            .collect()
    };
    for &a in apery {
        if !a.leq(c.ge) || c.level(a) == c.p.n() {
            continue;
        }
        let i = c.level(a);
        // breadth-first over same-level consecutive steps
        let mut frontier = vec![a];
        let mut seen = BTreeSet::from([a]);
        let mut climbed = false;
        while let Some(q) = frontier.pop() {
            for b in successors(q) {
                match c.level(b) {
                    j if j == i + 1 => climbed = true,
                    j if j == i && seen.insert(b) => frontier.push(b),
                    _ => {}
                }
            }
            if climbed {
                break;
            }
        }
        assert!(climbed, "no successor chain from {a} (level {i}) reaches level {}", i + 1);
    }
}

/// Past γ + e, membership in a level is constant along each line.
pub fn check_boundary_line_stability(c: &Ctx) {
    let stable_y = c.ge.y + 1;
    for x in 0..=c.win.hi.x {
        let base = c.p.level_of(Point::new(x, stable_y).into());
        for dy in 1..=3 {
            let q = Point::new(x, stable_y + dy);
            assert_eq!(c.p.level_of(q.into()), base, "level changed along column {x} at {q}");
            assert_eq!(c.s.in_apery(q), base.is_some());
        }
    }
    let stable_x = c.ge.x + 1;
    for y in 0..=c.win.hi.y {
        let base = c.p.level_of(Point::new(stable_x, y).into());
        for dx in 1..=3 {
            let q = Point::new(stable_x + dx, y);
            assert_eq!(c.p.level_of(q.into()), base, "level changed along row {y} at {q}");
        }
    }
}

/// On the stable horizontal line the Apéry columns appear on consecutive
/// levels, ending at the top level N.
pub fn check_stable_line_levels_consecutive(c: &Ctx) {
    let stable_y = c.ge.y + 1;
    let levels: Vec<usize> = (0..=c.win.hi.x)
        .filter_map(|x| c.p.level_of(Point::new(x, stable_y).into()))
        .collect();
    for w in levels.windows(2) {
        assert_eq!(w[1], w[0] + 1, "stable-line levels {levels:?} not consecutive");
    }
    assert_eq!(levels.last(), Some(&c.p.n()), "stable line must end in the top level");
}

/// When a column meets e + S in finitely many (but some) points, the whole
/// Δ-set of the topmost of them lies in the Apéry set.
pub fn check_last_shifted_sees_only_apery(c: &Ctx) {
    for a in Box2::from_origin(c.ge).iter() {
        if c.in_es(Point::new(a.x, c.win.hi.y + 1)) {
            continue; // infinitely many
        }
        let hits: Vec<Point> = c.arm1(a).into_iter().filter(|&q| c.in_es(q)).collect();
        if let Some(&d) = hits.last() {
            assert!(
                delta_subset_apery(&c.s, d.into()),
                "Δ({d}) should avoid e + S (column of {a})"
            );
        }
    }
}

/// An Apéry element with e + S above it has its whole row arm in the
/// Apéry set, and the first point of that arm shares its level.
pub fn check_shifted_above_forces_apery_row(c: &Ctx) {
    for &a in &c.apery {
        if !a.leq(c.ge) {
            continue;
        }
        let es_above = c.arm1(a).iter().any(|&q| c.in_es(q))
            || c.in_es(Point::new(a.x, c.win.hi.y + 1));
        if !es_above {
            continue;
        }
        assert!(c.arm2_in_apery(a), "row arm of {a} should be in Ap(S)");
        let first = c.arm2(a).first().copied();
        let b = first.unwrap_or_else(|| panic!("row arm of {a} should be nonempty"));
        assert_eq!(c.level(b), c.level(a), "{b} should share the level of {a}");
    }
}

/// Dropping down a column to a point whose row arm is all-Apéry: the
/// first point of that arm sits at a level no higher than the starting
/// element; with the column arm also all-Apéry and the start minimal in
/// it, the levels agree.
pub fn check_apery_row_below_no_higher(c: &Ctx) {
    for &a in &c.apery {
        if !a.leq(c.ge) {
            continue;
        }
        let i = c.level(a);
        for b2 in 0..a.y {
            let d = Point::new(a.x, b2);
            if !c.s.contains(d) || !c.arm2_in_apery(d) {
                continue;
            }
            let Some(&b) = c.arm2(d).first() else { continue };
            let j = c.level(b);
            assert!(j <= i, "{b} (level {j}) exceeds {a} (level {i}) via {d}");
            let a_minimal = c.arm1(d).first() == Some(&a);
            if a_minimal && c.arm1_in_apery(d) {
                assert_eq!(j, i, "minimal arms of {d} should share a level");
            }
        }
    }
}

/// If a column arm is entirely Apéry and reaches the next level at β,
/// then some θ ≤ β in the arm (or the base itself) keeps its whole Δ-set
/// Apéry.
pub fn check_clean_pivot(c: &Ctx) {
    for &a in &c.apery {
        if !a.leq(c.ge) || !c.arm1_in_apery(a) {
            continue;
        }
        let i = c.level(a);
        let arm = c.arm1(a);
        for &b in arm.iter().filter(|&&b| c.level(b) == i + 1) {
            let found = delta_subset_apery(&c.s, a.into())
                || arm
                    .iter()
                    .any(|&t| t.y < b.y && c.level(t) == i && delta_subset_apery(&c.s, t.into()));
            assert!(found, "no clean pivot under {b} on the arm of {a}");
        }
    }
}

/// Every element above the bottom level has a witness from the previous
/// level below it.
pub fn check_previous_level_witness(c: &Ctx) {
    for &a in &c.apery {
        if c.level(a) >= 2 {
            previous_level_witness(&c.p, a).unwrap();
        }
    }
}

/// A column over n ∈ S₁ avoids e + S exactly when n is in the Apéry set
/// of the projection S₁ (and dually for rows).
pub fn check_projection_apery(c: &Ctx) {
    for axis in [Axis::X, Axis::Y] {
        let proj = c.s.projection(axis);
        let e1 = c.s.min_nonzero().coord(axis);
        for n in 0..=c.ge.coord(axis) + 2 {
            if !proj.contains(n) {
                continue;
            }
            let class = classify_projection_line(&c.s, axis, n);
            let all_ap = matches!(class, LineClass::FiniteAllAp | LineClass::InfiniteAllAp);
            let in_proj_apery = proj.contains(n) && (n < e1 || !proj.contains(n - e1));
            assert_eq!(
                all_ap, in_proj_apery,
                "axis {axis:?}, n = {n}: class {class:?} vs Ap(projection)"
            );
        }
    }
}

/// All per-Ctx level and Δ-set invariants at once.
pub fn check_all_level_lemmas(c: &Ctx) {
    check_reaches_next_level(c);
    check_levels_monotone(c);
    check_column_pairs_push_right_up(c);
    check_consecutive_adjacent_levels(c);
    check_successor_chains_climb(c);
    check_boundary_line_stability(c);
    check_stable_line_levels_consecutive(c);
    check_last_shifted_sees_only_apery(c);
    check_shifted_above_forces_apery_row(c);
    check_apery_row_below_no_higher(c);
    check_clean_pivot(c);
    check_previous_level_witness(c);
    check_projection_apery(c);
}

/// In a symmetric semigroup the five line classes pair up under
/// n ↦ γ + e − n, and n ∈ Ap(S₁) corresponds to an infinite, eventually
/// Apéry partner column.
pub fn check_symmetric_projection_pairing(c: &Ctx) {
    for axis in [Axis::X, Axis::Y] {
        projection_pairing_check(&c.s, axis).unwrap();
        let proj = c.s.projection(axis);
        let e1 = c.s.min_nonzero().coord(axis);
        let bound = c.ge.coord(axis);
        for n in 0..=bound {
            let in_proj_apery = proj.contains(n) && (n < e1 || !proj.contains(n - e1));
            let partner = classify_projection_line(&c.s, axis, bound - n);
            let eventually_ap = matches!(
                partner,
                LineClass::InfiniteEventuallyApMixed | LineClass::InfiniteAllAp
            );
            assert_eq!(
                in_proj_apery, eventually_ap,
                "axis {axis:?}, n = {n}: partner class {partner:?}"
            );
        }
    }
}

/// Six symmetric-case facts; on non-symmetric inputs the report only
/// records the unmet hypothesis. Returns whether the facts applied.
pub fn check_symmetry_facts(s: &GoodSemigroup) -> bool {
    let report = check_simmetria(s);
    if report.applicable {
        assert!(report.failures.is_empty(), "{:?}", report.failures);
    } else {
        assert_eq!(report.failures.len(), 1);
    }
    report.applicable
}

/// Duality A_i′ = A_{N−i+1} verifies on symmetric semigroups and
/// produces a counterexample otherwise.
pub fn check_duality_verdict(c: &Ctx) {
    let report = dual_levels(&c.s, &c.p);
    assert_eq!(report.symmetric, is_symmetric(&c.s));
    if report.symmetric {
        assert!(report.failures.is_empty(), "duality failed: {:?}", report.failures);
    } else {
        assert!(!report.failures.is_empty(), "duality should fail when not symmetric");
    }
}

/// Minimal elements of Δ^S(γ + e − α) land in the mirror level of α
/// (symmetric case only).
pub fn check_dual_minimals(c: &Ctx) {
    for &a in &c.apery {
        if a.leq(c.ge) {
            dual_minimals_check(&c.s, &c.p, a).unwrap();
        }
    }
}

/// The distinguished sequence α₁ < … < α_e exists, one element per level;
/// returns true when the odd middle element was exercised.
pub fn check_dual_sequence(c: &Ctx) -> bool {
    let seq = dual_sequence(&c.s, &c.p).unwrap();
    assert_eq!(seq.alphas.len(), c.p.n());
    for (idx, &a) in seq.alphas.iter().enumerate() {
        assert_eq!(c.level(a), idx + 1, "α_{} is in the wrong level", idx + 1);
    }
    if c.p.n() % 2 == 1 {
        assert!(seq.beta.is_some(), "odd level count needs a middle element");
        true
    } else {
        false
    }
}

pub fn check_large_conductor(s: &GoodSemigroup) {
    assert_eq!(large_conductor_check(s), None);
}
