//! Good ideals, consecutive points, saturated chains and the distance
//! functions d_E(α, β) and d(E ∖ F).

use crate::point::{diff, Box2, Point};
use crate::semigroup::GoodSemigroup;
use crate::truncated::TruncatedSet;
use std::collections::BTreeMap;

/// A good ideal E of a good semigroup S. The two workhorse instances are
/// S itself and e + S (any translate t + S is a good ideal); arbitrary
/// ideals can be supplied as explicit truncated data after verification.
pub struct GoodIdeal<'a> {
    parent: &'a GoodSemigroup,
    data: IdealData,
}

enum IdealData {
    /// t + S; exact membership everywhere.
    Shifted(Point),
    /// Explicit truncated data; membership delegated to the set.
    Explicit(TruncatedSet),
}

impl<'a> GoodIdeal<'a> {
    /// E = S.
    pub fn semigroup(parent: &'a GoodSemigroup) -> Self {
        GoodIdeal {
            parent,
            data: IdealData::Shifted(Point::ZERO),
        }
    }

    /// E = t + S.
    pub fn shifted(parent: &'a GoodSemigroup, t: Point) -> Self {
        GoodIdeal {
            parent,
            data: IdealData::Shifted(t),
        }
    }

    /// E = e + S.
    pub fn shifted_by_e(parent: &'a GoodSemigroup) -> Self {
        Self::shifted(parent, parent.min_nonzero())
    }

    /// Explicit ideal data, verified on its window first: E + S ⊆ E, (G1)
    /// and (G2). The set's `quadrant_from` is taken as the ideal conductor.
    pub fn explicit(parent: &'a GoodSemigroup, set: TruncatedSet) -> Result<Self, String> {
        let c_e = set
            .quadrant_from
            .ok_or("explicit ideal data must declare its conductor quadrant")?;
        let failures = check_good_ideal(parent, &|p| set.contains(p), set.window, c_e);
        if let Some(f) = failures.first() {
            return Err(f.clone());
        }
        Ok(GoodIdeal {
            parent,
            data: IdealData::Explicit(set),
        })
    }

    pub fn contains(&self, p: Point) -> bool {
        match &self.data {
            IdealData::Shifted(t) => self.parent.contains_z(diff(p, *t)),
            IdealData::Explicit(set) => set.contains(p),
        }
    }

    /// m_E, the minimum of E (exists by (G1)).
    pub fn min_element(&self) -> Point {
        match &self.data {
            IdealData::Shifted(t) => *t,
            IdealData::Explicit(set) => {
                let m = set
                    .minimal_elements()
                    .into_iter()
                    .reduce(Point::meet)
                    .expect("good ideal is nonempty");
                debug_assert!(set.contains(m));
                m
            }
        }
    }

    /// c_E, the least point with c_E + ℕ² ⊆ E.
    pub fn ideal_conductor(&self) -> Point {
        match &self.data {
            IdealData::Shifted(t) => *t + self.parent.conductor(),
            IdealData::Explicit(set) => set.quadrant_from.expect("verified at construction"),
        }
    }
}

/// Windowed good-ideal verification of an arbitrary membership predicate:
/// checks E + S ⊆ E, (G1) and (G2) over `window`, with `c_e + ℕ² ⊆ E`
/// assumed beyond it. Returns every failure found, with witnesses.
pub fn check_good_ideal(
    s: &GoodSemigroup,
    member: &dyn Fn(Point) -> bool,
    window: Box2,
    c_e: Point,
) -> Vec<String> {
    let mut failures = Vec::new();
    let pts: Vec<Point> = window.iter().filter(|&p| member(p)).collect();
    if !member(c_e) && window.contains(c_e) {
        failures.push(format!("ideal conductor {c_e} is not a member"));
    }
    for &a in &pts {
        for &b in s.small_elements() {
            let q = a + b;
            // member is total (clamp/ray semantics), in or out of window
            if !member(q) && !c_e.leq(q) {
                failures.push(format!("E + S fails: {a} + {b} = {q} missing"));
            }
        }
    }
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i..] {
            if !member(a.meet(b)) {
                failures.push(format!("(G1) fails in ideal: {a} ∧ {b} missing"));
            }
            if a == b {
                continue;
            }
            if a.x == b.x && a.y != b.y {
                let min_y = a.y.min(b.y);
                if !(a.x + 1..=window.hi.x.max(a.x + 1))
                    .any(|t| member(Point::new(t, min_y)) || c_e.leq(Point::new(t, min_y)))
                {
                    failures.push(format!("(G2) fails in ideal for {a}, {b}"));
                }
            }
            if a.y == b.y && a.x != b.x {
                let min_x = a.x.min(b.x);
                if !(a.y + 1..=window.hi.y.max(a.y + 1))
                    .any(|t| member(Point::new(min_x, t)) || c_e.leq(Point::new(min_x, t)))
                {
                    failures.push(format!("(G2) fails in ideal for {a}, {b}"));
                }
            }
        }
    }
    failures
}

/// Whether β is a consecutive point of α in A: α < β with no member of A
/// strictly between them.
pub fn consecutive_in(a: &TruncatedSet, alpha: Point, beta: Point) -> bool {
    alpha.lt(beta)
        && !Box2::new(alpha, beta)
            .iter()
            .any(|m| m != alpha && m != beta && a.contains(m))
}

/// d_E(α, β): the common length (point count) of all saturated chains from
/// α to β in E. Computed by longest-chain DP over E ∩ [α, β]; every cover
/// edge is checked to advance the chain length by exactly one, so a
/// non-graded interval (impossible in a good ideal) is reported rather
/// than silently averaged.
pub fn saturated_chain_length(
    e: &GoodIdeal<'_>,
    alpha: Point,
    beta: Point,
) -> Result<usize, String> {
    if !e.contains(alpha) || !e.contains(beta) {
        return Err(format!("{alpha} or {beta} is not in the ideal"));
    }
    if !alpha.leq(beta) {
        return Err(format!("{alpha} ≤ {beta} required"));
    }
    let interval: Vec<Point> = Box2::new(alpha, beta)
        .iter()
        .filter(|&p| e.contains(p))
        .collect(); // row-major: every q < p precedes p
    let mut longest: BTreeMap<Point, usize> = BTreeMap::new();
    for &p in &interval {
        let l = interval
            .iter()
            .copied()
            .filter(|&q| q.lt(p) && alpha.leq(q))
            .filter_map(|q| longest.get(&q).copied())
            .max()
            .map(|m| m + 1);
        if p == alpha {
            longest.insert(p, 1);
        } else if let Some(l) = l {
            longest.insert(p, l);
        }
    }
    // gradedness: along every cover edge of the interval poset the longest
    // chain grows by exactly 1; this forces all saturated chains to agree
    for (&p, &lp) in &longest {
        for q in cover_successors(&interval, p) {
            if let Some(&lq) = longest.get(&q) {
                if lq != lp + 1 {
                    return Err(format!(
                        "chain length not uniform: cover edge {p} → {q} jumps {lp} → {lq}"
                    ));
                }
            }
        }
    }
    longest
        .get(&beta)
        .copied()
        .ok_or_else(|| format!("no chain from {alpha} to {beta}"))
}

/// Minimal elements of {m ∈ interval : p < m}: the covers of p.
fn cover_successors(interval: &[Point], p: Point) -> Vec<Point> {
    let mut ups: Vec<Point> = interval.iter().copied().filter(|&m| p.lt(m)).collect();
    ups.sort_by_key(|q| (q.x, q.y));
    // staircase sweep: ascending x, a point is minimal iff it undercuts
    // every column to its left
    let mut mins = Vec::new();
    let mut best_y = u32::MAX;
    let mut seen_x = None;
    for q in ups {
        if seen_x == Some(q.x) {
            continue;
        }
        seen_x = Some(q.x);
        if q.y < best_y {
            mins.push(q);
            best_y = q.y;
        }
    }
    mins
}

/// d(E ∖ F) = d_E(m_E, α) − d_F(m_F, α) for any α ≥ c_F; evaluated at
/// α = c_F ∨ (m_E + m_F) and cross-checked at α + (1, 1).
pub fn distance(e: &GoodIdeal<'_>, f: &GoodIdeal<'_>) -> Result<usize, String> {
    // containment F ⊆ E, spot-checked on the parent window
    let w = e.parent.default_window();
    for p in w.iter() {
        if f.contains(p) && !e.contains(p) {
            return Err(format!("containment fails: {p} ∈ F but ∉ E"));
        }
    }
    let alpha = f.ideal_conductor().join(e.min_element() + f.min_element());
    let at = |a: Point| -> Result<usize, String> {
        let de = saturated_chain_length(e, e.min_element(), a)?;
        let df = saturated_chain_length(f, f.min_element(), a)?;
        Ok(de - df)
    };
    let d1 = at(alpha)?;
    let d2 = at(alpha + Point::ONE)?;
    if d1 != d2 {
        return Err(format!(
            "d(E∖F) not independent of the evaluation point: {d1} at {alpha}, {d2} at {}",
            alpha + Point::ONE
        ));
    }
    Ok(d1)
}
