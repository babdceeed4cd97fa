//! Numerical semigroups arising as coordinate projections of a good
//! subsemigroup of ℕ².

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A numerical semigroup S ⊆ ℕ with finite complement, stored as the
/// elements below its conductor plus the conductor itself.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    /// S ∩ [0, conductor]; always contains 0 and the conductor.
    pub small_elements: BTreeSet<u32>,
    /// Least c with c + ℕ ⊆ S.
    pub conductor: u32,
}

impl NumericalSemigroup {
    /// Build from an arbitrary set of elements known to contain every
    /// member of S below `upper`, where [upper, ∞) ⊆ S. The conductor is
    /// shrunk to its minimal value.
    pub fn from_elements(elements: &BTreeSet<u32>, upper: u32) -> Self {
        let mut conductor = upper;
        while conductor > 0 && elements.contains(&(conductor - 1)) {
            conductor -= 1;
        }
        let mut small: BTreeSet<u32> =
            elements.iter().copied().filter(|&n| n <= conductor).collect();
        small.insert(conductor);
        small.insert(0);
        NumericalSemigroup {
            small_elements: small,
            conductor,
        }
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.small_elements.contains(&n)
    }

    /// Least nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.small_elements
            .iter()
            .copied()
            .find(|&n| n > 0)
            .unwrap_or(if self.conductor == 0 { 1 } else { self.conductor })
    }

    /// Largest integer not in S; −1 when S = ℕ.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// The gaps ℕ ∖ S.
    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&n| !self.contains(n)).collect()
    }

    /// b(S) = |ℕ ∖ S|.
    pub fn gap_count(&self) -> usize {
        self.gaps().len()
    }

    /// n(S) = |S ∩ {0, …, bound}|.
    pub fn count_up_to(&self, bound: u32) -> usize {
        (0..=bound).filter(|&n| self.contains(n)).count()
    }

    /// Ap(S, m) = {n ∈ S : n − m ∉ S} for m = multiplicity; m elements,
    /// one per residue class, returned in increasing order.
    pub fn apery(&self) -> Vec<u32> {
        let m = self.multiplicity();
        let mut out = Vec::with_capacity(m as usize);
        for n in 0..=(self.conductor + m) {
            if self.contains(n) && (n < m || !self.contains(n - m)) {
                out.push(n);
            }
        }
        debug_assert_eq!(out.len(), m as usize);
        out
    }
}
