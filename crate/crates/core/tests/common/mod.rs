//! Shared helpers for the integration suites.
// not every test binary uses every helper
#![allow(dead_code)]

pub mod props;

use good_semigroup::fixtures::{self, FIXTURE_NAMES};
use good_semigroup::oracle::{random_good_semigroup, GeneratorConfig};
use good_semigroup::{GoodSemigroup, Point};

pub fn all_fixtures() -> Vec<(&'static str, GoodSemigroup)> {
    FIXTURE_NAMES
        .iter()
        .map(|&n| (n, fixtures::by_name(n).expect("vendored fixture")))
        .collect()
}

/// `count` deterministic random semigroups (seeds 0, 1, 2, …).
pub fn randoms(count: usize) -> Vec<GoodSemigroup> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let cfg = GeneratorConfig {
            seed,
            max_conductor: Point::new(10, 10),
            ..Default::default()
        };
        if let Some(s) = random_good_semigroup(&cfg) {
            out.push(s);
        }
        seed += 1;
        assert!(seed < 10_000, "generator starved");
    }
    out
}

/// `count` deterministic random symmetric semigroups.
pub fn symmetric_randoms(count: usize) -> Vec<GoodSemigroup> {
    let mut out = Vec::with_capacity(count);
    let mut seed = 0u64;
    while out.len() < count {
        let cfg = GeneratorConfig {
            seed,
            max_conductor: Point::new(10, 10),
            require_symmetric: true,
            ..Default::default()
        };
        if let Some(s) = random_good_semigroup(&cfg) {
            out.push(s);
        }
        seed += 1;
        assert!(seed < 100_000, "symmetric generator starved");
    }
    out
}
