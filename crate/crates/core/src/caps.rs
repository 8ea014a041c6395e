//! Resource caps that keep every computation at desk scale.
//!
//! All caps are plumbed through explicitly so a caller can tighten or relax
//! them per call site; the defaults below are the ones the harness uses.

use serde::{Deserialize, Serialize};

/// Maximum group order accepted at construction time.
pub const ORDER_CAP: u64 = 10_000_000;

/// Maximum size of a single conjugacy class orbit.
pub const CLASS_CAP: u64 = 2_000_000;

/// Maximum group order for a full normal-subgroup lattice scan.
pub const NORMAL_SCAN_CAP: u64 = 100_000;

/// Maximum coset-action degree (index of the kernel) for quotients.
pub const QUOTIENT_DEGREE_CAP: u64 = 10_000;

/// Maximum kernel size for exhaustive coset searches in lifting checks.
pub const COSET_SEARCH_CAP: u64 = 5_000;

/// Maximum group order for the exhaustive lemma suite.
pub const LEMMA_SUITE_CAP: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub order: u64,
    pub class: u64,
    pub normal_scan: u64,
    pub quotient_degree: u64,
    pub coset_search: u64,
    pub lemma_suite: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: ORDER_CAP,
            class: CLASS_CAP,
            normal_scan: NORMAL_SCAN_CAP,
            quotient_degree: QUOTIENT_DEGREE_CAP,
            coset_search: COSET_SEARCH_CAP,
            lemma_suite: LEMMA_SUITE_CAP,
        }
    }
}
