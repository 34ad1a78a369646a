//! Toughness evidence: exact cut scores, brute-force toughness for small
//! graphs, the canonical cut of the construction, certificates for `D` and a
//! seeded search for cuts of small ratio.

pub mod canonical;
pub mod claim1;
pub mod cut;
pub mod exact;
pub mod search;

pub use canonical::{canonical_cut, CanonicalCut};
pub use claim1::{
    d_two_tough_evidence, q_cycle, ring_pair, verify_square_relation, DEvidence, EvidenceCheck,
};
pub use cut::{cut_score, Cut, CutScore};
pub use exact::{
    toughness_by_size, toughness_exact, toughness_exact_with, Toughness, ToughnessReport,
};
pub use search::{construction_space, search_cuts, search_cuts_with, SearchOutcome, SearchSpace};

use num_rational::Rational64;
use thiserror::Error;

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "TOUGHTRI_WORKERS";

/// Worker count from [`WORKERS_ENV`], default 1.
pub fn workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&k| k >= 1)
        .unwrap_or(1)
}

/// `3/2`.
pub fn three_halves() -> Rational64 {
    Rational64::new(3, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToughnessError {
    #[error("removing W leaves {components} component(s); a cutset needs at least 2")]
    NotACutset { components: usize },
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("graph has {n} vertices, above the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("vertex labels missing or inconsistent: {0}")]
    LabelsMissing(String),
    #[error("not a matching of G_0 - w")]
    MatchingInvalid,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
}
