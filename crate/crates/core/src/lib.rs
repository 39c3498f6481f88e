//! Linear codes over finite chain rings with few homogeneous weights.
//!
//! The crate provides exact chain-ring arithmetic for Z_{p^m} and
//! F_q[u]/(u^m), generator-matrix spans with type and homogeneous weight
//! distribution, the Plotkin-type distance bound and optimality checks, the
//! homogeneous-weight Gray isometry into F_q, minimal-codeword analysis of
//! Gray images, and the derived combinatorial graphs: coset and syndrome
//! strongly regular graphs, strongly walk-regular verification via walk
//! counts, and triple-sum-set machinery.

pub mod analysis;
pub mod codes;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graphs;
pub mod gray;
pub mod io;
pub mod minimality;
pub mod ring;

pub use codes::{CodeMatrix, LinearCode, TwoWeightCharacterization, TypeProfile, WeightDistribution};
pub use error::{Error, Result};
pub use graphs::{Graph, OmegaSet, SrgParams, SwrgParams};
pub use gray::{GrayBasis, GrayImage, Su1Params};
pub use ring::{Elem, Family, Ring, RingRef};

use std::sync::OnceLock;

/// Default cap on brute-force enumerations (message spaces, ambient duals,
/// triple loops). Override with the CHAINCODES_MAX_ENUM environment variable.
pub const DEFAULT_ENUM_GUARD: u64 = 1 << 24;

/// Hard cap on dense graph sizes (adjacency and walk-count matrices).
pub const MAX_GRAPH_VERTICES: usize = 4096;

/// The active enumeration guard, read once per process.
pub fn enumeration_guard() -> u64 {
    static GUARD: OnceLock<u64> = OnceLock::new();
    *GUARD.get_or_init(|| {
        std::env::var("CHAINCODES_MAX_ENUM")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_ENUM_GUARD)
    })
}

pub(crate) fn check_guard(needed: u128) -> Result<()> {
    let guard = enumeration_guard();
    if needed > guard as u128 {
        Err(Error::EnumerationTooLarge { needed, guard })
    } else {
        Ok(())
    }
}
