//! Shared fixtures for the integration suites: the small-ring inventory and
//! the golden code set.

#![allow(dead_code)]

use std::sync::Arc;

use chaincodes::codes::CodeMatrix;
use chaincodes::ring::{Ring, RingRef};

/// Every supported ring with |R| <= 81: both families over all admissible
/// (p, e, m), with fixed irreducible moduli for the extension fields.
pub fn small_rings() -> Vec<RingRef> {
    let mut rings: Vec<Ring> = Vec::new();
    for (p, max_m) in [(2u64, 6u32), (3, 4), (5, 2), (7, 2)] {
        for m in 2..=max_m {
            rings.push(Ring::zpm(p, m).unwrap());
            rings.push(Ring::fqum(p, 1, m, None).unwrap());
        }
    }
    // extension residue fields: F_4, F_8, F_9
    rings.push(Ring::fqum(2, 2, 2, Some(&[1, 1, 1])).unwrap()); // |R| = 16
    rings.push(Ring::fqum(2, 2, 3, Some(&[1, 1, 1])).unwrap()); // |R| = 64
    rings.push(Ring::fqum(2, 3, 2, Some(&[1, 0, 1, 1])).unwrap()); // |R| = 64
    rings.push(Ring::fqum(3, 2, 2, Some(&[1, 0, 1])).unwrap()); // |R| = 81
    assert!(rings.iter().all(|r| r.size() <= 81));
    rings.into_iter().map(Arc::new).collect()
}

pub fn z4() -> RingRef {
    Arc::new(Ring::zpm(2, 2).unwrap())
}

pub fn z8() -> RingRef {
    Arc::new(Ring::zpm(2, 3).unwrap())
}

pub fn z9() -> RingRef {
    Arc::new(Ring::zpm(3, 2).unwrap())
}

pub fn f2u() -> RingRef {
    Arc::new(Ring::fqum(2, 1, 2, None).unwrap())
}

pub fn matrix(ring: &RingRef, rows: usize, cols: usize, entries: &[u64]) -> CodeMatrix {
    let elems = entries
        .iter()
        .map(|&i| ring.elem(i).unwrap())
        .collect();
    CodeMatrix::new(ring.clone(), rows, cols, elems).unwrap()
}

/// The three-weight parity-check matrix over Z_4 whose unit-orbit expansion
/// is the golden triple-sum-set instance.
pub fn tss_pcheck() -> CodeMatrix {
    let r = z4();
    matrix(
        &r,
        3,
        6,
        &[
            1, 0, 1, 1, 1, 2, //
            0, 1, 0, 3, 3, 1, //
            0, 0, 2, 2, 0, 0,
        ],
    )
}

/// The golden omega set over Z_4^3 as listed digit strings.
pub fn tss_omega_vectors() -> Vec<Vec<u64>> {
    [
        "100", "300", "010", "030", "102", "302", "132", "312", "130", "310", "210", "230",
    ]
    .iter()
    .map(|s| s.chars().map(|c| c.to_digit(10).unwrap() as u64).collect())
    .collect()
}

/// Its listed one-level extension over Z_4^4.
pub fn tss_omega_extended_vectors() -> Vec<Vec<u64>> {
    [
        "1000", "3000", "0100", "0300", "1020", "3020", "1320", "3120", "1300", "3100", "2100",
        "2300", "1002", "3002", "0102", "0302", "1022", "3022", "1322", "3122", "1302", "3102",
        "2102", "2302",
    ]
    .iter()
    .map(|s| s.chars().map(|c| c.to_digit(10).unwrap() as u64).collect())
    .collect()
}
