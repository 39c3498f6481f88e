//! Minimal-codeword analysis of q-ary codes (Gray images): support
//! covering, exhaustive minimality and the Ashikhmin-Barg ratio condition.

use crate::check_guard;
use crate::error::{Error, Result};

/// Sorted coordinate positions with nonzero entry.
pub fn support(v: &[u64]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter_map(|(i, &x)| (x != 0).then_some(i))
        .collect()
}

fn support_bits(v: &[u64]) -> Vec<u64> {
    let mut bits = vec![0u64; v.len().div_ceil(64)];
    for (i, &x) in v.iter().enumerate() {
        if x != 0 {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    bits
}

/// supp(b) strictly contained in supp(a), given as bitsets.
fn strictly_covers(a: &[u64], b: &[u64]) -> bool {
    let mut equal = true;
    for (&x, &y) in a.iter().zip(b.iter()) {
        if y & !x != 0 {
            return false;
        }
        if x != y {
            equal = false;
        }
    }
    !equal
}

/// c1 covers c2: supp(c2) is a proper subset of supp(c1).
pub fn covers(c1: &[u64], c2: &[u64]) -> Result<bool> {
    if c1.len() != c2.len() {
        return Err(Error::LengthMismatch {
            left: c1.len(),
            right: c2.len(),
        });
    }
    Ok(strictly_covers(&support_bits(c1), &support_bits(c2)))
}

/// All nonzero vectors of the set that cover no other nonzero vector, by
/// pairwise support comparison. Output is sorted.
pub fn minimal_codewords(image: &[Vec<u64>]) -> Result<Vec<Vec<u64>>> {
    let nonzero: Vec<&Vec<u64>> = image
        .iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let n = nonzero.len();
    check_guard((n as u128) * (n as u128))?;
    let supports: Vec<Vec<u64>> = nonzero.iter().map(|v| support_bits(v)).collect();
    let mut out: Vec<Vec<u64>> = Vec::new();
    for i in 0..n {
        let minimal = (0..n).all(|j| j == i || !strictly_covers(&supports[i], &supports[j]));
        if minimal {
            out.push(nonzero[i].clone());
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Exact Ashikhmin-Barg test: wmin / wmax > (q-1) / q, i.e.
/// wmin * q > wmax * (q - 1).
pub fn ab_condition(wmin: u64, wmax: u64, q: u64) -> Result<bool> {
    if wmin == 0 || wmin > wmax {
        return Err(Error::InvalidWeights { min: wmin, max: wmax });
    }
    Ok((wmin as u128) * (q as u128) > (wmax as u128) * (q as u128 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covering_examples() {
        assert!(covers(&[1, 1, 0], &[1, 0, 0]).unwrap());
        // equal supports over F_3: no strict inclusion
        assert!(!covers(&[1, 1, 0], &[2, 2, 0]).unwrap());
        assert!(covers(&[1, 0, 0], &[0, 0, 0]).unwrap());
        assert!(!covers(&[0, 0, 0], &[0, 0, 0]).unwrap());
        assert!(covers(&[1, 1], &[1, 0, 0]).is_err());
    }

    #[test]
    fn minimal_in_mixed_set() {
        let image = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![0, 1, 1],
        ];
        let minimal = minimal_codewords(&image).unwrap();
        assert_eq!(minimal, vec![vec![0, 1, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn constant_weight_sets_are_all_minimal() {
        let image = vec![
            vec![0, 0, 0, 0],
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 1, 0],
        ];
        assert_eq!(minimal_codewords(&image).unwrap().len(), 3);
    }

    #[test]
    fn ab_ratio_cases() {
        // t >= 2 family ratio: 1 - q^{-t} > (q-1)/q
        assert!(ab_condition(6, 8, 2).unwrap());
        // t = 1: ratio exactly (q-1)/q, not strict
        assert!(!ab_condition(1, 2, 2).unwrap());
        assert!(ab_condition(5, 5, 2).unwrap());
        assert!(ab_condition(0, 3, 2).is_err());
        assert!(ab_condition(4, 3, 2).is_err());
    }
}
