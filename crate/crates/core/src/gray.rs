//! The homogeneous-weight Gray isometry from R^n into F_q^{q^{m-1} n},
//! built from first-order Reed-Muller basis vectors, plus image analysis
//! and the SU1 parameter comparison.

use std::collections::HashSet;

use crate::check_guard;
use crate::codes::{characterize_two_weight, LinearCode, WeightDistribution};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};

/// The basis vectors c_0, ..., c_{m-1} over F_q, each of length q^{m-1}.
/// c_i is the (m-1)-fold tensor product whose j-th factor is the listing of
/// F_q when j = i and the all-one vector otherwise; c_{m-1} is all-one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayBasis {
    vectors: Vec<Vec<u64>>,
}

impl GrayBasis {
    pub fn vectors(&self) -> &[Vec<u64>] {
        &self.vectors
    }
}

/// Tensor product a (x) b = (a_1 b, ..., a_s b), blocks of b scaled by the
/// entries of a.
fn tensor(field: &crate::field::Field, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(field.mul(x, y));
        }
    }
    out
}

pub fn gray_basis(ring: &Ring) -> GrayBasis {
    let field = ring.field();
    let q = ring.q();
    let m = ring.m();
    let u: Vec<u64> = (0..q).collect();
    let v: Vec<u64> = vec![1; q as usize];
    let mut vectors = Vec::with_capacity(m as usize);
    for i in 0..m {
        // factors j = 0 .. m-2, expanded left to right
        let mut acc: Vec<u64> = vec![1];
        for j in 0..m - 1 {
            let factor = if j == i { &u } else { &v };
            acc = tensor(field, &acc, factor);
        }
        vectors.push(acc);
    }
    GrayBasis { vectors }
}

/// Image of a single ring element: the digit-weighted sum of the basis
/// vectors; Hamming weight equals the homogeneous weight.
pub fn gray_element(ring: &Ring, basis: &GrayBasis, x: Elem) -> Vec<u64> {
    let field = ring.field();
    let len = basis.vectors[0].len();
    let mut out = vec![0u64; len];
    for (i, &digit) in ring.digits(x).iter().enumerate() {
        if digit == 0 {
            continue;
        }
        for (o, &b) in out.iter_mut().zip(basis.vectors[i].iter()) {
            *o = field.add(*o, field.mul(digit, b));
        }
    }
    out
}

/// Componentwise image of a vector over R, concatenated.
pub fn gray_vector(ring: &Ring, basis: &GrayBasis, word: &[Elem]) -> Vec<u64> {
    let blocklen = basis.vectors[0].len();
    let mut out = Vec::with_capacity(blocklen * word.len());
    for &x in word {
        out.extend(gray_element(ring, basis, x));
    }
    out
}

pub fn hamming_weight(v: &[u64]) -> u64 {
    v.iter().filter(|&&x| x != 0).count() as u64
}

pub fn hamming_distance(a: &[u64], b: &[u64]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter().zip(b.iter()).filter(|(x, y)| x != y).count() as u64)
}

/// The Gray image of a code: image vectors in canonical order, their
/// Hamming weight distribution, and whether the image set is linear over
/// the residue field.
#[derive(Debug, Clone)]
pub struct GrayImage {
    pub vectors: Vec<Vec<u64>>,
    pub hamming_distribution: WeightDistribution,
    pub linear: bool,
}

pub fn gray_image(code: &LinearCode) -> Result<GrayImage> {
    let ring = code.ring();
    let basis = gray_basis(ring);
    let blocklen = basis.vectors[0].len();
    check_guard(code.card() as u128 * blocklen as u128 * code.length() as u128)?;
    let mut vectors: Vec<Vec<u64>> = code
        .words()
        .iter()
        .map(|w| gray_vector(ring, &basis, w))
        .collect();
    vectors.sort_unstable();
    let set: HashSet<&Vec<u64>> = vectors.iter().collect();
    if set.len() != code.words().len() {
        return Err(Error::InternalInconsistency(
            "Gray map failed to be injective on the code".into(),
        ));
    }
    let mut hamming_distribution = WeightDistribution::new();
    for v in &vectors {
        hamming_distribution.record(hamming_weight(v));
    }
    let linear = image_is_linear(ring, &vectors, &set);
    Ok(GrayImage {
        vectors,
        hamming_distribution,
        linear,
    })
}

/// Set closure under field addition and scalar multiplication, with early
/// exit on the first violation.
fn image_is_linear(ring: &Ring, vectors: &[Vec<u64>], set: &HashSet<&Vec<u64>>) -> bool {
    let field = ring.field();
    for (i, a) in vectors.iter().enumerate() {
        for s in 2..ring.q() {
            let scaled: Vec<u64> = a.iter().map(|&x| field.mul(s, x)).collect();
            if !set.contains(&scaled) {
                return false;
            }
        }
        for b in vectors.iter().skip(i) {
            let sum: Vec<u64> = a.iter().zip(b.iter()).map(|(&x, &y)| field.add(x, y)).collect();
            if !set.contains(&sum) {
                return false;
            }
        }
    }
    true
}

/// Parameters of the SU1 family of two-weight codes over F_q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su1Params {
    pub n: u64,
    pub k: u32,
    pub w1: u64,
    pub w2: u64,
    pub a1: u64,
    pub a2: u64,
}

pub fn su1_parameters(q: u64, ell: u32, s: u32) -> Result<Su1Params> {
    if ell <= 1 || s < 1 || s > ell - 1 {
        return Err(Error::InvalidParameters(format!(
            "SU1 needs ell > 1 and 1 <= s <= ell - 1, got ell = {ell}, s = {s}"
        )));
    }
    Ok(Su1Params {
        n: (q.pow(ell) - q.pow(s)) / (q - 1),
        k: ell,
        w1: q.pow(ell - 1) - q.pow(s - 1),
        w2: q.pow(ell - 1),
        a1: q.pow(ell) - q.pow(ell - s),
        a2: q.pow(ell - s) - 1,
    })
}

/// Whether the Gray image of a two-weight code from the optimal family has
/// exactly the length and weight distribution of the SU1 code with
/// ell = k and s = k - t.
pub fn compare_su1(code: &LinearCode) -> Result<bool> {
    let t47 = characterize_two_weight(code)?;
    let ring = code.ring();
    let k = code.qdim()?;
    let su1 = su1_parameters(ring.q(), k, k - t47.t)?;
    let image = gray_image(code)?;
    let expected =
        WeightDistribution::from_pairs(&[(0, 1), (su1.w1, su1.a1), (su1.w2, su1.a2)]);
    let image_len = image.vectors[0].len() as u64;
    Ok(image_len == su1.n
        && image.vectors.len() as u64 == ring.q().pow(k)
        && image.hamming_distribution == expected)
}
