//! Generator-matrix constructions: one-homogeneous-weight codes from ideal
//! block profiles, the replication extension, the inductive Y_k matrices and
//! the Plotkin-optimal two-weight family built from them.

use crate::check_guard;
use crate::codes::{CodeMatrix, WeightDistribution};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingRef};

/// Number of coordinates per ideal level in the one-weight construction:
/// block j contributes `sizes[j]` generator rows whose column entries range
/// over the ideal generated by theta^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBlockProfile {
    sizes: Vec<u32>,
}

impl IdealBlockProfile {
    pub fn new(ring: &Ring, sizes: Vec<u32>) -> Result<Self> {
        if sizes.len() != ring.m() as usize {
            return Err(Error::InvalidParameters(format!(
                "profile needs {} block sizes, got {}",
                ring.m(),
                sizes.len()
            )));
        }
        if sizes.iter().all(|&b| b == 0) {
            return Err(Error::InvalidParameters(
                "at least one block size must be positive".into(),
            ));
        }
        Ok(IdealBlockProfile { sizes })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// q-dimension of the spanned code: sum (m-j) b_j.
    pub fn qdim(&self, ring: &Ring) -> u32 {
        self.sizes
            .iter()
            .enumerate()
            .map(|(j, &b)| (ring.m() - j as u32) * b)
            .sum()
    }
}

/// Generator matrix whose columns are all distinct nonzero vectors with the
/// block-j rows ranging over the ideal generated by theta^j. The spanned
/// code has a single nonzero homogeneous weight q^k (q^{m-1} - q^{m-2}) and
/// length q^k - 1.
pub fn one_weight_generator(ring: &RingRef, profile: &IdealBlockProfile) -> Result<CodeMatrix> {
    let k = profile.qdim(ring);
    let width = (ring.q() as u128)
        .checked_pow(k)
        .ok_or(Error::EnumerationTooLarge {
            needed: u128::MAX,
            guard: crate::enumeration_guard(),
        })?;
    check_guard(width)?;
    // per-row choice lists, top block first
    let mut row_choices: Vec<Vec<Elem>> = Vec::new();
    for (j, &b) in profile.sizes().iter().enumerate() {
        let ideal = ring.ideal_elements(j as u32)?;
        for _ in 0..b {
            row_choices.push(ideal.clone());
        }
    }
    let rows = row_choices.len();
    let n = (width - 1) as usize;
    let mut entries = vec![ring.zero(); rows * n];
    // lexicographic column order with the first row most significant,
    // skipping the all-zero column
    for idx in 1..width {
        let col = idx as usize - 1;
        let mut t = idx;
        for r in (0..rows).rev() {
            let radix = row_choices[r].len() as u128;
            entries[r * n + col] = row_choices[r][(t % radix) as usize];
            t /= radix;
        }
    }
    CodeMatrix::new(ring.clone(), rows, n, entries)
}

/// The k x q^{(m-1)k} matrix over the maximal ideal whose columns are all
/// distinct vectors, in lexicographic order with the zero column first.
pub fn b_matrix(ring: &RingRef, k: u32) -> Result<CodeMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    let ideal = ring.ideal_elements(1)?;
    let radix = ideal.len() as u128;
    let width = radix
        .checked_pow(k)
        .ok_or(Error::EnumerationTooLarge {
            needed: u128::MAX,
            guard: crate::enumeration_guard(),
        })?;
    check_guard(width)?;
    let n = width as usize;
    let rows = k as usize;
    let mut entries = vec![ring.zero(); rows * n];
    for idx in 0..width {
        let mut t = idx;
        for r in (0..rows).rev() {
            entries[r * n + idx as usize] = ideal[(t % radix) as usize];
            t /= radix;
        }
    }
    CodeMatrix::new(ring.clone(), rows, n, entries)
}

/// Replication extension: [G G ... G] repeated once per element of the
/// ideal generated by theta^{m0}, with an appended row that is constant
/// a_b on block b, the a_b running over that ideal in canonical order.
pub fn extend_generator(gen: &CodeMatrix, m0: u32) -> Result<CodeMatrix> {
    let ring = gen.ring().clone();
    if m0 >= ring.m() {
        return Err(Error::IndexOutOfRange {
            index: m0 as u64,
            limit: ring.m() as u64,
        });
    }
    let ideal = ring.ideal_elements(m0)?;
    let blocks = ideal.len();
    let n = gen.cols();
    let new_cols = blocks
        .checked_mul(n)
        .ok_or(Error::EnumerationTooLarge {
            needed: u128::MAX,
            guard: crate::enumeration_guard(),
        })?;
    check_guard(new_cols as u128)?;
    let new_rows = gen.rows() + 1;
    let mut entries = vec![ring.zero(); new_rows * new_cols];
    for b in 0..blocks {
        for c in 0..n {
            for r in 0..gen.rows() {
                entries[r * new_cols + b * n + c] = gen.entry(r, c);
            }
            entries[gen.rows() * new_cols + b * n + c] = ideal[b];
        }
    }
    CodeMatrix::new(ring, new_rows, new_cols, entries)
}

/// The inductive matrix Y_k: Y_1 = [1] and Y_k is Y_{k-1} replicated over
/// all ring scalars in canonical order (an m0 = 0 extension) followed by
/// B_{k-1} with an appended all-one row. Spans a free Plotkin-optimal
/// two-homogeneous-weight code of length (q^{mk} - q^{(m-1)k})/(q^m - q^{m-1}).
pub fn y_matrix(ring: &RingRef, k: u32) -> Result<CodeMatrix> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    let mut y = CodeMatrix::new(ring.clone(), 1, 1, vec![ring.one()])?;
    for step in 2..=k {
        let left = extend_generator(&y, 0)?;
        let b = b_matrix(ring, step - 1)?;
        let rows = left.rows();
        let new_cols = left.cols() + b.cols();
        check_guard(new_cols as u128)?;
        let mut entries = vec![ring.zero(); rows * new_cols];
        for r in 0..rows {
            for c in 0..left.cols() {
                entries[r * new_cols + c] = left.entry(r, c);
            }
        }
        for c in 0..b.cols() {
            for r in 0..b.rows() {
                entries[r * new_cols + left.cols() + c] = b.entry(r, c);
            }
            entries[(rows - 1) * new_cols + left.cols() + c] = ring.one();
        }
        y = CodeMatrix::new(ring.clone(), rows, new_cols, entries)?;
    }
    Ok(y)
}

/// Plotkin-optimal two-weight code of type (k_0, ..., k_{m-1}) and
/// parameter t: Y_t extended (k_0 - t) times at level 0, then k_i times at
/// level i for each i >= 1.
pub fn optimal_two_weight_code(ring: &RingRef, profile: &[u32], t: u32) -> Result<CodeMatrix> {
    if profile.len() != ring.m() as usize {
        return Err(Error::InvalidParameters(format!(
            "type profile needs {} entries, got {}",
            ring.m(),
            profile.len()
        )));
    }
    let k0 = profile[0];
    if t < 1 || t > k0 {
        return Err(Error::InvalidT { t, k0 });
    }
    let mut gen = y_matrix(ring, t)?;
    for _ in 0..(k0 - t) {
        gen = extend_generator(&gen, 0)?;
    }
    for (i, &ki) in profile.iter().enumerate().skip(1) {
        for _ in 0..ki {
            gen = extend_generator(&gen, i as u32)?;
        }
    }
    Ok(gen)
}

/// Length of the code spanned by Y_k: (q^{mk} - q^{(m-1)k})/(q^m - q^{m-1}).
pub fn y_length(ring: &Ring, k: u32) -> u128 {
    let q = ring.q() as u128;
    let m = ring.m();
    (q.pow(m * k) - q.pow((m - 1) * k)) / (q.pow(m) - q.pow(m - 1))
}

/// Predicted distribution of the Y_k span: {0: 1,
/// q^{mk-1} - q^{(m-1)k-1}: q^{mk} - q^k, q^{mk-1}: q^k - 1}.
pub fn y_distribution(ring: &Ring, k: u32) -> WeightDistribution {
    let q = ring.q();
    let m = ring.m();
    let w1 = q.pow(m * k - 1) - q.pow((m - 1) * k - 1);
    let w2 = q.pow(m * k - 1);
    WeightDistribution::from_pairs(&[
        (0, 1),
        (w1, q.pow(m * k) - q.pow(k)),
        (w2, q.pow(k) - 1),
    ])
}

/// Predicted length and distribution for the optimal two-weight family with
/// the given type profile and parameter t.
pub fn optimal_two_weight_prediction(
    ring: &Ring,
    profile: &[u32],
    t: u32,
) -> Result<(u128, WeightDistribution)> {
    if profile.len() != ring.m() as usize {
        return Err(Error::InvalidParameters(format!(
            "type profile needs {} entries, got {}",
            ring.m(),
            profile.len()
        )));
    }
    let k0 = profile[0];
    if t < 1 || t > k0 {
        return Err(Error::InvalidT { t, k0 });
    }
    let q = ring.q();
    let m = ring.m();
    let k: u32 = profile
        .iter()
        .enumerate()
        .map(|(i, &ki)| (m - i as u32) * ki)
        .sum();
    let n = q.pow(k - t) as u128 * (q.pow(t) - 1) as u128
        / (q.pow(m) - q.pow(m - 1)) as u128;
    Ok((n, crate::codes::two_weight_table(q, k, t)))
}

/// The weight distribution predicted for an m0-level extension of a code
/// with the given length, cardinality and distribution: old weights scale by
/// q^{m-m0}; the coset weight q^{m-m0} (q^{m-1} - q^{m-2}) n gains
/// (q^{m-m0} - 1)|C| words, as a new weight class if it was not present.
pub fn extension_prediction(
    ring: &Ring,
    n: usize,
    card: u64,
    dist: &WeightDistribution,
    m0: u32,
) -> WeightDistribution {
    let factor = ring.q().pow(ring.m() - m0);
    let new_weight = factor * ring.gamma() * n as u64;
    let extra = (factor - 1) * card;
    let mut out = WeightDistribution::new();
    for (w, c) in dist.pairs() {
        out.add_count(factor * w, c);
    }
    out.add_count(new_weight, extra);
    out
}
