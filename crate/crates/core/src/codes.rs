//! Linear codes over a chain ring as generator-matrix spans: enumeration,
//! type, homogeneous weight distribution, regularity and projectivity, the
//! Plotkin-type distance bound, brute-force duality and the two-weight
//! parameter checkers.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::check_guard;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingRef};

/// A matrix over a chain ring, stored row-major. Used both as a generator
/// and as a parity-check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Elem>,
}

impl CodeMatrix {
    pub fn new(ring: RingRef, rows: usize, cols: usize, entries: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidParameters(
                "matrix dimensions must be positive".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameters(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for &x in &entries {
            if x.index() >= ring.size() {
                return Err(Error::IndexOutOfRange {
                    index: x.index(),
                    limit: ring.size(),
                });
            }
        }
        Ok(CodeMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: RingRef, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidParameters("ragged rows".into()));
        }
        CodeMatrix::new(ring, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> Elem {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.entry(r, c)).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Elem>> + '_ {
        (0..self.cols).map(|c| self.column(c))
    }
}

/// The exact map weight -> multiplicity of a code, for homogeneous or
/// Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<u64, u64>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        WeightDistribution {
            counts: pairs.iter().copied().collect(),
        }
    }

    pub fn record(&mut self, weight: u64) {
        *self.counts.entry(weight).or_insert(0) += 1;
    }

    pub fn add_count(&mut self, weight: u64, count: u64) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
        }
    }

    pub fn count(&self, weight: u64) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.counts.iter().map(|(&w, &c)| (w, c)).collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn nonzero_weights(&self) -> Vec<u64> {
        self.counts.keys().copied().filter(|&w| w != 0).collect()
    }

    pub fn min_nonzero(&self) -> Option<u64> {
        self.nonzero_weights().first().copied()
    }

    pub fn max_nonzero(&self) -> Option<u64> {
        self.nonzero_weights().last().copied()
    }
}

/// Type profile (k_0, ..., k_{m-1}); the code has |C| = q^k with
/// k = sum (m-i) k_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeProfile {
    ks: Vec<u32>,
}

impl TypeProfile {
    pub fn new(ks: Vec<u32>) -> Self {
        TypeProfile { ks }
    }

    pub fn ks(&self) -> &[u32] {
        &self.ks
    }

    pub fn k0(&self) -> u32 {
        self.ks[0]
    }

    /// q-dimension k = sum (m-i) k_i.
    pub fn qdim(&self) -> u32 {
        let m = self.ks.len() as u32;
        self.ks
            .iter()
            .enumerate()
            .map(|(i, &k)| (m - i as u32) * k)
            .sum()
    }
}

/// An enumerated linear code: the deduplicated, canonically sorted set of
/// codewords spanned by a generator matrix (or supplied directly, e.g. for
/// brute-force duals, in which case no generator matrix is attached).
#[derive(Debug, Clone)]
pub struct LinearCode {
    ring: RingRef,
    length: usize,
    words: Vec<Vec<Elem>>,
    gen: Option<CodeMatrix>,
}

/// Decode `index` into a message vector over the ring, least significant
/// coordinate first.
fn message_vector(ring: &Ring, index: u64, len: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len);
    let mut t = index;
    for _ in 0..len {
        out.push(ring.elem(t % ring.size()).unwrap());
        t /= ring.size();
    }
    out
}

impl LinearCode {
    /// Enumerate {xG : x in R^l}, deduplicated and sorted.
    pub fn span(gen: CodeMatrix) -> Result<LinearCode> {
        let ring = gen.ring().clone();
        let messages = (ring.size() as u128).checked_pow(gen.rows() as u32).ok_or(
            Error::EnumerationTooLarge {
                needed: u128::MAX,
                guard: crate::enumeration_guard(),
            },
        )?;
        check_guard(messages)?;
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        for idx in 0..messages as u64 {
            let msg = message_vector(&ring, idx, gen.rows());
            let mut word = vec![ring.zero(); gen.cols()];
            for (r, &coef) in msg.iter().enumerate() {
                if coef.index() == 0 {
                    continue;
                }
                for (c, w) in word.iter_mut().enumerate() {
                    *w = ring.add(*w, ring.mul(coef, gen.entry(r, c)));
                }
            }
            seen.insert(word);
        }
        let mut words: Vec<Vec<Elem>> = seen.into_iter().collect();
        words.sort_unstable();
        let length = gen.cols();
        Ok(LinearCode {
            ring,
            length,
            words,
            gen: Some(gen),
        })
    }

    /// Wrap an explicit codeword set (no generator matrix). Validates that
    /// the set contains zero and spot-checks closure under addition and
    /// scalar multiplication.
    pub fn from_words(ring: RingRef, words: Vec<Vec<Elem>>) -> Result<LinearCode> {
        if words.is_empty() {
            return Err(Error::InvalidParameters("empty codeword set".into()));
        }
        let length = words[0].len();
        if words.iter().any(|w| w.len() != length) {
            return Err(Error::InvalidParameters("ragged codeword set".into()));
        }
        let mut words = words;
        words.sort_unstable();
        words.dedup();
        if words[0].iter().any(|&x| x.index() != 0) {
            return Err(Error::InvalidParameters(
                "codeword set does not contain the zero word".into(),
            ));
        }
        let code = LinearCode {
            ring,
            length,
            words,
            gen: None,
        };
        code.spot_check_closure()?;
        Ok(code)
    }

    fn spot_check_closure(&self) -> Result<()> {
        let n = self.words.len();
        let stride = (n / 16).max(1);
        let lookup: HashSet<&Vec<Elem>> = self.words.iter().collect();
        for i in (0..n).step_by(stride) {
            for j in (0..n).step_by(stride) {
                let sum = self.ring.vec_add(&self.words[i], &self.words[j]);
                if !lookup.contains(&sum) {
                    return Err(Error::InvalidParameters(
                        "codeword set is not closed under addition".into(),
                    ));
                }
            }
            for s in self.ring.elements() {
                let scaled = self.ring.vec_scale(s, &self.words[i]);
                if !lookup.contains(&scaled) {
                    return Err(Error::InvalidParameters(
                        "codeword set is not closed under scalar multiplication".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Vec<Elem>] {
        &self.words
    }

    pub fn generator(&self) -> Option<&CodeMatrix> {
        self.gen.as_ref()
    }

    pub fn card(&self) -> u64 {
        self.words.len() as u64
    }

    /// k with |C| = q^k.
    pub fn qdim(&self) -> Result<u32> {
        exact_log(self.card(), self.ring.q())
            .ok_or(Error::NotPowerOfQ(self.card(), self.ring.q()))
    }

    /// Type (k_0, ..., k_{m-1}) computed from the cardinalities of the
    /// scaled codes theta^j C.
    pub fn code_type(&self) -> Result<TypeProfile> {
        let ring = &self.ring;
        let m = ring.m();
        let q = ring.q();
        // d_j = log_q |theta^j C| for j = 0..=m
        let mut d = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let theta_j = ring.theta_pow(j)?;
            let mut set: HashSet<Vec<Elem>> = HashSet::new();
            for w in &self.words {
                set.insert(ring.vec_scale(theta_j, w));
            }
            let card = set.len() as u64;
            let dj = exact_log(card, q).ok_or(Error::NotPowerOfQ(card, q))?;
            d.push(dj);
        }
        // s_j = d_j - d_{j+1} = k_0 + ... + k_{m-1-j}; boundary s_m = 0
        let mut s: Vec<i64> = (0..m as usize)
            .map(|j| d[j] as i64 - d[j + 1] as i64)
            .collect();
        s.push(0);
        let mut ks = Vec::with_capacity(m as usize);
        for i in 0..m as usize {
            let k_i = s[m as usize - 1 - i] - s[m as usize - i];
            if k_i < 0 {
                return Err(Error::InternalInconsistency(format!(
                    "negative type component k_{i} = {k_i}"
                )));
            }
            ks.push(k_i as u32);
        }
        Ok(TypeProfile::new(ks))
    }

    pub fn hom_weight_distribution(&self) -> WeightDistribution {
        let mut dist = WeightDistribution::new();
        for w in &self.words {
            dist.record(self.ring.hom_weight_vec(w));
        }
        dist
    }

    pub fn min_hom_distance(&self) -> Result<u64> {
        self.hom_weight_distribution()
            .min_nonzero()
            .ok_or(Error::EmptyCode)
    }

    /// The full orthogonal set {y : x.y = 0 for all x in C}, found by
    /// checking every vector of R^n against every codeword.
    pub fn dual_bruteforce(&self) -> Result<LinearCode> {
        let ring = &self.ring;
        let total = (ring.size() as u128)
            .checked_pow(self.length as u32)
            .ok_or(Error::EnumerationTooLarge {
                needed: u128::MAX,
                guard: crate::enumeration_guard(),
            })?;
        check_guard(total)?;
        let mut words = Vec::new();
        'outer: for idx in 0..total as u64 {
            let cand = message_vector(ring, idx, self.length);
            for w in &self.words {
                if ring.inner_product(w, &cand).index() != 0 {
                    continue 'outer;
                }
            }
            words.push(cand);
        }
        words.sort_unstable();
        Ok(LinearCode {
            ring: ring.clone(),
            length: self.length,
            words,
            gen: None,
        })
    }
}

fn exact_log(value: u64, base: u64) -> Option<u32> {
    if value == 0 {
        return None;
    }
    let mut v = value;
    let mut k = 0;
    while v > 1 {
        if v % base != 0 {
            return None;
        }
        v /= base;
        k += 1;
    }
    Some(k)
}

/// Column-unit shortcut for regularity: every column of the generator
/// matrix contains at least one unit.
pub fn is_regular(gen: &CodeMatrix) -> bool {
    (0..gen.cols()).all(|c| (0..gen.rows()).any(|r| gen.ring().is_unit(gen.entry(r, c))))
}

/// Literal regularity from the definition: {x . g_i | x in R^l} = R for
/// every column g_i. Exponential in the row count; kept as the independent
/// cross-check for the column-unit shortcut.
pub fn is_regular_definition(gen: &CodeMatrix) -> Result<bool> {
    let ring = gen.ring();
    let messages = (ring.size() as u128)
        .checked_pow(gen.rows() as u32)
        .ok_or(Error::EnumerationTooLarge {
            needed: u128::MAX,
            guard: crate::enumeration_guard(),
        })?;
    check_guard(messages)?;
    for c in 0..gen.cols() {
        let col = gen.column(c);
        let mut hit: HashSet<u64> = HashSet::new();
        for idx in 0..messages as u64 {
            let msg = message_vector(ring, idx, gen.rows());
            hit.insert(ring.inner_product(&msg, &col).index());
        }
        if hit.len() as u64 != ring.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The cyclic submodules g_i R generated by the columns are pairwise
/// distinct, decided by materializing each orbit {a g_i : a in R} as a set.
pub fn is_projective(gen: &CodeMatrix) -> bool {
    let ring = gen.ring();
    let mut seen: HashSet<Vec<Vec<Elem>>> = HashSet::new();
    for col in gen.columns() {
        let mut orbit: Vec<Vec<Elem>> = ring
            .elements()
            .map(|a| ring.vec_scale(a, &col))
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        if !seen.insert(orbit) {
            return false;
        }
    }
    true
}

/// The Plotkin-type homogeneous distance bound
/// floor((q^{m-1} - q^{m-2}) n |C| / (|C| - 1)).
pub fn plotkin_bound(ring: &Ring, n: usize, card: u64) -> Result<u64> {
    if card < 2 {
        return Err(Error::TrivialCode);
    }
    let gamma = ring.gamma() as u128;
    let num = gamma * n as u128 * card as u128;
    Ok((num / (card as u128 - 1)) as u64)
}

/// Whether the minimum homogeneous distance meets the Plotkin-type bound.
/// For regular projective codes the result is cross-checked against the
/// equivalent test d = (q^{m-1} - q^{m-2}) n; disagreement is a bug.
pub fn is_plotkin_optimal(code: &LinearCode) -> Result<bool> {
    let d = code.min_hom_distance()?;
    let bound = plotkin_bound(code.ring(), code.length(), code.card())?;
    let optimal = d == bound;
    if let Some(gen) = code.generator() {
        if is_regular(gen) && is_projective(gen) {
            let distance_test = d == code.ring().gamma() * code.length() as u64;
            if distance_test != optimal {
                return Err(Error::InternalInconsistency(format!(
                    "bound test ({optimal}) disagrees with the regular-projective distance test ({distance_test})"
                )));
            }
        }
    }
    Ok(optimal)
}

fn big(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Exact check of the two-weight relation together with the first and
/// second distance-moment identities. Returns false on any violation.
#[allow(clippy::too_many_arguments)]
pub fn check_two_weight_relation(
    ring: &Ring,
    n: usize,
    card: u64,
    w1: u64,
    w2: u64,
    a1: u64,
    a2: u64,
) -> bool {
    if w1 == w2 {
        return false;
    }
    let gamma = big(ring.gamma());
    let units = big(ring.size() - ring.size() / ring.q()); // q^m - q^{m-1}
    let n = big(n as u64);
    let card = big(card);
    let w1 = big(w1);
    let w2 = big(w2);
    let a1 = big(a1);
    let a2 = big(a2);
    let one = BigRational::one();

    // common second-moment right-hand side
    let second = &gamma * &gamma * (&n / &units + &n * &n) * &card;

    let relation = (&w1 + &w2) * &n * &gamma * &card
        == &second + &w1 * &w2 * (&card - &one);
    let count_sum = &a1 + &a2 == &card - &one;
    let first_moment = &a1 * &w1 + &a2 * &w2 == &n * &gamma * &card;
    let second_moment = &a1 * &w1 * &w1 + &a2 * &w2 * &w2 == second;

    relation && count_sum && first_moment && second_moment
}

/// Outcome of the two-weight parameter characterization: the recovered
/// exponent t and the predicted weight table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoWeightCharacterization {
    pub t: u32,
    pub predicted: WeightDistribution,
}

/// The characterization table {0: 1, q^{k-t-1}(q^t - 1): q^k - q^t,
/// q^{k-1}: q^t - 1}.
pub fn two_weight_table(q: u64, k: u32, t: u32) -> WeightDistribution {
    let w1 = q.pow(k - t - 1) * (q.pow(t) - 1);
    let w2 = q.pow(k - 1);
    WeightDistribution::from_pairs(&[(0, 1), (w1, q.pow(k) - q.pow(t)), (w2, q.pow(t) - 1)])
}

/// Data-level characterization check: given length, type and distribution of
/// a code assumed Plotkin-optimal two-weight regular projective, recover t
/// and verify every predicted parameter.
pub fn verify_two_weight_parameters(
    ring: &Ring,
    n: usize,
    profile: &TypeProfile,
    dist: &WeightDistribution,
) -> Result<TwoWeightCharacterization> {
    let q = ring.q();
    let weights = dist.nonzero_weights();
    if weights.len() != 2 {
        return Err(Error::NotApplicable(format!(
            "expected exactly two nonzero weights, found {}",
            weights.len()
        )));
    }
    let w2 = weights[1];
    let a2 = dist.count(w2);
    let t = exact_log(a2 + 1, q).ok_or_else(|| {
        Error::CharacterizationViolated(format!(
            "multiplicity of the larger weight plus one ({}) is not a power of q",
            a2 + 1
        ))
    })?;
    let k0 = profile.k0();
    if t < 1 || t > k0 {
        return Err(Error::CharacterizationViolated(format!(
            "recovered t = {t} outside 1..=k_0 = {k0}"
        )));
    }
    let k = profile.qdim();
    let units = (ring.size() - ring.size() / q) as u128;
    let expected_n = q.pow(k - t) as u128 * (q.pow(t) - 1) as u128 / units;
    if n as u128 != expected_n {
        return Err(Error::CharacterizationViolated(format!(
            "length {n} does not match q^(k-t)(q^t - 1)/(q^m - q^(m-1)) = {expected_n}"
        )));
    }
    let predicted = two_weight_table(q, k, t);
    if *dist != predicted {
        return Err(Error::CharacterizationViolated(format!(
            "distribution {:?} does not match the predicted table {:?}",
            dist.pairs(),
            predicted.pairs()
        )));
    }
    Ok(TwoWeightCharacterization { t, predicted })
}

/// Full characterization check: verifies that the code is a two-weight,
/// regular, projective, Plotkin-optimal code and that its parameters match
/// the characterization table.
pub fn characterize_two_weight(code: &LinearCode) -> Result<TwoWeightCharacterization> {
    let gen = code
        .generator()
        .ok_or_else(|| Error::NotApplicable("code has no generator matrix".into()))?;
    let dist = code.hom_weight_distribution();
    if dist.nonzero_weights().len() != 2 {
        return Err(Error::NotApplicable(format!(
            "code has {} nonzero weights, not two",
            dist.nonzero_weights().len()
        )));
    }
    if !is_regular(gen) {
        return Err(Error::NotApplicable("code is not regular".into()));
    }
    if !is_projective(gen) {
        return Err(Error::NotApplicable("code is not projective".into()));
    }
    if !is_plotkin_optimal(code)? {
        return Err(Error::NotApplicable("code is not Plotkin-optimal".into()));
    }
    let profile = code.code_type()?;
    verify_two_weight_parameters(code.ring(), code.length(), &profile, &dist)
}

/// Sum of wt_hom(c + a*1) over a in the ideal generated by theta^j; constant
/// in c and equal to (q-1) q^{2m-2-j} n.
pub fn coset_sum(ring: &Ring, word: &[Elem], j: u32) -> Result<u64> {
    if j >= ring.m() {
        return Err(Error::IndexOutOfRange {
            index: j as u64,
            limit: ring.m() as u64,
        });
    }
    let mut total = 0u64;
    for a in ring.ideal_elements(j)? {
        total += word.iter().map(|&c| ring.hom_weight(ring.add(c, a))).sum::<u64>();
    }
    Ok(total)
}

/// Sum of wt_hom(xG) over the coset x in u + <theta^{m-1}>^l; for regular
/// codes this equals q^l (q^{m-1} - q^{m-2}) n.
pub fn coset_weight_sum(gen: &CodeMatrix, u: &[Elem]) -> Result<u128> {
    let ring = gen.ring();
    if u.len() != gen.rows() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: gen.rows(),
        });
    }
    let socle = ring.ideal_elements(ring.m() - 1)?;
    let l = gen.rows();
    let combos = (socle.len() as u128).pow(l as u32);
    check_guard(combos.saturating_mul(gen.cols() as u128))?;
    let mut total = 0u128;
    for idx in 0..combos {
        let mut x = u.to_vec();
        let mut t = idx;
        for coord in x.iter_mut() {
            *coord = ring.add(*coord, socle[(t % socle.len() as u128) as usize]);
            t /= socle.len() as u128;
        }
        let mut wt = 0u64;
        for c in 0..gen.cols() {
            let mut acc = ring.zero();
            for (r, &xi) in x.iter().enumerate() {
                acc = ring.add(acc, ring.mul(xi, gen.entry(r, c)));
            }
            wt += ring.hom_weight(acc);
        }
        total += wt as u128;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn z4() -> RingRef {
        Arc::new(Ring::zpm(2, 2).unwrap())
    }

    fn mat(ring: &RingRef, rows: usize, cols: usize, entries: &[u64]) -> CodeMatrix {
        let elems = entries.iter().map(|&i| ring.elem(i).unwrap()).collect();
        CodeMatrix::new(ring.clone(), rows, cols, elems).unwrap()
    }

    #[test]
    fn span_of_single_row() {
        let r = z4();
        let g = mat(&r, 1, 3, &[1, 2, 3]);
        let code = LinearCode::span(g).unwrap();
        assert_eq!(code.card(), 4);
        // independent oracle: direct integer enumeration mod 4
        let mut expect: Vec<Vec<u64>> = (0..4u64)
            .map(|x| vec![x % 4, 2 * x % 4, 3 * x % 4])
            .collect();
        expect.sort_unstable();
        let got: Vec<Vec<u64>> = code
            .words()
            .iter()
            .map(|w| w.iter().map(|e| e.index()).collect())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn span_of_zero_matrix() {
        let r = z4();
        let g = mat(&r, 1, 1, &[0]);
        let code = LinearCode::span(g).unwrap();
        assert_eq!(code.card(), 1);
        assert!(matches!(code.min_hom_distance(), Err(Error::EmptyCode)));
    }

    #[test]
    fn type_of_full_and_scaled_codes() {
        let r = z4();
        let g = mat(&r, 2, 2, &[1, 0, 0, 1]);
        let code = LinearCode::span(g).unwrap();
        assert_eq!(code.card(), 16);
        assert_eq!(code.code_type().unwrap().ks(), &[2, 0]);

        let g = mat(&r, 1, 1, &[2]);
        let code = LinearCode::span(g).unwrap();
        assert_eq!(code.card(), 2);
        assert_eq!(code.code_type().unwrap().ks(), &[0, 1]);
        assert_eq!(code.qdim().unwrap(), 1);
    }

    #[test]
    fn regular_and_projective_checks() {
        let r = z4();
        assert!(!is_regular(&mat(&r, 1, 1, &[2])));
        assert!(is_regular(&mat(&r, 1, 2, &[1, 3])));
        // columns 1 and 3 are unit multiples of each other
        assert!(!is_projective(&mat(&r, 1, 2, &[1, 3])));
        // duplicated block
        assert!(!is_projective(&mat(&r, 1, 2, &[1, 1])));
        assert!(is_projective(&mat(&r, 2, 2, &[1, 0, 0, 1])));
    }

    #[test]
    fn regular_shortcut_matches_definition() {
        let r = z4();
        for entries in [
            vec![1u64, 2, 3, 0, 1, 2],
            vec![2, 2, 0, 0, 2, 2],
            vec![1, 1, 1, 1, 1, 1],
            vec![0, 2, 1, 3, 2, 0],
        ] {
            let g = mat(&r, 2, 3, &entries);
            assert_eq!(is_regular(&g), is_regular_definition(&g).unwrap());
        }
    }

    #[test]
    fn plotkin_bound_values() {
        let z4 = Ring::zpm(2, 2).unwrap();
        assert_eq!(plotkin_bound(&z4, 6, 16).unwrap(), 6);
        let z8 = Ring::zpm(2, 3).unwrap();
        assert_eq!(plotkin_bound(&z8, 12, 64).unwrap(), 24);
        assert!(matches!(plotkin_bound(&z4, 3, 1), Err(Error::TrivialCode)));
    }

    #[test]
    fn repeated_column_code_is_optimal() {
        let r = z4();
        let code = LinearCode::span(mat(&r, 1, 2, &[1, 1])).unwrap();
        assert_eq!(code.min_hom_distance().unwrap(), 2);
        assert!(is_plotkin_optimal(&code).unwrap());
    }

    #[test]
    fn dual_bruteforce_examples() {
        let r = z4();
        // dual of the zero code of length 1 is the whole ring
        let zero = LinearCode::span(mat(&r, 1, 1, &[0])).unwrap();
        assert_eq!(zero.dual_bruteforce().unwrap().card(), 4);

        let c = LinearCode::span(mat(&r, 1, 2, &[1, 1])).unwrap();
        let dual = c.dual_bruteforce().unwrap();
        assert_eq!(dual.card(), 4);
        let has_13 = dual
            .words()
            .iter()
            .any(|w| w.iter().map(|e| e.index()).collect::<Vec<_>>() == vec![1, 3]);
        assert!(has_13);

        let c = LinearCode::span(mat(&r, 1, 1, &[2])).unwrap();
        let dual = c.dual_bruteforce().unwrap();
        let got: Vec<u64> = dual.words().iter().map(|w| w[0].index()).collect();
        assert_eq!(got, vec![0, 2]);
    }

    #[test]
    fn two_weight_relation_on_fqum_data() {
        let r = Ring::fqum(2, 1, 2, None).unwrap();
        assert!(check_two_weight_relation(&r, 6, 16, 6, 8, 12, 3));
        assert!(!check_two_weight_relation(&r, 6, 16, 6, 9, 12, 3));
        let z8 = Ring::zpm(2, 3).unwrap();
        assert!(check_two_weight_relation(&z8, 12, 64, 24, 32, 60, 3));
        assert!(!check_two_weight_relation(&z8, 12, 64, 24, 24, 60, 3));
    }

    #[test]
    fn characterization_on_length_one_code() {
        let r = z4();
        let code = LinearCode::span(mat(&r, 1, 1, &[1])).unwrap();
        let t47 = characterize_two_weight(&code).unwrap();
        assert_eq!(t47.t, 1);
        assert_eq!(t47.predicted.pairs(), vec![(0, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn coset_sum_examples() {
        let r = z4();
        let zero = vec![r.zero(), r.zero()];
        // oracle: wt(0,0)+wt(1,1)+wt(2,2)+wt(3,3) = 0 + 2 + 4 + 2 = 8
        assert_eq!(coset_sum(&r, &zero, 0).unwrap(), 8);
        let w = vec![r.elem(1).unwrap(), r.elem(3).unwrap()];
        // oracle: wt(1,3) + wt(3,1) = 2 + 2 = 4
        assert_eq!(coset_sum(&r, &w, 1).unwrap(), 4);
        assert!(coset_sum(&r, &w, 2).is_err());
        // independence of c
        for c0 in 0..4 {
            for c1 in 0..4 {
                let w = vec![r.elem(c0).unwrap(), r.elem(c1).unwrap()];
                assert_eq!(coset_sum(&r, &w, 0).unwrap(), 8);
                assert_eq!(coset_sum(&r, &w, 1).unwrap(), 4);
            }
        }
    }

    #[test]
    fn enumeration_guard_trips() {
        let r = z4();
        let g = mat(&r, 13, 1, &vec![1u64; 13]);
        assert!(matches!(
            LinearCode::span(g),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }
}
