//! Graphs derived from codes: coset graphs on codewords, syndrome Cayley
//! graphs on the column space of a parity-check matrix, combinatorial
//! verification of strong regularity and strong walk-regularity, and
//! triple-sum-set machinery.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::check_guard;
use crate::codes::{CodeMatrix, LinearCode};
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingRef};
use crate::MAX_GRAPH_VERTICES;

/// Dense undirected simple graph with vector labels on the vertices.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    /// Adjacency rows as bitsets.
    rows: Vec<Vec<u64>>,
    labels: Vec<Vec<Elem>>,
}

impl Graph {
    pub fn new(n: usize, labels: Vec<Vec<Elem>>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameters("graph needs at least one vertex".into()));
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::EnumerationTooLarge {
                needed: n as u128,
                guard: MAX_GRAPH_VERTICES as u64,
            });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            rows: vec![vec![0u64; words]; n],
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Vec<Elem>] {
        &self.labels
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        self.rows[i][j / 64] |= 1 << (j % 64);
        self.rows[j][i / 64] |= 1 << (i % 64);
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.rows[i]
            .iter()
            .zip(self.rows[j].iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.adjacent(i, j)).collect()
    }
}

/// Vertices are the codewords; two are adjacent iff their difference has
/// homogeneous weight w1.
pub fn coset_graph(code: &LinearCode, w1: u64) -> Result<Graph> {
    let dist = code.hom_weight_distribution();
    if dist.count(w1) == 0 || w1 == 0 {
        return Err(Error::WeightNotPresent(w1));
    }
    let ring = code.ring().clone();
    let n = code.words().len();
    let mut g = Graph::new(n, code.words().to_vec())?;
    for i in 0..n {
        for j in i + 1..n {
            let diff = ring.vec_sub(&code.words()[i], &code.words()[j]);
            if ring.hom_weight_vec(&diff) == w1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Closure of the column set of H under R-linear combination: the vertex
/// set {Hx : x in R^n}, in canonical order.
fn column_space(h: &CodeMatrix) -> Result<Vec<Vec<Elem>>> {
    let ring = h.ring();
    let bound = (ring.size() as u128).saturating_pow(h.rows() as u32);
    check_guard(bound)?;
    let zero = vec![ring.zero(); h.rows()];
    let mut seen: HashMap<Vec<Elem>, ()> = HashMap::new();
    seen.insert(zero.clone(), ());
    let mut frontier = vec![zero];
    // generators: all ring multiples of all columns
    let mut gens: Vec<Vec<Elem>> = Vec::new();
    for col in h.columns() {
        for a in ring.elements() {
            if a.index() == 0 {
                continue;
            }
            gens.push(ring.vec_scale(a, &col));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let next = ring.vec_add(&v, g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                frontier.push(next);
            }
        }
    }
    let mut vertices: Vec<Vec<Elem>> = seen.into_keys().collect();
    vertices.sort_unstable();
    Ok(vertices)
}

/// Cayley graph on the column space of H with connection set
/// S = {u h_i : u unit, i a column index}.
pub fn syndrome_graph(h: &CodeMatrix) -> Result<Graph> {
    let ring = h.ring().clone();
    let vertices = column_space(h)?;
    let index: HashMap<&Vec<Elem>, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut connection: Vec<Vec<Elem>> = Vec::new();
    for col in h.columns() {
        for u in ring.units() {
            let s = ring.vec_scale(u, &col);
            if s.iter().any(|&x| x.index() != 0) {
                connection.push(s);
            }
        }
    }
    connection.sort_unstable();
    connection.dedup();
    let mut g = Graph::new(vertices.len(), vertices.clone())?;
    for (i, v) in vertices.iter().enumerate() {
        for s in &connection {
            let w = ring.vec_add(v, s);
            let j = index[&w];
            if j != i {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Exact restricted eigenvalue of a strongly regular graph: an integer or a
/// quadratic surd (num +/- sqrt(disc)) / den.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Eigenvalue {
    Int(i64),
    Surd { num: i64, disc: u64, den: u64, positive_root: bool },
}

impl Eigenvalue {
    pub fn to_f64(self) -> f64 {
        match self {
            Eigenvalue::Int(v) => v as f64,
            Eigenvalue::Surd { num, disc, den, positive_root } => {
                let root = (disc as f64).sqrt();
                let sign = if positive_root { 1.0 } else { -1.0 };
                (num as f64 + sign * root) / den as f64
            }
        }
    }
}

impl std::fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Eigenvalue::Int(v) => write!(f, "{v}"),
            Eigenvalue::Surd { num, disc, den, positive_root } => {
                let sign = if *positive_root { '+' } else { '-' };
                write!(f, "({num}{sign}sqrt({disc}))/{den}")
            }
        }
    }
}

/// Verified strongly-regular parameters. `mu` is absent for complete
/// graphs, where no non-adjacent pairs exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: Option<usize>,
    pub restricted_eigenvalues: Option<(Eigenvalue, Eigenvalue)>,
}

fn integer_sqrt(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    for cand in r.saturating_sub(2)..=r + 2 {
        if cand * cand == x {
            return Some(cand);
        }
    }
    None
}

/// Exhaustive strong-regularity check: constant degree, constant common
/// neighbor counts over adjacent and over non-adjacent pairs. Restricted
/// eigenvalues come from x^2 + (mu - lambda) x + (mu - k) = 0 and, for
/// graphs on at most 256 vertices, are cross-validated against the full
/// adjacency spectrum.
pub fn verify_srg(g: &Graph) -> Result<SrgParams> {
    let n = g.n();
    if n < 2 {
        return Err(Error::NotSrg("graph has fewer than two vertices".into()));
    }
    let k = g.degree(0);
    for i in 1..n {
        if g.degree(i) != k {
            return Err(Error::NotSrg(format!(
                "vertex 0 has degree {k} but vertex {i} has degree {}",
                g.degree(i)
            )));
        }
    }
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for i in 0..n {
        for j in i + 1..n {
            let common = g.common_neighbors(i, j);
            let slot = if g.adjacent(i, j) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(common),
                Some(v) if *v == common => {}
                Some(v) => {
                    return Err(Error::NotSrg(format!(
                        "pair ({i}, {j}) has {common} common neighbors, expected {v}"
                    )));
                }
            }
        }
    }
    let lambda = lambda.ok_or_else(|| Error::NotSrg("graph has no edges".into()))?;
    // feasibility: k(k - lambda - 1) = (n - k - 1) mu
    if let Some(mu) = mu {
        let lhs = k as u64 * (k as i64 - lambda as i64 - 1).max(0) as u64;
        let rhs = (n - k - 1) as u64 * mu as u64;
        if lhs != rhs {
            return Err(Error::InternalInconsistency(format!(
                "SRG feasibility violated: k(k-lambda-1) = {lhs} but (n-k-1)mu = {rhs}"
            )));
        }
    }
    let restricted = mu.map(|mu| {
        // roots of x^2 + (mu - lambda) x + (mu - k) = 0
        let b = lambda as i64 - mu as i64; // = -(mu - lambda)
        let disc = (b * b + 4 * (k as i64 - mu as i64)) as u64;
        match integer_sqrt(disc) {
            Some(root) if (b + root as i64) % 2 == 0 => (
                Eigenvalue::Int((b + root as i64) / 2),
                Eigenvalue::Int((b - root as i64) / 2),
            ),
            _ => (
                Eigenvalue::Surd { num: b, disc, den: 2, positive_root: true },
                Eigenvalue::Surd { num: b, disc, den: 2, positive_root: false },
            ),
        }
    });
    let params = SrgParams {
        n,
        k,
        lambda,
        mu,
        restricted_eigenvalues: restricted,
    };
    if n <= 256 {
        cross_validate_spectrum(g, &params)?;
    }
    Ok(params)
}

/// Every adjacency eigenvalue must be close to K or to one of the two
/// restricted eigenvalues.
fn cross_validate_spectrum(g: &Graph, params: &SrgParams) -> Result<()> {
    let Some((r, s)) = params.restricted_eigenvalues else {
        return Ok(());
    };
    let n = g.n();
    let mat = nalgebra::DMatrix::<f64>::from_fn(n, n, |i, j| {
        if i != j && g.adjacent(i, j) {
            1.0
        } else {
            0.0
        }
    });
    let eigen = mat.symmetric_eigen();
    let targets = [params.k as f64, r.to_f64(), s.to_f64()];
    for ev in eigen.eigenvalues.iter() {
        if !targets.iter().any(|t| (ev - t).abs() < 1e-6) {
            return Err(Error::InternalInconsistency(format!(
                "adjacency eigenvalue {ev} not in the predicted spectrum {targets:?}"
            )));
        }
    }
    Ok(())
}

/// If non-adjacency (plus the diagonal) is an equivalence relation with
/// equal-size classes, the graph is complete multipartite; returns
/// (number of classes, class size).
pub fn complete_multipartite_profile(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let class: Vec<usize> = (0..n)
            .filter(|&j| j == i || !g.adjacent(i, j))
            .collect();
        for &j in &class {
            if class_of[j] != usize::MAX {
                return None; // transitivity failure
            }
            class_of[j] = classes.len();
        }
        classes.push(class);
    }
    let size = classes[0].len();
    if classes.iter().any(|c| c.len() != size) {
        return None;
    }
    // within classes: non-adjacent; across classes: adjacent
    for i in 0..n {
        for j in i + 1..n {
            let same = class_of[i] == class_of[j];
            if same == g.adjacent(i, j) {
                return None;
            }
        }
    }
    Some((classes.len(), size))
}

/// Walk-count regularity parameters for a fixed walk length: the number of
/// length-l walks between two vertices depends only on whether they are
/// adjacent, non-adjacent or equal. `mu` is absent when no distinct
/// non-adjacent pairs exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwrgParams {
    pub ell: u32,
    pub lambda: u64,
    pub mu: Option<u64>,
    pub nu: u64,
}

fn walk_matrix(g: &Graph, ell: u32) -> Result<Vec<Vec<u64>>> {
    let n = g.n();
    check_guard((n as u128) * (n as u128))?;
    let adj: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(g.adjacent(i, j))).collect())
        .collect();
    let mut acc = adj.clone();
    for _ in 1..ell {
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for (k, &a) in acc[i].iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, cell) in next[i].iter_mut().enumerate() {
                    let prod = a
                        .checked_mul(adj[k][j])
                        .and_then(|p| cell.checked_add(p))
                        .ok_or_else(|| {
                            Error::InvalidParameters("walk count overflow".into())
                        })?;
                    *cell = prod;
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Exact walk-count check with integer matrix powers.
pub fn verify_swrg(g: &Graph, ell: u32) -> Result<SwrgParams> {
    if ell < 2 {
        return Err(Error::InvalidParameters("walk length must be at least 2".into()));
    }
    let n = g.n();
    let walks = walk_matrix(g, ell)?;
    let mut lambda: Option<u64> = None;
    let mut mu: Option<u64> = None;
    let mut nu: Option<u64> = None;
    for i in 0..n {
        match nu {
            None => nu = Some(walks[i][i]),
            Some(v) if v == walks[i][i] => {}
            Some(v) => {
                return Err(Error::NotSwrg(format!(
                    "closed walk count at vertex {i} is {}, expected {v}",
                    walks[i][i]
                )));
            }
        }
        for j in i + 1..n {
            let count = walks[i][j];
            let slot = if g.adjacent(i, j) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some(count),
                Some(v) if *v == count => {}
                Some(v) => {
                    return Err(Error::NotSwrg(format!(
                        "pair ({i}, {j}) has {count} walks of length {ell}, expected {v}"
                    )));
                }
            }
        }
    }
    Ok(SwrgParams {
        ell,
        lambda: lambda.ok_or_else(|| Error::NotSwrg("graph has no edges".into()))?,
        mu,
        nu: nu.unwrap(),
    })
}

/// Predicted SRG parameters from the two normalized weights of a regular
/// projective two-weight code, evaluated in exact rationals. Returns
/// (N, K, lambda, mu).
pub fn srg_params_from_weights(
    ring: &Ring,
    n: usize,
    card: u64,
    w1: u64,
    w2: u64,
) -> Result<(u64, u64, u64, u64)> {
    let gamma = BigRational::from_integer(BigInt::from(ring.gamma()));
    let rat = |x: u64| BigRational::from_integer(BigInt::from(x));
    let nn = rat(n as u64);
    let cardr = rat(card);
    let w1 = rat(w1) / &gamma;
    let w2 = rat(w2) / &gamma;
    let one = BigRational::from_integer(BigInt::from(1));
    let denom = &w1 - &w2;
    let k = ((&nn - &w2) * &cardr + &w2) / &denom;
    let lambda = (&nn * &k * (&one - (&one - &w1 / &nn) * (&one - &w1 / &nn))
        + &w2 * (&one - &k))
        / &denom;
    let mu = (&nn * &k * (&one - (&one - &w1 / &nn) * (&one - &w2 / &nn)) - &w2 * &k) / &denom;
    let to_u64 = |x: BigRational, name: &str| -> Result<u64> {
        if !x.is_integer() {
            return Err(Error::InternalInconsistency(format!(
                "predicted {name} = {x} is not an integer"
            )));
        }
        let (sign, digits) = x.to_integer().to_u64_digits();
        if sign == num_bigint::Sign::Minus {
            return Err(Error::InternalInconsistency(format!(
                "predicted {name} = {x} is negative"
            )));
        }
        Ok(digits.first().copied().unwrap_or(0))
    };
    Ok((
        card,
        to_u64(k, "K")?,
        to_u64(lambda, "lambda")?,
        to_u64(mu, "mu")?,
    ))
}

/// A set of vectors in R^k that is stable under multiplication by units,
/// avoids zero and contains only regular vectors.
#[derive(Debug, Clone)]
pub struct OmegaSet {
    ring: RingRef,
    k: usize,
    vectors: Vec<Vec<Elem>>,
}

impl OmegaSet {
    pub fn new(ring: RingRef, vectors: Vec<Vec<Elem>>) -> Result<OmegaSet> {
        if vectors.is_empty() {
            return Err(Error::InvalidParameters("empty vector set".into()));
        }
        let k = vectors[0].len();
        if vectors.iter().any(|v| v.len() != k) {
            return Err(Error::InvalidParameters("ragged vector set".into()));
        }
        let mut vectors = vectors;
        vectors.sort_unstable();
        vectors.dedup();
        let fmt = |v: &[Elem]| {
            v.iter()
                .map(|e| e.index().to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        for v in &vectors {
            if v.iter().all(|&x| x.index() == 0) {
                return Err(Error::InvalidParameters("set contains the zero vector".into()));
            }
            if !ring.is_regular_vector(v) {
                return Err(Error::NotRegularVector(format!("({})", fmt(v))));
            }
        }
        let lookup: std::collections::HashSet<&Vec<Elem>> = vectors.iter().collect();
        for v in &vectors {
            for u in ring.units() {
                let scaled = ring.vec_scale(u, v);
                if !lookup.contains(&scaled) {
                    return Err(Error::NotUnitStable(format!("({})", fmt(&scaled))));
                }
            }
        }
        Ok(OmegaSet { ring, k, vectors })
    }

    /// Expand the unit orbits of the columns of a parity-check matrix.
    pub fn from_pcheck_columns(h: &CodeMatrix) -> Result<OmegaSet> {
        let ring = h.ring().clone();
        let mut vectors = Vec::new();
        for col in h.columns() {
            for u in ring.units() {
                vectors.push(ring.vec_scale(u, &col));
            }
        }
        OmegaSet::new(ring, vectors)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vectors(&self) -> &[Vec<Elem>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// The subgroup of R^k generated by the set, i.e. the ambient group of the
/// associated Cayley graph. The set is stable under unit multiplication, so
/// it contains negatives and additive closure suffices.
fn generated_subgroup(omega: &OmegaSet) -> Result<Vec<Vec<Elem>>> {
    let ring = omega.ring();
    let bound = (ring.size() as u128).saturating_pow(omega.k() as u32);
    check_guard(bound)?;
    let zero = vec![ring.zero(); omega.k()];
    let mut seen: HashMap<Vec<Elem>, ()> = HashMap::new();
    seen.insert(zero.clone(), ());
    let mut frontier = vec![zero];
    while let Some(v) = frontier.pop() {
        for g in omega.vectors() {
            let next = ring.vec_add(&v, g);
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Vec<Elem>> = seen.into_keys().collect();
    out.sort_unstable();
    Ok(out)
}

/// Brute-force triple-sum-set check: counts, for every nonzero h of the
/// subgroup generated by the set, the ordered triples of set elements
/// summing to h. Returns the constants (sigma_0, sigma_1) for h inside
/// resp. outside the set. The subgroup is the vertex set of the associated
/// syndrome graph; sums of set elements never leave it, so elements outside
/// carry no walk information.
pub fn is_tss(omega: &OmegaSet) -> Result<(u64, u64)> {
    let ring = omega.ring();
    let size = omega.len() as u128;
    check_guard(size * size * size)?;
    let ambient = generated_subgroup(omega)?;
    let mut counts: HashMap<Vec<Elem>, u64> = HashMap::new();
    for x1 in omega.vectors() {
        for x2 in omega.vectors() {
            let partial = ring.vec_add(x1, x2);
            for x3 in omega.vectors() {
                let sum = ring.vec_add(&partial, x3);
                *counts.entry(sum).or_insert(0) += 1;
            }
        }
    }
    let members: std::collections::HashSet<&Vec<Elem>> = omega.vectors().iter().collect();
    let mut sigma0: Option<u64> = None;
    let mut sigma1: Option<u64> = None;
    for h in &ambient {
        if h.iter().all(|&x| x.index() == 0) {
            continue;
        }
        let count = counts.get(h).copied().unwrap_or(0);
        let slot = if members.contains(h) { &mut sigma0 } else { &mut sigma1 };
        match slot {
            None => *slot = Some(count),
            Some(v) if *v == count => {}
            Some(v) => {
                let fmt = h
                    .iter()
                    .map(|e| e.index().to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                return Err(Error::NotTss(format!(
                    "vector ({fmt}) has {count} representations, expected {v}"
                )));
            }
        }
    }
    Ok((sigma0.unwrap_or(0), sigma1.unwrap_or(0)))
}

/// Exact test of the three-weight sum criterion
/// w1 + w2 + w3 = 3 n (q^{m-1} - q^{m-2}).
pub fn tss_criterion(ring: &Ring, n: usize, weights: (u64, u64, u64)) -> Result<bool> {
    let (w1, w2, w3) = weights;
    if !(w1 < w2 && w2 < w3) {
        return Err(Error::InvalidParameters(
            "weights must be strictly increasing".into(),
        ));
    }
    Ok(w1 + w2 + w3 == 3 * n as u64 * ring.gamma())
}

/// Append a coordinate running over the ideal generated by theta^j.
pub fn extend_omega(omega: &OmegaSet, j: u32) -> Result<OmegaSet> {
    let ring = omega.ring().clone();
    if j >= ring.m() {
        return Err(Error::IndexOutOfRange {
            index: j as u64,
            limit: ring.m() as u64,
        });
    }
    let ideal = ring.ideal_elements(j)?;
    let mut vectors = Vec::with_capacity(omega.len() * ideal.len());
    for v in omega.vectors() {
        for &b in &ideal {
            let mut w = v.clone();
            w.push(b);
            vectors.push(w);
        }
    }
    OmegaSet::new(ring, vectors)
}

/// Parity-check matrix with one canonical representative per unit orbit of
/// the set: the lexicographically smallest orbit element, columns sorted.
pub fn code_from_omega(omega: &OmegaSet) -> Result<CodeMatrix> {
    let ring = omega.ring().clone();
    let mut reps: Vec<Vec<Elem>> = Vec::new();
    for v in omega.vectors() {
        let orbit_min = ring
            .units()
            .iter()
            .map(|&u| ring.vec_scale(u, v))
            .min()
            .unwrap();
        if orbit_min == *v {
            reps.push(v.clone());
        }
    }
    reps.sort_unstable();
    let rows = omega.k();
    let cols = reps.len();
    let mut entries = vec![ring.zero(); rows * cols];
    for (c, rep) in reps.iter().enumerate() {
        for (r, &x) in rep.iter().enumerate() {
            entries[r * cols + c] = x;
        }
    }
    CodeMatrix::new(ring, rows, cols, entries)
}
