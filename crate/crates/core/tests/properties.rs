//! Invariant suites: ring and weight axioms over the full small-ring
//! inventory, construction-family properties, graph parameter predictions
//! and the triple-sum-set equivalence, plus randomized structural checks.

mod common;

use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use chaincodes::codes::{
    coset_weight_sum, is_plotkin_optimal, is_projective, is_regular, CodeMatrix, LinearCode,
};
use chaincodes::constructions::{
    b_matrix, extend_generator, one_weight_generator, y_distribution, y_length, y_matrix,
    IdealBlockProfile,
};
use chaincodes::graphs::{
    code_from_omega, coset_graph, extend_omega, is_tss, srg_params_from_weights, syndrome_graph,
    tss_criterion, verify_srg, verify_swrg, Eigenvalue, OmegaSet,
};
use chaincodes::gray::{gray_basis, gray_image, gray_vector, hamming_distance};
use chaincodes::io::{read_matrix, write_matrix};
use chaincodes::minimality::minimal_codewords;
use chaincodes::ring::{Elem, RingRef};

use common::{f2u, matrix, small_rings, tss_pcheck, z4, z8, z9};

#[test]
fn ring_axioms_exhaustive() {
    for ring in small_rings() {
        let elems: Vec<Elem> = ring.elements().collect();
        let zero = ring.zero();
        let one = ring.one();
        for &a in &elems {
            assert_eq!(ring.add(a, zero), a);
            assert_eq!(ring.mul(a, one), a);
            assert_eq!(ring.add(a, ring.neg(a)), zero);
            for &b in &elems {
                assert_eq!(ring.add(a, b), ring.add(b, a));
                assert_eq!(ring.mul(a, b), ring.mul(b, a));
                for &c in &elems {
                    assert_eq!(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)));
                    assert_eq!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
                    assert_eq!(
                        ring.mul(a, ring.add(b, c)),
                        ring.add(ring.mul(a, b), ring.mul(a, c))
                    );
                }
            }
        }
    }
}

#[test]
fn ideal_chain_sizes() {
    for ring in small_rings() {
        let q = ring.q();
        let m = ring.m();
        for j in 0..=m {
            let ideal = ring.ideal_elements(j).unwrap();
            assert_eq!(ideal.len() as u64, q.pow(m - j));
            // brute-force membership cross-check
            let as_set: HashSet<Elem> = ideal.into_iter().collect();
            let theta_j = ring.theta_pow(j).unwrap();
            let multiples: HashSet<Elem> =
                ring.elements().map(|a| ring.mul(a, theta_j)).collect();
            assert_eq!(as_set, multiples);
        }
        assert_eq!(ring.units().len() as u64, q.pow(m) - q.pow(m - 1));
    }
}

#[test]
fn hom_weight_axioms_exhaustive() {
    for ring in small_rings() {
        let q = ring.q();
        let m = ring.m();
        let gamma = ring.gamma();
        for x in ring.elements() {
            let w = ring.hom_weight(x);
            assert!(w == 0 || w == gamma || w == q.pow(m - 1));
            assert_eq!(w == 0, x.index() == 0);
            // constant on unit orbits
            for u in ring.units() {
                assert_eq!(ring.hom_weight(ring.mul(u, x)), w);
            }
            // averaging over the cyclic submodule Rx
            if x.index() != 0 {
                let orbit: HashSet<Elem> = ring.elements().map(|a| ring.mul(a, x)).collect();
                let total: u64 = orbit.iter().map(|&y| ring.hom_weight(y)).sum();
                assert_eq!(total, gamma * orbit.len() as u64);
            }
        }
    }
}

#[test]
fn gray_isometry_exhaustive_on_elements() {
    for ring in small_rings() {
        let basis = gray_basis(&ring);
        for x in ring.elements() {
            for y in ring.elements() {
                let gx = gray_vector(&ring, &basis, &[x]);
                let gy = gray_vector(&ring, &basis, &[y]);
                let dh = hamming_distance(&gx, &gy).unwrap();
                assert_eq!(dh, ring.hom_weight(ring.sub(x, y)), "ring {}", ring.header());
            }
        }
    }
}

#[test]
fn regular_projective_length_bound() {
    // regular projective codes satisfy (q^m - q^{m-1}) n <= q^k - q^{k-k_0}
    let golden: Vec<CodeMatrix> = vec![
        y_matrix(&z4(), 1).unwrap(),
        y_matrix(&z4(), 2).unwrap(),
        y_matrix(&z8(), 2).unwrap(),
        y_matrix(&f2u(), 2).unwrap(),
        y_matrix(&z9(), 2).unwrap(),
        tss_pcheck(),
    ];
    for gen in golden {
        assert!(is_regular(&gen) && is_projective(&gen));
        let code = LinearCode::span(gen).unwrap();
        let ring = code.ring();
        let profile = code.code_type().unwrap();
        let k = profile.qdim();
        let q = ring.q();
        let lhs = (q.pow(ring.m()) - q.pow(ring.m() - 1)) as u128 * code.length() as u128;
        let rhs = q.pow(k) as u128 - q.pow(k - profile.k0()) as u128;
        assert!(lhs <= rhs);
    }
}

#[test]
fn one_weight_family_parameters() {
    // every block profile yields a one-weight code with weight q^k * gamma
    // and length q^k - 1
    for ring in [z4(), z8(), z9(), f2u()] {
        let m = ring.m() as usize;
        let mut profiles = vec![vec![1u32; m]];
        for j in 0..m {
            let mut p = vec![0u32; m];
            p[j] = 1;
            profiles.push(p);
        }
        for sizes in profiles {
            let profile = IdealBlockProfile::new(&ring, sizes).unwrap();
            let k = profile.qdim(&ring);
            if ring.q().pow(k) > 2048 {
                continue;
            }
            let gen = one_weight_generator(&ring, &profile).unwrap();
            assert_eq!(gen.cols() as u64, ring.q().pow(k) - 1);
            let code = LinearCode::span(gen).unwrap();
            let dist = code.hom_weight_distribution();
            let expected_w = ring.q().pow(k) * ring.gamma();
            assert_eq!(
                dist.pairs(),
                vec![(0, 1), (expected_w, code.card() - 1)],
                "profile over {}",
                ring.header()
            );
        }
    }
}

#[test]
fn inductive_family_distribution_and_word_weights() {
    // the y_k spans are free two-weight Plotkin-optimal codes with the
    // predicted distribution, and each word's weight is determined by
    // whether its message lies in the socle
    for ring in [z4(), z8(), z9(), f2u()] {
        for k in 1..=2u32 {
            let gen = y_matrix(&ring, k).unwrap();
            assert_eq!(gen.cols() as u128, y_length(&ring, k));
            let code = LinearCode::span(gen.clone()).unwrap();
            assert_eq!(code.hom_weight_distribution(), y_distribution(&ring, k));
            assert!(is_plotkin_optimal(&code).unwrap());
            let profile = code.code_type().unwrap();
            assert_eq!(profile.ks()[0], k);
            assert!(profile.ks()[1..].iter().all(|&x| x == 0), "free code");

            // per-message weight split
            let q = ring.q();
            let m = ring.m();
            let w1 = q.pow(m * k - 1) - q.pow((m - 1) * k - 1);
            let w2 = q.pow(m * k - 1);
            let size = ring.size();
            for idx in 0..size.pow(k) {
                let mut msg = Vec::with_capacity(k as usize);
                let mut t = idx;
                for _ in 0..k {
                    msg.push(ring.elem(t % size).unwrap());
                    t /= size;
                }
                let mut word = vec![ring.zero(); gen.cols()];
                for (r, &coef) in msg.iter().enumerate() {
                    for (c, w) in word.iter_mut().enumerate() {
                        *w = ring.add(*w, ring.mul(coef, gen.entry(r, c)));
                    }
                }
                let weight = ring.hom_weight_vec(&word);
                let in_socle = msg.iter().all(|&x| ring.in_ideal(x, m - 1));
                let zero = msg.iter().all(|&x| x.index() == 0);
                if zero {
                    assert_eq!(weight, 0);
                } else if in_socle {
                    assert_eq!(weight, w2);
                } else {
                    assert_eq!(weight, w1);
                }
            }
        }
    }
}

#[test]
fn extension_family_is_regular_projective() {
    for ring in [z4(), z9()] {
        let profiles: Vec<Vec<u32>> = if ring.m() == 2 {
            vec![vec![2, 0], vec![2, 1], vec![3, 0]]
        } else {
            vec![vec![2, 0, 0]]
        };
        for profile in profiles {
            for t in 1..=profile[0] {
                let gen =
                    chaincodes::constructions::optimal_two_weight_code(&ring, &profile, t)
                        .unwrap();
                if (ring.size() as u128).pow(gen.rows() as u32) > 1 << 16 {
                    continue;
                }
                assert!(is_regular(&gen));
                assert!(is_projective(&gen));
                let code = LinearCode::span(gen).unwrap();
                let (n, dist) = chaincodes::constructions::optimal_two_weight_prediction(
                    &ring, &profile, t,
                )
                .unwrap();
                assert_eq!(code.length() as u128, n);
                assert_eq!(code.hom_weight_distribution(), dist);
                assert_eq!(code.code_type().unwrap().ks(), profile.as_slice());
            }
        }
    }
}

#[test]
fn coset_weight_sums_on_regular_generators() {
    // the coset sum over u + socle^l of wt(xG) is q^l * gamma * n for every u
    for (gen, _) in [(y_matrix(&z4(), 2).unwrap(), ()), (tss_pcheck(), ())] {
        let ring = gen.ring().clone();
        let l = gen.rows() as u32;
        let expected =
            ring.q().pow(l) as u128 * ring.gamma() as u128 * gen.cols() as u128;
        for idx in 0..ring.size().pow(l) {
            let mut u = Vec::with_capacity(l as usize);
            let mut t = idx;
            for _ in 0..l {
                u.push(ring.elem(t % ring.size()).unwrap());
                t /= ring.size();
            }
            assert_eq!(coset_weight_sum(&gen, &u).unwrap(), expected);
        }
    }
}

#[test]
fn coset_graph_parameters_match_weight_formulas() {
    // predicted SRG parameters from the normalized weights agree with the
    // combinatorial verification on every golden two-weight code
    let goldens: Vec<CodeMatrix> = vec![
        y_matrix(&z4(), 1).unwrap(),
        y_matrix(&z4(), 2).unwrap(),
        y_matrix(&f2u(), 2).unwrap(),
        y_matrix(&z8(), 2).unwrap(),
        y_matrix(&z9(), 2).unwrap(),
    ];
    for gen in goldens {
        let code = LinearCode::span(gen).unwrap();
        let dist = code.hom_weight_distribution();
        let weights = dist.nonzero_weights();
        assert_eq!(weights.len(), 2);
        let (w1, w2) = (weights[0], weights[1]);
        let graph = coset_graph(&code, w1).unwrap();
        let params = verify_srg(&graph).unwrap();
        let (n_pred, k_pred, lambda_pred, mu_pred) =
            srg_params_from_weights(code.ring(), code.length(), code.card(), w1, w2).unwrap();
        assert_eq!(params.n as u64, n_pred);
        assert_eq!(params.k as u64, k_pred);
        assert_eq!(params.lambda as u64, lambda_pred);
        assert_eq!(params.mu.unwrap() as u64, mu_pred);
    }
}

#[test]
fn syndrome_graph_eigenvalues_from_weights() {
    // for a two-weight code with weights w1 < w2 used as the parity-check,
    // the syndrome graph is an SRG with restricted eigenvalues
    // (q^m - q^{m-1}) n - q w_i
    let goldens: Vec<CodeMatrix> = vec![
        y_matrix(&z4(), 1).unwrap(),
        y_matrix(&z4(), 2).unwrap(),
        y_matrix(&f2u(), 2).unwrap(),
        y_matrix(&z8(), 2).unwrap(),
        y_matrix(&z9(), 2).unwrap(),
    ];
    for gen in goldens {
        let code = LinearCode::span(gen.clone()).unwrap();
        let ring = code.ring();
        let weights = code.hom_weight_distribution().nonzero_weights();
        let degree = (ring.q().pow(ring.m()) - ring.q().pow(ring.m() - 1)) * gen.cols() as u64;
        let expect: Vec<i64> = weights
            .iter()
            .map(|&w| degree as i64 - (ring.q() * w) as i64)
            .collect();
        let graph = syndrome_graph(&gen).unwrap();
        let params = verify_srg(&graph).unwrap();
        assert_eq!(params.k as u64, degree);
        let (r, s) = params.restricted_eigenvalues.unwrap();
        let mut got = match (r, s) {
            (Eigenvalue::Int(a), Eigenvalue::Int(b)) => vec![a, b],
            other => panic!("expected integer eigenvalues, got {other:?}"),
        };
        got.sort_unstable();
        let mut expect = expect;
        expect.sort_unstable();
        assert_eq!(got, expect);
    }
}

/// All 63 nonempty unions of unit orbits of regular vectors in Z_4^2, used
/// to exercise the triple-sum-set equivalence in both directions.
fn z4_squared_orbit_unions() -> Vec<OmegaSet> {
    let ring = z4();
    let mut orbits: Vec<Vec<Vec<Elem>>> = Vec::new();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    for a in 0..4u64 {
        for b in 0..4u64 {
            let v = vec![ring.elem(a).unwrap(), ring.elem(b).unwrap()];
            if !ring.is_regular_vector(&v) || seen.contains(&v) {
                continue;
            }
            let orbit: Vec<Vec<Elem>> = ring
                .units()
                .iter()
                .map(|&u| ring.vec_scale(u, &v))
                .collect();
            for w in &orbit {
                seen.insert(w.clone());
            }
            orbits.push(orbit);
        }
    }
    assert_eq!(orbits.len(), 6);
    let mut unions = Vec::new();
    for mask in 1u32..(1 << orbits.len()) {
        let mut vectors = Vec::new();
        for (i, orbit) in orbits.iter().enumerate() {
            if mask >> i & 1 == 1 {
                vectors.extend(orbit.iter().cloned());
            }
        }
        unions.push(OmegaSet::new(ring.clone(), vectors).unwrap());
    }
    unions
}

#[test]
fn triple_sum_equivalence_both_directions() {
    // wherever the dual has exactly three nonzero weights, the brute-force
    // triple-sum check and the weight-sum criterion must agree; the scan
    // must hit both outcomes
    let mut scan: Vec<OmegaSet> = z4_squared_orbit_unions();
    scan.push(OmegaSet::from_pcheck_columns(&tss_pcheck()).unwrap());
    // frozen three-weight instance violating the sum criterion: dual
    // weights {2, 4, 6} with n = 3, so 12 != 9
    scan.push(
        OmegaSet::from_pcheck_columns(&matrix(&z4(), 3, 3, &[0, 0, 2, 0, 1, 1, 1, 0, 1]))
            .unwrap(),
    );
    let mut positives = 0;
    let mut negatives = 0;
    for omega in &scan {
        let h = code_from_omega(omega).unwrap();
        let dual = LinearCode::span(h).unwrap();
        let dist = dual.hom_weight_distribution();
        let weights = dist.nonzero_weights();
        if weights.len() != 3 {
            continue;
        }
        let criterion =
            tss_criterion(omega.ring(), dual.length(), (weights[0], weights[1], weights[2]))
                .unwrap();
        let tss = is_tss(omega).is_ok();
        assert_eq!(tss, criterion, "equivalence failed for a {}-vector set", omega.len());
        if criterion {
            positives += 1;
        } else {
            negatives += 1;
        }
    }
    assert!(positives > 0, "no three-weight TSS instance in the scan");
    assert!(negatives > 0, "no three-weight non-TSS instance in the scan");
}

#[test]
fn tss_extension_closure() {
    // extending a golden TSS by any ideal level preserves the property
    let ring = z4();
    let base = OmegaSet::new(
        ring.clone(),
        vec![vec![ring.elem(1).unwrap()], vec![ring.elem(3).unwrap()]],
    )
    .unwrap();
    let golden = OmegaSet::from_pcheck_columns(&tss_pcheck()).unwrap();
    for omega in [base, golden] {
        assert!(is_tss(&omega).is_ok());
        for j in 0..ring.m() {
            let ext = extend_omega(&omega, j).unwrap();
            assert_eq!(
                ext.len(),
                omega.len() * ring.ideal_elements(j).unwrap().len()
            );
            assert!(is_tss(&ext).is_ok(), "extension at level {j} lost the property");
        }
    }
}

#[test]
fn srg_verification_implies_walk_regularity() {
    let code = LinearCode::span(y_matrix(&z4(), 2).unwrap()).unwrap();
    let graph = coset_graph(&code, 6).unwrap();
    verify_srg(&graph).unwrap();
    for ell in 2..=4 {
        assert!(verify_swrg(&graph, ell).is_ok());
    }
}

#[test]
fn dual_cardinality_and_double_dual() {
    let r = z4();
    let codes: Vec<LinearCode> = vec![
        LinearCode::span(y_matrix(&r, 1).unwrap()).unwrap(),
        LinearCode::span(matrix(&r, 1, 2, &[1, 1])).unwrap(),
        LinearCode::span(matrix(&r, 1, 1, &[2])).unwrap(),
        LinearCode::span(matrix(&r, 1, 3, &[1, 2, 3])).unwrap(),
        LinearCode::span(matrix(&r, 2, 4, &[1, 0, 1, 1, 0, 1, 2, 3])).unwrap(),
    ];
    for code in codes {
        let dual = code.dual_bruteforce().unwrap();
        let ambient = (code.ring().size() as u128).pow(code.length() as u32);
        assert_eq!(code.card() as u128 * dual.card() as u128, ambient);
        let double = dual.dual_bruteforce().unwrap();
        assert_eq!(double.words(), code.words());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn digits_round_trip(ring_idx in 0usize..24, raw in 0u64..81) {
        let rings = small_rings();
        let ring = &rings[ring_idx % rings.len()];
        let idx = raw % ring.size();
        let x = ring.elem(idx).unwrap();
        prop_assert_eq!(ring.from_digits(&ring.digits(x)).unwrap(), x);
    }

    #[test]
    fn matrix_file_round_trip(
        ring_idx in 0usize..24,
        rows in 1usize..4,
        cols in 1usize..6,
        seed in any::<u64>(),
    ) {
        let rings = small_rings();
        let ring = &rings[ring_idx % rings.len()];
        let mut state = seed;
        let entries: Vec<u64> = (0..rows * cols)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) % ring.size()
            })
            .collect();
        let mat = matrix(ring, rows, cols, &entries);
        let text = write_matrix(&mat).unwrap();
        let back = read_matrix(&text).unwrap();
        prop_assert_eq!(back, mat);
    }

    #[test]
    fn span_is_closed(
        rows in 1usize..3,
        cols in 1usize..4,
        seed in any::<u64>(),
    ) {
        let ring = z4();
        let mut state = seed;
        let entries: Vec<u64> = (0..rows * cols)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) % 4
            })
            .collect();
        let code = LinearCode::span(matrix(&ring, rows, cols, &entries)).unwrap();
        let words: HashSet<&Vec<Elem>> = code.words().iter().collect();
        for a in code.words() {
            for b in code.words() {
                prop_assert!(words.contains(&ring.vec_add(a, b)));
            }
            for s in ring.elements() {
                prop_assert!(words.contains(&ring.vec_scale(s, a)));
            }
        }
    }

    #[test]
    fn minimality_invariant_under_permutation(seed in any::<u64>()) {
        // build a small random binary image and a coordinate rotation
        let mut state = seed;
        let mut image: Vec<Vec<u64>> = (0..12)
            .map(|_| {
                (0..6)
                    .map(|_| {
                        state = state
                            .wrapping_mul(6364136223846793005)
                            .wrapping_add(1442695040888963407);
                        (state >> 33) % 2
                    })
                    .collect()
            })
            .collect();
        image.push(vec![0; 6]);
        image.sort_unstable();
        image.dedup();
        let rotate = |v: &Vec<u64>| -> Vec<u64> {
            let mut w = v.clone();
            w.rotate_left(2);
            w
        };
        let rotated: Vec<Vec<u64>> = image.iter().map(rotate).collect();
        let mut a: Vec<Vec<u64>> = minimal_codewords(&image).unwrap().iter().map(rotate).collect();
        a.sort_unstable();
        let b = minimal_codewords(&rotated).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn extension_omega_matches_pcheck_route() {
    // building the extended parity-check two ways gives the same analysis:
    // extend the omega set then take orbit representatives, or extend the
    // matrix of representatives directly
    let omega = OmegaSet::from_pcheck_columns(&tss_pcheck()).unwrap();
    let ext = extend_omega(&omega, 1).unwrap();
    let h_from_omega = code_from_omega(&ext).unwrap();
    let direct = extend_generator(&tss_pcheck(), 1).unwrap();
    let a = LinearCode::span(h_from_omega).unwrap();
    let b = LinearCode::span(direct).unwrap();
    assert_eq!(a.hom_weight_distribution(), b.hom_weight_distribution());
    assert_eq!(a.card(), b.card());
}

#[test]
fn gray_image_cardinality_and_distribution_match() {
    for gen in [y_matrix(&z4(), 2).unwrap(), y_matrix(&z8(), 2).unwrap()] {
        let code = LinearCode::span(gen).unwrap();
        let image = gray_image(&code).unwrap();
        assert_eq!(image.vectors.len() as u64, code.card());
        assert_eq!(image.hamming_distribution, code.hom_weight_distribution());
    }
}

#[test]
fn omega_set_rejects_scaled_down_columns() {
    // a column with no unit coordinate cannot enter an omega set
    let r = z4();
    let h = matrix(&r, 2, 2, &[2, 1, 0, 1]);
    assert!(OmegaSet::from_pcheck_columns(&h).is_err());
    let ok = matrix(&r, 2, 2, &[1, 1, 0, 1]);
    assert!(OmegaSet::from_pcheck_columns(&ok).is_ok());
}

#[test]
fn arc_sharing_is_cheap() {
    let ring = z4();
    let other: RingRef = Arc::new(chaincodes::ring::Ring::zpm(2, 2).unwrap());
    assert_eq!(*ring, *other);
    assert!(ring.require_same(&other).is_ok());
    let z8 = z8();
    assert!(ring.require_same(&z8).is_err());
}
