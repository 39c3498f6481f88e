//! JSON report assembly. All maps are serde_json's default BTreeMap-backed
//! objects, so keys serialize sorted and reports are byte-stable for golden
//! tests.

use serde_json::{json, Value};

use crate::codes::{
    characterize_two_weight, is_plotkin_optimal, is_projective, is_regular, plotkin_bound, CodeMatrix,
    LinearCode, WeightDistribution,
};
use crate::error::{Error, Result};
use crate::graphs::{
    code_from_omega, complete_multipartite_profile, extend_omega, is_tss, tss_criterion,
    verify_srg, verify_swrg, Eigenvalue, Graph, OmegaSet,
};
use crate::gray::gray_image;
use crate::minimality::{ab_condition, minimal_codewords};
use crate::ring::Ring;

fn distribution_json(dist: &WeightDistribution) -> Value {
    Value::Array(
        dist.pairs()
            .into_iter()
            .map(|(w, c)| json!([w, c]))
            .collect(),
    )
}

fn eigenvalue_json(ev: Eigenvalue) -> Value {
    match ev {
        Eigenvalue::Int(v) => json!(v),
        surd => json!(surd.to_string()),
    }
}

/// Ring summary: parameters, sizes and ideal chain.
pub fn ring_info(ring: &Ring) -> Value {
    let ideal_sizes: Vec<u64> = (0..=ring.m()).map(|j| ring.q().pow(ring.m() - j)).collect();
    json!({
        "ring": ring.header(),
        "family": match ring.family() {
            crate::ring::Family::Zpm => "zpm",
            crate::ring::Family::Fqum => "fqum",
        },
        "p": ring.p(),
        "e": ring.e(),
        "m": ring.m(),
        "q": ring.q(),
        "size": ring.size(),
        "units": ring.size() - ring.size() / ring.q(),
        "ideal_sizes": ideal_sizes,
        "gamma": ring.gamma(),
    })
}

/// Options for [`analyze_matrix`].
#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub gray: bool,
    pub minimal: bool,
}

/// Span the matrix and report type, weight distribution, distance, the
/// regularity/projectivity/optimality flags and the two-weight
/// characterization, plus optional Gray image and minimality sections.
pub fn analyze_matrix(mat: &CodeMatrix, opts: AnalyzeOptions) -> Result<Value> {
    let code = LinearCode::span(mat.clone())?;
    let mut report = analyze_code(&code)?;
    if opts.gray || opts.minimal {
        let image = gray_image(&code)?;
        if opts.gray {
            report["gray"] = json!({
                "length": image.vectors[0].len(),
                "cardinality": image.vectors.len(),
                "hamming_distribution": distribution_json(&image.hamming_distribution),
                "linear": image.linear,
            });
        }
        if opts.minimal {
            let minimal = minimal_codewords(&image.vectors)?;
            let total = image.vectors.len() - 1;
            let ab = match (
                image.hamming_distribution.min_nonzero(),
                image.hamming_distribution.max_nonzero(),
            ) {
                (Some(min), Some(max)) => ab_condition(min, max, code.ring().q())?,
                _ => false,
            };
            report["minimality"] = json!({
                "total": total,
                "minimal": minimal.len(),
                "all_minimal": minimal.len() == total,
                "ab_condition": ab,
                "linear": image.linear,
            });
        }
    }
    Ok(report)
}

/// The codes-module analysis record for an already-enumerated code.
pub fn analyze_code(code: &LinearCode) -> Result<Value> {
    let ring = code.ring();
    let dist = code.hom_weight_distribution();
    let profile = code.code_type()?;
    let min_distance = code.min_hom_distance()?;
    let bound = plotkin_bound(ring, code.length(), code.card())?;
    let (regular, projective, optimal) = match code.generator() {
        Some(gen) => (
            Some(is_regular(gen)),
            Some(is_projective(gen)),
            Some(is_plotkin_optimal(code)?),
        ),
        None => (None, None, Some(min_distance == bound)),
    };
    let theorem_4_7 = match characterize_two_weight(code) {
        Ok(t47) => json!({
            "t": t47.t,
            "predicted_distribution": distribution_json(&t47.predicted),
        }),
        Err(Error::NotApplicable(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(json!({
        "ring": ring.header(),
        "n": code.length(),
        "type": profile.ks(),
        "qdim": profile.qdim(),
        "cardinality": code.card(),
        "weight_distribution": distribution_json(&dist),
        "min_distance": min_distance,
        "regular": regular,
        "projective": projective,
        "plotkin_bound": bound,
        "plotkin_optimal": optimal,
        "theorem_4_7": theorem_4_7,
    }))
}

/// Gray-image record mirroring the code analysis, with the Hamming
/// distribution and linearity flag at top level.
pub fn gray_report(mat: &CodeMatrix) -> Result<Value> {
    let code = LinearCode::span(mat.clone())?;
    let image = gray_image(&code)?;
    let mut report = analyze_code(&code)?;
    report["hamming_distribution"] = distribution_json(&image.hamming_distribution);
    report["linear"] = json!(image.linear);
    report["gray_length"] = json!(image.vectors[0].len());
    Ok(report)
}

/// Graph summary: verified SRG parameters (or the violation as a finding),
/// optional multipartite profile and optional walk-count verification.
pub fn graph_summary(graph: &Graph, swrg: bool) -> Value {
    let mut report = match verify_srg(graph) {
        Ok(params) => {
            let eigen = params
                .restricted_eigenvalues
                .map(|(a, b)| json!([eigenvalue_json(a), eigenvalue_json(b)]))
                .unwrap_or(Value::Null);
            let multipartite = complete_multipartite_profile(graph)
                .map(|(classes, size)| json!({"classes": classes, "class_size": size}))
                .unwrap_or(Value::Null);
            json!({
                "N": params.n,
                "K": params.k,
                "lambda": params.lambda,
                "mu": params.mu,
                "restricted_eigenvalues": eigen,
                "srg": true,
                "complete_multipartite": multipartite,
            })
        }
        Err(e) => json!({
            "N": graph.n(),
            "srg": false,
            "reason": e.to_string(),
        }),
    };
    if swrg {
        report["swrg3"] = match verify_swrg(graph, 3) {
            Ok(params) => json!({
                "lambda": params.lambda,
                "mu": params.mu,
                "nu": params.nu,
            }),
            Err(e) => json!({
                "swrg": false,
                "reason": e.to_string(),
            }),
        };
    }
    report
}

/// Triple-sum-set report: the brute-force check, the dual weight data and
/// the three-weight sum criterion, optionally repeated for an extension.
pub fn tss_report(omega: &OmegaSet, extend_j: Option<u32>) -> Result<Value> {
    let h = code_from_omega(omega)?;
    let dual = LinearCode::span(h.clone())?;
    let dist = dual.hom_weight_distribution();
    let weights = dist.nonzero_weights();
    let criterion = if weights.len() == 3 {
        json!(tss_criterion(omega.ring(), dual.length(), (weights[0], weights[1], weights[2]))?)
    } else {
        Value::Null
    };
    let tss = match is_tss(omega)? {
        (s0, s1) => json!({"is_tss": true, "sigma0": s0, "sigma1": s1}),
    };
    let mut report = json!({
        "k": omega.k(),
        "size": omega.len(),
        "orbit_count": h.cols(),
        "dual_length": dual.length(),
        "dual_weight_distribution": distribution_json(&dist),
        "tss_criterion": criterion,
    });
    for (key, value) in tss.as_object().unwrap() {
        report[key] = value.clone();
    }
    if let Some(j) = extend_j {
        let ext = extend_omega(omega, j)?;
        report["extended"] = tss_report(&ext, None)?;
    }
    Ok(report)
}

/// Like [`tss_report`] but reports a non-TSS witness as a finding instead
/// of an error.
pub fn tss_report_lenient(omega: &OmegaSet, extend_j: Option<u32>) -> Result<Value> {
    match tss_report(omega, extend_j) {
        Ok(v) => Ok(v),
        Err(Error::NotTss(witness)) => {
            let h = code_from_omega(omega)?;
            let dual = LinearCode::span(h.clone())?;
            let dist = dual.hom_weight_distribution();
            Ok(json!({
                "k": omega.k(),
                "size": omega.len(),
                "orbit_count": h.cols(),
                "dual_length": dual.length(),
                "dual_weight_distribution": distribution_json(&dist),
                "is_tss": false,
                "violation": witness,
            }))
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::y_matrix;
    use crate::ring::RingRef;
    use std::sync::Arc;

    #[test]
    fn analyze_y2_over_z4() {
        let ring: RingRef = Arc::new(Ring::zpm(2, 2).unwrap());
        let y2 = y_matrix(&ring, 2).unwrap();
        let report = analyze_matrix(&y2, AnalyzeOptions { gray: true, minimal: true }).unwrap();
        assert_eq!(report["n"], 6);
        assert_eq!(report["cardinality"], 16);
        assert_eq!(report["type"], json!([2, 0]));
        assert_eq!(report["weight_distribution"], json!([[0, 1], [6, 12], [8, 3]]));
        assert_eq!(report["min_distance"], 6);
        assert_eq!(report["plotkin_bound"], 6);
        assert_eq!(report["plotkin_optimal"], true);
        assert_eq!(report["regular"], true);
        assert_eq!(report["projective"], true);
        assert_eq!(report["theorem_4_7"]["t"], 2);
        assert_eq!(report["gray"]["hamming_distribution"], json!([[0, 1], [6, 12], [8, 3]]));
        assert_eq!(report["minimality"]["total"], 15);
        // deterministic serialization
        let again = analyze_matrix(&y2, AnalyzeOptions { gray: true, minimal: true }).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }

    #[test]
    fn graph_summary_reports_findings() {
        let mut g = Graph::new(3, vec![Vec::new(); 3]).unwrap();
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        let report = graph_summary(&g, true);
        assert_eq!(report["srg"], false);
        assert!(report["reason"].is_string());
        assert_eq!(report["swrg3"]["lambda"], 2);
    }
}
