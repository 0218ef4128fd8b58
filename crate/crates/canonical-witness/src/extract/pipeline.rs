//! The staged extraction pipeline: direct canonical search, then the
//! grid-minor / rake / densify chain, then the longest-path analysis as a
//! fallback. Stage order is part of the contract; the first verified
//! witness wins and resource limits are absorbed into the stage log.

use crate::canonical::{
    make_canonical, CanonicalConfig, CanonicalDescriptor, Tightness, HGRAPH_ABSOLUTE_MIN_ORDER,
};
use crate::graph::Graph;
use crate::limits::SearchLimits;
use crate::oracle;

use super::dense::{canonical_from_dense_rake, DenseOutcome};
use super::path::induced_path_or_biclique;
use super::rake::{densify_rake, rake_from_grid_model, DensifyOutcome};
use super::{verify_witness, CanonicalWitness, Witness};

/// Which stages to run. `Full` tries canonical search, the dense-rake
/// chain, and the path analysis in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineStage {
    Full,
    /// Only the longest-path analysis.
    PathOnly,
    /// Only the grid-minor / rake / densify / extraction chain.
    DenseRakeOnly,
}

/// Extracts a verified witness: a canonical graph of order at least `s`
/// (induced), a biclique of order `q` (subgraph), or an induced path, and
/// otherwise reports `Inconclusive` with a log of what each stage tried.
pub fn witness_pipeline(g: &Graph, s: usize, q: usize, limits: &SearchLimits) -> Witness {
    witness_pipeline_staged(g, s, q, limits, PipelineStage::Full)
}

pub fn witness_pipeline_staged(
    g: &Graph,
    s: usize,
    q: usize,
    limits: &SearchLimits,
    stage: PipelineStage,
) -> Witness {
    let mut log: Vec<String> = Vec::new();
    if s == 0 || q == 0 {
        return Witness::Inconclusive {
            reason: "s and q must be positive".into(),
            stage_log: log,
        };
    }

    if matches!(stage, PipelineStage::Full) {
        if let Some(w) = stage_canonical_search(g, s, limits, &mut log) {
            return checked(g, w, &mut log);
        }
    }
    if matches!(stage, PipelineStage::Full | PipelineStage::DenseRakeOnly) {
        if let Some(w) = stage_dense_rake(g, s, q, limits, &mut log, None) {
            return checked(g, w, &mut log);
        }
    }
    if matches!(stage, PipelineStage::Full | PipelineStage::PathOnly) {
        if let Some(w) = stage_longest_path(g, s, q, limits, &mut log) {
            return checked(g, w, &mut log);
        }
    }
    Witness::Inconclusive { reason: "no stage produced a witness".into(), stage_log: log }
}

/// The dense-rake chain with a caller-supplied grid-minor model, bypassing
/// the model search. This is the entry point for hosts whose grid structure
/// is known.
pub fn witness_pipeline_with_model(
    g: &Graph,
    s: usize,
    q: usize,
    model: &oracle::Embedding,
    k: usize,
    limits: &SearchLimits,
) -> Witness {
    let mut log = Vec::new();
    match stage_dense_rake(g, s, q, limits, &mut log, Some((model, k))) {
        Some(w) => checked(g, w, &mut log),
        None => Witness::Inconclusive {
            reason: "dense-rake chain produced no witness".into(),
            stage_log: log,
        },
    }
}

fn checked(g: &Graph, w: Witness, log: &mut Vec<String>) -> Witness {
    match verify_witness(g, &w) {
        Ok(()) => w,
        Err(v) => {
            log.push(format!("discarded an invalid witness: {v}"));
            Witness::Inconclusive {
                reason: "a stage produced an unverifiable witness".into(),
                stage_log: std::mem::take(log),
            }
        }
    }
}

/// Stage 1: direct oracle search for an induced canonical subgraph of order
/// at least s. Holes first, then H-graphs by ascending order, plain before
/// semi-tight before tight.
fn stage_canonical_search(
    g: &Graph,
    s: usize,
    limits: &SearchLimits,
    log: &mut Vec<String>,
) -> Option<Witness> {
    match oracle::find_hole(g, s.max(4), limits) {
        Ok(Some(cycle)) => {
            return Some(Witness::Canonical(CanonicalWitness {
                descriptor: CanonicalDescriptor::Hole { order: cycle.len() },
                embedding: cycle,
            }));
        }
        Ok(None) => log.push(format!("stage1: no hole of length >= {}", s.max(4))),
        Err(e) => log.push(format!("stage1: hole search hit a limit: {e}")),
    }
    let cfg = CanonicalConfig::with_h_min(HGRAPH_ABSOLUTE_MIN_ORDER);
    let n = g.vertex_count();
    let max_order = (n.saturating_sub(4)).min(limits.max_pattern_vertices.saturating_sub(4));
    let min_order = s.max(HGRAPH_ABSOLUTE_MIN_ORDER);
    if min_order > max_order {
        log.push(format!(
            "stage1: H-graph search infeasible (order {min_order} needs {} pattern vertices)",
            min_order + 4
        ));
        return None;
    }
    for order in min_order..=max_order {
        for tightness in Tightness::ALL {
            let d = CanonicalDescriptor::HGraph { order, tightness };
            let pattern = match make_canonical(&d, &cfg) {
                Ok(p) => p,
                Err(_) => continue,
            };
            match oracle::find_induced_embedding(g, &pattern, limits) {
                Ok(Some(oracle::Embedding::Induced(map))) => {
                    return Some(Witness::Canonical(CanonicalWitness {
                        descriptor: d,
                        embedding: map,
                    }));
                }
                Ok(_) => {}
                Err(e) => {
                    log.push(format!("stage1: {d} search hit a limit: {e}"));
                }
            }
        }
    }
    log.push(format!("stage1: no induced H-graph of order in {min_order}..={max_order}"));
    None
}

/// Stage 2: grid-minor model (searched or supplied) -> rake -> densify ->
/// dense-rake extraction.
fn stage_dense_rake(
    g: &Graph,
    s: usize,
    q: usize,
    limits: &SearchLimits,
    log: &mut Vec<String>,
    supplied: Option<(&oracle::Embedding, usize)>,
) -> Option<Witness> {
    let attempts: Vec<(oracle::Embedding, usize)> = match supplied {
        Some((model, k)) => vec![(model.clone(), k)],
        None => {
            let n = g.vertex_count();
            let mut ks: Vec<usize> = Vec::new();
            let isqrt = (1..=8).rev().find(|&k| k * k <= n).unwrap_or(1);
            for k in (3..=isqrt.min(4)).rev() {
                ks.push(k);
            }
            if ks.is_empty() {
                log.push(format!("stage2: host with {n} vertices is below any grid search"));
            }
            let mut found = Vec::new();
            for k in ks {
                match oracle::find_minor_model(g, &crate::graph::grid(k), limits) {
                    Ok(Some(model)) => {
                        found.push((model, k));
                        break;
                    }
                    Ok(None) => log.push(format!("stage2: no {k}x{k} grid minor")),
                    Err(e) => log.push(format!("stage2: {k}x{k} grid search hit a limit: {e}")),
                }
            }
            found
        }
    };
    for (model, k) in attempts {
        let rake = match rake_from_grid_model(g, &model, k) {
            Ok(r) => r,
            Err(e) => {
                log.push(format!("stage2: rake derivation failed: {e}"));
                continue;
            }
        };
        log.push(format!(
            "stage2: derived a {}-tooth rake on a {}-vertex base from the {k}x{k} model",
            rake.teeth.len(),
            rake.base.len()
        ));
        let dense = match densify_rake(g, &rake, s) {
            Ok(DensifyOutcome::Canonical(cw)) => {
                log.push("stage2: densify surfaced a canonical graph".into());
                return Some(Witness::Canonical(cw));
            }
            Ok(DensifyOutcome::DenseRake(d)) => d,
            Err(e) => {
                log.push(format!("stage2: densify failed: {e}"));
                continue;
            }
        };
        log.push(format!(
            "stage2: densified to {} teeth on a {}-vertex base",
            dense.teeth.len(),
            dense.base.len()
        ));
        match canonical_from_dense_rake(g, &dense, s, q, limits) {
            Ok(DenseOutcome::Canonical(cw)) => return Some(Witness::Canonical(cw)),
            Ok(DenseOutcome::Biclique(a, b)) => return Some(Witness::Biclique(a, b)),
            Err(e) => log.push(format!("stage2: dense-rake extraction failed: {e}")),
        }
    }
    None
}

/// Stage 3: exact longest path into the split analysis. The pipeline's q is
/// a biclique order (sides q and q), so the analysis runs with 2q.
fn stage_longest_path(
    g: &Graph,
    s: usize,
    q: usize,
    limits: &SearchLimits,
    log: &mut Vec<String>,
) -> Option<Witness> {
    let lp = match oracle::longest_path(g, limits) {
        Ok(p) => p,
        Err(e) => {
            log.push(format!("stage3: longest path unavailable: {e}"));
            return None;
        }
    };
    match induced_path_or_biclique(g, &lp, s, 2 * q, limits) {
        Ok(Witness::Inconclusive { reason, .. }) => {
            log.push(format!("stage3: path analysis inconclusive: {reason}"));
            None
        }
        Ok(w) => Some(w),
        Err(e) => {
            log.push(format!("stage3: path analysis failed: {e}"));
            None
        }
    }
}
