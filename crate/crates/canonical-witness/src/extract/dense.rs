//! Extraction from a dense rake: a canonical graph of order at least s, or a
//! biclique of order q.
//!
//! The stages follow the dense-rake analysis: make the base induced (or win
//! a biclique outright), re-root the teeth on the induced path, split the
//! teeth into a clique or an independent set, run the windowed pigeonhole
//! over a middle region, and close with the far-teeth hole / H-graph
//! endgame. Every threshold here is desk-scale: the algorithm works with
//! whatever material the rake actually has and reports the first
//! unsatisfiable step when nothing fits.

use crate::canonical::CanonicalDescriptor;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::SearchLimits;
use crate::oracle;

use super::rake::hgraph_witness;
use super::{rake_violation, CanonicalWitness, RakeEmbedding, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DenseOutcome {
    Canonical(CanonicalWitness),
    Biclique(Vec<usize>, Vec<usize>),
}

pub fn canonical_from_dense_rake(
    g: &Graph,
    rake: &RakeEmbedding,
    s: usize,
    q: usize,
    limits: &SearchLimits,
) -> Result<DenseOutcome> {
    if s < 2 || q == 0 {
        return Err(Error::malformed("extraction requires s >= 2 and q >= 1"));
    }
    if rake.density.is_none() {
        return Err(Error::malformed("input rake carries no density parameter"));
    }
    if let Some(v) = rake_violation(g, rake) {
        return Err(Error::malformed(format!("invalid input rake: {v}")));
    }

    // --- stage 1: induced base, or a biclique hiding in the base ---------
    let (p_path, teeth) = induced_base_and_teeth(g, rake, q, limits)?;
    let (p_path, teeth) = match (p_path, teeth) {
        (BaseOutcome::Biclique(a, b), _) => return Ok(DenseOutcome::Biclique(a, b)),
        (BaseOutcome::Path(p), t) => (p, t),
    };
    if teeth.is_empty() {
        return Err(Error::insufficient("no teeth survive on the induced base"));
    }

    // --- stage 2: teeth clique or independent set ------------------------
    let tooth_vertices: Vec<usize> = teeth.iter().map(|&(t, _)| t).collect();
    let (tooth_sub, tooth_map) = g.induced_subgraph(&tooth_vertices)?;
    if tooth_vertices.len() >= 2 * q {
        if let Some(clique) = oracle::find_clique(&tooth_sub, 2 * q, limits)? {
            let verts: Vec<usize> = clique.iter().map(|&i| tooth_map[i]).collect();
            let (a, b) = (verts[..q].to_vec(), verts[q..].to_vec());
            return Ok(DenseOutcome::Biclique(a, b));
        }
    }
    let independent = max_independent_set(&tooth_sub);
    let teeth: Vec<(usize, usize)> = independent
        .iter()
        .map(|&i| {
            let v = tooth_map[i];
            *teeth.iter().find(|&&(t, _)| t == v).expect("filtered tooth exists")
        })
        .collect();
    let mut teeth = teeth;
    teeth.sort_by_key(|&(_, r)| r);

    // --- stage 3: windowed pigeonhole over a middle region ---------------
    if let Some(outcome) = windowed_analysis(g, &p_path, &teeth, s, q)? {
        return Ok(outcome);
    }

    // --- stage 4: generalized far-teeth scans -----------------------------
    if let Some(outcome) = hole_scan(g, &p_path, &teeth, s)? {
        return Ok(outcome);
    }
    if let Some(outcome) = hgraph_scan(g, &p_path, &teeth, s)? {
        return Ok(outcome);
    }

    Err(Error::insufficient(format!(
        "rake too small for every branch: {} teeth on a {}-vertex induced base cannot host a \
         canonical graph of order {s} or a biclique of order {q}",
        teeth.len(),
        p_path.len()
    )))
}

enum BaseOutcome {
    Path(Vec<usize>),
    Biclique(Vec<usize>, Vec<usize>),
}

/// Stage 1: if the base is chordless it is the induced path P; otherwise the
/// base's own graph either contains the biclique outright or a longest
/// induced path replaces the base, with teeth re-rooted on it (block
/// successors plus surviving original teeth).
fn induced_base_and_teeth(
    g: &Graph,
    rake: &RakeEmbedding,
    q: usize,
    limits: &SearchLimits,
) -> Result<(BaseOutcome, Vec<(usize, usize)>)> {
    let base = &rake.base;
    if g.is_chordless_path(base) {
        let teeth: Vec<(usize, usize)> = rake.teeth.clone();
        return Ok((BaseOutcome::Path(base.clone()), teeth));
    }

    let (sub, map) = g.induced_subgraph(base)?;
    if let Some((a, b)) = oracle::find_biclique(&sub, q, q, limits)? {
        let a: Vec<usize> = a.iter().map(|&i| map[i]).collect();
        let b: Vec<usize> = b.iter().map(|&i| map[i]).collect();
        return Ok((BaseOutcome::Biclique(a, b), Vec::new()));
    }
    let p_local = oracle::longest_induced_path(&sub, limits)?;
    let p_path: Vec<usize> = p_local.iter().map(|&i| map[i]).collect();

    // blocks: maximal runs of consecutive base positions inside P
    let pos_in_base: std::collections::HashMap<usize, usize> =
        base.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let in_p: std::collections::HashSet<usize> = p_path.iter().copied().collect();
    let mut teeth: Vec<(usize, usize)> = Vec::new();
    let mut claimed: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let mut i = 0;
    while i < base.len() {
        if in_p.contains(&base[i]) {
            let mut j = i;
            while j + 1 < base.len() && in_p.contains(&base[j + 1]) {
                j += 1;
            }
            // the vertex immediately following the block roots a new tooth
            if j + 1 < base.len() && !claimed.contains(&base[j + 1]) {
                let root_pos_in_p = p_path.iter().position(|&v| v == base[j]).unwrap();
                teeth.push((base[j + 1], root_pos_in_p));
                claimed.insert(base[j + 1]);
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    // original teeth whose root survives on P
    for &(t, r) in &rake.teeth {
        if in_p.contains(&t) || claimed.contains(&t) {
            continue;
        }
        if let Some(pos) = p_path.iter().position(|&v| v == base[r]) {
            teeth.push((t, pos));
            claimed.insert(t);
        }
    }
    let _ = pos_in_base;
    // distinct roots: keep the least tooth per root
    teeth.sort_by_key(|&(t, r)| (r, t));
    teeth.dedup_by_key(|&mut (_, r)| r);
    Ok((BaseOutcome::Path(p_path), teeth))
}

/// Exact maximum independent set, lexicographically least among maxima.
fn max_independent_set(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    fn alpha(g: &Graph, forced: &[usize], from: usize) -> usize {
        // branch and bound on vertices from `from`, `forced` already chosen
        fn rec(g: &Graph, chosen: &mut Vec<usize>, v: usize, best: &mut usize) {
            let n = g.vertex_count();
            if chosen.len() + (n - v.min(n)) <= *best {
                return;
            }
            if v == n {
                *best = (*best).max(chosen.len());
                return;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                rec(g, chosen, v + 1, best);
                chosen.pop();
            }
            rec(g, chosen, v + 1, best);
        }
        let mut chosen = forced.to_vec();
        let mut best = chosen.len();
        rec(g, &mut chosen, from, &mut best);
        best
    }
    let target = alpha(g, &[], 0);
    let mut chosen: Vec<usize> = Vec::new();
    for v in 0..n {
        if chosen.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        chosen.push(v);
        if alpha(g, &chosen, v + 1) < target {
            chosen.pop();
        }
    }
    debug_assert_eq!(chosen.len(), target);
    chosen
}

/// Stage 3: place a middle region M of w windows of size s between left and
/// right tooth groups, run the pigeonhole biclique when q windows fit per
/// side, then the selected-teeth hole / H-graph closures.
fn windowed_analysis(
    g: &Graph,
    p: &[usize],
    teeth: &[(usize, usize)],
    s: usize,
    q: usize,
) -> Result<Option<DenseOutcome>> {
    let t_count = teeth.len();
    if t_count < 4 {
        return Ok(None);
    }
    let plen = p.len();
    let max_w = 2 * q;
    for w in (2..=max_w).rev() {
        let span = w * s;
        if span >= plen {
            continue;
        }
        // first start position with two roots on each side
        let placement = (0..plen - span).find(|&start| {
            let left = teeth.iter().filter(|&&(_, r)| r < start).count();
            let right = teeth.iter().filter(|&&(_, r)| r >= start + span).count();
            left >= 2 && right >= 2
        });
        let Some(start) = placement else { continue };
        let windows: Vec<(usize, usize)> =
            (0..w).map(|x| (start + x * s, start + (x + 1) * s)).collect();
        let wl = w.div_ceil(2);
        let wr = w / 2;
        // T_1 skips the very first tooth, T_2 the very last
        let t1: Vec<usize> = (1..t_count).filter(|&i| teeth[i].1 < start).collect();
        let t2: Vec<usize> =
            (0..t_count - 1).filter(|&i| teeth[i].1 >= start + span).collect();
        if t1.is_empty() || t2.is_empty() {
            continue;
        }
        let nbrs_in = |tooth: usize, win: (usize, usize)| -> Option<usize> {
            (win.0..win.1).find(|&pos| g.has_edge(tooth, p[pos]))
        };
        // pigeonhole bicliques need q windows per side
        if wl >= q && wr >= q {
            for (group, wins) in [(&t1, &windows[..q]), (&t2, &windows[w - q..])] {
                let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
                for &ti in group.iter() {
                    let tooth = teeth[ti].0;
                    let tuple: Option<Vec<usize>> =
                        wins.iter().map(|&win| nbrs_in(tooth, win).map(|pos| p[pos])).collect();
                    let Some(tuple) = tuple else { continue };
                    let slot = classes.iter().position(|(t, _)| *t == tuple);
                    let slot = match slot {
                        Some(x) => x,
                        None => {
                            classes.push((tuple, Vec::new()));
                            classes.len() - 1
                        }
                    };
                    classes[slot].1.push(tooth);
                    if classes[slot].1.len() == q {
                        let side_a = classes[slot].1.clone();
                        let mut side_b = classes[slot].0.clone();
                        side_b.sort_unstable();
                        return Ok(Some(DenseOutcome::Biclique(side_a, side_b)));
                    }
                }
            }
        }
        // teeth with an empty window on their side of M
        let empty_left = t1.iter().find_map(|&ti| {
            (0..wl).find(|&x| nbrs_in(teeth[ti].0, windows[x]).is_none()).map(|x| (ti, x))
        });
        let empty_right = t2.iter().find_map(|&ti| {
            (w - wr..w).find(|&y| nbrs_in(teeth[ti].0, windows[y]).is_none()).map(|y| (ti, y))
        });
        let (Some((ai, x)), Some((bi, y))) = (empty_left, empty_right) else {
            continue;
        };
        debug_assert!(x < y);
        let t_a = teeth[ai].0;
        let t_b = teeth[bi].0;
        // hole closure: a neighbour on the far side of the empty window
        for (tooth, win, look_right) in [(t_a, windows[x], true), (t_b, windows[y], false)] {
            if let Some(out) = tooth_gap_hole(g, p, tooth, win, look_right, s)? {
                return Ok(Some(out));
            }
        }
        // H-graph endgame on the far pair
        let np_a: Vec<usize> = (0..plen).filter(|&i| g.has_edge(t_a, p[i])).collect();
        let np_b: Vec<usize> = (0..plen).filter(|&i| g.has_edge(t_b, p[i])).collect();
        let (Some(&i), Some(&j)) = (np_a.last(), np_b.first()) else { continue };
        if i >= 1 && j + 2 <= plen && i < j && j - i + 1 >= s && !g.has_edge(t_a, t_b) {
            let cw = hgraph_witness(g, &p[i..=j], (t_a, p[i - 1]), (t_b, p[j + 1]))?;
            return Ok(Some(DenseOutcome::Canonical(cw)));
        }
    }
    Ok(None)
}

/// A tooth with a neighbour on the far side of an empty window closes a
/// chordless cycle spanning the window.
fn tooth_gap_hole(
    g: &Graph,
    p: &[usize],
    tooth: usize,
    window: (usize, usize),
    look_right: bool,
    s: usize,
) -> Result<Option<DenseOutcome>> {
    let np: Vec<usize> = (0..p.len()).filter(|&i| g.has_edge(tooth, p[i])).collect();
    let (lo, hi) = if look_right {
        let Some(&u_l) = np.iter().rev().find(|&&i| i < window.0) else { return Ok(None) };
        let Some(&u_r) = np.iter().find(|&&i| i >= window.1) else { return Ok(None) };
        (u_l, u_r)
    } else {
        let Some(&u_r) = np.iter().find(|&&i| i >= window.1) else { return Ok(None) };
        let Some(&u_l) = np.iter().rev().find(|&&i| i < window.0) else { return Ok(None) };
        (u_l, u_r)
    };
    // tighten to the consecutive pair flanking the window
    let u_l = np.iter().rev().find(|&&i| i < window.0).copied().unwrap_or(lo);
    let u_r = np.iter().find(|&&i| i >= window.1).copied().unwrap_or(hi);
    let len = u_r - u_l + 2;
    if len < s.max(4) {
        return Ok(None);
    }
    let mut cycle = vec![tooth];
    cycle.extend_from_slice(&p[u_l..=u_r]);
    let cw = CanonicalWitness {
        descriptor: CanonicalDescriptor::Hole { order: cycle.len() },
        embedding: cycle,
    };
    super::verify_witness(g, &Witness::Canonical(cw.clone())).map_err(|e| {
        Error::malformed(format!("internal: windowed hole failed validation: {e}"))
    })?;
    Ok(Some(DenseOutcome::Canonical(cw)))
}

/// Stage 4a: any tooth whose consecutive base-neighbour gap spans s closes a
/// hole directly.
fn hole_scan(
    g: &Graph,
    p: &[usize],
    teeth: &[(usize, usize)],
    s: usize,
) -> Result<Option<DenseOutcome>> {
    let need = s.max(4);
    for &(tooth, _) in teeth {
        let np: Vec<usize> = (0..p.len()).filter(|&i| g.has_edge(tooth, p[i])).collect();
        for pair in np.windows(2) {
            let len = pair[1] - pair[0] + 2;
            if len >= need {
                let mut cycle = vec![tooth];
                cycle.extend_from_slice(&p[pair[0]..=pair[1]]);
                let cw = CanonicalWitness {
                    descriptor: CanonicalDescriptor::Hole { order: cycle.len() },
                    embedding: cycle,
                };
                super::verify_witness(g, &Witness::Canonical(cw.clone())).map_err(|e| {
                    Error::malformed(format!("internal: scanned hole failed validation: {e}"))
                })?;
                return Ok(Some(DenseOutcome::Canonical(cw)));
            }
        }
    }
    Ok(None)
}

/// Stage 4b: the far-teeth H-graph over all tooth pairs, taking the pair
/// that maximizes the body and hence the order.
fn hgraph_scan(
    g: &Graph,
    p: &[usize],
    teeth: &[(usize, usize)],
    s: usize,
) -> Result<Option<DenseOutcome>> {
    let plen = p.len();
    let neighbour_positions = |tooth: usize| -> Vec<usize> {
        (0..plen).filter(|&i| g.has_edge(tooth, p[i])).collect()
    };
    let mut best: Option<(usize, usize, usize, usize, usize)> = None; // (order, ai, bi, i, j)
    for ai in 0..teeth.len() {
        for bi in 0..teeth.len() {
            if ai == bi {
                continue;
            }
            let t_a = teeth[ai].0;
            let t_b = teeth[bi].0;
            if g.has_edge(t_a, t_b) {
                continue;
            }
            let np_a = neighbour_positions(t_a);
            let np_b = neighbour_positions(t_b);
            let (Some(&i), Some(&j)) = (np_a.last(), np_b.first()) else { continue };
            if i < 1 || j + 2 > plen || i >= j {
                continue;
            }
            let order = j - i + 1;
            if order < s {
                continue;
            }
            let candidate = (order, ai, bi, i, j);
            let better = match best {
                None => true,
                Some((bo, bai, bbi, ..)) => {
                    (order, std::cmp::Reverse(ai), std::cmp::Reverse(bi))
                        > (bo, std::cmp::Reverse(bai), std::cmp::Reverse(bbi))
                }
            };
            if better {
                best = Some(candidate);
            }
        }
    }
    let Some((_, ai, bi, i, j)) = best else { return Ok(None) };
    let t_a = teeth[ai].0;
    let t_b = teeth[bi].0;
    let cw = hgraph_witness(g, &p[i..=j], (t_a, p[i - 1]), (t_b, p[j + 1]))?;
    Ok(Some(DenseOutcome::Canonical(cw)))
}
