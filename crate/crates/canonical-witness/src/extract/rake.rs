//! Rake machinery: deriving a rake from a grid-minor model, the wing-to-wing
//! shortening analysis on embedded H-graphs, and the glue procedure that
//! turns any rake into a dense one or surfaces a canonical subgraph.

use crate::canonical::{CanonicalConfig, CanonicalDescriptor, Tightness, HGRAPH_ABSOLUTE_MIN_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{validate_embedding, Embedding};

use super::{rake_violation, CanonicalWitness, HGraphEmbedding, RakeEmbedding};

// ============================================================================
// Rake from a grid-minor model
// ============================================================================

/// Builds a k-rake from a k x k grid-minor model: branch sets of the first
/// grid row become base material (connected by least witness edges), the
/// second row supplies teeth where a row-one branch set is fully consumed by
/// the base.
pub fn rake_from_grid_model(g: &Graph, model: &Embedding, k: usize) -> Result<RakeEmbedding> {
    if k < 2 {
        return Err(Error::malformed("grid side must be at least 2"));
    }
    let pattern = crate::graph::grid(k);
    validate_embedding(g, &pattern, model).map_err(|e| {
        Error::malformed(format!("invalid grid model: {e}"))
    })?;
    let sets = match model {
        Embedding::Minor(sets) => sets,
        _ => return Err(Error::malformed("grid model must be a minor embedding")),
    };
    let row0: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let mut s = sets[c].clone();
            s.sort_unstable();
            s
        })
        .collect();
    let row1: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let mut s = sets[k + c].clone();
            s.sort_unstable();
            s
        })
        .collect();

    // witness edges x_i -- y_{i+1} between consecutive row-0 branch sets
    let mut x = vec![usize::MAX; k];
    let mut y = vec![usize::MAX; k];
    for i in 0..k - 1 {
        let mut found = false;
        'scan: for &a in &row0[i] {
            for &b in &row0[i + 1] {
                if g.has_edge(a, b) {
                    x[i] = a;
                    y[i + 1] = b;
                    found = true;
                    break 'scan;
                }
            }
        }
        if !found {
            return Err(Error::malformed(format!(
                "no edge between row-0 branch sets {i} and {}",
                i + 1
            )));
        }
    }

    // connecting paths inside each row-0 branch set
    let mut base = Vec::new();
    let mut piece_ranges = Vec::with_capacity(k);
    for i in 0..k {
        let piece: Vec<usize> = if i == 0 {
            vec![x[0]]
        } else if i == k - 1 {
            vec![y[k - 1]]
        } else {
            shortest_path_within(g, &row0[i], y[i], x[i]).ok_or_else(|| {
                Error::malformed(format!("row-0 branch set {i} is not connected"))
            })?
        };
        let start = base.len();
        base.extend_from_slice(&piece);
        piece_ranges.push(start..base.len());
    }

    // one tooth per column
    let mut teeth = Vec::with_capacity(k);
    for i in 0..k {
        let piece = &base[piece_ranges[i].clone()];
        let fully_used = piece.len() == row0[i].len();
        let pool: Vec<usize> = if fully_used {
            row1[i].clone()
        } else {
            row0[i].iter().copied().filter(|v| !piece.contains(v)).collect()
        };
        let tooth = pool
            .iter()
            .copied()
            .find(|&t| piece.iter().any(|&p| g.has_edge(t, p)))
            .ok_or_else(|| {
                Error::malformed(format!("no tooth candidate adjacent to base piece {i}"))
            })?;
        let root_local = piece
            .iter()
            .position(|&p| g.has_edge(tooth, p))
            .expect("tooth choice guarantees a root");
        teeth.push((tooth, piece_ranges[i].start + root_local));
    }
    teeth.sort_by_key(|&(_, r)| r);

    let rake = RakeEmbedding { base, teeth, density: None };
    if let Some(v) = rake_violation(g, &rake) {
        return Err(Error::malformed(format!("internal: derived rake invalid: {v}")));
    }
    Ok(rake)
}

/// Lexicographically least shortest path between two vertices inside an
/// allowed vertex set.
fn shortest_path_within(g: &Graph, allowed: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut ok = vec![false; g.vertex_count()];
    for &v in allowed {
        ok[v] = true;
    }
    if !ok[from] || !ok[to] {
        return None;
    }
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from] = true;
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut out = vec![to];
            let mut cur = to;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                out.push(cur);
            }
            out.reverse();
            return Some(out);
        }
        for w in g.neighbors(v) {
            if ok[w] && !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

// ============================================================================
// Shortening an embedded H-graph
// ============================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShortenOutcome {
    /// Wing-to-wing path with all intermediate vertices on the body;
    /// between 2 and s+1 edges.
    ShortPath(Vec<usize>),
    /// An induced canonical subgraph of order at least s.
    Canonical(CanonicalWitness),
}

/// The dichotomy on an embedded H-graph with chordless body: either a short
/// wing-to-wing connection exists, or the minimal wing-neighbourhood window
/// is long and its closure is a hole or an induced H-graph of order >= s.
pub fn shorten_hgraph(g: &Graph, h: &HGraphEmbedding, s: usize) -> Result<ShortenOutcome> {
    if s < 2 {
        return Err(Error::malformed("shortening requires s >= 2"));
    }
    validate_hgraph_embedding(g, h)?;
    let body = &h.body;
    let m = body.len();
    let wings_l = [h.left_wings.0, h.left_wings.1];
    let wings_r = [h.right_wings.0, h.right_wings.1];

    // minimal window: over all wing pairs, the shortest body subpath
    // [i..=j] whose ends are the only neighbours of the chosen wings inside
    let nbrs_in_body = |w: usize| -> Vec<usize> {
        (0..m).filter(|&i| g.has_edge(w, body[i])).collect()
    };
    let mut best: Option<(usize, usize, usize, usize)> = None; // (t, pair, i, j)
    for pair_idx in 0..4 {
        let (w_left, w_right) = wr_pair(wings_l, wings_r, pair_idx);
        let nl = nbrs_in_body(w_left);
        let nr = nbrs_in_body(w_right);
        for &i in &nl {
            for &j in &nr {
                if j < i {
                    continue;
                }
                if nl.iter().any(|&p| p > i && p <= j) {
                    continue;
                }
                if nr.iter().any(|&p| p >= i && p < j) {
                    continue;
                }
                let t = j - i;
                if best.is_none_or(|(bt, bp, bi, _)| (t, pair_idx, i) < (bt, bp, bi)) {
                    best = Some((t, pair_idx, i, j));
                }
            }
        }
    }
    let (t, pair_idx, i, j) = best.expect("a window always exists: both wings touch the body");
    let (w_left, w_right) = wr_pair(wings_l, wings_r, pair_idx);

    if t + 2 <= s + 1 {
        let mut path = vec![w_left];
        path.extend_from_slice(&body[i..=j]);
        path.push(w_right);
        return Ok(ShortenOutcome::ShortPath(path));
    }

    // long window: assemble the four flanking vertices
    let other_left = if w_left == wings_l[0] { wings_l[1] } else { wings_l[0] };
    let other_right = if w_right == wings_r[0] { wings_r[1] } else { wings_r[0] };
    let a = w_left;
    let b = if i == 0 { other_left } else { body[i - 1] };
    let c = w_right;
    let d = if j == m - 1 { other_right } else { body[j + 1] };

    // any adjacency across the flanks closes a chordless cycle
    for (p, r) in [(a, c), (a, d), (b, c), (b, d)] {
        if g.has_edge(p, r) {
            let mut cycle = vec![p];
            cycle.extend_from_slice(&body[i..=j]);
            cycle.push(r);
            let cw = CanonicalWitness {
                descriptor: CanonicalDescriptor::Hole { order: cycle.len() },
                embedding: cycle,
            };
            super::verify_witness(g, &super::Witness::Canonical(cw.clone())).map_err(|e| {
                Error::malformed(format!("internal: shortening produced an invalid hole: {e}"))
            })?;
            return Ok(ShortenOutcome::Canonical(cw));
        }
    }

    // otherwise the window plus flanks induces an H-graph of order t+1 >= s+1
    let cw = hgraph_witness(g, &body[i..=j], (a, b), (c, d))?;
    Ok(ShortenOutcome::Canonical(cw))
}

fn wr_pair(wings_l: [usize; 2], wings_r: [usize; 2], pair_idx: usize) -> (usize, usize) {
    let (li, ri) = [(0, 0), (0, 1), (1, 0), (1, 1)][pair_idx];
    (wings_l[li], wings_r[ri])
}

fn validate_hgraph_embedding(g: &Graph, h: &HGraphEmbedding) -> Result<()> {
    let body = &h.body;
    if body.len() < 2 {
        return Err(Error::malformed("H-graph body needs at least 2 vertices"));
    }
    if let Some(v) = g.chordless_path_violation(body) {
        return Err(Error::malformed(format!("body is not a chordless path: {v}")));
    }
    let wings = [h.left_wings.0, h.left_wings.1, h.right_wings.0, h.right_wings.1];
    let mut sorted = wings.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 4 {
        return Err(Error::malformed("wings are not four distinct vertices"));
    }
    for &w in &wings {
        if w >= g.vertex_count() {
            return Err(Error::malformed(format!("wing {w} out of range")));
        }
        if body.contains(&w) {
            return Err(Error::malformed(format!("wing {w} lies on the body")));
        }
    }
    for w in [h.left_wings.0, h.left_wings.1] {
        if !g.has_edge(w, body[0]) {
            return Err(Error::malformed(format!("left wing {w} not adjacent to the body start")));
        }
    }
    for w in [h.right_wings.0, h.right_wings.1] {
        if !g.has_edge(w, *body.last().unwrap()) {
            return Err(Error::malformed(format!("right wing {w} not adjacent to the body end")));
        }
    }
    Ok(())
}

/// Builds and verifies an induced H-graph witness from a body window and its
/// flanking wing pairs, detecting tightness from the host and normalizing
/// the orientation so a single attached wing pair sits on the canonical
/// right side.
pub(super) fn hgraph_witness(
    g: &Graph,
    body: &[usize],
    left: (usize, usize),
    right: (usize, usize),
) -> Result<CanonicalWitness> {
    let left_tight = g.has_edge(left.0, left.1);
    let right_tight = g.has_edge(right.0, right.1);
    let (body_or, left_or, right_or, tightness) = match (left_tight, right_tight) {
        (false, false) => (body.to_vec(), left, right, Tightness::Plain),
        (false, true) => (body.to_vec(), left, right, Tightness::SemiTight),
        (true, false) => {
            let rev: Vec<usize> = body.iter().rev().copied().collect();
            (rev, right, left, Tightness::SemiTight)
        }
        (true, true) => (body.to_vec(), left, right, Tightness::Tight),
    };
    let order = body_or.len();
    let mut embedding = body_or;
    embedding.extend_from_slice(&[left_or.0, left_or.1, right_or.0, right_or.1]);
    let cw = CanonicalWitness {
        descriptor: CanonicalDescriptor::HGraph { order, tightness },
        embedding,
    };
    super::verify_witness(g, &super::Witness::Canonical(cw.clone())).map_err(|e| {
        Error::malformed(format!("internal: constructed H-graph failed validation: {e}"))
    })?;
    Ok(cw)
}

// ============================================================================
// Densifying a rake
// ============================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DensifyOutcome {
    /// An (s+5)-dense rake; with a (k+2)-tooth input, at least k teeth
    /// survive.
    DenseRake(RakeEmbedding),
    /// An induced canonical subgraph of order at least s surfaced by the
    /// per-gap shortening.
    Canonical(CanonicalWitness),
}

/// Glues the per-gap short paths of a rake into a dense rake, or returns the
/// canonical subgraph that obstructed some gap. The procedure: drop end
/// teeth and trim the base, cut every root-to-root segment to a chordless
/// path, shorten each consecutive-roots H-graph, then concatenate the short
/// paths with the junction case analysis, re-rooting as each case demands.
pub fn densify_rake(g: &Graph, rake: &RakeEmbedding, s: usize) -> Result<DensifyOutcome> {
    if s < 2 {
        return Err(Error::malformed("densify requires s >= 2"));
    }
    if let Some(v) = rake_violation(g, &RakeEmbedding { density: None, ..rake.clone() }) {
        return Err(Error::malformed(format!("invalid input rake: {v}")));
    }
    if rake.teeth.len() < 2 {
        return Err(Error::malformed("densify requires a rake with at least 2 teeth"));
    }

    // preprocessing: the first and last base vertices must not be roots
    let mut teeth: Vec<(usize, usize)> = rake.teeth.clone();
    let last = rake.base.len() - 1;
    teeth.retain(|&(_, r)| r != 0 && r != last);
    if teeth.len() < 2 {
        return Err(Error::insufficient(
            "fewer than 2 teeth survive the end preprocessing",
        ));
    }
    let first_root = teeth.first().unwrap().1;
    let last_root = teeth.last().unwrap().1;
    let base: Vec<usize> = rake.base[first_root - 1..=last_root + 1].to_vec();
    let offset = first_root - 1;
    let teeth: Vec<(usize, usize)> = teeth.into_iter().map(|(t, r)| (t, r - offset)).collect();

    // chord-cutting: replace every root-to-root segment by a shortest path
    // within its own vertices; the result is chordless segment by segment
    let mut new_base: Vec<usize> = vec![base[0]];
    let mut root_positions: Vec<usize> = Vec::with_capacity(teeth.len());
    for w in teeth.windows(2).map(Some).chain([None]) {
        match w {
            Some(pair) => {
                let (a, b) = (pair[0].1, pair[1].1);
                if root_positions.is_empty() {
                    root_positions.push(new_base.len());
                    new_base.push(base[a]);
                }
                let segment = shortest_path_within(g, &base[a..=b], base[a], base[b])
                    .expect("segment contains a path by construction");
                new_base.extend_from_slice(&segment[1..]);
                root_positions.push(new_base.len() - 1);
            }
            None => {
                if root_positions.is_empty() {
                    // single tooth can't reach here (len >= 2 checked)
                }
                new_base.push(*base.last().unwrap());
            }
        }
    }
    let base = new_base;
    let teeth: Vec<(usize, usize)> = teeth
        .iter()
        .zip(&root_positions)
        .map(|(&(t, _), &p)| (t, p))
        .collect();

    // per-gap H-graphs and their short paths
    let gap_count = teeth.len() - 1;
    let mut short_paths: Vec<Vec<usize>> = Vec::with_capacity(gap_count);
    for gi in 0..gap_count {
        let (t_l, p_l) = teeth[gi];
        let (t_r, p_r) = teeth[gi + 1];
        let h = HGraphEmbedding {
            body: base[p_l..=p_r].to_vec(),
            left_wings: (t_l, base[p_l - 1]),
            right_wings: (t_r, base[p_r + 1]),
        };
        match shorten_hgraph(g, &h, s)? {
            ShortenOutcome::Canonical(cw) => return Ok(DensifyOutcome::Canonical(cw)),
            ShortenOutcome::ShortPath(p) => short_paths.push(p),
        }
    }

    // glue the short paths left to right
    let mut current = short_paths[0].clone();
    let mut new_teeth: Vec<(usize, usize)> = Vec::new(); // (tooth vertex, root vertex) resolved later
    let mut junction_records: Vec<(usize, usize)> = Vec::new(); // (root vertex, tooth vertex)
    for j in 1..gap_count {
        let (tooth_j, pos_j) = teeth[j];
        let u_i = base[pos_j];
        let u_im1 = base[pos_j - 1];
        let u_ip1 = base[pos_j + 1];
        let v_i = tooth_j;
        normalize_right(g, &mut current, u_i, u_im1, u_ip1, v_i);
        let mut pr = short_paths[j].clone();
        normalize_left(g, &mut pr, u_i, u_im1, u_ip1, v_i);
        let l_has = current.contains(&u_i);
        let r_has = pr.contains(&u_i);
        let record: (usize, usize); // (root vertex, tooth vertex)
        match (l_has, r_has) {
            (true, true) => {
                debug_assert_eq!(current.last(), Some(&v_i));
                debug_assert_eq!(current.get(current.len() - 2), Some(&u_i));
                debug_assert_eq!(pr.first(), Some(&v_i));
                debug_assert_eq!(pr.get(1), Some(&u_i));
                current.pop(); // drop v_i; current now ends at u_i
                current.extend_from_slice(&pr[2..]);
                record = (u_i, v_i);
            }
            (true, false) => {
                debug_assert_eq!(current.last(), Some(&v_i));
                debug_assert_eq!(current.get(current.len() - 2), Some(&u_i));
                let l_has_im1 = current.contains(&u_im1);
                if pr[0] == u_im1 {
                    if l_has_im1 {
                        // cut u_i and v_i; glue at u_{i-1}
                        current.pop();
                        current.pop();
                        debug_assert_eq!(current.last(), Some(&u_im1));
                        current.extend_from_slice(&pr[1..]);
                        record = (u_im1, u_i);
                    } else {
                        // replace v_i by u_{i-1}
                        current.pop();
                        current.push(u_im1);
                        current.extend_from_slice(&pr[1..]);
                        record = (u_i, v_i);
                    }
                } else {
                    debug_assert_eq!(pr[0], v_i);
                    current.extend_from_slice(&pr[1..]);
                    record = (u_i, u_ip1);
                }
            }
            (false, true) => {
                debug_assert_eq!(pr.first(), Some(&v_i));
                debug_assert_eq!(pr.get(1), Some(&u_i));
                let r_has_ip1 = pr.contains(&u_ip1);
                if *current.last().unwrap() == u_ip1 {
                    if r_has_ip1 {
                        // cut v_i and u_i off the right path; glue at u_{i+1}
                        debug_assert_eq!(pr.get(2), Some(&u_ip1));
                        current.extend_from_slice(&pr[3..]);
                        record = (u_ip1, u_i);
                    } else {
                        // replace v_i by u_{i+1} in the right path
                        current.extend_from_slice(&pr[1..]);
                        record = (u_i, v_i);
                    }
                } else {
                    debug_assert_eq!(*current.last().unwrap(), v_i);
                    current.extend_from_slice(&pr[1..]);
                    record = (u_i, u_im1);
                }
            }
            (false, false) => {
                let ends_l = *current.last().unwrap();
                let starts_r = pr[0];
                match (ends_l == v_i, starts_r == v_i) {
                    (true, true) => {
                        current.extend_from_slice(&pr[1..]);
                        record = (v_i, u_i);
                    }
                    (true, false) => {
                        debug_assert_eq!(starts_r, u_im1);
                        current.push(u_i);
                        current.extend_from_slice(&pr);
                        record = (u_i, u_ip1);
                    }
                    (false, true) => {
                        debug_assert_eq!(ends_l, u_ip1);
                        current.push(u_i);
                        current.extend_from_slice(&pr);
                        record = (u_i, u_im1);
                    }
                    (false, false) => {
                        debug_assert_eq!(ends_l, u_ip1);
                        debug_assert_eq!(starts_r, u_im1);
                        current.push(u_i);
                        current.extend_from_slice(&pr);
                        record = (u_i, v_i);
                    }
                }
            }
        }
        junction_records.push(record);
    }

    // opportunistic end teeth where the outermost short paths pass through
    // the end roots
    let (first_tooth, first_pos) = teeth[0];
    let left_end_record = if current.len() >= 2 && current[1] == base[first_pos] {
        let unused = if current[0] == first_tooth { base[first_pos - 1] } else { first_tooth };
        Some((base[first_pos], unused))
    } else {
        None
    };
    let (last_tooth, last_pos) = teeth[teeth.len() - 1];
    let right_end_record = if current.len() >= 2 && current[current.len() - 2] == base[last_pos] {
        let unused =
            if *current.last().unwrap() == last_tooth { base[last_pos + 1] } else { last_tooth };
        Some((base[last_pos], unused))
    } else {
        None
    };

    // resolve (root vertex, tooth vertex) records into base positions,
    // dropping any record whose tooth collides with the base or another
    // tooth
    let mut used_teeth: Vec<usize> = Vec::new();
    for (root_v, tooth_v) in left_end_record
        .into_iter()
        .chain(junction_records)
        .chain(right_end_record)
    {
        if current.contains(&tooth_v) || used_teeth.contains(&tooth_v) {
            continue;
        }
        if let Some(pos) = current.iter().position(|&v| v == root_v) {
            new_teeth.push((tooth_v, pos));
            used_teeth.push(tooth_v);
        }
    }
    new_teeth.sort_by_key(|&(_, r)| r);
    new_teeth.dedup_by_key(|&mut (_, r)| r);

    let dense = RakeEmbedding { base: current, teeth: new_teeth, density: Some(s + 5) };
    if let Some(v) = rake_violation(g, &dense) {
        return Err(Error::malformed(format!("internal: densified rake invalid: {v}")));
    }
    Ok(DensifyOutcome::DenseRake(dense))
}

/// The right-end normalization of the running path at a junction: after it,
/// a path ending at the succ vertex does not arrive from the root or the
/// pred vertex, and a path ending at the tooth does not arrive from pred.
fn normalize_right(
    g: &Graph,
    p: &mut Vec<usize>,
    u_i: usize,
    u_im1: usize,
    u_ip1: usize,
    v_i: usize,
) {
    let n = p.len();
    if n < 2 {
        return;
    }
    let end = p[n - 1];
    let prev = p[n - 2];
    if end == u_ip1 {
        if prev == u_i {
            p.pop();
            p.push(v_i);
            debug_assert!(g.has_edge(u_i, v_i));
        } else if prev == u_im1 {
            p.pop();
            p.push(u_i);
            p.push(v_i);
            debug_assert!(g.has_edge(u_im1, u_i) && g.has_edge(u_i, v_i));
        }
    } else if end == v_i && prev == u_im1 {
        p.pop();
        p.push(u_i);
        p.push(v_i);
        debug_assert!(g.has_edge(u_im1, u_i));
    }
}

/// Mirror of [`normalize_right`] for the left end of the next short path.
fn normalize_left(
    g: &Graph,
    p: &mut Vec<usize>,
    u_i: usize,
    u_im1: usize,
    u_ip1: usize,
    v_i: usize,
) {
    if p.len() < 2 {
        return;
    }
    let start = p[0];
    let next = p[1];
    if start == u_im1 {
        if next == u_i {
            p[0] = v_i;
            debug_assert!(g.has_edge(v_i, u_i));
        } else if next == u_ip1 {
            p[0] = u_i;
            p.insert(0, v_i);
            debug_assert!(g.has_edge(u_i, u_ip1));
        }
    } else if start == v_i && next == u_ip1 {
        p.insert(1, u_i);
        debug_assert!(g.has_edge(v_i, u_i) && g.has_edge(u_i, u_ip1));
    }
}

/// The figure-style l-dense k-rake as a standalone graph: base vertices
/// `0..m`, tooth of the i-th root is vertex `m + i`. Roots sit at base
/// positions 1, 1+l, 1+2l, ...; the base ends carry no root.
pub fn make_dense_rake_graph(k: usize, ell: usize) -> Result<(Graph, RakeEmbedding)> {
    if k == 0 || ell == 0 {
        return Err(Error::malformed("rake parameters must be positive"));
    }
    let m = 1 + (k - 1) * ell + 2;
    let mut pairs: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    let mut teeth = Vec::with_capacity(k);
    for i in 0..k {
        let root = 1 + i * ell;
        let tooth = m + i;
        pairs.push((root, tooth));
        teeth.push((tooth, root));
    }
    let g = Graph::from_edge_list(m + k, &pairs)?;
    let rake = RakeEmbedding { base: (0..m).collect(), teeth, density: Some(ell) };
    debug_assert!(rake_violation(&g, &rake).is_none());
    Ok((g, rake))
}

#[allow(dead_code)]
fn canonical_cfg() -> CanonicalConfig {
    CanonicalConfig::with_h_min(HGRAPH_ABSOLUTE_MIN_ORDER)
}
