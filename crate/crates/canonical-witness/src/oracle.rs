//! Brute-force, exhaustive ground-truth procedures on small graphs.
//!
//! Every extraction algorithm's output is validated against these searches,
//! and the empirical thresholds in the acceptance suite come from here. The
//! determinism contract: searches iterate vertices in ascending order and
//! return the lexicographically least witness, so identical inputs always
//! produce identical answers. Exceeding a ceiling is an error, never a wrong
//! answer.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, SearchLimits};

// ============================================================================
// Embeddings
// ============================================================================

/// A certified containment of a pattern in a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    /// `map[i]` is the host vertex of pattern vertex `i`; adjacency is
    /// preserved in both directions among the mapped vertices.
    Induced(Vec<usize>),
    /// `map[i]` as above; pattern edges map to host edges, extra host edges
    /// among the image are allowed.
    Subgraph(Vec<usize>),
    /// `sets[i]` is the branch set of pattern vertex `i`: disjoint, each
    /// connected in the host, with a host edge between the branch sets of
    /// every pattern edge.
    Minor(Vec<Vec<usize>>),
}

/// Re-validates an embedding by direct adjacency checks. Deliberately a
/// separate code path from the searches.
pub fn validate_embedding(host: &Graph, pattern: &Graph, emb: &Embedding) -> Result<()> {
    match emb {
        Embedding::Induced(map) | Embedding::Subgraph(map) => {
            let induced = matches!(emb, Embedding::Induced(_));
            if map.len() != pattern.vertex_count() {
                return Err(Error::malformed(format!(
                    "map has {} entries for a {}-vertex pattern",
                    map.len(),
                    pattern.vertex_count()
                )));
            }
            for (i, &h) in map.iter().enumerate() {
                if h >= host.vertex_count() {
                    return Err(Error::malformed(format!("image {h} out of range")));
                }
                for (j, &g2) in map.iter().enumerate().skip(i + 1) {
                    if h == g2 {
                        return Err(Error::malformed(format!(
                            "pattern vertices {i} and {j} share image {h}"
                        )));
                    }
                    let pe = pattern.has_edge(i, j);
                    let he = host.has_edge(h, g2);
                    if pe && !he {
                        return Err(Error::malformed(format!(
                            "pattern edge ({i},{j}) has no host edge ({h},{g2})"
                        )));
                    }
                    if induced && !pe && he {
                        return Err(Error::malformed(format!(
                            "host edge ({h},{g2}) violates induced non-adjacency ({i},{j})"
                        )));
                    }
                }
            }
            Ok(())
        }
        Embedding::Minor(sets) => {
            if sets.len() != pattern.vertex_count() {
                return Err(Error::malformed(format!(
                    "{} branch sets for a {}-vertex pattern",
                    sets.len(),
                    pattern.vertex_count()
                )));
            }
            let mut seen = vec![false; host.vertex_count()];
            for (i, set) in sets.iter().enumerate() {
                if set.is_empty() {
                    return Err(Error::malformed(format!("branch set {i} is empty")));
                }
                for &v in set {
                    if v >= host.vertex_count() {
                        return Err(Error::malformed(format!("branch vertex {v} out of range")));
                    }
                    if seen[v] {
                        return Err(Error::malformed(format!(
                            "branch sets are not disjoint at vertex {v}"
                        )));
                    }
                    seen[v] = true;
                }
                let (sub, _) = host.induced_subgraph(set)?;
                if !sub.is_connected() {
                    return Err(Error::malformed(format!("branch set {i} is not connected")));
                }
            }
            for &(a, b) in pattern.edges() {
                let hit = sets[a]
                    .iter()
                    .any(|&u| sets[b].iter().any(|&v| host.has_edge(u, v)));
                if !hit {
                    return Err(Error::malformed(format!(
                        "no host edge between branch sets of pattern edge ({a},{b})"
                    )));
                }
            }
            Ok(())
        }
    }
}

// ============================================================================
// Induced / subgraph embedding search
// ============================================================================

fn find_embedding(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    limits: &SearchLimits,
) -> Result<Option<Vec<usize>>> {
    let pn = pattern.vertex_count();
    let hn = host.vertex_count();
    if pn > limits.max_pattern_vertices {
        return Err(Error::resource(format!(
            "pattern has {pn} vertices, ceiling is {}",
            limits.max_pattern_vertices
        )));
    }
    if pn > hn {
        return Ok(None);
    }
    let pdeg: Vec<usize> = (0..pn).map(|v| pattern.degree(v)).collect();
    let hdeg: Vec<usize> = (0..hn).map(|v| host.degree(v)).collect();
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    let mut budget = Budget::new(limits.step_budget, "embedding search");

    // Pattern vertices are assigned in identifier order, candidates tried in
    // ascending order, so the first success is the lexicographically least
    // embedding.
    #[allow(clippy::too_many_arguments, clippy::needless_range_loop)]
    fn rec(
        host: &Graph,
        pattern: &Graph,
        induced: bool,
        pdeg: &[usize],
        hdeg: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if depth == pattern.vertex_count() {
            return Ok(true);
        }
        'cand: for h in 0..host.vertex_count() {
            if used[h] || hdeg[h] < pdeg[depth] {
                continue;
            }
            budget.step()?;
            for j in 0..depth {
                let pe = pattern.has_edge(depth, j);
                let he = host.has_edge(h, map[j]);
                if pe && !he {
                    continue 'cand;
                }
                if induced && !pe && he {
                    continue 'cand;
                }
            }
            map[depth] = h;
            used[h] = true;
            if rec(host, pattern, induced, pdeg, hdeg, map, used, depth + 1, budget)? {
                return Ok(true);
            }
            used[h] = false;
            map[depth] = usize::MAX;
        }
        Ok(false)
    }

    if rec(host, pattern, induced, &pdeg, &hdeg, &mut map, &mut used, 0, &mut budget)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Exhaustive decision procedure for "pattern is an induced subgraph of
/// host", returning the least embedding when one exists.
pub fn find_induced_embedding(
    host: &Graph,
    pattern: &Graph,
    limits: &SearchLimits,
) -> Result<Option<Embedding>> {
    Ok(find_embedding(host, pattern, true, limits)?.map(Embedding::Induced))
}

/// As above with subgraph semantics.
pub fn find_subgraph_embedding(
    host: &Graph,
    pattern: &Graph,
    limits: &SearchLimits,
) -> Result<Option<Embedding>> {
    Ok(find_embedding(host, pattern, false, limits)?.map(Embedding::Subgraph))
}

// ============================================================================
// Minor models
// ============================================================================

/// Searches for a minor model of `pattern` in `host`. Branch sets are grown
/// greedily from ascending seeds with backtracking, so the result is
/// deterministic for fixed inputs.
pub fn find_minor_model(
    host: &Graph,
    pattern: &Graph,
    limits: &SearchLimits,
) -> Result<Option<Embedding>> {
    let pn = pattern.vertex_count();
    if pn > limits.max_minor_pattern_vertices {
        return Err(Error::resource(format!(
            "minor pattern has {pn} vertices, ceiling is {}",
            limits.max_minor_pattern_vertices
        )));
    }
    if pn == 0 {
        return Ok(Some(Embedding::Minor(Vec::new())));
    }
    if host.vertex_count() < pn
        || host.edge_count() < pattern.edge_count()
        || host.circuit_rank() < pattern.circuit_rank()
    {
        return Ok(None);
    }

    // BFS order from pattern vertex 0 so every later vertex (in a connected
    // pattern) has an earlier neighbour to constrain its branch set.
    let order = {
        let mut order = Vec::with_capacity(pn);
        let mut seen = vec![false; pn];
        for start in 0..pn {
            if seen[start] {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in pattern.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    };
    // required[i] = positions-in-order of earlier pattern neighbours of order[i]
    let mut pos = vec![0usize; pn];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    let required: Vec<Vec<usize>> = order
        .iter()
        .map(|&p| {
            let mut r: Vec<usize> = pattern
                .neighbors(p)
                .into_iter()
                .filter(|&q| pos[q] < pos[p])
                .map(|q| pos[q])
                .collect();
            r.sort_unstable();
            r
        })
        .collect();

    struct State<'a> {
        host: &'a Graph,
        required: &'a [Vec<usize>],
        sets: Vec<Vec<usize>>,
        used: Vec<bool>,
        budget: Budget,
        total: usize,
    }

    fn touches_all(st: &State<'_>, set: &[usize], reqs: &[usize]) -> bool {
        reqs.iter().all(|&r| {
            st.sets[r]
                .iter()
                .any(|&u| set.iter().any(|&v| st.host.has_edge(u, v)))
        })
    }

    // Emit-then-grow: a candidate branch set is handed to the next level as
    // soon as it satisfies its edge constraints; growth happens on backtrack.
    fn grow(
        st: &mut State<'_>,
        depth: usize,
        set: &mut Vec<usize>,
        ext: &[usize],
        excluded: &mut Vec<usize>,
        cap: usize,
    ) -> Result<bool> {
        st.budget.step()?;
        if touches_all(st, set, &st.required[depth]) {
            st.sets.push(set.clone());
            if assign(st, depth + 1)? {
                return Ok(true);
            }
            st.sets.pop();
        }
        if set.len() == cap {
            return Ok(false);
        }
        let mut ext = ext.to_vec();
        let mut popped_here = 0usize;
        while let Some(&x) = ext.first() {
            ext.remove(0);
            let mut next_ext = ext.clone();
            for w in st.host.neighbors(x) {
                if !st.used[w]
                    && !set.contains(&w)
                    && w != x
                    && !next_ext.contains(&w)
                    && !excluded.contains(&w)
                {
                    next_ext.push(w);
                }
            }
            next_ext.sort_unstable();
            set.push(x);
            st.used[x] = true;
            let found = grow(st, depth, set, &next_ext, excluded, cap)?;
            st.used[x] = false;
            set.pop();
            if found {
                return Ok(true);
            }
            excluded.push(x);
            popped_here += 1;
        }
        for _ in 0..popped_here {
            excluded.pop();
        }
        Ok(false)
    }

    fn assign(st: &mut State<'_>, depth: usize) -> Result<bool> {
        if depth == st.total {
            return Ok(true);
        }
        let free: usize = st.used.iter().filter(|&&u| !u).count();
        let remaining = st.total - depth;
        if free < remaining {
            return Ok(false);
        }
        let cap = free - (remaining - 1);
        for seed in 0..st.host.vertex_count() {
            if st.used[seed] {
                continue;
            }
            let mut set = vec![seed];
            st.used[seed] = true;
            let ext: Vec<usize> = st
                .host
                .neighbors(seed)
                .into_iter()
                .filter(|&w| !st.used[w])
                .collect();
            let mut excluded = Vec::new();
            let found = grow(st, depth, &mut set, &ext, &mut excluded, cap)?;
            st.used[seed] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let mut st = State {
        host,
        required: &required,
        sets: Vec::new(),
        used: vec![false; host.vertex_count()],
        budget: Budget::new(limits.step_budget, "minor model search"),
        total: pn,
    };
    if assign(&mut st, 0)? {
        // undo the BFS reordering
        let mut sets = vec![Vec::new(); pn];
        for (i, &p) in order.iter().enumerate() {
            sets[p] = st.sets[i].clone();
        }
        let emb = Embedding::Minor(sets);
        validate_embedding(host, pattern, &emb)?;
        Ok(Some(emb))
    } else {
        Ok(None)
    }
}

// ============================================================================
// Longest paths
// ============================================================================

fn census_paths(g: &Graph, induced: bool, budget: &mut Budget) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut best: Vec<usize> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut used = vec![false; n];

    fn rec(
        g: &Graph,
        induced: bool,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<()> {
        if path.len() > best.len() {
            *best = path.clone();
        }
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if used[w] {
                continue;
            }
            if induced && path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            budget.step()?;
            path.push(w);
            used[w] = true;
            rec(g, induced, path, used, best, budget)?;
            used[w] = false;
            path.pop();
        }
        Ok(())
    }

    for v in 0..n {
        budget.step()?;
        path.push(v);
        used[v] = true;
        rec(g, induced, &mut path, &mut used, &mut best, budget.reborrow())?;
        used[v] = false;
        path.pop();
    }
    Ok(best)
}

impl Budget {
    fn reborrow(&mut self) -> &mut Self {
        self
    }
}

/// Exact maximum length over subsets; endpoint sets kept as bitmasks.
fn longest_path_len_dp(g: &Graph) -> usize {
    let n = g.vertex_count();
    debug_assert!(n <= 24);
    let rows: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect();
    let mut ep = vec![0u32; 1 << n];
    for v in 0..n {
        ep[1 << v] = 1 << v;
    }
    let mut best = 1.min(n);
    for mask in 1u32..(1u32 << n) {
        let endpoints = ep[mask as usize];
        if endpoints == 0 {
            continue;
        }
        let count = mask.count_ones() as usize;
        if count > best {
            best = count;
        }
        let mut e = endpoints;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut nb = rows[v] & !mask;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                ep[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    best
}

/// Lexicographically least simple path with exactly `target` vertices.
fn lex_path_of_len(g: &Graph, target: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    fn reachable_count(g: &Graph, from: usize, used: &[bool]) -> usize {
        let mut seen = vec![false; g.vertex_count()];
        let mut stack = vec![from];
        seen[from] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if !seen[w] && !used[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    }
    fn rec(
        g: &Graph,
        target: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if path.len() == target {
            return Ok(true);
        }
        let last = *path.last().unwrap();
        if path.len() + reachable_count(g, last, used) - 1 < target {
            return Ok(false);
        }
        for w in g.neighbors(last) {
            if used[w] {
                continue;
            }
            budget.step()?;
            path.push(w);
            used[w] = true;
            if rec(g, target, path, used, budget)? {
                return Ok(true);
            }
            used[w] = false;
            path.pop();
        }
        Ok(false)
    }
    let mut used = vec![false; n];
    for v in 0..n {
        let mut path = vec![v];
        used[v] = true;
        if rec(g, target, &mut path, &mut used, budget)? {
            return Ok(Some(path));
        }
        used[v] = false;
    }
    Ok(None)
}

/// A maximum-cardinality simple path, lexicographically least among the
/// maxima. Length is measured in vertices.
pub fn longest_path(g: &Graph, limits: &SearchLimits) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::malformed("graph has no vertices"));
    }
    if n > limits.max_longest_path_n {
        return Err(Error::resource(format!(
            "longest-path host has {n} vertices, ceiling is {}",
            limits.max_longest_path_n
        )));
    }
    let mut budget = Budget::new(limits.step_budget, "longest path census");
    match census_paths(g, false, &mut budget) {
        Ok(best) => Ok(best),
        Err(Error::ResourceLimit(_)) => {
            // census blew up; get the exact length by DP, then fetch the
            // least path of that length
            let target = longest_path_len_dp(g);
            let mut budget = Budget::new(limits.step_budget, "longest path reconstruction");
            lex_path_of_len(g, target, &mut budget)?
                .ok_or_else(|| Error::resource("longest path reconstruction failed"))
        }
        Err(e) => Err(e),
    }
}

/// A maximum-cardinality chordless path, lexicographically least among the
/// maxima.
pub fn longest_induced_path(g: &Graph, limits: &SearchLimits) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::malformed("graph has no vertices"));
    }
    if n > limits.max_longest_induced_path_n {
        return Err(Error::resource(format!(
            "longest-induced-path host has {n} vertices, ceiling is {}",
            limits.max_longest_induced_path_n
        )));
    }
    let mut budget = Budget::new(limits.step_budget, "longest induced path census");
    census_paths(g, true, &mut budget)
}

// ============================================================================
// Cliques and bicliques
// ============================================================================

/// The least clique on `t` vertices, if one exists.
pub fn find_clique(g: &Graph, t: usize, limits: &SearchLimits) -> Result<Option<Vec<usize>>> {
    if t == 0 {
        return Ok(Some(Vec::new()));
    }
    let n = g.vertex_count();
    let mut budget = Budget::new(limits.step_budget, "clique search");
    fn rec(
        g: &Graph,
        t: usize,
        from: usize,
        current: &mut Vec<usize>,
        budget: &mut Budget,
    ) -> Result<bool> {
        if current.len() == t {
            return Ok(true);
        }
        for v in from..g.vertex_count() {
            if g.vertex_count() - v < t - current.len() {
                break;
            }
            budget.step()?;
            if current.iter().all(|&u| g.has_edge(u, v)) {
                current.push(v);
                if rec(g, t, v + 1, current, budget)? {
                    return Ok(true);
                }
                current.pop();
            }
        }
        Ok(false)
    }
    let mut current = Vec::new();
    if t <= n && rec(g, t, 0, &mut current, &mut budget)? {
        Ok(Some(current))
    } else {
        Ok(None)
    }
}

/// The least `K_{a,b}` with subgraph semantics: two disjoint sets with every
/// cross pair adjacent; the sides need not be independent. Least by
/// side-A-major lexicographic order.
pub fn find_biclique(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &SearchLimits,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let n = g.vertex_count();
    if a == 0 {
        let side_b: Vec<usize> = (0..b.min(n)).collect();
        return if side_b.len() == b {
            Ok(Some((Vec::new(), side_b)))
        } else {
            Ok(None)
        };
    }
    if a + b > n {
        return Ok(None);
    }
    let mut budget = Budget::new(limits.step_budget, "biclique search");
    // enumerate side A in lexicographic order; side B is the least b vertices
    // of the common neighbourhood
    fn rec(
        g: &Graph,
        a: usize,
        b: usize,
        from: usize,
        side_a: &mut Vec<usize>,
        common: &[u64],
        budget: &mut Budget,
    ) -> Result<Option<Vec<usize>>> {
        if side_a.len() == a {
            let mut side_b = Vec::with_capacity(b);
            'outer: for (wi, &word) in common.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let v = wi * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if !side_a.contains(&v) {
                        side_b.push(v);
                        if side_b.len() == b {
                            break 'outer;
                        }
                    }
                }
            }
            return Ok(if side_b.len() == b { Some(side_b) } else { None });
        }
        for v in from..g.vertex_count() {
            budget.step()?;
            let row = g.row(v);
            let mut next: Vec<u64> = common.iter().zip(row).map(|(c, r)| c & r).collect();
            if side_a.is_empty() {
                next = row.to_vec();
            }
            let live: usize = next.iter().map(|w| w.count_ones() as usize).sum();
            if live < b {
                continue;
            }
            side_a.push(v);
            if let Some(side_b) = rec(g, a, b, v + 1, side_a, &next, budget)? {
                return Ok(Some(side_b));
            }
            side_a.pop();
        }
        Ok(None)
    }
    let words = g.vertex_count().div_ceil(64);
    let all = vec![u64::MAX; words];
    let mut side_a = Vec::new();
    match rec(g, a, b, 0, &mut side_a, &all, &mut budget)? {
        Some(side_b) => Ok(Some((side_a, side_b))),
        None => Ok(None),
    }
}

// ============================================================================
// Treewidth
// ============================================================================

/// Exact treewidth by dynamic programming over vertex subsets. Convention:
/// graphs with at most one vertex have treewidth 0.
pub fn treewidth_exact(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    let n = g.vertex_count();
    if n > limits.max_treewidth_n {
        return Err(Error::resource(format!(
            "treewidth host has {n} vertices, ceiling is {}",
            limits.max_treewidth_n
        )));
    }
    if n <= 1 {
        return Ok(0);
    }
    let rows: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect();
    // q(s, v): vertices outside s+{v} reachable from v via internal vertices in s
    let q = |s: u32, v: usize| -> u32 {
        let mut visited = 1u32 << v;
        let mut frontier = 1u32 << v;
        let mut outside = 0u32;
        while frontier != 0 {
            let mut reach = 0u32;
            let mut f = frontier;
            while f != 0 {
                let x = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= rows[x];
            }
            reach &= !visited;
            visited |= reach;
            outside |= reach & !s;
            frontier = reach & s;
        }
        (outside & !(1 << v)).count_ones()
    };
    let full = (1u64 << n) - 1;
    let mut tw = vec![i8::MAX; 1 << n];
    tw[0] = -1;
    for mask in 1u64..=full {
        let mut best = i8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = (mask & !(1 << v)) as u32;
            let qv = q(rest, v) as i8;
            let candidate = tw[rest as usize].max(qv);
            if candidate < best {
                best = candidate;
            }
        }
        tw[mask as usize] = best;
    }
    Ok(tw[full as usize] as usize)
}

// ============================================================================
// Holes
// ============================================================================

/// The least induced cycle of length at least `max(4, min_len)`, as a vertex
/// sequence in canonical form: the minimum vertex first, then the
/// lexicographically smaller of the two directions.
pub fn find_hole(g: &Graph, min_len: usize, limits: &SearchLimits) -> Result<Option<Vec<usize>>> {
    let need = min_len.max(4);
    let n = g.vertex_count();
    let mut budget = Budget::new(limits.step_budget, "hole search");

    // chordless-path DFS from each candidate start, all other vertices larger
    fn rec(
        g: &Graph,
        need: usize,
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        budget: &mut Budget,
    ) -> Result<Option<Vec<usize>>> {
        let v0 = path[0];
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w <= v0 || used[w] {
                continue;
            }
            // interior chordlessness: w may touch only the last path vertex
            if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                continue;
            }
            budget.step()?;
            if path.len() >= 2 && g.has_edge(w, v0) {
                // closing edge: w can only ever be the final cycle vertex
                if path.len() + 1 >= need && path.len() >= 3 && path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    return Ok(Some(cycle));
                }
                continue;
            }
            path.push(w);
            used[w] = true;
            let found = rec(g, need, path, used, budget)?;
            used[w] = false;
            path.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    let mut used = vec![false; n];
    for v0 in 0..n {
        budget.step()?;
        let mut path = vec![v0];
        used[v0] = true;
        let found = rec(g, need, &mut path, &mut used, &mut budget)?;
        used[v0] = false;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, grid, path, Graph};

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn induced_p4_in_c5() {
        let emb = find_induced_embedding(&cycle(5), &path(4), &limits())
            .unwrap()
            .unwrap();
        assert_eq!(emb, Embedding::Induced(vec![0, 1, 2, 3]));
    }

    #[test]
    fn c4_not_induced_in_k4_but_subgraph() {
        assert!(find_induced_embedding(&complete(4), &cycle(4), &limits())
            .unwrap()
            .is_none());
        assert!(find_subgraph_embedding(&complete(4), &cycle(4), &limits())
            .unwrap()
            .is_some());
    }

    #[test]
    fn c4_not_subgraph_of_c5() {
        assert!(find_subgraph_embedding(&cycle(5), &cycle(4), &limits())
            .unwrap()
            .is_none());
    }

    #[test]
    fn k22_subgraph_of_grid() {
        assert!(find_subgraph_embedding(&grid(3), &complete_bipartite(2, 2), &limits())
            .unwrap()
            .is_some());
    }

    #[test]
    fn embedding_validation_is_sound() {
        let host = cycle(6);
        let emb = find_induced_embedding(&host, &path(4), &limits())
            .unwrap()
            .unwrap();
        validate_embedding(&host, &path(4), &emb).unwrap();
        let bad = Embedding::Induced(vec![0, 1, 2, 5]);
        assert!(validate_embedding(&host, &path(4), &bad).is_err());
    }

    #[test]
    fn pattern_ceiling_is_an_error_not_absence() {
        let mut tight = limits();
        tight.max_pattern_vertices = 3;
        assert!(matches!(
            find_induced_embedding(&complete(6), &path(4), &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn minor_examples() {
        assert!(find_minor_model(&grid(4), &grid(3), &limits()).unwrap().is_some());
        // trees have no cycle minors
        assert!(find_minor_model(&path(8), &cycle(3), &limits()).unwrap().is_none());
        let model = find_minor_model(&cycle(6), &cycle(3), &limits()).unwrap().unwrap();
        validate_embedding(&cycle(6), &cycle(3), &model).unwrap();
    }

    #[test]
    fn longest_paths_on_c6() {
        assert_eq!(longest_path(&cycle(6), &limits()).unwrap().len(), 6);
        // deleting one cycle vertex leaves an induced P_5
        let lip = longest_induced_path(&cycle(6), &limits()).unwrap();
        assert_eq!(lip, vec![0, 1, 2, 3, 4]);
        assert!(cycle(6).is_chordless_path(&lip));
    }

    #[test]
    fn longest_paths_trivial_cases() {
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(longest_path(&k1, &limits()).unwrap(), vec![0]);
        assert_eq!(longest_induced_path(&k1, &limits()).unwrap(), vec![0]);
        assert_eq!(longest_path(&path(7), &limits()).unwrap().len(), 7);
        assert_eq!(longest_induced_path(&path(7), &limits()).unwrap().len(), 7);
    }

    #[test]
    fn longest_path_dp_agrees_with_census() {
        for g in [grid(3), complete(6), cycle(7), complete_bipartite(3, 4)] {
            let census = longest_path(&g, &limits()).unwrap();
            assert_eq!(census.len(), longest_path_len_dp(&g));
        }
    }

    #[test]
    fn biclique_examples() {
        assert!(find_biclique(&complete(4), 2, 2, &limits()).unwrap().is_some());
        assert!(find_biclique(&path(8), 2, 2, &limits()).unwrap().is_none());
        let (a, b) = find_biclique(&cycle(4), 2, 2, &limits()).unwrap().unwrap();
        assert_eq!((a, b), (vec![0, 2], vec![1, 3]));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(find_clique(&complete(5), 3, &limits()).unwrap(), Some(vec![0, 1, 2]));
        assert!(find_clique(&cycle(5), 3, &limits()).unwrap().is_none());
    }

    #[test]
    fn treewidth_examples() {
        assert_eq!(treewidth_exact(&complete(5), &limits()).unwrap(), 4);
        assert_eq!(treewidth_exact(&path(9), &limits()).unwrap(), 1);
        assert_eq!(treewidth_exact(&cycle(4), &limits()).unwrap(), 2);
        assert_eq!(treewidth_exact(&grid(4), &limits()).unwrap(), 4);
    }

    #[test]
    fn hole_examples() {
        assert_eq!(
            find_hole(&cycle(7), 5, &limits()).unwrap(),
            Some(vec![0, 1, 2, 3, 4, 5, 6])
        );
        assert!(find_hole(&complete(4), 4, &limits()).unwrap().is_none());
        // 4x4 grid: longest hole is the 12-vertex perimeter
        assert!(find_hole(&grid(4), 14, &limits()).unwrap().is_none());
        assert!(find_hole(&grid(4), 4, &limits()).unwrap().is_some());
        assert!(find_hole(&grid(4), 12, &limits()).unwrap().is_some());
    }

    #[test]
    fn hole_is_chordless_cycle() {
        let g = grid(4);
        let hole = find_hole(&g, 8, &limits()).unwrap().unwrap();
        assert!(hole.len() >= 8);
        let len = hole.len();
        for i in 0..len {
            for j in i + 1..len {
                let on_cycle = j == i + 1 || (i == 0 && j == len - 1);
                assert_eq!(g.has_edge(hole[i], hole[j]), on_cycle, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn monotonicity_of_induced_containment() {
        // if A is induced in B then any host containing B contains A
        let host = grid(3);
        let b = path(4);
        let a = path(3);
        if find_induced_embedding(&host, &b, &limits()).unwrap().is_some() {
            assert!(find_induced_embedding(&host, &a, &limits()).unwrap().is_some());
        }
    }
}
