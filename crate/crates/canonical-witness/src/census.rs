//! Small-order graph census: canonical forms, enumeration up to isomorphism,
//! and Hamiltonian-path lookup. Test-support machinery for the exhaustive
//! verification sweeps; everything here is exact and deterministic.

use crate::graph::Graph;

/// Canonical key of a graph on at most 11 vertices: the lexicographically
/// least upper-triangle adjacency bitstring over all vertex orderings,
/// restricted to orderings compatible with iterated degree refinement.
/// Two graphs are isomorphic iff their keys (and vertex counts) agree.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical_key supports at most 11 vertices");
    if n <= 1 {
        return 0;
    }

    // iterated colour refinement; the final colours are structure-determined
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct: Vec<(usize, Vec<usize>)> = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .drain(..)
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        if next == color {
            break;
        }
        color = next;
    }
    let classes = color.iter().max().unwrap() + 1;

    struct Search<'a> {
        g: &'a Graph,
        color: &'a [usize],
        placed: Vec<usize>,
        used: Vec<bool>,
        rows: Vec<u64>,
        best_rows: Option<Vec<u64>>,
    }

    fn rec(st: &mut Search<'_>, classes: usize) {
        let n = st.g.vertex_count();
        let i = st.placed.len();
        if i == n {
            if st.best_rows.as_ref().is_none_or(|b| st.rows < *b) {
                st.best_rows = Some(st.rows.clone());
            }
            return;
        }
        // positions are filled class by class in colour order
        let mut filled = 0;
        let mut class = 0;
        for c in 0..classes {
            let size = st.color.iter().filter(|&&x| x == c).count();
            if i < filled + size {
                class = c;
                break;
            }
            filled += size;
        }
        for v in 0..n {
            if st.used[v] || st.color[v] != class {
                continue;
            }
            let mut row = 0u64;
            for (j, &p) in st.placed.iter().enumerate() {
                if st.g.has_edge(v, p) {
                    row |= 1 << (i - 1 - j);
                }
            }
            // prune against the best known form
            if let Some(best) = &st.best_rows {
                if st.rows[..i] == best[..i] && row > best[i] {
                    continue;
                }
            }
            st.placed.push(v);
            st.used[v] = true;
            st.rows.push(row);
            rec(st, classes);
            st.rows.pop();
            st.used[v] = false;
            st.placed.pop();
        }
    }

    let mut st = Search {
        g,
        color: &color,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        rows: Vec::with_capacity(n),
        best_rows: None,
    };
    rec(&mut st, classes);
    let best = st.best_rows.expect("at least one ordering exists");
    // pack rows into one key, earlier rows more significant
    let mut key = 0u64;
    for (i, row) in best.iter().enumerate() {
        key = (key << i) | row;
    }
    key
}

/// All graphs on exactly `n` labeled vertices (2^(n choose 2) of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "labeled enumeration supports at most 7 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edge_list(n, &chosen).expect("labeled graph")
    })
}

/// All graphs on `n` vertices up to isomorphism, generated by edge
/// augmentation with canonical-form deduplication. Deterministic order.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "iso enumeration supports at most 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut out: Vec<Graph> = Vec::new();
    let mut level: Vec<Graph> = vec![Graph::empty(n)];
    let mut seen: std::collections::HashSet<u64> = std::collections::HashSet::new();
    seen.insert(canonical_key(&level[0]));
    out.push(level[0].clone());
    while !level.is_empty() {
        let mut next: Vec<Graph> = Vec::new();
        for g in &level {
            for &(u, v) in &pairs {
                if g.has_edge(u, v) {
                    continue;
                }
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.push((u, v));
                let h = Graph::from_edge_list(n, &edges).expect("augmented graph");
                let key = canonical_key(&h);
                if seen.insert(key) {
                    next.push(h);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.sort_by_key(|g| (g.edge_count(), canonical_key(g)));
    out
}

/// Connected members of [`graphs_up_to_iso`].
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Deterministic pseudo-random stream (splitmix64). The sweeps depend on
/// byte-identical replay across platforms and releases, so the generator is
/// pinned here rather than taken from a library.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// A seeded random graph: each pair becomes an edge with probability
/// `percent / 100`. Same seed, same graph, forever.
pub fn seeded_graph(seed: u64, n: usize, percent: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.below(100) < percent {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &pairs).expect("seeded graph")
}

/// The lexicographically least Hamiltonian path, if the graph has one.
/// Subset dynamic programming; supports up to 24 vertices.
pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 24, "hamiltonian_path supports at most 24 vertices");
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
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
    // ep[mask] = endpoints of simple paths covering exactly mask
    let mut ep = vec![0u32; 1 << n];
    for v in 0..n {
        ep[1 << v] = 1 << v;
    }
    for mask in 1u32..(1u32 << n) {
        let mut e = ep[mask as usize];
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
    let full = (1u32 << n) - 1;
    if ep[full as usize] == 0 {
        return None;
    }
    // walk forwards: a path covering `mask` starting at v exists iff
    // ep[mask] has v (undirected symmetry)
    let mut path = Vec::with_capacity(n);
    let mut mask = full;
    let mut v = (0..n).find(|&v| ep[full as usize] >> v & 1 == 1)?;
    path.push(v);
    while path.len() < n {
        let rest = mask & !(1 << v);
        let next = (0..n).find(|&u| {
            rest >> u & 1 == 1 && rows[v] >> u & 1 == 1 && ep[rest as usize] >> u & 1 == 1
        })?;
        path.push(next);
        mask = rest;
        v = next;
    }
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, grid, path};

    #[test]
    fn canonical_key_identifies_isomorphs() {
        // C_4 labeled two ways
        let a = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::from_edge_list(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        // C_4 vs P_4
        assert_ne!(canonical_key(&a), canonical_key(&path(4)));
    }

    #[test]
    fn known_graph_counts_up_to_iso() {
        assert_eq!(graphs_up_to_iso(1).len(), 1);
        assert_eq!(graphs_up_to_iso(2).len(), 2);
        assert_eq!(graphs_up_to_iso(3).len(), 4);
        assert_eq!(graphs_up_to_iso(4).len(), 11);
        assert_eq!(graphs_up_to_iso(5).len(), 34);
        assert_eq!(graphs_up_to_iso(6).len(), 156);
    }

    #[test]
    fn known_connected_counts() {
        assert_eq!(connected_graphs_up_to_iso(3).len(), 2);
        assert_eq!(connected_graphs_up_to_iso(4).len(), 6);
        assert_eq!(connected_graphs_up_to_iso(5).len(), 21);
        assert_eq!(connected_graphs_up_to_iso(6).len(), 112);
    }

    #[test]
    fn labeled_count() {
        assert_eq!(labeled_graphs(4).count(), 64);
    }

    #[test]
    fn hamiltonian_paths() {
        assert_eq!(hamiltonian_path(&path(5)), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(hamiltonian_path(&cycle(5)), Some(vec![0, 1, 2, 3, 4]));
        assert!(hamiltonian_path(&complete(4)).is_some());
        // star K_{1,3} has no hamiltonian path
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(hamiltonian_path(&star).is_none());
        assert!(hamiltonian_path(&grid(3)).is_some());
    }
}
