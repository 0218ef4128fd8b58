//! The rake machinery step by step: shortening an embedded H-graph, gluing
//! a rake into a dense one, and extracting a canonical graph from the
//! result.
//!
//! ```bash
//! cargo run --example densify_and_extract
//! ```

use canonical_witness::extract::{
    canonical_from_dense_rake, densify_rake, make_dense_rake_graph, shorten_hgraph, DenseOutcome,
    DensifyOutcome, HGraphEmbedding, RakeEmbedding, ShortenOutcome,
};
use canonical_witness::graph::Graph;
use canonical_witness::limits::SearchLimits;

fn main() {
    // -- shortening: a long H-graph with a wing shortcut chord ------------
    // body 0..8, left wings 8, 9, right wings 10, 11, plus a chord from
    // wing 8 deep into the body
    let mut edges: Vec<(usize, usize)> = (1..8).map(|i| (i - 1, i)).collect();
    edges.extend_from_slice(&[(0, 8), (0, 9), (7, 10), (7, 11)]);
    edges.push((8, 6)); // the shortcut
    let g = Graph::from_edge_list(12, &edges).unwrap();
    let h = HGraphEmbedding { body: (0..8).collect(), left_wings: (8, 9), right_wings: (10, 11) };
    match shorten_hgraph(&g, &h, 4).unwrap() {
        ShortenOutcome::ShortPath(p) => println!("wing-to-wing short path: {p:?}"),
        ShortenOutcome::Canonical(cw) => println!("canonical subgraph: {}", cw.descriptor),
    }
    // without the chord the same H-graph is itself the canonical outcome
    let g_bare = Graph::from_edge_list(12, &edges[..edges.len() - 1]).unwrap();
    match shorten_hgraph(&g_bare, &h, 4).unwrap() {
        ShortenOutcome::ShortPath(p) => println!("short path: {p:?}"),
        ShortenOutcome::Canonical(cw) => println!("no shortcut, canonical: {}", cw.descriptor),
    }

    // -- densify: a rake with a chord that reroutes one junction ----------
    let (tree, rake) = make_dense_rake_graph(8, 1).unwrap();
    match densify_rake(&tree, &rake, 4).unwrap() {
        DensifyOutcome::DenseRake(d) => {
            println!(
                "\ndensified the 1-dense 8-rake: base {:?}, {} teeth, density {:?}",
                d.base,
                d.teeth.len(),
                d.density
            );
            run_extraction(&tree, &d);
        }
        DensifyOutcome::Canonical(cw) => println!("densify surfaced {}", cw.descriptor),
    }
}

fn run_extraction(g: &Graph, dense: &RakeEmbedding) {
    match canonical_from_dense_rake(g, dense, 4, 2, &SearchLimits::default()) {
        Ok(DenseOutcome::Canonical(cw)) => {
            println!("extraction: canonical {} at vertices {:?}", cw.descriptor, cw.embedding)
        }
        Ok(DenseOutcome::Biclique(a, b)) => println!("extraction: biclique {a:?} / {b:?}"),
        Err(e) => println!("extraction: {e}"),
    }
}
