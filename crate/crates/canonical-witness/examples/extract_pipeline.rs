//! The staged extraction pipeline on three different hosts: a long hole, a
//! rake-shaped tree, and a dense graph with no induced path to offer.
//!
//! ```bash
//! cargo run --example extract_pipeline
//! ```

use canonical_witness::extract::{make_dense_rake_graph, witness_pipeline, Witness};
use canonical_witness::graph;
use canonical_witness::limits::SearchLimits;
use canonical_witness::witness_json;

fn show(name: &str, g: &graph::Graph, s: usize, q: usize) {
    let limits = SearchLimits::default();
    let w = witness_pipeline(g, s, q, &limits);
    println!("== {name} (n={}, m={}), s={s}, q={q}", g.vertex_count(), g.edge_count());
    match &w {
        Witness::Canonical(cw) => println!("   canonical witness {}", cw.descriptor),
        Witness::Biclique(a, b) => println!("   biclique sides {a:?} / {b:?}"),
        Witness::InducedPath(p) => println!("   induced path on {} vertices", p.len()),
        Witness::Inconclusive { reason, .. } => println!("   inconclusive: {reason}"),
        Witness::Rake(_) => println!("   rake witness"),
    }
    println!("   json: {}", witness_json::to_json_string(&w, w.is_conclusive()));
}

fn main() {
    show("C_9", &graph::cycle(9), 5, 2);

    let (rake_tree, _) = make_dense_rake_graph(12, 1).unwrap();
    show("1-dense 12-rake tree", &rake_tree, 4, 2);

    show("K_6", &graph::complete(6), 3, 2);

    // too small for anything: the stage log explains why
    show("K_2", &graph::complete(2), 5, 2);
}
