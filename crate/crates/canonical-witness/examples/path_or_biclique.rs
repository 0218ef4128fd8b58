//! The split / quotient / endgame analysis that converts a long path into
//! an induced path or a biclique.
//!
//! ```bash
//! cargo run --example path_or_biclique
//! ```

use canonical_witness::extract::{induced_path_or_biclique, Witness};
use canonical_witness::graph::{self, Graph};
use canonical_witness::limits::SearchLimits;

fn show(name: &str, g: &Graph, path: &[usize], s: usize, q: usize) {
    let w = induced_path_or_biclique(g, path, s, q, &SearchLimits::default()).unwrap();
    print!("{name}, s={s}, q={q}: ");
    match w {
        Witness::InducedPath(p) => println!("induced path {p:?}"),
        Witness::Biclique(a, b) => println!("biclique {a:?} / {b:?}"),
        Witness::Inconclusive { reason, .. } => println!("inconclusive ({reason})"),
        other => println!("{other:?}"),
    }
}

fn main() {
    // a chordless path is its own witness
    let p9 = graph::path(9);
    show("P_9", &p9, &(0..9).collect::<Vec<_>>(), 5, 4);

    // a clique has no induced P_3, so the recursion augments its way to a
    // biclique instead
    let k6 = graph::complete(6);
    show("K_6", &k6, &(0..6).collect::<Vec<_>>(), 3, 4);

    // a cycle with one chord: the walk around the cycle is not induced but
    // a long induced stretch survives
    let mut edges: Vec<(usize, usize)> = (1..10).map(|i| (i - 1, i)).collect();
    edges.push((9, 0));
    edges.push((0, 5));
    let chorded = Graph::from_edge_list(10, &edges).unwrap();
    show("C_10 + chord", &chorded, &(0..10).collect::<Vec<_>>(), 4, 4);

    // below the threshold the analysis says so instead of guessing
    let k2 = graph::complete(2);
    show("K_2", &k2, &[0, 1], 5, 4);
}
