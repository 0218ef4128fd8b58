//! The exhaustive oracles on desk-scale graphs: embeddings, minors, longest
//! paths, holes, bicliques and exact treewidth.
//!
//! ```bash
//! cargo run --release --example oracle_tour
//! ```

use canonical_witness::graph::{complete, complete_bipartite, cycle, grid, path};
use canonical_witness::limits::SearchLimits;
use canonical_witness::oracle;

fn main() {
    let limits = SearchLimits::default();

    println!("-- induced and subgraph embeddings");
    let emb = oracle::find_induced_embedding(&cycle(5), &path(4), &limits).unwrap();
    println!("P_4 induced in C_5: {emb:?}");
    let absent = oracle::find_induced_embedding(&complete(4), &cycle(4), &limits).unwrap();
    println!("C_4 induced in K_4: {absent:?} (only as a non-induced subgraph)");

    println!("\n-- minor models");
    let model = oracle::find_minor_model(&cycle(6), &cycle(3), &limits).unwrap();
    println!("C_3 as a minor of C_6: {model:?}");
    let none = oracle::find_minor_model(&path(8), &cycle(3), &limits).unwrap();
    println!("C_3 as a minor of P_8: {none:?} (trees have no cycle minors)");

    println!("\n-- longest paths");
    println!("longest path in C_6: {:?}", oracle::longest_path(&cycle(6), &limits).unwrap());
    println!(
        "longest induced path in C_6: {:?}",
        oracle::longest_induced_path(&cycle(6), &limits).unwrap()
    );

    println!("\n-- holes");
    println!("hole >= 8 in the 4x4 grid: {:?}", oracle::find_hole(&grid(4), 8, &limits).unwrap());
    println!("hole >= 14 in the 4x4 grid: {:?}", oracle::find_hole(&grid(4), 14, &limits).unwrap());

    println!("\n-- cliques and bicliques");
    println!("K_3 in C_5: {:?}", oracle::find_clique(&cycle(5), 3, &limits).unwrap());
    println!("K_2,2 in C_4: {:?}", oracle::find_biclique(&cycle(4), 2, 2, &limits).unwrap());
    println!(
        "K_2,2 in K_3,3: {:?}",
        oracle::find_biclique(&complete_bipartite(3, 3), 2, 2, &limits).unwrap()
    );

    println!("\n-- exact treewidth");
    for (name, g) in [
        ("K_5", complete(5)),
        ("P_9", path(9)),
        ("C_7", cycle(7)),
        ("4x4 grid", grid(4)),
    ] {
        println!("tw({name}) = {}", oracle::treewidth_exact(&g, &limits).unwrap());
    }
}
