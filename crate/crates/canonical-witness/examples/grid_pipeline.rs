//! The 6x6 grid through both pipeline entries: the full pipeline finds a
//! long hole directly, while the dense-rake chain started from the identity
//! grid-minor model shows its per-stage log — on this host the two-row rake
//! derivation leaves too little material for an order-6 canonical graph, and
//! the chain says so rather than inventing a witness.
//!
//! ```bash
//! cargo run --example grid_pipeline
//! ```

use canonical_witness::extract::{witness_pipeline, witness_pipeline_with_model, Witness};
use canonical_witness::graph;
use canonical_witness::limits::SearchLimits;
use canonical_witness::oracle::Embedding;

fn main() {
    let g = graph::grid(6);
    let limits = SearchLimits::default();

    println!("full pipeline on the 6x6 grid, s=6, q=3:");
    match witness_pipeline(&g, 6, 3, &limits) {
        Witness::Canonical(cw) => {
            println!("  canonical witness {} at {:?}", cw.descriptor, cw.embedding)
        }
        other => println!("  {other:?}"),
    }

    println!("\ndense-rake chain from the explicit identity model:");
    let model = Embedding::Minor((0..36).map(|v| vec![v]).collect());
    match witness_pipeline_with_model(&g, 6, 3, &model, 6, &limits) {
        Witness::Inconclusive { reason, stage_log } => {
            println!("  inconclusive: {reason}");
            for line in stage_log {
                println!("  {line}");
            }
        }
        other => println!("  {other:?}"),
    }

    // a smaller target order gives the chain enough room on the same rake
    println!("\nsame chain with s=2, q=3:");
    let model = Embedding::Minor((0..36).map(|v| vec![v]).collect());
    match witness_pipeline_with_model(&g, 2, 3, &model, 6, &limits) {
        Witness::Canonical(cw) => println!("  canonical witness {}", cw.descriptor),
        other => println!("  {other:?}"),
    }
}
