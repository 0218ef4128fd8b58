//! Certified structural witnesses in graphs without large bicliques.
//!
//! The library extracts machine-checkable certificates from graphs — holes,
//! H-graphs (together: the canonical antichain family), bicliques, induced
//! paths and rakes — and evaluates the explicit bound functions that govern
//! when such structures are forced to exist. Every extraction is validated
//! by an independent checker, and exhaustive brute-force oracles provide the
//! ground truth the algorithms are tested against.
//!
//! Module map:
//!
//! - [`graph`]: the immutable simple-graph value type and its primitives.
//! - [`oracle`]: exhaustive searches (embeddings, minors, longest paths,
//!   cliques, bicliques, holes, exact treewidth) with deterministic
//!   least-witness answers.
//! - [`canonical`]: constructors, a recognizer and the antichain verifier
//!   for the canonical family.
//! - [`bounds`]: arbitrary-precision bound calculator with caveat flags.
//! - [`extract`]: the witness-producing algorithms and the staged pipeline.
//! - [`census`]: small-order graph enumeration up to isomorphism.
//! - [`io`] / [`witness_json`]: the shared edge-list and witness formats.
//!
//! Each runnable example under `examples/` exercises one capability
//! end-to-end; `cargo run --example extract_pipeline` is a good place to
//! start.

pub mod bounds;
pub mod canonical;
pub mod census;
pub mod error;
pub mod extract;
pub mod graph;
pub mod io;
pub mod limits;
pub mod oracle;
pub mod witness_json;

pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::SearchLimits;
