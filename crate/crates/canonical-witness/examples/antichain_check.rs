//! Machine-checks the antichain property of the canonical family: no member
//! embeds into another as an induced subgraph.
//!
//! ```bash
//! cargo run --release --example antichain_check
//! ```

use canonical_witness::canonical::{enumerate_canonical, verify_antichain, CanonicalConfig};
use canonical_witness::limits::SearchLimits;

fn main() {
    let limits = SearchLimits::default();
    for (label, cfg, max_order) in [
        ("default family, orders up to 8", CanonicalConfig::default(), 8),
        // the family stays an antichain even below the default minimum,
        // which is why order 2 is the verified safe floor
        ("H-graphs from order 2, orders up to 6", CanonicalConfig::with_h_min(2), 6),
    ] {
        let descriptors = enumerate_canonical(max_order, &cfg);
        let report = verify_antichain(&descriptors, &cfg, &limits).expect("within ceilings");
        println!(
            "{label}: {} descriptors, {} ordered pairs, {} violations",
            descriptors.len(),
            report.pairs_checked,
            report.violations.len()
        );
        for v in &report.violations {
            println!("  violation: {} embeds in {}", v.pattern, v.host);
        }
    }
}
