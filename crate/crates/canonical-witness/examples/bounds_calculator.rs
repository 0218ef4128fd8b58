//! Tour of the bound calculator: exact pigeonhole and grid-collection
//! values, the two Y modes, and what happens when a composition grows past
//! any physical representation.
//!
//! ```bash
//! cargo run --example bounds_calculator
//! ```

use canonical_witness::bounds::{self, BoundsConfig};
use canonical_witness::error::Error;

fn show(result: Result<bounds::BoundValue, Error>) {
    match result {
        Ok(bv) => {
            let digits = bv.value.to_string();
            let shown = if digits.len() > 40 {
                format!("{}... ({} digits)", &digits[..40], digits.len())
            } else {
                digits
            };
            let flags = if bv.flags.is_empty() {
                String::new()
            } else {
                format!("   [{}]", bv.flags_line())
            };
            println!("{} = {shown}{flags}", bv.provenance);
        }
        Err(e) => println!("{e}"),
    }
}

fn main() {
    let cfg = BoundsConfig::default();
    let lit = BoundsConfig::literal();

    println!("-- exact combinatorial quantities");
    show(bounds::pigeonhole_p(2, 3));
    show(bounds::pigeonhole_p(3, 2));
    show(bounds::lemma_grid_c(2, 2, &cfg));
    show(bounds::lemma_grid_c(2, 3, &cfg));
    show(bounds::ramsey_upper_r(2, 4, &cfg)); // upper bound 20, true value 18

    println!("\n-- the Y recursion, corrected base cases");
    show(bounds::thm_main2_y(1, 5, &cfg));
    show(bounds::thm_main2_y(3, 3, &cfg));
    show(bounds::thm_main2_y(3, 6, &cfg));
    show(bounds::thm_main2_y(4, 3, &cfg)); // 2^262145, printed truncated

    println!("\n-- the literal recursion collapses to 1");
    show(bounds::thm_main2_y(3, 3, &lit));
    show(bounds::thm_main2_y(6, 6, &lit));

    println!("\n-- compositions");
    show(bounds::thm_main_z(3, 2, 2, &cfg));
    show(bounds::lemma_dense_b(2, 2, &cfg));
    show(bounds::lemma_dense_c(1, 1, &cfg));

    println!("\n-- towers beyond any budget answer with a resource limit");
    show(bounds::thm_main2_y(4, 4, &cfg));
    show(bounds::lemma_dense_d(1, 1, 1, &cfg));
    show(bounds::lemma_dense_d(1, 1, 1, &lit));

    println!("\n-- certified lower bound for comparisons");
    let lb = bounds::y_lower_bound(4, 4, &cfg).unwrap();
    println!("Y(4,4) >= a value of {} bits", lb.bits());
}
