//! Verify the classical series identities behind the root computations.
//!
//! ```bash
//! cargo run --release --example series_identities
//! ```

use theta_root::polyomino::{ferrers_gf_two_forms, stack_gf_closed, stack_gf_functional};
use theta_root::theta::{verify_identity_first, verify_identity_second};

fn main() {
    // the two product-sum expansions of the partial theta function
    for (xo, qo) in [(4, 8), (8, 16), (10, 24)] {
        let first = verify_identity_first(xo, qo);
        let second = verify_identity_second(xo, qo);
        println!(
            "truncation x^{xo} q^{qo}: first expansion {}, second expansion {}",
            if first { "holds" } else { "FAILS" },
            if second { "holds" } else { "FAILS" },
        );
        assert!(first && second);
    }

    // the Ferrers generating function by columns and by Durfee squares
    let (column, durfee) = ferrers_gf_two_forms(6, 6, 12);
    assert_eq!(column, durfee);
    println!("\nFerrers column sum = Durfee-square sum at (x,y,q) = (6,6,12)");

    // the stack generating function: closed sum vs functional equation
    let closed = stack_gf_closed(10, 10, 9, 10);
    let functional = stack_gf_functional(10, 10, 9, 10);
    assert_eq!(closed, functional);
    println!("stack closed sum = functional-equation iteration at q^10");

    println!("\nall identities verified by exact coefficient comparison");
}
