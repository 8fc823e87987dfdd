//! Compute the leading-root series three independent ways and cross-check.
//!
//! ```bash
//! cargo run --release --example xi_series [ORDER]
//! ```

use std::time::Instant;

use theta_root::theta::{theta0_eval, xi_fix1, xi_fix2, xi_via_theta};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);

    let t = Instant::now();
    let via_theta = xi_via_theta(order);
    println!("triangular solve   ({:>9.2?})", t.elapsed());

    let t = Instant::now();
    let via_stacks = xi_fix1(order);
    println!("stack fixed point  ({:>9.2?})", t.elapsed());

    let t = Instant::now();
    let via_ferrers = xi_fix2(order);
    println!("Ferrers fixed point({:>9.2?})", t.elapsed());

    assert_eq!(via_theta, via_stacks, "methods must agree exactly");
    assert_eq!(via_theta, via_ferrers, "methods must agree exactly");
    println!("\nall three methods agree coefficientwise at order {order}");

    // the root property itself: Theta_0(-xi, q) vanishes mod q^(order+1)
    assert!(theta0_eval(&via_theta.neg(), order).is_zero());
    println!("Theta_0(-xi(q), q) = 0 mod q^{}", order + 1);

    println!("\nxi(q) coefficients:\n{via_theta}");
    println!("\nJSON:\n{}", via_theta.to_json());
}
