//! The vertex-count refinements A(t,q) and A~(t,q).
//!
//! A(t,q) solves A = t F(A) over stack polyominoes; A~(t,q) solves
//! A~ = t F~(A~) over Durfee-constrained Ferrers diagrams. The coefficient
//! of t^d q^a counts enriched trees with d vertices and total area a, and
//! setting t = 1 recovers xi(q) from either one.
//!
//! ```bash
//! cargo run --release --example enriched_refinements [ORDER]
//! ```

use theta_root::theta::{a_refined, atilde_refined, xi_via_theta};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);

    let a = a_refined(order);
    println!("A(t,q), stack-enriched trees by vertices (t) and area (q):");
    for (k, poly) in a.coeffs().iter().enumerate() {
        println!("  q^{k}: {poly}");
    }

    let at = atilde_refined(order);
    println!("\nA~(t,q), Ferrers-enriched trees:");
    for (k, poly) in at.coeffs().iter().enumerate() {
        println!("  q^{k}: {poly}");
    }

    let xi = xi_via_theta(order);
    assert_eq!(a.eval_t_one(), xi);
    assert_eq!(at.eval_t_one(), xi);
    println!("\nboth refinements reduce to xi(q) at t = 1: {xi}");
}
