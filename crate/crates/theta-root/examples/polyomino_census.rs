//! Exhaustive polyomino enumeration against the closed generating functions.
//!
//! ```bash
//! cargo run --release --example polyomino_census [MAX_AREA]
//! ```

use theta_root::polyomino::{
    enumerate_ferrers, enumerate_stacks, ferrers_gf_constrained, ferrers_gf_two_forms,
    stack_gf_closed, stack_gf_functional,
};

fn main() {
    let max_area: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);

    let stacks = enumerate_stacks(max_area);
    let closed = stack_gf_closed(max_area, max_area, max_area, max_area);
    let functional = stack_gf_functional(max_area, max_area, max_area, max_area);
    assert_eq!(stacks, closed, "closed sum vs enumeration");
    assert_eq!(closed, functional, "closed sum vs functional iteration");

    println!("stack polyominoes by area (enumeration = closed sum = functional iteration):");
    let mut by_area = vec![0u64; max_area + 1];
    for ((a, _, _, _), c) in &stacks {
        by_area[*a] += c;
    }
    for (a, c) in by_area.iter().enumerate().skip(1) {
        println!("  area {a:>2}: {c}");
    }

    let ferrers = enumerate_ferrers(max_area, false);
    let (column, durfee) = ferrers_gf_two_forms(max_area, max_area, max_area);
    assert_eq!(column, durfee, "two closed sums for the same function");
    assert_eq!(column, ferrers, "closed sums vs enumeration");

    let constrained = enumerate_ferrers(max_area, true);
    assert_eq!(
        ferrers_gf_constrained(max_area, max_area, max_area),
        constrained
    );

    println!("\nFerrers diagrams by area (all / with n-th largest row of length n):");
    let mut all = vec![0u64; max_area + 1];
    let mut kept = vec![0u64; max_area + 1];
    for ((a, _, _), c) in &ferrers {
        all[*a] += c;
    }
    for ((a, _, _), c) in &constrained {
        kept[*a] += c;
    }
    for a in 1..=max_area {
        println!("  area {a:>2}: {:>6} / {}", all[a], kept[a]);
    }
    println!("\nthe unconstrained column counts the partitions of each area");
}
