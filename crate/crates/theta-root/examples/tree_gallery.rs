//! Materialize small enriched trees, reproduce the census fixtures, and
//! emit DOT.
//!
//! ```bash
//! cargo run --release --example tree_gallery          # census + fixtures
//! cargo run --release --example tree_gallery dot      # DOT digraph on stdout
//! ```

use theta_root::theta::SigmaWord;
use theta_root::tree::{all_trees, count_by_area, enumerate_trees, trees_to_dot};

fn main() {
    let want_dot = std::env::args().nth(1).as_deref() == Some("dot");
    let stacks = SigmaWord::parse("0").unwrap();
    let ferrers = SigmaWord::parse("1").unwrap();

    if want_dot {
        let trees = all_trees(&stacks, 3, None);
        print!("{}", trees_to_dot(&trees));
        return;
    }

    // the two census fixtures: six stack-enriched trees with 5 vertices and
    // total area 7, eight Ferrers-enriched trees with 3 vertices and area 7
    let six: Vec<_> = all_trees(&stacks, 7, None)
        .into_iter()
        .filter(|t| t.total_area() == 7 && t.vertex_count() == 5)
        .collect();
    println!("stack-enriched trees with 5 vertices, total area 7:");
    for t in &six {
        println!("  {}", t.canonical_encoding());
    }
    assert_eq!(six.len(), 6);

    let eight: Vec<_> = all_trees(&ferrers, 7, None)
        .into_iter()
        .filter(|t| t.total_area() == 7 && t.vertex_count() == 3)
        .collect();
    println!("\nFerrers-enriched trees with 3 vertices, total area 7:");
    for t in &eight {
        println!("  {}", t.canonical_encoding());
    }
    assert_eq!(eight.len(), 8);

    // census tables by (area, vertices)
    println!("\nstack census (area, vertices) -> count, area <= 5:");
    for ((area, vertices), count) in enumerate_trees(&stacks, 5, None) {
        println!("  ({area}, {vertices}) -> {count}");
    }

    println!("\narea census equals xi(q) for either species:");
    println!("  stacks : {}", count_by_area(&stacks, 9, None));
    println!("  Ferrers: {}", count_by_area(&ferrers, 9, None));
}
