//! The sets `CS_n` of connected trivalent graphs with numbered vertices
//! and numbered oriented edges, and their normalization constants.
//!
//! ```text
//! cargo run --example labeled_graphs
//! ```

use eqcube::algebra::rational::format_rational;
use eqcube::diagram::{cs_count, enumerate_cs, normalization_constant, visit_cs};

fn main() {
    for g in enumerate_cs(1).unwrap() {
        println!("{:?}", g.edges);
    }
    for n in 1..=3 {
        println!(
            "|CS_{n}| = {:>12}   1/(2^3n (3n)! (2n)!) = {}",
            cs_count(n).unwrap(),
            format_rational(&normalization_constant(n))
        );
    }

    // Stream CS_2 without storing it: count graphs with a triple edge.
    let mut triple = 0u64;
    visit_cs(2, |g| {
        let mut pairs: Vec<(usize, usize)> = g.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort();
        if pairs.windows(3).any(|w| w[0] == w[1] && w[1] == w[2]) {
            triple += 1;
        }
        true
    })
    .unwrap();
    println!("graphs in CS_2 with a triple edge: {triple}");
}
