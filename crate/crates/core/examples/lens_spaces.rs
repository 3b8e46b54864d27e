//! Dedekind sums and Casson-Walker invariants of lens spaces.
//!
//! `lambda_lens(p, q)` is `λ` of `p/q` surgery on the unknot, normalized like
//! the Casson invariant (half of Walker's `λ_W`).
//!
//! ```text
//! cargo run --example lens_spaces
//! ```

use eqcube::algebra::rational::format_rational;
use eqcube::casson::{dedekind_sum, lambda_lens_pq, reciprocity_defect};

fn main() {
    println!("s(1,3) = {}", format_rational(&dedekind_sum(1, 3).unwrap()));
    println!("s(2,7) = {}", format_rational(&dedekind_sum(2, 7).unwrap()));
    println!("reciprocity defect at (5, 12): {}", reciprocity_defect(5, 12).unwrap());

    println!("\n   p/q   lambda");
    for (p, q) in [(1, 1), (-1, 3), (2, 1), (3, 1), (3, 2), (5, 1), (5, 2), (7, 3), (-5, 1)] {
        println!("{:>6}   {}", format!("{p}/{q}"), format_rational(&lambda_lens_pq(p, q).unwrap()));
    }

    println!("\nnot coprime: {}", lambda_lens_pq(4, 2).unwrap_err());
}
