//! Normalizing Alexander polynomials from Seifert matrices and the
//! functionals `J_Δ = tΔ'/Δ` and `I_Δ = (1+t)/(1-t) + J_Δ`.
//!
//! ```text
//! cargo run --example alexander_pairs
//! ```

use eqcube::alexander::{i_delta, j_delta, normalize_symmetric, AlexanderPair};
use eqcube::algebra::rational::int;
use eqcube::algebra::HLPoly;

/// `det(t^{1/2} S - t^{-1/2} S^T)` for a 2x2 Seifert matrix.
fn seifert_det(s: [[i64; 2]; 2]) -> HLPoly {
    let entry = |i: usize, j: usize| HLPoly::from_doubled_terms([(1, int(s[i][j])), (-1, int(-s[j][i]))]);
    &(&entry(0, 0) * &entry(1, 1)) - &(&entry(0, 1) * &entry(1, 0))
}

fn main() {
    for (name, s) in [("trefoil", [[-1, 1], [0, -1]]), ("figure-eight", [[1, 1], [0, -1]])] {
        let delta = normalize_symmetric(&seifert_det(s)).expect("Seifert matrices give Δ(1) = ±1");
        let pair = AlexanderPair::equal(delta.clone()).unwrap();
        let half_second = delta.derivative().derivative().eval_at_one() / int(2);
        println!("{name}:");
        println!("  Delta        = {delta}");
        println!("  Delta''(1)/2 = {half_second}");
        println!("  J_Delta      = {}", j_delta(&pair));
        println!("  I_Delta      = {}", i_delta(&pair));
    }

    // Polynomials that cannot be made symmetric are rejected.
    let lopsided = HLPoly::from_int_terms(&[(1, 1), (0, -2)]);
    println!("t - 2 -> {:?}", normalize_symmetric(&lopsided));
}
