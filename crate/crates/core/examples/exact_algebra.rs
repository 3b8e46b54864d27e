//! Exact arithmetic with half-integer Laurent polynomials, one-variable
//! fractions and the three-variable ring with `xyz = 1`.
//!
//! ```text
//! cargo run --example exact_algebra
//! ```

use eqcube::algebra::rational::{int, rat};
use eqcube::algebra::{embed, HLPoly, OneVarFrac, TriVarElem, Var};

fn main() {
    // δ = (t^{1/2} + t^{-1/2}) / 2 is a legal annihilator with half powers.
    let delta = HLPoly::from_doubled_terms([(1, rat(1, 2)), (-1, rat(1, 2))]);
    println!("delta          = {delta}");
    println!("delta^2        = {}", delta.pow(2));

    // Fractions reduce on construction: (t^2 - 1)/(t - 1) = t + 1.
    let f = OneVarFrac::new(HLPoly::from_int_terms(&[(2, 1), (0, -1)]), HLPoly::from_int_terms(&[(1, 1), (0, -1)]))
        .expect("nonzero denominator");
    println!("(t^2-1)/(t-1)  = {f}");

    // (1+t)/(1-t) changes sign under t -> 1/t.
    let c = eqcube::alexander::cayley();
    println!("cayley(t)      = {c}");
    println!("cayley(1/t)    = {}", c.invert_var());

    // Put t in the x slot and symmetrize over the six permutations of (x, y, z).
    let x = embed(&OneVarFrac::from_poly(HLPoly::t_pow(1)), Var::X).unwrap();
    let s = x.symmetrize();
    println!("sym(x)         = {s}");
    println!("sym(x)(1,1,1)  = {}", s.eval_111().unwrap());

    // A genuine fraction with a removable singularity at (1, 1, 1).
    let one_minus = |v| &TriVarElem::one() - &TriVarElem::var(v);
    let g = (&one_minus(Var::X) * &one_minus(Var::Y)).checked_div(&(&one_minus(Var::X) * &TriVarElem::constant(int(3)))).unwrap();
    println!("(1-x)(1-y)/(3(1-x)) = {g}");
    println!("value at (1,1,1)    = {}", g.eval_111().unwrap());

    // Directional limits that disagree are reported, not guessed.
    let bad = one_minus(Var::X).checked_div(&one_minus(Var::Y)).unwrap();
    println!("(1-x)/(1-y) at (1,1,1): {:?}", bad.eval_111());
}
