//! Framing and knot changes, the elements `Q_k`, and reduction of an
//! invariant modulo their span.
//!
//! ```text
//! cargo run --example knot_changes
//! ```

use eqcube::alexander::AlexanderPair;
use eqcube::algebra::rational::int;
use eqcube::algebra::{HLPoly, OneVarFrac, TriVarElem};
use eqcube::surgery::{framing_v, knot_change_delta, q_k, reduce_mod_qk, seifert_v, CoefficientWindow};

fn main() {
    let trefoil = HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)]);
    let pair = AlexanderPair::equal(trefoil).unwrap();

    let f = framing_v(&pair, 1).unwrap();
    println!("framing +1: V = {}", f.v);
    let up = knot_change_delta(&pair, &f.v).unwrap();
    let down = knot_change_delta(&pair, &framing_v(&pair, -1).unwrap().v).unwrap();
    println!("delta(+1) + delta(-1) = {}", &up + &down);

    let s = seifert_v(&pair, &[OneVarFrac::from_poly(HLPoly::t_pow(1))], None).unwrap();
    println!("Seifert change with lk_e(a, b^+) = t: V = {}", s.v);

    let q1 = q_k(&pair, 1).unwrap();
    println!("Q_1 = {q1}");
    println!("Q_1(1,1,1) = {}", q1.eval_111().unwrap());

    // 6 + 2 Q_3 reduces to the same class as 6, and 6 itself is not in the span.
    let window = CoefficientWindow::default();
    let six = TriVarElem::constant(int(6));
    let f = &six + &q_k(&pair, 3).unwrap().scale(&int(2));
    let r6 = reduce_mod_qk(&six, &pair, 10, window).unwrap();
    let rf = reduce_mod_qk(&f, &pair, 10, window).unwrap();
    println!("rank of span(Q_1..Q_10) in the window: {}", r6.rank);
    println!("6 reduces to zero: {}", r6.is_zero());
    println!("same class as 6 + 2 Q_3: {}", r6.representative == rf.representative);
    let coords: Vec<String> = rf.coordinates.iter().zip(&r6.coordinates).map(|(a, b)| (a - b).to_string()).collect();
    println!("coordinate difference: [{}]", coords.join(", "));
}
