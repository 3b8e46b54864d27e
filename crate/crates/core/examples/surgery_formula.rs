//! `λ'_e` from equivariant linking data and the change of the invariant
//! under surgery.
//!
//! ```text
//! cargo run --example surgery_formula
//! ```

use eqcube::algebra::{HLPoly, OneVarFrac};
use eqcube::casson::SurgeryCoefficient;
use eqcube::surgery::{check_symmetry, lambda_e_prime, surgery_delta, SurgeryDatum};

fn main() {
    // Constant data from Seifert matrices: λ'_e is then ½Δ''(1).
    for (name, laa, lab, lba, lbb) in [("trefoil", -1, 1, 0, -1), ("figure-eight", 1, 1, 0, -1)] {
        let c = SurgeryCoefficient::new(1, 1).unwrap();
        let d = SurgeryDatum::constant(&[vec![laa]], &[vec![lab]], &[vec![lba]], &[vec![lbb]], c).unwrap();
        println!("{name}: lambda'_e = {}", lambda_e_prime(&d).unwrap());
    }

    // Slopes p/q on the trefoil datum: 6 (q/p) λ'_e + 6 λ(L(p, -q)).
    for (p, q) in [(1, 1), (-1, 1), (2, 1), (5, 2), (-7, 3)] {
        let c = SurgeryCoefficient::new(p, q).unwrap();
        let d = SurgeryDatum::constant(&[vec![-1]], &[vec![1]], &[vec![0]], &[vec![-1]], c).unwrap();
        let delta = surgery_delta(&d).unwrap();
        println!("p/q = {p}/{q}: delta Q = {delta}");
    }

    // Equivariant data: lk_e(a, b^+) = t gives a genuinely three-variable kernel.
    let t = OneVarFrac::from_poly(HLPoly::t_pow(1));
    let one = OneVarFrac::one();
    let d = SurgeryDatum::new(
        vec![vec![one.clone()]],
        vec![vec![t]],
        vec![vec![OneVarFrac::zero()]],
        vec![vec![-one]],
        SurgeryCoefficient::new(3, 1).unwrap(),
    )
    .unwrap();
    let l = lambda_e_prime(&d).unwrap();
    println!("lambda'_e = {l}");
    println!("symmetric: {}, value at (1,1,1): {}", check_symmetry(&l), l.eval_111().unwrap());
}
