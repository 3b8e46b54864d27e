//! Framing changes, knot changes along Seifert-type data, and the elements
//! `Q_k`.

use crate::alexander::{i_delta, j_delta, AlexanderPair};
use crate::algebra::rational::int;
use crate::algebra::trivar::{embed, TriVarElem, Var};
use crate::algebra::{HLPoly, OneVarFrac};

use super::SurgeryError;

/// A knot change described by its antisymmetric Laurent polynomial `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedKnotChange {
    pub v: HLPoly,
}

/// `V = -n (δ/2) tΔ'/Δ` for a framing change by `n`.
pub fn framing_v(pair: &AlexanderPair, n: i64) -> Result<FramedKnotChange, SurgeryError> {
    let d = OneVarFrac::from_poly(pair.delta().clone());
    let v = (&d * &j_delta(pair)).scale(&(crate::algebra::rational::rat(-n, 2)));
    let v = v.as_poly().ok_or(SurgeryError::NonPolynomialV)?.clone();
    Ok(FramedKnotChange { v })
}

/// `V = δ Σ_i (lk_e(a_i, b_i^+) - lk_e(b_i^+, a_i))`, where the second
/// linking number defaults to the first evaluated at `t^{-1}`.
pub fn seifert_v(
    pair: &AlexanderPair,
    a_b_plus: &[OneVarFrac],
    b_plus_a: Option<&[OneVarFrac]>,
) -> Result<FramedKnotChange, SurgeryError> {
    if let Some(o) = b_plus_a {
        if o.len() != a_b_plus.len() {
            return Err(SurgeryError::Shape(format!("{} overrides for {} entries", o.len(), a_b_plus.len())));
        }
    }
    let mut sum = OneVarFrac::zero();
    for (i, l) in a_b_plus.iter().enumerate() {
        let back = match b_plus_a {
            Some(o) => o[i].clone(),
            None => l.invert_var(),
        };
        sum = &sum + &(l - &back);
    }
    let v = &OneVarFrac::from_poly(pair.delta().clone()) * &sum;
    let v = v.as_poly().ok_or(SurgeryError::NonPolynomialV)?.clone();
    Ok(FramedKnotChange { v })
}

/// `Σ_{S3} (V(x)/δ(x)) I_Δ(y)`.
pub fn knot_change_delta(pair: &AlexanderPair, v: &HLPoly) -> Result<TriVarElem, SurgeryError> {
    if !v.is_antisymmetric() {
        return Err(SurgeryError::NotAntisymmetric);
    }
    let ratio = OneVarFrac::new(v.clone(), pair.delta().clone()).expect("δ(1) = 1");
    let term = &embed(&ratio, Var::X)? * &embed(&i_delta(pair), Var::Y)?;
    Ok(term.symmetrize())
}

/// `Q_k = Σ_{S3} ((x^k - x^{-k})/δ(x)) I_Δ(y)`.
pub fn q_k(pair: &AlexanderPair, k: u32) -> Result<TriVarElem, SurgeryError> {
    if k == 0 {
        return Err(SurgeryError::InvalidK);
    }
    let k = k as i64;
    let bead = HLPoly::from_doubled_terms([(2 * k, int(1)), (-2 * k, int(-1))]);
    let first = embed(&OneVarFrac::new(bead, pair.delta().clone()).expect("δ(1) = 1"), Var::X)?;
    let second = embed(&i_delta(pair), Var::Y)?;
    Ok((&first * &second).symmetrize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn trefoil() -> HLPoly {
        HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)])
    }

    #[test]
    fn framing_on_trivial_pair() {
        let f = framing_v(&AlexanderPair::trivial(), 3).unwrap();
        assert!(f.v.is_zero());
        assert!(knot_change_delta(&AlexanderPair::trivial(), &f.v).unwrap().is_zero());
    }

    #[test]
    fn framing_for_trefoil() {
        let pair = AlexanderPair::equal(trefoil()).unwrap();
        // δ J_Δ = tΔ' = t - t^{-1}
        let f = framing_v(&pair, 2).unwrap();
        assert_eq!(f.v, HLPoly::from_int_terms(&[(1, -1), (-1, 1)]));
        let f = framing_v(&pair, 1).unwrap();
        assert_eq!(f.v, HLPoly::from_int_terms(&[(1, 1), (-1, -1)]).scale(&rat(-1, 2)));
    }

    #[test]
    fn framing_needs_delta_to_clear_denominator() {
        let pair = AlexanderPair::new(trefoil(), HLPoly::one()).unwrap();
        assert_eq!(framing_v(&pair, 1), Err(SurgeryError::NonPolynomialV));
    }

    #[test]
    fn seifert_examples() {
        let pair = AlexanderPair::trivial();
        let t = OneVarFrac::from_poly(HLPoly::t_pow(1));
        let f = seifert_v(&pair, &[t.clone(), OneVarFrac::one()], None).unwrap();
        assert_eq!(f.v, HLPoly::from_int_terms(&[(1, 1), (-1, -1)]));
        let g = seifert_v(&pair, std::slice::from_ref(&t), Some(&[OneVarFrac::zero()])).unwrap();
        assert_eq!(g.v, HLPoly::t_pow(1));
        assert!(matches!(seifert_v(&pair, &[t], Some(&[])), Err(SurgeryError::Shape(_))));
    }

    #[test]
    fn q_k_matches_knot_change() {
        let pair = AlexanderPair::equal(trefoil()).unwrap();
        for k in 1..4u32 {
            let v = HLPoly::from_int_terms(&[(k as i64, 1), (-(k as i64), -1)]);
            let q = q_k(&pair, k).unwrap();
            assert_eq!(q, knot_change_delta(&pair, &v).unwrap());
            assert!(super::super::check_symmetry(&q));
        }
        assert_eq!(q_k(&pair, 0), Err(SurgeryError::InvalidK));
    }

    #[test]
    fn q_k_value_at_one_on_trivial_pair() {
        // (x^k - x^{-k})(1+y)/(1-y) symmetrized has limit 12k at (1,1,1)
        let pair = AlexanderPair::trivial();
        for k in 1..5u32 {
            assert_eq!(q_k(&pair, k).unwrap().eval_111(), Ok(int(12 * k as i64)));
        }
    }

    #[test]
    fn non_antisymmetric_v() {
        assert_eq!(
            knot_change_delta(&AlexanderPair::trivial(), &HLPoly::t_pow(1)),
            Err(SurgeryError::NotAntisymmetric)
        );
    }

    #[test]
    fn half_power_delta() {
        let half = HLPoly::from_doubled_terms([(1, int(1)), (-1, int(1))]).scale(&rat(1, 2));
        let pair = AlexanderPair::new(HLPoly::one(), half).unwrap();
        assert!(matches!(q_k(&pair, 1), Err(SurgeryError::Algebra(_))));
    }
}
