//! Reduction modulo the span of `Q_1, ..., Q_k` inside a bounded window of
//! cleared numerators, and the symmetry check.

use crate::alexander::AlexanderPair;
use crate::algebra::bilaurent::{BiLaurent, Exp2};
use crate::algebra::linalg::{SparseVec, Span};
use crate::algebra::rational::Rational;
use crate::algebra::trivar::{embed, TriVarElem, Var};
use crate::algebra::{HLPoly, OneVarFrac};

use super::knot::q_k;
use super::SurgeryError;

/// True when `f` is fixed by the six permutations of `(x, y, z)` and by
/// `(x, y, z) -> (x^{-1}, y^{-1}, z^{-1})`.
pub fn check_symmetry(f: &TriVarElem) -> bool {
    f.is_permutation_invariant() && f.invert() == *f
}

/// Square window `[min, max]²` for the exponents `(i, j)` of cleared
/// numerators `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoefficientWindow {
    pub min: i64,
    pub max: i64,
}

impl CoefficientWindow {
    pub fn new(min: i64, max: i64) -> Self {
        CoefficientWindow { min, max }
    }

    fn contains(&self, e: Exp2) -> bool {
        (self.min..=self.max).contains(&e.0) && (self.min..=self.max).contains(&e.1)
    }
}

impl Default for CoefficientWindow {
    fn default() -> Self {
        CoefficientWindow { min: -15, max: 15 }
    }
}

/// `f = representative + Σ_k coordinates[k-1] Q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub representative: TriVarElem,
    pub coordinates: Vec<Rational>,
    pub rank: usize,
}

impl Reduction {
    pub fn is_zero(&self) -> bool {
        self.representative.is_zero()
    }
}

fn integral(p: &HLPoly) -> HLPoly {
    if p.has_half_powers() {
        p.shift_doubled(1)
    } else {
        p.clone()
    }
}

/// `δ(x)δ(y)δ(z)(1-x)(1-y)(1-z)Δ(x)Δ(y)Δ(z)`, with `δ` replaced by
/// `t^{1/2}δ` when it has half-integer exponents.
pub fn common_denominator(pair: &AlexanderPair) -> TriVarElem {
    let one_minus_t = HLPoly::from_int_terms(&[(0, 1), (1, -1)]);
    let factor = &(&integral(pair.delta()) * &one_minus_t) * pair.Delta();
    let f = OneVarFrac::from_poly(factor);
    Var::ALL
        .iter()
        .map(|&v| embed(&f, v).expect("integer exponents"))
        .fold(TriVarElem::one(), |acc, g| &acc * &g)
}

fn cleared(f: &TriVarElem, d: &TriVarElem, window: CoefficientWindow) -> Result<SparseVec<Exp2>, SurgeryError> {
    let h = f * d;
    if *h.denom() != BiLaurent::one() {
        return Err(SurgeryError::DenominatorNotCleared);
    }
    let mut out = SparseVec::new();
    for (e, c) in h.numer().terms() {
        if !window.contains(e) {
            return Err(SurgeryError::WindowOverflow { min: window.min, max: window.max });
        }
        out.insert(e, c.clone());
    }
    Ok(out)
}

/// Reduces `f` modulo `Q_1, ..., Q_{k_max}`. Fails when a cleared numerator
/// leaves `window`.
pub fn reduce_mod_qk(
    f: &TriVarElem,
    pair: &AlexanderPair,
    k_max: u32,
    window: CoefficientWindow,
) -> Result<Reduction, SurgeryError> {
    let d = common_denominator(pair);
    let mut span = Span::new();
    for k in 1..=k_max {
        span.push(&cleared(&q_k(pair, k)?, &d, window)?);
    }
    let target = cleared(f, &d, window)?;
    let (rest, coordinates) = span.reduce(&target);
    let num = BiLaurent::from_terms(rest);
    let representative = TriVarElem::from_laurent(num).checked_div(&d)?;
    Ok(Reduction { representative, coordinates, rank: span.rank() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn trefoil_pair() -> AlexanderPair {
        AlexanderPair::equal(HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)])).unwrap()
    }

    #[test]
    fn q_k_reduce_to_zero() {
        let pair = trefoil_pair();
        let w = CoefficientWindow::default();
        for k in 1..=4u32 {
            let r = reduce_mod_qk(&q_k(&pair, k).unwrap(), &pair, 4, w).unwrap();
            assert!(r.is_zero());
            let mut expected = vec![int(0); 4];
            expected[k as usize - 1] = int(1);
            assert_eq!(r.coordinates, expected);
        }
    }

    #[test]
    fn combination_recovers_coordinates() {
        let pair = trefoil_pair();
        let w = CoefficientWindow::default();
        let six = TriVarElem::constant(int(6));
        let f = &(&six + &q_k(&pair, 2).unwrap().scale(&int(3))) - &q_k(&pair, 1).unwrap();
        let r = reduce_mod_qk(&f, &pair, 3, w).unwrap();
        let base = reduce_mod_qk(&six, &pair, 3, w).unwrap();
        assert_eq!(r.representative, base.representative);
        assert!(!base.is_zero());
        let diff: Vec<Rational> = r.coordinates.iter().zip(&base.coordinates).map(|(a, b)| a - b).collect();
        assert_eq!(diff, vec![int(-1), int(3), int(0)]);
    }

    #[test]
    fn window_overflow() {
        let pair = trefoil_pair();
        let r = reduce_mod_qk(&TriVarElem::one(), &pair, 2, CoefficientWindow::new(-1, 1));
        assert!(matches!(r, Err(SurgeryError::WindowOverflow { .. })));
    }

    #[test]
    fn uncleared_denominator() {
        let pair = AlexanderPair::trivial();
        let g = OneVarFrac::new(HLPoly::one(), HLPoly::from_int_terms(&[(0, 2), (1, -1)])).unwrap();
        let f = embed(&g, Var::X).unwrap().symmetrize();
        let r = reduce_mod_qk(&f, &pair, 1, CoefficientWindow::default());
        assert_eq!(r, Err(SurgeryError::DenominatorNotCleared));
    }

    #[test]
    fn symmetry_checks() {
        assert!(check_symmetry(&TriVarElem::constant(int(3))));
        assert!(!check_symmetry(&TriVarElem::var(Var::X)));
        let s = TriVarElem::var(Var::X).symmetrize();
        assert!(!check_symmetry(&s));
        assert!(check_symmetry(&(&s + &s.invert())));
    }
}
