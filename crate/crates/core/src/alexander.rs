//! Symmetric normalization of Alexander-type polynomials and the
//! functionals `I_Δ` and `J_Δ`.

use num_traits::{One, Zero};

use crate::algebra::{HLPoly, OneVarFrac};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlexanderError {
    #[error("zero polynomial cannot be normalized")]
    ZeroPolynomial,
    #[error("polynomial is not symmetric after the monomial shift")]
    NotSymmetrizable,
    #[error("polynomial vanishes at t = 1")]
    NonUnitAtOne,
    #[error("invalid Alexander pair: {0}")]
    InvalidPair(&'static str),
}

/// `c t^{-(max+min)/2} P` with `c` chosen so the value at `t = 1` is 1.
pub fn normalize_symmetric(p: &HLPoly) -> Result<HLPoly, AlexanderError> {
    let (Some(lo), Some(hi)) = (p.min_doubled(), p.max_doubled()) else {
        return Err(AlexanderError::ZeroPolynomial);
    };
    // Center of the doubled range; an odd sum would need a quarter power.
    let total = hi + lo;
    if total % 2 != 0 {
        return Err(AlexanderError::NotSymmetrizable);
    }
    let shifted = p.shift_doubled(-total / 2);
    if !shifted.is_symmetric() {
        return Err(AlexanderError::NotSymmetrizable);
    }
    let v = shifted.eval_at_one();
    if v.is_zero() {
        return Err(AlexanderError::NonUnitAtOne);
    }
    Ok(shifted.scale(&v.recip()))
}

/// The normalized pair `(Δ, δ)` of a rank-one manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderPair {
    delta_big: HLPoly,
    delta: HLPoly,
}

impl AlexanderPair {
    /// Validates `Δ` (integer exponents, symmetric, `Δ(1) = 1`) and `δ`
    /// (symmetric, `δ(1) = 1`, all exponents of one parity).
    pub fn new(delta_big: HLPoly, delta: HLPoly) -> Result<Self, AlexanderError> {
        if delta_big.has_half_powers() {
            return Err(AlexanderError::InvalidPair("Delta must have integer exponents"));
        }
        let checks = [
            (&delta_big, "Delta is not symmetric", "Delta(1) != 1"),
            (&delta, "delta is not symmetric", "delta(1) != 1"),
        ];
        for (p, not_sym, not_one) in checks {
            if !p.is_symmetric() {
                return Err(AlexanderError::InvalidPair(not_sym));
            }
            if !p.eval_at_one().is_one() {
                return Err(AlexanderError::InvalidPair(not_one));
            }
        }
        if !delta.has_uniform_parity() {
            return Err(AlexanderError::InvalidPair("delta mixes integer and half-integer exponents"));
        }
        Ok(AlexanderPair { delta_big, delta })
    }

    /// `Δ = δ = 1`, the pair of `S¹ × S²`.
    pub fn trivial() -> Self {
        AlexanderPair { delta_big: HLPoly::one(), delta: HLPoly::one() }
    }

    /// Same polynomial for `Δ` and `δ` (the case of simple roots).
    pub fn equal(p: HLPoly) -> Result<Self, AlexanderError> {
        Self::new(p.clone(), p)
    }

    #[allow(non_snake_case)]
    pub fn Delta(&self) -> &HLPoly {
        &self.delta_big
    }

    pub fn delta(&self) -> &HLPoly {
        &self.delta
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_big == HLPoly::one() && self.delta == HLPoly::one()
    }
}

/// `(1+t)/(1-t)`.
pub fn cayley() -> OneVarFrac {
    OneVarFrac::new(HLPoly::from_int_terms(&[(0, 1), (1, 1)]), HLPoly::from_int_terms(&[(0, 1), (1, -1)]))
        .expect("nonzero denominator")
}

/// `J_Δ = tΔ'(t)/Δ(t)`.
pub fn j_delta(pair: &AlexanderPair) -> OneVarFrac {
    let d = pair.Delta();
    let num = &HLPoly::t_pow(1) * &d.derivative();
    OneVarFrac::new(num, d.clone()).expect("Delta(1) = 1 so Delta is nonzero")
}

/// `I_Δ = (1+t)/(1-t) + tΔ'(t)/Δ(t)`.
pub fn i_delta(pair: &AlexanderPair) -> OneVarFrac {
    &cayley() + &j_delta(pair)
}
