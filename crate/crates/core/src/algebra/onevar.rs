//! Rational functions of one variable `t`, allowing half-integer exponents.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::hlpoly::HLPoly;
use super::rational::Rational;
use super::ring::GcdDomain;
use super::AlgebraError;

/// A reduced fraction `num / den` of half-integer Laurent polynomials.
///
/// Normal form: gcd(num, den) = 1 in Q[s^{±1}] with s = t^{1/2}; `den` has
/// lowest exponent 0 and leading coefficient 1. Structural equality is
/// therefore equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneVarFrac {
    num: HLPoly,
    den: HLPoly,
}

impl OneVarFrac {
    pub fn new(num: HLPoly, den: HLPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        OneVarFrac { num: HLPoly::zero(), den: HLPoly::one() }
    }

    pub fn one() -> Self {
        OneVarFrac { num: HLPoly::one(), den: HLPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(HLPoly::constant(c))
    }

    pub fn from_poly(p: HLPoly) -> Self {
        Self::reduce(p, HLPoly::one())
    }

    fn reduce(num: HLPoly, den: HLPoly) -> Self {
        let Some((mn, ln, n)) = num.to_integer_s_poly() else {
            return Self::zero();
        };
        let (md, ld, d) = den.to_integer_s_poly().expect("nonzero denominator");
        let g = super::heugcd::gcd_z(&n, &d);
        let n = n.div_exact(&g);
        let d = d.div_exact(&g);
        let lc = Rational::from_integer(d.lead().unwrap().clone());
        let num_scale = Rational::new(ld, ln) / &lc;
        OneVarFrac {
            num: HLPoly::from_s_poly(mn - md, &n, &num_scale),
            den: HLPoly::from_s_poly(0, &d, &lc.recip()),
        }
    }

    pub fn numer(&self) -> &HLPoly {
        &self.num
    }

    pub fn denom(&self) -> &HLPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&HLPoly> {
        (self.den == HLPoly::one()).then_some(&self.num)
    }

    pub fn has_half_powers(&self) -> bool {
        self.num.has_half_powers() || self.den.has_half_powers()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        OneVarFrac { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, AlgebraError> {
        if o.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &o.den, &self.den * &o.num))
    }

    /// `f(t) -> f(t^{-1})`, renormalized.
    pub fn invert_var(&self) -> Self {
        Self::reduce(self.num.invert_var(), self.den.invert_var())
    }

    /// d/dt by the quotient rule.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    /// Value at t = 1, if the denominator does not vanish there.
    pub fn eval_at_one(&self) -> Option<Rational> {
        let d = self.den.eval_at_one();
        (!d.is_zero()).then(|| self.num.eval_at_one() / d)
    }
}

impl From<HLPoly> for OneVarFrac {
    fn from(p: HLPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &OneVarFrac {
    type Output = OneVarFrac;
    fn add(self, o: &OneVarFrac) -> OneVarFrac {
        if self.den == o.den {
            return OneVarFrac::reduce(&self.num + &o.num, self.den.clone());
        }
        OneVarFrac::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &OneVarFrac {
    type Output = OneVarFrac;
    fn sub(self, o: &OneVarFrac) -> OneVarFrac {
        self + &(-o)
    }
}

impl Mul for &OneVarFrac {
    type Output = OneVarFrac;
    fn mul(self, o: &OneVarFrac) -> OneVarFrac {
        OneVarFrac::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &OneVarFrac {
    type Output = OneVarFrac;
    fn neg(self) -> OneVarFrac {
        OneVarFrac { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for OneVarFrac {
    type Output = OneVarFrac;
    fn neg(self) -> OneVarFrac {
        -&self
    }
}

impl Add for OneVarFrac {
    type Output = OneVarFrac;
    fn add(self, o: OneVarFrac) -> OneVarFrac {
        &self + &o
    }
}

impl Sub for OneVarFrac {
    type Output = OneVarFrac;
    fn sub(self, o: OneVarFrac) -> OneVarFrac {
        &self - &o
    }
}

impl Mul for OneVarFrac {
    type Output = OneVarFrac;
    fn mul(self, o: OneVarFrac) -> OneVarFrac {
        &self * &o
    }
}

impl fmt::Display for OneVarFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(terms: &[(i64, i64)]) -> HLPoly {
        HLPoly::from_int_terms(terms)
    }

    fn frac(n: &[(i64, i64)], d: &[(i64, i64)]) -> OneVarFrac {
        OneVarFrac::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn geometric_pair_sums_to_one() {
        // 1/(1-t) + 1/(1-t^-1) = 1
        let a = frac(&[(0, 1)], &[(0, 1), (1, -1)]);
        let b = frac(&[(0, 1)], &[(0, 1), (-1, -1)]);
        assert_eq!(&a + &b, OneVarFrac::one());
    }

    #[test]
    fn inversion_of_cayley_fraction() {
        // (1+t)/(1-t) -> -(1+t)/(1-t)
        let a = frac(&[(0, 1), (1, 1)], &[(0, 1), (1, -1)]);
        assert_eq!(a.invert_var(), -&a);
    }

    #[test]
    fn normal_form_is_canonical() {
        // (t^2 - 1)/(2t - 2) built two ways equals (t + 1)/2
        let a = frac(&[(2, 1), (0, -1)], &[(1, 2), (0, -2)]);
        let b = OneVarFrac::from_poly(p(&[(1, 1), (0, 1)])).scale(&crate::algebra::rational::rat(1, 2));
        assert_eq!(a, b);
        assert_eq!(a.denom(), &HLPoly::one());
        // t^-3 / t^-1 = t^-2
        let c = frac(&[(-3, 5)], &[(-1, 5)]);
        assert_eq!(c.as_poly(), Some(&p(&[(-2, 1)])));
    }

    #[test]
    fn half_power_gcd() {
        // (t^{1/2} + t^{-1/2}) / (t + 1) = t^{-1/2}
        let n = HLPoly::from_doubled_terms([(1, int(1)), (-1, int(1))]);
        let f = OneVarFrac::new(n, p(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(f.as_poly(), Some(&HLPoly::monomial(int(1), -1)));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(OneVarFrac::new(HLPoly::one(), HLPoly::zero()), Err(AlgebraError::DivisionByZero));
        assert!(OneVarFrac::one().checked_div(&OneVarFrac::zero()).is_err());
    }

    #[test]
    fn quotient_rule() {
        // d/dt 1/t = -1/t^2
        let f = frac(&[(0, 1)], &[(1, 1)]);
        assert_eq!(f.derivative().as_poly(), Some(&p(&[(-2, -1)])));
    }
}
