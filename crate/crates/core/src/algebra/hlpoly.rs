//! Laurent polynomials in `t` with half-integer exponents.
//!
//! Exponents are stored doubled: key `k` stands for `t^{k/2}`. Seen as a
//! Laurent polynomial in `s = t^{1/2}`, the key is simply the `s`-degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{denominator_lcm, format_rational, Rational};
use super::ring::{Poly, ZPoly};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLPoly {
    terms: BTreeMap<i64, Rational>,
}

impl HLPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^{doubled/2}`.
    pub fn monomial(c: Rational, doubled: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled, c);
        }
        HLPoly { terms }
    }

    /// `t^e` for an integer exponent.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Rational::one(), 2 * e)
    }

    /// Builds from `(doubled exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_doubled_terms(it: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    /// Integer-exponent convenience: `(e, c)` means `c * t^e`.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_doubled_terms(terms.iter().map(|&(e, c)| (2 * e, Rational::from_integer(c.into()))))
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, doubled: i64) -> Rational {
        self.terms.get(&doubled).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Constant value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn min_doubled(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_doubled(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn has_half_powers(&self) -> bool {
        self.terms.keys().any(|k| k.rem_euclid(2) == 1)
    }

    /// True when all exponents are integers, or all are strict half-integers.
    pub fn has_uniform_parity(&self) -> bool {
        let mut parities = self.terms.keys().map(|k| k.rem_euclid(2));
        match parities.next() {
            None => true,
            Some(p) => parities.all(|q| q == p),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HLPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Multiplies by `t^{doubled/2}`.
    pub fn shift_doubled(&self, doubled: i64) -> Self {
        HLPoly { terms: self.terms.iter().map(|(k, v)| (k + doubled, v.clone())).collect() }
    }

    /// d/dt, with d(t^{k/2})/dt = (k/2) t^{k/2 - 1}.
    pub fn derivative(&self) -> Self {
        Self::from_doubled_terms(
            self.terms.iter().map(|(k, v)| (k - 2, v * Rational::new(BigInt::from(*k), BigInt::from(2)))),
        )
    }

    /// `P(t) -> P(t^{-1})`.
    pub fn invert_var(&self) -> Self {
        HLPoly { terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.invert_var() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.invert_var() == -self
    }

    pub fn eval_at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Writes `self = s^{min} * p(s) / scale` with `p` in Z[s], `p(0) != 0`
    /// and `scale > 0`. Returns `None` for the zero polynomial.
    pub fn to_integer_s_poly(&self) -> Option<(i64, BigInt, ZPoly)> {
        let min = self.min_doubled()?;
        let max = self.max_doubled()?;
        let lcm = denominator_lcm(self.terms.values());
        let mut coeffs = vec![BigInt::zero(); (max - min + 1) as usize];
        for (k, c) in &self.terms {
            coeffs[(k - min) as usize] = (c * Rational::from_integer(lcm.clone())).to_integer();
        }
        Some((min, lcm, Poly::from_coeffs(coeffs)))
    }

    /// Inverse of [`to_integer_s_poly`](Self::to_integer_s_poly) up to the scale.
    pub fn from_s_poly(min: i64, p: &ZPoly, scale: &Rational) -> Self {
        Self::from_doubled_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (min + i as i64, Rational::from_integer(c.clone()) * scale)),
        )
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }
}

impl Add for &HLPoly {
    type Output = HLPoly;
    fn add(self, o: &HLPoly) -> HLPoly {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }
}

impl Sub for &HLPoly {
    type Output = HLPoly;
    fn sub(self, o: &HLPoly) -> HLPoly {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, -c);
        }
        r
    }
}

impl Mul for &HLPoly {
    type Output = HLPoly;
    fn mul(self, o: &HLPoly) -> HLPoly {
        let mut r = HLPoly::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                r.add_term(k1 + k2, c1 * c2);
            }
        }
        r
    }
}

impl Neg for &HLPoly {
    type Output = HLPoly;
    fn neg(self) -> HLPoly {
        HLPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for HLPoly {
            type Output = HLPoly;
            fn $m(self, o: HLPoly) -> HLPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for HLPoly {
    type Output = HLPoly;
    fn neg(self) -> HLPoly {
        -&self
    }
}

/// Exponent in text form: `"3"`, `"-1"`, `"1/2"`, `"-3/2"`.
pub fn format_doubled_exponent(k: i64) -> String {
    if k % 2 == 0 {
        (k / 2).to_string()
    } else {
        format!("{k}/2")
    }
}

impl fmt::Display for HLPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let exp = match *k {
                0 => String::new(),
                2 => "t".to_string(),
                k if k % 2 == 0 => format!("t^{}", k / 2),
                k => format!("t^({k}/2)"),
            };
            if exp.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{exp}")?;
            } else {
                write!(f, "{}*{exp}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn p(terms: &[(i64, i64)]) -> HLPoly {
        HLPoly::from_int_terms(terms)
    }

    #[test]
    fn derivative_power_rule() {
        // d/dt (t - 1 + t^-1) = 1 - t^-2
        let a = p(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(a.derivative(), p(&[(0, 1), (-2, -1)]));
        // d/dt t^{1/2} = 1/2 t^{-1/2}
        let h = HLPoly::monomial(int(1), 1);
        assert_eq!(h.derivative(), HLPoly::monomial(rat(1, 2), -1));
    }

    #[test]
    fn half_powers_multiply() {
        let h = HLPoly::monomial(int(1), 1);
        assert_eq!(&h * &h, HLPoly::t_pow(1));
    }

    #[test]
    fn inversion() {
        let a = p(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(a.invert_var(), a);
        assert_eq!(p(&[(2, 2)]).invert_var(), p(&[(-2, 2)]));
    }

    #[test]
    fn display_is_readable() {
        let a = p(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(a.to_string(), "t - 1 + t^-1");
        let h = HLPoly::monomial(rat(-3, 2), -1);
        assert_eq!(h.to_string(), "-3/2*t^(-1/2)");
    }

    #[test]
    fn s_poly_round_trip() {
        let a = HLPoly::from_doubled_terms([(-1, rat(1, 2)), (3, rat(2, 3))]);
        let (min, scale, z) = a.to_integer_s_poly().unwrap();
        assert_eq!(min, -1);
        let back = HLPoly::from_s_poly(min, &z, &Rational::new(1.into(), scale));
        assert_eq!(back, a);
    }
}
