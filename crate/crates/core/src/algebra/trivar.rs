//! Elements of the fraction field of Q[x^{±1}, y^{±1}, z^{±1}] / (xyz = 1).
//!
//! `z` never appears in storage: it is replaced by `(xy)^{-1}` on entry, so
//! every element is a reduced fraction of two-variable Laurent polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bilaurent::{div_by_factor, poly_gcd, BiLaurent, Exp2};
use super::onevar::OneVarFrac;
use super::rational::Rational;
use super::ring::Poly;
use super::AlgebraError;

/// One of the three variables of the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    /// Exponent vector of the variable once `z = (xy)^{-1}` is eliminated.
    pub fn exponent(self) -> Exp2 {
        match self {
            Var::X => (1, 0),
            Var::Y => (0, 1),
            Var::Z => (-1, -1),
        }
    }
}

/// The six permutations of `(x, y, z)`, each given as the images of
/// `(x, y, z)`.
pub const PERMUTATIONS: [[Var; 3]; 6] = [
    [Var::X, Var::Y, Var::Z],
    [Var::X, Var::Z, Var::Y],
    [Var::Y, Var::X, Var::Z],
    [Var::Y, Var::Z, Var::X],
    [Var::Z, Var::X, Var::Y],
    [Var::Z, Var::Y, Var::X],
];

/// Probe slopes for the limit at (1, 1, 1).
const PROBE_SLOPES: [i64; 3] = [2, 3, 5];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriVarElem {
    num: BiLaurent,
    den: BiLaurent,
}

impl TriVarElem {
    pub fn new(num: BiLaurent, den: BiLaurent) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        TriVarElem { num: BiLaurent::zero(), den: BiLaurent::one() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        TriVarElem { num: BiLaurent::constant(c), den: BiLaurent::one() }
    }

    pub fn from_laurent(p: BiLaurent) -> Self {
        Self::normalize_units(p, BiLaurent::one())
    }

    pub fn var(v: Var) -> Self {
        Self::from_laurent(BiLaurent::monomial(Rational::one(), v.exponent()))
    }

    pub fn numer(&self) -> &BiLaurent {
        &self.num
    }

    pub fn denom(&self) -> &BiLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den == BiLaurent::one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    fn reduce(num: BiLaurent, den: BiLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        Self::normalize_units(div_by_factor(&num, &g), div_by_factor(&den, &g))
    }

    /// Fixes the unit ambiguity of an already coprime pair: the denominator
    /// gets minimal exponents (0, 0) and leading coefficient 1.
    fn normalize_units(num: BiLaurent, den: BiLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let ((mi, mj), _) = den.exponent_box().expect("nonzero denominator");
        let lc = den.leading_coeff().unwrap().clone();
        let inv = lc.recip();
        TriVarElem { num: num.shift((-mi, -mj)).scale(&inv), den: den.shift((-mi, -mj)).scale(&inv) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TriVarElem { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, AlgebraError> {
        if o.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &o.den, &self.den * &o.num))
    }

    fn substitute(&self, image_x: Exp2, image_y: Exp2) -> Self {
        Self::normalize_units(self.num.map_exponents(image_x, image_y), self.den.map_exponents(image_x, image_y))
    }

    /// `f(x, y, z) -> f(σx, σy, σz)` where `perm` lists `(σx, σy, σz)`.
    pub fn permute(&self, perm: [Var; 3]) -> Self {
        self.substitute(perm[0].exponent(), perm[1].exponent())
    }

    /// `f(x, y, z) -> f(x^{-1}, y^{-1}, z^{-1})`.
    pub fn invert(&self) -> Self {
        self.substitute((-1, 0), (0, -1))
    }

    /// Sum of `f∘σ` over the six permutations of `(x, y, z)`.
    pub fn symmetrize(&self) -> Self {
        PERMUTATIONS.iter().fold(Self::zero(), |acc, p| &acc + &self.permute(*p))
    }

    pub fn is_permutation_invariant(&self) -> bool {
        PERMUTATIONS[1..].iter().all(|p| self.permute(*p) == *self)
    }

    /// Limit at `(x, y, z) = (1, 1, 1)` along the lines `x = 1 + s`,
    /// `y = 1 + βs` for β = 2, 3, 5. All three must exist and agree.
    pub fn eval_111(&self) -> Result<Rational, AlgebraError> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let mut value: Option<Rational> = None;
        for beta in PROBE_SLOPES {
            let beta = Rational::from_integer(BigInt::from(beta));
            let n = self.num.eval_on_line(&beta);
            let d = self.den.eval_on_line(&beta);
            let v = line_limit(&n, &d).ok_or(AlgebraError::NoLimit)?;
            match &value {
                None => value = Some(v),
                Some(prev) if *prev != v => return Err(AlgebraError::NoLimit),
                _ => {}
            }
        }
        Ok(value.unwrap())
    }
}

/// Value at s = 0 of `n(s)/d(s)` after cancelling powers of `s`.
fn line_limit(n: &Poly<Rational>, d: &Poly<Rational>) -> Option<Rational> {
    let vd = d.valuation()?;
    let Some(vn) = n.valuation() else {
        return Some(Rational::zero());
    };
    match vn.cmp(&vd) {
        std::cmp::Ordering::Less => None,
        std::cmp::Ordering::Greater => Some(Rational::zero()),
        std::cmp::Ordering::Equal => Some(&n.coeffs()[vn] / &d.coeffs()[vd]),
    }
}

/// Substitutes `t -> slot` in a one-variable fraction.
///
/// Fails with `HalfPowerResidue` when the reduced fraction still carries
/// half-integer exponents.
pub fn embed(f: &OneVarFrac, slot: Var) -> Result<TriVarElem, AlgebraError> {
    if f.has_half_powers() {
        return Err(AlgebraError::HalfPowerResidue);
    }
    let (a, b) = slot.exponent();
    let lift = |p: &super::hlpoly::HLPoly| {
        BiLaurent::from_terms(p.terms().map(|(k, c)| ((a * (k / 2), b * (k / 2)), c.clone())))
    };
    let num = lift(f.numer());
    let den = lift(f.denom());
    // t -> x or y keeps the pair coprime; t -> z only changes units.
    Ok(TriVarElem::normalize_units(num, den))
}

impl Add for &TriVarElem {
    type Output = TriVarElem;
    fn add(self, o: &TriVarElem) -> TriVarElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return TriVarElem::reduce(&self.num + &o.num, self.den.clone());
        }
        // a/(g b1) + c/(g d1) = (a d1 + c b1) / (g b1 d1)
        let g = poly_gcd(&self.den, &o.den);
        let b1 = div_by_factor(&self.den, &g);
        let d1 = div_by_factor(&o.den, &g);
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        TriVarElem::reduce(num, &self.den * &d1)
    }
}

impl Sub for &TriVarElem {
    type Output = TriVarElem;
    fn sub(self, o: &TriVarElem) -> TriVarElem {
        self + &(-o)
    }
}

impl Mul for &TriVarElem {
    type Output = TriVarElem;
    fn mul(self, o: &TriVarElem) -> TriVarElem {
        if self.is_zero() || o.is_zero() {
            return TriVarElem::zero();
        }
        // Cross-cancel before multiplying; the result is then coprime.
        let g1 = poly_gcd(&self.num, &o.den);
        let g2 = poly_gcd(&o.num, &self.den);
        let n = &div_by_factor(&self.num, &g1) * &div_by_factor(&o.num, &g2);
        let d = &div_by_factor(&self.den, &g2) * &div_by_factor(&o.den, &g1);
        TriVarElem::normalize_units(n, d)
    }
}

impl Neg for &TriVarElem {
    type Output = TriVarElem;
    fn neg(self) -> TriVarElem {
        TriVarElem { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for TriVarElem {
    type Output = TriVarElem;
    fn neg(self) -> TriVarElem {
        -&self
    }
}

impl Add for TriVarElem {
    type Output = TriVarElem;
    fn add(self, o: TriVarElem) -> TriVarElem {
        &self + &o
    }
}

impl Sub for TriVarElem {
    type Output = TriVarElem;
    fn sub(self, o: TriVarElem) -> TriVarElem {
        &self - &o
    }
}

impl Mul for TriVarElem {
    type Output = TriVarElem;
    fn mul(self, o: TriVarElem) -> TriVarElem {
        &self * &o
    }
}

impl fmt::Display for TriVarElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == BiLaurent::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hlpoly::HLPoly;
    use crate::algebra::rational::int;

    fn b(terms: &[((i64, i64), i64)]) -> BiLaurent {
        BiLaurent::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    fn elem(n: &[((i64, i64), i64)], d: &[((i64, i64), i64)]) -> TriVarElem {
        TriVarElem::new(b(n), b(d)).unwrap()
    }

    #[test]
    fn embedding_slots() {
        let t = OneVarFrac::from_poly(HLPoly::t_pow(1));
        assert_eq!(embed(&t, Var::X).unwrap(), TriVarElem::var(Var::X));
        assert_eq!(embed(&t, Var::Z).unwrap(), elem(&[((-1, -1), 1)], &[((0, 0), 1)]));
        let cayley = OneVarFrac::new(HLPoly::from_int_terms(&[(0, 1), (1, 1)]), HLPoly::from_int_terms(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(embed(&cayley, Var::Y).unwrap(), elem(&[((0, 0), 1), ((0, 1), 1)], &[((0, 0), 1), ((0, 1), -1)]));
        let half = OneVarFrac::from_poly(HLPoly::monomial(int(1), 1));
        assert_eq!(embed(&half, Var::X), Err(AlgebraError::HalfPowerResidue));
    }

    #[test]
    fn symmetrize_examples() {
        // x -> 2(x + y + (xy)^-1)
        let s = TriVarElem::var(Var::X).symmetrize();
        assert_eq!(s, TriVarElem::from_laurent(b(&[((1, 0), 2), ((0, 1), 2), ((-1, -1), 2)])));
        assert_eq!(TriVarElem::one().symmetrize(), TriVarElem::constant(int(6)));
        assert_eq!(s.symmetrize(), s.scale(&int(6)));
    }

    #[test]
    fn inversion() {
        assert_eq!(TriVarElem::var(Var::X).invert(), TriVarElem::from_laurent(b(&[((-1, 0), 1)])));
        let f = TriVarElem::from_laurent(b(&[((1, 0), 1), ((0, 1), 1), ((-1, -1), 1), ((-1, 0), 1), ((0, -1), 1), ((1, 1), 1)]));
        assert_eq!(f.invert(), f);
    }

    #[test]
    fn eval_111_cases() {
        assert_eq!(elem(&[((1, 0), 1), ((0, 0), -1)], &[((1, 0), 1), ((0, 0), -1)]).eval_111(), Ok(int(1)));
        assert_eq!(elem(&[((1, 0), 1), ((0, 0), -1)], &[((0, 1), 1), ((0, 0), -1)]).eval_111(), Err(AlgebraError::NoLimit));
        // 1/(x - 1) has a pole
        assert_eq!(elem(&[((0, 0), 1)], &[((1, 0), 1), ((0, 0), -1)]).eval_111(), Err(AlgebraError::NoLimit));
        // (x - 1)/x^3 -> 0
        assert_eq!(elem(&[((1, 0), 1), ((0, 0), -1)], &[((3, 0), 1)]).eval_111(), Ok(int(0)));
        // rational coefficients keep their denominators
        let r = crate::algebra::rational::rat(121, 6);
        assert_eq!(TriVarElem::constant(r.clone()).eval_111(), Ok(r));
        let half_x = TriVarElem::var(Var::X).scale(&crate::algebra::rational::rat(1, 2));
        assert_eq!(half_x.checked_div(&TriVarElem::constant(int(3))).unwrap().eval_111(), Ok(crate::algebra::rational::rat(1, 6)));
    }

    #[test]
    fn fraction_arithmetic_is_canonical() {
        // 1/(1-x) + x/(1-x) = (1+x)/(1-x); and ((1+x)/(1-x)) * ((1-x)/(1+x)) = 1
        let a = elem(&[((0, 0), 1)], &[((0, 0), 1), ((1, 0), -1)]);
        let c = elem(&[((1, 0), 1)], &[((0, 0), 1), ((1, 0), -1)]);
        let s = &a + &c;
        assert_eq!(s, elem(&[((0, 0), 1), ((1, 0), 1)], &[((0, 0), 1), ((1, 0), -1)]));
        let inv = TriVarElem::one().checked_div(&s).unwrap();
        assert_eq!(&s * &inv, TriVarElem::one());
        assert_eq!(&s - &s, TriVarElem::zero());
    }
}
