//! Laurent polynomials in `x, y`. Elements of the three-variable ring with
//! `xyz = 1` are stored here after eliminating `z = (xy)^{-1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{denominator_lcm, format_rational, Rational};
use super::ring::{GcdDomain, Poly, ZPoly, ZPoly2};

/// Exponent pair `(i, j)` for the monomial `x^i y^j`.
pub type Exp2 = (i64, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiLaurent {
    terms: BTreeMap<Exp2, Rational>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: Rational, e: Exp2) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        BiLaurent { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exp2, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exp2, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp2, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: Exp2) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
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

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// Componentwise minimum and maximum exponents.
    pub fn exponent_box(&self) -> Option<(Exp2, Exp2)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        Some(it.fold(((i0, j0), (i0, j0)), |((a, b), (c, d)), &(i, j)| {
            ((a.min(i), b.min(j)), (c.max(i), d.max(j)))
        }))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiLaurent { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn shift(&self, by: Exp2) -> Self {
        BiLaurent { terms: self.terms.iter().map(|(&(i, j), v)| ((i + by.0, j + by.1), v.clone())).collect() }
    }

    /// Substitutes `x -> x^a y^b`, `y -> x^c y^d` given as images of the
    /// exponent basis vectors.
    pub fn map_exponents(&self, image_x: Exp2, image_y: Exp2) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), v)| {
            ((i * image_x.0 + j * image_y.0, i * image_x.1 + j * image_y.1), v.clone())
        }))
    }

    /// Coefficient of the largest monomial in (y-degree, x-degree) order.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.iter().max_by_key(|(&(i, j), _)| (j, i)).map(|(_, c)| c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Writes `self = x^a y^b * P(x, y) / scale` with `P` in Z[x][y] not
    /// divisible by `x` or `y`. `None` for zero.
    pub fn to_zpoly2(&self) -> Option<(Exp2, BigInt, ZPoly2)> {
        let ((mi, mj), (xi, xj)) = self.exponent_box()?;
        let lcm = denominator_lcm(self.terms.values());
        let scale = Rational::from_integer(lcm.clone());
        let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); (xi - mi + 1) as usize]; (xj - mj + 1) as usize];
        for (&(i, j), c) in &self.terms {
            rows[(j - mj) as usize][(i - mi) as usize] = (c * &scale).to_integer();
        }
        let p = Poly::from_coeffs(rows.into_iter().map(Poly::from_coeffs).collect());
        Some(((mi, mj), lcm, p))
    }

    pub fn from_zpoly2(shift: Exp2, p: &ZPoly2, scale: &Rational) -> Self {
        let mut terms = BTreeMap::new();
        for (j, row) in p.coeffs().iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((shift.0 + i as i64, shift.1 + j as i64), Rational::from_integer(c.clone()) * scale);
                }
            }
        }
        BiLaurent { terms }
    }

    /// Evaluates along the line `x = 1 + s`, `y = 1 + beta s`, after removing
    /// the monomial factor (which tends to 1 as s -> 0).
    pub fn eval_on_line(&self, beta: &Rational) -> Poly<BigRational> {
        let Some((_, lcm, p)) = self.to_zpoly2() else {
            return Poly::zero();
        };
        let one = BigRational::one();
        let xs: Poly<BigRational> = Poly::from_coeffs(vec![one.clone(), one.clone()]);
        let ys: Poly<BigRational> = Poly::from_coeffs(vec![one, beta.clone()]);
        let lift_int = |c: &BigInt| Poly::constant(BigRational::from_integer(c.clone()));
        let unscaled = p.eval_with(&ys, |row: &ZPoly| row.eval_with(&xs, lift_int));
        unscaled.scale(&BigRational::new(BigInt::one(), lcm))
    }
}

/// Gcd of the polynomial parts (monomial factors ignored), as a primitive
/// integer polynomial.
pub fn poly_gcd(a: &BiLaurent, b: &BiLaurent) -> ZPoly2 {
    let (_, _, pa) = a.to_zpoly2().expect("gcd of zero");
    let (_, _, pb) = b.to_zpoly2().expect("gcd of zero");
    super::heugcd::gcd_z2(&pa, &pb)
}

/// `a / g` for a polynomial factor `g` of `a`'s polynomial part.
pub fn div_by_factor(a: &BiLaurent, g: &ZPoly2) -> BiLaurent {
    let Some((shift, lcm, pa)) = a.to_zpoly2() else {
        return BiLaurent::zero();
    };
    let q = pa.div_exact(g);
    BiLaurent::from_zpoly2(shift, &q, &Rational::new(BigInt::one(), lcm))
}

impl Add for &BiLaurent {
    type Output = BiLaurent;
    fn add(self, o: &BiLaurent) -> BiLaurent {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }
}

impl Sub for &BiLaurent {
    type Output = BiLaurent;
    fn sub(self, o: &BiLaurent) -> BiLaurent {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, -c);
        }
        r
    }
}

impl Mul for &BiLaurent {
    type Output = BiLaurent;
    fn mul(self, o: &BiLaurent) -> BiLaurent {
        let mut r = BiLaurent::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                r.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        r
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            for (v, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(v.to_string()),
                    e => parts.push(format!("{v}^{e}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", parts.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), parts.join("*"))?;
            }
        }
        Ok(())
    }
}
