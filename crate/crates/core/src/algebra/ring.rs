//! Dense univariate polynomials over a commutative ring, and the
//! subresultant gcd used to reduce fractions.
//!
//! `Poly<BigInt>` is Z[s]; `Poly<Poly<BigInt>>` is Z[x][y]. Both are gcd
//! domains, which is all the fraction types need: one-variable fractions
//! reduce in Z[s] with s = t^{1/2}, two-variable fractions reduce in Z[x][y].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Ring: Clone + PartialEq + std::fmt::Debug + Zero + One {
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Integral domain with exact division and a gcd normalized to a unique
/// associate (positive leading coefficient).
pub trait GcdDomain: Ring {
    /// `self / other`, assuming the division is exact.
    fn div_exact(&self, other: &Self) -> Self;
    /// `Some(self / other)` when `other` divides `self`.
    fn try_div(&self, other: &Self) -> Option<Self>;
    fn gcd_norm(&self, other: &Self) -> Self;
    /// Sign of the "leading" coefficient, used to pick the positive associate.
    fn is_negative_unit_class(&self) -> bool;
}

macro_rules! scalar_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn add_ref(&self, o: &Self) -> Self {
                self + o
            }
            fn sub_ref(&self, o: &Self) -> Self {
                self - o
            }
            fn mul_ref(&self, o: &Self) -> Self {
                self * o
            }
            fn neg_ref(&self) -> Self {
                -self
            }
        }
    };
}
scalar_ring!(BigInt);
scalar_ring!(BigRational);

impl GcdDomain for BigInt {
    fn div_exact(&self, o: &Self) -> Self {
        debug_assert!((self % o).is_zero(), "inexact integer division");
        self / o
    }
    fn try_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(o);
        r.is_zero().then_some(q)
    }
    fn gcd_norm(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_negative_unit_class(&self) -> bool {
        self.is_negative()
    }
}

/// Dense polynomial, ascending degree. Empty vector is zero; otherwise the
/// last coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: R, deg: usize) -> Self {
        if c.is_zero() {
            return Poly { coeffs: Vec::new() };
        }
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn shift(&self, by: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); by];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    /// Horner evaluation in any ring containing the coefficients.
    pub fn eval_with<S: Ring>(&self, at: &S, lift: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at).add_ref(&lift(c));
        }
        acc
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<R: Ring> std::ops::Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<R: Ring> std::ops::Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn add_ref(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = R::zero();
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = o.coeffs.get(i).unwrap_or(&zero);
                a.add_ref(b)
            })
            .collect();
        Self::from_coeffs(c)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut c = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Self::from_coeffs(c)
    }
    fn neg_ref(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(R::neg_ref).collect() }
    }
}

impl<D: GcdDomain> Poly<D> {
    /// Gcd of the coefficients, normalized.
    pub fn content(&self) -> D {
        let mut g = D::zero();
        for c in &self.coeffs {
            g = g.gcd_norm(c);
            if g == D::one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        let mut p = self.div_scalar(&c);
        if p.lead().is_some_and(|l| l.is_negative_unit_class()) {
            p = p.neg_ref();
        }
        p
    }

    pub fn div_scalar(&self, c: &D) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.div_exact(c)).collect())
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lead().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = r.scale(&lb).sub_ref(&b.scale(&lr).shift(dr - db));
            steps -= 1;
        }
        if steps > 0 {
            let mut f = D::one();
            for _ in 0..steps {
                f = f.mul_ref(&lb);
            }
            r = r.scale(&f);
        }
        r
    }

    /// Exact quotient `self / b`; panics in debug builds if inexact.
    pub fn div_poly_exact(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lead().unwrap();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < db {
            debug_assert!(r.is_zero(), "inexact polynomial division");
            return Self::zero();
        }
        let mut q = vec![D::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lead().unwrap().div_exact(lb);
            r = r.sub_ref(&b.scale(&c).shift(dr - db));
            q[dr - db] = c;
        }
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Self::from_coeffs(q)
    }

    /// Subresultant polynomial remainder sequence gcd.
    fn subresultant_gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_part().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive_part().scale(&a.content());
        }
        let (mut a, mut b) = if a.degree() >= b.degree() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        let d = a.content().gcd_norm(&b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        let mut g = D::one();
        let mut h = D::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            if r.degree() == Some(0) {
                b = Self::one();
                break;
            }
            a = b;
            let mut hd = D::one();
            for _ in 0..delta {
                hd = hd.mul_ref(&h);
            }
            b = r.div_scalar(&g.mul_ref(&hd));
            g = a.lead().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let mut gd = D::one();
                for _ in 0..delta {
                    gd = gd.mul_ref(&g);
                }
                let mut hd1 = D::one();
                for _ in 0..delta - 1 {
                    hd1 = hd1.mul_ref(&h);
                }
                gd.div_exact(&hd1)
            };
        }
        b.primitive_part().scale(&d)
    }
}

impl<D: GcdDomain> GcdDomain for Poly<D> {
    fn div_exact(&self, o: &Self) -> Self {
        self.div_poly_exact(o)
    }
    fn try_div(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let lb = b.lead().unwrap();
        let Some(da) = self.degree() else { return Some(Self::zero()) };
        if da < db {
            return None;
        }
        let mut r = self.clone();
        let mut q = vec![D::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lead().unwrap().try_div(lb)?;
            r = r.sub_ref(&b.scale(&c).shift(dr - db));
            q[dr - db] = c;
        }
        Some(Self::from_coeffs(q))
    }
    fn gcd_norm(&self, o: &Self) -> Self {
        let g = Self::subresultant_gcd(self, o);
        if g.lead().is_some_and(|l| l.is_negative_unit_class()) {
            g.neg_ref()
        } else {
            g
        }
    }
    fn is_negative_unit_class(&self) -> bool {
        self.lead().is_some_and(|l| l.is_negative_unit_class())
    }
}

pub type ZPoly = Poly<BigInt>;
pub type ZPoly2 = Poly<ZPoly>;
