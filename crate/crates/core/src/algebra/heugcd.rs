//! Heuristic gcd in Z[s] and Z[x][y]: evaluate at a large integer, take
//! the gcd one level down, rebuild the candidate from its balanced ξ-adic
//! digits and accept it only if it divides both inputs. Falls back to the
//! subresultant gcd after a few unlucky evaluation points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::ring::{GcdDomain, Poly, Ring, ZPoly, ZPoly2};

const ATTEMPTS: usize = 6;

fn int_content(p: &ZPoly) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn int_content2(p: &ZPoly2) -> BigInt {
    p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(&int_content(c)))
}

fn max_norm(p: &ZPoly) -> BigInt {
    p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn max_norm2(p: &ZPoly2) -> BigInt {
    p.coeffs().iter().map(max_norm).max().unwrap_or_default()
}

fn eval(p: &ZPoly, xi: &BigInt) -> BigInt {
    p.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * xi + c)
}

/// Balanced base-ξ digits of `c`, lowest first, as a polynomial.
fn digits(mut c: BigInt, xi: &BigInt) -> ZPoly {
    let half = xi / 2;
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut r = c.mod_floor(xi);
        if r > half {
            r -= xi;
        }
        c = (c - &r) / xi;
        out.push(r);
    }
    Poly::from_coeffs(out)
}

fn next_xi(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

fn start_xi(a: &BigInt, b: &BigInt) -> BigInt {
    a.min(b) * 2 + 29
}

fn positive<D: GcdDomain>(p: Poly<D>) -> Poly<D> {
    if p.is_negative_unit_class() {
        p.neg_ref()
    } else {
        p
    }
}

/// Gcd in Z[s] with positive leading coefficient.
pub fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() || b.is_zero() {
        return a.gcd_norm(b);
    }
    let (ca, cb) = (int_content(a), int_content(b));
    let c = ca.gcd(&cb);
    let (a1, b1) = (a.div_scalar(&ca), b.div_scalar(&cb));
    if a1.degree() == Some(0) || b1.degree() == Some(0) {
        return ZPoly::constant(c);
    }
    let mut xi = start_xi(&max_norm(&a1), &max_norm(&b1));
    for _ in 0..ATTEMPTS {
        let g = eval(&a1, &xi).gcd(&eval(&b1, &xi));
        let cand = digits(g, &xi);
        if !cand.is_zero() {
            let cand = positive(cand.div_scalar(&int_content(&cand)));
            if a1.try_div(&cand).is_some() && b1.try_div(&cand).is_some() {
                return cand.scale(&c);
            }
        }
        xi = next_xi(&xi);
    }
    a.gcd_norm(b)
}

/// Gcd in Z[x][y] (outer variable `y`) with positive leading coefficient.
pub fn gcd_z2(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    if a.is_zero() || b.is_zero() {
        return a.gcd_norm(b);
    }
    let (ca, cb) = (int_content2(a), int_content2(b));
    let c = ca.gcd(&cb);
    let scalar = |p: &ZPoly2, k: &BigInt| -> ZPoly2 {
        Poly::from_coeffs(p.coeffs().iter().map(|q| q.div_scalar(k)).collect())
    };
    let (a1, b1) = (scalar(a, &ca), scalar(b, &cb));
    let mut xi = start_xi(&max_norm2(&a1), &max_norm2(&b1));
    for _ in 0..ATTEMPTS {
        let lower = |p: &ZPoly2| -> ZPoly { Poly::from_coeffs(p.coeffs().iter().map(|q| eval(q, &xi)).collect()) };
        let (ea, eb) = (lower(&a1), lower(&b1));
        if ea.degree() == a1.degree() && eb.degree() == b1.degree() {
            let g = gcd_z(&ea, &eb);
            let cand: ZPoly2 = Poly::from_coeffs(g.coeffs().iter().map(|k| digits(k.clone(), &xi)).collect());
            if !cand.is_zero() {
                let k = int_content2(&cand);
                let cand = positive(scalar(&cand, &k));
                if a1.try_div(&cand).is_some() && b1.try_div(&cand).is_some() {
                    let cz = ZPoly::constant(c);
                    return Poly::from_coeffs(cand.coeffs().iter().map(|q| q.mul_ref(&cz)).collect());
                }
            }
        }
        xi = next_xi(&xi);
    }
    a.gcd_norm(b)
}
