//! Dedekind sums and the Casson-Walker invariant of the lens spaces
//! obtained by `p/q` surgery on the unknot.
//!
//! Normalization: `λ` is Casson's (so `λ = λ_W / 2` for Walker's `λ_W`).
//! For `p/q` surgery on the unknot, `λ = -s(q, p) / 2` once `p > 0`; this is
//! the lens-space term of the Boyer-Lines surgery formula
//! `λ(K(p/q)) = λ(U(p/q)) + (q / 2p) Δ_K''(1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CassonError {
    #[error("{q} and {p} are not coprime")]
    NotCoprime { q: i64, p: i64 },
    #[error("p must be positive for a Dedekind sum, got {0}")]
    NonPositiveP(i64),
    #[error("surgery coefficient needs p != 0")]
    ZeroP,
    #[error("surgery coefficient needs q != 0")]
    ZeroQ,
}

/// A surgery slope `p/q` with `gcd(|p|, |q|) = 1` and `q != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurgeryCoefficient {
    p: i64,
    q: i64,
}

impl SurgeryCoefficient {
    pub fn new(p: i64, q: i64) -> Result<Self, CassonError> {
        if q == 0 {
            return Err(CassonError::ZeroQ);
        }
        if p == 0 {
            return Err(CassonError::ZeroP);
        }
        if p.gcd(&q) != 1 {
            return Err(CassonError::NotCoprime { q, p });
        }
        Ok(SurgeryCoefficient { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `q/p`.
    pub fn inverse_slope(&self) -> Rational {
        Rational::new(BigInt::from(self.q), BigInt::from(self.p))
    }
}

/// Sawtooth `((x))`: `x - floor(x) - 1/2`, and 0 on integers.
fn sawtooth(num: i64, den: i64) -> Rational {
    let r = num.rem_euclid(den);
    if r == 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(2 * r - den), BigInt::from(2 * den))
}

/// `s(q, p) = Σ_{k=1}^{p-1} ((k/p)) ((kq/p))`.
pub fn dedekind_sum(q: i64, p: i64) -> Result<Rational, CassonError> {
    if p < 1 {
        return Err(CassonError::NonPositiveP(p));
    }
    if q.gcd(&p) != 1 {
        return Err(CassonError::NotCoprime { q, p });
    }
    let p128 = p as i128;
    let q_mod = q.rem_euclid(p) as i128;
    let mut acc = Rational::zero();
    for k in 1..p {
        let kq = ((k as i128 * q_mod) % p128) as i64;
        acc += sawtooth(k, p) * sawtooth(kq, p);
    }
    Ok(acc)
}

/// `λ` of the lens space given by `p/q` surgery on the unknot.
pub fn lambda_lens(c: &SurgeryCoefficient) -> Rational {
    let (p, q) = if c.p < 0 { (-c.p, -c.q) } else { (c.p, c.q) };
    let s = dedekind_sum(q, p).expect("coefficient is coprime with p > 0");
    -s / Rational::from_integer(BigInt::from(2))
}

/// Convenience wrapper checking the coefficient first.
pub fn lambda_lens_pq(p: i64, q: i64) -> Result<Rational, CassonError> {
    Ok(lambda_lens(&SurgeryCoefficient::new(p, q)?))
}

/// `s(q,p) + s(p,q) - (-1/4 + (p/q + q/p + 1/(pq)) / 12)`, zero by reciprocity.
pub fn reciprocity_defect(q: i64, p: i64) -> Result<Rational, CassonError> {
    let r = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let rhs = -r(1, 4) + (r(p, q) + r(q, p) + r(1, p * q)) / r(12, 1);
    let lhs = dedekind_sum(q, p)? + dedekind_sum(p, q)?;
    Ok(lhs - rhs)
}
