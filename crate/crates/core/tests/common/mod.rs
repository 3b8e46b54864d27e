//! Independent oracles shared by the integration tests. Nothing here uses
//! the crate's fraction reduction or limit machinery: values are computed
//! by direct substitution at rational points.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use eqcube::algebra::rational::Rational;
use eqcube::algebra::{BiLaurent, HLPoly, OneVarFrac, TriVarElem};

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn pow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `p(t)` for a polynomial with integer exponents.
pub fn eval_poly(p: &HLPoly, t: &Rational) -> Rational {
    p.terms()
        .map(|(k, c)| {
            assert!(k % 2 == 0, "half power in point evaluation");
            c * pow(t, k / 2)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

pub fn eval_frac(f: &OneVarFrac, t: &Rational) -> Option<Rational> {
    let d = eval_poly(f.denom(), t);
    if d.is_zero() {
        return None;
    }
    Some(eval_poly(f.numer(), t) / d)
}

fn eval_bi(p: &BiLaurent, x: &Rational, y: &Rational) -> Rational {
    p.terms().map(|((i, j), c)| c * pow(x, i) * pow(y, j)).fold(Rational::zero(), |a, b| a + b)
}

/// `f(x, y, (xy)^{-1})` from the stored numerator and denominator.
pub fn eval_tri(f: &TriVarElem, x: &Rational, y: &Rational) -> Option<Rational> {
    let d = eval_bi(f.denom(), x, y);
    if d.is_zero() {
        return None;
    }
    Some(eval_bi(f.numer(), x, y) / d)
}

/// The six orderings of `(x, y, z)`.
pub fn permutations(x: &Rational, y: &Rational) -> Vec<[Rational; 3]> {
    let z = (x * y).recip();
    let (a, b, c) = (x.clone(), y.clone(), z);
    vec![
        [a.clone(), b.clone(), c.clone()],
        [a.clone(), c.clone(), b.clone()],
        [b.clone(), a.clone(), c.clone()],
        [b.clone(), c.clone(), a.clone()],
        [c.clone(), a.clone(), b.clone()],
        [c, b, a],
    ]
}

/// Sample points away from the usual poles.
pub fn points() -> Vec<(Rational, Rational)> {
    vec![(r(2, 1), r(3, 1)), (r(-3, 2), r(5, 7)), (r(7, 3), r(-2, 5)), (r(11, 4), r(13, 9))]
}

/// `|CS_2|` by brute force: every assignment of an ordered pair of distinct
/// vertices to each of 6 edges on 4 vertices, kept when every vertex has
/// degree 3 and the graph is connected.
pub fn cs2_brute_force() -> u64 {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    assert_eq!(pairs.len(), 12);
    let mut count = 0;
    let mut idx = [0usize; 6];
    'outer: loop {
        let mut deg = [0u8; 4];
        let mut adj = [[false; 4]; 4];
        for &i in &idx {
            let (u, v) = pairs[i];
            deg[u] += 1;
            deg[v] += 1;
            adj[u][v] = true;
            adj[v][u] = true;
        }
        if deg.iter().all(|&d| d == 3) {
            let mut seen = [true, false, false, false];
            for _ in 0..4 {
                for u in 0..4 {
                    for v in 0..4 {
                        if seen[u] && adj[u][v] {
                            seen[v] = true;
                        }
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                count += 1;
            }
        }
        for slot in idx.iter_mut() {
            *slot += 1;
            if *slot < 12 {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    count
}

/// Determinant by permutation expansion over polynomials in `t^{1/2}`.
pub fn det(m: &[Vec<HLPoly>]) -> HLPoly {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = HLPoly::zero();
    loop {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = HLPoly::one();
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &m[i][j];
        }
        total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

/// `det(t^{1/2} S - t^{-1/2} S^T)`.
pub fn seifert_alexander(s: &[Vec<i64>]) -> HLPoly {
    let n = s.len();
    let m: Vec<Vec<HLPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| HLPoly::from_doubled_terms([(1, r(s[i][j], 1)), (-1, r(-s[j][i], 1))]))
                .collect()
        })
        .collect();
    det(&m)
}

/// Seifert matrix in the basis `(a_1..a_g, b_1..b_g)` from blocks.
pub fn seifert_from_blocks(laa: &[Vec<i64>], lab: &[Vec<i64>], lba: &[Vec<i64>], lbb: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let g = laa.len();
    let mut s = vec![vec![0; 2 * g]; 2 * g];
    for i in 0..g {
        for j in 0..g {
            s[i][j] = laa[i][j];
            s[i][g + j] = lab[i][j];
            s[g + i][j] = lba[i][j];
            s[g + i][g + j] = lbb[i][j];
        }
    }
    s
}

/// `Σ_{k=1}^{p-1} (k/p - ⌊k/p⌋ - 1/2)(kq/p - ⌊kq/p⌋ - 1/2)` with the
/// sawtooth zero at integers, by floor arithmetic on rationals.
pub fn dedekind_oracle(q: i64, p: i64) -> Rational {
    let saw = |x: Rational| -> Rational {
        if x.is_integer() {
            Rational::zero()
        } else {
            let fl = x.floor();
            x - fl - r(1, 2)
        }
    };
    let mut s = Rational::zero();
    for k in 1..p {
        s += saw(r(k, p)) * saw(r(k * q, p));
    }
    s
}

pub fn abs(x: &Rational) -> Rational {
    x.abs()
}
