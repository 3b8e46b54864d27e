//! Seeded random instances for property checks and demonstrations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::bilaurent::BiLaurent;
use crate::algebra::rational::{int, Rational};
use crate::algebra::{HLPoly, OneVarFrac, TriVarElem};
use crate::casson::SurgeryCoefficient;
use crate::diagram::{canonicalize, Edge, MonGraph};
use crate::surgery::SurgeryDatum;

/// Laurent polynomial with integer exponents in `[-deg, deg]` and
/// coefficients in `[-c, c]`.
pub fn laurent<R: Rng>(rng: &mut R, deg: i64, c: i64) -> HLPoly {
    let terms: Vec<(i64, i64)> = (-deg..=deg).map(|k| (k, rng.gen_range(-c..=c))).collect();
    HLPoly::from_int_terms(&terms)
}

/// Like [`laurent`], never zero.
pub fn nonzero_laurent<R: Rng>(rng: &mut R, deg: i64, c: i64) -> HLPoly {
    loop {
        let p = laurent(rng, deg, c);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Fraction with numerator and denominator of degree at most `deg`.
pub fn fraction<R: Rng>(rng: &mut R, deg: i64) -> OneVarFrac {
    let num = laurent(rng, deg, 3);
    if rng.gen_bool(0.5) {
        return OneVarFrac::from_poly(num);
    }
    OneVarFrac::new(num, nonzero_laurent(rng, deg, 3)).expect("nonzero denominator")
}

fn bilaurent<R: Rng>(rng: &mut R, deg: i64, c: i64) -> BiLaurent {
    let mut terms = Vec::new();
    for _ in 0..rng.gen_range(1..=4) {
        let e = (rng.gen_range(-deg..=deg), rng.gen_range(-deg..=deg));
        terms.push((e, int(rng.gen_range(-c..=c))));
    }
    BiLaurent::from_terms(terms)
}

/// Element of the three-variable fraction field with small sparse
/// numerator and denominator.
pub fn trivar<R: Rng>(rng: &mut R) -> TriVarElem {
    let num = bilaurent(rng, 2, 3);
    if rng.gen_bool(0.4) {
        return TriVarElem::from_laurent(num);
    }
    loop {
        let den = bilaurent(rng, 1, 2);
        if !den.is_zero() {
            return TriVarElem::new(num, den).expect("nonzero denominator");
        }
    }
}

/// Symmetric Laurent polynomial of degree at most `deg` with value 1 at
/// `t = 1`: `1 + Σ c_k (t^k - 2 + t^{-k})`.
pub fn alexander<R: Rng>(rng: &mut R, deg: i64) -> HLPoly {
    let mut p = HLPoly::one();
    for k in 1..=deg {
        let c = rng.gen_range(-2..=2);
        p = &p + &HLPoly::from_int_terms(&[(k, c), (0, -2 * c), (-k, c)]);
    }
    p
}

/// Coprime `(p, q)` with `1 ≤ |p|, |q| ≤ bound`.
pub fn coprime<R: Rng>(rng: &mut R, bound: i64) -> SurgeryCoefficient {
    loop {
        let p = rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let q = rng.gen_range(1..=bound) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if let Ok(c) = SurgeryCoefficient::new(p, q) {
            return c;
        }
    }
}

/// Constant datum of genus `1..=g_max` with entries in `[-c, c]`.
pub fn constant_datum<R: Rng>(rng: &mut R, g_max: usize, c: i64, pq_bound: i64) -> SurgeryDatum {
    let g = rng.gen_range(1..=g_max);
    let mut m = || -> Vec<Vec<i64>> { (0..g).map(|_| (0..g).map(|_| rng.gen_range(-c..=c)).collect()).collect() };
    let (laa, lab, lba, lbb) = (m(), m(), m(), m());
    SurgeryDatum::constant(&laa, &lab, &lba, &lbb, coprime(rng, pq_bound)).expect("square matrices")
}

/// Datum of genus `1..=g_max` with Laurent polynomial entries of degree at
/// most `deg`.
pub fn polynomial_datum<R: Rng>(rng: &mut R, g_max: usize, deg: i64) -> SurgeryDatum {
    let g = rng.gen_range(1..=g_max);
    let mut m = || -> Vec<Vec<OneVarFrac>> {
        (0..g).map(|_| (0..g).map(|_| OneVarFrac::from_poly(laurent(rng, deg, 2))).collect()).collect()
    };
    let (laa, lab, lba, lbb) = (m(), m(), m(), m());
    SurgeryDatum::new(laa, lab, lba, lbb, coprime(rng, 7)).expect("square matrices")
}

/// Random beaded trivalent graph on `2n` vertices (random pairing of the
/// `6n` vertex stubs) whose canonical sign is nonzero, with random vertex
/// orientations.
pub fn graph<R: Rng>(rng: &mut R, n: usize) -> MonGraph {
    let vertices = 2 * n;
    loop {
        let mut stubs: Vec<usize> = (0..3 * vertices).map(|s| s / 3).collect();
        stubs.shuffle(rng);
        let edges: Vec<Edge> = stubs
            .chunks(2)
            .map(|p| Edge::new(p[0], p[1], rng.gen_range(-3..=3), rng.gen_range(0..=2)))
            .collect();
        let mut g = MonGraph::with_standard_orders(vertices, edges).expect("every vertex has three stubs");
        for v in 0..vertices {
            if rng.gen_bool(0.5) {
                g.transpose(v);
            }
        }
        if canonicalize(&g).1 != 0 {
            return g;
        }
    }
}

/// Applies one of an edge reversal, a gauge move, a vertex relabeling or a
/// rotation of a cyclic order. None of these changes the
/// canonical form or its sign.
pub fn neutral_move<R: Rng>(rng: &mut R, g: &mut MonGraph) {
    let v = g.vertex_count();
    match rng.gen_range(0..4) {
        0 => {
            let e = rng.gen_range(0..g.edges().len());
            g.reverse_edge(e);
        }
        1 => {
            let n = rng.gen_range(-3..=3);
            g.gauge(rng.gen_range(0..v), n);
        }
        2 => {
            let mut perm: Vec<usize> = (0..v).collect();
            perm.shuffle(rng);
            g.relabel(&perm);
        }
        _ => g.rotate(rng.gen_range(0..v)),
    }
}

/// Small rational in `[-c, c]` with denominator at most 6.
pub fn small_rational<R: Rng>(rng: &mut R, c: i64) -> Rational {
    Rational::new(rng.gen_range(-c * 6..=c * 6).into(), rng.gen_range(1..=6).into())
}
