//! Rational combinations of canonical beaded graphs, and expansion of
//! general beads into monomial ones.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::linalg::SparseVec;
use crate::algebra::rational::{format_rational, Rational};
use crate::algebra::{HLPoly, OneVarFrac};

use super::canon::canonicalize;
use super::graph::{dumbbell_shape, theta_shape, Edge, MonGraph};
use super::DiagramError;

/// Element of the diagram space: canonical graphs with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiagramVector {
    terms: BTreeMap<MonGraph, Rational>,
}

impl DiagramVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * g`, canonicalized.
    pub fn from_graph(g: &MonGraph, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_graph(g, c);
        v
    }

    /// Adds `c * g` after canonicalizing `g`.
    pub fn add_graph(&mut self, g: &MonGraph, c: Rational) {
        let (canon, sign) = canonicalize(g);
        if sign == 0 || c.is_zero() {
            return;
        }
        let c = if sign < 0 { -c } else { c };
        self.add_canonical(canon, c);
    }

    fn add_canonical(&mut self, g: MonGraph, c: Rational) {
        let e = self.terms.entry(g.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonGraph, &Rational)> {
        self.terms.iter()
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

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DiagramVector { terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (g, c) in &o.terms {
            r.add_canonical(g.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn as_sparse(&self) -> &SparseVec<MonGraph> {
        &self.terms
    }

    pub fn from_sparse(terms: SparseVec<MonGraph>) -> Self {
        DiagramVector { terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} * {}", format_rational(c), g)?;
        }
        Ok(())
    }
}

/// A bead written as `δ^{-b} Σ c_a t^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBead {
    pub b: u32,
    pub terms: Vec<(i64, Rational)>,
}

/// Writes `f = P / δ^b` with `b` minimal and `P` an integer-exponent Laurent
/// polynomial.
pub fn decompose_bead(f: &OneVarFrac, delta: &HLPoly) -> Option<MonomialBead> {
    let span = |p: &HLPoly| p.max_doubled().unwrap_or(0) - p.min_doubled().unwrap_or(0);
    let b_max = match span(delta) {
        0 => 0,
        s => span(f.denom()) / s + 1,
    };
    let d = OneVarFrac::from_poly(delta.clone());
    let mut g = f.clone();
    for b in 0..=b_max {
        if let Some(p) = g.as_poly() {
            if !p.has_half_powers() {
                let terms = p.terms().map(|(k, c)| (k / 2, c.clone())).collect();
                return Some(MonomialBead { b: b as u32, terms });
            }
        }
        g = &g * &d;
    }
    None
}

/// Expands one bead per edge of `shape` into monomial beads by linearity and
/// returns the canonicalized combination.
pub fn build_diagram(shape: &MonGraph, beads: &[OneVarFrac], delta: &HLPoly) -> Result<DiagramVector, DiagramError> {
    if beads.len() != shape.edges().len() {
        return Err(DiagramError::Malformed(format!(
            "{} beads for {} edges",
            beads.len(),
            shape.edges().len()
        )));
    }
    let mut decomposed = Vec::with_capacity(beads.len());
    for (i, f) in beads.iter().enumerate() {
        decomposed.push(decompose_bead(f, delta).ok_or(DiagramError::BadBead(i))?);
    }
    let mut out = DiagramVector::zero();
    let mut choice = vec![0usize; beads.len()];
    if decomposed.iter().any(|d| d.terms.is_empty()) {
        return Ok(out);
    }
    loop {
        let mut coeff = Rational::one();
        let edges: Vec<Edge> = shape
            .edges()
            .iter()
            .zip(&decomposed)
            .zip(&choice)
            .map(|((e, d), &k)| {
                let (a, c) = &d.terms[k];
                coeff *= c;
                Edge::new(e.tail, e.head, *a, d.b)
            })
            .collect();
        let g = MonGraph::from_parts_unchecked(edges, shape.orders().to_vec());
        out.add_graph(&g, coeff);
        // odometer over the monomials of every bead
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < decomposed[i].terms.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Planar theta graph with beads `P, Q, R` on its three edges.
pub fn theta(p: &OneVarFrac, q: &OneVarFrac, r: &OneVarFrac, delta: &HLPoly) -> Result<DiagramVector, DiagramError> {
    build_diagram(&theta_shape(), &[p.clone(), q.clone(), r.clone()], delta)
}

/// Dumbbell with loop beads `P, Q` and bridge bead 1.
pub fn dumbbell(p: &OneVarFrac, q: &OneVarFrac, delta: &HLPoly) -> Result<DiagramVector, DiagramError> {
    build_diagram(&dumbbell_shape(), &[p.clone(), q.clone(), OneVarFrac::one()], delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use num_traits::Signed;

    fn t(e: i64) -> OneVarFrac {
        OneVarFrac::from_poly(HLPoly::t_pow(e))
    }

    fn one() -> OneVarFrac {
        OneVarFrac::one()
    }

    #[test]
    fn theta_examples() {
        let d = HLPoly::one();
        let base = theta(&one(), &one(), &one(), &d).unwrap();
        assert_eq!(base.len(), 1);
        assert_eq!(base.terms().next().unwrap().1.abs(), int(1));
        let tp1 = OneVarFrac::from_poly(HLPoly::from_int_terms(&[(1, 1), (0, 1)]));
        let sum = theta(&tp1, &one(), &one(), &d).unwrap();
        let expected = theta(&t(1), &one(), &one(), &d).unwrap().add(&base);
        assert_eq!(sum, expected);
        assert!(theta(&OneVarFrac::zero(), &one(), &one(), &d).unwrap().is_zero());
        assert_eq!(theta(&t(1), &t(1), &t(1), &d).unwrap(), base);
    }

    #[test]
    fn dumbbell_is_nonzero() {
        let d = HLPoly::one();
        assert!(!dumbbell(&t(1), &t(1), &d).unwrap().is_zero());
        assert!(dumbbell(&one(), &t(1), &d).unwrap().is_zero());
    }

    #[test]
    fn bead_decomposition() {
        let delta = HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)]);
        // (t + 2) / δ^2
        let f = OneVarFrac::new(HLPoly::from_int_terms(&[(1, 1), (0, 2)]), delta.pow(2)).unwrap();
        let m = decompose_bead(&f, &delta).unwrap();
        assert_eq!(m.b, 2);
        assert_eq!(m.terms, vec![(0, int(2)), (1, int(1))]);
        // 1/(1 - t) is not in Q[t^±1, 1/δ]
        let bad = OneVarFrac::new(HLPoly::one(), HLPoly::from_int_terms(&[(0, 1), (1, -1)])).unwrap();
        assert_eq!(decompose_bead(&bad, &delta), None);
        let shape = theta_shape();
        assert_eq!(build_diagram(&shape, &[bad, one(), one()], &delta), Err(DiagramError::BadBead(0)));
    }
}
