//! The evaluation `ψ` of beaded theta diagrams in `Q(x, y)`.

use crate::algebra::trivar::{embed, TriVarElem, Var};
use crate::algebra::{HLPoly, OneVarFrac};

use super::graph::{is_sorted_cyclically, MonGraph};
use super::vector::DiagramVector;
use super::DiagramError;

/// `t^a δ^{-b}` as a fraction.
pub fn monomial_bead(a: i64, b: u32, delta: &HLPoly) -> OneVarFrac {
    OneVarFrac::new(HLPoly::t_pow(a), delta.pow(b)).expect("δ(1) = 1 so δ is nonzero")
}

/// `Σ_{S3} (P(x)Q(y)R(z) + P(x^{-1})Q(y^{-1})R(z^{-1}))` with `z = (xy)^{-1}`.
pub fn theta_formula(p: &OneVarFrac, q: &OneVarFrac, r: &OneVarFrac) -> Result<TriVarElem, DiagramError> {
    let term = &(&embed(p, Var::X)? * &embed(q, Var::Y)?) * &embed(r, Var::Z)?;
    Ok((&term + &term.invert()).symmetrize())
}

/// `+1` when the two vertices induce opposite cyclic orders on the edges
/// (the planar picture), `-1` when they induce the same one.
fn theta_orientation(g: &MonGraph) -> i8 {
    let edge_order = |v: usize| {
        let o = g.orders()[v];
        is_sorted_cyclically([o[0] / 2, o[1] / 2, o[2] / 2])
    };
    if edge_order(0) != edge_order(1) {
        1
    } else {
        -1
    }
}

/// Linear extension of the theta formula. Fails on any non-theta graph.
pub fn psi(v: &DiagramVector, delta: &HLPoly) -> Result<TriVarElem, DiagramError> {
    let mut acc = TriVarElem::zero();
    for (g, c) in v.terms() {
        if !g.is_theta() {
            return Err(DiagramError::NonThetaSupport(g.to_string()));
        }
        let beads: Vec<OneVarFrac> = g.edges().iter().map(|e| monomial_bead(e.a, e.b, delta)).collect();
        let value = theta_formula(&beads[0], &beads[1], &beads[2])?;
        let c = if theta_orientation(g) > 0 { c.clone() } else { -c.clone() };
        acc = &acc + &value.scale(&c);
    }
    Ok(acc)
}
