//! Beaded trivalent diagrams: canonical forms, `ψ` on theta graphs and IHX
//! relations in a small bead window.
//!
//! ```text
//! cargo run --example beaded_diagrams
//! ```

use eqcube::algebra::{HLPoly, OneVarFrac};
use eqcube::diagram::ihx::{ihx_relations, relation_span, BeadWindow, DEFAULT_CAP};
use eqcube::diagram::{canonicalize, dumbbell, psi, theta, theta_shape, Edge, MonGraph};

fn t(e: i64) -> OneVarFrac {
    OneVarFrac::from_poly(HLPoly::t_pow(e))
}

fn main() {
    // Theta with beads t, t^2, t^{-1}: the gauge move at one vertex shifts
    // all three exponents, so the canonical form records only differences.
    let shape = theta_shape();
    let edges: Vec<Edge> =
        shape.edges().iter().zip([1, 2, -1]).map(|(e, a)| Edge::new(e.tail, e.head, a, 0)).collect();
    let g = MonGraph::new(edges, shape.orders().to_vec()).unwrap();
    let (c, sign) = canonicalize(&g);
    println!("graph      {g}");
    println!("canonical  {c}  sign {sign}");

    let mut h = g.clone();
    h.transpose(0);
    println!("after AS   sign {}", canonicalize(&h).1);

    // ψ(θ(1,1,1)) = 12 and ψ(θ(t,t,t)) is the same element.
    let d = HLPoly::one();
    let one = OneVarFrac::one();
    println!("psi(theta(1,1,1)) = {}", psi(&theta(&one, &one, &one, &d).unwrap(), &d).unwrap());
    println!("psi(theta(t,t,t)) = {}", psi(&theta(&t(1), &t(1), &t(1), &d).unwrap(), &d).unwrap());
    println!("psi(theta(t,1,1)) = {}", psi(&theta(&t(1), &one, &one, &d).unwrap(), &d).unwrap());

    // Beads with δ in the denominator expand into monomials t^a δ^{-b}.
    let delta = HLPoly::from_int_terms(&[(1, 1), (0, -1), (-1, 1)]);
    let bead = OneVarFrac::new(HLPoly::from_int_terms(&[(1, 1), (0, 1)]), delta.clone()).unwrap();
    let v = theta(&bead, &one, &one, &delta).unwrap();
    println!("theta((t+1)/delta, 1, 1) =\n{v}");
    println!("psi = {}", psi(&v, &delta).unwrap());

    // Dumbbells are outside the domain of ψ.
    let db = dumbbell(&t(1), &t(2), &d).unwrap();
    println!("psi(dumbbell) -> {}", psi(&db, &d).unwrap_err());

    // IHX on two-vertex graphs with exponents in [-1, 1].
    let rels = ihx_relations(1, BeadWindow::new(-1, 1, 0), DEFAULT_CAP).unwrap();
    let span = relation_span(&rels);
    println!("{} IHX relations, rank {}", rels.len(), span.rank());
    for r in rels.iter().filter(|r| !r.vector.is_zero()).take(3) {
        println!("  on {}:\n    {}", r.source, r.vector.to_string().replace('\n', "\n    "));
    }
}
