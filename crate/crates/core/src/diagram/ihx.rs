//! IHX relations inside a bounded window of monomial beads, and the span
//! they generate.

use std::collections::BTreeSet;

use num_traits::One;

use crate::algebra::linalg::Span;
use crate::algebra::rational::Rational;

use super::canon::canonicalize;
use super::graph::{Edge, MonGraph};
use super::vector::DiagramVector;
use super::DiagramError;

/// Default cap on the number of bead assignments examined.
pub const DEFAULT_CAP: usize = 200_000;

/// Bead window: exponents `a` in `[a_min, a_max]`, `δ`-powers `b ≤ b_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BeadWindow {
    pub a_min: i64,
    pub a_max: i64,
    pub b_max: u32,
}

impl BeadWindow {
    pub fn new(a_min: i64, a_max: i64, b_max: u32) -> Self {
        BeadWindow { a_min, a_max, b_max }
    }

    pub fn is_empty(&self) -> bool {
        self.a_min > self.a_max
    }

    fn size(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.a_max - self.a_min + 1) as usize * (self.b_max as usize + 1)
        }
    }

    fn contains(&self, e: &Edge) -> bool {
        self.a_min <= e.a && e.a <= self.a_max && e.b <= self.b_max
    }
}

/// All trivalent graphs (loops and multiple edges allowed, possibly
/// disconnected) on `vertices` vertices, one per isomorphism class, with
/// trivial beads.
pub fn trivalent_shapes(vertices: usize) -> Vec<MonGraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut degree = vec![0u8; vertices];
    let mut edges = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..vertices).flat_map(|u| (u..vertices).map(move |v| (u, v))).collect();
    shapes_rec(&pairs, 0, &mut degree, &mut edges, &mut |edges| {
        let g = MonGraph::with_standard_orders(vertices, edges.to_vec()).expect("degrees are 3");
        let (c, _) = canonicalize(&g);
        if seen.insert(c) {
            out.push(g);
        }
    });
    out
}

fn shapes_rec(
    pairs: &[(usize, usize)],
    i: usize,
    degree: &mut Vec<u8>,
    edges: &mut Vec<Edge>,
    emit: &mut dyn FnMut(&[Edge]),
) {
    if i == pairs.len() {
        if degree.iter().all(|&d| d == 3) {
            emit(edges);
        }
        return;
    }
    let (u, v) = pairs[i];
    // vertex u receives no more edges after its last pair (u, n-1)
    let last_for_u = v + 1 == degree.len();
    let per = if u == v { 2 } else { 1 };
    let max_m = if u == v { (3 - degree[u]) / 2 } else { (3 - degree[u]).min(3 - degree[v]) };
    for m in 0..=max_m {
        if last_for_u && degree[u] + per * m != 3 {
            continue;
        }
        degree[u] += per * m;
        if u != v {
            degree[v] += m;
        }
        for _ in 0..m {
            edges.push(Edge::new(u, v, 0, 0));
        }
        shapes_rec(pairs, i + 1, degree, edges, emit);
        for _ in 0..m {
            edges.pop();
        }
        degree[u] -= per * m;
        if u != v {
            degree[v] -= m;
        }
    }
}

/// Nonzero canonical graphs with `2n` vertices whose beads lie in `window`.
pub fn canonical_graphs(n: usize, window: BeadWindow, cap: usize) -> Result<Vec<MonGraph>, DiagramError> {
    if window.is_empty() {
        return Ok(Vec::new());
    }
    let per_shape = window.size().checked_pow(3 * n as u32).unwrap_or(usize::MAX);
    if per_shape > cap {
        return Err(DiagramError::WindowTooLarge { size: per_shape, cap });
    }
    let shapes = trivalent_shapes(2 * n);
    let total = per_shape.saturating_mul(shapes.len());
    if total > cap {
        return Err(DiagramError::WindowTooLarge { size: total, cap });
    }
    let beads: Vec<(i64, u32)> =
        (window.a_min..=window.a_max).flat_map(|a| (0..=window.b_max).map(move |b| (a, b))).collect();
    let mut found = BTreeSet::new();
    for s in &shapes {
        let m = s.edges().len();
        let mut choice = vec![0usize; m];
        'assign: loop {
            let edges: Vec<Edge> = s
                .edges()
                .iter()
                .zip(&choice)
                .map(|(e, &k)| Edge::new(e.tail, e.head, beads[k].0, beads[k].1))
                .collect();
            if !edges.iter().any(|e| e.is_loop() && e.a == 0) {
                let g = MonGraph::from_parts_unchecked(edges, s.orders().to_vec());
                let (c, sign) = canonicalize(&g);
                if sign != 0 && c.edges().iter().all(|e| window.contains(e)) {
                    found.insert(c);
                }
            }
            let mut i = 0;
            loop {
                if i == m {
                    break 'assign;
                }
                choice[i] += 1;
                if choice[i] < beads.len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
    Ok(found.into_iter().collect())
}

/// One IHX relation: the three reconnections of `edge` in `source`.
#[derive(Clone, Debug)]
pub struct IhxRelation {
    pub source: MonGraph,
    pub edge: usize,
    pub terms: [MonGraph; 3],
    pub vector: DiagramVector,
}

/// The three graphs of the IHX relation on a non-loop edge `e` from `u` to
/// `w`. With orders `(e_u, A, B)` at `u` and `(e_w, C, D)` at `w`, the leg
/// `A` stays at `u` while its partner runs through `B, C, D`:
/// `u: (e, A, B) w: (e, C, D)`, `u: (e, A, C) w: (e, D, B)`,
/// `u: (e, A, D) w: (e, B, C)`. Their sum vanishes.
pub fn ihx_terms(g: &MonGraph, e: usize) -> Option<[MonGraph; 3]> {
    let edge = g.edges()[e];
    if edge.is_loop() {
        return None;
    }
    let (u, w) = (edge.tail, edge.head);
    let (eu, ew) = (2 * e, 2 * e + 1);
    let rotate_to = |v: usize, h: usize| {
        let mut o = g.orders()[v];
        while o[0] != h {
            o.rotate_left(1);
        }
        o
    };
    let [_, a, b] = rotate_to(u, eu);
    let [_, c, d] = rotate_to(w, ew);
    let build = |pu: usize, qw: usize, rw: usize| {
        let mut h = g.clone();
        h.reattach(pu, u);
        h.reattach(qw, w);
        h.reattach(rw, w);
        h.set_order(u, [eu, a, pu]);
        h.set_order(w, [ew, qw, rw]);
        h
    };
    Some([build(b, c, d), build(c, d, b), build(d, b, c)])
}

/// All IHX relations on edges with bead 1 of the canonical graphs in the
/// window, including those whose terms cancel outright.
pub fn ihx_relations(n: usize, window: BeadWindow, cap: usize) -> Result<Vec<IhxRelation>, DiagramError> {
    let mut out = Vec::new();
    for g in canonical_graphs(n, window, cap)? {
        for (i, e) in g.edges().iter().enumerate() {
            if e.is_loop() || e.a != 0 || e.b != 0 {
                continue;
            }
            let terms = ihx_terms(&g, i).expect("non-loop edge");
            let mut vector = DiagramVector::zero();
            for t in &terms {
                vector.add_graph(t, Rational::one());
            }
            out.push(IhxRelation { source: g.clone(), edge: i, terms, vector });
        }
    }
    Ok(out)
}

/// Span of a list of relations, for membership and reduction tests.
pub fn relation_span(relations: &[IhxRelation]) -> Span<MonGraph> {
    Span::from_generators(relations.iter().map(|r| r.vector.as_sparse()))
}
