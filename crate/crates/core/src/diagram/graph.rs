//! Monomial-beaded oriented trivalent graphs.
//!
//! Half-edges are numbered from the edges: edge `e` owns half-edge `2e` at
//! its tail and `2e + 1` at its head. A vertex orientation is the cyclic
//! order of its three half-edges.

use std::fmt;

use super::DiagramError;

/// An oriented edge beaded by `t^a δ(t)^{-b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub a: i64,
    pub b: u32,
}

impl Edge {
    pub fn new(tail: usize, head: usize, a: i64, b: u32) -> Self {
        Edge { tail, head, a, b }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonGraph {
    edges: Vec<Edge>,
    orders: Vec<[usize; 3]>,
}

/// Vertex owning a half-edge.
pub fn half_vertex(edges: &[Edge], h: usize) -> usize {
    let e = &edges[h / 2];
    if h.is_multiple_of(2) {
        e.tail
    } else {
        e.head
    }
}

/// Whether a cyclic triple is an even rotation of its sorted form.
pub fn is_sorted_cyclically(t: [usize; 3]) -> bool {
    let [a, b, c] = t;
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

impl MonGraph {
    /// Checks trivalence and that every half-edge sits in the order of the
    /// vertex it is attached to.
    pub fn new(edges: Vec<Edge>, orders: Vec<[usize; 3]>) -> Result<Self, DiagramError> {
        let v = orders.len();
        if 2 * edges.len() != 3 * v {
            return Err(DiagramError::Malformed(format!("{} edges cannot be trivalent on {v} vertices", edges.len())));
        }
        if let Some(e) = edges.iter().find(|e| e.tail >= v || e.head >= v) {
            return Err(DiagramError::Malformed(format!("edge {e:?} has an endpoint out of range")));
        }
        let mut seen = vec![false; 2 * edges.len()];
        for (vtx, ord) in orders.iter().enumerate() {
            for &h in ord {
                if h >= seen.len() || seen[h] {
                    return Err(DiagramError::Malformed(format!("half-edge {h} repeated or out of range")));
                }
                seen[h] = true;
                if half_vertex(&edges, h) != vtx {
                    return Err(DiagramError::Malformed(format!("half-edge {h} listed at vertex {vtx} but attached elsewhere")));
                }
            }
        }
        Ok(MonGraph { edges, orders })
    }

    /// Builds a graph whose vertex orientations list half-edges in
    /// increasing order.
    pub fn with_standard_orders(vertices: usize, edges: Vec<Edge>) -> Result<Self, DiagramError> {
        let mut slots: Vec<Vec<usize>> = vec![Vec::new(); vertices];
        for h in 0..2 * edges.len() {
            let v = half_vertex(&edges, h);
            match slots.get_mut(v) {
                Some(s) => s.push(h),
                None => return Err(DiagramError::Malformed(format!("vertex {v} out of range"))),
            }
        }
        let mut orders = Vec::with_capacity(vertices);
        for (v, s) in slots.into_iter().enumerate() {
            let o: [usize; 3] = s
                .try_into()
                .map_err(|s: Vec<usize>| DiagramError::Malformed(format!("vertex {v} has degree {}", s.len())))?;
            orders.push(o);
        }
        Self::new(edges, orders)
    }

    pub(crate) fn from_parts_unchecked(edges: Vec<Edge>, orders: Vec<[usize; 3]>) -> Self {
        MonGraph { edges, orders }
    }

    pub fn vertex_count(&self) -> usize {
        self.orders.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn orders(&self) -> &[[usize; 3]] {
        &self.orders
    }

    pub fn half_vertex(&self, h: usize) -> usize {
        half_vertex(&self.edges, h)
    }

    fn swap_halves(&mut self, h1: usize, h2: usize) {
        for ord in &mut self.orders {
            for h in ord.iter_mut() {
                if *h == h1 {
                    *h = h2;
                } else if *h == h2 {
                    *h = h1;
                }
            }
        }
    }

    /// Reverses edge `e`, replacing `t^a` by `t^{-a}`.
    pub fn reverse_edge(&mut self, e: usize) {
        let edge = &mut self.edges[e];
        std::mem::swap(&mut edge.tail, &mut edge.head);
        edge.a = -edge.a;
        self.swap_halves(2 * e, 2 * e + 1);
    }

    /// Gauge move applied `n` times at vertex `v`: multiplies by `t^n` every
    /// bead oriented towards `v` (edges leaving `v` get `t^{-n}`).
    pub fn gauge(&mut self, v: usize, n: i64) {
        for e in &mut self.edges {
            if e.head == v {
                e.a += n;
            }
            if e.tail == v {
                e.a -= n;
            }
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&mut self, perm: &[usize]) {
        for e in &mut self.edges {
            e.tail = perm[e.tail];
            e.head = perm[e.head];
        }
        let mut orders = self.orders.clone();
        for (v, ord) in self.orders.iter().enumerate() {
            orders[perm[v]] = *ord;
        }
        self.orders = orders;
    }

    /// Rotates the cyclic order at `v`; the oriented graph is unchanged.
    pub fn rotate(&mut self, v: usize) {
        self.orders[v].rotate_left(1);
    }

    /// Swaps two half-edges at `v`, reversing its orientation (AS).
    pub fn transpose(&mut self, v: usize) {
        self.orders[v].swap(0, 1);
    }

    /// Moves half-edge `h` to vertex `v` (orders must be fixed by the caller).
    pub(crate) fn reattach(&mut self, h: usize, v: usize) {
        let e = &mut self.edges[h / 2];
        if h.is_multiple_of(2) {
            e.tail = v;
        } else {
            e.head = v;
        }
    }

    pub(crate) fn set_order(&mut self, v: usize, ord: [usize; 3]) {
        self.orders[v] = ord;
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                for (x, y) in [(e.tail, e.head), (e.head, e.tail)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True when this is a theta graph with every edge from vertex 0 to 1.
    pub fn is_theta(&self) -> bool {
        self.vertex_count() == 2 && self.edges.iter().all(|e| e.tail == 0 && e.head == 1)
    }
}

/// Theta graph: three parallel edges from vertex 0 to vertex 1, drawn in the
/// plane, so the two vertices induce opposite cyclic orders on the edges.
pub fn theta_shape() -> MonGraph {
    let edges = (0..3).map(|_| Edge::new(0, 1, 0, 0)).collect();
    MonGraph { edges, orders: vec![[0, 4, 2], [1, 3, 5]] }
}

/// Dumbbell: a loop at each vertex (edges 0 and 1) and a bridge 0 -> 1
/// (edge 2).
pub fn dumbbell_shape() -> MonGraph {
    let edges = vec![Edge::new(0, 0, 0, 0), Edge::new(1, 1, 0, 0), Edge::new(0, 1, 0, 0)];
    MonGraph { edges, orders: vec![[0, 1, 4], [2, 3, 5]] }
}

impl fmt::Display for MonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", e.tail, e.head)?;
            match (e.a, e.b) {
                (0, 0) => {}
                (a, 0) => write!(f, " t^{a}")?,
                (0, b) => write!(f, " d^-{b}")?,
                (a, b) => write!(f, " t^{a} d^-{b}")?,
            }
        }
        write!(f, "] orders {:?}", self.orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_valid() {
        let t = theta_shape();
        assert!(MonGraph::new(t.edges.clone(), t.orders.clone()).is_ok());
        let d = dumbbell_shape();
        assert!(MonGraph::new(d.edges.clone(), d.orders.clone()).is_ok());
        assert!(t.is_theta() && !d.is_theta());
        assert!(t.is_connected() && d.is_connected());
    }

    #[test]
    fn validation_rejects_bad_orders() {
        let edges = vec![Edge::new(0, 1, 0, 0); 3];
        assert!(MonGraph::new(edges.clone(), vec![[0, 2, 4], [1, 3, 3]]).is_err());
        assert!(MonGraph::new(edges.clone(), vec![[1, 2, 4], [0, 3, 5]]).is_err());
        assert!(MonGraph::new(edges[..2].to_vec(), vec![[0, 2, 4], [1, 3, 5]]).is_err());
    }

    #[test]
    fn moves_keep_validity() {
        let mut g = dumbbell_shape();
        g.reverse_edge(0);
        g.reverse_edge(2);
        g.gauge(1, 3);
        g.relabel(&[1, 0]);
        g.rotate(0);
        g.transpose(1);
        assert!(MonGraph::new(g.edges.clone(), g.orders.clone()).is_ok());
        // loops are gauge-invariant
        assert_eq!(g.edges()[1].a, 0);
    }

    #[test]
    fn cyclic_parity() {
        assert!(is_sorted_cyclically([0, 2, 4]));
        assert!(is_sorted_cyclically([2, 4, 0]));
        assert!(!is_sorted_cyclically([0, 4, 2]));
    }
}
