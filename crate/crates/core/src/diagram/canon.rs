//! Canonical form of a beaded graph modulo edge reversal, the vertex gauge
//! action, vertex relabeling and vertex orientation (up to sign).

use std::collections::BTreeMap;

use super::graph::{is_sorted_cyclically, Edge, MonGraph};

/// Sign attached to a canonical form: `+1`, `-1`, or `0` when the relations
/// force the graph to vanish (an orientation-reversing symmetry).
pub type Sign = i8;

/// Lexicographic successor of a permutation; false after the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

struct Candidate {
    key: Vec<Edge>,
    sign: Sign,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Gauge potentials zeroing the smallest exponent on each pair of a
/// spanning forest built greedily over vertex pairs in increasing order.
fn gauge_potential(vertices: usize, edges: &[Edge]) -> Vec<i64> {
    let mut min_on_pair: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for e in edges.iter().filter(|e| !e.is_loop()) {
        let m = min_on_pair.entry((e.tail, e.head)).or_insert(e.a);
        *m = (*m).min(e.a);
    }
    let mut parent: Vec<usize> = (0..vertices).collect();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); vertices];
    for (&(u, v), &m) in &min_on_pair {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            // n_v - n_u = -m makes the smallest exponent on (u, v) zero
            adj[u].push((v, -m));
            adj[v].push((u, m));
        }
    }
    let mut n = vec![0i64; vertices];
    let mut done = vec![false; vertices];
    for root in 0..vertices {
        if done[root] {
            continue;
        }
        done[root] = true;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &(y, d) in &adj[x] {
                if !done[y] {
                    done[y] = true;
                    n[y] = n[x] + d;
                    stack.push(y);
                }
            }
        }
    }
    n
}

fn candidate(g: &MonGraph, perm: &[usize]) -> Candidate {
    let vertices = g.vertex_count();
    let mut oriented: Vec<(Edge, bool)> = g
        .edges()
        .iter()
        .map(|e| {
            let (t, h) = (perm[e.tail], perm[e.head]);
            if t > h || (t == h && e.a < 0) {
                (Edge::new(h, t, -e.a, e.b), true)
            } else {
                (Edge::new(t, h, e.a, e.b), false)
            }
        })
        .collect();
    let edges: Vec<Edge> = oriented.iter().map(|(e, _)| *e).collect();
    let n = gauge_potential(vertices, &edges);
    for (e, _) in &mut oriented {
        if !e.is_loop() {
            e.a += n[e.head] - n[e.tail];
        }
    }
    let mut idx: Vec<usize> = (0..oriented.len()).collect();
    idx.sort_by_key(|&i| oriented[i].0);
    let mut position = vec![0; idx.len()];
    for (pos, &i) in idx.iter().enumerate() {
        position[i] = pos;
    }
    let new_half = |h: usize| {
        let i = h / 2;
        let end = (h % 2) ^ usize::from(oriented[i].1);
        2 * position[i] + end
    };
    let mut sign: Sign = 1;
    for ord in g.orders() {
        let mapped = [new_half(ord[0]), new_half(ord[1]), new_half(ord[2])];
        if !is_sorted_cyclically(mapped) {
            sign = -sign;
        }
    }
    Candidate { key: idx.iter().map(|&i| oriented[i].0).collect(), sign }
}

/// Canonical representative and the sign relating it to `g`:
/// `g = sign * canonical` in the diagram space.
pub fn canonicalize(g: &MonGraph) -> (MonGraph, Sign) {
    let vertices = g.vertex_count();
    let mut perm: Vec<usize> = (0..vertices).collect();
    let mut best: Option<Candidate> = None;
    let mut vanishes = false;
    loop {
        let c = candidate(g, &perm);
        match &best {
            Some(b) if c.key > b.key => {}
            Some(b) if c.key == b.key => {
                if c.sign != b.sign {
                    vanishes = true;
                }
            }
            _ => {
                vanishes = false;
                best = Some(c);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let best = best.expect("at least the identity permutation");
    let canonical = MonGraph::with_standard_orders(vertices, best.key).expect("relabeling preserves trivalence");
    // A loop with a symmetric bead equals minus itself under reversal.
    let zero_loop = canonical.edges().iter().any(|e| e.is_loop() && e.a == 0);
    let sign = if vanishes || zero_loop { 0 } else { best.sign };
    (canonical, sign)
}

#[cfg(test)]
mod tests {
    use super::super::graph::{dumbbell_shape, theta_shape};
    use super::*;

    fn with_beads(mut g: MonGraph, a: &[i64]) -> MonGraph {
        let edges: Vec<Edge> = g.edges().iter().zip(a).map(|(e, &a)| Edge::new(e.tail, e.head, a, e.b)).collect();
        g = MonGraph::new(edges, g.orders().to_vec()).unwrap();
        g
    }

    #[test]
    fn permutations_are_all_visited() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }

    #[test]
    fn theta_gauge_example() {
        let (c1, s1) = canonicalize(&with_beads(theta_shape(), &[1, 1, 1]));
        let (c0, s0) = canonicalize(&theta_shape());
        assert_eq!(c1, c0);
        assert_eq!(s1, s0);
        assert!(s0 != 0);
        assert!(c0.edges().iter().all(|e| e.a == 0));
    }

    #[test]
    fn transposition_flips_sign() {
        let g = with_beads(theta_shape(), &[2, -1, 0]);
        let (c, s) = canonicalize(&g);
        let mut h = g.clone();
        h.transpose(1);
        assert_eq!(canonicalize(&h), (c, -s));
    }

    #[test]
    fn loop_exponent_survives() {
        let g = with_beads(dumbbell_shape(), &[5, 1, 0]);
        let (c, s) = canonicalize(&g);
        assert!(s != 0);
        let mut loops: Vec<i64> = c.edges().iter().filter(|e| e.is_loop()).map(|e| e.a).collect();
        loops.sort();
        assert_eq!(loops, vec![1, 5]);
    }

    #[test]
    fn symmetric_loop_vanishes() {
        assert_eq!(canonicalize(&dumbbell_shape()).1, 0);
        assert_eq!(canonicalize(&with_beads(dumbbell_shape(), &[0, 3, 0])).1, 0);
    }

    #[test]
    fn reversed_loop_changes_sign_only() {
        // reversing a loop maps t^a to t^-a; canonical forms orient loops with a > 0
        let g = with_beads(dumbbell_shape(), &[2, 1, 0]);
        let mut h = g.clone();
        h.reverse_edge(0);
        assert_eq!(canonicalize(&g), canonicalize(&h));
    }
}
