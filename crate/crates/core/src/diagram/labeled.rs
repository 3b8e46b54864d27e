//! The sets `CS_n` of connected trivalent graphs with `2n` numbered vertices
//! and `3n` numbered oriented edges, without loops.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::rational::Rational;

use super::DiagramError;

/// Largest `n` accepted by the enumerators.
pub const MAX_N: usize = 3;

/// Longest list `enumerate_cs` will materialize.
pub const LIST_LIMIT: u64 = 2_000_000;

/// Vertices are numbered `1..=2n`; edge `i` (numbered `i + 1`) runs from
/// `edges[i].0` to `edges[i].1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

fn check_n(n: usize) -> Result<(), DiagramError> {
    if n == 0 || n > MAX_N {
        return Err(DiagramError::OutOfRange(format!("n must be in 1..={MAX_N}, got {n}")));
    }
    Ok(())
}

fn connected(vertices: usize, pairs: impl Iterator<Item = (usize, usize)> + Clone) -> bool {
    let mut parent: Vec<usize> = (0..=vertices).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in pairs {
        let (a, b) = (root(&mut parent, u), root(&mut parent, v));
        parent[a] = b;
    }
    let r = root(&mut parent, 1);
    (2..=vertices).all(|v| root(&mut parent, v) == r)
}

/// Calls `visit` on every element of `CS_n` in lexicographic order of the
/// edge list; stops early when `visit` returns false.
pub fn visit_cs(n: usize, mut visit: impl FnMut(&LabeledGraph) -> bool) -> Result<(), DiagramError> {
    check_n(n)?;
    let vertices = 2 * n;
    let mut g = LabeledGraph { vertices, edges: Vec::with_capacity(3 * n) };
    let mut degree = vec![0u8; vertices + 1];
    visit_rec(n, &mut g, &mut degree, &mut visit);
    Ok(())
}

fn visit_rec(n: usize, g: &mut LabeledGraph, degree: &mut [u8], visit: &mut dyn FnMut(&LabeledGraph) -> bool) -> bool {
    if g.edges.len() == 3 * n {
        if connected(g.vertices, g.edges.iter().copied()) {
            return visit(g);
        }
        return true;
    }
    for u in 1..=g.vertices {
        if degree[u] == 3 {
            continue;
        }
        for v in 1..=g.vertices {
            if v == u || degree[v] == 3 {
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
            g.edges.push((u, v));
            let go_on = visit_rec(n, g, degree, visit);
            g.edges.pop();
            degree[u] -= 1;
            degree[v] -= 1;
            if !go_on {
                return false;
            }
        }
    }
    true
}

/// The full list, for `n` small enough to materialize.
pub fn enumerate_cs(n: usize) -> Result<Vec<LabeledGraph>, DiagramError> {
    let count = cs_count(n)?;
    if count > BigInt::from(LIST_LIMIT) {
        return Err(DiagramError::EnumerationTooLarge(count.to_string()));
    }
    let mut out = Vec::new();
    visit_cs(n, |g| {
        out.push(g.clone());
        true
    })?;
    Ok(out)
}

/// `|CS_n|`, computed from the labeled loopless multigraphs: each one with
/// edge multiplicities `m_uv` contributes `(3n)! / Π m_uv! · 2^{3n}` edge
/// numberings and orientations.
pub fn cs_count(n: usize) -> Result<BigInt, DiagramError> {
    check_n(n)?;
    let vertices = 2 * n;
    let pairs: Vec<(usize, usize)> = (1..=vertices).flat_map(|u| (u + 1..=vertices).map(move |v| (u, v))).collect();
    let mut mult = vec![0u8; pairs.len()];
    let mut degree = vec![0u8; vertices + 1];
    let mut total = BigInt::zero();
    let edges = 3 * n;
    let numerator = factorial(edges) * (BigInt::one() << edges);
    count_rec(&pairs, 0, &mut mult, &mut degree, &mut |mult| {
        let used = pairs.iter().zip(mult).filter(|(_, &m)| m > 0).map(|(p, _)| *p);
        if connected(vertices, used) {
            let denom = mult.iter().fold(BigInt::one(), |acc, &m| acc * factorial(m as usize));
            total += &numerator / denom;
        }
    });
    Ok(total)
}

fn count_rec(pairs: &[(usize, usize)], i: usize, mult: &mut [u8], degree: &mut [u8], emit: &mut dyn FnMut(&[u8])) {
    if i == pairs.len() {
        if degree[1..].iter().all(|&d| d == 3) {
            emit(mult);
        }
        return;
    }
    let (u, v) = pairs[i];
    let max_m = (3 - degree[u]).min(3 - degree[v]);
    for m in 0..=max_m {
        mult[i] = m;
        degree[u] += m;
        degree[v] += m;
        count_rec(pairs, i + 1, mult, degree, emit);
        degree[u] -= m;
        degree[v] -= m;
    }
    mult[i] = 0;
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `1 / (2^{3n} (3n)! (2n)!)`.
pub fn normalization_constant(n: usize) -> Rational {
    let d = (BigInt::one() << (3 * n)) * factorial(3 * n) * factorial(2 * n);
    Rational::new(BigInt::one(), d)
}
