//! Exact sparse linear algebra over Q: an incrementally built span kept in
//! reduced row echelon form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// Adds `c * w` into `v`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &Rational, w: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let e = v.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Row<K> {
    vec: SparseVec<K>,
    /// The row as a combination of the inserted generators.
    comb: Vec<Rational>,
}

/// Span of a list of generators. Rows are keyed by pivot (their smallest
/// key, with coefficient 1) and no row contains another row's pivot.
#[derive(Clone, Debug)]
pub struct Span<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
    generators: usize,
}

impl<K: Ord + Clone> Default for Span<K> {
    fn default() -> Self {
        Span { rows: BTreeMap::new(), generators: 0 }
    }
}

impl<K: Ord + Clone> Span<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_generators<'a>(gens: impl IntoIterator<Item = &'a SparseVec<K>>) -> Self
    where
        K: 'a,
    {
        let mut s = Self::new();
        for g in gens {
            s.push(g);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Adds a generator; returns whether it enlarged the span.
    pub fn push(&mut self, v: &SparseVec<K>) -> bool {
        let idx = self.generators;
        self.generators += 1;
        for row in self.rows.values_mut() {
            row.comb.push(Rational::zero());
        }
        let (mut rem, coords) = self.reduce(v);
        let Some((pivot, lead)) = rem.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        // rem = v - Σ coords_i g_i
        let mut comb: Vec<Rational> = coords.iter().map(|c| -c).collect();
        comb.resize(self.generators, Rational::zero());
        comb[idx] = Rational::one();
        let inv = lead.recip();
        for x in rem.values_mut() {
            *x *= &inv;
        }
        for c in comb.iter_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.vec.get(&pivot).cloned() {
                axpy(&mut row.vec, &-&c, &rem);
                for (a, b) in row.comb.iter_mut().zip(&comb) {
                    *a -= &c * b;
                }
            }
        }
        self.rows.insert(pivot, Row { vec: rem, comb });
        true
    }

    /// Returns `(r, c)` with `v = r + Σ c_i g_i` and `r` free of pivots.
    /// `r` is the canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, Vec<Rational>) {
        let mut r = v.clone();
        let mut coords = vec![Rational::zero(); self.generators];
        for (p, row) in &self.rows {
            if let Some(c) = r.get(p).cloned() {
                axpy(&mut r, &-&c, &row.vec);
                for (a, b) in coords.iter_mut().zip(&row.comb) {
                    *a += &c * b;
                }
            }
        }
        (r, coords)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }
}
