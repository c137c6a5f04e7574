//! Total edge colorings of the complete graph `K_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{lex_pairs, normalize_vertex_set, Graph};

/// Index of the pair `{u, v}` (`u < v`) in lexicographic pair order.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// A map from unordered pairs of `{0..n-1}` into `{0..k-1}`, stored in
/// lexicographic pair order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    n: usize,
    k: usize,
    colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn constant(n: usize, k: usize, color: usize) -> Result<Self> {
        if color >= k {
            return Err(Error::ColorOutOfRange { color, k });
        }
        Ok(EdgeColoring {
            n,
            k,
            colors: vec![color; pair_count(n)],
        })
    }

    /// Colors given in lexicographic pair order.
    pub fn from_colors(n: usize, k: usize, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != pair_count(n) {
            return Err(Error::InvalidParameter(format!(
                "expected {} pair colors for n = {n}, got {}",
                pair_count(n),
                colors.len()
            )));
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= k) {
            return Err(Error::ColorOutOfRange { color, k });
        }
        Ok(EdgeColoring { n, k, colors })
    }

    /// Builds a coloring by evaluating `f(u, v)` for every `u < v`.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let colors = lex_pairs(n).map(|(u, v)| f(u, v)).collect();
        Self::from_colors(n, k, colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Colors in lexicographic pair order.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of the pair `{u, v}`; argument order does not matter.
    pub fn get(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        assert!(a != b && b < self.n, "pair {{{u}, {v}}} not in K_{}", self.n);
        self.colors[pair_index(self.n, a, b)]
    }

    pub fn set(&mut self, u: usize, v: usize, color: usize) -> Result<()> {
        if color >= self.k {
            return Err(Error::ColorOutOfRange { color, k: self.k });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if a == b {
            return Err(Error::InvalidEdge { u, v, reason: "loop" });
        }
        if b >= self.n {
            return Err(Error::VertexOutOfRange { vertex: b, n: self.n });
        }
        self.colors[pair_index(self.n, a, b)] = color;
        Ok(())
    }

    /// `(u, v, color)` for every pair in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        lex_pairs(self.n).zip(&self.colors).map(|((u, v), &c)| (u, v, c))
    }

    /// The spanning graph of color `xi`.
    pub fn color_class(&self, xi: usize) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v, c) in self.entries() {
            if c == xi {
                g.insert(u, v);
            }
        }
        g
    }
}

/// Color-`xi` graph induced on a vertex set, with its order-preserving labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedColorGraph {
    pub graph: Graph,
    /// `labels[i]` is the original vertex behind local vertex `i`.
    pub labels: Vec<usize>,
}

/// The graph on `vertices` whose edges are the pairs colored `xi`.
pub fn induced_color_graph(c: &EdgeColoring, xi: usize, vertices: &[usize]) -> Result<InducedColorGraph> {
    if xi >= c.k() {
        return Err(Error::ColorOutOfRange { color: xi, k: c.k() });
    }
    let labels = normalize_vertex_set(vertices, c.n())?;
    let mut graph = Graph::empty(labels.len());
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate().skip(i + 1) {
            if c.get(a, b) == xi {
                graph.insert(i, j);
            }
        }
    }
    Ok(InducedColorGraph { graph, labels })
}
