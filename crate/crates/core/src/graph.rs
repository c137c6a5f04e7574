//! Simple undirected graphs on `{0..n-1}` and connectivity in deletion semantics.
//!
//! A graph is κ-connected when it stays connected after deleting any set of
//! fewer than κ vertices. Graphs on zero or one vertex count as connected, and
//! deleting every vertex leaves the (connected) empty graph, so `K_n` is
//! κ-connected for every κ. For an incomplete graph the largest such κ is the
//! classical vertex connectivity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow;

/// Largest graph accepted by [`brute_force_kappa`].
pub const ORACLE_LIMIT: usize = 12;

/// An undirected simple graph stored as a dense adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
            edge_count: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.insert(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.insert(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert(v - 1, v);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the graph on `n` vertices whose edge set is given as a bitmask
    /// over pairs in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        for (bit, (u, v)) in lex_pairs(n).enumerate() {
            if mask >> bit & 1 == 1 {
                g.insert(u, v);
            }
        }
        g
    }

    /// Inverse of [`Graph::from_pair_mask`]; requires `n * (n - 1) / 2 <= 64`.
    pub fn pair_mask(&self) -> u64 {
        debug_assert!(self.n * self.n.saturating_sub(1) / 2 <= 64);
        lex_pairs(self.n)
            .enumerate()
            .filter(|&(_, (u, v))| self.has_edge(u, v))
            .fold(0u64, |acc, (bit, _)| acc | 1 << bit)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidEdge { u, v, reason: "loop" });
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: "duplicate edge",
            });
        }
        self.insert(u, v);
        Ok(())
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.edge_count += 1;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u < self.n && v < self.n && self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = false;
            self.adj[v * self.n + u] = false;
            self.edge_count -= 1;
            true
        } else {
            false
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter().enumerate().filter(|(_, &b)| b).map(|(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        lex_pairs(self.n).filter(|&(u, v)| self.has_edge(u, v))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Whether the graph minus the vertices flagged in `deleted` is connected.
    pub fn is_connected_without(&self, deleted: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| !deleted[v]) else {
            return true;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut reached = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !deleted[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == deleted.iter().filter(|&&d| !d).count()
    }

    /// Subgraph induced on `vertices` (deduplicated and sorted), relabeled
    /// order-preservingly. Returns the graph together with the label map.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let labels = normalize_vertex_set(vertices, self.n)?;
        let mut g = Graph::empty(labels.len());
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.insert(i, j);
                }
            }
        }
        Ok((g, labels))
    }
}

/// Pairs `(u, v)` with `u < v < n` in lexicographic order.
pub fn lex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

pub(crate) fn normalize_vertex_set(vertices: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut labels = vertices.to_vec();
    labels.sort_unstable();
    labels.dedup();
    if let Some(&v) = labels.last() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Ok(labels)
}

/// `k` internally vertex-disjoint paths joining `source` to `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Vec<usize>>,
}

impl PathFamily {
    /// Checks that every path is a walk in `g` from source to target and that
    /// no two paths share an internal vertex.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        for path in &self.paths {
            if path.first() != Some(&self.source) || path.last() != Some(&self.target) {
                return false;
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &path[1..path.len() - 1] {
                if v == self.source || v == self.target || used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        true
    }
}

/// Menger-style certificate for or against κ-connectivity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConnectivityVerdict {
    /// The graph is κ-connected. The witness is absent exactly when the graph
    /// is complete (no nonadjacent pair exists).
    Connected { witness: Option<PathFamily> },
    /// Deleting `separator` (fewer than κ vertices) disconnects the graph.
    Separated { separator: Vec<usize> },
}

impl ConnectivityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ConnectivityVerdict::Connected { .. })
    }

    pub fn separator(&self) -> Option<&[usize]> {
        match self {
            ConnectivityVerdict::Separated { separator } => Some(separator),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&PathFamily> {
        match self {
            ConnectivityVerdict::Connected { witness } => witness.as_ref(),
            _ => None,
        }
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.is_connected_without(&vec![false; g.n()])
}

/// Lexicographically least nonadjacent pair minimizing the local
/// connectivity, together with that minimum. `None` for complete graphs.
fn minimizing_pair(g: &Graph) -> Option<(usize, usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (s, t) in lex_pairs(g.n()) {
        if g.has_edge(s, t) {
            continue;
        }
        let cap = best.map_or(usize::MAX, |(_, _, k)| k);
        let k = flow::local_connectivity(g, s, t, cap);
        if best.is_none_or(|(_, _, b)| k < b) {
            best = Some((s, t, k));
            if k == 0 {
                break;
            }
        }
    }
    best
}

/// Classical vertex connectivity: `n - 1` for complete graphs, otherwise the
/// minimum number of internally disjoint paths over nonadjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(match minimizing_pair(g) {
        None => g.n() - 1,
        Some((_, _, k)) => k,
    })
}

/// Decides κ-connectivity in deletion semantics and returns a certificate.
///
/// Complete graphs are κ-connected for every κ. Otherwise the graph is
/// κ-connected iff its vertex connectivity is at least κ; the certificate is
/// the path family or minimum separator for the lexicographically least
/// minimizing pair.
pub fn is_kappa_connected(g: &Graph, kappa: usize) -> ConnectivityVerdict {
    let Some((s, t, k)) = minimizing_pair(g) else {
        return ConnectivityVerdict::Connected { witness: None };
    };
    let cert = flow::certificate(g, s, t);
    debug_assert_eq!(cert.paths.len(), k);
    if k >= kappa {
        ConnectivityVerdict::Connected {
            witness: Some(PathFamily {
                source: s,
                target: t,
                paths: cert.paths,
            }),
        }
    } else {
        ConnectivityVerdict::Separated {
            separator: cert.separator,
        }
    }
}

/// Decision-only form of [`is_kappa_connected`]: skips certificate
/// extraction and stops each flow once it reaches `kappa`.
pub fn kappa_holds(g: &Graph, kappa: usize) -> bool {
    if g.is_complete() {
        return true;
    }
    if g.min_degree().is_some_and(|d| d < kappa) {
        return false;
    }
    lex_pairs(g.n())
        .filter(|&(s, t)| !g.has_edge(s, t))
        .all(|(s, t)| flow::local_connectivity(g, s, t, kappa) >= kappa)
}

pub fn is_highly_connected(g: &Graph) -> bool {
    is_kappa_connected(g, g.n()).holds()
}

/// Test oracle: the largest κ such that deleting any vertex set of size
/// below κ leaves a connected graph, by enumerating every deletion set.
/// Complete graphs return `n`.
pub fn brute_force_kappa(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleSizeLimit { n, limit: ORACLE_LIMIT });
    }
    let rows: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0, |m, v| m | 1 << v))
        .collect();
    let all: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut smallest_cut = n;
    for deleted in 0..=all {
        let size = deleted.count_ones() as usize;
        if size < smallest_cut && !mask_connected(&rows, all & !deleted) {
            smallest_cut = size;
        }
    }
    Ok(smallest_cut)
}

fn mask_connected(rows: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let mut reached = alive & alive.wrapping_neg();
    loop {
        let mut next = reached;
        let mut bits = reached;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= rows[v] & alive;
        }
        if next == reached {
            return reached == alive;
        }
        reached = next;
    }
}

/// Whether the graph has no cycle.
pub fn is_forest(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_edge() -> Graph {
        let mut g = Graph::complete(4);
        g.remove_edge(0, 1);
        g
    }

    #[test]
    fn connectedness_basics() {
        assert!(is_connected(&Graph::path(3)));
        assert!(!is_connected(&Graph::empty(2)));
        assert!(is_connected(&Graph::empty(0)));
        assert!(is_connected(&Graph::empty(1)));
    }

    #[test]
    fn vertex_connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(4)), Ok(3));
        assert_eq!(vertex_connectivity(&Graph::cycle(5)), Ok(2));
        assert_eq!(vertex_connectivity(&Graph::path(4)), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::empty(3)), Ok(0));
        assert_eq!(vertex_connectivity(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn kappa_connected_examples() {
        assert!(is_kappa_connected(&Graph::complete(4), 4).holds());
        assert!(is_kappa_connected(&Graph::complete(4), 100).holds());
        assert!(is_kappa_connected(&Graph::cycle(4), 2).holds());

        let verdict = is_kappa_connected(&Graph::cycle(4), 3);
        assert_eq!(verdict.separator(), Some(&[1, 3][..]));

        // the two vertices adjacent to both ends of the missing edge {0,1}
        let verdict = is_kappa_connected(&k4_minus_edge(), 4);
        assert_eq!(verdict.separator(), Some(&[2, 3][..]));
    }

    #[test]
    fn connected_verdict_carries_disjoint_paths() {
        let g = Graph::cycle(6);
        let verdict = is_kappa_connected(&g, 2);
        let fam = verdict.witness().expect("incomplete graph has a witness");
        assert_eq!((fam.source, fam.target), (0, 2));
        assert_eq!(fam.paths.len(), 2);
        assert!(fam.is_valid_in(&g));
    }

    #[test]
    fn highly_connected_examples() {
        assert!(is_highly_connected(&Graph::complete(5)));
        assert!(!is_highly_connected(&Graph::cycle(5)));
        assert!(is_highly_connected(&Graph::empty(1)));
        assert!(is_highly_connected(&Graph::empty(0)));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_kappa(&Graph::complete(3)), Ok(3));
        // C4 stays connected after any single deletion; {0,2} splits it
        assert_eq!(brute_force_kappa(&Graph::cycle(4)), Ok(2));
        assert_eq!(brute_force_kappa(&Graph::empty(2)), Ok(0));
        assert_eq!(
            brute_force_kappa(&Graph::empty(13)),
            Err(Error::OracleSizeLimit { n: 13, limit: 12 })
        );
    }

    #[test]
    fn forest_examples() {
        assert!(is_forest(&Graph::path(5)));
        assert!(!is_forest(&Graph::cycle(3)));
        assert!(is_forest(&Graph::empty(0)));
    }

    #[test]
    fn edge_validation() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn induced_relabels_in_order() {
        let g = Graph::cycle(5);
        let (h, labels) = g.induced(&[4, 0, 1]).unwrap();
        assert_eq!(labels, vec![0, 1, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn pair_mask_round_trip() {
        let g = Graph::cycle(5);
        assert_eq!(Graph::from_pair_mask(5, g.pair_mask()), g);
    }
}
