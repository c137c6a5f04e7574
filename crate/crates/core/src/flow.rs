//! Unit-capacity max flow on the vertex-split digraph.
//!
//! Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by a unit arc;
//! each edge `{u, v}` becomes uncapacitated arcs `out(u) -> in(v)` and
//! `out(v) -> in(u)`. A max flow from `out(s)` to `in(t)` counts internally
//! disjoint `s`–`t` paths, and the saturated split arcs of a min cut form a
//! minimum separator.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: usize,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn split(g: &Graph) -> Self {
        let n = g.n();
        let big = n + 1;
        let mut net = Network {
            arcs: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.add(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.add(2 * u + 1, 2 * v, big);
            net.add(2 * v + 1, 2 * u, big);
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc {
            to: from,
            cap: 0,
            rev: rev_to,
        });
    }

    /// One BFS augmentation of a single unit; returns whether it succeeded.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for (i, a) in self.arcs[x].iter().enumerate() {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    prev[a.to] = Some((x, i));
                    queue.push_back(a.to);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut y = sink;
        while let Some((x, i)) = prev[y] {
            let rev = self.arcs[x][i].rev;
            self.arcs[x][i].cap -= 1;
            self.arcs[y][rev].cap += 1;
            y = x;
        }
        true
    }

    fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for a in &self.arcs[x] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }
}

fn run(g: &Graph, s: usize, t: usize, cap: usize) -> (Network, usize) {
    let mut net = Network::split(g);
    let mut value = 0;
    while value < cap && net.augment(2 * s + 1, 2 * t) {
        value += 1;
    }
    (net, value)
}

/// Maximum number of internally disjoint `s`–`t` paths for nonadjacent
/// `s != t`, saturating at `cap`.
pub(crate) fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    run(g, s, t, cap).1
}

pub(crate) struct Certificate {
    pub paths: Vec<Vec<usize>>,
    pub separator: Vec<usize>,
}

/// Max family of internally disjoint paths plus a minimum `s`–`t` separator,
/// for nonadjacent `s != t`.
pub(crate) fn certificate(g: &Graph, s: usize, t: usize) -> Certificate {
    let (mut net, value) = run(g, s, t, usize::MAX);
    let n = g.n();

    let reach = net.reachable(2 * s + 1);
    let separator: Vec<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    debug_assert_eq!(separator.len(), value);

    // flow on an edge arc is big - cap
    let big = n + 1;
    let mut paths = Vec::with_capacity(value);
    for _ in 0..value {
        let mut path = vec![s];
        let mut out = 2 * s + 1;
        loop {
            // arcs leaving out(u) are edge arcs plus the residual of u's split arc
            let i = net.arcs[out]
                .iter()
                .position(|a| a.to != out - 1 && a.cap < big)
                .expect("flow conservation");
            let arc = net.arcs[out][i];
            net.arcs[out][i].cap += 1;
            net.arcs[arc.to][arc.rev].cap -= 1;
            let v = arc.to / 2;
            path.push(v);
            if v == t {
                break;
            }
            out = 2 * v + 1;
        }
        paths.push(path);
    }
    Certificate { paths, separator }
}
