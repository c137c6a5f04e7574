//! Colorings with ordered colors satisfying, for all `α < β < γ`,
//!
//! ```text
//! (1)  c(α, β) <= max(c(α, γ), c(β, γ))
//! (2)  c(α, γ) <= max(c(α, β), c(β, γ))
//! ```
//!
//! Under these inequalities `α <_ξ β  ⇔  α < β ∧ c(α, β) <= ξ` is a tree order,
//! and the color of `{α, β}` is bounded by the largest color on any path from
//! `α` to `β` that stays above `α`.

use std::collections::VecDeque;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// An edge coloring whose colors are compared by their natural order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedColoring(EdgeColoring);

impl From<EdgeColoring> for OrderedColoring {
    fn from(c: EdgeColoring) -> Self {
        OrderedColoring(c)
    }
}

impl Deref for OrderedColoring {
    type Target = EdgeColoring;

    fn deref(&self) -> &EdgeColoring {
        &self.0
    }
}

impl OrderedColoring {
    pub fn into_inner(self) -> EdgeColoring {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inequality {
    /// `c(α, β) <= max(c(α, γ), c(β, γ))`
    First,
    /// `c(α, γ) <= max(c(α, β), c(β, γ))`
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubadditivityViolation {
    pub triple: (usize, usize, usize),
    pub inequality: Inequality,
}

/// Lexicographically first triple violating either inequality, checking (1)
/// before (2) within a triple.
pub fn subadditivity_violation(c: &OrderedColoring) -> Option<SubadditivityViolation> {
    let n = c.n();
    for a in 0..n {
        for b in a + 1..n {
            for g in b + 1..n {
                let (ab, ag, bg) = (c.get(a, b), c.get(a, g), c.get(b, g));
                let inequality = if ab > ag.max(bg) {
                    Inequality::First
                } else if ag > ab.max(bg) {
                    Inequality::Second
                } else {
                    continue;
                };
                return Some(SubadditivityViolation {
                    triple: (a, b, g),
                    inequality,
                });
            }
        }
    }
    None
}

pub fn is_subadditive(c: &OrderedColoring) -> bool {
    subadditivity_violation(c).is_none()
}

fn require_subadditive(c: &OrderedColoring) -> Result<()> {
    match subadditivity_violation(c) {
        None => Ok(()),
        Some(v) => Err(Error::NotSubadditive(format!(
            "inequality {:?} fails at {:?}",
            v.inequality, v.triple
        ))),
    }
}

/// The relation `<_ξ` and whether it is a tree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeOrder {
    pub xi: usize,
    /// Pairs `(α, β)` with `α <_ξ β`, lexicographically sorted.
    pub relation: Vec<(usize, usize)>,
    /// Transitive, and the predecessors of every vertex form a chain.
    pub valid: bool,
}

impl TreeOrder {
    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.relation.binary_search(&(a, b)).is_ok()
    }
}

pub fn tree_order(c: &OrderedColoring, xi: usize) -> Result<TreeOrder> {
    require_subadditive(c)?;
    Ok(build_tree_order(c, xi))
}

fn build_tree_order(c: &OrderedColoring, xi: usize) -> TreeOrder {
    let n = c.n();
    let below = |a: usize, b: usize| a < b && c.get(a, b) <= xi;
    let relation: Vec<(usize, usize)> = crate::graph::lex_pairs(n).filter(|&(a, b)| below(a, b)).collect();

    let mut valid = true;
    'check: for b in 0..n {
        let preds: Vec<usize> = (0..b).filter(|&a| below(a, b)).collect();
        for (i, &a1) in preds.iter().enumerate() {
            for &a2 in &preds[i + 1..] {
                if !below(a1, a2) {
                    valid = false;
                    break 'check;
                }
            }
        }
        for g in b + 1..n {
            if below(b, g) && preds.iter().any(|&a| !below(a, g)) {
                valid = false;
                break 'check;
            }
        }
    }
    TreeOrder { xi, relation, valid }
}

/// A path from `alpha` to `beta` through vertices above `alpha` whose largest
/// color is below `c(alpha, beta)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfinementViolation {
    pub alpha: usize,
    pub beta: usize,
    pub path: Vec<usize>,
    pub max_color: usize,
}

/// Checks that `c(α, β)` never exceeds the largest color on a path from `α` to
/// `β` whose internal vertices are all greater than `α`. Requires a
/// subadditive coloring.
pub fn path_confinement_check(c: &OrderedColoring) -> Result<Option<ConfinementViolation>> {
    require_subadditive(c)?;
    Ok(find_confinement_violation(c))
}

/// Unguarded form of [`path_confinement_check`]; accepts any coloring and
/// returns the first counterexample by `(α, β)`.
///
/// For each `α` and threshold `ξ`, a BFS over colors `<= ξ` restricted to
/// vertices `>= α` finds the vertices whose bottleneck distance from `α` is at
/// most `ξ`.
#[allow(clippy::needless_range_loop)]
pub fn find_confinement_violation(c: &OrderedColoring) -> Option<ConfinementViolation> {
    let n = c.n();
    for alpha in 0..n {
        // bottleneck[v] = least ξ such that v is reachable with colors <= ξ
        let mut bottleneck: Vec<Option<usize>> = vec![None; n];
        let mut parent: Vec<Vec<Option<usize>>> = vec![vec![None; n]; c.k()];
        for xi in 0..c.k() {
            let mut seen = vec![false; n];
            seen[alpha] = true;
            let mut queue = VecDeque::from([alpha]);
            while let Some(u) = queue.pop_front() {
                for v in alpha + 1..n {
                    if !seen[v] && v != u && c.get(u, v) <= xi {
                        seen[v] = true;
                        parent[xi][v] = Some(u);
                        queue.push_back(v);
                    }
                }
            }
            for v in alpha + 1..n {
                if seen[v] && bottleneck[v].is_none() {
                    bottleneck[v] = Some(xi);
                }
            }
        }
        for beta in alpha + 1..n {
            let xi = bottleneck[beta].expect("direct edge is a path");
            if xi < c.get(alpha, beta) {
                let mut path = vec![beta];
                let mut v = beta;
                while let Some(u) = parent[xi][v] {
                    path.push(u);
                    v = u;
                }
                path.reverse();
                let max_color = path.windows(2).map(|w| c.get(w[0], w[1])).max().unwrap_or(0);
                return Some(ConfinementViolation {
                    alpha,
                    beta,
                    path,
                    max_color,
                });
            }
        }
    }
    None
}
