use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::coloring::{induced_color_graph, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{is_kappa_connected, kappa_holds, ConnectivityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrowMode {
    /// Witness sets of exactly `m` vertices.
    #[default]
    Exact,
    /// Witness sets of any size from `m` to `n`.
    AtLeast,
}

/// A color and a vertex set whose color graph is κ-connected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowWitness {
    pub color: usize,
    /// Original vertex labels, ascending.
    pub vertices: Vec<usize>,
    /// Certificate for the induced color graph, in local labels.
    pub verdict: ConnectivityVerdict,
}

impl ArrowWitness {
    /// Re-derives κ-connectivity of the witness from the coloring.
    pub fn verify(&self, c: &EdgeColoring, kappa: usize) -> bool {
        induced_color_graph(c, self.color, &self.vertices)
            .map(|h| is_kappa_connected(&h.graph, kappa).holds())
            .unwrap_or(false)
    }
}

/// Searches for a monochromatic κ-connected vertex set of size `m` (or at
/// least `m`). Sizes ascend, sets are taken in lexicographic order and colors
/// ascending; the first witness is returned.
pub fn arrow_check(c: &EdgeColoring, kappa: usize, m: usize, mode: ArrowMode) -> Result<Option<ArrowWitness>> {
    let n = c.n();
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let sizes = match mode {
        ArrowMode::Exact => m..=m,
        ArrowMode::AtLeast => m..=n,
    };
    for size in sizes {
        for set in (0..n).combinations(size) {
            for color in 0..c.k() {
                let h = induced_color_graph(c, color, &set)?;
                // incomplete κ-connected graphs have min degree >= κ
                if size >= kappa + 2 && h.graph.min_degree().is_some_and(|d| d < kappa) {
                    continue;
                }
                if kappa_holds(&h.graph, kappa) {
                    return Ok(Some(ArrowWitness {
                        color,
                        vertices: h.labels,
                        verdict: is_kappa_connected(&h.graph, kappa),
                    }));
                }
            }
        }
    }
    Ok(None)
}
