use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::normalize_vertex_set;

/// Whether every pair `α != β` in `vertices` has at least `kappa` common
/// neighbors `γ` in `vertices` with `c(α, γ) = c(β, γ) = color`.
///
/// Each common neighbor is a length-two color path, so a `true` answer
/// certifies that the color graph on `vertices` is `kappa`-connected. The
/// converse fails: a 4-cycle is 2-connected but adjacent vertices share no
/// neighbor.
pub fn common_neighbor_certify(c: &EdgeColoring, vertices: &[usize], color: usize, kappa: usize) -> Result<bool> {
    if color >= c.k() {
        return Err(Error::ColorOutOfRange { color, k: c.k() });
    }
    let b = normalize_vertex_set(vertices, c.n())?;
    if b.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "certificate needs at least 2 vertices, got {}",
            b.len()
        )));
    }
    for (i, &alpha) in b.iter().enumerate() {
        for &beta in &b[i + 1..] {
            let common = b
                .iter()
                .filter(|&&g| g != alpha && g != beta && c.get(alpha, g) == color && c.get(beta, g) == color)
                .count();
            if common < kappa {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
