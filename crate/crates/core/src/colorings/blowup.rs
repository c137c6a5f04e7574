use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Replaces vertex `α` of `base` by a block of `block_sizes[α]` vertices.
///
/// Blocks are laid out consecutively. A pair across blocks `α != β` gets
/// `base(α, β)`; a pair inside one block gets `inner_color`.
pub fn blowup_coloring(base: &EdgeColoring, block_sizes: &[usize], inner_color: usize) -> Result<EdgeColoring> {
    if inner_color >= base.k() {
        return Err(Error::ColorOutOfRange {
            color: inner_color,
            k: base.k(),
        });
    }
    if block_sizes.len() != base.n() {
        return Err(Error::InvalidParameter(format!(
            "{} block sizes for a base on {} vertices",
            block_sizes.len(),
            base.n()
        )));
    }
    if let Some(i) = block_sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidParameter(format!("block {i} is empty")));
    }
    let block_of: Vec<usize> = block_sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect();
    EdgeColoring::from_fn(block_of.len(), base.k(), |u, v| {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            inner_color
        } else {
            base.get(a, b)
        }
    })
}
