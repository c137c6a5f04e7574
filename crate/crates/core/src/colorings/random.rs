use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::EdgeColoring;
use crate::colorings::subadditive::is_subadditive;
use crate::colorings::OrderedColoring;
use crate::error::{invalid, Result};

/// Independent uniform colors from a ChaCha8 stream seeded by `seed`, drawn in
/// lexicographic pair order.
pub fn random_coloring(n: usize, k: usize, seed: u64) -> Result<EdgeColoring> {
    if n == 0 || k == 0 {
        return Err(invalid("random coloring needs n >= 1 and k >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    EdgeColoring::from_fn(n, k, |_, _| rng.random_range(0..k))
}

/// `c(α, β) = f(β)` for a random nondecreasing `f: {0..n-1} -> {0..k-1}`.
/// Every such coloring is subadditive.
pub fn random_monotone_coloring(n: usize, k: usize, seed: u64) -> Result<OrderedColoring> {
    if n == 0 || k == 0 {
        return Err(invalid("monotone coloring needs n >= 1 and k >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f: Vec<usize> = (0..n).map(|_| rng.random_range(0..k)).collect();
    f.sort_unstable();
    Ok(EdgeColoring::from_fn(n, k, |_, b| f[b])?.into())
}

/// Rejection-samples uniform colorings until one is subadditive, giving up
/// after `max_tries` draws.
pub fn sample_subadditive_coloring(n: usize, k: usize, seed: u64, max_tries: usize) -> Result<Option<OrderedColoring>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let c: OrderedColoring = random_coloring(n, k, rng.random())?.into();
        if is_subadditive(&c) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
