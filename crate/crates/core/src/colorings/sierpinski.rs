use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Pairwise-distinct binary strings of a common length, listed in index
/// order. The index order plays the role of the ordinal order on the strings;
/// it need not be lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitstringFamily {
    lambda: usize,
    strings: Vec<Vec<bool>>,
}

impl BitstringFamily {
    pub fn new(lambda: usize, strings: Vec<Vec<bool>>) -> Result<Self> {
        if let Some(bad) = strings.iter().position(|s| s.len() != lambda) {
            return Err(Error::InvalidParameter(format!(
                "string {bad} has length {}, expected {lambda}",
                strings[bad].len()
            )));
        }
        let mut order: Vec<usize> = (0..strings.len()).collect();
        order.sort_by(|&a, &b| strings[a].cmp(&strings[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if strings[w[0]] == strings[w[1]] {
                return Err(Error::DuplicateString {
                    first: w[0],
                    second: w[1],
                });
            }
        }
        Ok(BitstringFamily { lambda, strings })
    }

    /// Parses strings such as `"0110"`.
    pub fn from_strs<S: AsRef<str>>(strings: &[S]) -> Result<Self> {
        let lambda = strings.first().map_or(0, |s| s.as_ref().len());
        let parsed = strings
            .iter()
            .map(|s| {
                s.as_ref()
                    .chars()
                    .map(|ch| match ch {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::InvalidParameter(format!("bad bit {other:?}"))),
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(lambda, parsed)
    }

    /// All `2^lambda` strings; index `j` holds the binary expansion of `j`,
    /// most significant bit at position 0.
    pub fn full(lambda: usize) -> Self {
        assert!(lambda < usize::BITS as usize, "lambda too large");
        let strings = (0..1usize << lambda)
            .map(|j| (0..lambda).map(|p| j >> (lambda - 1 - p) & 1 == 1).collect())
            .collect();
        BitstringFamily { lambda, strings }
    }

    /// All `2^lambda` strings in a seeded random index order.
    pub fn full_shuffled(lambda: usize, seed: u64) -> Self {
        let mut fam = Self::full(lambda);
        fam.strings.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        fam
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    pub fn strings(&self) -> &[Vec<bool>] {
        &self.strings
    }

    /// First position at which strings `a` and `b` differ.
    pub fn first_difference(&self, a: usize, b: usize) -> usize {
        let (x, y) = (&self.strings[a], &self.strings[b]);
        (0..self.lambda)
            .find(|&p| x[p] != y[p])
            .expect("strings are pairwise distinct")
    }
}

/// Colors `{α, β}` with `α < β` by `2·Δ + η_α(Δ)`, where `Δ` is the first
/// position at which the strings differ.
pub fn sierpinski_coloring(f: &BitstringFamily) -> Result<EdgeColoring> {
    // revalidate: the fields may have come from anywhere in the crate
    let f = BitstringFamily::new(f.lambda, f.strings.clone())?;
    EdgeColoring::from_fn(f.len(), 2 * f.lambda, |a, b| {
        let delta = f.first_difference(a, b);
        2 * delta + usize::from(f.strings[a][delta])
    })
}

/// Recovers `(Δ, bit)` from a flattened color.
pub fn split_color(color: usize) -> (usize, usize) {
    (color / 2, color % 2)
}

/// Whether the coloring of `f` has no monochromatic triangle, by scanning
/// every triple.
pub fn check_sierpinski_triangle_free(f: &BitstringFamily) -> bool {
    let Ok(c) = sierpinski_coloring(f) else {
        return false;
    };
    let n = c.n();
    for a in 0..n {
        for b in a + 1..n {
            let ab = c.get(a, b);
            for g in b + 1..n {
                if c.get(a, g) == ab && c.get(b, g) == ab {
                    return false;
                }
            }
        }
    }
    true
}
