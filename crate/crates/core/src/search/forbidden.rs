use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use sha2::{Digest, Sha256};

use crate::coloring::pair_count;
use crate::error::{Error, Result};
use crate::graph::{kappa_holds, Graph};

/// Largest vertex count accepted by [`minimal_connected_graphs`].
pub const FORBIDDEN_LIMIT: usize = 7;

/// All edge-minimal κ-connected graphs on `m` labeled vertices, as edge masks
/// over pairs of `{0..m-1}` in lexicographic order.
///
/// κ-connectivity is closed under adding edges, so a graph on `m` vertices is
/// κ-connected iff it contains some member as a spanning subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenList {
    m: usize,
    kappa: usize,
    masks: Vec<u32>,
}

impl ForbiddenList {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Members as edge masks, ascending.
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.masks
            .iter()
            .map(|&mask| Graph::from_pair_mask(self.m, u64::from(mask)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Whether the graph with edge mask `mask` spans some member.
    #[inline]
    pub fn contains_spanning(&self, mask: u32) -> bool {
        #[allow(clippy::manual_contains)] // a subset test, not membership
        self.masks.iter().any(|&h| mask & h == h)
    }

    /// SHA-256 over `"m kappa"` followed by the masks, one per line.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("{} {}\n", self.m, self.kappa));
        for mask in &self.masks {
            hasher.update(format!("{mask}\n"));
        }
        hex::encode(hasher.finalize())
    }
}

type Cache = Mutex<HashMap<(usize, usize), Arc<ForbiddenList>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Enumerates every graph on `m` labeled vertices and keeps the κ-connected
/// ones from which no single edge can be removed. Results are cached.
pub fn minimal_connected_graphs(m: usize, kappa: usize) -> Result<Arc<ForbiddenList>> {
    if m > FORBIDDEN_LIMIT {
        return Err(Error::EnumerationLimit {
            m,
            limit: FORBIDDEN_LIMIT,
        });
    }
    if let Some(hit) = cache().lock().expect("cache lock").get(&(m, kappa)) {
        return Ok(hit.clone());
    }
    let list = Arc::new(enumerate(m, kappa));
    cache().lock().expect("cache lock").insert((m, kappa), list.clone());
    Ok(list)
}

fn enumerate(m: usize, kappa: usize) -> ForbiddenList {
    let pairs = pair_count(m);
    let total = 1usize << pairs;
    let holds: Vec<bool> = (0..total)
        .map(|mask| kappa_holds(&Graph::from_pair_mask(m, mask as u64), kappa))
        .collect();
    let masks = (0..total)
        .filter(|&mask| holds[mask])
        .filter(|&mask| (0..pairs).all(|bit| mask >> bit & 1 == 0 || !holds[mask & !(1 << bit)]))
        .map(|mask| mask as u32)
        .collect();
    ForbiddenList { m, kappa, masks }
}
