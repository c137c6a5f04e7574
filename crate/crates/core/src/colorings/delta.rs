//! Brute-force search for two-dimensional Δ-system structure.
//!
//! A family of sets is a Δ-system with root `r` when every two distinct
//! members intersect in exactly `r`. Given sets `u(α, β)` for `α < β < n`, the
//! miner looks for an index set `B` on which
//!
//! 1. each row `{u(α, β) : β ∈ B, β > α}` is a Δ-system with root `V⁺(α)`,
//! 2. each column `{u(α, β) : α ∈ B, α < β}` is a Δ-system with root `V⁻(β)`,
//! 3. `{V⁺(α)}`, `{V⁻(α)}` and `{V⁻(α) ∪ V⁺(α)}` are Δ-systems,
//! 4. the residues `u(α, β) ∖ (V⁺(α) ∪ V⁻(β))` are pairwise disjoint.
//!
//! Rows and columns with fewer than two members do not determine a root. Such
//! a root is taken from the other side of the same index when that side is
//! determined (`V⁺(α) := V⁻(α)` or vice versa) and is empty otherwise.
//! Families in item 3 with fewer than two members have empty root.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::coloring::{pair_count, pair_index};
use crate::error::{Error, Result};
use crate::graph::lex_pairs;

pub const MINER_LIMIT: usize = 10;

pub type Set = BTreeSet<u64>;

/// Sets `u(α, β)` for every pair `α < β < n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFamily {
    n: usize,
    sets: Vec<Set>,
}

impl PairFamily {
    /// Sets in lexicographic pair order.
    pub fn new(n: usize, sets: Vec<Set>) -> Result<Self> {
        if sets.len() != pair_count(n) {
            return Err(Error::InvalidParameter(format!(
                "expected {} sets for n = {n}, got {}",
                pair_count(n),
                sets.len()
            )));
        }
        Ok(PairFamily { n, sets })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Set) -> Self {
        let sets = lex_pairs(n).map(|(a, b)| f(a, b)).collect();
        PairFamily { n, sets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `u(a, b)` for `a < b`.
    pub fn get(&self, a: usize, b: usize) -> &Set {
        &self.sets[pair_index(self.n, a, b)]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Set)> + '_ {
        lex_pairs(self.n).zip(&self.sets).map(|((a, b), s)| (a, b, s))
    }
}

/// A successful index set and the roots witnessing items 1–4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaSystemReport {
    /// The index set `B`, ascending.
    pub indices: Vec<usize>,
    /// `V⁺(α)` for each `α` in `indices`.
    pub row_roots: Vec<Set>,
    /// `V⁻(β)` for each `β` in `indices`.
    pub col_roots: Vec<Set>,
    /// Whether each row root was imputed rather than determined.
    pub row_imputed: Vec<bool>,
    pub col_imputed: Vec<bool>,
    pub row_roots_delta: Set,
    pub col_roots_delta: Set,
    /// Root of `{V⁻(α) ∪ V⁺(α)}`.
    pub union_roots_delta: Set,
    pub residues_disjoint: bool,
    /// All row roots share one size, and all column roots share one size.
    pub uniform_order_type: bool,
}

enum Root {
    Undetermined,
    Common(Set),
    Broken,
}

fn delta_root<'a>(members: impl IntoIterator<Item = &'a Set>) -> Root {
    let members: Vec<&Set> = members.into_iter().collect();
    if members.len() < 2 {
        return Root::Undetermined;
    }
    let root: Set = members[0].intersection(members[1]).copied().collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !a.intersection(b).eq(root.iter()) {
                return Root::Broken;
            }
        }
    }
    Root::Common(root)
}

fn check(family: &PairFamily, b: &[usize]) -> Option<DeltaSystemReport> {
    let mut rows = Vec::with_capacity(b.len());
    let mut cols = Vec::with_capacity(b.len());
    for &x in b {
        rows.push(
            match delta_root(b.iter().filter(|&&y| y > x).map(|&y| family.get(x, y))) {
                Root::Broken => return None,
                Root::Common(r) => Some(r),
                Root::Undetermined => None,
            },
        );
        cols.push(
            match delta_root(b.iter().filter(|&&y| y < x).map(|&y| family.get(y, x))) {
                Root::Broken => return None,
                Root::Common(r) => Some(r),
                Root::Undetermined => None,
            },
        );
    }
    let row_imputed: Vec<bool> = rows.iter().map(Option::is_none).collect();
    let col_imputed: Vec<bool> = cols.iter().map(Option::is_none).collect();
    let row_roots: Vec<Set> = rows
        .iter()
        .zip(&cols)
        .map(|(r, c)| r.clone().or_else(|| c.clone()).unwrap_or_default())
        .collect();
    let col_roots: Vec<Set> = cols
        .iter()
        .zip(&rows)
        .map(|(c, r)| c.clone().or_else(|| r.clone()).unwrap_or_default())
        .collect();
    let unions: Vec<Set> = row_roots.iter().zip(&col_roots).map(|(p, m)| p | m).collect();

    let family_root = |sets: &[Set]| match delta_root(sets) {
        Root::Broken => None,
        Root::Common(r) => Some(r),
        Root::Undetermined => Some(Set::new()),
    };
    let row_roots_delta = family_root(&row_roots)?;
    let col_roots_delta = family_root(&col_roots)?;
    let union_roots_delta = family_root(&unions)?;

    let position = |v: usize| b.binary_search(&v).expect("index in B");
    let mut seen = Set::new();
    for (&x, &y) in b.iter().tuple_combinations() {
        let (px, py) = (position(x), position(y));
        for e in family.get(x, y) {
            if row_roots[px].contains(e) || col_roots[py].contains(e) {
                continue;
            }
            if !seen.insert(*e) {
                return None;
            }
        }
    }

    let same_size = |sets: &[Set]| sets.iter().map(Set::len).all_equal();
    Some(DeltaSystemReport {
        indices: b.to_vec(),
        uniform_order_type: same_size(&row_roots) && same_size(&col_roots),
        row_roots,
        col_roots,
        row_imputed,
        col_imputed,
        row_roots_delta,
        col_roots_delta,
        union_roots_delta,
        residues_disjoint: true,
    })
}

/// First index set of size `target_size`, in lexicographic order, satisfying
/// items 1–4; `None` when every candidate fails.
pub fn mine_delta_system(family: &PairFamily, target_size: usize) -> Result<Option<DeltaSystemReport>> {
    if family.n() > MINER_LIMIT {
        return Err(Error::OracleSizeLimit {
            n: family.n(),
            limit: MINER_LIMIT,
        });
    }
    if target_size == 0 {
        return Err(Error::InvalidParameter("target size must be positive".into()));
    }
    Ok((0..family.n())
        .combinations(target_size)
        .find_map(|b| check(family, &b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> Set {
        xs.iter().copied().collect()
    }

    #[test]
    fn pairs_family() {
        let fam = PairFamily::from_fn(5, |a, b| set(&[a as u64, b as u64]));
        let r = mine_delta_system(&fam, 5).unwrap().expect("full size");
        assert_eq!(r.indices, vec![0, 1, 2, 3, 4]);
        for (i, a) in r.indices.iter().enumerate() {
            assert_eq!(r.row_roots[i], set(&[*a as u64]));
            assert_eq!(r.col_roots[i], set(&[*a as u64]));
        }
        assert_eq!(r.row_imputed, vec![false, false, false, true, true]);
        assert!(r.union_roots_delta.is_empty());
        assert!(r.residues_disjoint && r.uniform_order_type);
    }

    #[test]
    fn constant_family() {
        let fam = PairFamily::from_fn(4, |_, _| set(&[9]));
        let r = mine_delta_system(&fam, 4).unwrap().expect("full size");
        assert_eq!(r.indices, vec![0, 1, 2, 3]);
        assert!(r.row_roots.iter().chain(&r.col_roots).all(|s| *s == set(&[9])));
        assert_eq!(r.union_roots_delta, set(&[9]));
    }

    #[test]
    fn colliding_residues() {
        let fam = PairFamily::new(3, vec![set(&[0, 1]), set(&[0, 7]), set(&[1, 7])]).unwrap();
        assert_eq!(mine_delta_system(&fam, 3).unwrap(), None);
        assert!(mine_delta_system(&fam, 2).unwrap().is_some());
    }

    #[test]
    fn broken_row_is_rejected() {
        // row 0: {1,2}, {1,3}, {2,3} share no common pairwise intersection
        let fam = PairFamily::from_fn(4, |a, b| match (a, b) {
            (0, 1) => set(&[1, 2]),
            (0, 2) => set(&[1, 3]),
            (0, 3) => set(&[2, 3]),
            _ => set(&[100 + (a * 4 + b) as u64]),
        });
        let r = mine_delta_system(&fam, 3).unwrap().expect("some triple works");
        assert_eq!(r.indices, vec![0, 1, 2]);
        assert!(mine_delta_system(&fam, 4).unwrap().is_none());
    }

    #[test]
    fn limits() {
        let fam = PairFamily::from_fn(11, |_, _| Set::new());
        assert!(mine_delta_system(&fam, 3).is_err());
        let fam = PairFamily::from_fn(3, |_, _| Set::new());
        assert!(mine_delta_system(&fam, 0).is_err());
        assert_eq!(mine_delta_system(&fam, 4).unwrap(), None);
    }
}
