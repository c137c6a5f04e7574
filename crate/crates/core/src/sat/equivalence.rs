use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::sat::cnf::emit_cnf;
use crate::sat::model::decode_model;
use crate::sat::solve::{solve_exhaustive, EXHAUSTIVE_VAR_LIMIT};
use crate::search::{arrow_check, exists_avoiding_coloring, ArrowMode, SearchConfig, SearchParams, SearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CnfVerdict {
    Satisfiable,
    Unsatisfiable,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionMethod {
    /// Exhaustive assignment enumeration.
    Enumeration,
    /// The native search's coloring, substituted into the clauses.
    NativeModel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceRow {
    pub params: SearchParams,
    pub variables: usize,
    pub clauses: usize,
    pub cnf: CnfVerdict,
    pub method: DecisionMethod,
    /// Whether the native search found an avoiding coloring.
    pub native_avoiding: Option<bool>,
    /// For satisfiable instances decided by enumeration: the decoded model has
    /// no witness under the native arrow check.
    pub model_verified: Option<bool>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub rows: Vec<EquivalenceRow>,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agrees)
    }
}

/// `n` in `1..=5`, `m = 3`, κ in `{1, 2, 3}`, `k` in `{1, 2}`, plus the
/// degenerate point `(2, 2, 1, 1)`.
pub fn default_grid() -> Vec<SearchParams> {
    let mut grid = vec![SearchParams {
        n: 2,
        m: 2,
        kappa: 1,
        k: 1,
    }];
    for n in 1..=5 {
        for kappa in 1..=3 {
            for k in 1..=2 {
                grid.push(SearchParams { n, m: 3, kappa, k });
            }
        }
    }
    grid
}

/// Decides every grid point twice, once through the CNF and once through the
/// native search, and records whether the verdicts match.
pub fn verify_cnf_equivalence(grid: &[SearchParams]) -> Result<EquivalenceReport> {
    let mut rows = Vec::with_capacity(grid.len());
    for &params in grid {
        let SearchParams { n, m, kappa, k } = params;
        let inst = emit_cnf(n, m, kappa, k)?;
        let native = exists_avoiding_coloring(params, SearchConfig::default())?;
        let native_avoiding = match &native.result {
            SearchResult::Avoiding { .. } => Some(true),
            SearchResult::Exhausted => Some(false),
            SearchResult::Unknown => None,
        };

        let (cnf, method, model_verified) = if inst.num_vars <= EXHAUSTIVE_VAR_LIMIT {
            match solve_exhaustive(&inst) {
                Some(model) => {
                    let coloring = decode_model(&inst, &model)?;
                    let clean = m > n || arrow_check(&coloring, kappa, m, ArrowMode::Exact)?.is_none();
                    (CnfVerdict::Satisfiable, DecisionMethod::Enumeration, Some(clean))
                }
                None => (CnfVerdict::Unsatisfiable, DecisionMethod::Enumeration, None),
            }
        } else {
            let verdict = match native.avoiding() {
                Some(c) if inst.satisfied_by(&inst.encode(c)?) => CnfVerdict::Satisfiable,
                _ => CnfVerdict::Undecided,
            };
            (verdict, DecisionMethod::NativeModel, None)
        };

        let agrees = match (cnf, native_avoiding) {
            (CnfVerdict::Satisfiable, Some(true)) => model_verified != Some(false),
            (CnfVerdict::Unsatisfiable, Some(false)) => true,
            _ => false,
        };
        rows.push(EquivalenceRow {
            params,
            variables: inst.num_vars,
            clauses: inst.clauses.len(),
            cnf,
            method,
            native_avoiding,
            model_verified,
            agrees,
        });
    }
    Ok(EquivalenceReport { rows })
}
