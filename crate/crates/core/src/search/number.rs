use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::backtrack::{exists_avoiding_coloring, SearchConfig, SearchOutcome, SearchParams, SearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum RamseyValue {
    /// Least `n` at which every coloring contains a witness.
    Exact(usize),
    /// Every `n <= nmax` admits an avoiding coloring.
    GreaterThan(usize),
    /// The search at this `n` ran out of budget.
    Unknown(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyReport {
    pub m: usize,
    pub kappa: usize,
    pub k: usize,
    pub nmax: usize,
    pub value: RamseyValue,
    /// One outcome per `n` tried, ascending from `m`.
    pub outcomes: Vec<SearchOutcome>,
}

/// Least `n <= nmax` with no avoiding `k`-coloring of `K_n`. Values of `n`
/// below `m` trivially admit avoiding colorings and are skipped.
pub fn ramsey_number(m: usize, kappa: usize, k: usize, nmax: usize, config: SearchConfig) -> Result<RamseyReport> {
    if nmax < m {
        return Err(Error::InvalidParameter(format!("nmax = {nmax} is below m = {m}")));
    }
    let mut outcomes = Vec::new();
    let mut value = RamseyValue::GreaterThan(nmax);
    for n in m..=nmax {
        let outcome = exists_avoiding_coloring(SearchParams { n, m, kappa, k }, config)?;
        let verdict = match outcome.result {
            SearchResult::Avoiding { .. } => None,
            SearchResult::Exhausted => Some(RamseyValue::Exact(n)),
            SearchResult::Unknown => Some(RamseyValue::Unknown(n)),
        };
        outcomes.push(outcome);
        if let Some(v) = verdict {
            value = v;
            break;
        }
    }
    Ok(RamseyReport {
        m,
        kappa,
        k,
        nmax,
        value,
        outcomes,
    })
}
