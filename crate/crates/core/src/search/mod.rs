//! Deciding the arrow relation on concrete colorings and searching for
//! colorings that avoid it.

mod arrow;
mod backtrack;
mod forbidden;
mod number;

pub use arrow::{arrow_check, ArrowMode, ArrowWitness};
pub use backtrack::{exists_avoiding_coloring, SearchConfig, SearchOutcome, SearchParams, SearchResult, SearchStats};
pub use forbidden::{minimal_connected_graphs, ForbiddenList, FORBIDDEN_LIMIT};
pub use number::{ramsey_number, RamseyReport, RamseyValue};
