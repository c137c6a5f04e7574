//! CNF compilation of avoidance instances and checking of solver models.

mod cnf;
mod equivalence;
mod model;
mod solve;

pub use cnf::{emit_cnf, CnfInstance, CLAUSE_LIMIT};
pub use equivalence::{
    default_grid, verify_cnf_equivalence, CnfVerdict, DecisionMethod, EquivalenceReport, EquivalenceRow,
};
pub use model::{assignment_from_literals, decode_model, parse_model};
pub use solve::{solve_exhaustive, EXHAUSTIVE_VAR_LIMIT};
