//! Explicit colorings and checkers for the structure their analyses rely on.

mod blowup;
mod certify;
pub mod delta;
mod forest;
mod random;
mod sierpinski;
mod subadditive;

pub use blowup::blowup_coloring;
pub use certify::common_neighbor_certify;
pub use delta::{mine_delta_system, DeltaSystemReport, PairFamily};
pub use forest::forest_partition_coloring;
pub use random::{random_coloring, random_monotone_coloring, sample_subadditive_coloring};
pub use sierpinski::{check_sierpinski_triangle_free, sierpinski_coloring, split_color, BitstringFamily};
pub use subadditive::{
    find_confinement_violation, is_subadditive, path_confinement_check, subadditivity_violation, tree_order,
    ConfinementViolation, Inequality, OrderedColoring, SubadditivityViolation, TreeOrder,
};
