//! Pair maps `s(x, y) = (x · y, x ∗ y)` and every property they can have:
//! solution, reversed solution, invertibility, opposite, commutativity,
//! cocommutativity and equivalence.

mod checks;
mod equivalence;
mod pairmap;

pub use checks::{
    is_cocommutative, is_commutative, is_reversed_solution, is_solution_conditions,
    is_solution_direct, profile, Condition, ConditionVerdict, SolutionProfile, Triple, Verdict,
};
pub use equivalence::{are_equivalent, EQUIVALENCE_MAX};
pub use pairmap::PairMap;
