//! Exact maximum-leaf oracle and the parameterized decision procedure.

mod exact;
mod forced;
mod fpt;

pub use exact::{exact_max_leaves, exact_max_leaves_capped, DEFAULT_CAP};
pub use forced::{achievable_leaves, forced_leaf_feasible, ForcedLeafQuery};
pub use fpt::{fpt_decide, fpt_decide_with, Answer, Colex, FptOptions, Stats, Verdict};
