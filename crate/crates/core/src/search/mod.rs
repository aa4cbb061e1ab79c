//! Search for invariant weak pseudomanifolds by orbit selection with
//! constraint propagation.

mod catalog;
mod run;
mod state;

pub use catalog::{adjacency_of, build_constraints, enumerate_admissible, Constraints, Orbit, OrbitCatalog, SearchConfig};
pub use run::{choose_branch, prune_by_budget, run_search, search_with, SearchReport, SearchResult, SearchStats};
pub use state::{Inconsistent, SearchState, Status};
