//! Runs the first-level branches of a search on the rayon pool.

use std::sync::atomic::{AtomicUsize, Ordering};

use grouplabel_core::search::{combine, BranchedSearch};
use grouplabel_core::{Budget, SearchOutcome, SearchStatus};
use rayon::prelude::*;

/// Same result as a sequential run: branches are combined in branch order,
/// and a branch is skipped only when an earlier one already decided the
/// outcome, so the skipped result could never be inspected.
pub fn run_parallel<S>(search: &S, budget: Budget) -> SearchOutcome<S::Certificate>
where
    S: BranchedSearch + Sync,
    S::Certificate: Send,
{
    let decided = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<SearchOutcome<S::Certificate>>> = (0..search.branch_count())
        .into_par_iter()
        .map(|b| {
            if b > decided.load(Ordering::Relaxed) {
                return None;
            }
            let out = search.run_branch(b, budget);
            if out.status != SearchStatus::NotExists {
                decided.fetch_min(b, Ordering::Relaxed);
            }
            Some(out)
        })
        .collect();
    combine(results.into_iter().map_while(|r| r))
}
