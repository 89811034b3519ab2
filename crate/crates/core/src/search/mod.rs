//! Exhaustive backtracking oracles.
//!
//! Every search is split into first-level branches (the choice made at the
//! first position). Branches are independent, so a caller may run them in
//! any order or in parallel and then [`combine`] the results in branch
//! order; the outcome is identical to [`run_sequential`]. The node budget
//! applies to each branch separately.

mod cordial;
mod explore;
mod sequences;
pub mod trees;

use alloc::vec::Vec;

pub use cordial::{
    search_a_antimagic, search_a_cordial, search_a_star_antimagic, search_ea_cordial,
    EdgeLabelSearch, VertexLabelSearch,
};
pub use explore::{explore_conjecture, explore_with, ConjectureReport, ExploreRow};
pub use sequences::{
    compute_sigma_max, search_rainbow_cycle, search_rstar_sequence, HamiltonianCycle,
    RStarSearch, RainbowCycleSearch, SIGMA_MAX_CAP,
};
pub use trees::enumerate_trees;

/// Nodes a single branch may explore before giving up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Self::DEFAULT_NODES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Found,
    NotExists,
    Unknown,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Found => "found",
            SearchStatus::NotExists => "not-exists",
            SearchStatus::Unknown => "unknown",
        }
    }
}

/// `Found` carries a certificate; `NotExists` is only reported after the
/// whole (pruned) space was exhausted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<C> {
    pub status: SearchStatus,
    pub certificate: Option<C>,
    pub nodes_explored: u64,
}

impl<C> SearchOutcome<C> {
    pub fn is_found(&self) -> bool {
        self.status == SearchStatus::Found
    }

    pub fn not_exists(nodes_explored: u64) -> Self {
        SearchOutcome {
            status: SearchStatus::NotExists,
            certificate: None,
            nodes_explored,
        }
    }

    pub fn map<D>(self, f: impl FnOnce(C) -> D) -> SearchOutcome<D> {
        SearchOutcome {
            status: self.status,
            certificate: self.certificate.map(f),
            nodes_explored: self.nodes_explored,
        }
    }
}

/// A search decomposed into independent first-level branches.
pub trait BranchedSearch {
    type Certificate;

    fn branch_count(&self) -> usize;

    fn run_branch(&self, branch: usize, budget: Budget) -> SearchOutcome<Self::Certificate>;
}

/// Folds branch results in branch order: the first `Found` wins unless an
/// earlier branch was `Unknown`. Node counts are summed up to the deciding
/// branch.
pub fn combine<C>(results: impl IntoIterator<Item = SearchOutcome<C>>) -> SearchOutcome<C> {
    let mut nodes = 0u64;
    for r in results {
        nodes = nodes.saturating_add(r.nodes_explored);
        match r.status {
            SearchStatus::NotExists => continue,
            _ => {
                return SearchOutcome {
                    nodes_explored: nodes,
                    ..r
                }
            }
        }
    }
    SearchOutcome::not_exists(nodes)
}

pub fn run_sequential<S: BranchedSearch>(search: &S, budget: Budget) -> SearchOutcome<S::Certificate> {
    combine((0..search.branch_count()).map(|b| search.run_branch(b, budget)))
}

/// Node counter shared by the recursive engines.
#[derive(Debug)]
pub(crate) struct NodeMeter {
    pub nodes: u64,
    limit: u64,
}

impl NodeMeter {
    pub fn new(budget: Budget) -> Self {
        NodeMeter {
            nodes: 0,
            limit: budget.max_nodes,
        }
    }

    /// Counts one node; false once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.limit
    }
}

/// Set of dead states, capped in size.
pub(crate) struct DeadStates<K> {
    set: hashbrown::HashSet<K>,
    cap: usize,
}

impl<K: core::hash::Hash + Eq> DeadStates<K> {
    pub const DEFAULT_CAP: usize = 1 << 22;

    pub fn new() -> Self {
        DeadStates {
            set: hashbrown::HashSet::new(),
            cap: Self::DEFAULT_CAP,
        }
    }

    pub fn contains(&self, k: &K) -> bool {
        self.set.contains(k)
    }

    pub fn insert(&mut self, k: K) {
        if self.set.len() < self.cap {
            self.set.insert(k);
        }
    }
}

/// Result of one recursive call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Step {
    Solved,
    Dead,
    OutOfBudget,
}

pub(crate) fn outcome_from<C>(step: Step, nodes: u64, cert: impl FnOnce() -> C) -> SearchOutcome<C> {
    match step {
        Step::Solved => SearchOutcome {
            status: SearchStatus::Found,
            certificate: Some(cert()),
            nodes_explored: nodes,
        },
        Step::Dead => SearchOutcome::not_exists(nodes),
        Step::OutOfBudget => SearchOutcome {
            status: SearchStatus::Unknown,
            certificate: None,
            nodes_explored: nodes,
        },
    }
}

/// Exact equitability bounds for `total` items spread over `classes`
/// classes: every class ends with `q` or `q + 1` items, exactly `r` of them
/// with `q + 1`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ClassBound {
    q: usize,
    r: usize,
}

impl ClassBound {
    pub fn new(total: usize, classes: usize) -> Self {
        ClassBound {
            q: total / classes,
            r: total % classes,
        }
    }

    pub fn cap(&self) -> usize {
        if self.r > 0 {
            self.q + 1
        } else {
            self.q
        }
    }
}

/// Running class counts checked against a [`ClassBound`].
#[derive(Debug, Clone)]
pub(crate) struct ClassTally {
    pub counts: Vec<u16>,
    bound: ClassBound,
    at_cap: usize,
    deficit: usize,
}

impl ClassTally {
    pub fn new(classes: usize, bound: ClassBound) -> Self {
        ClassTally {
            counts: alloc::vec![0; classes],
            bound,
            at_cap: 0,
            deficit: bound.q * classes,
        }
    }

    /// Adds one item to class `c`; returns false if equitability is now
    /// out of reach given `remaining` unplaced items. Always undo with
    /// [`ClassTally::remove`].
    #[inline]
    pub fn add(&mut self, c: usize) -> bool {
        let x = self.counts[c] as usize;
        self.counts[c] += 1;
        if x < self.bound.q {
            self.deficit -= 1;
        }
        if self.bound.r > 0 && x + 1 == self.bound.q + 1 {
            self.at_cap += 1;
        }
        x < self.bound.cap() && (self.bound.r == 0 || self.at_cap <= self.bound.r)
    }

    #[inline]
    pub fn remove(&mut self, c: usize) {
        self.counts[c] -= 1;
        let x = self.counts[c] as usize;
        if x < self.bound.q {
            self.deficit += 1;
        }
        if self.bound.r > 0 && x + 1 == self.bound.q + 1 {
            self.at_cap -= 1;
        }
    }

    #[inline]
    pub fn can_finish(&self, remaining: usize) -> bool {
        self.deficit <= remaining
    }
}
