//! Tabulates A-antimagic and A*-antimagic existence for all small trees and
//! groups, checking the pattern "a tree is A-antimagic iff its order is not
//! 2 mod 4".

use alloc::vec::Vec;

use super::cordial::EdgeLabelSearch;
use super::trees::{enumerate_trees, TREE_ENUMERATION_CAP};
use super::{Budget, SearchOutcome, SearchStatus};
use crate::error::{Error, Result};
use crate::group::{groups_of_order, GroupSpec};
use crate::labeling::{EdgeLabeling, SimpleGraph};

#[derive(Debug, Clone)]
pub struct ExploreRow {
    pub n: usize,
    pub group: GroupSpec,
    pub tree: SimpleGraph,
    pub antimagic: SearchOutcome<EdgeLabeling>,
    pub star_antimagic: SearchOutcome<EdgeLabeling>,
}

impl ExploreRow {
    /// `Some(false)` when the row contradicts the conjectured pattern,
    /// `None` when the antimagic search was inconclusive.
    pub fn matches_pattern(&self) -> Option<bool> {
        let expected = self.n % 4 != 2;
        match self.antimagic.status {
            SearchStatus::Found => Some(expected),
            SearchStatus::NotExists => Some(!expected),
            SearchStatus::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct ConjectureReport {
    pub rows: Vec<ExploreRow>,
}

impl ConjectureReport {
    /// Rows whose outcome contradicts the pattern; each carries its
    /// certificate when one exists.
    pub fn counterexamples(&self) -> impl Iterator<Item = &ExploreRow> {
        self.rows.iter().filter(|r| r.matches_pattern() == Some(false))
    }

    pub fn unknown(&self) -> impl Iterator<Item = &ExploreRow> {
        self.rows.iter().filter(|r| r.matches_pattern().is_none())
    }
}

/// Every tree on `n ≤ n_max` vertices against every Abelian group of
/// order `n`.
pub fn explore_conjecture(n_max: usize, budget: Budget) -> Result<ConjectureReport> {
    explore_with(n_max, |s| super::run_sequential(s, budget))
}

/// As [`explore_conjecture`], with a caller-supplied runner (e.g. a
/// parallel one) for the individual searches.
pub fn explore_with(
    n_max: usize,
    mut run: impl FnMut(&EdgeLabelSearch) -> SearchOutcome<EdgeLabeling>,
) -> Result<ConjectureReport> {
    if n_max > TREE_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            limit: TREE_ENUMERATION_CAP as u64,
            requested: n_max as u64,
        });
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let trees = enumerate_trees(n)?;
        for group in groups_of_order(n as u64) {
            for tree in &trees {
                let antimagic = run(&EdgeLabelSearch::a_antimagic(tree, &group)?);
                let star_antimagic = run(&EdgeLabelSearch::a_star_antimagic(tree, &group)?);
                rows.push(ExploreRow {
                    n,
                    group: group.clone(),
                    tree: tree.clone(),
                    antimagic,
                    star_antimagic,
                });
            }
        }
    }
    Ok(ConjectureReport { rows })
}
