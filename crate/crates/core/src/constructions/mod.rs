//! Explicit constructions and decision procedures.
//!
//! * [`transfer`]: moving labelings between cycles and paths, shifting, and
//!   projecting onto a direct summand.
//! * [`ant`]: the block construction of an E_A-cordial `P_{|A|}` for
//!   `A ≅ Z_{4m} ⊕ H`, `m > 1`, `|H|` odd.
//! * [`dispatch`]: the complete procedures for `E_{Z_k}`-cordial paths and
//!   A-antimagic paths, which pick a route per group and verify the result.

pub mod ant;
pub mod dispatch;
pub mod figures;
pub mod transfer;

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::labeling::EdgeLabeling;

pub use ant::{ant_layout, construct_ant_path, construct_ant_path_with, AntLayout};
pub use dispatch::{construct_path_antimagic, construct_path_ek, rstar_to_path_antimagic, rotate_to_star};
pub use transfer::{cycle_to_path, cycle_vertex_to_edge, project_labeling, shift_labeling, TransferMode};

/// `C_n` is `Z_k`-cordial iff `k` is odd or `n` is not an odd multiple of
/// `k`.
pub fn decide_cycle_zk_cordial(n: u64, k: u64) -> Result<bool> {
    if n < 3 || k < 2 {
        return Err(Error::Domain(format!("need n ≥ 3 and k ≥ 2, got n={n}, k={k}")));
    }
    Ok(k % 2 == 1 || !is_odd_multiple(n, k))
}

/// `P_n` is `E_{Z_k}`-cordial iff `k ≢ 2 (mod 4)` or `n` is not an odd
/// multiple of `k`, for `n ≥ 3`. `P_2` never is: both vertices carry the
/// single edge label.
pub fn decide_path_ek_cordial(n: u64, k: u64) -> Result<bool> {
    if n < 2 || k < 2 {
        return Err(Error::Domain(format!("need n ≥ 2 and k ≥ 2, got n={n}, k={k}")));
    }
    if n == 2 {
        return Ok(false);
    }
    Ok(k % 4 != 2 || !is_odd_multiple(n, k))
}

fn is_odd_multiple(n: u64, k: u64) -> bool {
    n.is_multiple_of(k) && (n / k) % 2 == 1
}

/// True when a tree on `n` vertices is ruled out from being E_A-cordial
/// because both `n` and `|A|` are `2 (mod 4)`.
pub fn decide_tree_2mod4_obstruction(n: u64, spec: &GroupSpec) -> bool {
    n % 4 == 2 && spec.order() % 4 == 2
}

/// `P_{|A|}` is A-antimagic iff `|A| ≢ 2 (mod 4)`.
pub fn decide_path_a_antimagic(spec: &GroupSpec) -> Result<bool> {
    if spec.order() < 2 {
        return Err(Error::Domain("need |A| ≥ 2".into()));
    }
    Ok(spec.order() % 4 != 2)
}

/// Maximum number of distinct consecutive sums over Hamiltonian cycles on
/// the elements of `A`: `|A| − 1` with a unique involution, `|A| − 2` for
/// `(Z_2)^m` with `m ≥ 2`, `|A|` otherwise.
pub fn sigma_max_formula(spec: &GroupSpec) -> Result<u64> {
    let n = spec.order();
    if n < 2 {
        return Err(Error::Domain("need |A| ≥ 2".into()));
    }
    Ok(if spec.involution_count() == 1 {
        n - 1
    } else if spec.is_elementary_two() {
        n - 2
    } else {
        n
    })
}

/// An R*-sequencing: the nonidentity elements in an order whose cyclic
/// differences `seq[i+1] − seq[i]` are pairwise distinct, with
/// `seq[i−1] + seq[i+1] = seq[i]` at `star_index` (indices cyclic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RStarSequence {
    pub group: GroupSpec,
    pub seq: Vec<GroupElement>,
    pub star_index: usize,
}

impl RStarSequence {
    /// Validates `seq` and records the first star position.
    pub fn new(group: GroupSpec, seq: Vec<GroupElement>) -> Result<Self> {
        let len = seq.len();
        if len < 3 || len as u64 + 1 != group.order() {
            return Err(Error::Precondition(format!(
                "an R*-sequencing of {group} lists {} elements, got {len}",
                group.order().saturating_sub(1)
            )));
        }
        for a in &seq {
            group.check(a)?;
            if a.is_zero() {
                return Err(Error::Precondition("R*-sequencing contains 0".into()));
            }
        }
        let mut sorted = seq.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != len {
            return Err(Error::Precondition("R*-sequencing repeats an element".into()));
        }
        let mut diffs: Vec<_> = (0..len)
            .map(|i| group.add_unchecked(&seq[(i + 1) % len], &group.negate_unchecked(&seq[i])))
            .collect();
        diffs.sort();
        diffs.dedup();
        if diffs.len() != len {
            return Err(Error::Precondition("consecutive differences repeat".into()));
        }
        let star_index = (0..len)
            .find(|&i| star_holds(&group, &seq, i))
            .ok_or_else(|| Error::Precondition("no position satisfies the star condition".into()))?;
        Ok(RStarSequence {
            group,
            seq,
            star_index,
        })
    }

    pub fn is_star_at(&self, i: usize) -> bool {
        star_holds(&self.group, &self.seq, i)
    }
}

fn star_holds(group: &GroupSpec, seq: &[GroupElement], i: usize) -> bool {
    let len = seq.len();
    let prev = &seq[(i + len - 1) % len];
    let next = &seq[(i + 1) % len];
    group.add_unchecked(prev, next) == seq[i]
}

/// How a dispatcher produced its labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// The explicit labeling `0, 1, 2` of `P_4` over `Z_4`.
    BaseP4,
    /// Block construction over `Z_{4m} ⊕ H`.
    AntBlocks,
    /// Block construction over `Z_k ⊕ Z_{n/k}` projected onto `Z_k`.
    AntProjection,
    /// Searched E_A-cordial cycle, then cycle-to-path.
    CycleSearch,
    /// Searched sum-rainbow Hamiltonian cycle read as an A-cordial cycle,
    /// then vertex-to-edge transfer and cycle-to-path.
    RainbowCycle,
    /// Bundled `(Z_2)^3` labeling.
    Figure4,
    /// Searched R*-sequencing turned into a path labeling.
    RStar,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::BaseP4 => "base-p4",
            Route::AntBlocks => "ant-blocks",
            Route::AntProjection => "ant-projection",
            Route::CycleSearch => "cycle-search",
            Route::RainbowCycle => "rainbow-cycle",
            Route::Figure4 => "figure-4",
            Route::RStar => "r-star",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a dispatcher.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// A labeling that passed its verifier.
    Built { labeling: EdgeLabeling, route: Route },
    /// No labeling exists.
    Impossible,
    /// A search route ran out of budget.
    Unknown { route: Route },
}

impl Construction {
    pub fn labeling(&self) -> Option<&EdgeLabeling> {
        match self {
            Construction::Built { labeling, .. } => Some(labeling),
            _ => None,
        }
    }
}
