//! E_A-cordial paths of order `|A|` for `A ≅ Z_{4m} ⊕ H`, `m > 1`, `|H| = k`
//! odd.
//!
//! The path is cut into `k` blocks of `4m` vertices `w_j` joined by
//! connector edges. Every edge of block `j` has second coordinate `f₁(j)`,
//! where `f₁` is an E_H-cordial labeling of `C_k`; first coordinates follow
//! the three piecewise patterns below.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{AntDecomposition, GroupElement, GroupIsomorphism, GroupSpec};
use crate::labeling::{verify_a_antimagic, EdgeLabeling, SimpleGraph};
use crate::search::{Budget, EdgeLabelSearch, SearchStatus};

/// Everything the block construction depends on, fixed up front.
#[derive(Debug, Clone)]
pub struct AntLayout {
    pub decomposition: AntDecomposition,
    pub m: u64,
    pub k: usize,
    /// `f₁`: `k` labels over `H`, label `j` on the edge leaving `w_j`.
    pub base_cycle_labels: EdgeLabeling,
    /// `Z_{4m} ⊕ H` onto the requested presentation.
    pub iso: GroupIsomorphism,
}

/// Pins the decomposition and `f₁` for `spec`.
///
/// `f₁` is the lexicographically first E_H-cordial labeling of `C_k` with
/// first label 0; for `k = 1` it is the single label 0.
pub fn ant_layout(spec: &GroupSpec, budget: Budget) -> Result<AntLayout> {
    let decomposition = spec.ant_decomposition().ok_or_else(|| {
        Error::Inapplicable(format!("{spec} is not Z_4m ⊕ H with m > 1 and |H| odd"))
    })?;
    let h = decomposition.odd_part.clone();
    let k = h.order() as usize;
    let base_cycle_labels = if k == 1 {
        EdgeLabeling {
            group: h.clone(),
            labels: vec![h.zero()],
        }
    } else {
        let cycle = SimpleGraph::cycle(k)?;
        let outcome = EdgeLabelSearch::ea_cordial(&cycle, &h)?
            .with_first_label(0)
            .run(budget);
        match outcome.status {
            SearchStatus::Found => outcome.certificate.expect("found carries a certificate"),
            SearchStatus::Unknown => return Err(Error::BudgetExhausted),
            SearchStatus::NotExists => {
                return Err(Error::VerificationFailed(format!(
                    "no E-cordial labeling of C_{k} over {h}"
                )))
            }
        }
    };
    let iso = GroupIsomorphism::new(&decomposition.as_spec(), spec)?;
    Ok(AntLayout {
        m: decomposition.m(),
        k,
        decomposition,
        base_cycle_labels,
        iso,
    })
}

/// First coordinate of edge `w_i w_{i+1}` inside block `j`, `0 ≤ i ≤ 4m − 2`.
fn block_coordinate(m: u64, j: usize, i: u64) -> u64 {
    let half = i / 2;
    let odd_block = j % 2 == 1;
    if i.is_multiple_of(2) {
        if odd_block {
            2 * m + half
        } else {
            half
        }
    } else if odd_block {
        1 + half
    } else if j == 0 && i < 2 * m {
        2 * m + half
    } else {
        2 * m + 1 + half
    }
}

/// The labeling of `P_{|A|}` determined by `layout`, over the requested
/// presentation, verified before it is returned.
pub fn construct_ant_path_with(layout: &AntLayout) -> Result<EdgeLabeling> {
    let m = layout.m;
    let k = layout.k;
    let f1 = &layout.base_cycle_labels.labels;
    let big = layout.decomposition.as_spec();
    let point = |x: u64, h: &GroupElement| -> GroupElement {
        let mut r = Vec::with_capacity(big.factors().len());
        r.push(x % (4 * m));
        r.extend_from_slice(h.residues());
        GroupElement::new(r)
    };
    let mut native = Vec::with_capacity(4 * m as usize * k);
    for j in 0..k {
        for i in 0..4 * m - 1 {
            native.push(point(block_coordinate(m, j, i), &f1[j]));
        }
        if j + 1 < k {
            let x = if j % 2 == 0 { 0 } else { 2 * m };
            native.push(point(x, &f1[(j + 1) % k]));
        }
    }
    let labels = native
        .iter()
        .map(|a| layout.iso.apply(a))
        .collect::<Result<Vec<_>>>()?;
    let f = EdgeLabeling {
        group: layout.iso.target().clone(),
        labels,
    };
    let path = SimpleGraph::path(f.labels.len() + 1)?;
    if let Some(why) = verify_a_antimagic(&path, &f).violation {
        return Err(Error::VerificationFailed(format!("block construction over {} ({why})", f.group)));
    }
    Ok(f)
}

/// [`construct_ant_path_with`] under the default search budget for `f₁`.
pub fn construct_ant_path(spec: &GroupSpec) -> Result<EdgeLabeling> {
    construct_ant_path_with(&ant_layout(spec, Budget::default())?)
}
