//! Moving labelings between cycles and paths, and between groups.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};
use crate::labeling::{
    class_counts, verify_a_cordial, verify_ea_cordial, EdgeLabeling, GraphKind, SimpleGraph,
    VertexLabeling,
};

/// Whether a transfer checks its precondition first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TransferMode {
    #[default]
    Strict,
    /// Compute the transfer even when the input is not cordial.
    Permissive,
}

fn require_cycle(graph: &SimpleGraph) -> Result<()> {
    if graph.kind() != GraphKind::Cycle {
        return Err(Error::Precondition(format!(
            "expected a cycle, got a {}",
            graph.kind().as_str()
        )));
    }
    Ok(())
}

/// Relabels `C_n` so edge `e_i = v_i v_{i+1}` carries `c(v_i)`.
///
/// If `c` is A-cordial the result is E_A-cordial: its edge classes are the
/// vertex classes of `c`, and `f*(v_i) = c(v_{i−1}) + c(v_i)` runs over
/// the induced edge labels of `c`.
pub fn cycle_vertex_to_edge(
    cycle: &SimpleGraph,
    c: &VertexLabeling,
    mode: TransferMode,
) -> Result<EdgeLabeling> {
    require_cycle(cycle)?;
    if c.labels.len() != cycle.n() {
        return Err(Error::SizeMismatch(format!(
            "{} labels for {} vertices",
            c.labels.len(),
            cycle.n()
        )));
    }
    if mode == TransferMode::Strict {
        let v = verify_a_cordial(cycle, c);
        if let Some(why) = v.violation {
            return Err(Error::Precondition(format!("vertex labeling is not A-cordial ({why})")));
        }
    }
    let labels = cycle.edges().iter().map(|&(u, _)| c.labels[u].clone()).collect();
    EdgeLabeling::new(c.group.clone(), labels)
}

/// `f′(e) = f(e) − g`.
pub fn shift_labeling(f: &EdgeLabeling, g: &GroupElement) -> Result<EdgeLabeling> {
    let labels = f
        .labels
        .iter()
        .map(|a| f.group.sub(a, g))
        .collect::<Result<Vec<_>>>()?;
    Ok(EdgeLabeling {
        group: f.group.clone(),
        labels,
    })
}

/// Turns an E_A-cordial labeling of `C_n` into one of `P_n`.
///
/// Shifts by the first element `g` of maximal class size, so that 0 is a
/// most frequent label, deletes the first edge labeled 0 and numbers the
/// path from the head of the deleted edge. The endpoints of that edge lose
/// a 0 summand, so no vertex label changes.
pub fn cycle_to_path(cycle: &SimpleGraph, f: &EdgeLabeling) -> Result<(SimpleGraph, EdgeLabeling)> {
    require_cycle(cycle)?;
    let verdict = verify_ea_cordial(cycle, f);
    if let Some(why) = verdict.violation {
        return Err(Error::Precondition(format!("cycle labeling is not E_A-cordial ({why})")));
    }
    let n = cycle.n();
    let top = verdict.edge_class_counts.values().copied().max().unwrap_or(0);
    let g = verdict
        .edge_class_counts
        .iter()
        .find(|&(_, &c)| c == top)
        .map(|(g, _)| g.clone())
        .expect("group is nonempty");
    let shifted = shift_labeling(f, &g)?;
    let cut = shifted
        .labels
        .iter()
        .position(GroupElement::is_zero)
        .expect("0 is a most frequent label");
    let labels = (1..n).map(|i| shifted.labels[(cut + i) % n].clone()).collect();
    Ok((
        SimpleGraph::path(n)?,
        EdgeLabeling {
            group: f.group.clone(),
            labels,
        },
    ))
}

/// Keeps the coordinates listed in `keep` (indices into the group's
/// factors), i.e. projects onto that direct summand.
///
/// For a tree of order `|A|` with an E_A-cordial labeling the projection is
/// E_B-cordial: each vertex class of `B` gathers exactly `|A|/|B|` vertices
/// and at most one element of `A` is missing from the edges.
pub fn project_labeling(tree: &SimpleGraph, f: &EdgeLabeling, keep: &[usize]) -> Result<EdgeLabeling> {
    if !tree.is_tree() || tree.n() as u64 != f.group.order() {
        return Err(Error::Precondition(format!(
            "projection needs a tree of order |A| = {}",
            f.group.order()
        )));
    }
    if let Some(why) = verify_ea_cordial(tree, f).violation {
        return Err(Error::Precondition(format!("labeling is not E_A-cordial ({why})")));
    }
    project_unchecked(f, keep)
}

pub(crate) fn project_unchecked(f: &EdgeLabeling, keep: &[usize]) -> Result<EdgeLabeling> {
    let factors = f.group.factors();
    if let Some(&bad) = keep.iter().find(|&&i| i >= factors.len()) {
        return Err(Error::InvalidSpec(format!("no factor {bad} in {}", f.group)));
    }
    let group = GroupSpec::new(keep.iter().map(|&i| factors[i]).collect())?;
    let labels = f
        .labels
        .iter()
        .map(|a| GroupElement::new(keep.iter().map(|&i| a.residues()[i]).collect()))
        .collect();
    Ok(EdgeLabeling { group, labels })
}

/// `count_B(b) = Σ_h count_A((b, h))`, computed from class counts; used by
/// tests of the projection identity.
pub fn projected_counts(f: &EdgeLabeling, keep: &[usize]) -> Result<Vec<(GroupElement, usize)>> {
    let projected = project_unchecked(f, keep)?;
    let full = class_counts(&f.group, &f.labels)?;
    Ok(projected
        .group
        .enumerate()?
        .into_iter()
        .map(|b| {
            let total = full
                .iter()
                .filter(|(a, _)| keep.iter().zip(b.residues()).all(|(&i, &r)| a.residues()[i] == r))
                .map(|(_, &c)| c)
                .sum();
            (b, total)
        })
        .collect())
}
