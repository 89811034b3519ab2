//! Complete procedures: E_{Z_k}-cordial paths of any order and A-antimagic
//! paths of order `|A|`. Each picks the first applicable route and verifies
//! what it returns.

use alloc::format;
use alloc::vec::Vec;

use super::ant::{ant_layout, construct_ant_path_with};
use super::figures::figure4;
use super::transfer::{cycle_to_path, cycle_vertex_to_edge, project_unchecked, TransferMode};
use super::{decide_path_ek_cordial, Construction, RStarSequence, Route};
use crate::error::{Error, Result};
use crate::group::{GroupIsomorphism, GroupSpec};
use crate::labeling::{
    verify_a_antimagic, verify_ea_cordial, EdgeLabeling, SimpleGraph, VertexLabeling,
};
use crate::search::{
    search_ea_cordial, search_rainbow_cycle, search_rstar_sequence, Budget, SearchOutcome,
    SearchStatus,
};

/// An E_{Z_k}-cordial labeling of `P_n`, or why there is none.
pub fn construct_path_ek(n: usize, k: u64, budget: Budget) -> Result<Construction> {
    if !decide_path_ek_cordial(n as u64, k)? {
        return Ok(Construction::Impossible);
    }
    let zk = GroupSpec::cyclic(k);
    let (labeling, route) = if n == 4 && k == 4 {
        (EdgeLabeling::cyclic(4, &[0, 1, 2])?, Route::BaseP4)
    } else if k.is_multiple_of(4) && n > 4 && (n as u64).is_multiple_of(k) && (n as u64 / k) % 2 == 1 {
        let cofactor = n as u64 / k;
        let spec = if cofactor == 1 {
            zk.clone()
        } else {
            GroupSpec::new(alloc::vec![k, cofactor])?
        };
        let layout = match ant_layout(&spec, budget) {
            Err(Error::BudgetExhausted) => return Ok(Construction::Unknown { route: Route::AntProjection }),
            other => other?,
        };
        let full = construct_ant_path_with(&layout)?;
        (project_unchecked(&full, &[0])?, Route::AntProjection)
    } else {
        let cycle = SimpleGraph::cycle(n)?;
        let outcome = search_ea_cordial(&cycle, &zk, budget)?;
        let Some(f) = found(outcome, Route::CycleSearch)? else {
            return Ok(Construction::Unknown { route: Route::CycleSearch });
        };
        (cycle_to_path(&cycle, &f)?.1, Route::CycleSearch)
    };
    let path = SimpleGraph::path(n)?;
    if let Some(why) = verify_ea_cordial(&path, &labeling).violation {
        return Err(Error::VerificationFailed(format!("P_{n} over Z_{k} via {route} ({why})")));
    }
    Ok(Construction::Built { labeling, route })
}

/// `Ok(None)` on budget exhaustion; a search that proves nonexistence
/// where a certificate must exist is a verification failure.
fn found<C>(outcome: SearchOutcome<C>, route: Route) -> Result<Option<C>> {
    match outcome.status {
        SearchStatus::Found => Ok(outcome.certificate),
        SearchStatus::Unknown => Ok(None),
        SearchStatus::NotExists => Err(Error::VerificationFailed(format!(
            "{route} search found no certificate"
        ))),
    }
}

/// An A-antimagic labeling of `P_{|A|}`, or why there is none.
pub fn construct_path_antimagic(spec: &GroupSpec, budget: Budget) -> Result<Construction> {
    let n = spec.order();
    if n < 2 {
        return Err(Error::Domain("need |A| ≥ 2".into()));
    }
    if n % 4 == 2 {
        return Ok(Construction::Impossible);
    }
    let n = n as usize;
    let (labeling, route) = if n % 2 == 1 {
        let cycle = SimpleGraph::cycle(n)?;
        let outcome = search_ea_cordial(&cycle, spec, budget)?;
        let Some(f) = found(outcome, Route::CycleSearch)? else {
            return Ok(Construction::Unknown { route: Route::CycleSearch });
        };
        (cycle_to_path(&cycle, &f)?.1, Route::CycleSearch)
    } else if spec.is_isomorphic(&GroupSpec::cyclic(4)) {
        (map_into(&EdgeLabeling::cyclic(4, &[0, 1, 2])?, spec)?, Route::BaseP4)
    } else if spec.ant_decomposition().is_some() {
        let layout = match ant_layout(spec, budget) {
            Err(Error::BudgetExhausted) => return Ok(Construction::Unknown { route: Route::AntBlocks }),
            other => other?,
        };
        (construct_ant_path_with(&layout)?, Route::AntBlocks)
    } else if spec.involution_count() != 1 && !spec.is_elementary_two() {
        let outcome = search_rainbow_cycle(spec, budget)?;
        let Some(hc) = found(outcome, Route::RainbowCycle)? else {
            return Ok(Construction::Unknown { route: Route::RainbowCycle });
        };
        let cycle = SimpleGraph::cycle(n)?;
        let c = VertexLabeling::new(spec.clone(), hc.order)?;
        let f = cycle_vertex_to_edge(&cycle, &c, TransferMode::Strict)?;
        (cycle_to_path(&cycle, &f)?.1, Route::RainbowCycle)
    } else if spec.is_isomorphic(&GroupSpec::elementary_two(3)) {
        (map_into(&figure4().labeling, spec)?, Route::Figure4)
    } else if spec.is_elementary_two() {
        let outcome = search_rstar_sequence(spec, budget)?;
        let Some(rs) = found(outcome, Route::RStar)? else {
            return Ok(Construction::Unknown { route: Route::RStar });
        };
        (rstar_to_path_antimagic(&rotate_to_star(rs))?, Route::RStar)
    } else {
        return Err(Error::Inapplicable(format!("no route covers {spec}")));
    };
    let path = SimpleGraph::path(n)?;
    if let Some(why) = verify_a_antimagic(&path, &labeling).violation {
        return Err(Error::VerificationFailed(format!("P_{n} over {spec} via {route} ({why})")));
    }
    Ok(Construction::Built { labeling, route })
}

fn map_into(f: &EdgeLabeling, spec: &GroupSpec) -> Result<EdgeLabeling> {
    let iso = GroupIsomorphism::new(&f.group, spec)?;
    let labels = f.labels.iter().map(|a| iso.apply(a)).collect::<Result<Vec<_>>>()?;
    Ok(EdgeLabeling {
        group: spec.clone(),
        labels,
    })
}

/// Rotates the sequence so its first star sits at index 0, i.e.
/// `seq[L−1] + seq[1] = seq[0]`.
pub fn rotate_to_star(rs: RStarSequence) -> RStarSequence {
    let RStarSequence {
        group,
        mut seq,
        star_index,
    } = rs;
    seq.rotate_left(star_index);
    RStarSequence {
        group,
        seq,
        star_index: 0,
    }
}

/// Over `(Z_2)^m`: edge labels `0, seq[1], …, seq[L−1]` along `P_{|A|}`.
///
/// Vertex sums are `0`, `seq[1]`, `seq[i−1] + seq[i]` for `2 ≤ i < L` and
/// `seq[L−1]`. The star gives `seq[1] = seq[0] + seq[L−1]` and
/// `seq[L−1] = seq[0] + seq[1]`, so the sums are 0 together with the `L`
/// distinct cyclic sums.
pub fn rstar_to_path_antimagic(rs: &RStarSequence) -> Result<EdgeLabeling> {
    if !rs.group.is_elementary_two() {
        return Err(Error::Precondition(format!("{} is not elementary Abelian of exponent 2", rs.group)));
    }
    if !rs.is_star_at(0) {
        return Err(Error::Precondition("sequence is not rotated to its star".into()));
    }
    let mut labels = Vec::with_capacity(rs.seq.len());
    labels.push(rs.group.zero());
    labels.extend(rs.seq[1..].iter().cloned());
    let f = EdgeLabeling {
        group: rs.group.clone(),
        labels,
    };
    let path = SimpleGraph::path(rs.seq.len() + 1)?;
    if let Some(why) = verify_a_antimagic(&path, &f).violation {
        return Err(Error::VerificationFailed(format!("R*-sequence path ({why})")));
    }
    Ok(f)
}
