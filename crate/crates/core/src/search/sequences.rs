//! Orderings of the group's elements: Hamiltonian cycles with many distinct
//! consecutive sums, and R*-sequencings.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    outcome_from, run_sequential, BranchedSearch, Budget, DeadStates, NodeMeter, SearchOutcome,
    SearchStatus, Step,
};
use crate::constructions::RStarSequence;
use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupElement, GroupSpec};

/// Largest order [`compute_sigma_max`] accepts.
pub const SIGMA_MAX_CAP: u64 = 16;

/// Cyclic ordering of all elements of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianCycle {
    pub group: GroupSpec,
    pub order: Vec<GroupElement>,
    pub distinct_sum_count: usize,
}

impl HamiltonianCycle {
    /// Validates that `order` lists every element once and recomputes the
    /// distinct-sum count.
    pub fn new(group: GroupSpec, order: Vec<GroupElement>) -> Result<Self> {
        let mut seen: Vec<_> = order.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != order.len() || order.len() as u64 != group.order() {
            return Err(Error::InvalidElement(format!(
                "not an ordering of all {} elements of {group}",
                group.order()
            )));
        }
        for a in &order {
            group.check(a)?;
        }
        let distinct_sum_count = count_distinct_sums(&group, &order);
        Ok(HamiltonianCycle {
            group,
            order,
            distinct_sum_count,
        })
    }

    /// Consecutive sums `order[i] + order[i+1]`, cyclically.
    pub fn sums(&self) -> Vec<GroupElement> {
        cyclic_sums(&self.group, &self.order)
    }
}

fn cyclic_sums(group: &GroupSpec, order: &[GroupElement]) -> Vec<GroupElement> {
    let n = order.len();
    (0..n)
        .map(|i| group.add_unchecked(&order[i], &order[(i + 1) % n]))
        .collect()
}

fn count_distinct_sums(group: &GroupSpec, order: &[GroupElement]) -> usize {
    let mut s = cyclic_sums(group, order);
    s.sort();
    s.dedup();
    s.len()
}

/// Maximum number of distinct consecutive sums over all Hamiltonian cycles
/// on the elements, with a witness.
///
/// Exhaustive branch-and-bound: element 0 is fixed first and each cycle is
/// counted in one orientation only (`order[1] < order[n-1]`). The only
/// bound used is the trivial one (one new sum per remaining edge).
pub fn compute_sigma_max(spec: &GroupSpec, budget: Budget) -> Result<SearchOutcome<HamiltonianCycle>> {
    let n = spec.order();
    if !(3..=SIGMA_MAX_CAP).contains(&n) {
        return Err(Error::Domain(format!(
            "sigma_max search needs 3 ≤ |A| ≤ {SIGMA_MAX_CAP}, got {n}"
        )));
    }
    let table = CayleyTable::new(spec)?;
    let n = n as usize;
    let mut bb = SigmaMax {
        t: &table,
        order: vec![0; n],
        best_order: Vec::new(),
        best: 0,
        sum_counts: vec![0; n],
        distinct: 0,
        meter: NodeMeter::new(budget),
    };
    let step = bb.dfs(1, 1);
    let nodes = bb.meter.nodes;
    if step == Step::OutOfBudget {
        return Ok(SearchOutcome {
            status: SearchStatus::Unknown,
            certificate: None,
            nodes_explored: nodes,
        });
    }
    let order = bb.best_order.iter().map(|&x| table.element(x)).collect();
    Ok(SearchOutcome {
        status: SearchStatus::Found,
        certificate: Some(HamiltonianCycle::new(spec.clone(), order)?),
        nodes_explored: nodes,
    })
}

struct SigmaMax<'a> {
    t: &'a CayleyTable,
    order: Vec<usize>,
    best_order: Vec<usize>,
    best: usize,
    sum_counts: Vec<u8>,
    distinct: usize,
    meter: NodeMeter,
}

impl SigmaMax<'_> {
    fn push_sum(&mut self, s: usize) {
        if self.sum_counts[s] == 0 {
            self.distinct += 1;
        }
        self.sum_counts[s] += 1;
    }

    fn pop_sum(&mut self, s: usize) {
        self.sum_counts[s] -= 1;
        if self.sum_counts[s] == 0 {
            self.distinct -= 1;
        }
    }

    /// `Solved` means the global optimum `n` was reached.
    fn dfs(&mut self, pos: usize, used: u64) -> Step {
        let n = self.order.len();
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        if pos == n {
            if self.order[1] > self.order[n - 1] {
                return Step::Dead;
            }
            let s = self.t.add(self.order[n - 1], self.order[0]);
            self.push_sum(s);
            if self.distinct > self.best {
                self.best = self.distinct;
                self.best_order = self.order.clone();
            }
            self.pop_sum(s);
            return if self.best == n { Step::Solved } else { Step::Dead };
        }
        // sums still to place: (pos-1 .. n-1) plus the closing one
        let remaining = n - pos + 1;
        if self.distinct + remaining <= self.best {
            return Step::Dead;
        }
        for x in 1..n {
            if used & (1 << x) != 0 {
                continue;
            }
            self.order[pos] = x;
            let s = self.t.add(self.order[pos - 1], x);
            self.push_sum(s);
            let r = self.dfs(pos + 1, used | (1 << x));
            self.pop_sum(s);
            if r != Step::Dead {
                return r;
            }
        }
        Step::Dead
    }
}

/// Hamiltonian cycle whose `|A|` consecutive sums are pairwise distinct,
/// starting at 0. Branches on the second element.
#[derive(Debug, Clone)]
pub struct RainbowCycleSearch {
    table: CayleyTable,
}

impl RainbowCycleSearch {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        if !(3..=64).contains(&spec.order()) {
            return Err(Error::Domain(format!(
                "rainbow cycle search needs 3 ≤ |A| ≤ 64, got {}",
                spec.order()
            )));
        }
        Ok(RainbowCycleSearch {
            table: CayleyTable::new(spec)?,
        })
    }

    pub fn run(&self, budget: Budget) -> SearchOutcome<HamiltonianCycle> {
        run_sequential(self, budget)
    }
}

impl BranchedSearch for RainbowCycleSearch {
    type Certificate = HamiltonianCycle;

    fn branch_count(&self) -> usize {
        self.table.order() - 1
    }

    fn run_branch(&self, branch: usize, budget: Budget) -> SearchOutcome<HamiltonianCycle> {
        let n = self.table.order();
        let mut run = RainbowRun {
            t: &self.table,
            order: vec![0; n],
            meter: NodeMeter::new(budget),
            dead: DeadStates::new(),
        };
        let second = branch + 1;
        run.order[1] = second;
        let step = if run.meter.tick() {
            run.dfs(2, 1 | (1 << second), 1 << self.table.add(0, second))
        } else {
            Step::OutOfBudget
        };
        let nodes = run.meter.nodes;
        outcome_from(step, nodes, || {
            let order = run.order.iter().map(|&x| self.table.element(x)).collect();
            HamiltonianCycle::new(self.table.spec().clone(), order)
                .expect("search emits permutations")
        })
    }
}

struct RainbowRun<'a> {
    t: &'a CayleyTable,
    order: Vec<usize>,
    meter: NodeMeter,
    dead: DeadStates<(u64, u64, u8)>,
}

impl RainbowRun<'_> {
    fn dfs(&mut self, pos: usize, used: u64, sums: u64) -> Step {
        let n = self.order.len();
        let last = self.order[pos - 1];
        if pos == n {
            let s = self.t.add(last, 0);
            return if sums & (1 << s) == 0 { Step::Solved } else { Step::Dead };
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        let key = (used, sums, last as u8);
        if self.dead.contains(&key) {
            return Step::Dead;
        }
        for x in 1..n {
            if used & (1 << x) != 0 {
                continue;
            }
            let s = self.t.add(last, x);
            if sums & (1 << s) != 0 {
                continue;
            }
            self.order[pos] = x;
            match self.dfs(pos + 1, used | (1 << x), sums | (1 << s)) {
                Step::Dead => {}
                other => return other,
            }
        }
        self.dead.insert(key);
        Step::Dead
    }
}

pub fn search_rainbow_cycle(spec: &GroupSpec, budget: Budget) -> Result<SearchOutcome<HamiltonianCycle>> {
    Ok(RainbowCycleSearch::new(spec)?.run(budget))
}

/// R*-sequencings of the nonidentity elements.
///
/// The sequence is rotated so it starts with the least nonidentity element
/// (every rotation of an R*-sequencing is one), and the search branches on
/// the second element.
#[derive(Debug, Clone)]
pub struct RStarSearch {
    table: CayleyTable,
}

impl RStarSearch {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        if spec.order() > 64 {
            return Err(Error::Domain(format!(
                "R*-sequence search needs |A| ≤ 64, got {}",
                spec.order()
            )));
        }
        Ok(RStarSearch {
            table: CayleyTable::new(spec)?,
        })
    }

    /// Fewer than three nonidentity elements: no R*-sequencing.
    fn degenerate(&self) -> bool {
        self.table.order() < 4
    }

    pub fn run(&self, budget: Budget) -> SearchOutcome<RStarSequence> {
        run_sequential(self, budget)
    }
}

impl BranchedSearch for RStarSearch {
    type Certificate = RStarSequence;

    fn branch_count(&self) -> usize {
        if self.degenerate() {
            1
        } else {
            self.table.order() - 2
        }
    }

    fn run_branch(&self, branch: usize, budget: Budget) -> SearchOutcome<RStarSequence> {
        if self.degenerate() {
            return SearchOutcome::not_exists(0);
        }
        let t = &self.table;
        let len = t.order() - 1;
        let mut run = RStarRun {
            t,
            seq: vec![0; len],
            meter: NodeMeter::new(budget),
            dead: DeadStates::new(),
        };
        let second = branch + 2;
        run.seq[0] = 1;
        run.seq[1] = second;
        let diff = t.sub(second, 1);
        let step = if run.meter.tick() {
            run.dfs(2, (1 << 1) | (1 << second), 1 << diff, false)
        } else {
            Step::OutOfBudget
        };
        let nodes = run.meter.nodes;
        outcome_from(step, nodes, || {
            let seq = run.seq.iter().map(|&x| t.element(x)).collect();
            RStarSequence::new(t.spec().clone(), seq).expect("search emits valid sequencings")
        })
    }
}

struct RStarRun<'a> {
    t: &'a CayleyTable,
    seq: Vec<usize>,
    meter: NodeMeter,
    dead: DeadStates<(u64, u64, u8, u8, u8, bool)>,
}

impl RStarRun<'_> {
    fn star_at(&self, prev: usize, mid: usize, next: usize) -> bool {
        self.t.add(prev, next) == mid
    }

    fn dfs(&mut self, pos: usize, used: u64, diffs: u64, star: bool) -> Step {
        let len = self.seq.len();
        let last = self.seq[pos - 1];
        if pos == len {
            let closing = self.t.sub(self.seq[0], last);
            if diffs & (1 << closing) != 0 {
                return Step::Dead;
            }
            let star = star
                || self.star_at(self.seq[len - 2], last, self.seq[0])
                || self.star_at(last, self.seq[0], self.seq[1]);
            return if star { Step::Solved } else { Step::Dead };
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        let prev = self.seq[pos - 2];
        let key = (used, diffs, prev as u8, last as u8, self.seq[1] as u8, star);
        if self.dead.contains(&key) {
            return Step::Dead;
        }
        for x in 1..self.t.order() {
            if used & (1 << x) != 0 {
                continue;
            }
            let d = self.t.sub(x, last);
            if diffs & (1 << d) != 0 {
                continue;
            }
            self.seq[pos] = x;
            let star = star || self.star_at(prev, last, x);
            match self.dfs(pos + 1, used | (1 << x), diffs | (1 << d), star) {
                Step::Dead => {}
                other => return other,
            }
        }
        self.dead.insert(key);
        Step::Dead
    }
}

pub fn search_rstar_sequence(spec: &GroupSpec, budget: Budget) -> Result<SearchOutcome<RStarSequence>> {
    Ok(RStarSearch::new(spec)?.run(budget))
}
