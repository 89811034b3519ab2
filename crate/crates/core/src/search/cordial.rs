//! Backtracking over edge labels (E_A-cordial, A-antimagic, A*-antimagic)
//! and over vertex labels (A-cordial).
//!
//! Items are assigned in index order with labels tried in enumeration
//! order, so the first solution found is the lexicographically least one.
//! Class counts are pruned against the exact equitable profile, and states
//! that failed once are remembered: whether a partial assignment extends
//! depends only on the position, the partial sums still open and the two
//! count vectors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    outcome_from, run_sequential, BranchedSearch, Budget, ClassBound, ClassTally, DeadStates,
    NodeMeter, SearchOutcome, Step,
};
use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupSpec};
use crate::labeling::{EdgeLabeling, GraphKind, SimpleGraph, VertexLabeling};

/// Search for an edge labeling whose edge classes and induced vertex
/// classes are both equitable.
#[derive(Debug, Clone)]
pub struct EdgeLabelSearch {
    graph: SimpleGraph,
    table: CayleyTable,
    domain: Vec<usize>,
    first_label: Option<usize>,
    edge_bound: ClassBound,
    vertex_bound: ClassBound,
    /// Vertices whose last incident edge is at this position.
    completes: Vec<Vec<usize>>,
    /// Vertices with incident edges on both sides of this position.
    frontier: Vec<Vec<usize>>,
    isolated: Vec<usize>,
}

impl EdgeLabelSearch {
    /// E_A-cordial labelings of `graph` over `spec`.
    ///
    /// On a cycle with at least `|A|` edges some edge carries 0, and a
    /// rotation moves it to edge 0; the search fixes that label, which
    /// keeps the lexicographically first solution.
    pub fn ea_cordial(graph: &SimpleGraph, spec: &GroupSpec) -> Result<Self> {
        let table = CayleyTable::new(spec)?;
        let k = table.order();
        let e = graph.edge_count();
        let first_label = (graph.kind() == GraphKind::Cycle && e >= k).then_some(0);
        Ok(Self::build(graph, table, (0..k).collect(), first_label))
    }

    /// A-antimagic labelings: injective edge labels, distinct vertex sums.
    /// For a tree of order `|A|` this is exactly E_A-cordiality.
    pub fn a_antimagic(tree: &SimpleGraph, spec: &GroupSpec) -> Result<Self> {
        check_tree_order(tree, spec)?;
        Self::ea_cordial(tree, spec)
    }

    /// A*-antimagic labelings: edges biject onto the nonzero elements.
    pub fn a_star_antimagic(tree: &SimpleGraph, spec: &GroupSpec) -> Result<Self> {
        check_tree_order(tree, spec)?;
        let table = CayleyTable::new(spec)?;
        let domain = (1..table.order()).collect();
        Ok(Self::build(tree, table, domain, None))
    }

    /// Forces the label of edge 0 (an element index in enumeration order).
    pub fn with_first_label(mut self, label: usize) -> Self {
        self.first_label = Some(label);
        self
    }

    fn build(
        graph: &SimpleGraph,
        table: CayleyTable,
        domain: Vec<usize>,
        first_label: Option<usize>,
    ) -> Self {
        let n = graph.n();
        let e = graph.edge_count();
        let k = table.order();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0usize; n];
        for (i, &(u, v)) in graph.edges().iter().enumerate() {
            for w in [u, v] {
                first[w] = first[w].min(i);
                last[w] = last[w].max(i);
            }
        }
        let mut completes = vec![Vec::new(); e];
        let mut isolated = Vec::new();
        for w in 0..n {
            if first[w] == usize::MAX {
                isolated.push(w);
            } else {
                completes[last[w]].push(w);
            }
        }
        let frontier = (0..=e)
            .map(|pos| {
                (0..n)
                    .filter(|&w| first[w] != usize::MAX && first[w] < pos && pos <= last[w])
                    .collect()
            })
            .collect();
        EdgeLabelSearch {
            graph: graph.clone(),
            edge_bound: ClassBound::new(e, k),
            vertex_bound: ClassBound::new(n, k),
            table,
            domain,
            first_label,
            completes,
            frontier,
            isolated,
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn run(&self, budget: Budget) -> SearchOutcome<EdgeLabeling> {
        run_sequential(self, budget)
    }

    fn branch_labels(&self) -> Vec<usize> {
        match self.first_label {
            Some(x) => vec![x],
            None => self.domain.clone(),
        }
    }
}

fn check_tree_order(tree: &SimpleGraph, spec: &GroupSpec) -> Result<()> {
    if !tree.is_tree() {
        return Err(Error::InvalidGraph("antimagic searches need a tree".into()));
    }
    if tree.n() as u64 != spec.order() {
        return Err(Error::SizeMismatch(format!(
            "tree has {} vertices, group {spec} has order {}",
            tree.n(),
            spec.order()
        )));
    }
    Ok(())
}

impl BranchedSearch for EdgeLabelSearch {
    type Certificate = EdgeLabeling;

    fn branch_count(&self) -> usize {
        if self.graph.edge_count() == 0 {
            1
        } else {
            self.branch_labels().len()
        }
    }

    fn run_branch(&self, branch: usize, budget: Budget) -> SearchOutcome<EdgeLabeling> {
        let mut run = EdgeRun::new(self, budget);
        let step = if !run.start_ok {
            Step::Dead
        } else if self.graph.edge_count() == 0 {
            if run.vertices.can_finish(0) {
                Step::Solved
            } else {
                Step::Dead
            }
        } else {
            let only = self.branch_labels()[branch];
            run.dfs(0, Some(only))
        };
        let nodes = run.meter.nodes;
        outcome_from(step, nodes, || EdgeLabeling {
            group: self.table.spec().clone(),
            labels: run.labels.iter().map(|&x| self.table.element(x)).collect(),
        })
    }
}

struct EdgeRun<'a> {
    s: &'a EdgeLabelSearch,
    labels: Vec<usize>,
    partial: Vec<usize>,
    edges: ClassTally,
    vertices: ClassTally,
    completed: usize,
    start_ok: bool,
    meter: NodeMeter,
    dead: DeadStates<Vec<u16>>,
}

impl<'a> EdgeRun<'a> {
    fn new(s: &'a EdgeLabelSearch, budget: Budget) -> Self {
        let k = s.table.order();
        let mut vertices = ClassTally::new(k, s.vertex_bound);
        let mut start_ok = true;
        for _ in &s.isolated {
            start_ok &= vertices.add(0);
        }
        EdgeRun {
            s,
            labels: vec![0; s.graph.edge_count()],
            partial: vec![0; s.graph.n()],
            edges: ClassTally::new(k, s.edge_bound),
            vertices,
            completed: s.isolated.len(),
            start_ok,
            meter: NodeMeter::new(budget),
            dead: DeadStates::new(),
        }
    }

    fn key(&self, pos: usize) -> Vec<u16> {
        let mut key = Vec::with_capacity(1 + self.s.frontier[pos].len() + 2 * self.edges.counts.len());
        key.push(pos as u16);
        key.extend(self.s.frontier[pos].iter().map(|&w| self.partial[w] as u16));
        key.extend_from_slice(&self.edges.counts);
        key.extend_from_slice(&self.vertices.counts);
        key
    }

    fn dfs(&mut self, pos: usize, only: Option<usize>) -> Step {
        let e = self.labels.len();
        if pos == e {
            return Step::Solved;
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        let key = (only.is_none()).then(|| self.key(pos));
        if let Some(k) = &key {
            if self.dead.contains(k) {
                return Step::Dead;
            }
        }
        let (u, v) = self.s.graph.edges()[pos];
        let t = &self.s.table;
        let n = self.partial.len();
        let candidates: &[usize] = match &only {
            Some(x) => core::slice::from_ref(x),
            None => &self.s.domain,
        };
        for &x in candidates {
            self.labels[pos] = x;
            let mut ok = self.edges.add(x);
            self.partial[u] = t.add(self.partial[u], x);
            self.partial[v] = t.add(self.partial[v], x);
            for &w in &self.s.completes[pos] {
                ok &= self.vertices.add(self.partial[w]);
            }
            self.completed += self.s.completes[pos].len();
            ok = ok
                && self.edges.can_finish(e - pos - 1)
                && self.vertices.can_finish(n - self.completed);
            if ok {
                match self.dfs(pos + 1, None) {
                    Step::Dead => {}
                    other => return other,
                }
            }
            self.completed -= self.s.completes[pos].len();
            for &w in &self.s.completes[pos] {
                self.vertices.remove(self.partial[w]);
            }
            self.partial[u] = t.sub(self.partial[u], x);
            self.partial[v] = t.sub(self.partial[v], x);
            self.edges.remove(x);
        }
        if let Some(k) = key {
            self.dead.insert(k);
        }
        Step::Dead
    }
}

/// Search for a vertex labeling whose vertex classes and induced edge
/// classes are both equitable (A-cordial).
#[derive(Debug, Clone)]
pub struct VertexLabelSearch {
    graph: SimpleGraph,
    table: CayleyTable,
    first_label: Option<usize>,
    edge_bound: ClassBound,
    vertex_bound: ClassBound,
    /// Edges settled when this vertex is assigned: `(other endpoint)`.
    settles: Vec<Vec<usize>>,
    frontier: Vec<Vec<usize>>,
}

impl VertexLabelSearch {
    /// A-cordial labelings. On a cycle with `n ≥ |A|` vertex 0 is fixed to
    /// 0 (rotation symmetry, keeps the lexicographically first solution).
    pub fn a_cordial(graph: &SimpleGraph, spec: &GroupSpec) -> Result<Self> {
        let table = CayleyTable::new(spec)?;
        let k = table.order();
        let n = graph.n();
        let mut settles = vec![Vec::new(); n];
        let mut last_neighbor = vec![0usize; n];
        for &(u, v) in graph.edges() {
            let (lo, hi) = (u.min(v), u.max(v));
            settles[hi].push(lo);
            last_neighbor[lo] = last_neighbor[lo].max(hi);
        }
        let frontier = (0..=n)
            .map(|pos| (0..pos).filter(|&w| last_neighbor[w] >= pos).collect())
            .collect();
        Ok(VertexLabelSearch {
            first_label: (graph.kind() == GraphKind::Cycle && n >= k).then_some(0),
            edge_bound: ClassBound::new(graph.edge_count(), k),
            vertex_bound: ClassBound::new(n, k),
            graph: graph.clone(),
            table,
            settles,
            frontier,
        })
    }

    pub fn run(&self, budget: Budget) -> SearchOutcome<VertexLabeling> {
        run_sequential(self, budget)
    }
}

impl BranchedSearch for VertexLabelSearch {
    type Certificate = VertexLabeling;

    fn branch_count(&self) -> usize {
        if self.graph.n() == 0 || self.first_label.is_some() {
            1
        } else {
            self.table.order()
        }
    }

    fn run_branch(&self, branch: usize, budget: Budget) -> SearchOutcome<VertexLabeling> {
        let k = self.table.order();
        let mut run = VertexRun {
            s: self,
            labels: vec![0; self.graph.n()],
            vertices: ClassTally::new(k, self.vertex_bound),
            edges: ClassTally::new(k, self.edge_bound),
            settled: 0,
            meter: NodeMeter::new(budget),
            dead: DeadStates::new(),
        };
        let step = if self.graph.n() == 0 {
            Step::Solved
        } else {
            run.dfs(0, Some(self.first_label.unwrap_or(branch)))
        };
        let nodes = run.meter.nodes;
        outcome_from(step, nodes, || VertexLabeling {
            group: self.table.spec().clone(),
            labels: run.labels.iter().map(|&x| self.table.element(x)).collect(),
        })
    }
}

struct VertexRun<'a> {
    s: &'a VertexLabelSearch,
    labels: Vec<usize>,
    vertices: ClassTally,
    edges: ClassTally,
    settled: usize,
    meter: NodeMeter,
    dead: DeadStates<Vec<u16>>,
}

impl VertexRun<'_> {
    fn key(&self, pos: usize) -> Vec<u16> {
        let mut key = Vec::with_capacity(1 + self.s.frontier[pos].len() + 2 * self.edges.counts.len());
        key.push(pos as u16);
        key.extend(self.s.frontier[pos].iter().map(|&w| self.labels[w] as u16));
        key.extend_from_slice(&self.vertices.counts);
        key.extend_from_slice(&self.edges.counts);
        key
    }

    fn dfs(&mut self, pos: usize, only: Option<usize>) -> Step {
        let n = self.labels.len();
        if pos == n {
            return Step::Solved;
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        let key = only.is_none().then(|| self.key(pos));
        if let Some(k) = &key {
            if self.dead.contains(k) {
                return Step::Dead;
            }
        }
        let t = &self.s.table;
        let total_edges = self.s.graph.edge_count();
        let range = match only {
            Some(x) => x..x + 1,
            None => 0..t.order(),
        };
        for x in range {
            self.labels[pos] = x;
            let mut ok = self.vertices.add(x);
            for &u in &self.s.settles[pos] {
                ok &= self.edges.add(t.add(self.labels[u], x));
            }
            self.settled += self.s.settles[pos].len();
            ok = ok
                && self.vertices.can_finish(n - pos - 1)
                && self.edges.can_finish(total_edges - self.settled);
            if ok {
                match self.dfs(pos + 1, None) {
                    Step::Dead => {}
                    other => return other,
                }
            }
            self.settled -= self.s.settles[pos].len();
            for &u in &self.s.settles[pos] {
                self.edges.remove(t.add(self.labels[u], x));
            }
            self.vertices.remove(x);
        }
        if let Some(k) = key {
            self.dead.insert(k);
        }
        Step::Dead
    }
}

pub fn search_ea_cordial(
    graph: &SimpleGraph,
    spec: &GroupSpec,
    budget: Budget,
) -> Result<SearchOutcome<EdgeLabeling>> {
    Ok(EdgeLabelSearch::ea_cordial(graph, spec)?.run(budget))
}

pub fn search_a_cordial(
    graph: &SimpleGraph,
    spec: &GroupSpec,
    budget: Budget,
) -> Result<SearchOutcome<VertexLabeling>> {
    Ok(VertexLabelSearch::a_cordial(graph, spec)?.run(budget))
}

pub fn search_a_antimagic(
    tree: &SimpleGraph,
    spec: &GroupSpec,
    budget: Budget,
) -> Result<SearchOutcome<EdgeLabeling>> {
    Ok(EdgeLabelSearch::a_antimagic(tree, spec)?.run(budget))
}

pub fn search_a_star_antimagic(
    tree: &SimpleGraph,
    spec: &GroupSpec,
    budget: Budget,
) -> Result<SearchOutcome<EdgeLabeling>> {
    Ok(EdgeLabelSearch::a_star_antimagic(tree, spec)?.run(budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{
        verify_a_antimagic, verify_a_cordial, verify_a_star_antimagic, verify_ea_cordial,
    };
    use crate::search::SearchStatus;

    fn z(k: u64) -> GroupSpec {
        GroupSpec::cyclic(k)
    }

    #[test]
    fn path_six_over_z6_does_not_exist() {
        let p6 = SimpleGraph::path(6).unwrap();
        let out = search_ea_cordial(&p6, &z(6), Budget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::NotExists);
    }

    #[test]
    fn path_eight_over_elementary_group_is_found() {
        let p8 = SimpleGraph::path(8).unwrap();
        let g = GroupSpec::elementary_two(3);
        let out = search_ea_cordial(&p8, &g, Budget::default()).unwrap();
        let cert = out.certificate.unwrap();
        assert!(verify_ea_cordial(&p8, &cert).is_ok());
        assert!(verify_a_antimagic(&p8, &cert).is_ok());
    }

    #[test]
    fn cycles_over_z4() {
        // 12 is an odd multiple of 4
        let c12 = SimpleGraph::cycle(12).unwrap();
        assert_eq!(search_ea_cordial(&c12, &z(4), Budget::default()).unwrap().status, SearchStatus::NotExists);
        assert_eq!(search_a_cordial(&c12, &z(4), Budget::default()).unwrap().status, SearchStatus::NotExists);
        let c8 = SimpleGraph::cycle(8).unwrap();
        let out = search_ea_cordial(&c8, &z(4), Budget::default()).unwrap();
        assert!(verify_ea_cordial(&c8, out.certificate.as_ref().unwrap()).is_ok());
        let out = search_a_cordial(&c8, &z(4), Budget::default()).unwrap();
        assert!(verify_a_cordial(&c8, out.certificate.as_ref().unwrap()).is_ok());
    }

    #[test]
    fn a_cordial_cycle_examples() {
        let c12 = SimpleGraph::cycle(12).unwrap();
        let out = search_a_cordial(&c12, &z(12), Budget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::NotExists);
        for (n, k) in [(9, 3), (5, 5)] {
            let c = SimpleGraph::cycle(n).unwrap();
            let out = search_a_cordial(&c, &z(k), Budget::default()).unwrap();
            assert!(verify_a_cordial(&c, out.certificate.as_ref().unwrap()).is_ok());
        }
    }

    #[test]
    fn star_antimagic_examples() {
        let k4 = GroupSpec::elementary_two(2);
        let p4 = SimpleGraph::path(4).unwrap();
        let out = search_a_star_antimagic(&p4, &k4, Budget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::NotExists);
        let star = SimpleGraph::star(4).unwrap();
        let out = search_a_star_antimagic(&star, &k4, Budget::default()).unwrap();
        let cert = out.certificate.unwrap();
        assert!(verify_a_star_antimagic(&star, &cert).is_ok());
        let err = search_a_star_antimagic(&SimpleGraph::path(5).unwrap(), &k4, Budget::default());
        assert!(matches!(err, Err(Error::SizeMismatch(_))));
    }

    #[test]
    fn first_solution_is_lexicographically_least() {
        let p3 = SimpleGraph::path(3).unwrap();
        let out = search_ea_cordial(&p3, &z(3), Budget::default()).unwrap();
        let labels: Vec<u64> = out
            .certificate
            .unwrap()
            .labels
            .iter()
            .map(|e| e.residues()[0])
            .collect();
        // (0,1) gives vertex sums 0,1,1; (1,2) gives 1,0,2
        assert_eq!(labels, [1, 2]);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let p18 = SimpleGraph::path(18).unwrap();
        let out = search_ea_cordial(&p18, &z(6), Budget::nodes(50)).unwrap();
        assert_eq!(out.status, SearchStatus::Unknown);
        assert!(out.certificate.is_none());
    }

    #[test]
    fn forced_first_label_is_respected() {
        let c3 = SimpleGraph::cycle(3).unwrap();
        let s = EdgeLabelSearch::ea_cordial(&c3, &z(3)).unwrap().with_first_label(0);
        let cert = s.run(Budget::default()).certificate.unwrap();
        let r: Vec<u64> = cert.labels.iter().map(|e| e.residues()[0]).collect();
        assert_eq!(r, [0, 1, 2]);
    }

    #[test]
    fn single_vertex_graph() {
        let p1 = SimpleGraph::path(1).unwrap();
        assert!(search_ea_cordial(&p1, &z(3), Budget::default()).unwrap().is_found());
        let p2 = SimpleGraph::path(2).unwrap();
        assert_eq!(
            search_ea_cordial(&p2, &z(3), Budget::default()).unwrap().status,
            SearchStatus::NotExists
        );
    }
}
