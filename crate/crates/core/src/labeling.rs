//! Graphs, induced labelings and verifiers for every labeling notion.
//!
//! An edge labeling `f: E → A` induces `f*(v) = Σ f(e)` over the edges `e`
//! incident to `v`; a vertex labeling `c: V → A` induces
//! `c*(uv) = c(u) + c(v)`. Isolated vertices receive `0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Path,
    Cycle,
    Tree,
    General,
}

impl GraphKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Path => "path",
            GraphKind::Cycle => "cycle",
            GraphKind::Tree => "tree",
            GraphKind::General => "general",
        }
    }

    /// Paths are trees too.
    pub fn is_tree_like(self) -> bool {
        matches!(self, GraphKind::Path | GraphKind::Tree)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    kind: GraphKind,
}

impl SimpleGraph {
    /// `P_n` with edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a path needs at least one vertex".into()));
        }
        Ok(SimpleGraph {
            n,
            edges: (0..n - 1).map(|i| (i, i + 1)).collect(),
            kind: GraphKind::Path,
        })
    }

    /// `C_n` with edges `{i, i+1}` and the closing edge `{n-1, 0}` last.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("cycle needs n ≥ 3, got {n}")));
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Ok(SimpleGraph {
            n,
            edges,
            kind: GraphKind::Cycle,
        })
    }

    /// A tree given by its edge list; checked for `n − 1` edges and
    /// connectivity.
    pub fn tree(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let g = Self::general(n, edges)?;
        if n == 0 || g.edges.len() != n - 1 || !g.is_connected() {
            return Err(Error::InvalidGraph(format!(
                "{} edges on {n} vertices do not form a tree",
                g.edges.len()
            )));
        }
        Ok(SimpleGraph {
            kind: GraphKind::Tree,
            ..g
        })
    }

    /// Star `K_{1, n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Self> {
        Self::tree(n, (1..n).map(|v| (0, v)).collect())
    }

    pub fn general(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = hashbrown::HashSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) leaves vertex range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(SimpleGraph {
            n,
            edges,
            kind: GraphKind::General,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// True when the graph has tree structure, whatever its declared kind.
    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// `f: E → A`, one label per edge index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    pub group: GroupSpec,
    pub labels: Vec<GroupElement>,
}

/// `c: V → A`, one label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    pub group: GroupSpec,
    pub labels: Vec<GroupElement>,
}

impl EdgeLabeling {
    pub fn new(group: GroupSpec, labels: Vec<GroupElement>) -> Result<Self> {
        for l in &labels {
            group.check(l)?;
        }
        Ok(EdgeLabeling { group, labels })
    }

    /// Labels over a cyclic group given as plain residues.
    pub fn cyclic(k: u64, labels: &[u64]) -> Result<Self> {
        let group = GroupSpec::new(vec![k])?;
        let labels = labels
            .iter()
            .map(|&x| group.element(vec![x]))
            .collect::<Result<_>>()?;
        Ok(EdgeLabeling { group, labels })
    }

    pub fn from_residues(group: GroupSpec, labels: &[&[u64]]) -> Result<Self> {
        let labels = labels
            .iter()
            .map(|r| group.element(r.to_vec()))
            .collect::<Result<_>>()?;
        Ok(EdgeLabeling { group, labels })
    }

    /// Pointwise sum of two labelings over the same group.
    pub fn pointwise_add(&self, other: &EdgeLabeling) -> Result<EdgeLabeling> {
        pointwise_add(&self.group, &self.labels, &other.group, &other.labels).map(|labels| {
            EdgeLabeling {
                group: self.group.clone(),
                labels,
            }
        })
    }
}

impl VertexLabeling {
    pub fn new(group: GroupSpec, labels: Vec<GroupElement>) -> Result<Self> {
        for l in &labels {
            group.check(l)?;
        }
        Ok(VertexLabeling { group, labels })
    }

    pub fn cyclic(k: u64, labels: &[u64]) -> Result<Self> {
        let e = EdgeLabeling::cyclic(k, labels)?;
        Ok(VertexLabeling {
            group: e.group,
            labels: e.labels,
        })
    }

    pub fn pointwise_add(&self, other: &VertexLabeling) -> Result<VertexLabeling> {
        pointwise_add(&self.group, &self.labels, &other.group, &other.labels).map(|labels| {
            VertexLabeling {
                group: self.group.clone(),
                labels,
            }
        })
    }
}

fn pointwise_add(
    g: &GroupSpec,
    a: &[GroupElement],
    h: &GroupSpec,
    b: &[GroupElement],
) -> Result<Vec<GroupElement>> {
    if g != h || a.len() != b.len() {
        return Err(Error::SizeMismatch("labelings differ in group or length".into()));
    }
    a.iter().zip(b).map(|(x, y)| g.add(x, y)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    SizeMismatch,
    ZeroEdgeForbidden,
    EdgeImbalance,
    VertexImbalance,
    EdgeCollision,
    VertexCollision,
}

impl Violation {
    pub fn as_str(self) -> &'static str {
        match self {
            Violation::SizeMismatch => "size-mismatch",
            Violation::ZeroEdgeForbidden => "zero-edge-forbidden",
            Violation::EdgeImbalance => "edge-imbalance",
            Violation::VertexImbalance => "vertex-imbalance",
            Violation::EdgeCollision => "edge-collision",
            Violation::VertexCollision => "vertex-collision",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub type ClassCounts = BTreeMap<GroupElement, usize>;

/// Outcome of a verifier. `is_ok()` holds exactly when no violation is
/// recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub edge_class_counts: ClassCounts,
    pub vertex_class_counts: ClassCounts,
    pub violation: Option<Violation>,
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    fn mismatch() -> Self {
        Verdict {
            edge_class_counts: ClassCounts::new(),
            vertex_class_counts: ClassCounts::new(),
            violation: Some(Violation::SizeMismatch),
        }
    }
}

fn check_labels(group: &GroupSpec, labels: &[GroupElement], expected: usize) -> Result<()> {
    if labels.len() != expected {
        return Err(Error::SizeMismatch(format!(
            "{} labels for {expected} slots",
            labels.len()
        )));
    }
    for l in labels {
        group
            .check(l)
            .map_err(|e| Error::SizeMismatch(format!("{e}")))?;
    }
    Ok(())
}

/// `f*(v)`: sum of the labels on edges incident to `v`.
pub fn induce_vertex_labels(graph: &SimpleGraph, f: &EdgeLabeling) -> Result<VertexLabeling> {
    check_labels(&f.group, &f.labels, graph.edge_count())?;
    let mut out = vec![f.group.zero(); graph.n()];
    for (&(u, v), l) in graph.edges().iter().zip(&f.labels) {
        f.group.add_assign_unchecked(&mut out[u], l);
        f.group.add_assign_unchecked(&mut out[v], l);
    }
    Ok(VertexLabeling {
        group: f.group.clone(),
        labels: out,
    })
}

/// `c*(uv) = c(u) + c(v)`.
pub fn induce_edge_labels(graph: &SimpleGraph, c: &VertexLabeling) -> Result<EdgeLabeling> {
    check_labels(&c.group, &c.labels, graph.n())?;
    let labels = graph
        .edges()
        .iter()
        .map(|&(u, v)| c.group.add_unchecked(&c.labels[u], &c.labels[v]))
        .collect();
    Ok(EdgeLabeling {
        group: c.group.clone(),
        labels,
    })
}

/// Class sizes over every element of `group`, zero classes included.
pub fn class_counts(group: &GroupSpec, labels: &[GroupElement]) -> Result<ClassCounts> {
    let mut counts: ClassCounts = group.enumerate()?.into_iter().map(|a| (a, 0)).collect();
    for l in labels {
        match counts.get_mut(l) {
            Some(c) => *c += 1,
            None => return Err(Error::InvalidElement(format!("{l} is not in {group}"))),
        }
    }
    Ok(counts)
}

/// `max − min ≤ 1`. An empty map is equitable.
pub fn is_equitable(counts: &ClassCounts) -> bool {
    let (lo, hi) = counts
        .values()
        .fold((usize::MAX, 0), |(lo, hi), &c| (lo.min(c), hi.max(c)));
    counts.is_empty() || hi - lo <= 1
}

fn is_injective(counts: &ClassCounts) -> bool {
    counts.values().all(|&c| c <= 1)
}

fn both_counts(
    group: &GroupSpec,
    edges: &[GroupElement],
    vertices: &[GroupElement],
) -> Option<(ClassCounts, ClassCounts)> {
    Some((class_counts(group, edges).ok()?, class_counts(group, vertices).ok()?))
}

/// Edge classes and induced vertex classes both equitable.
pub fn verify_ea_cordial(graph: &SimpleGraph, f: &EdgeLabeling) -> Verdict {
    let Ok(induced) = induce_vertex_labels(graph, f) else {
        return Verdict::mismatch();
    };
    let Some((edge_class_counts, vertex_class_counts)) =
        both_counts(&f.group, &f.labels, &induced.labels)
    else {
        return Verdict::mismatch();
    };
    let violation = if !is_equitable(&edge_class_counts) {
        Some(Violation::EdgeImbalance)
    } else if !is_equitable(&vertex_class_counts) {
        Some(Violation::VertexImbalance)
    } else {
        None
    };
    Verdict {
        edge_class_counts,
        vertex_class_counts,
        violation,
    }
}

/// Vertex classes and induced edge classes both equitable.
pub fn verify_a_cordial(graph: &SimpleGraph, c: &VertexLabeling) -> Verdict {
    let Ok(induced) = induce_edge_labels(graph, c) else {
        return Verdict::mismatch();
    };
    let Some((edge_class_counts, vertex_class_counts)) =
        both_counts(&c.group, &induced.labels, &c.labels)
    else {
        return Verdict::mismatch();
    };
    let violation = if !is_equitable(&edge_class_counts) {
        Some(Violation::EdgeImbalance)
    } else if !is_equitable(&vertex_class_counts) {
        Some(Violation::VertexImbalance)
    } else {
        None
    };
    Verdict {
        edge_class_counts,
        vertex_class_counts,
        violation,
    }
}

fn verify_tree_injective(tree: &SimpleGraph, f: &EdgeLabeling, forbid_zero: bool) -> Verdict {
    if !tree.is_tree() || tree.n() as u64 != f.group.order() {
        return Verdict::mismatch();
    }
    let Ok(induced) = induce_vertex_labels(tree, f) else {
        return Verdict::mismatch();
    };
    let Some((edge_class_counts, vertex_class_counts)) =
        both_counts(&f.group, &f.labels, &induced.labels)
    else {
        return Verdict::mismatch();
    };
    let violation = if forbid_zero && f.labels.iter().any(GroupElement::is_zero) {
        Some(Violation::ZeroEdgeForbidden)
    } else if !is_injective(&edge_class_counts) {
        Some(Violation::EdgeCollision)
    } else if !is_injective(&vertex_class_counts) {
        Some(Violation::VertexCollision)
    } else {
        None
    };
    Verdict {
        edge_class_counts,
        vertex_class_counts,
        violation,
    }
}

/// Tree of order `|A|`: distinct edge labels (0 allowed) and distinct
/// vertex sums.
pub fn verify_a_antimagic(tree: &SimpleGraph, f: &EdgeLabeling) -> Verdict {
    verify_tree_injective(tree, f, false)
}

/// Tree of order `|A|`: edges biject onto `A \ {0}` and vertex sums are
/// distinct.
pub fn verify_a_star_antimagic(tree: &SimpleGraph, f: &EdgeLabeling) -> Verdict {
    verify_tree_injective(tree, f, true)
}
