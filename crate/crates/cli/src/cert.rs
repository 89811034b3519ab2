//! JSON certificates: a labeled graph, the induced labels and the verdict,
//! or a verified ordering of a group's elements.

use grouplabel_core::constructions::RStarSequence;
use grouplabel_core::labeling::{
    induce_edge_labels, induce_vertex_labels, verify_a_antimagic, verify_a_cordial,
    verify_a_star_antimagic, verify_ea_cordial, ClassCounts,
};
use grouplabel_core::search::HamiltonianCycle;
use grouplabel_core::{
    EdgeLabeling, GraphKind, GroupElement, GroupSpec, SimpleGraph, Verdict, VertexLabeling,
};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{CliError, CliResult};

/// Which labeling notion a certificate claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    EaCordial,
    ACordial,
    AAntimagic,
    AStarAntimagic,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::EaCordial => "ea-cordial",
            Property::ACordial => "a-cordial",
            Property::AAntimagic => "a-antimagic",
            Property::AStarAntimagic => "a-star-antimagic",
        }
    }

    /// The primary labels sit on vertices only for A-cordiality.
    pub fn labels_vertices(self) -> bool {
        self == Property::ACordial
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GraphDoc {
    Path { n: usize },
    Cycle { n: usize },
    Tree { edges: Vec<[usize; 2]> },
    General { n: usize, edges: Vec<[usize; 2]> },
}

impl GraphDoc {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let edges = || g.edges().iter().map(|&(u, v)| [u, v]).collect();
        match g.kind() {
            GraphKind::Path => GraphDoc::Path { n: g.n() },
            GraphKind::Cycle => GraphDoc::Cycle { n: g.n() },
            GraphKind::Tree => GraphDoc::Tree { edges: edges() },
            GraphKind::General => GraphDoc::General {
                n: g.n(),
                edges: edges(),
            },
        }
    }

    pub fn to_graph(&self) -> CliResult<SimpleGraph> {
        let pairs = |e: &[[usize; 2]]| e.iter().map(|&[u, v]| (u, v)).collect::<Vec<_>>();
        Ok(match self {
            GraphDoc::Path { n } => SimpleGraph::path(*n)?,
            GraphDoc::Cycle { n } => SimpleGraph::cycle(*n)?,
            GraphDoc::Tree { edges } => SimpleGraph::tree(edges.len() + 1, pairs(edges))?,
            GraphDoc::General { n, edges } => SimpleGraph::general(*n, pairs(edges))?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub element: Vec<u64>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub ok: bool,
    pub edge_counts: Vec<ClassCount>,
    pub vertex_counts: Vec<ClassCount>,
    pub violation: Option<String>,
}

impl VerdictDoc {
    pub fn from_verdict(v: &Verdict) -> Self {
        let counts = |c: &ClassCounts| {
            c.iter()
                .map(|(e, &count)| ClassCount {
                    element: e.residues().to_vec(),
                    count,
                })
                .collect()
        };
        VerdictDoc {
            ok: v.is_ok(),
            edge_counts: counts(&v.edge_class_counts),
            vertex_counts: counts(&v.vertex_class_counts),
            violation: v.violation.map(|x| x.as_str().to_string()),
        }
    }
}

/// Accepts `[8, 3]` or `"Z8xZ3"`.
fn group_factors<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u64>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Input {
        Factors(Vec<u64>),
        Text(String),
    }
    match Input::deserialize(d)? {
        Input::Factors(f) => Ok(f),
        Input::Text(t) => t
            .parse::<GroupSpec>()
            .map(|g| g.factors().to_vec())
            .map_err(serde::de::Error::custom),
    }
}

/// A labeled graph. `edge_labels` and `vertex_labels` hold both the
/// primary labeling and the induced one; `property` says which is which.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: Property,
    #[serde(deserialize_with = "group_factors")]
    pub group: Vec<u64>,
    pub graph: GraphDoc,
    pub edge_labels: Vec<Vec<u64>>,
    pub vertex_labels: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
}

fn residues(ls: &[GroupElement]) -> Vec<Vec<u64>> {
    ls.iter().map(|a| a.residues().to_vec()).collect()
}

fn verify_edges(property: Property, graph: &SimpleGraph, f: &EdgeLabeling) -> Verdict {
    match property {
        Property::EaCordial => verify_ea_cordial(graph, f),
        Property::AAntimagic => verify_a_antimagic(graph, f),
        Property::AStarAntimagic => verify_a_star_antimagic(graph, f),
        Property::ACordial => unreachable!("vertex property"),
    }
}

impl Certificate {
    pub fn from_edge_labeling(property: Property, graph: &SimpleGraph, f: &EdgeLabeling) -> CliResult<Self> {
        if property.labels_vertices() {
            return Err(CliError::Usage(format!("{} labels vertices", property.as_str())));
        }
        let induced = induce_vertex_labels(graph, f)?;
        let verdict = verify_edges(property, graph, f);
        Ok(Certificate {
            property,
            group: f.group.factors().to_vec(),
            graph: GraphDoc::from_graph(graph),
            edge_labels: residues(&f.labels),
            vertex_labels: residues(&induced.labels),
            verdict: Some(VerdictDoc::from_verdict(&verdict)),
            route: None,
        })
    }

    pub fn from_vertex_labeling(graph: &SimpleGraph, c: &VertexLabeling) -> CliResult<Self> {
        let induced = induce_edge_labels(graph, c)?;
        let verdict = verify_a_cordial(graph, c);
        Ok(Certificate {
            property: Property::ACordial,
            group: c.group.factors().to_vec(),
            graph: GraphDoc::from_graph(graph),
            edge_labels: residues(&induced.labels),
            vertex_labels: residues(&c.labels),
            verdict: Some(VerdictDoc::from_verdict(&verdict)),
            route: None,
        })
    }

    pub fn with_route(mut self, route: impl Into<String>) -> Self {
        self.route = Some(route.into());
        self
    }

    pub fn group_spec(&self) -> CliResult<GroupSpec> {
        Ok(GroupSpec::new(self.group.clone())?)
    }

    fn elements(group: &GroupSpec, rows: &[Vec<u64>]) -> CliResult<Vec<GroupElement>> {
        Ok(rows
            .iter()
            .map(|r| group.element(r.clone()))
            .collect::<Result<_, _>>()?)
    }

    /// Recomputes the induced labels and the verdict from the primary
    /// labeling. A certificate is sound when its verdict is ok and the
    /// recorded induced labels and verdict (if any) match.
    pub fn recheck(&self) -> CliResult<Recheck> {
        let group = self.group_spec()?;
        let graph = self.graph.to_graph()?;
        let fresh = if self.property.labels_vertices() {
            let c = VertexLabeling::new(group.clone(), Self::elements(&group, &self.vertex_labels)?)?;
            Certificate::from_vertex_labeling(&graph, &c)
        } else {
            let f = EdgeLabeling::new(group.clone(), Self::elements(&group, &self.edge_labels)?)?;
            Certificate::from_edge_labeling(self.property, &graph, &f)
        };
        let fresh = match fresh {
            Ok(c) => c,
            Err(CliError::Core(grouplabel_core::Error::SizeMismatch(_))) => {
                return Ok(Recheck {
                    verdict: VerdictDoc {
                        ok: false,
                        edge_counts: vec![],
                        vertex_counts: vec![],
                        violation: Some("size-mismatch".into()),
                    },
                    consistent: false,
                })
            }
            Err(e) => return Err(e),
        };
        let verdict = fresh.verdict.clone().expect("fresh certificates carry a verdict");
        let consistent = fresh.edge_labels == self.edge_labels
            && fresh.vertex_labels == self.vertex_labels
            && self.verdict.as_ref().is_none_or(|v| *v == verdict);
        Ok(Recheck { verdict, consistent })
    }
}

/// Result of [`Certificate::recheck`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recheck {
    pub verdict: VerdictDoc,
    /// The recorded induced labels and verdict agree with the recomputed ones.
    pub consistent: bool,
}

impl Recheck {
    pub fn sound(&self) -> bool {
        self.verdict.ok && self.consistent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceKind {
    HamiltonianCycle,
    RStar,
}

/// An ordering of group elements: a Hamiltonian cycle on all of them, or
/// an R*-sequencing of the nonidentity ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceCertificate {
    pub kind: SequenceKind,
    #[serde(deserialize_with = "group_factors")]
    pub group: Vec<u64>,
    pub sequence: Vec<Vec<u64>>,
    /// Consecutive sums for a cycle, consecutive differences for an
    /// R*-sequencing.
    pub distinct_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_index: Option<usize>,
}

impl SequenceCertificate {
    pub fn from_cycle(hc: &HamiltonianCycle) -> Self {
        SequenceCertificate {
            kind: SequenceKind::HamiltonianCycle,
            group: hc.group.factors().to_vec(),
            sequence: residues(&hc.order),
            distinct_count: hc.distinct_sum_count,
            star_index: None,
        }
    }

    pub fn from_rstar(rs: &RStarSequence) -> Self {
        SequenceCertificate {
            kind: SequenceKind::RStar,
            group: rs.group.factors().to_vec(),
            sequence: residues(&rs.seq),
            distinct_count: rs.seq.len(),
            star_index: Some(rs.star_index),
        }
    }

    /// Rebuilds the ordering through its validating constructor.
    pub fn recheck(&self) -> CliResult<bool> {
        let group = GroupSpec::new(self.group.clone())?;
        let seq = Certificate::elements(&group, &self.sequence)?;
        Ok(match self.kind {
            SequenceKind::HamiltonianCycle => HamiltonianCycle::new(group, seq)
                .is_ok_and(|hc| hc.distinct_sum_count == self.distinct_count),
            SequenceKind::RStar => RStarSequence::new(group, seq)
                .is_ok_and(|rs| Some(rs.star_index) == self.star_index && rs.seq.len() == self.distinct_count),
        })
    }
}
