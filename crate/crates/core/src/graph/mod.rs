//! Trivalent multigraphs.
//!
//! A [`TrivalentGraph`] is stored as a half-edge structure so that loops and
//! parallel edges are ordinary citizens: a loop contributes two half-edges at
//! its vertex, and two parallel edges are simply two edges with the same pair
//! of ends. Vertices have valency 1 (leaves) or 3 (inner vertices).
//!
//! Vertex and edge identifiers are textual and stable: surgery and mutation
//! keep the identifiers of untouched objects and mint fresh ones for anything
//! new. Internally edges are kept sorted by identifier, so edge indices give the
//! canonical edge-id order used by every enumeration in this crate.

mod isomorphism;
mod mutation;
mod network;
mod parse;
mod random;
mod surgery;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub use isomorphism::{find_isomorphism, is_isomorphic, Isomorphism, DEFAULT_ISOMORPHISM_BOUND};
pub use mutation::{
    caterpillar_normal_form, caterpillar_with_loops, inverse_step, mutate, normalize_components,
    replay, MutationStep, NormalForm, Variant,
};
pub use network::{enumerate_networks, Network, NetworkPiece};
pub use parse::parse_graph;
pub use random::random_trivalent_graph;
pub use surgery::{cut_edge, disjoint_union, glue_leaves, graft, Cut, Glue, Graft};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(String);

macro_rules! impl_id {
    ($name:ident) => {
        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                $name(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }
    };
}

impl_id!(VertexId);
impl_id!(EdgeId);

/// One end of an edge: `side` indexes into [`Edge::ends`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: usize,
    pub side: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    /// Vertex indices of the two ends; equal for a loop.
    pub ends: [usize; 2],
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0] == self.ends[1]
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex {vertex} has valency {valency}; only 1 (leaf) and 3 are allowed")]
    Valency { vertex: VertexId, valency: usize },
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("edge {0} joins two leaves; a component needs an inner vertex")]
    BareEdge(EdgeId),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(VertexId),
    #[error("cannot glue leaf {0} to itself")]
    SameLeaf(VertexId),
    #[error("leaves {0} and {1} are the two ends of one edge; gluing them leaves no vertex")]
    GlueClosesEdge(VertexId, VertexId),
    #[error("edge {0} is a petiole")]
    Petiole(EdgeId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("edge {0} is a cycle edge")]
    CycleEdge(EdgeId),
    #[error("graph has {0} connected components; a connected graph is required")]
    Disconnected(usize),
    #[error("graph has {vertices} vertices, above the bound of {bound}")]
    TooLarge { vertices: usize, bound: usize },
}

/// The counts tied together by `2|E| = 3|V| - 2n` and `|V| - |E| = comp - g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphInvariants {
    pub num_vertices: usize,
    pub num_edges: usize,
    pub num_leaves: usize,
    pub betti: usize,
    pub num_components: usize,
    /// Dimension of the associated model, equal to the number of edges.
    pub dim_model: usize,
}

impl fmt::Display for GraphInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} n={} g={} comp={} dim={}",
            self.num_vertices,
            self.num_edges,
            self.num_leaves,
            self.betti,
            self.num_components,
            self.dim_model
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    CycleEdge,
    CycleLeg,
    Plain,
}

/// Classification of one edge. A petiole can also be a cycle leg (the stem of
/// a balloon), so the two are recorded independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeClass {
    pub petiole: bool,
    pub role: EdgeRole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivalentGraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<HalfEdge>>,
    /// Edge indices around each inner vertex, loops listed twice.
    triples: Vec<(usize, [usize; 3])>,
}

impl TrivalentGraph {
    pub fn empty() -> Self {
        TrivalentGraph {
            vertices: Vec::new(),
            edges: Vec::new(),
            incidence: Vec::new(),
            triples: Vec::new(),
        }
    }

    /// Builds a graph from `(edge, end, end)` triples and checks trivalence.
    ///
    /// Unlike [`parse_graph`] this accepts components consisting of a single
    /// edge between two leaves; those are the base pieces of grafting.
    pub fn from_edges<I, E, V>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (E, V, V)>,
        E: Into<EdgeId>,
        V: Into<VertexId>,
    {
        let mut raw: Vec<(EdgeId, VertexId, VertexId)> = edges
            .into_iter()
            .map(|(e, a, b)| (e.into(), a.into(), b.into()))
            .collect();
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        for pair in raw.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(GraphError::DuplicateEdge(pair[0].0.clone()));
            }
        }
        let vertex_set: BTreeSet<&VertexId> = raw.iter().flat_map(|(_, a, b)| [a, b]).collect();
        let vertices: Vec<VertexId> = vertex_set.into_iter().cloned().collect();
        let index_of = |v: &VertexId| vertices.binary_search(v).expect("collected above");
        let edges: Vec<Edge> = raw
            .iter()
            .map(|(id, a, b)| Edge {
                id: id.clone(),
                ends: [index_of(a), index_of(b)],
            })
            .collect();
        Self::assemble(vertices, edges)
    }

    fn assemble(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            for side in 0..2 {
                incidence[e.ends[side]].push(HalfEdge { edge: i, side });
            }
        }
        for (v, halves) in incidence.iter().enumerate() {
            if halves.len() != 1 && halves.len() != 3 {
                return Err(GraphError::Valency {
                    vertex: vertices[v].clone(),
                    valency: halves.len(),
                });
            }
        }
        let triples = incidence
            .iter()
            .enumerate()
            .filter(|(_, h)| h.len() == 3)
            .map(|(v, h)| (v, [h[0].edge, h[1].edge, h[2].edge]))
            .collect();
        Ok(TrivalentGraph {
            vertices,
            edges,
            incidence,
            triples,
        })
    }

    pub(crate) fn edge_triples(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        self.edges
            .iter()
            .map(|e| {
                (
                    e.id.clone(),
                    self.vertices[e.ends[0]].clone(),
                    self.vertices[e.ends[1]].clone(),
                )
            })
            .collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_id(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_id(&self, e: usize) -> &EdgeId {
        &self.edges[e].id
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &EdgeId> {
        self.edges.iter().map(|e| &e.id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.binary_search_by(|e| e.id.as_str().cmp(id)).ok()
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    pub(crate) fn require_edge(&self, id: &str) -> Result<usize, GraphError> {
        self.edge_index(id)
            .ok_or_else(|| GraphError::UnknownEdge(id.to_owned()))
    }

    pub(crate) fn require_vertex(&self, id: &str) -> Result<usize, GraphError> {
        self.vertex_index(id)
            .ok_or_else(|| GraphError::UnknownVertex(id.to_owned()))
    }

    /// Half-edges at `v`, ordered by (edge id, side).
    pub fn incidence(&self, v: usize) -> &[HalfEdge] {
        &self.incidence[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.incidence[v].len() == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.is_leaf(v))
    }

    pub fn inner_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.triples.iter().map(|&(v, _)| v)
    }

    /// For each inner vertex, the edges of its three half-edges. A loop
    /// appears twice.
    pub fn inner_triples(&self) -> &[(usize, [usize; 3])] {
        &self.triples
    }

    pub fn is_petiole(&self, e: usize) -> bool {
        let [a, b] = self.edges[e].ends;
        self.is_leaf(a) || self.is_leaf(b)
    }

    /// Edges whose both ends are leaves.
    pub fn bare_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| {
            let [a, b] = self.edges[e].ends;
            self.is_leaf(a) && self.is_leaf(b)
        })
    }

    /// The edge incident to a leaf.
    pub fn petiole_of(&self, leaf: usize) -> Option<usize> {
        if self.is_leaf(leaf) {
            Some(self.incidence[leaf][0].edge)
        } else {
            None
        }
    }

    pub fn other_end(&self, h: HalfEdge) -> usize {
        self.edges[h.edge].ends[1 - h.side]
    }

    /// Component label of every vertex and the number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        self.component_labels_without(None)
    }

    fn component_labels_without(&self, skip: Option<usize>) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.vertices.len() {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for h in &self.incidence[v] {
                    if Some(h.edge) == skip {
                        continue;
                    }
                    let w = self.other_end(*h);
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn num_components(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// First Betti number `|E| - |V| + comp`.
    pub fn betti(&self) -> usize {
        self.edges.len() + self.num_components() - self.vertices.len()
    }

    pub fn invariants(&self) -> GraphInvariants {
        let num_components = self.num_components();
        GraphInvariants {
            num_vertices: self.vertices.len(),
            num_edges: self.edges.len(),
            num_leaves: self.leaves().count(),
            betti: self.edges.len() + num_components - self.vertices.len(),
            num_components,
            dim_model: self.edges.len(),
        }
    }

    /// True iff `e` is not a petiole and deleting it keeps its component
    /// connected.
    pub fn is_cycle_edge(&self, e: usize) -> bool {
        if self.is_petiole(e) {
            return false;
        }
        let [a, b] = self.edges[e].ends;
        if a == b {
            return true;
        }
        let (label, _) = self.component_labels_without(Some(e));
        label[a] == label[b]
    }

    pub fn cycle_edges(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| self.is_cycle_edge(e))
            .collect()
    }

    pub fn classify_edges(&self) -> Vec<EdgeClass> {
        let cycle: Vec<bool> = (0..self.edges.len())
            .map(|e| self.is_cycle_edge(e))
            .collect();
        let mut cycle_vertex = vec![false; self.vertices.len()];
        for (e, &c) in cycle.iter().enumerate() {
            if c {
                for v in self.edges[e].ends {
                    cycle_vertex[v] = true;
                }
            }
        }
        (0..self.edges.len())
            .map(|e| {
                let role = if cycle[e] {
                    EdgeRole::CycleEdge
                } else if self.edges[e].ends.iter().any(|&v| cycle_vertex[v]) {
                    EdgeRole::CycleLeg
                } else {
                    EdgeRole::Plain
                };
                EdgeClass {
                    petiole: self.is_petiole(e),
                    role,
                }
            })
            .collect()
    }

    /// The subgraph made of the given edges. Fails if a vertex ends up with
    /// valency 2.
    pub fn edge_subgraph(
        &self,
        edges: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let mut picked: Vec<usize> = edges.into_iter().collect();
        picked.sort_unstable();
        picked.dedup();
        Self::from_edges(picked.into_iter().map(|e| {
            let edge = &self.edges[e];
            (
                edge.id.clone(),
                self.vertices[edge.ends[0]].clone(),
                self.vertices[edge.ends[1]].clone(),
            )
        }))
    }

    /// Connected components as standalone graphs, in order of their smallest
    /// vertex id.
    pub fn components(&self) -> Vec<TrivalentGraph> {
        let (label, count) = self.component_labels();
        (0..count)
            .map(|c| {
                let edges = (0..self.edges.len()).filter(|&e| label[self.edges[e].ends[0]] == c);
                self.edge_subgraph(edges).expect("a component is trivalent")
            })
            .collect()
    }

    /// Canonical text form: one `edge` line per edge, sorted by id.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.id, self.vertices[e.ends[0]], self.vertices[e.ends[1]]
            ));
        }
        out
    }

    /// A single edge joining two leaves.
    pub fn bare_edge(edge: &str, a: &str, b: &str) -> Self {
        Self::from_edges([(edge, a, b)]).expect("a bare edge is valid")
    }
}

impl fmt::Display for TrivalentGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub(crate) fn fresh_id(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_owned();
    }
    (2..)
        .map(|i| format!("{base}~{i}"))
        .find(|c| !taken(c))
        .expect("unbounded search")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn littleman_invariants() {
        let g = fixtures::littleman();
        let inv = g.invariants();
        assert_eq!(
            (
                inv.num_vertices,
                inv.num_edges,
                inv.num_leaves,
                inv.betti,
                inv.num_components,
                inv.dim_model
            ),
            (4, 4, 2, 1, 1, 4)
        );
        assert_eq!(2 * inv.num_edges, 3 * inv.num_vertices - 2 * inv.num_leaves);
        assert_eq!(inv.to_string(), "V=4 E=4 n=2 g=1 comp=1 dim=4");
    }

    #[test]
    fn dumbbell_invariants() {
        let inv = fixtures::dumbbell().invariants();
        assert_eq!(
            (
                inv.num_vertices,
                inv.num_edges,
                inv.num_leaves,
                inv.betti,
                inv.num_components
            ),
            (2, 3, 0, 2, 1)
        );
    }

    #[test]
    fn disjoint_tripods_add_up() {
        let t = fixtures::tripod();
        let inv = disjoint_union(&t, &t).invariants();
        assert_eq!(inv.num_components, 2);
        assert_eq!(inv.num_leaves, 6);
        assert_eq!(inv.betti, 0);
        assert_eq!(inv.num_edges, 6);
    }

    #[test]
    fn valency_two_is_rejected() {
        let err = TrivalentGraph::from_edges([("a", "x", "y"), ("b", "y", "z")]).unwrap_err();
        assert!(matches!(err, GraphError::Valency { valency: 2, .. }));
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let err = TrivalentGraph::from_edges([("a", "x", "x"), ("a", "x", "y")]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge("a".into()));
    }

    #[test]
    fn littleman_classes() {
        let g = fixtures::littleman();
        let classes = g.classify_edges();
        let class = |id: &str| classes[g.edge_index(id).unwrap()];
        assert_eq!(class("loop").role, EdgeRole::CycleEdge);
        assert!(!class("loop").petiole);
        assert_eq!(class("bar").role, EdgeRole::CycleLeg);
        assert!(class("p3").petiole && class("p4").petiole);
        assert_eq!(class("p3").role, EdgeRole::Plain);
    }

    #[test]
    fn hammock_petioles_are_cycle_legs() {
        let g = fixtures::hammock();
        let classes = g.classify_edges();
        let class = |id: &str| classes[g.edge_index(id).unwrap()];
        assert_eq!(class("c1").role, EdgeRole::CycleEdge);
        assert_eq!(class("c2").role, EdgeRole::CycleEdge);
        for p in ["p2", "p4"] {
            assert!(class(p).petiole);
            assert_eq!(class(p).role, EdgeRole::CycleLeg);
        }
    }

    #[test]
    fn trees_have_no_cycle_edges() {
        let g = fixtures::caterpillar6();
        assert!(g.classify_edges().iter().all(|c| c.role == EdgeRole::Plain));
        assert_eq!(g.betti(), 0);
    }

    #[test]
    fn text_round_trip() {
        let g = fixtures::hammock();
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }
}
