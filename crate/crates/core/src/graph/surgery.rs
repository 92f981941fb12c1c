//! Cutting, gluing, disjoint union and grafting.

use std::collections::{BTreeMap, BTreeSet};

use super::{fresh_id, EdgeId, GraphError, TrivalentGraph, VertexId};

#[derive(Clone, Debug)]
pub struct Cut {
    pub graph: TrivalentGraph,
    /// The two halves of the cut edge; `halves[i]` keeps end `i` of the old edge.
    pub halves: [EdgeId; 2],
    pub leaves: [VertexId; 2],
}

#[derive(Clone, Debug)]
pub struct Glue {
    pub graph: TrivalentGraph,
    pub edge: EdgeId,
}

#[derive(Clone, Debug)]
pub struct Graft {
    pub graph: TrivalentGraph,
    pub center: VertexId,
    pub edge: EdgeId,
    pub leaf: VertexId,
    /// Identifiers of the second graph after renaming clashes.
    pub vertex_renames: BTreeMap<VertexId, VertexId>,
    pub edge_renames: BTreeMap<EdgeId, EdgeId>,
}

struct Names {
    vertices: BTreeSet<String>,
    edges: BTreeSet<String>,
}

impl Names {
    fn of(edges: &[(EdgeId, VertexId, VertexId)]) -> Self {
        Names {
            vertices: edges
                .iter()
                .flat_map(|(_, a, b)| [a.as_str().to_owned(), b.as_str().to_owned()])
                .collect(),
            edges: edges
                .iter()
                .map(|(e, _, _)| e.as_str().to_owned())
                .collect(),
        }
    }

    fn vertex(&mut self, base: &str) -> VertexId {
        let id = fresh_id(base, |c| self.vertices.contains(c));
        self.vertices.insert(id.clone());
        id.into()
    }

    fn edge(&mut self, base: &str) -> EdgeId {
        let id = fresh_id(base, |c| self.edges.contains(c));
        self.edges.insert(id.clone());
        id.into()
    }
}

/// Replaces the internal edge `e` by two edges ending in fresh leaves.
pub fn cut_edge(g: &TrivalentGraph, e: &str) -> Result<Cut, GraphError> {
    let idx = g.require_edge(e)?;
    if g.is_petiole(idx) {
        return Err(GraphError::Petiole(g.edge_id(idx).clone()));
    }
    let mut edges = g.edge_triples();
    let (_, a, b) = edges.remove(idx);
    let mut names = Names::of(&edges);
    names.edges.insert(e.to_owned());
    names
        .vertices
        .extend([a.as_str().to_owned(), b.as_str().to_owned()]);
    let halves = [names.edge(&format!("{e}.1")), names.edge(&format!("{e}.2"))];
    let leaves = [
        names.vertex(&format!("{e}.1")),
        names.vertex(&format!("{e}.2")),
    ];
    edges.push((halves[0].clone(), a, leaves[0].clone()));
    edges.push((halves[1].clone(), b, leaves[1].clone()));
    Ok(Cut {
        graph: TrivalentGraph::from_edges(edges)?,
        halves,
        leaves,
    })
}

/// Merges the petioles of two leaves into one edge, which keeps the id of
/// the petiole of `l1`.
pub fn glue_leaves(g: &TrivalentGraph, l1: &str, l2: &str) -> Result<Glue, GraphError> {
    let v1 = g.require_vertex(l1)?;
    let v2 = g.require_vertex(l2)?;
    for v in [v1, v2] {
        if !g.is_leaf(v) {
            return Err(GraphError::NotALeaf(g.vertex_id(v).clone()));
        }
    }
    if v1 == v2 {
        return Err(GraphError::SameLeaf(g.vertex_id(v1).clone()));
    }
    let p1 = g.petiole_of(v1).expect("leaf");
    let p2 = g.petiole_of(v2).expect("leaf");
    if p1 == p2 {
        return Err(GraphError::GlueClosesEdge(
            g.vertex_id(v1).clone(),
            g.vertex_id(v2).clone(),
        ));
    }
    let far = |leaf: usize, p: usize| {
        let ends = g.edge(p).ends;
        if ends[0] == leaf {
            ends[1]
        } else {
            ends[0]
        }
    };
    let (a, b) = (far(v1, p1), far(v2, p2));
    let edge = g.edge_id(p1).clone();
    let mut edges: Vec<_> = g
        .edge_triples()
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != p1 && i != p2)
        .map(|(_, t)| t)
        .collect();
    edges.push((edge.clone(), g.vertex_id(a).clone(), g.vertex_id(b).clone()));
    Ok(Glue {
        graph: TrivalentGraph::from_edges(edges)?,
        edge,
    })
}

type Renamed = (
    Vec<(EdgeId, VertexId, VertexId)>,
    BTreeMap<VertexId, VertexId>,
    BTreeMap<EdgeId, EdgeId>,
    Names,
);

fn union_renamed(g1: &TrivalentGraph, g2: &TrivalentGraph) -> Renamed {
    let mut edges = g1.edge_triples();
    let mut names = Names::of(&edges);
    let mut vmap = BTreeMap::new();
    for v in g2.vertex_ids() {
        vmap.insert(v.clone(), names.vertex(v.as_str()));
    }
    let mut emap = BTreeMap::new();
    for e in g2.edge_ids() {
        emap.insert(e.clone(), names.edge(e.as_str()));
    }
    for (e, a, b) in g2.edge_triples() {
        edges.push((emap[&e].clone(), vmap[&a].clone(), vmap[&b].clone()));
    }
    (edges, vmap, emap, names)
}

/// Disjoint union; identifiers of `g2` that clash with `g1` get a suffix.
pub fn disjoint_union(g1: &TrivalentGraph, g2: &TrivalentGraph) -> TrivalentGraph {
    let (edges, ..) = union_renamed(g1, g2);
    TrivalentGraph::from_edges(edges).expect("union of trivalent graphs")
}

/// Joins the petioles of `l1` in `g1` and `l2` in `g2` at a new inner vertex
/// carrying a new petiole.
pub fn graft(
    g1: &TrivalentGraph,
    l1: &str,
    g2: &TrivalentGraph,
    l2: &str,
) -> Result<Graft, GraphError> {
    let v1 = g1.require_vertex(l1)?;
    let v2 = g2.require_vertex(l2)?;
    if !g1.is_leaf(v1) {
        return Err(GraphError::NotALeaf(g1.vertex_id(v1).clone()));
    }
    if !g2.is_leaf(v2) {
        return Err(GraphError::NotALeaf(g2.vertex_id(v2).clone()));
    }
    let (mut edges, vertex_renames, edge_renames, mut names) = union_renamed(g1, g2);
    let center = names.vertex("graft");
    let leaf = names.vertex("graft.l");
    let edge = names.edge("graft.e");
    let targets = [
        g1.vertex_id(v1).clone(),
        vertex_renames[g2.vertex_id(v2)].clone(),
    ];
    for (_, a, b) in edges.iter_mut() {
        for end in [a, b] {
            if targets.contains(end) {
                *end = center.clone();
            }
        }
    }
    edges.push((edge.clone(), center.clone(), leaf.clone()));
    Ok(Graft {
        graph: TrivalentGraph::from_edges(edges)?,
        center,
        edge,
        leaf,
        vertex_renames,
        edge_renames,
    })
}
