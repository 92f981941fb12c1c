use std::collections::{BTreeMap, VecDeque};

use super::{EdgeId, GraphError, TrivalentGraph, VertexId};

pub const DEFAULT_ISOMORPHISM_BOUND: usize = 16;

/// A witness: vertex and edge bijections from the first graph to the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

pub fn is_isomorphic(
    g1: &TrivalentGraph,
    g2: &TrivalentGraph,
) -> Result<Option<Isomorphism>, GraphError> {
    find_isomorphism(g1, g2, DEFAULT_ISOMORPHISM_BOUND)
}

fn multiplicities(g: &TrivalentGraph) -> Vec<Vec<u8>> {
    let n = g.num_vertices();
    let mut m = vec![vec![0u8; n]; n];
    for e in g.edges() {
        let [a, b] = e.ends;
        m[a][b] += 1;
        if a != b {
            m[b][a] += 1;
        }
    }
    m
}

/// Backtracking search over valency- and multiplicity-respecting vertex
/// bijections.
pub fn find_isomorphism(
    g1: &TrivalentGraph,
    g2: &TrivalentGraph,
    bound: usize,
) -> Result<Option<Isomorphism>, GraphError> {
    for g in [g1, g2] {
        if g.num_vertices() > bound {
            return Err(GraphError::TooLarge {
                vertices: g.num_vertices(),
                bound,
            });
        }
    }
    if g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges() {
        return Ok(None);
    }
    let n = g1.num_vertices();
    let m1 = multiplicities(g1);
    let m2 = multiplicities(g2);

    // Visit vertices so that each one after a component's first is adjacent
    // to an earlier one.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for h in g1.incidence(v) {
                let w = g1.other_end(*h);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        k: usize,
        order: &[usize],
        map: &mut [usize],
        used: &mut [bool],
        g1: &TrivalentGraph,
        g2: &TrivalentGraph,
        m1: &[Vec<u8>],
        m2: &[Vec<u8>],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..map.len() {
            if used[w] || g1.valency(v) != g2.valency(w) || m1[v][v] != m2[w][w] {
                continue;
            }
            let consistent = order[..k].iter().all(|&x| m1[v][x] == m2[w][map[x]]);
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(k + 1, order, map, used, g1, g2, m1, m2) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    if !go(0, &order, &mut map, &mut used, g1, g2, &m1, &m2) {
        return Ok(None);
    }

    let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, e) in g2.edges().iter().enumerate() {
        let [a, b] = e.ends;
        buckets.entry((a.min(b), a.max(b))).or_default().push(i);
    }
    let mut edges = BTreeMap::new();
    for e in g1.edges() {
        let [a, b] = e.ends;
        let (x, y) = (map[a], map[b]);
        let target = buckets
            .get_mut(&(x.min(y), x.max(y)))
            .and_then(|v| v.pop())
            .expect("multiplicities agree");
        edges.insert(e.id.clone(), g2.edge_id(target).clone());
    }
    let vertices = (0..n)
        .map(|v| (g1.vertex_id(v).clone(), g2.vertex_id(map[v]).clone()))
        .collect();
    Ok(Some(Isomorphism { vertices, edges }))
}
