use super::{EdgeId, TrivalentGraph, VertexId};

/// A 0/1 edge labeling, indexed by edge position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Network {
    pub support: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NetworkPiece {
    /// Leaf-to-leaf path: the vertices and edges in walking order.
    Path {
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    },
    Cycle {
        edges: Vec<EdgeId>,
    },
}

impl Network {
    pub fn empty(g: &TrivalentGraph) -> Self {
        Network {
            support: vec![false; g.num_edges()],
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.support.iter().any(|&b| b)
    }

    pub fn edges<'a>(&'a self, g: &'a TrivalentGraph) -> impl Iterator<Item = &'a EdgeId> + 'a {
        self.support
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(e, _)| g.edge_id(e))
    }

    /// True iff every inner vertex meets the support in 0 or 2 half-edges.
    pub fn is_valid(&self, g: &TrivalentGraph) -> bool {
        self.support.len() == g.num_edges()
            && g.inner_triples().iter().all(|(_, t)| {
                let k = t.iter().filter(|&&e| self.support[e]).count();
                k == 0 || k == 2
            })
    }

    /// Splits the support into leaf-to-leaf paths (from each smaller leaf) and
    /// cycles.
    pub fn pieces(&self, g: &TrivalentGraph) -> Vec<NetworkPiece> {
        let mut used = vec![false; g.num_edges()];
        let mut out = Vec::new();
        // A half-edge is "taken" when its edge is in the support and unused.
        let next_from = |v: usize, used: &[bool]| {
            g.incidence(v)
                .iter()
                .find(|h| self.support[h.edge] && !used[h.edge])
                .copied()
        };
        for leaf in g.leaves() {
            let Some(mut h) = next_from(leaf, &used) else {
                continue;
            };
            let mut vertices = vec![g.vertex_id(leaf).clone()];
            let mut edges = Vec::new();
            loop {
                used[h.edge] = true;
                edges.push(g.edge_id(h.edge).clone());
                let w = g.other_end(h);
                vertices.push(g.vertex_id(w).clone());
                match next_from(w, &used) {
                    Some(n) if !g.is_leaf(w) => h = n,
                    _ => break,
                }
            }
            out.push(NetworkPiece::Path { vertices, edges });
        }
        for start in 0..g.num_edges() {
            if !self.support[start] || used[start] {
                continue;
            }
            let mut edges = Vec::new();
            let mut e = start;
            let mut v = g.edge(start).ends[0];
            loop {
                used[e] = true;
                edges.push(g.edge_id(e).clone());
                let ends = g.edge(e).ends;
                v = if ends[0] == v { ends[1] } else { ends[0] };
                match next_from(v, &used) {
                    Some(h) => e = h.edge,
                    None => break,
                }
            }
            out.push(NetworkPiece::Cycle { edges });
        }
        out
    }
}

/// All networks of `g`, in lexicographic order of their 0/1 vectors over the
/// edge-id order (so the empty network comes first).
pub fn enumerate_networks(g: &TrivalentGraph) -> Vec<Network> {
    let n = g.num_edges();
    // Inner vertices become checkable once their largest incident edge is set.
    let mut closing: Vec<Vec<[usize; 3]>> = vec![Vec::new(); n];
    for (_, t) in g.inner_triples() {
        closing[*t.iter().max().expect("three edges")].push(*t);
    }
    let mut out = Vec::new();
    let mut labels = vec![false; n];
    fn go(i: usize, labels: &mut Vec<bool>, closing: &[Vec<[usize; 3]>], out: &mut Vec<Network>) {
        if i == labels.len() {
            out.push(Network {
                support: labels.clone(),
            });
            return;
        }
        for bit in [false, true] {
            labels[i] = bit;
            let ok = closing[i].iter().all(|t| {
                let k = t.iter().filter(|&&e| labels[e]).count();
                k == 0 || k == 2
            });
            if ok {
                go(i + 1, labels, closing, out);
            }
        }
        labels[i] = false;
    }
    go(0, &mut labels, &closing, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn supports(g: &TrivalentGraph) -> Vec<Vec<String>> {
        enumerate_networks(g)
            .iter()
            .map(|n| n.edges(g).map(|e| e.to_string()).collect())
            .collect()
    }

    #[test]
    fn littleman_networks() {
        let s = supports(&fixtures::littleman());
        assert_eq!(
            s,
            vec![
                vec![],
                vec!["p3".to_string(), "p4".into()],
                vec!["loop".into()],
                vec!["loop".into(), "p3".into(), "p4".into()],
            ]
        );
    }

    #[test]
    fn dumbbell_networks_avoid_the_bar() {
        let g = fixtures::dumbbell();
        let nets = enumerate_networks(&g);
        assert_eq!(nets.len(), 4);
        let bar = g.edge_index("bar").unwrap();
        assert!(nets.iter().all(|n| !n.support[bar]));
    }

    #[test]
    fn quartet_networks_are_even_leaf_patterns() {
        let g = fixtures::quartet();
        let nets = enumerate_networks(&g);
        assert_eq!(nets.len(), 8);
        let petioles: Vec<usize> = ["p1", "p2", "p3", "p4"]
            .iter()
            .map(|p| g.edge_index(p).unwrap())
            .collect();
        let mut patterns: Vec<Vec<bool>> = nets
            .iter()
            .map(|n| petioles.iter().map(|&p| n.support[p]).collect())
            .collect();
        patterns.sort();
        patterns.dedup();
        assert_eq!(patterns.len(), 8);
        assert!(patterns
            .iter()
            .all(|p| p.iter().filter(|&&b| b).count() % 2 == 0));
    }

    #[test]
    fn pieces_of_littleman_full_network() {
        let g = fixtures::littleman();
        let full = enumerate_networks(&g).pop().unwrap();
        let pieces = full.pieces(&g);
        assert_eq!(pieces.len(), 2);
        assert!(matches!(&pieces[0], NetworkPiece::Path { edges, .. } if edges.len() == 2));
        assert!(matches!(&pieces[1], NetworkPiece::Cycle { edges } if edges.len() == 1));
    }

    #[test]
    fn pieces_cover_the_support() {
        for g in fixtures::all() {
            for n in enumerate_networks(&g) {
                assert!(n.is_valid(&g));
                let count: usize = n
                    .pieces(&g)
                    .iter()
                    .map(|p| match p {
                        NetworkPiece::Path { edges, .. } | NetworkPiece::Cycle { edges } => {
                            edges.len()
                        }
                    })
                    .sum();
                assert_eq!(count, n.edges(&g).count());
            }
        }
    }
}
