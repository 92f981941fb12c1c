use super::SemigroupError;
use crate::cone::ConeElement;
use crate::graph::{fresh_id, TrivalentGraph};

/// The unique cycle of a graph with first Betti number 1, oriented.
///
/// Cycle edge `cycle[i]` runs from `vertices[i]` to `vertices[i + 1]`
/// (indices mod `k`) and `legs[i]` is the remaining edge at `vertices[i]`.
/// The orientation starts at the cycle edge with the smallest id and follows
/// it from its first stored end. For a loop `k = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    pub cycle: Vec<usize>,
    pub vertices: Vec<usize>,
    pub legs: Vec<usize>,
}

impl Polygon {
    pub fn of(g: &TrivalentGraph) -> Result<Self, SemigroupError> {
        let betti = g.betti();
        if betti != 1 {
            return Err(SemigroupError::Betti(betti));
        }
        let on_cycle = g.cycle_edges();
        let start = on_cycle[0];
        let mut cycle = vec![start];
        let mut vertices = vec![g.edge(start).ends[0]];
        let mut at = g.edge(start).ends[1];
        let mut prev = start;
        while at != vertices[0] {
            vertices.push(at);
            let next = g
                .incidence(at)
                .iter()
                .map(|h| h.edge)
                .find(|&e| e != prev && on_cycle.contains(&e))
                .expect("a cycle vertex meets two cycle edges");
            let ends = g.edge(next).ends;
            at = if ends[0] == at { ends[1] } else { ends[0] };
            cycle.push(next);
            prev = next;
        }
        let legs = vertices
            .iter()
            .map(|&v| {
                g.incidence(v)
                    .iter()
                    .map(|h| h.edge)
                    .find(|e| !on_cycle.contains(e))
                    .expect("one leg per cycle vertex")
            })
            .collect();
        Ok(Polygon {
            cycle,
            vertices,
            legs,
        })
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    /// Cycle edge entering `vertices[i]`.
    pub fn incoming(&self, i: usize) -> usize {
        self.cycle[(i + self.len() - 1) % self.len()]
    }

    /// The polygon graph spanned by the cycle and its legs, keeping edge ids;
    /// every leg ends in a fresh leaf.
    pub fn graph(&self, g: &TrivalentGraph) -> TrivalentGraph {
        let mut edges = Vec::new();
        for &c in &self.cycle {
            let [a, b] = g.edge(c).ends;
            edges.push((
                g.edge_id(c).as_str().to_owned(),
                g.vertex_id(a).as_str().to_owned(),
                g.vertex_id(b).as_str().to_owned(),
            ));
        }
        for (i, &l) in self.legs.iter().enumerate() {
            let id = g.edge_id(l).as_str();
            let leaf = fresh_id(&format!("{id}.leaf"), |c| g.vertex_index(c).is_some());
            edges.push((
                id.to_owned(),
                g.vertex_id(self.vertices[i]).as_str().to_owned(),
                leaf,
            ));
        }
        TrivalentGraph::from_edges(edges).expect("a polygon is trivalent")
    }

    /// True iff `g` is itself a polygon graph: every inner vertex is on the
    /// cycle and every leg is a petiole.
    pub fn is_whole(&self, g: &TrivalentGraph) -> bool {
        g.inner_vertices().count() == self.len() && self.legs.iter().all(|&l| g.is_petiole(l))
    }

    /// `(a, b, l)`: incoming cycle, outgoing cycle and leg labels at
    /// `vertices[i]`.
    pub fn labels(&self, w: &ConeElement, i: usize) -> (u32, u32, u32) {
        (
            w.coeffs[self.incoming(i)],
            w.coeffs[self.cycle[i]],
            w.coeffs[self.legs[i]],
        )
    }

    /// The network running from leg `i` forward along the cycle to leg `j`.
    pub fn arc(&self, g: &TrivalentGraph, i: usize, j: usize) -> ConeElement {
        let k = self.len();
        let mut w = ConeElement::zero(g, 1);
        w.coeffs[self.legs[i]] = 1;
        w.coeffs[self.legs[j]] = 1;
        let mut t = i;
        while t != j {
            w.coeffs[self.cycle[t]] = 1;
            t = (t + 1) % k;
        }
        w
    }

    /// The network made of the whole cycle.
    pub fn cycle_network(&self, g: &TrivalentGraph) -> ConeElement {
        let mut w = ConeElement::zero(g, 1);
        for &c in &self.cycle {
            w.coeffs[c] = 1;
        }
        w
    }
}

/// The polygon graph with `k` cycle edges `c1..ck` and legs `l1..lk`.
pub fn polygon_graph(k: usize) -> TrivalentGraph {
    assert!(k >= 1);
    let mut edges = Vec::new();
    for i in 1..=k {
        let next = i % k + 1;
        edges.push((format!("c{i}"), format!("v{i}"), format!("v{next}")));
        edges.push((format!("l{i}"), format!("v{i}"), format!("a{i}")));
    }
    TrivalentGraph::from_edges(edges).expect("a polygon is trivalent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hexagon_orientation() {
        let g = fixtures::hexagon();
        let p = Polygon::of(&g).unwrap();
        let ids: Vec<&str> = p.cycle.iter().map(|&e| g.edge_id(e).as_str()).collect();
        assert_eq!(ids, ["c1", "c2", "c3", "c4", "c5", "c6"]);
        let legs: Vec<&str> = p.legs.iter().map(|&e| g.edge_id(e).as_str()).collect();
        assert_eq!(legs, ["l1", "l2", "l3", "l4", "l5", "l6"]);
        assert!(p.is_whole(&g));
    }

    #[test]
    fn littleman_cycle_is_the_loop() {
        let g = fixtures::littleman();
        let p = Polygon::of(&g).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(g.edge_id(p.legs[0]).as_str(), "bar");
        assert!(!p.is_whole(&g));
        let pg = p.graph(&g);
        assert!(crate::graph::is_isomorphic(&pg, &fixtures::balloon())
            .unwrap()
            .is_some());
    }

    #[test]
    fn hammock_is_a_two_gon() {
        let g = fixtures::hammock();
        let p = Polygon::of(&g).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.vertices.len(), 2);
        assert!(p.is_whole(&g));
    }

    #[test]
    fn trees_have_no_polygon() {
        assert_eq!(
            Polygon::of(&fixtures::tripod()).unwrap_err(),
            SemigroupError::Betti(0)
        );
    }

    #[test]
    fn polygon_graphs() {
        for k in 1..=8 {
            let g = polygon_graph(k);
            let inv = g.invariants();
            assert_eq!((inv.betti, inv.num_leaves, inv.num_edges), (1, k, 2 * k));
            assert_eq!(Polygon::of(&g).unwrap().len(), k);
        }
    }
}
