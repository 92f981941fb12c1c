//! Elements of the graded lattice and membership in the cone.
//!
//! A [`ConeElement`] is a degree together with one nonnegative label per edge,
//! stored in the graph's edge order. At an inner vertex with incident labels
//! `a, b, c` (a loop contributes its label twice) the element is
//!
//! * in the lattice when `a + b + c` is even,
//! * in the cone when moreover the triangle inequalities hold and
//!   `(a + b + c) / 2 <= degree`.
//!
//! An edge joining two leaves has no vertex condition; its label is bounded
//! by the degree.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{cut_edge, Cut, EdgeId, GraphError, Network, TrivalentGraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeElement {
    pub degree: u32,
    pub coeffs: Vec<u32>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Violation {
    #[error("element has {got} coefficients but the graph has {expected} edges")]
    Length { expected: usize, got: usize },
    #[error("parity fails at vertex {0}")]
    Parity(VertexId),
    #[error("triangle inequality fails at vertex {vertex}: edge {edge} exceeds the sum of the other two")]
    Triangle { vertex: VertexId, edge: EdgeId },
    #[error("degree {degree} is below the minimal degree {required} (at vertex {vertex})")]
    Degree {
        degree: u32,
        required: u32,
        vertex: VertexId,
    },
    #[error("edge {edge} joins two leaves and carries {value}, above the degree {degree}")]
    BareEdge {
        edge: EdgeId,
        value: u32,
        degree: u32,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("cannot parse element: {0}")]
    Syntax(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("vertex {0} is a leaf")]
    NotInner(VertexId),
    #[error("elements belong to graphs with different edges")]
    MixedGraphs,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Violation(#[from] Violation),
}

/// Labels of the three half-edges at an inner vertex together with the
/// numbers of local paths through each pair of them: `x` avoids the first
/// half-edge, `y` the second and `z` the third.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl LocalTriple {
    /// Solves for the local paths; `None` when parity or a triangle
    /// inequality fails.
    pub fn new(a: u32, b: u32, c: u32) -> Option<Self> {
        let s = a + b + c;
        if s % 2 == 1 || 2 * a > s || 2 * b > s || 2 * c > s {
            return None;
        }
        Some(LocalTriple {
            a,
            b,
            c,
            x: s / 2 - a,
            y: s / 2 - b,
            z: s / 2 - c,
        })
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }
}

impl ConeElement {
    pub fn zero(g: &TrivalentGraph, degree: u32) -> Self {
        ConeElement {
            degree,
            coeffs: vec![0; g.num_edges()],
        }
    }

    pub fn from_network(n: &Network) -> Self {
        ConeElement {
            degree: 1,
            coeffs: n.support.iter().map(|&b| b as u32).collect(),
        }
    }

    /// Builds an element from `(edge id, value)` pairs; missing edges are 0.
    pub fn from_pairs<'a>(
        g: &TrivalentGraph,
        degree: u32,
        pairs: impl IntoIterator<Item = (&'a str, u32)>,
    ) -> Result<Self, ConeError> {
        let mut el = Self::zero(g, degree);
        for (id, v) in pairs {
            let e = g
                .edge_index(id)
                .ok_or_else(|| ConeError::UnknownEdge(id.to_owned()))?;
            el.coeffs[e] = v;
        }
        Ok(el)
    }

    pub fn get(&self, g: &TrivalentGraph, id: &str) -> Option<u32> {
        g.edge_index(id).map(|e| self.coeffs[e])
    }

    pub fn is_zero(&self) -> bool {
        self.degree == 0 && self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "same graph");
        ConeElement {
            degree: self.degree + other.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self - other` when every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.coeffs.len(), other.coeffs.len(), "same graph");
        Some(ConeElement {
            degree: self.degree.checked_sub(other.degree)?,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.checked_sub(*b))
                .collect::<Option<_>>()?,
        })
    }

    pub fn sum<'a>(g: &TrivalentGraph, parts: impl IntoIterator<Item = &'a ConeElement>) -> Self {
        parts
            .into_iter()
            .fold(Self::zero(g, 0), |acc, p| acc.plus(p))
    }

    /// Text form `deg=<m>;<edge>=<value>,...` listing nonzero labels in edge
    /// order.
    pub fn to_text(&self, g: &TrivalentGraph) -> String {
        let labels: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, c)| format!("{}={}", g.edge_id(e), c))
            .collect();
        format!("deg={};{}", self.degree, labels.join(","))
    }

    pub fn display<'a>(&'a self, g: &'a TrivalentGraph) -> impl fmt::Display + 'a {
        struct D<'a>(&'a ConeElement, &'a TrivalentGraph);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.to_text(self.1))
            }
        }
        D(self, g)
    }

    /// Parses the text form. Whitespace is ignored and omitted edges are 0.
    pub fn parse(g: &TrivalentGraph, text: &str) -> Result<Self, ConeError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, rest) = compact.split_once(';').unwrap_or((compact.as_str(), ""));
        let degree = head
            .strip_prefix("deg=")
            .ok_or_else(|| ConeError::Syntax(format!("expected `deg=<m>`, got `{head}`")))?
            .parse::<u32>()
            .map_err(|e| ConeError::Syntax(format!("degree: {e}")))?;
        let mut el = Self::zero(g, degree);
        let mut seen = vec![false; g.num_edges()];
        for item in rest.split(',').filter(|s| !s.is_empty()) {
            let (id, value) = item.split_once('=').ok_or_else(|| {
                ConeError::Syntax(format!("expected `<edge>=<value>`, got `{item}`"))
            })?;
            let e = g
                .edge_index(id)
                .ok_or_else(|| ConeError::UnknownEdge(id.to_owned()))?;
            if std::mem::replace(&mut seen[e], true) {
                return Err(ConeError::Syntax(format!("edge {id} given twice")));
            }
            el.coeffs[e] = value
                .parse::<u32>()
                .map_err(|err| ConeError::Syntax(format!("value of {id}: {err}")))?;
        }
        Ok(el)
    }
}

fn vertex_sum(w: &ConeElement, t: &[usize; 3]) -> u32 {
    t.iter().map(|&e| w.coeffs[e]).sum()
}

/// `(a + b + c) / 2` at an inner vertex.
pub fn deg_v(g: &TrivalentGraph, w: &ConeElement, v: &str) -> Result<Ratio<u64>, ConeError> {
    let idx = g.require_vertex(v)?;
    let (_, t) = g
        .inner_triples()
        .iter()
        .find(|(x, _)| *x == idx)
        .ok_or_else(|| ConeError::NotInner(g.vertex_id(idx).clone()))?;
    Ok(Ratio::new(vertex_sum(w, t) as u64, 2))
}

/// Maximum of the vertex degrees, rounded up, and of the labels of edges
/// joining two leaves; 0 for the empty graph.
pub fn deg_min(g: &TrivalentGraph, w: &ConeElement) -> u32 {
    g.inner_triples()
        .iter()
        .map(|(_, t)| vertex_sum(w, t).div_ceil(2))
        .chain(g.bare_edges().map(|e| w.coeffs[e]))
        .max()
        .unwrap_or(0)
}

pub fn in_lattice(g: &TrivalentGraph, w: &ConeElement) -> bool {
    w.coeffs.len() == g.num_edges()
        && g.inner_triples()
            .iter()
            .all(|(_, t)| vertex_sum(w, t) % 2 == 0)
}

/// Full membership test, reporting the first failing vertex in vertex-id
/// order.
pub fn check_cone(g: &TrivalentGraph, w: &ConeElement) -> Result<(), Violation> {
    if w.coeffs.len() != g.num_edges() {
        return Err(Violation::Length {
            expected: g.num_edges(),
            got: w.coeffs.len(),
        });
    }
    for (v, t) in g.inner_triples() {
        let s = vertex_sum(w, t);
        let vertex = || g.vertex_id(*v).clone();
        if s % 2 == 1 {
            return Err(Violation::Parity(vertex()));
        }
        if let Some(&e) = t.iter().find(|&&e| 2 * w.coeffs[e] > s) {
            return Err(Violation::Triangle {
                vertex: vertex(),
                edge: g.edge_id(e).clone(),
            });
        }
        if s / 2 > w.degree {
            return Err(Violation::Degree {
                degree: w.degree,
                required: s / 2,
                vertex: vertex(),
            });
        }
    }
    if let Some(e) = g.bare_edges().find(|&e| w.coeffs[e] > w.degree) {
        return Err(Violation::BareEdge {
            edge: g.edge_id(e).clone(),
            value: w.coeffs[e],
            degree: w.degree,
        });
    }
    Ok(())
}

pub fn in_cone(g: &TrivalentGraph, w: &ConeElement) -> bool {
    check_cone(g, w).is_ok()
}

/// Local labels and paths at inner vertex `v`; `a, b, c` follow the
/// half-edge order at `v`.
pub fn local_paths(g: &TrivalentGraph, w: &ConeElement, v: &str) -> Result<LocalTriple, ConeError> {
    let idx = g.require_vertex(v)?;
    let (_, t) = g
        .inner_triples()
        .iter()
        .find(|(x, _)| *x == idx)
        .ok_or_else(|| ConeError::NotInner(g.vertex_id(idx).clone()))?;
    let [a, b, c] = t.map(|e| w.coeffs[e]);
    LocalTriple::new(a, b, c).ok_or_else(|| {
        let vertex = g.vertex_id(idx).clone();
        if (a + b + c) % 2 == 1 {
            Violation::Parity(vertex).into()
        } else {
            let e = *t
                .iter()
                .find(|&&e| 2 * w.coeffs[e] > a + b + c)
                .expect("some side is too long");
            Violation::Triangle {
                vertex,
                edge: g.edge_id(e).clone(),
            }
            .into()
        }
    })
}

/// Transfers labels to another graph by edge id; edges of `to` missing from
/// `from` get the value of `fill`.
pub fn transfer(
    from: &TrivalentGraph,
    to: &TrivalentGraph,
    w: &ConeElement,
    fill: impl Fn(&EdgeId) -> u32,
) -> ConeElement {
    ConeElement {
        degree: w.degree,
        coeffs: to
            .edge_ids()
            .map(|id| match from.edge_index(id.as_str()) {
                Some(e) => w.coeffs[e],
                None => fill(id),
            })
            .collect(),
    }
}

/// The element on the cut graph carrying the label of `e` on both halves.
pub fn lift_cut(
    g: &TrivalentGraph,
    w: &ConeElement,
    e: &str,
) -> Result<(Cut, ConeElement), ConeError> {
    let idx = g.require_edge(e)?;
    let cut = cut_edge(g, e)?;
    let value = w.coeffs[idx];
    let lifted = transfer(g, &cut.graph, w, |_| value);
    Ok((cut, lifted))
}

/// Cuts the non-cycle edge `e` and restricts to the two resulting
/// components: the one containing end 0 of `e`, then the one containing end 1.
pub fn project(
    g: &TrivalentGraph,
    w: &ConeElement,
    e: &str,
) -> Result<[(TrivalentGraph, ConeElement); 2], ConeError> {
    let idx = g.require_edge(e)?;
    if g.is_cycle_edge(idx) {
        return Err(GraphError::CycleEdge(g.edge_id(idx).clone()).into());
    }
    let (cut, lifted) = lift_cut(g, w, e)?;
    let side = |half: &EdgeId| {
        let comp = cut
            .graph
            .components()
            .into_iter()
            .find(|c| c.edge_index(half.as_str()).is_some())
            .expect("every edge lies in a component");
        let el = transfer(&cut.graph, &comp, &lifted, |_| 0);
        (comp, el)
    };
    Ok([side(&cut.halves[0]), side(&cut.halves[1])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::enumerate_networks;

    fn el(g: &TrivalentGraph, text: &str) -> ConeElement {
        ConeElement::parse(g, text).unwrap()
    }

    #[test]
    fn vertex_degrees() {
        let lm = fixtures::littleman();
        let w = el(&lm, "deg=2;loop=1,bar=2,p3=1,p4=1");
        assert_eq!(deg_v(&lm, &w, "u").unwrap(), Ratio::from_integer(2));
        assert_eq!(
            deg_v(&lm, &ConeElement::zero(&lm, 0), "w").unwrap(),
            Ratio::from_integer(0)
        );
        assert!(matches!(deg_v(&lm, &w, "a"), Err(ConeError::NotInner(_))));

        let db = fixtures::dumbbell();
        let w = el(&db, "deg=1;loopL=1,loopR=1");
        assert_eq!(deg_v(&db, &w, "u").unwrap(), Ratio::from_integer(1));
        assert_eq!(deg_v(&db, &w, "w").unwrap(), Ratio::from_integer(1));
    }

    #[test]
    fn minimal_degrees() {
        let lm = fixtures::littleman();
        assert_eq!(deg_min(&lm, &el(&lm, "deg=1;p3=1,p4=1")), 1);
        let hex = fixtures::hexagon();
        assert_eq!(
            deg_min(&hex, &el(&hex, "deg=2;c1=2,c2=2,c3=2,c4=2,c5=2,c6=2")),
            2
        );
        assert_eq!(deg_min(&hex, &ConeElement::zero(&hex, 0)), 0);
    }

    #[test]
    fn membership() {
        let lm = fixtures::littleman();
        assert!(in_cone(&lm, &el(&lm, "deg=2;loop=1,bar=2,p3=2")));
        assert_eq!(
            check_cone(&lm, &el(&lm, "deg=1;loop=1,bar=1")),
            Err(Violation::Parity("u".into()))
        );
        assert!(!in_lattice(&lm, &el(&lm, "deg=1;loop=1,bar=1")));
        assert!(in_cone(&lm, &ConeElement::zero(&lm, 0)));
        assert!(matches!(
            check_cone(&lm, &el(&lm, "deg=1;loop=1,bar=2")),
            Err(Violation::Degree { required: 2, .. })
        ));
        assert!(matches!(
            check_cone(&lm, &el(&lm, "deg=9;bar=2")),
            Err(Violation::Triangle { .. })
        ));
        assert_eq!(
            Violation::Parity("u".into()).to_string(),
            "parity fails at vertex u"
        );
    }

    #[test]
    fn local_path_coordinates() {
        let t = fixtures::tripod();
        let p = local_paths(&t, &el(&t, "deg=1;e1=1,e2=1"), "c").unwrap();
        assert_eq!((p.x, p.y, p.z), (0, 0, 1));
        let p = local_paths(&t, &el(&t, "deg=2;e1=2,e2=2,e3=2"), "c").unwrap();
        assert_eq!((p.x, p.y, p.z), (1, 1, 1));
        assert!(matches!(
            local_paths(&t, &el(&t, "deg=1;e1=1"), "c"),
            Err(ConeError::Violation(Violation::Parity(_)))
        ));
    }

    #[test]
    fn networks_have_one_local_path() {
        for g in fixtures::all() {
            for n in enumerate_networks(&g) {
                if n.is_empty() {
                    continue;
                }
                let w = ConeElement::from_network(&n);
                for &v in g.inner_vertices().collect::<Vec<_>>().iter() {
                    let p = local_paths(&g, &w, g.vertex_id(v).as_str()).unwrap();
                    assert!(p.x + p.y + p.z <= 1);
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let lm = fixtures::littleman();
        let w = el(&lm, " deg=2 ; p3=2, loop=1 ,bar=2 ");
        assert_eq!(w.to_text(&lm), "deg=2;bar=2,loop=1,p3=2");
        assert_eq!(ConeElement::zero(&lm, 1).to_text(&lm), "deg=1;");
        assert_eq!(el(&lm, "deg=1;"), ConeElement::zero(&lm, 1));
        assert_eq!(el(&lm, "deg=3"), ConeElement::zero(&lm, 3));
        assert!(matches!(
            ConeElement::parse(&lm, "deg=1;zz=1"),
            Err(ConeError::UnknownEdge(_))
        ));
        assert!(matches!(
            ConeElement::parse(&lm, "deg=1;bar=-1"),
            Err(ConeError::Syntax(_))
        ));
        assert!(matches!(
            ConeElement::parse(&lm, "m=1"),
            Err(ConeError::Syntax(_))
        ));
        assert!(matches!(
            ConeElement::parse(&lm, "deg=1;bar=1,bar=1"),
            Err(ConeError::Syntax(_))
        ));
    }

    #[test]
    fn projection_of_littleman_at_bar() {
        let lm = fixtures::littleman();
        let w = el(&lm, "deg=1;loop=1,p3=1,p4=1");
        let [(g1, w1), (g2, w2)] = project(&lm, &w, "bar").unwrap();
        assert_eq!(g1.betti(), 1);
        assert_eq!(w1.to_text(&g1), "deg=1;loop=1");
        assert_eq!(w2.to_text(&g2), "deg=1;p3=1,p4=1");
        assert!(in_cone(&g1, &w1) && in_cone(&g2, &w2));
        assert!(matches!(
            project(&lm, &w, "loop"),
            Err(ConeError::Graph(GraphError::CycleEdge(_)))
        ));
    }

    #[test]
    fn lift_through_hammock_cycle_edge() {
        let h = fixtures::hammock();
        let w = el(&h, "deg=2;c1=1,c2=1,p2=2");
        let (cut, lifted) = lift_cut(&h, &w, "c1").unwrap();
        assert_eq!(cut.graph.betti(), 0);
        assert_eq!(lifted.get(&cut.graph, cut.halves[0].as_str()), Some(1));
        assert_eq!(lifted.get(&cut.graph, cut.halves[1].as_str()), Some(1));
        assert!(in_cone(&cut.graph, &lifted));
    }
}
