//! Lattice points, minimal generators and decompositions.

mod decompose;
mod enumerate;
mod generators;
mod polygon;

use thiserror::Error;

use crate::cone::{check_cone, ConeElement, ConeError, Violation};
use crate::graph::{GraphError, TrivalentGraph};

pub use decompose::{decompose, layer_decompose, split_degree2, Decomposer, Decomposition, Split};
pub use enumerate::{
    budget_from_env, points_of_degree, points_of_degree_with, EnumOptions, BUDGET_ENV,
    DEFAULT_BUDGET,
};
pub use generators::{
    brute_saturation, closed_form_g1, minimal_generators, tree_generators, GeneratorMethod,
    GeneratorSet, DEFAULT_DEGREE_CAP,
};
pub use polygon::{polygon_graph, Polygon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("enumeration visited {visited} search nodes, above the budget of {budget} (set GRAPHCONE_BUDGET to raise it)")]
    Budget { visited: u64, budget: u64 },
    #[error("first Betti number is {0}; decomposition needs at most 1")]
    Betti(usize),
    #[error("not a polygon graph: {0}")]
    NotPolygon(String),
    #[error("expected an element of degree {expected}, got degree {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("degree cap must be at least 2, got {0}")]
    DegreeCap(u32),
    #[error("element has {got} coefficients but the graph has {expected} edges")]
    MixedGraphs { expected: usize, got: usize },
    #[error("internal decomposition error: {0}")]
    Internal(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<Violation> for SemigroupError {
    fn from(v: Violation) -> Self {
        SemigroupError::Cone(v.into())
    }
}

/// True iff both multisets of cone elements have the same sum, degree
/// included. Every element must lie in the cone of `g`.
pub fn verify_relation(
    g: &TrivalentGraph,
    lhs: &[ConeElement],
    rhs: &[ConeElement],
) -> Result<bool, SemigroupError> {
    for w in lhs.iter().chain(rhs) {
        if w.coeffs.len() != g.num_edges() {
            return Err(SemigroupError::MixedGraphs {
                expected: g.num_edges(),
                got: w.coeffs.len(),
            });
        }
        check_cone(g, w)?;
    }
    Ok(ConeElement::sum(g, lhs) == ConeElement::sum(g, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn el(g: &TrivalentGraph, t: &str) -> ConeElement {
        ConeElement::parse(g, t).unwrap()
    }

    #[test]
    fn littleman_quadric() {
        let g = fixtures::littleman();
        let lhs = [el(&g, "deg=1;loop=1"), el(&g, "deg=1;p3=1,p4=1")];
        let rhs = [el(&g, "deg=1;"), el(&g, "deg=1;loop=1,p3=1,p4=1")];
        assert!(verify_relation(&g, &lhs, &rhs).unwrap());
        assert!(!verify_relation(&g, &lhs[..1], &rhs[..1]).unwrap());
    }

    #[test]
    fn mixed_lengths_are_rejected() {
        let g = fixtures::littleman();
        let t = fixtures::tripod();
        let err = verify_relation(&g, &[ConeElement::zero(&t, 0)], &[]).unwrap_err();
        assert!(matches!(err, SemigroupError::MixedGraphs { .. }));
    }

    #[test]
    fn non_cone_elements_are_rejected() {
        let g = fixtures::littleman();
        let err = verify_relation(&g, &[el(&g, "deg=1;loop=1,bar=1")], &[]).unwrap_err();
        assert!(matches!(err, SemigroupError::Cone(_)));
    }
}
