use std::fmt;

use super::{hilbert_brute, HilbertError};
use crate::graph::{GraphInvariants, TrivalentGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: u32,
    pub k: Vec<u32>,
    pub left: u64,
    pub right: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvarianceReport {
    Equal {
        max_degree: u32,
    },
    InvariantsDiffer {
        left: GraphInvariants,
        right: GraphInvariants,
    },
    TablesDiffer(Discrepancy),
}

impl InvarianceReport {
    pub fn is_equal(&self) -> bool {
        matches!(self, InvarianceReport::Equal { .. })
    }
}

impl fmt::Display for InvarianceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvarianceReport::Equal { max_degree } => {
                write!(f, "tables agree up to degree {max_degree}")
            }
            InvarianceReport::InvariantsDiffer { left, right } => write!(
                f,
                "invariants differ: n={} g={} comp={} vs n={} g={} comp={}",
                left.num_leaves,
                left.betti,
                left.num_components,
                right.num_leaves,
                right.betti,
                right.num_components
            ),
            InvarianceReport::TablesDiffer(d) => {
                let k: Vec<String> = d.k.iter().map(u32::to_string).collect();
                write!(
                    f,
                    "tables differ at m={} k=({}): {} vs {}",
                    d.degree,
                    k.join(","),
                    d.left,
                    d.right
                )
            }
        }
    }
}

/// Compares the tables of two graphs up to `max_degree`, pairing
/// `leaves1[i]` with `leaves2[i]`. Graphs with different leaf count, first
/// Betti number or component count are reported without counting.
pub fn verify_mutation_invariance(
    g1: &TrivalentGraph,
    g2: &TrivalentGraph,
    max_degree: u32,
    leaves1: &[&str],
    leaves2: &[&str],
) -> Result<InvarianceReport, HilbertError> {
    if leaves1.len() != leaves2.len() {
        return Err(HilbertError::FactorLength {
            expected: leaves1.len(),
            got: leaves2.len(),
        });
    }
    let (i1, i2) = (g1.invariants(), g2.invariants());
    if (i1.num_leaves, i1.betti, i1.num_components) != (i2.num_leaves, i2.betti, i2.num_components)
    {
        return Ok(InvarianceReport::InvariantsDiffer {
            left: i1,
            right: i2,
        });
    }
    let t1 = hilbert_brute(g1, max_degree, leaves1)?;
    let t2 = hilbert_brute(g2, max_degree, leaves2)?;
    let keys = t1
        .counts
        .keys()
        .chain(t2.counts.keys())
        .collect::<std::collections::BTreeSet<_>>();
    for (m, k) in keys {
        let (a, b) = (t1.get(*m, k), t2.get(*m, k));
        if a != b {
            return Ok(InvarianceReport::TablesDiffer(Discrepancy {
                degree: *m,
                k: k.clone(),
                left: a,
                right: b,
            }));
        }
    }
    Ok(InvarianceReport::Equal { max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn littleman_hammock() {
        let r = verify_mutation_invariance(
            &fixtures::littleman(),
            &fixtures::hammock(),
            5,
            &["a", "b"],
            &["a", "b"],
        );
        assert!(r.unwrap().is_equal());
    }

    #[test]
    fn theta_dumbbell() {
        let r = verify_mutation_invariance(&fixtures::theta(), &fixtures::dumbbell(), 5, &[], &[])
            .unwrap();
        assert_eq!(r.to_string(), "tables agree up to degree 5");
    }

    #[test]
    fn littleman_dumbbell_differ() {
        let r =
            verify_mutation_invariance(&fixtures::littleman(), &fixtures::dumbbell(), 3, &[], &[])
                .unwrap();
        assert!(r
            .to_string()
            .starts_with("invariants differ: n=2 g=1 comp=1 vs n=0 g=2"));
    }

    #[test]
    fn wrong_leaf_pairing_is_caught() {
        let r =
            verify_mutation_invariance(&fixtures::tripod(), &fixtures::tripod(), 2, &["a"], &["a"])
                .unwrap();
        assert!(r.is_equal());
        let g = fixtures::littleman();
        let q = crate::graph::parse_graph("edge x c a\nedge y c b\nedge z c d\n").unwrap();
        assert!(!verify_mutation_invariance(&g, &q, 1, &[], &[])
            .unwrap()
            .is_equal());
    }
}
