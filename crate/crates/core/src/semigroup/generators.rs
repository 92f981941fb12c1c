use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::enumerate::points_of_degree;
use super::polygon::Polygon;
use super::SemigroupError;
use crate::cone::{in_cone, transfer, ConeElement};
use crate::graph::{enumerate_networks, TrivalentGraph};

pub const DEFAULT_DEGREE_CAP: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorMethod {
    TreeDegree1,
    ClosedFormG1,
    BruteSaturation,
}

impl fmt::Display for GeneratorMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorMethod::TreeDegree1 => "tree_degree1",
            GeneratorMethod::ClosedFormG1 => "closed_form_g1",
            GeneratorMethod::BruteSaturation => "brute_saturation",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    /// Sorted by degree, then coefficients.
    pub generators: Vec<ConeElement>,
    pub method: GeneratorMethod,
    pub degree_cap: u32,
    /// Set by brute saturation when generators occur at the cap, so higher
    /// degrees may hold more.
    pub truncation_warning: bool,
}

impl GeneratorSet {
    pub fn by_degree(&self) -> BTreeMap<u32, Vec<&ConeElement>> {
        let mut out: BTreeMap<u32, Vec<&ConeElement>> = BTreeMap::new();
        for gen in &self.generators {
            out.entry(gen.degree).or_default().push(gen);
        }
        out
    }

    pub fn count_in_degree(&self, d: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == d).count()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

fn networks(g: &TrivalentGraph) -> Vec<ConeElement> {
    enumerate_networks(g)
        .iter()
        .map(ConeElement::from_network)
        .collect()
}

/// Minimal generators: the networks for forests, the closed form for first
/// Betti number one, brute saturation up to `degree_cap` otherwise.
pub fn minimal_generators(
    g: &TrivalentGraph,
    degree_cap: u32,
) -> Result<GeneratorSet, SemigroupError> {
    if degree_cap < 2 {
        return Err(SemigroupError::DegreeCap(degree_cap));
    }
    match g.betti() {
        0 => tree_generators(g, degree_cap),
        1 => closed_form_g1(g, degree_cap),
        _ => brute_saturation(g, degree_cap),
    }
}

pub fn tree_generators(
    g: &TrivalentGraph,
    degree_cap: u32,
) -> Result<GeneratorSet, SemigroupError> {
    let betti = g.betti();
    if betti != 0 {
        return Err(SemigroupError::Betti(betti));
    }
    let mut generators = networks(g);
    generators.sort();
    Ok(GeneratorSet {
        generators,
        method: GeneratorMethod::TreeDegree1,
        degree_cap,
        truncation_warning: false,
    })
}

/// Networks, plus the degree-two elements with every cycle edge 1, an odd
/// number of cycle legs 2 and the other legs 0, completed by any degree-two
/// labeling of the rest of the graph.
pub fn closed_form_g1(g: &TrivalentGraph, degree_cap: u32) -> Result<GeneratorSet, SemigroupError> {
    let poly = Polygon::of(g)?;
    let cycle: BTreeSet<usize> = poly.cycle.iter().copied().collect();
    let forest = g.edge_subgraph((0..g.num_edges()).filter(|e| !cycle.contains(e)))?;
    let legs: Vec<usize> = poly
        .legs
        .iter()
        .map(|&l| forest.edge_index(g.edge_id(l).as_str()).expect("legs stay"))
        .collect();
    let mut generators = networks(g);
    for w in points_of_degree(&forest, 2)? {
        let leg_values: Vec<u32> = legs.iter().map(|&l| w.coeffs[l]).collect();
        let twos = leg_values.iter().filter(|&&v| v == 2).count();
        if twos % 2 == 1 && leg_values.iter().all(|&v| v == 0 || v == 2) {
            generators.push(transfer(&forest, g, &w, |_| 1));
        }
    }
    generators.sort();
    Ok(GeneratorSet {
        generators,
        method: GeneratorMethod::ClosedFormG1,
        degree_cap,
        truncation_warning: false,
    })
}

/// Keeps a point of degree `d` iff subtracting no generator of smaller
/// degree leaves a cone element.
pub fn brute_saturation(
    g: &TrivalentGraph,
    degree_cap: u32,
) -> Result<GeneratorSet, SemigroupError> {
    let mut generators: Vec<ConeElement> = Vec::new();
    for d in 1..=degree_cap {
        let found: Vec<ConeElement> = points_of_degree(g, d)?
            .into_iter()
            .filter(|w| {
                !generators.iter().any(|gen| {
                    w.checked_sub(gen)
                        .map(|rest| in_cone(g, &rest))
                        .unwrap_or(false)
                })
            })
            .collect();
        generators.extend(found);
    }
    let truncation_warning = degree_cap > 1 && generators.iter().any(|w| w.degree == degree_cap);
    Ok(GeneratorSet {
        generators,
        method: GeneratorMethod::BruteSaturation,
        degree_cap,
        truncation_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn counts(s: &GeneratorSet) -> Vec<(u32, usize)> {
        s.by_degree().iter().map(|(d, v)| (*d, v.len())).collect()
    }

    #[test]
    fn tree_counts() {
        assert_eq!(minimal_generators(&fixtures::tripod(), 4).unwrap().len(), 4);
        assert_eq!(
            minimal_generators(&fixtures::quartet(), 4).unwrap().len(),
            8
        );
        assert_eq!(
            minimal_generators(&fixtures::caterpillar6(), 4)
                .unwrap()
                .len(),
            32
        );
    }

    #[test]
    fn littleman_and_hammock() {
        let lm = minimal_generators(&fixtures::littleman(), 4).unwrap();
        assert_eq!(lm.method, GeneratorMethod::ClosedFormG1);
        assert_eq!(counts(&lm), vec![(1, 4), (2, 3)]);
        let hm = minimal_generators(&fixtures::hammock(), 4).unwrap();
        assert_eq!(counts(&hm), vec![(1, 4), (2, 2)]);
    }

    #[test]
    fn closed_form_matches_saturation() {
        for name in ["balloon", "littleman", "hammock"] {
            let g = fixtures::by_name(name).unwrap();
            let closed = closed_form_g1(&g, 4).unwrap();
            let brute = brute_saturation(&g, 4).unwrap();
            assert_eq!(closed.generators, brute.generators, "{name}");
            assert!(!brute.truncation_warning);
        }
    }

    #[test]
    fn degree_three_generator() {
        let g = fixtures::two_loops_one_leaf();
        let set = minimal_generators(&g, 4).unwrap();
        assert_eq!(set.method, GeneratorMethod::BruteSaturation);
        let w = ConeElement::parse(&g, "deg=3;loop1=1,loop2=1,s1=2,s2=2,stem=2").unwrap();
        assert!(set.generators.contains(&w));
    }

    #[test]
    fn cap_below_two_is_rejected() {
        assert_eq!(
            minimal_generators(&fixtures::tripod(), 1).unwrap_err(),
            SemigroupError::DegreeCap(1)
        );
    }
}
