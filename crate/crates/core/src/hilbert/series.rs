//! Truncated expansions of products of factors `1 - t^a s^v`.

use std::collections::BTreeMap;

use super::{HilbertError, HilbertTable};
use crate::fixtures;
use crate::graph::{is_isomorphic, TrivalentGraph};

/// The factor `1 - t^degree * s^weights`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub degree: u32,
    pub weights: Vec<u32>,
}

impl Factor {
    pub fn new(degree: u32, weights: &[u32]) -> Self {
        Factor {
            degree,
            weights: weights.to_vec(),
        }
    }
}

/// `prod(numerator) / prod(denominator)`, each factor of the form
/// `1 - t^a s^v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub axes: Vec<String>,
    pub numerator: Vec<Factor>,
    pub denominator: Vec<Factor>,
}

type Series = BTreeMap<(u32, Vec<u32>), i64>;

fn shifted(k: &[u32], f: &Factor) -> Vec<u32> {
    k.iter().zip(&f.weights).map(|(a, b)| a + b).collect()
}

impl RationalSeries {
    pub fn expand(&self, max_degree: u32) -> Result<HilbertTable, HilbertError> {
        let r = self.axes.len();
        for f in self.numerator.iter().chain(&self.denominator) {
            if f.weights.len() != r {
                return Err(HilbertError::FactorLength {
                    expected: r,
                    got: f.weights.len(),
                });
            }
            if f.degree == 0 {
                return Err(HilbertError::ZeroDegreeFactor);
            }
        }
        let mut s: Series = BTreeMap::from([((0, vec![0; r]), 1)]);
        for f in &self.numerator {
            let mut next = s.clone();
            for ((m, k), c) in &s {
                if m + f.degree <= max_degree {
                    *next.entry((m + f.degree, shifted(k, f))).or_insert(0) -= c;
                }
            }
            s = next;
        }
        for f in &self.denominator {
            // Multiplying by 1/(1 - x) adds to each term the already final
            // term one factor below it.
            for m in f.degree..=max_degree {
                let below: Vec<(Vec<u32>, i64)> = s
                    .range((m - f.degree, vec![])..(m - f.degree + 1, vec![]))
                    .map(|((_, k), c)| (shifted(k, f), *c))
                    .collect();
                for (k, c) in below {
                    *s.entry((m, k)).or_insert(0) += c;
                }
            }
        }
        let mut t = HilbertTable::new(self.axes.clone(), max_degree)?;
        for ((m, k), c) in s {
            if c < 0 {
                return Err(HilbertError::Inconsistent {
                    degree: m,
                    count: c,
                });
            }
            t.add(m, k, c as u64);
        }
        Ok(t)
    }
}

/// Expands the series of a complete intersection with the given generator
/// and relation degrees.
pub fn ci_series(
    axes: &[&str],
    generators: &[Factor],
    relations: &[Factor],
    max_degree: u32,
) -> Result<HilbertTable, HilbertError> {
    RationalSeries {
        axes: axes.iter().map(|a| (*a).to_owned()).collect(),
        numerator: relations.to_vec(),
        denominator: generators.to_vec(),
    }
    .expand(max_degree)
}

fn series(axes: &[&str], gens: &[(u32, &[u32])], rels: &[(u32, &[u32])]) -> RationalSeries {
    let f = |v: &[(u32, &[u32])]| v.iter().map(|(a, w)| Factor::new(*a, w)).collect();
    RationalSeries {
        axes: axes.iter().map(|a| (*a).to_owned()).collect(),
        numerator: f(rels),
        denominator: f(gens),
    }
}

/// Complete-intersection presentations of the small fixtures, graded by
/// their leaves.
pub fn ci_presentation(name: &str) -> Option<RationalSeries> {
    let p3 = [(1, &[][..]); 4];
    Some(match name {
        "littleman" => series(
            &["a", "b"],
            &[
                (1, &[0, 0]),
                (1, &[0, 0]),
                (1, &[1, 1]),
                (1, &[1, 1]),
                (2, &[1, 1]),
                (2, &[2, 0]),
                (2, &[0, 2]),
            ],
            &[(2, &[1, 1]), (4, &[2, 2])],
        ),
        "hammock" => series(
            &["a", "b"],
            &[
                (1, &[0, 0]),
                (1, &[0, 0]),
                (1, &[1, 1]),
                (1, &[1, 1]),
                (2, &[2, 0]),
                (2, &[0, 2]),
            ],
            &[(4, &[2, 2])],
        ),
        "dumbbell" | "theta" => series(&[], &p3, &[]),
        "tripod" => series(
            &["a", "b", "d"],
            &[
                (1, &[0, 0, 0]),
                (1, &[1, 1, 0]),
                (1, &[1, 0, 1]),
                (1, &[0, 1, 1]),
            ],
            &[],
        ),
        "balloon" => series(&["l"], &[(1, &[0]), (1, &[0]), (2, &[2])], &[]),
        _ => return None,
    })
}

/// The printed balloon series `1 / ((1 - t)(1 - s^2 t^2))`. It omits one
/// degree-one generator and undercounts from degree 2 on.
pub fn paper_literal_balloon() -> RationalSeries {
    series(&["l"], &[(1, &[0]), (2, &[2])], &[])
}

const PRESENTED: [&str; 6] = [
    "littleman",
    "hammock",
    "dumbbell",
    "theta",
    "tripod",
    "balloon",
];

/// Table from the presentation of the fixture isomorphic to `g`, with axes
/// carried over to the leaves of `g`. With `paper_literal` the printed
/// balloon series replaces the counted one.
pub fn hilbert_series(
    g: &TrivalentGraph,
    max_degree: u32,
    leaves: &[&str],
    paper_literal: bool,
) -> Result<HilbertTable, HilbertError> {
    super::leaf_petioles(g, leaves)?;
    for name in PRESENTED {
        let fixture = fixtures::by_name(name).expect("bundled fixture");
        if fixture.num_vertices() != g.num_vertices() || fixture.num_edges() != g.num_edges() {
            continue;
        }
        let Some(iso) = is_isomorphic(g, &fixture)? else {
            continue;
        };
        let presentation = if paper_literal && name == "balloon" {
            paper_literal_balloon()
        } else {
            ci_presentation(name).expect("listed")
        };
        let mut t = presentation.expand(max_degree)?;
        t.axes = t
            .axes
            .iter()
            .map(|a| {
                iso.vertices
                    .iter()
                    .find(|(_, theirs)| theirs.as_str() == a)
                    .map(|(ours, _)| ours.as_str().to_owned())
                    .expect("leaves correspond")
            })
            .collect();
        let axes: Vec<String> = leaves.iter().map(|l| (*l).to_owned()).collect();
        return t.select(&axes);
    }
    Err(HilbertError::NoPresentation)
}
