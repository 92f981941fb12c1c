//! Multigraded Hilbert functions of graph models.
//!
//! A [`HilbertTable`] counts cone points by degree and by the petiole
//! coefficients at a chosen list of leaves (the axes). Tables come from
//! direct enumeration, from gluing and grafting smaller tables, or from
//! expanding a rational series.

mod compose;
mod invariance;
mod series;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, TrivalentGraph};
use crate::semigroup::{points_of_degree_with, EnumOptions, SemigroupError};

pub use compose::hilbert_compose;
pub use invariance::{verify_mutation_invariance, Discrepancy, InvarianceReport};
pub use series::{
    ci_presentation, ci_series, hilbert_series, paper_literal_balloon, Factor, RationalSeries,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("{0} is not a leaf")]
    NotALeaf(String),
    #[error("axis {0} is not in the table")]
    UnknownAxis(String),
    #[error("axis {0} appears twice")]
    DuplicateAxis(String),
    #[error("truncation bounds differ: {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("factor has {got} leaf exponents but the series has {expected} axes")]
    FactorLength { expected: usize, got: usize },
    #[error("factor of degree 0 has no truncated expansion")]
    ZeroDegreeFactor,
    #[error(
        "series expansion has coefficient {count} at m={degree}; the presentation is inconsistent"
    )]
    Inconsistent { degree: u32, count: i64 },
    #[error("no complete-intersection presentation is known for this graph")]
    NoPresentation,
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Counts indexed by degree `m` and per-axis values `k`, for `m <= max_degree`.
/// Absent keys count zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub axes: Vec<String>,
    pub max_degree: u32,
    pub counts: BTreeMap<(u32, Vec<u32>), u64>,
}

impl HilbertTable {
    pub fn new(axes: Vec<String>, max_degree: u32) -> Result<Self, HilbertError> {
        for (i, a) in axes.iter().enumerate() {
            if axes[..i].contains(a) {
                return Err(HilbertError::DuplicateAxis(a.clone()));
            }
        }
        Ok(HilbertTable {
            axes,
            max_degree,
            counts: BTreeMap::new(),
        })
    }

    pub fn get(&self, m: u32, k: &[u32]) -> u64 {
        self.counts.get(&(m, k.to_vec())).copied().unwrap_or(0)
    }

    fn add(&mut self, m: u32, k: Vec<u32>, c: u64) {
        if c > 0 {
            *self.counts.entry((m, k)).or_insert(0) += c;
        }
    }

    /// Total count in each degree `0..=max_degree`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.max_degree as usize + 1];
        for ((m, _), c) in &self.counts {
            out[*m as usize] += c;
        }
        out
    }

    pub fn axis(&self, name: &str) -> Result<usize, HilbertError> {
        self.axes
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| HilbertError::UnknownAxis(name.to_owned()))
    }

    /// Sums out one axis.
    pub fn marginalize(&self, name: &str) -> Result<Self, HilbertError> {
        self.axis(name)?;
        let keep: Vec<String> = self.axes.iter().filter(|a| *a != name).cloned().collect();
        self.select(&keep)
    }

    /// Keeps exactly `axes`, in that order, summing out the rest.
    pub fn select(&self, axes: &[String]) -> Result<Self, HilbertError> {
        let idx: Vec<usize> = axes
            .iter()
            .map(|a| self.axis(a))
            .collect::<Result<_, _>>()?;
        let mut out = HilbertTable::new(axes.to_vec(), self.max_degree)?;
        for ((m, k), c) in &self.counts {
            out.add(*m, idx.iter().map(|&i| k[i]).collect(), *c);
        }
        Ok(out)
    }

    pub fn rename_axis(&mut self, from: &str, to: &str) -> Result<(), HilbertError> {
        let i = self.axis(from)?;
        if from != to && self.axes.iter().any(|a| a == to) {
            return Err(HilbertError::DuplicateAxis(to.to_owned()));
        }
        self.axes[i] = to.to_owned();
        Ok(())
    }

    /// The same table cut down to degrees `<= d`.
    pub fn truncate(&self, d: u32) -> Self {
        HilbertTable {
            axes: self.axes.clone(),
            max_degree: d.min(self.max_degree),
            counts: self
                .counts
                .iter()
                .filter(|((m, _), _)| *m <= d)
                .map(|(k, c)| (k.clone(), *c))
                .collect(),
        }
    }

    /// Lines `m=2: 12` without axes, otherwise `m=2 a=0 b=2: 3`, in
    /// lexicographic order of `(m, k)`. Numbers are right-aligned to the
    /// width of the largest degree.
    pub fn to_table(&self) -> String {
        let w = self.max_degree.to_string().len();
        let mut s = String::new();
        if self.axes.is_empty() {
            for (m, c) in self.totals().iter().enumerate() {
                let _ = writeln!(s, "m={m:>w$}: {c}");
            }
            return s;
        }
        let _ = writeln!(s, "# axes: {}", self.axes.join(" "));
        for ((m, k), c) in &self.counts {
            let _ = write!(s, "m={m:>w$}");
            for (a, v) in self.axes.iter().zip(k) {
                let _ = write!(s, " {a}={v:>w$}");
            }
            let _ = writeln!(s, ": {c}");
        }
        s
    }

    /// `{"D": .., "axes": [..], "entries": [[m, [k..], count], ..]}`.
    pub fn to_json(&self) -> String {
        let entries: Vec<serde_json::Value> = self
            .counts
            .iter()
            .map(|((m, k), c)| serde_json::json!([m, k, c]))
            .collect();
        serde_json::json!({
            "D": self.max_degree,
            "axes": self.axes,
            "entries": entries,
        })
        .to_string()
    }
}

fn leaf_petioles(g: &TrivalentGraph, leaves: &[&str]) -> Result<Vec<usize>, HilbertError> {
    leaves
        .iter()
        .map(|l| {
            g.vertex_index(l)
                .and_then(|v| g.petiole_of(v))
                .ok_or_else(|| HilbertError::NotALeaf((*l).to_owned()))
        })
        .collect()
}

/// Counts cone points of every degree up to `max_degree`, bucketed by the
/// petiole coefficients at `leaves`.
pub fn hilbert_brute(
    g: &TrivalentGraph,
    max_degree: u32,
    leaves: &[&str],
) -> Result<HilbertTable, HilbertError> {
    hilbert_brute_with(g, max_degree, leaves, &EnumOptions::default())
}

pub fn hilbert_brute_with(
    g: &TrivalentGraph,
    max_degree: u32,
    leaves: &[&str],
    opts: &EnumOptions,
) -> Result<HilbertTable, HilbertError> {
    let petioles = leaf_petioles(g, leaves)?;
    let mut t = HilbertTable::new(leaves.iter().map(|l| (*l).to_owned()).collect(), max_degree)?;
    for m in 0..=max_degree {
        for w in points_of_degree_with(g, m, opts)? {
            t.add(m, petioles.iter().map(|&e| w.coeffs[e]).collect(), 1);
        }
    }
    Ok(t)
}

/// Table of a single edge seen from one leaf: one point for each value `<= m`.
pub fn leaf_table(axis: &str, max_degree: u32) -> HilbertTable {
    let mut t = HilbertTable::new(vec![axis.to_owned()], max_degree).expect("one axis");
    for m in 0..=max_degree {
        for k in 0..=m {
            t.add(m, vec![k], 1);
        }
    }
    t
}

/// Table of the loop with one petiole: `m - k + 1` points for even `k <= m`.
pub fn balloon_table(axis: &str, max_degree: u32) -> HilbertTable {
    let mut t = HilbertTable::new(vec![axis.to_owned()], max_degree).expect("one axis");
    for m in 0..=max_degree {
        for k in (0..=m).step_by(2) {
            t.add(m, vec![k], (m - k + 1) as u64);
        }
    }
    t
}

fn tripod_ok(m: u32, a: u32, b: u32, c: u32) -> bool {
    let s = a + b + c;
    s % 2 == 0 && s <= 2 * m && 2 * a <= s && 2 * b <= s && 2 * c <= s
}

/// Table of the tripod on three named axes.
pub fn tripod_table(axes: [&str; 3], max_degree: u32) -> Result<HilbertTable, HilbertError> {
    let mut t = HilbertTable::new(axes.iter().map(|a| (*a).to_owned()).collect(), max_degree)?;
    for m in 0..=max_degree {
        for a in 0..=m {
            for b in 0..=m {
                for c in 0..=m {
                    if tripod_ok(m, a, b, c) {
                        t.add(m, vec![a, b, c], 1);
                    }
                }
            }
        }
    }
    Ok(t)
}

/// Table of the disjoint union: counts multiply degree by degree.
pub fn hilbert_product(t1: &HilbertTable, t2: &HilbertTable) -> Result<HilbertTable, HilbertError> {
    if t1.max_degree != t2.max_degree {
        return Err(HilbertError::DegreeMismatch(t1.max_degree, t2.max_degree));
    }
    let mut t = HilbertTable::new([t1.axes.clone(), t2.axes.clone()].concat(), t1.max_degree)?;
    for m in 0..=t1.max_degree {
        let right: Vec<(&Vec<u32>, &u64)> = t2
            .counts
            .range((m, vec![])..(m + 1, vec![]))
            .map(|((_, k), c)| (k, c))
            .collect();
        for ((_, k1), c1) in t1.counts.range((m, vec![])..(m + 1, vec![])) {
            for (k2, c2) in &right {
                t.add(m, [k1.as_slice(), k2.as_slice()].concat(), c1 * *c2);
            }
        }
    }
    Ok(t)
}

/// Joins the leaves behind axes `a1` and `a2` into one edge: keeps the
/// entries whose two values agree and drops both axes.
pub fn hilbert_glue(t: &HilbertTable, a1: &str, a2: &str) -> Result<HilbertTable, HilbertError> {
    let (i, j) = (t.axis(a1)?, t.axis(a2)?);
    if i == j {
        return Err(HilbertError::DuplicateAxis(a1.to_owned()));
    }
    let keep: Vec<usize> = (0..t.axes.len()).filter(|&x| x != i && x != j).collect();
    let mut out = HilbertTable::new(
        keep.iter().map(|&x| t.axes[x].clone()).collect(),
        t.max_degree,
    )?;
    for ((m, k), c) in &t.counts {
        if k[i] == k[j] {
            out.add(*m, keep.iter().map(|&x| k[x]).collect(), *c);
        }
    }
    Ok(out)
}

/// Table of the graft: a new inner vertex joins the leaves behind `a1` (in
/// `t1`) and `a2` (in `t2`) and carries a new leaf with axis `new_axis`.
/// Axes are those of `t1` without `a1`, then `t2` without `a2`, then
/// `new_axis`.
pub fn hilbert_graft(
    t1: &HilbertTable,
    a1: &str,
    t2: &HilbertTable,
    a2: &str,
    new_axis: &str,
) -> Result<HilbertTable, HilbertError> {
    if t1.max_degree != t2.max_degree {
        return Err(HilbertError::DegreeMismatch(t1.max_degree, t2.max_degree));
    }
    let (i1, i2) = (t1.axis(a1)?, t2.axis(a2)?);
    let rest1: Vec<usize> = (0..t1.axes.len()).filter(|&x| x != i1).collect();
    let rest2: Vec<usize> = (0..t2.axes.len()).filter(|&x| x != i2).collect();
    let axes: Vec<String> = rest1
        .iter()
        .map(|&x| t1.axes[x].clone())
        .chain(rest2.iter().map(|&x| t2.axes[x].clone()))
        .chain([new_axis.to_owned()])
        .collect();
    let mut out = HilbertTable::new(axes, t1.max_degree)?;
    let split = |t: &HilbertTable,
                 i: usize,
                 rest: &[usize],
                 m: u32|
     -> BTreeMap<u32, Vec<(Vec<u32>, u64)>> {
        let mut by: BTreeMap<u32, Vec<(Vec<u32>, u64)>> = BTreeMap::new();
        for ((_, k), c) in t.counts.range((m, vec![])..(m + 1, vec![])) {
            by.entry(k[i])
                .or_default()
                .push((rest.iter().map(|&x| k[x]).collect(), *c));
        }
        by
    };
    for m in 0..=t1.max_degree {
        let left = split(t1, i1, &rest1, m);
        let right = split(t2, i2, &rest2, m);
        for (&j1, l) in &left {
            for (&j2, r) in &right {
                for k in 0..=m {
                    if !tripod_ok(m, j1, j2, k) {
                        continue;
                    }
                    for (k1, c1) in l {
                        for (k2, c2) in r {
                            out.add(m, [k1.as_slice(), k2.as_slice(), &[k]].concat(), c1 * c2);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The two-case closed forms printed for grafting a balloon onto a
/// one-axis table `f`, read with `a` as the value on the grafted leaf of
/// `f` and `k` as the new leaf. Kept for comparison with [`hilbert_graft`];
/// the two disagree.
pub fn printed_balloon_star(f: &HilbertTable, m: u32, k: u32) -> i64 {
    let f = |a: u32| f.get(m, &[a]) as i64;
    let (m, k) = (m as i64, k as i64);
    let term = |lo: i64, hi: i64, w: &dyn Fn(i64) -> i64| -> i64 {
        (lo.max(0)..=hi.min(m))
            .filter(|a| (k + a) % 2 == 0)
            .map(|a| f(a as u32) * w(a))
            .sum()
    };
    if 2 * k <= m {
        (m - k + 1) * term(0, m - k - 1, &|a| a + 1)
            + (k + 1) * term(m - k, k, &|a| m + 2 - a)
            + k * term(k + 1, m, &|a| m + 1 - a)
    } else {
        (m - k + 1) * term(0, m - k - 1, &|a| a + 1)
            + (m - k + 1) * term(m - k, k, &|a| 2 * m - 2 * k - a + 1)
            + (m - k) * term(k + 1, m, &|a| 2 * m - 2 * k - a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn littleman_totals() {
        let t = hilbert_brute(&fixtures::littleman(), 7, &[]).unwrap();
        assert_eq!(t.totals(), vec![1, 4, 12, 28, 57, 104, 176, 280]);
        assert!(t.to_table().contains("m=2: 12\n"));
    }

    #[test]
    fn dumbbell_totals() {
        let t = hilbert_brute(&fixtures::dumbbell(), 7, &[]).unwrap();
        assert_eq!(t.totals(), vec![1, 4, 10, 20, 35, 56, 84, 120]);
    }

    #[test]
    fn balloon_brute_matches_base_table() {
        let t = hilbert_brute(&fixtures::balloon(), 6, &["l"]).unwrap();
        assert_eq!(t, balloon_table("l", 6));
        assert_eq!(t.totals(), vec![1, 2, 4, 6, 9, 12, 16]);
    }

    #[test]
    fn tripod_formula_matches_brute() {
        let t = hilbert_brute(&fixtures::tripod(), 5, &["a", "b", "d"]).unwrap();
        assert_eq!(t, tripod_table(["a", "b", "d"], 5).unwrap());
        assert_eq!(t.get(1, &[1, 1, 0]), 1);
        assert_eq!(t.get(1, &[1, 1, 1]), 0);
        assert!((0..=5).all(|m| t.get(m, &[0, 0, 0]) == 1));
    }

    #[test]
    fn graft_of_two_leaves_is_the_tripod() {
        let t = hilbert_graft(&leaf_table("x", 4), "x", &leaf_table("y", 4), "y", "z").unwrap();
        assert_eq!(
            t.totals(),
            tripod_table(["p", "q", "r"], 4)
                .unwrap()
                .select(&[])
                .unwrap()
                .totals()
        );
        assert_eq!(t.axes, ["z"]);
    }

    #[test]
    fn graft_of_two_balloons() {
        let t = hilbert_graft(
            &balloon_table("l", 3),
            "l",
            &balloon_table("l2", 3),
            "l2",
            "new",
        )
        .unwrap();
        let brute = hilbert_brute(&fixtures::two_loops_one_leaf(), 3, &["l"]).unwrap();
        assert_eq!(t.totals(), brute.totals());
        let mut t = t;
        t.rename_axis("new", "l").unwrap();
        assert_eq!(t, brute);
    }

    #[test]
    fn zero_truncation() {
        let t = hilbert_graft(&balloon_table("l", 0), "l", &leaf_table("x", 0), "x", "n").unwrap();
        assert_eq!(t.counts, BTreeMap::from([((0, vec![0]), 1)]));
    }

    #[test]
    fn glue_quartet_into_littleman() {
        let q = fixtures::quartet();
        let t = hilbert_brute(&q, 5, &["l1", "l2", "l3", "l4"]).unwrap();
        let glued = hilbert_glue(&t, "l1", "l2").unwrap();
        assert_eq!(glued.select(&[]).unwrap().totals()[1], 4);
        let lm = hilbert_brute(&fixtures::littleman(), 5, &["a", "b"]).unwrap();
        let mut other = hilbert_glue(&t, "l1", "l3").unwrap();
        other.rename_axis("l2", "a").unwrap();
        other.rename_axis("l4", "b").unwrap();
        assert_eq!(other, lm);
    }

    #[test]
    fn marginalize_drops_an_axis() {
        let g = fixtures::quartet();
        let full = hilbert_brute(&g, 4, &["l1", "l3"]).unwrap();
        assert_eq!(
            full.marginalize("l3").unwrap(),
            hilbert_brute(&g, 4, &["l1"]).unwrap()
        );
    }

    #[test]
    fn glue_of_empty_table_is_empty() {
        let t = HilbertTable::new(vec!["a".into(), "b".into()], 3).unwrap();
        assert!(hilbert_glue(&t, "a", "b").unwrap().counts.is_empty());
    }

    #[test]
    fn table_alignment() {
        let t = hilbert_brute(&fixtures::balloon(), 10, &["l"]).unwrap();
        let text = t.to_table();
        assert!(text.contains("m= 2 l= 2: 1\n"), "{text}");
        assert!(text.contains("m=10 l=10: 1\n"));
    }

    #[test]
    fn json_shape() {
        let t = hilbert_brute(&fixtures::balloon(), 1, &["l"]).unwrap();
        assert_eq!(
            t.to_json(),
            r#"{"D":1,"axes":["l"],"entries":[[0,[0],1],[1,[0],2]]}"#
        );
    }

    #[test]
    fn unknown_leaf_is_rejected() {
        let err = hilbert_brute(&fixtures::littleman(), 2, &["u"]).unwrap_err();
        assert_eq!(err, HilbertError::NotALeaf("u".into()));
    }

    #[test]
    fn printed_balloon_star_disagrees_with_graft() {
        let f = leaf_table("x", 4);
        let t = hilbert_graft(&balloon_table("l", 4), "l", &f, "x", "k").unwrap();
        assert_eq!(t.get(0, &[0]), 1);
        assert_eq!(printed_balloon_star(&f, 0, 0), 2);
    }
}
