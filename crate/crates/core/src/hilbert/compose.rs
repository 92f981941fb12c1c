//! Tables assembled from leaf, balloon and tripod pieces.
//!
//! The normal form is a tree once its loops are removed. Each edge seen
//! from one side carries the table of everything behind it, with one open
//! axis for the edge itself; an inner vertex grafts the tables of its two
//! far edges.

use super::{
    balloon_table, hilbert_glue, hilbert_graft, hilbert_product, leaf_table, HilbertError,
    HilbertTable,
};
use crate::graph::{caterpillar_normal_form, GraphError, TrivalentGraph};
use crate::semigroup::SemigroupError;

const OPEN: &str = "";

/// One point per value `k <= m` of a petiole whose leaf is kept as an axis.
fn diagonal(axis: &str, max_degree: u32) -> HilbertTable {
    let mut t =
        HilbertTable::new(vec![axis.to_owned(), OPEN.to_owned()], max_degree).expect("two axes");
    for m in 0..=max_degree {
        for k in 0..=m {
            t.add(m, vec![k, k], 1);
        }
    }
    t
}

fn has_loop(g: &TrivalentGraph, v: usize) -> bool {
    g.incidence(v).iter().any(|h| g.edge(h.edge).is_loop())
}

/// Table of the side of edge `e` containing `v`, with `e` as the open axis.
fn branch(
    g: &TrivalentGraph,
    e: usize,
    v: usize,
    d: u32,
    keep: &[&str],
) -> Result<HilbertTable, HilbertError> {
    if g.is_leaf(v) {
        let id = g.vertex_id(v).as_str();
        return Ok(if keep.contains(&id) {
            diagonal(id, d)
        } else {
            leaf_table(OPEN, d)
        });
    }
    if has_loop(g, v) {
        return Ok(balloon_table(OPEN, d));
    }
    let far: Vec<(usize, usize)> = g
        .incidence(v)
        .iter()
        .filter(|h| h.edge != e)
        .map(|h| (h.edge, g.other_end(*h)))
        .collect();
    let t1 = branch(g, far[0].0, far[0].1, d, keep)?;
    let t2 = branch(g, far[1].0, far[1].1, d, keep)?;
    hilbert_graft(&t1, OPEN, &t2, OPEN, OPEN)
}

/// Table of a connected graph whose only cycles are loops.
fn loop_tree_table(
    g: &TrivalentGraph,
    d: u32,
    keep: &[&str],
) -> Result<HilbertTable, HilbertError> {
    let loops = g.edges().iter().filter(|e| e.is_loop()).count();
    if loops != g.betti() {
        return Err(
            SemigroupError::Internal("normal form has a cycle that is not a loop".into()).into(),
        );
    }
    if let Some(r) = g.leaves().next() {
        let p = g.petiole_of(r).expect("a leaf has a petiole");
        let mut t = branch(g, p, g.other_end(g.incidence(r)[0]), d, keep)?;
        let id = g.vertex_id(r).as_str();
        if keep.contains(&id) {
            t.rename_axis(OPEN, id)?;
            return Ok(t);
        }
        return t.marginalize(OPEN);
    }
    let e = (0..g.num_edges())
        .find(|&e| !g.edge(e).is_loop())
        .ok_or_else(|| SemigroupError::Internal("no edge to glue along".into()))?;
    let [a, b] = g.edge(e).ends;
    let mut left = branch(g, e, a, d, keep)?;
    let mut right = branch(g, e, b, d, keep)?;
    left.rename_axis(OPEN, "#left")?;
    right.rename_axis(OPEN, "#right")?;
    hilbert_glue(&hilbert_product(&left, &right)?, "#left", "#right")
}

/// Table of a connected graph computed on its caterpillar normal form.
/// Mutations keep leaf ids, so `leaves` name the same leaves in both.
pub fn hilbert_compose(
    g: &TrivalentGraph,
    max_degree: u32,
    leaves: &[&str],
) -> Result<HilbertTable, HilbertError> {
    let comps = g.num_components();
    if comps != 1 {
        return Err(GraphError::Disconnected(comps).into());
    }
    super::leaf_petioles(g, leaves)?;
    let nf = caterpillar_normal_form(g)?;
    let t = loop_tree_table(&nf.graph, max_degree, leaves)?;
    let axes: Vec<String> = leaves.iter().map(|l| (*l).to_owned()).collect();
    t.select(&axes)
}
