//! Mutations along internal edges and the caterpillar-with-loops normal form.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use super::{EdgeId, GraphError, HalfEdge, TrivalentGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    One,
    Two,
}

impl Variant {
    pub fn number(self) -> u8 {
        match self {
            Variant::One => 1,
            Variant::Two => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(Variant::One),
            "2" => Ok(Variant::Two),
            _ => Err(format!("variant must be 1 or 2, got `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MutationStep {
    pub edge: EdgeId,
    pub variant: Variant,
}

impl MutationStep {
    pub fn new(edge: impl Into<EdgeId>, variant: Variant) -> Self {
        MutationStep {
            edge: edge.into(),
            variant,
        }
    }
}

impl fmt::Display for MutationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.edge, self.variant)
    }
}

/// The two non-`e` half-edges at each end of `e`, each pair in (edge, side)
/// order.
fn flanks(g: &TrivalentGraph, e: usize) -> Result<[[HalfEdge; 2]; 2], GraphError> {
    let edge = g.edge(e);
    if edge.is_loop() {
        return Err(GraphError::LoopEdge(edge.id.clone()));
    }
    if g.is_petiole(e) {
        return Err(GraphError::Petiole(edge.id.clone()));
    }
    let side = |s: usize| {
        let v = edge.ends[s];
        let rest: Vec<HalfEdge> = g
            .incidence(v)
            .iter()
            .copied()
            .filter(|h| h.edge != e)
            .collect();
        [rest[0], rest[1]]
    };
    Ok([side(0), side(1)])
}

fn swap_halves(g: &TrivalentGraph, hu: HalfEdge, hw: HalfEdge) -> TrivalentGraph {
    let u = g.edge(hu.edge).ends[hu.side];
    let w = g.edge(hw.edge).ends[hw.side];
    let mut edges = g.edges().to_vec();
    edges[hu.edge].ends[hu.side] = w;
    edges[hw.edge].ends[hw.side] = u;
    let triples = edges
        .iter()
        .map(|e| {
            (
                e.id.clone(),
                g.vertex_id(e.ends[0]).clone(),
                g.vertex_id(e.ends[1]).clone(),
            )
        })
        .collect::<Vec<_>>();
    TrivalentGraph::from_edges(triples).expect("a swap keeps valencies")
}

/// Mutation along an internal non-loop edge `e = uw`: variant 1 swaps the
/// first flank half-edge at `u` with the first at `w`, variant 2 with the
/// second. Ends of `e` are taken in stored order.
pub fn mutate(g: &TrivalentGraph, step: &MutationStep) -> Result<TrivalentGraph, GraphError> {
    let e = g.require_edge(step.edge.as_str())?;
    let [fu, fw] = flanks(g, e)?;
    let hw = match step.variant {
        Variant::One => fw[0],
        Variant::Two => fw[1],
    };
    Ok(swap_halves(g, fu[0], hw))
}

/// The split of the four flank half-edges into the two sides of `e`, as an
/// unordered pair.
fn split_of(g: &TrivalentGraph, e: usize) -> Result<[BTreeSet<HalfEdge>; 2], GraphError> {
    let [a, b] = flanks(g, e)?;
    let mut s = [
        a.into_iter().collect::<BTreeSet<_>>(),
        b.into_iter().collect(),
    ];
    s.sort();
    Ok(s)
}

/// The step on `after` that restores the local split of `before` around the
/// same edge, so that mutating `after` by it gives a graph isomorphic to
/// `before` (in fact equal up to exchanging the two ends of the edge).
pub fn inverse_step(
    before: &TrivalentGraph,
    step: &MutationStep,
) -> Result<MutationStep, GraphError> {
    let after = mutate(before, step)?;
    let e = before.require_edge(step.edge.as_str())?;
    let target = split_of(before, e)?;
    for variant in [Variant::One, Variant::Two] {
        let candidate = MutationStep::new(step.edge.clone(), variant);
        let back = mutate(&after, &candidate)?;
        if split_of(&back, e)? == target {
            return Ok(candidate);
        }
    }
    unreachable!("one of the two variants restores any split")
}

/// Chooses the step along `e` that exchanges half-edge `hu` at one end with
/// `hw` at the other.
fn step_swapping(g: &TrivalentGraph, e: usize, hu: HalfEdge, hw: HalfEdge) -> MutationStep {
    let [fu, fw] = flanks(g, e).expect("internal non-loop edge");
    let (a, b) = if fu.contains(&hu) { (hu, hw) } else { (hw, hu) };
    let a_stays = if fu[0] == a { fu[1] } else { fu[0] };
    let b_stays = if fw[0] == b { fw[1] } else { fw[0] };
    let mut target = [BTreeSet::from([a_stays, b]), BTreeSet::from([b_stays, a])];
    target.sort();
    [Variant::One, Variant::Two]
        .into_iter()
        .map(|v| MutationStep::new(g.edge_id(e).clone(), v))
        .find(|step| {
            let after = mutate(g, step).expect("valid step");
            split_of(&after, e).expect("still internal") == target
        })
        .expect("every split is reachable")
}

#[derive(Clone, Debug)]
pub struct NormalForm {
    pub graph: TrivalentGraph,
    pub steps: Vec<MutationStep>,
}

/// Applies a sequence of steps.
pub fn replay(g: &TrivalentGraph, steps: &[MutationStep]) -> Result<TrivalentGraph, GraphError> {
    let mut cur = g.clone();
    for s in steps {
        cur = mutate(&cur, s)?;
    }
    Ok(cur)
}

/// Mutates a connected graph into a caterpillar whose first `g` slots carry
/// loops and whose remaining slots are leaves.
pub fn caterpillar_normal_form(g: &TrivalentGraph) -> Result<NormalForm, GraphError> {
    let comps = g.num_components();
    if comps > 1 {
        return Err(GraphError::Disconnected(comps));
    }
    normalize_components(g)
}

/// The normal form applied to every component separately.
pub fn normalize_components(g: &TrivalentGraph) -> Result<NormalForm, GraphError> {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    shrink_cycles(&mut cur, &mut steps);
    let (label, count) = cur.component_labels();
    for c in 0..count {
        let core: Vec<usize> = cur
            .inner_vertices()
            .filter(|&v| label[v] == c && !has_loop(&cur, v))
            .collect();
        if core.len() >= 2 {
            let spine = caterpillarize(&mut cur, &mut steps, &core);
            sort_slots(&mut cur, &mut steps, spine);
        }
    }
    Ok(NormalForm { graph: cur, steps })
}

fn apply(cur: &mut TrivalentGraph, steps: &mut Vec<MutationStep>, step: MutationStep) {
    *cur = mutate(cur, &step).expect("normal-form steps are valid");
    steps.push(step);
}

fn has_loop(g: &TrivalentGraph, v: usize) -> bool {
    g.incidence(v).iter().any(|h| g.edge(h.edge).is_loop())
}

/// Shortest path from `a` to `b` avoiding edge `skip`, as a list of edges.
fn path_avoiding(g: &TrivalentGraph, a: usize, b: usize, skip: usize) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.num_vertices()];
    let mut seen = vec![false; g.num_vertices()];
    seen[a] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == b {
            let mut path = Vec::new();
            let mut x = b;
            while let Some((p, e)) = prev[x] {
                path.push(e);
                x = p;
            }
            path.reverse();
            return Some(path);
        }
        for h in g.incidence(v) {
            if h.edge == skip {
                continue;
            }
            let w = g.other_end(*h);
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, h.edge));
                queue.push_back(w);
            }
        }
    }
    None
}

/// True iff the edges form one closed walk visiting each vertex once.
fn forms_cycle(g: &TrivalentGraph, edges: &[usize]) -> bool {
    let mut count = vec![0usize; g.num_vertices()];
    for &e in edges {
        for v in g.edge(e).ends {
            count[v] += 1;
        }
    }
    if count.iter().any(|&c| c != 0 && c != 2) {
        return false;
    }
    let set: BTreeSet<usize> = edges.iter().copied().collect();
    let start = g.edge(edges[0]).ends[0];
    let mut seen = BTreeSet::from([edges[0]]);
    let mut v = g.edge(edges[0]).ends[1];
    while v != start {
        let Some(h) = g
            .incidence(v)
            .iter()
            .find(|h| set.contains(&h.edge) && !seen.contains(&h.edge))
        else {
            return false;
        };
        seen.insert(h.edge);
        v = g.other_end(*h);
    }
    seen.len() == edges.len()
}

fn shrink_cycles(cur: &mut TrivalentGraph, steps: &mut Vec<MutationStep>) {
    while let Some(e) =
        (0..cur.num_edges()).find(|&e| !cur.edge(e).is_loop() && cur.is_cycle_edge(e))
    {
        let [a, b] = cur.edge(e).ends;
        let mut path = path_avoiding(cur, a, b, e).expect("cycle edge");
        // Mutating along each path edge merges it away; `e` becomes a loop.
        while let Some(&f) = path.first() {
            let rest: Vec<usize> = std::iter::once(e)
                .chain(path[1..].iter().copied())
                .collect();
            let next = [Variant::One, Variant::Two]
                .into_iter()
                .find_map(|variant| {
                    let step = MutationStep::new(cur.edge_id(f).clone(), variant);
                    let g2 = mutate(cur, &step).ok()?;
                    forms_cycle(&g2, &rest).then_some((step, g2))
                });
            let (step, g2) = next.expect("one variant shortens the cycle");
            *cur = g2;
            steps.push(step);
            path.remove(0);
        }
    }
}

/// Longest path in the tree spanned by `core` (inner vertices without
/// loops), found by two breadth-first sweeps.
fn core_path(g: &TrivalentGraph, core: &[usize]) -> Vec<usize> {
    let in_core: BTreeSet<usize> = core.iter().copied().collect();
    let sweep = |s: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; g.num_vertices()];
        prev[s] = s;
        let mut order = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for h in g.incidence(v) {
                let w = g.other_end(*h);
                if in_core.contains(&w) && prev[w] == usize::MAX {
                    prev[w] = v;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![*order.last().expect("nonempty")];
        while prev[*path.last().unwrap()] != *path.last().unwrap() {
            path.push(prev[*path.last().unwrap()]);
        }
        path
    };
    let far = sweep(core[0])[0];
    sweep(far)
}

fn adjacent(g: &TrivalentGraph, u: usize, w: usize) -> bool {
    g.incidence(u).iter().any(|h| g.other_end(*h) == w)
}

fn edge_between(g: &TrivalentGraph, u: usize, w: usize) -> HalfEdge {
    *g.incidence(u)
        .iter()
        .find(|h| g.other_end(**h) == w)
        .expect("adjacent")
}

/// Moves every off-spine core vertex onto the spine. Returns the spine.
fn caterpillarize(
    cur: &mut TrivalentGraph,
    steps: &mut Vec<MutationStep>,
    core: &[usize],
) -> Vec<usize> {
    let in_core: BTreeSet<usize> = core.iter().copied().collect();
    let mut spine = core_path(cur, core);
    loop {
        let on_spine: BTreeSet<usize> = spine.iter().copied().collect();
        let found = spine.iter().enumerate().find_map(|(i, &u)| {
            cur.incidence(u).iter().find_map(|h| {
                let w = cur.other_end(*h);
                (in_core.contains(&w) && !on_spine.contains(&w)).then_some((i, u, w, *h))
            })
        });
        let Some((i, u, w, h)) = found else {
            return spine;
        };
        if i == 0 || i + 1 == spine.len() {
            // An end with an off-spine neighbour: extend the spine.
            if i == 0 {
                spine.insert(0, w);
            } else {
                spine.push(w);
            }
            continue;
        }
        let next = spine[i + 1];
        let toward_next = edge_between(cur, u, next);
        let e = h.edge;
        let child = *cur
            .incidence(w)
            .iter()
            .find(|x| x.edge != e)
            .expect("inner vertex");
        let step = step_swapping(cur, e, toward_next, child);
        apply(cur, steps, step);
        spine.insert(i + 1, w);
        // The step may leave the two ends with each other's names.
        if !adjacent(cur, spine[i - 1], u) {
            spine.swap(i, i + 1);
        }
    }
}

/// Non-spine half-edges at a spine vertex, with whether each leads to a loop.
fn slots(g: &TrivalentGraph, spine: &[usize], i: usize) -> Vec<(HalfEdge, bool)> {
    let v = spine[i];
    let neighbours: Vec<usize> = [i.checked_sub(1), Some(i + 1)]
        .into_iter()
        .flatten()
        .filter_map(|j| spine.get(j).copied())
        .collect();
    g.incidence(v)
        .iter()
        .filter(|h| !neighbours.contains(&g.other_end(**h)))
        .map(|h| (*h, has_loop(g, g.other_end(*h))))
        .collect()
}

fn inversions(g: &TrivalentGraph, spine: &[usize]) -> usize {
    let mut leaves_before = 0;
    let mut total = 0;
    for i in 0..spine.len() {
        let s = slots(g, spine, i);
        let loops = s.iter().filter(|x| x.1).count();
        total += loops * leaves_before;
        leaves_before += s.len() - loops;
    }
    total
}

/// Bubbles loop slots to the front of the spine by mutations along spine
/// edges.
fn sort_slots(cur: &mut TrivalentGraph, steps: &mut Vec<MutationStep>, mut spine: Vec<usize>) {
    let reversed: Vec<usize> = spine.iter().rev().copied().collect();
    if inversions(cur, &reversed) < inversions(cur, &spine) {
        spine = reversed;
    }
    loop {
        let swap = (0..spine.len() - 1).find_map(|i| {
            let leaf = slots(cur, &spine, i).into_iter().find(|x| !x.1)?;
            let lp = slots(cur, &spine, i + 1).into_iter().find(|x| x.1)?;
            Some((i, leaf.0, lp.0))
        });
        let Some((i, hu, hw)) = swap else {
            return;
        };
        let e = edge_between(cur, spine[i], spine[i + 1]).edge;
        let step = step_swapping(cur, e, hu, hw);
        apply(cur, steps, step);
        // The loop slot should now hang at `spine[i]`; if the ends traded
        // names, so does the spine.
        if !cur.edge(hw.edge).ends.contains(&spine[i]) {
            spine.swap(i, i + 1);
        }
    }
}

/// The normal form itself: a caterpillar with `n + g` slots, loops on the
/// first `g`. Requires `n + g >= 2`; with `n + g == 2` this is a bare edge
/// (`g == 0`), a balloon or the dumbbell.
pub fn caterpillar_with_loops(n: usize, g: usize) -> TrivalentGraph {
    let slots = n + g;
    assert!(slots >= 2, "need at least two slots");
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let attach = |edges: &mut Vec<(String, String, String)>, slot: usize, at: String| {
        if slot < g {
            let hub = format!("o{}", slot + 1);
            edges.push((format!("s{}", slot + 1), at, hub.clone()));
            edges.push((format!("loop{}", slot + 1), hub.clone(), hub));
        } else {
            edges.push((
                format!("p{}", slot - g + 1),
                at,
                format!("l{}", slot - g + 1),
            ));
        }
    };
    if slots == 2 {
        if g == 0 {
            return TrivalentGraph::bare_edge("p1", "l1", "l2");
        }
        edges.push(("loop1".into(), "o1".into(), "o1".into()));
        if g == 2 {
            edges.push(("loop2".into(), "o2".into(), "o2".into()));
            edges.push(("s1".into(), "o1".into(), "o2".into()));
        } else {
            edges.push(("p1".into(), "o1".into(), "l1".into()));
        }
        return TrivalentGraph::from_edges(edges).expect("valid");
    }
    let r = slots - 2;
    let spine = |i: usize| format!("v{i}");
    attach(&mut edges, 0, spine(1));
    attach(&mut edges, 1, spine(1));
    for i in 2..=r {
        edges.push((format!("t{}", i - 1), spine(i - 1), spine(i)));
        attach(&mut edges, i, spine(i));
    }
    attach(&mut edges, slots - 1, spine(r));
    TrivalentGraph::from_edges(edges).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::is_isomorphic;

    fn iso(a: &TrivalentGraph, b: &TrivalentGraph) -> bool {
        is_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn hammock_to_littleman() {
        let h = fixtures::hammock();
        let hits: Vec<bool> = [Variant::One, Variant::Two]
            .iter()
            .map(|&v| {
                iso(
                    &mutate(&h, &MutationStep::new("c1", v)).unwrap(),
                    &fixtures::littleman(),
                )
            })
            .collect();
        assert!(hits.contains(&true));
    }

    #[test]
    fn littleman_bar_gives_hammock_both_ways() {
        let lm = fixtures::littleman();
        for v in [Variant::One, Variant::Two] {
            let m = mutate(&lm, &MutationStep::new("bar", v)).unwrap();
            assert!(iso(&m, &fixtures::hammock()));
        }
    }

    #[test]
    fn mutate_rejects_loops_and_petioles() {
        let lm = fixtures::littleman();
        assert!(matches!(
            mutate(&lm, &MutationStep::new("loop", Variant::One)),
            Err(GraphError::LoopEdge(_))
        ));
        assert!(matches!(
            mutate(&lm, &MutationStep::new("p3", Variant::One)),
            Err(GraphError::Petiole(_))
        ));
        assert!(matches!(
            mutate(&lm, &MutationStep::new("zz", Variant::One)),
            Err(GraphError::UnknownEdge(_))
        ));
    }

    #[test]
    fn inverse_step_restores() {
        let q = fixtures::quartet();
        for v in [Variant::One, Variant::Two] {
            let step = MutationStep::new("mid", v);
            let after = mutate(&q, &step).unwrap();
            let inv = inverse_step(&q, &step).unwrap();
            assert!(iso(&mutate(&after, &inv).unwrap(), &q));
            assert_eq!(
                split_of(&mutate(&after, &inv).unwrap(), 0).unwrap(),
                split_of(&q, 0).unwrap()
            );
        }
    }

    #[test]
    fn quartet_mutations_give_the_three_splits() {
        let q = fixtures::quartet();
        let mid = q.edge_index("mid").unwrap();
        let mut splits = vec![split_of(&q, mid).unwrap()];
        for v in [Variant::One, Variant::Two] {
            splits.push(split_of(&mutate(&q, &MutationStep::new("mid", v)).unwrap(), mid).unwrap());
        }
        splits.sort();
        splits.dedup();
        assert_eq!(splits.len(), 3);
    }

    #[test]
    fn normal_forms_of_fixtures() {
        let nf = caterpillar_normal_form(&fixtures::hammock()).unwrap();
        assert!(!nf.steps.is_empty());
        assert!(iso(&nf.graph, &fixtures::littleman()));

        let nf = caterpillar_normal_form(&fixtures::littleman()).unwrap();
        assert!(nf.steps.is_empty());
        assert_eq!(nf.graph, fixtures::littleman());

        let nf = caterpillar_normal_form(&fixtures::theta()).unwrap();
        assert!(iso(&nf.graph, &fixtures::dumbbell()));
    }

    #[test]
    fn hexagon_normal_form() {
        let g = fixtures::hexagon();
        let nf = caterpillar_normal_form(&g).unwrap();
        assert!(iso(&nf.graph, &caterpillar_with_loops(6, 1)));
        assert_eq!(replay(&g, &nf.steps).unwrap(), nf.graph);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = crate::graph::disjoint_union(&fixtures::tripod(), &fixtures::tripod());
        assert_eq!(
            caterpillar_normal_form(&g).unwrap_err(),
            GraphError::Disconnected(2)
        );
        assert!(normalize_components(&g).is_ok());
    }

    #[test]
    fn canonical_caterpillars() {
        assert!(iso(&caterpillar_with_loops(2, 1), &fixtures::littleman()));
        assert!(iso(&caterpillar_with_loops(0, 2), &fixtures::dumbbell()));
        assert!(iso(&caterpillar_with_loops(1, 1), &fixtures::balloon()));
        assert!(iso(
            &caterpillar_with_loops(1, 2),
            &fixtures::two_loops_one_leaf()
        ));
        assert!(iso(
            &caterpillar_with_loops(6, 0),
            &fixtures::caterpillar6()
        ));
        assert!(iso(&caterpillar_with_loops(3, 0), &fixtures::tripod()));
    }
}
