//! Decomposition of cone elements into generators for first Betti number at
//! most one.
//!
//! Forests are split into networks by stacking local paths in layers. For a
//! graph with one cycle the labels on the cycle and its legs are peeled off
//! in pieces of degree one or two on the polygon graph, the degree-two pieces
//! are split into networks where possible, and the pendant forests are
//! distributed over the pieces.

use std::collections::{BTreeSet, VecDeque};

use super::polygon::Polygon;
use super::SemigroupError;
use crate::cone::{check_cone, ConeElement, LocalTriple};
use crate::graph::{cut_edge, TrivalentGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Parts sorted by degree, then coefficients.
    pub parts: Vec<ConeElement>,
}

impl Decomposition {
    pub fn degrees(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p.degree).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Decomposable([ConeElement; 2]),
    Indecomposable,
}

fn far_end(g: &TrivalentGraph, e: usize, v: usize) -> usize {
    let [a, b] = g.edge(e).ends;
    if a == v {
        b
    } else {
        a
    }
}

#[derive(Clone, Debug)]
enum Step {
    Root([usize; 3]),
    Walk { incoming: usize, out: [usize; 2] },
}

/// A breadth-first traversal of a forest, fixed once so that many elements
/// can be split into layers without touching the graph again.
#[derive(Clone, Debug)]
struct LayerPlan {
    num_edges: usize,
    steps: Vec<Step>,
    bare: Vec<usize>,
}

impl LayerPlan {
    fn new(g: &TrivalentGraph) -> Self {
        let mut steps = Vec::new();
        let mut done = vec![false; g.num_vertices()];
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        let roots: Vec<usize> = g.inner_vertices().collect();
        for r in roots {
            if done[r] {
                continue;
            }
            let h = g.incidence(r);
            let t = [h[0].edge, h[1].edge, h[2].edge];
            steps.push(Step::Root(t));
            done[r] = true;
            queue.extend(t.iter().map(|&e| (far_end(g, e, r), e)));
            while let Some((v, incoming)) = queue.pop_front() {
                if std::mem::replace(&mut done[v], true) || g.is_leaf(v) {
                    continue;
                }
                let out: Vec<usize> = g
                    .incidence(v)
                    .iter()
                    .map(|h| h.edge)
                    .filter(|&e| e != incoming)
                    .collect();
                steps.push(Step::Walk {
                    incoming,
                    out: [out[0], out[1]],
                });
                queue.extend(out.iter().map(|&e| (far_end(g, e, v), e)));
            }
        }
        LayerPlan {
            num_edges: g.num_edges(),
            steps,
            bare: g.bare_edges().collect(),
        }
    }

    /// Splits labels `c` of degree `m` into `m` networks (some possibly
    /// empty). The labels must lie in the cone.
    fn run(&self, c: &[u32], m: u32) -> Result<Vec<ConeElement>, SemigroupError> {
        let bad = || SemigroupError::Internal("layering met labels outside the cone".into());
        let mut layers: Vec<Vec<u32>> = vec![Vec::new(); self.num_edges];
        for step in &self.steps {
            match *step {
                Step::Root([e0, e1, e2]) => {
                    let t = LocalTriple::new(c[e0], c[e1], c[e2]).ok_or_else(bad)?;
                    let (z, y, x) = (t.z, t.y, t.x);
                    let ab: Vec<u32> = (0..z).collect();
                    let ac: Vec<u32> = (z..z + y).collect();
                    let bc: Vec<u32> = (z + y..z + y + x).collect();
                    if z + y + x > m {
                        return Err(bad());
                    }
                    layers[e0] = merge(&ab, &ac);
                    layers[e1] = merge(&ab, &bc);
                    layers[e2] = merge(&ac, &bc);
                }
                Step::Walk {
                    incoming,
                    out: [e1, e2],
                } => {
                    let inc = layers[incoming].clone();
                    let t = LocalTriple::new(inc.len() as u32, c[e1], c[e2]).ok_or_else(bad)?;
                    let (to_e1, to_e2) = inc.split_at(t.z as usize);
                    let fresh: Vec<u32> = (0..m)
                        .filter(|l| !inc.contains(l))
                        .take(t.x as usize)
                        .collect();
                    if fresh.len() != t.x as usize {
                        return Err(SemigroupError::Internal("not enough free layers".into()));
                    }
                    layers[e1] = merge(to_e1, &fresh);
                    layers[e2] = merge(to_e2, &fresh);
                }
            }
        }
        for &e in &self.bare {
            layers[e] = (0..c[e]).collect();
        }
        let mut nets = vec![
            ConeElement {
                degree: 1,
                coeffs: vec![0; self.num_edges],
            };
            m as usize
        ];
        for (e, l) in layers.iter().enumerate() {
            for &j in l {
                nets[j as usize].coeffs[e] = 1;
            }
        }
        Ok(nets)
    }
}

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

/// Splits an element of a forest into `degree` networks (some possibly
/// empty), returned as degree-one elements.
pub fn layer_decompose(
    g: &TrivalentGraph,
    w: &ConeElement,
) -> Result<Vec<ConeElement>, SemigroupError> {
    let betti = g.betti();
    if betti != 0 {
        return Err(SemigroupError::Betti(betti));
    }
    check_cone(g, w)?;
    LayerPlan::new(g).run(&w.coeffs, w.degree)
}

/// Local path numbers at `vertices[i]` as `(x, y, z, deg)`: `x` joins the leg
/// to the outgoing cycle edge, `y` the leg to the incoming one and `z` the
/// two cycle edges.
fn local(poly: &Polygon, w: &ConeElement, i: usize) -> (u32, u32, u32, u32) {
    let (a, b, l) = poly.labels(w, i);
    let s = a + b + l;
    (s / 2 - a, s / 2 - b, s / 2 - l, s / 2)
}

/// A polygon graph with layer plans for the tree left by cutting each
/// cycle edge.
struct PolyCtx {
    p: TrivalentGraph,
    poly: Polygon,
    /// Per cycle position: the plan on the cut graph and, for each of its
    /// edges, the edge of `p` it came from.
    cuts: Vec<(LayerPlan, Vec<usize>)>,
}

impl PolyCtx {
    fn new(p: TrivalentGraph) -> Result<Self, SemigroupError> {
        let poly = Polygon::of(&p)?;
        let cuts = poly
            .cycle
            .iter()
            .map(|&c| {
                let cut = cut_edge(&p, p.edge_id(c).as_str())?;
                let from_p = cut
                    .graph
                    .edge_ids()
                    .map(|id| p.edge_index(id.as_str()).unwrap_or(c))
                    .collect();
                Ok((LayerPlan::new(&cut.graph), from_p))
            })
            .collect::<Result<_, SemigroupError>>()?;
        Ok(PolyCtx { p, poly, cuts })
    }
}

/// Splits an element of a polygon graph whose cycle edge at position `i` is
/// zero into networks via the tree left by cutting it.
fn split_at_zero(
    ctx: &PolyCtx,
    w: &ConeElement,
    i: usize,
) -> Result<Vec<ConeElement>, SemigroupError> {
    let (plan, from_p) = &ctx.cuts[i];
    let lifted: Vec<u32> = from_p.iter().map(|&e| w.coeffs[e]).collect();
    Ok(plan
        .run(&lifted, w.degree)?
        .iter()
        .map(|n| {
            let mut out = ConeElement::zero(&ctx.p, 1);
            for (j, &e) in from_p.iter().enumerate() {
                out.coeffs[e] += n.coeffs[j];
            }
            out
        })
        .collect())
}

/// Decides whether a degree-two element of a polygon graph is a sum of two
/// networks, and if so returns them.
pub fn split_degree2(p: &TrivalentGraph, w: &ConeElement) -> Result<Split, SemigroupError> {
    let ctx = PolyCtx::new(p.clone())?;
    if !ctx.poly.is_whole(p) {
        return Err(SemigroupError::NotPolygon(
            "some inner vertex is off the cycle or some leg is not a petiole".into(),
        ));
    }
    split_on(&ctx, w)
}

fn split_on(ctx: &PolyCtx, w: &ConeElement) -> Result<Split, SemigroupError> {
    let (p, poly) = (&ctx.p, &ctx.poly);
    if w.degree != 2 {
        return Err(SemigroupError::WrongDegree {
            expected: 2,
            got: w.degree,
        });
    }
    check_cone(p, w)?;
    let k = poly.len();
    let cyc: Vec<u32> = poly.cycle.iter().map(|&c| w.coeffs[c]).collect();
    if let Some(i) = cyc.iter().position(|&v| v == 0) {
        let nets = split_at_zero(ctx, w, i)?;
        return Ok(Split::Decomposable([nets[0].clone(), nets[1].clone()]));
    }
    if cyc.iter().all(|&v| v == 2) {
        let c = poly.cycle_network(p);
        return Ok(Split::Decomposable([c.clone(), c]));
    }
    if cyc.iter().all(|&v| v == 1) {
        let twos: Vec<usize> = (0..k).filter(|&i| w.coeffs[poly.legs[i]] == 2).collect();
        if twos.is_empty() {
            return Ok(Split::Decomposable([
                ConeElement::zero(p, 1),
                poly.cycle_network(p),
            ]));
        }
        if twos.len() % 2 == 1 {
            return Ok(Split::Indecomposable);
        }
        let mut nets = [ConeElement::zero(p, 1), ConeElement::zero(p, 1)];
        for t in 0..twos.len() {
            let arc = poly.arc(p, twos[t], twos[(t + 1) % twos.len()]);
            nets[t % 2] = nets[t % 2].plus(&ConeElement { degree: 0, ..arc });
        }
        return Ok(Split::Decomposable(nets));
    }

    // Mixed labels 1 and 2: each run of 1-edges is carried by one layer that
    // switches at every leg labelled 2.
    let start = (0..k)
        .find(|&i| cyc[(i + k - 1) % k] == 2 && cyc[i] == 1)
        .expect("a run of 1-edges follows a 2-edge");
    let mut nets = [ConeElement::zero(p, 1), ConeElement::zero(p, 1)];
    let mut layer = 0usize;
    for off in 0..k {
        let i = (start + off) % k;
        let (a, b, l) = poly.labels(w, i);
        let (leg, c) = (poly.legs[i], poly.cycle[i]);
        match (a, b) {
            (2, 1) => {
                layer = 0;
                nets[1].coeffs[leg] += l;
                nets[layer].coeffs[c] += 1;
            }
            (1, 1) => {
                if l == 2 {
                    nets[0].coeffs[leg] += 1;
                    nets[1].coeffs[leg] += 1;
                    layer = 1 - layer;
                }
                nets[layer].coeffs[c] += 1;
            }
            (1, 2) => {
                nets[1 - layer].coeffs[leg] += l;
                nets[0].coeffs[c] += 1;
                nets[1].coeffs[c] += 1;
            }
            _ => {
                nets[0].coeffs[c] += 1;
                nets[1].coeffs[c] += 1;
            }
        }
    }
    Ok(Split::Decomposable(nets))
}

/// One peeling step of degree two, used when some vertex has no local path
/// between its two cycle edges. All cycle edges are positive and the
/// degree is at least two.
fn degree_two_piece(p: &TrivalentGraph, poly: &Polygon, w: &ConeElement) -> ConeElement {
    let k = poly.len();
    let m = w.degree;
    let loc: Vec<(u32, u32, u32, u32)> = (0..k).map(|i| local(poly, w, i)).collect();
    let tight = |i: usize| loc[i].3 == m;
    let mut cyc = vec![1u32; k];
    let mut leg = vec![0u32; k];
    let mut in_chain = vec![false; k];
    // A chain starts at a tight vertex whose leg only leaves forward and runs
    // to the next vertex whose leg is entered from behind.
    for s in 0..k {
        let (x, y, _, _) = loc[s];
        if !(tight(s) && x > 0 && y == 0) {
            continue;
        }
        in_chain[s] = true;
        leg[s] = 1;
        cyc[s] = 2;
        let mut j = (s + 1) % k;
        while loc[j].1 == 0 && j != s {
            in_chain[j] = true;
            cyc[j] = 2;
            j = (j + 1) % k;
        }
        in_chain[j] = true;
        leg[j] = 1;
    }
    for i in 0..k {
        if in_chain[i] {
            continue;
        }
        let (x, y, z, _) = loc[i];
        if z == 0 || (tight(i) && x > 0 && y > 0) {
            leg[i] = 2;
        }
    }
    let mut mu = ConeElement::zero(p, 2);
    for i in 0..k {
        mu.coeffs[poly.cycle[i]] = cyc[i];
        mu.coeffs[poly.legs[i]] = leg[i];
    }
    mu
}

/// Peels an element of a polygon graph into networks and indecomposable
/// degree-two elements.
fn peel(ctx: &PolyCtx, w: &ConeElement) -> Result<Vec<ConeElement>, SemigroupError> {
    let (p, poly) = (&ctx.p, &ctx.poly);
    let mut parts = Vec::new();
    let mut cur = w.clone();
    loop {
        match cur.degree {
            0 => return Ok(parts),
            1 => {
                parts.push(cur);
                return Ok(parts);
            }
            _ => {}
        }
        if let Some(i) = poly.cycle.iter().position(|&c| cur.coeffs[c] == 0) {
            parts.extend(split_at_zero(ctx, &cur, i)?);
            return Ok(parts);
        }
        let k = poly.len();
        let all_through = (0..k).all(|i| local(poly, &cur, i).2 > 0);
        let piece = if all_through {
            poly.cycle_network(p)
        } else {
            degree_two_piece(p, poly, &cur)
        };
        let rest = cur
            .checked_sub(&piece)
            .filter(|r| check_cone(p, r).is_ok() && check_cone(p, &piece).is_ok())
            .ok_or_else(|| {
                SemigroupError::Internal(format!(
                    "peeling {} off {} leaves the cone",
                    piece.to_text(p),
                    cur.to_text(p)
                ))
            })?;
        if piece.degree == 2 {
            match split_on(ctx, &piece)? {
                Split::Decomposable([a, b]) => parts.extend([a, b]),
                Split::Indecomposable => parts.push(piece),
            }
        } else {
            parts.push(piece);
        }
        cur = rest;
    }
}

/// A forest component hanging off the cycle (or lying apart from it).
struct Pendant {
    plan: LayerPlan,
    /// Edge of the whole graph for each component edge.
    to_g: Vec<usize>,
    /// The cycle leg in this component: its index here and in the polygon.
    leg: Option<(usize, usize)>,
}

struct Unicyclic {
    ctx: PolyCtx,
    /// Edge of the whole graph for each polygon edge.
    p_to_g: Vec<usize>,
    pendants: Vec<Pendant>,
}

enum Kind {
    Forest(LayerPlan),
    Unicyclic(Box<Unicyclic>),
}

/// Decomposes many elements of one graph, doing the graph work once.
pub struct Decomposer {
    g: TrivalentGraph,
    kind: Kind,
}

impl Decomposer {
    /// Fails unless the first Betti number is at most one.
    pub fn new(g: &TrivalentGraph) -> Result<Self, SemigroupError> {
        let kind = match g.betti() {
            0 => Kind::Forest(LayerPlan::new(g)),
            1 => Kind::Unicyclic(Box::new(Unicyclic::new(g)?)),
            b => return Err(SemigroupError::Betti(b)),
        };
        Ok(Decomposer { g: g.clone(), kind })
    }

    pub fn graph(&self) -> &TrivalentGraph {
        &self.g
    }

    /// Writes `w` as a sum of minimal generators: networks, plus
    /// indecomposable degree-two elements when there is a cycle.
    pub fn decompose(&self, w: &ConeElement) -> Result<Decomposition, SemigroupError> {
        let g = &self.g;
        check_cone(g, w)?;
        let mut parts = match &self.kind {
            Kind::Forest(plan) => plan.run(&w.coeffs, w.degree)?,
            Kind::Unicyclic(u) => u.run(g, w)?,
        };
        if ConeElement::sum(g, &parts) != *w {
            return Err(SemigroupError::Internal("parts do not add up".into()));
        }
        parts.sort();
        Ok(Decomposition { parts })
    }
}

/// One-off form of [`Decomposer::decompose`].
pub fn decompose(g: &TrivalentGraph, w: &ConeElement) -> Result<Decomposition, SemigroupError> {
    Decomposer::new(g)?.decompose(w)
}

impl Unicyclic {
    fn new(g: &TrivalentGraph) -> Result<Self, SemigroupError> {
        let poly_g = Polygon::of(g)?;
        let ctx = PolyCtx::new(poly_g.graph(g))?;
        let by_id = |h: &TrivalentGraph, e: usize| {
            g.edge_index(h.edge_id(e).as_str()).expect("ids are kept")
        };
        let p_to_g = (0..ctx.p.num_edges()).map(|e| by_id(&ctx.p, e)).collect();
        let cycle: BTreeSet<usize> = poly_g.cycle.iter().copied().collect();
        let forest = g.edge_subgraph((0..g.num_edges()).filter(|e| !cycle.contains(e)))?;
        let pendants = forest
            .components()
            .into_iter()
            .map(|comp| {
                let leg = ctx
                    .poly
                    .legs
                    .iter()
                    .find_map(|&l| comp.edge_index(ctx.p.edge_id(l).as_str()).map(|i| (i, l)));
                Pendant {
                    plan: LayerPlan::new(&comp),
                    to_g: (0..comp.num_edges()).map(|e| by_id(&comp, e)).collect(),
                    leg,
                }
            })
            .collect();
        Ok(Unicyclic {
            ctx,
            p_to_g,
            pendants,
        })
    }

    fn run(&self, g: &TrivalentGraph, w: &ConeElement) -> Result<Vec<ConeElement>, SemigroupError> {
        let on_p = ConeElement {
            degree: w.degree,
            coeffs: self.p_to_g.iter().map(|&e| w.coeffs[e]).collect(),
        };
        let pieces = peel(&self.ctx, &on_p)?;
        let mut parts: Vec<ConeElement> = pieces
            .iter()
            .map(|piece| {
                let mut part = ConeElement::zero(g, piece.degree);
                for &c in &self.ctx.poly.cycle {
                    part.coeffs[self.p_to_g[c]] = piece.coeffs[c];
                }
                part
            })
            .collect();
        for pend in &self.pendants {
            let labels: Vec<u32> = pend.to_g.iter().map(|&e| w.coeffs[e]).collect();
            let nets = pend.plan.run(&labels, w.degree)?;
            let (mut with, mut without): (Vec<ConeElement>, Vec<ConeElement>) = match pend.leg {
                Some((i, _)) => nets.into_iter().partition(|n| n.coeffs[i] == 1),
                None => (Vec::new(), nets),
            };
            for (part, piece) in parts.iter_mut().zip(&pieces) {
                let need = pend.leg.map_or(0, |(_, l)| piece.coeffs[l]);
                let rest = piece.degree - need;
                if with.len() < need as usize || without.len() < rest as usize {
                    return Err(SemigroupError::Internal(
                        "pendant networks run short".into(),
                    ));
                }
                for n in with
                    .drain(..need as usize)
                    .chain(without.drain(..rest as usize))
                {
                    for (i, &e) in pend.to_g.iter().enumerate() {
                        part.coeffs[e] += n.coeffs[i];
                    }
                }
            }
        }
        Ok(parts)
    }
}
