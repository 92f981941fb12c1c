//! Exhaustive enumeration of the lattice points of a fixed degree.
//!
//! Edges are assigned in breadth-first order so that vertices close early.
//! When an edge completes a vertex its admissible values form an interval
//! with a parity, computed from the two labels already placed there.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::SemigroupError;
use crate::cone::ConeElement;
use crate::graph::TrivalentGraph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const BUDGET_ENV: &str = "GRAPHCONE_BUDGET";

/// Search limits. The budget counts visited search nodes (partial
/// assignments), summed over all workers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub budget: u64,
    pub parallel: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            budget: budget_from_env(),
            parallel: false,
        }
    }
}

/// `GRAPHCONE_BUDGET` if set and numeric, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().replace('_', "").parse::<f64>().ok())
        .map(|f| f as u64)
        .unwrap_or(DEFAULT_BUDGET)
}

struct Plan {
    order: Vec<usize>,
    /// Triples completed at each position (loops listed twice in a triple).
    closing: Vec<Vec<[usize; 3]>>,
    /// Triples touched but not completed at each position.
    partial: Vec<Vec<[usize; 3]>>,
}

impl Plan {
    fn new(g: &TrivalentGraph) -> Self {
        let n = g.num_edges();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut seen = vec![false; g.num_vertices()];
        let starts = g.inner_vertices().chain(0..g.num_vertices());
        for s in starts.collect::<Vec<_>>() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for h in g.incidence(v) {
                    if !placed[h.edge] {
                        placed[h.edge] = true;
                        order.push(h.edge);
                    }
                    let w = g.other_end(*h);
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut pos = vec![0; n];
        for (p, &e) in order.iter().enumerate() {
            pos[e] = p;
        }
        let mut closing = vec![Vec::new(); n];
        let mut partial = vec![Vec::new(); n];
        for (_, t) in g.inner_triples() {
            let last = t.iter().map(|&e| pos[e]).max().expect("three edges");
            closing[last].push(*t);
            let mut earlier: Vec<usize> =
                t.iter().map(|&e| pos[e]).filter(|&p| p != last).collect();
            earlier.dedup();
            for p in earlier {
                partial[p].push(*t);
            }
        }
        Plan {
            order,
            closing,
            partial,
        }
    }
}

/// Admissible values of `e` given a completed triple: `(lo, hi, parity)`.
fn closing_range(t: &[usize; 3], e: usize, values: &[u32], m: u32) -> (u32, u32, Option<u32>) {
    let others: Vec<u32> = t.iter().filter(|&&x| x != e).map(|&x| values[x]).collect();
    match others.as_slice() {
        [p, q] => {
            let (p, q) = (*p, *q);
            if p + q > 2 * m {
                return (1, 0, None);
            }
            (p.abs_diff(q), (p + q).min(2 * m - p - q), Some((p + q) % 2))
        }
        [f] => {
            let f = *f;
            if f % 2 == 1 || f > 2 * m {
                return (1, 0, None);
            }
            (f.div_ceil(2), (2 * m - f) / 2, None)
        }
        _ => unreachable!("an edge occupies at most two slots of a vertex"),
    }
}

struct Search<'a> {
    plan: &'a Plan,
    m: u32,
    budget: u64,
    shared: &'a AtomicU64,
    local: u64,
    values: Vec<u32>,
    out: Vec<Vec<u32>>,
}

const FLUSH: u64 = 4096;

impl Search<'_> {
    fn tick(&mut self) -> Result<(), SemigroupError> {
        self.local += 1;
        if self.local >= FLUSH {
            let total = self.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
            self.local = 0;
            if total > self.budget {
                return Err(SemigroupError::Budget {
                    visited: total,
                    budget: self.budget,
                });
            }
        }
        Ok(())
    }

    fn range(&self, p: usize) -> Option<(u32, u32, u32)> {
        let e = self.plan.order[p];
        let (mut lo, mut hi, mut parity) = (0, self.m, None);
        for t in &self.plan.closing[p] {
            let (l, h, par) = closing_range(t, e, &self.values, self.m);
            lo = lo.max(l);
            hi = hi.min(h);
            match (parity, par) {
                (Some(a), Some(b)) if a != b => return None,
                (None, Some(b)) => parity = Some(b),
                _ => {}
            }
        }
        if let Some(par) = parity {
            if lo % 2 != par {
                lo += 1;
            }
        }
        if lo > hi {
            return None;
        }
        Some((lo, hi, if parity.is_some() { 2 } else { 1 }))
    }

    fn admissible(&self, p: usize) -> bool {
        let two_m = 2 * self.m;
        self.plan.partial[p].iter().all(|t| {
            // Unassigned slots still hold 0 here.
            t.iter().map(|&x| self.values[x]).sum::<u32>() <= two_m
        }) && self.plan.closing[p].iter().all(|t| {
            let [a, b, c] = t.map(|x| self.values[x]);
            let s = a + b + c;
            s % 2 == 0 && s <= two_m && 2 * a <= s && 2 * b <= s && 2 * c <= s
        })
    }

    fn go(&mut self, p: usize) -> Result<(), SemigroupError> {
        if p == self.plan.order.len() {
            self.out.push(self.values.clone());
            return Ok(());
        }
        let Some((lo, hi, step)) = self.range(p) else {
            return Ok(());
        };
        let e = self.plan.order[p];
        let mut v = lo;
        while v <= hi {
            self.tick()?;
            self.values[e] = v;
            if self.admissible(p) {
                self.go(p + 1)?;
            }
            v += step;
        }
        self.values[e] = 0;
        Ok(())
    }
}

/// All cone points of degree `m`, sorted by coefficient vector in edge-id
/// order.
pub fn points_of_degree(g: &TrivalentGraph, m: u32) -> Result<Vec<ConeElement>, SemigroupError> {
    points_of_degree_with(g, m, &EnumOptions::default())
}

pub fn points_of_degree_with(
    g: &TrivalentGraph,
    m: u32,
    opts: &EnumOptions,
) -> Result<Vec<ConeElement>, SemigroupError> {
    let plan = Plan::new(g);
    let shared = AtomicU64::new(0);
    let run = |first: Option<u32>| -> Result<Vec<Vec<u32>>, SemigroupError> {
        let mut s = Search {
            plan: &plan,
            m,
            budget: opts.budget,
            shared: &shared,
            local: 0,
            values: vec![0; g.num_edges()],
            out: Vec::new(),
        };
        match first {
            None => s.go(0)?,
            Some(v) => {
                s.tick()?;
                s.values[plan.order[0]] = v;
                if s.admissible(0) {
                    s.go(1)?;
                }
            }
        }
        let total = shared.fetch_add(s.local, Ordering::Relaxed) + s.local;
        if total > opts.budget {
            return Err(SemigroupError::Budget {
                visited: total,
                budget: opts.budget,
            });
        }
        Ok(s.out)
    };
    let mut raw: Vec<Vec<u32>> = if plan.order.is_empty() {
        vec![Vec::new()]
    } else if opts.parallel {
        let first: Vec<u32> = {
            let probe = Search {
                plan: &plan,
                m,
                budget: opts.budget,
                shared: &shared,
                local: 0,
                values: vec![0; g.num_edges()],
                out: Vec::new(),
            };
            match probe.range(0) {
                Some((lo, hi, step)) => (lo..=hi).step_by(step as usize).collect(),
                None => Vec::new(),
            }
        };
        let chunks: Vec<Vec<Vec<u32>>> = first
            .into_par_iter()
            .map(|v| run(Some(v)))
            .collect::<Result<_, _>>()?;
        chunks.into_iter().flatten().collect()
    } else {
        run(None)?
    };
    raw.sort_unstable();
    Ok(raw
        .into_iter()
        .map(|coeffs| ConeElement { degree: m, coeffs })
        .collect())
}
