use rand::seq::SliceRandom;
use rand::Rng;

use super::TrivalentGraph;

/// A random trivalent graph with `inner` inner vertices and `leaves` leaves
/// from a uniform matching of half-edges. Loops and parallel edges occur.
/// Components without inner vertices are possible when `leaves >= 2`.
///
/// Panics unless `3 * inner + leaves` is even.
pub fn random_trivalent_graph<R: Rng + ?Sized>(
    rng: &mut R,
    inner: usize,
    leaves: usize,
) -> TrivalentGraph {
    assert!(
        (3 * inner + leaves) % 2 == 0,
        "half-edge count must be even"
    );
    let mut stubs: Vec<String> = (0..inner)
        .flat_map(|i| std::iter::repeat_n(format!("v{i}"), 3))
        .chain((0..leaves).map(|i| format!("l{i}")))
        .collect();
    stubs.shuffle(rng);
    let width = (stubs.len() / 2).to_string().len();
    let edges = stubs
        .chunks(2)
        .enumerate()
        .map(|(i, pair)| (format!("e{i:0width$}"), pair[0].clone(), pair[1].clone()));
    TrivalentGraph::from_edges(edges).expect("every stub is matched once")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn counts_match() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_trivalent_graph(&mut rng, 6, 4);
            let inv = g.invariants();
            assert_eq!(inv.num_vertices, 10);
            assert_eq!(inv.num_leaves, 4);
            assert_eq!(2 * inv.num_edges, 3 * inv.num_vertices - 2 * inv.num_leaves);
            assert_eq!(
                inv.num_vertices + inv.betti,
                inv.num_edges + inv.num_components
            );
        }
    }
}
