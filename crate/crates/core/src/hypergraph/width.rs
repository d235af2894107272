use super::{gaifman, Hypergraph};
use crate::bitset::{self, VertexSet};
use crate::category::SFunctor;
use crate::chordal::{
    treewidth_dp, validate_tree_decomposition, TreeDecomposition, TreewidthResult,
};
use crate::error::{Error, Result};

/// Largest hypergraph accepted by [`hypergraph_treewidth_direct`].
pub const DIRECT_CAP: usize = 7;

/// Tree-width through the Gaifman graph. Every hyperedge is a clique there,
/// so the certificate is also a decomposition of `h` itself.
pub fn hypergraph_treewidth(h: &Hypergraph) -> Result<TreewidthResult> {
    treewidth_dp(&gaifman(h))
}

/// Minimum width over the decompositions induced by all elimination
/// orderings of the Gaifman graph, each checked directly against the
/// hyperedges of `h`. `None` for the hypergraph without vertices.
pub fn hypergraph_treewidth_direct(h: &Hypergraph) -> Result<Option<usize>> {
    let n = h.n();
    Error::cap("direct hypergraph tree-width vertices", n, DIRECT_CAP)?;
    if n == 0 {
        return Ok(None);
    }
    let g = gaifman(h);
    let mut best: Option<usize> = None;
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        // Simulate the elimination: bag of v = v plus its current neighbours
        // among the vertices not yet eliminated.
        let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
        let mut remaining = bitset::full(n);
        let mut bags: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
            remaining &= !bitset::bit(v);
            let nb = adj[v] & remaining;
            for u in bitset::members(nb) {
                adj[u] |= nb & !bitset::bit(u);
            }
            let mut bag: Vec<usize> = bitset::members(nb).collect();
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
        // Node i hangs below the node of its earliest later neighbour.
        let tree_edges: Vec<(usize, usize)> = (0..n.saturating_sub(1))
            .map(|i| {
                let v = order[i];
                let parent = bags[i]
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| position[u])
                    .min()
                    .unwrap_or(n - 1);
                (i, parent)
            })
            .collect();
        let td = TreeDecomposition::new(n, bags, tree_edges);
        let delta = validate_tree_decomposition(h, &td)
            .unwrap_or_else(|v| panic!("elimination decomposition rejected: {v}"));
        best = Some(best.map_or(delta - 1, |b| b.min(delta - 1)));
        if !next_permutation(&mut order) {
            break;
        }
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `Δ = tw + 1` on hypergraphs as a candidate S-functor.
pub fn hypergraph_triangulation_functor() -> SFunctor<Hypergraph> {
    SFunctor::new("Δ", |h: &Hypergraph| Ok(hypergraph_treewidth(h)?.delta))
}
