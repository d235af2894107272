//! Graph generators for tests, benches and the span sampler.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::iso::canonical_form;
use super::{Graph, GraphMorphism};
use crate::bitset;
use crate::category::{Morphism, MorphismKind};
use crate::error::Result;

/// `G(n, p)`: every pair is an edge independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("vertex count within cap");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// A graph with `1..=max_n` vertices and a uniformly drawn edge density.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    let p = rng.random_range(0.2..0.9);
    random_graph(rng, n, p)
}

/// Every labeled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges: Vec<_> = bitset::members(mask).map(|i| pairs[i]).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}

/// One canonical representative of every isomorphism class of graphs on
/// exactly `n` vertices, in canonical order.
///
/// Classes on `n` vertices are obtained by adding a vertex with every
/// possible neighbourhood to each class on `n - 1` vertices.
pub fn graphs_on(n: usize) -> Result<Vec<Graph>> {
    let mut level: BTreeSet<Graph> = BTreeSet::from([Graph::new(0)?]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for g in &level {
            for nbhd in 0..(1u64 << (k - 1)) {
                let mut h = Graph::new(k)?;
                for (u, v) in g.edges() {
                    h.add_edge(u, v)?;
                }
                for u in bitset::members(nbhd) {
                    h.add_edge(u, k - 1)?;
                }
                next.insert(canonical_form(&h)?);
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// Representatives of all isomorphism classes on `0..=max_n` vertices.
pub fn graphs_up_to_iso(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 0..=max_n {
        all.extend(graphs_on(n)?);
    }
    Ok(all)
}

/// A random injective homomorphism out of `g`: `g` is placed on a random set
/// of vertices of a supergraph with up to `max_extra` new vertices and random
/// additional edges.
pub fn random_extension<R: Rng>(rng: &mut R, g: &Graph, max_extra: usize) -> GraphMorphism {
    let extra = rng.random_range(0..=max_extra);
    let total = g.n() + extra;
    let mut slots: Vec<usize> = (0..total).collect();
    slots.shuffle(rng);
    let map: Vec<usize> = slots[..g.n()].to_vec();
    let mut h = Graph::new(total).expect("vertex count within cap");
    for (u, v) in g.edges() {
        h.add_edge(map[u], map[v]).expect("valid pair");
    }
    for u in 0..total {
        for v in u + 1..total {
            if rng.random_bool(0.3) {
                h.add_edge(u, v).expect("valid pair");
            }
        }
    }
    Morphism::new(g.clone(), h, map, MorphismKind::Mono)
}
