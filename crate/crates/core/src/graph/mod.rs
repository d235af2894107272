//! Finite simple graphs and the category of graphs with injective
//! homomorphisms, spined by the complete graphs `K_n` with clique sums as
//! proxy pushouts.

mod clique_sum;
pub mod gen;
mod instance;
pub mod io;
pub mod iso;
mod morphism;

pub use clique_sum::{clique_sum, CliqueSum};
pub use instance::{grph_mono_instance, GrphMono};
pub use morphism::{
    enumerate_homomorphisms, enumerate_monomorphisms, enumerate_monomorphisms_with,
    find_monomorphism, is_homomorphism, is_monomorphism, GraphMorphism,
};
pub(crate) use morphism::{search_maps, MapSearch};

use std::fmt;

use crate::bitset::{self, VertexSet};
use crate::category::SFunctor;
use crate::error::{Error, Result};

/// Hard limit on the number of vertices: adjacency rows are `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph on the vertex set `0..n`.
///
/// Stored as one adjacency bitset per vertex, so two graphs compare equal
/// exactly when they have the same vertex count and the same edge set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        Error::cap("graph vertices", n, MAX_VERTICES)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= bitset::bit(v);
        self.adj[v] |= bitset::bit(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        bitset::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] & bitset::bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        bitset::len(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|&a| bitset::len(a)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bitset::members(self.adj[u] & !bitset::full(u + 1)).map(move |v| (u, v)))
            .collect()
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        bitset::members(set).all(|v| self.adj[v] & set == set & !bitset::bit(v))
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= bitset::bit(perm[v]);
            adj[perm[v]] |= bitset::bit(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `vertices`, relabeled to `0..k` in the given
    /// order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph {
            n: vertices.len(),
            adj: vec![0; vertices.len()],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= bitset::bit(j);
                    g.adj[j] |= bitset::bit(i);
                }
            }
        }
        g
    }
}

/// `K_n`.
///
/// # Panics
/// If `n` exceeds [`MAX_VERTICES`].
pub fn complete_graph(n: usize) -> Graph {
    assert!(n <= MAX_VERTICES, "K_{n} exceeds the vertex cap");
    let all = bitset::full(n);
    Graph {
        n,
        adj: (0..n).map(|v| all & !bitset::bit(v)).collect(),
    }
}

/// The edgeless graph `K̄_n`.
///
/// # Panics
/// If `n` exceeds [`MAX_VERTICES`].
pub fn discrete_graph(n: usize) -> Graph {
    assert!(
        n <= MAX_VERTICES,
        "discrete graph on {n} vertices exceeds the cap"
    );
    Graph { n, adj: vec![0; n] }
}

/// `C_n`, with edges `i (i+1 mod n)`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The path `0 - 1 - .. - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Adjoins a new vertex `n` adjacent to every existing vertex.
pub fn apex_extension(g: &Graph) -> Result<Graph> {
    Error::cap("graph vertices", g.n + 1, MAX_VERTICES)?;
    let apex = g.n;
    let mut adj: Vec<VertexSet> = g.adj.iter().map(|&a| a | bitset::bit(apex)).collect();
    adj.push(bitset::full(g.n));
    Ok(Graph { n: g.n + 1, adj })
}

pub fn complement(g: &Graph) -> Graph {
    let all = bitset::full(g.n);
    Graph {
        n: g.n,
        adj: (0..g.n)
            .map(|v| !g.adj[v] & all & !bitset::bit(v))
            .collect(),
    }
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, size: usize, mut candidates: VertexSet, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        while candidates != 0 {
            if size + bitset::len(candidates) <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            expand(g, size + 1, candidates & g.adj[v], best);
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertices(), &mut best);
    best
}

/// Size of a largest independent set.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&complement(g))
}

/// The clique number, as a candidate S-functor on graphs.
pub fn clique_number_functor() -> SFunctor<Graph> {
    SFunctor::new("clique number", |g: &Graph| Ok(clique_number(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(complete_graph(0).n(), 0);
        assert_eq!(complete_graph(4).edge_count(), 6);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle_graph(2).is_err());
        assert_eq!(discrete_graph(3).edge_count(), 0);
    }

    #[test]
    fn simple_graph_invariants() {
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { .. })
        ));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(Graph::new(65).is_err());
    }

    #[test]
    fn apex_extension_examples() {
        assert_eq!(
            apex_extension(&complete_graph(0)).unwrap(),
            complete_graph(1)
        );
        for n in 0..6 {
            assert_eq!(
                apex_extension(&complete_graph(n)).unwrap(),
                complete_graph(n + 1)
            );
        }
        let w4 = apex_extension(&cycle_graph(4).unwrap()).unwrap();
        assert_eq!(w4.n(), 5);
        assert_eq!(w4.edge_count(), 8);
    }

    #[test]
    fn complement_examples() {
        for n in 0..6 {
            assert_eq!(complement(&complete_graph(n)), discrete_graph(n));
        }
        let c5 = cycle_graph(5).unwrap();
        let comp = complement(&c5);
        assert_eq!(comp.edge_count(), 5);
        // 0-2-4-1-3-0 is the complementary cycle; relabel it onto C_5.
        let perm = [0, 3, 1, 4, 2];
        assert_eq!(comp.permuted(&perm), c5);
        assert_eq!(complement(&comp), c5);
    }

    #[test]
    fn clique_and_independence_numbers() {
        assert_eq!(clique_number(&complete_graph(0)), 0);
        assert_eq!(clique_number(&discrete_graph(3)), 1);
        assert_eq!(clique_number(&cycle_graph(4).unwrap()), 2);
        assert_eq!(clique_number(&complete_graph(5)), 5);
        assert_eq!(independence_number(&cycle_graph(5).unwrap()), 2);
        assert_eq!(independence_number(&discrete_graph(4)), 4);
    }

    #[test]
    fn induced_and_permuted() {
        let p = path_graph(4).unwrap();
        assert_eq!(p.induced(&[1, 2, 3]), path_graph(3).unwrap());
        assert_eq!(p.permuted(&[3, 2, 1, 0]), p);
        assert!(complete_graph(4).is_clique(0b1011));
        assert!(!p.is_clique(0b0111));
    }
}
