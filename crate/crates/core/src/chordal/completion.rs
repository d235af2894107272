//! Chordality, fill-in, minimum chordal completions and clique trees.

use std::collections::HashMap;

use super::decomposition::TreeDecomposition;
use super::treewidth::{treewidth_dp, DP_CAP};
use crate::bitset::{self, VertexSet};
use crate::category::{Morphism, MorphismKind, SFunctor};
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph, GraphMorphism};

/// A perfect elimination ordering of `g`, if `g` is chordal.
///
/// Maximum-cardinality search numbers the vertices; the reverse of the visit
/// order is perfect exactly when `g` is chordal, which is then checked
/// directly.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited: VertexSet = 0;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = bitset::members(g.vertices() & !visited)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visit.push(v);
        visited |= bitset::bit(v);
        for u in bitset::members(g.neighbors(v) & !visited) {
            weight[u] += 1;
        }
    }
    visit.reverse();
    is_perfect(g, &visit).then_some(visit)
}

/// Whether every vertex's later neighbours form a clique.
fn is_perfect(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later &= !bitset::bit(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

fn check_permutation(n: usize, ord: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if ord.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    for &v in ord {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }
    Ok(())
}

/// The chordal supergraph obtained by eliminating vertices along `ord`,
/// turning each vertex's not-yet-eliminated neighbourhood into a clique.
pub fn fill_in(g: &Graph, ord: &[usize]) -> Result<Graph> {
    check_permutation(g.n(), ord)?;
    let mut h = g.clone();
    let mut remaining = g.vertices();
    for &v in ord {
        remaining &= !bitset::bit(v);
        let nb: Vec<usize> = bitset::members(h.neighbors(v) & remaining).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                h.add_edge(a, b)?;
            }
        }
    }
    Ok(h)
}

/// Largest graph accepted by [`min_chordal_completion`].
pub const COMPLETION_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalCompletion {
    /// Chordal supergraph of the input on the same vertices.
    pub graph: Graph,
    /// The identity map, input into `graph`.
    pub embedding: GraphMorphism,
    pub ordering: Vec<usize>,
    /// `ω(graph)`.
    pub width: usize,
}

struct Search {
    best: usize,
    best_order: Vec<usize>,
    /// Smallest running width with which each remaining-set was reached.
    seen: HashMap<VertexSet, usize>,
}

/// Elimination graph on the vertices still present: `adj[v]` restricted to
/// `remaining`.
fn eliminate(adj: &[VertexSet], remaining: VertexSet, v: usize) -> Vec<VertexSet> {
    let nb = adj[v] & remaining & !bitset::bit(v);
    let mut next = adj.to_vec();
    for u in bitset::members(nb) {
        next[u] |= nb & !bitset::bit(u);
    }
    next
}

fn is_simplicial(adj: &[VertexSet], remaining: VertexSet, v: usize) -> bool {
    let nb = adj[v] & remaining;
    bitset::members(nb).all(|u| adj[u] & nb == nb & !bitset::bit(u))
}

fn branch(
    adj: &[VertexSet],
    remaining: VertexSet,
    width: usize,
    order: &mut Vec<usize>,
    s: &mut Search,
) {
    if remaining == 0 {
        if width < s.best {
            s.best = width;
            s.best_order = order.clone();
        }
        return;
    }
    let degree = |v: usize| bitset::len(adj[v] & remaining);
    // The minimum degree bounds the tree-width of what is left from below.
    let min_degree = bitset::members(remaining).map(degree).min().unwrap_or(0);
    if width.max(min_degree) >= s.best {
        return;
    }
    match s.seen.get(&remaining) {
        Some(&w) if w <= width => return,
        _ => {
            s.seen.insert(remaining, width);
        }
    }
    // A simplicial vertex can always be eliminated first.
    let candidates: Vec<usize> =
        match bitset::members(remaining).find(|&v| is_simplicial(adj, remaining, v)) {
            Some(v) => vec![v],
            None => {
                let mut c: Vec<usize> = bitset::members(remaining).collect();
                c.sort_by_key(|&v| (degree(v), v));
                c
            }
        };
    for v in candidates {
        let w = width.max(degree(v));
        if w >= s.best {
            continue;
        }
        let next = eliminate(adj, remaining, v);
        order.push(v);
        branch(&next, remaining & !bitset::bit(v), w, order, s);
        order.pop();
    }
}

/// Greedy minimum-degree ordering and its width, as the initial bound.
fn min_degree_ordering(g: &Graph) -> (usize, Vec<usize>) {
    let mut adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    let mut remaining = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    while remaining != 0 {
        let v = bitset::members(remaining)
            .min_by_key(|&v| (bitset::len(adj[v] & remaining), v))
            .expect("non-empty");
        width = width.max(bitset::len(adj[v] & remaining));
        adj = eliminate(&adj, remaining, v);
        remaining &= !bitset::bit(v);
        order.push(v);
    }
    (width, order)
}

/// A chordal completion of minimum clique number, by branch and bound over
/// elimination orderings. Its width `ω(h)` is `tw(g) + 1`.
pub fn min_chordal_completion(g: &Graph) -> Result<ChordalCompletion> {
    Error::cap("chordal completion vertices", g.n(), COMPLETION_CAP)?;
    let (ub, ub_order) = min_degree_ordering(g);
    let mut s = Search {
        best: ub,
        best_order: ub_order,
        seen: HashMap::new(),
    };
    let adj: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    branch(&adj, g.vertices(), 0, &mut Vec::new(), &mut s);
    let h = fill_in(g, &s.best_order)?;
    let width = clique_number(&h);
    Ok(ChordalCompletion {
        embedding: Morphism::new(
            g.clone(),
            h.clone(),
            (0..g.n()).collect(),
            MorphismKind::Mono,
        ),
        graph: h,
        ordering: s.best_order,
        width,
    })
}

/// A tree decomposition of a chordal graph whose bags are exactly its
/// maximal cliques.
///
/// Each tree edge records a clique along which the two sides are glued, so
/// the result exhibits `g` as an iterated clique sum of complete graphs.
pub fn clique_tree(g: &Graph) -> Result<TreeDecomposition> {
    let peo = perfect_elimination_ordering(g).ok_or(Error::NotChordal)?;
    let mut later = g.vertices();
    let mut candidates: Vec<VertexSet> = Vec::new();
    for &v in &peo {
        candidates.push((g.neighbors(v) & later) | bitset::bit(v));
        later &= !bitset::bit(v);
    }
    let mut cliques: Vec<VertexSet> = candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&d| d != c && c & !d == 0))
        .collect();
    cliques.sort_by_key(|&c| bitset::members(c).collect::<Vec<_>>());
    cliques.dedup();

    // Maximum-weight spanning tree, weight = separator size. Zero-weight
    // edges join the components of a disconnected graph.
    let k = cliques.len();
    let mut pairs: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| (bitset::len(cliques[i] & cliques[j]), i, j))
        .collect();
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut comp: Vec<usize> = (0..k).collect();
    fn root(comp: &mut [usize], mut x: usize) -> usize {
        while comp[x] != x {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        x
    }
    let mut tree_edges = Vec::new();
    for (_, i, j) in pairs {
        let (ri, rj) = (root(&mut comp, i), root(&mut comp, j));
        if ri != rj {
            comp[ri] = rj;
            tree_edges.push((i, j));
        }
    }
    let bags = cliques
        .iter()
        .map(|&c| bitset::members(c).collect())
        .collect();
    Ok(TreeDecomposition::new(g.n(), bags, tree_edges))
}

/// `Δ[g] = tw(g) + 1`, cross-checked against the minimum chordal completion
/// whenever the latter is within its cap.
pub fn triangulation_graph(g: &Graph) -> Result<usize> {
    Error::cap("tree-width DP vertices", g.n(), DP_CAP)?;
    let delta = treewidth_dp(g)?.delta;
    if g.n() <= COMPLETION_CAP {
        let completion = min_chordal_completion(g)?;
        assert_eq!(
            completion.width, delta,
            "chordal completion width disagrees with the subset DP"
        );
    }
    Ok(delta)
}

/// `Δ` on graphs as a candidate S-functor (the subset DP alone).
pub fn triangulation_functor() -> SFunctor<Graph> {
    SFunctor::new("Δ", |g: &Graph| Ok(treewidth_dp(g)?.delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::validate_tree_decomposition;
    use crate::graph::{
        clique_sum, complete_graph, cycle_graph, discrete_graph, is_monomorphism, path_graph,
    };

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&complete_graph(5)));
        assert!(is_chordal(&complete_graph(0)));
        assert!(!is_chordal(&cycle_graph(4).unwrap()));
        assert!(!is_chordal(&cycle_graph(6).unwrap()));
        assert!(is_chordal(&diamond()));
        let peo = perfect_elimination_ordering(&diamond()).unwrap();
        assert_eq!(fill_in(&diamond(), &peo).unwrap(), diamond());
    }

    #[test]
    fn fill_in_examples() {
        let c4 = cycle_graph(4).unwrap();
        let h = fill_in(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(h.has_edge(1, 3));
        assert!(is_chordal(&h));
        assert_eq!(
            fill_in(&discrete_graph(4), &[3, 1, 0, 2]).unwrap(),
            discrete_graph(4)
        );
        assert_eq!(
            fill_in(&c4, &[0, 1, 1, 3]),
            Err(Error::InvalidPermutation(4))
        );
        assert_eq!(fill_in(&c4, &[0, 1]), Err(Error::InvalidPermutation(4)));
    }

    #[test]
    fn completion_examples() {
        let d = diamond();
        let c = min_chordal_completion(&d).unwrap();
        assert_eq!(c.graph, d);
        assert_eq!(c.width, 3);
        let c4 = min_chordal_completion(&cycle_graph(4).unwrap()).unwrap();
        assert_eq!(c4.graph.edge_count(), 5);
        assert_eq!(c4.width, 3);
        assert!(is_monomorphism(&c4.embedding));
        assert_eq!(
            min_chordal_completion(&cycle_graph(6).unwrap())
                .unwrap()
                .width,
            3
        );
        assert_eq!(min_chordal_completion(&complete_graph(0)).unwrap().width, 0);
    }

    #[test]
    fn clique_tree_examples() {
        let k4 = clique_tree(&complete_graph(4)).unwrap();
        assert_eq!(k4.bags, vec![vec![0, 1, 2, 3]]);
        let d = clique_tree(&diamond()).unwrap();
        assert_eq!(d.bags, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(d.tree_edges, vec![(0, 1)]);
        let p3 = clique_tree(&path_graph(3).unwrap()).unwrap();
        assert_eq!(p3.bags, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(validate_tree_decomposition(&diamond(), &d), Ok(3));
        let forest = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let t = clique_tree(&forest).unwrap();
        assert_eq!(t.bags.len(), 3);
        assert_eq!(validate_tree_decomposition(&forest, &t), Ok(2));
        assert_eq!(
            clique_tree(&cycle_graph(4).unwrap()),
            Err(Error::NotChordal)
        );
    }

    #[test]
    fn triangulation_examples() {
        for n in 0..=6 {
            assert_eq!(triangulation_graph(&complete_graph(n)).unwrap(), n);
        }
        assert_eq!(triangulation_graph(&cycle_graph(4).unwrap()).unwrap(), 3);
        for n in 3..=6 {
            let kn = complete_graph(n);
            let cn = cycle_graph(n).unwrap();
            let g1 = Morphism::new(complete_graph(1), kn, vec![0], MorphismKind::Mono);
            let g2 = Morphism::new(complete_graph(1), cn, vec![0], MorphismKind::Mono);
            let sum = clique_sum(&g1, &g2).unwrap();
            assert_eq!(triangulation_graph(&sum.apex).unwrap(), n);
        }
    }
}
