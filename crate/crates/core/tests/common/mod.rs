//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search code under test.
#![allow(dead_code)]

use spined::graph::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Largest clique, by checking every vertex subset.
pub fn brute_clique_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || adj[u][v]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_independence_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || !adj[u][v]))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Least `k` admitting a proper `k`-colouring, by trying every colour
/// assignment.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut colour = vec![0; n];
                for c in colour.iter_mut() {
                    *c = code % k.max(1) as u64;
                    code /= k.max(1) as u64;
                }
                edges.iter().all(|&(u, v)| colour[u] != colour[v])
            })
        })
        .unwrap_or(n)
}

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && permutations(a.n())
            .iter()
            .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

/// Every graph on `n` labeled vertices.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Canonical forms of every graph on at most `max_n` vertices reachable from
/// complete graphs by clique sums, computed to a fixpoint.
///
/// Only one right-hand placement per clique is tried: every placement on
/// the left is enumerated, which already realizes every identification.
pub fn clique_sum_closure(max_n: usize) -> std::collections::BTreeSet<Graph> {
    use spined::graph::iso::canonical_form;
    use spined::graph::{clique_sum, complete_graph, enumerate_monomorphisms};

    let mut known: std::collections::BTreeSet<Graph> = (0..=max_n)
        .map(|n| canonical_form(&complete_graph(n)).unwrap())
        .collect();
    loop {
        let current: Vec<Graph> = known.iter().cloned().collect();
        let mut added = false;
        for a in &current {
            for b in &current {
                for k in 0..=a.n().min(b.n()) {
                    if a.n() + b.n() - k > max_n {
                        continue;
                    }
                    let kk = complete_graph(k);
                    let lefts = enumerate_monomorphisms(&kk, a).unwrap();
                    let mut rights = enumerate_monomorphisms(&kk, b).unwrap();
                    let mut seen_images = std::collections::BTreeSet::new();
                    rights.retain(|m| {
                        let mut s = m.map.clone();
                        s.sort();
                        seen_images.insert(s)
                    });
                    for l in &lefts {
                        for r in &rights {
                            let sum = clique_sum(l, r).unwrap().apex;
                            if known.insert(canonical_form(&sum).unwrap()) {
                                added = true;
                            }
                        }
                    }
                }
            }
        }
        if !added {
            return known;
        }
    }
}
