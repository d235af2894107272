//! Exact tree-width by dynamic programming over elimination prefixes.
//!
//! For a set `S` of already eliminated vertices and `v ∉ S`, eliminating `v`
//! next creates the bag `{v} ∪ Q(S, v)`, where `Q(S, v)` is the set of
//! vertices outside `S ∪ {v}` reachable from `v` through `S`. With
//! `R(V) = 0` and `R(S) = min_{v ∉ S} max(|Q(S, v)|, R(S ∪ {v}))`, the
//! tree-width is `R(∅)`. The table is filled level by level in decreasing
//! `|S|`; each level is a data-parallel map.

use super::decomposition::TreeDecomposition;
use crate::bitset::{self, VertexSet};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;

/// Largest graph accepted by the subset DP (`2^n` table entries).
pub const DP_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreewidthResult {
    /// `tw + 1`; `0` for the empty graph.
    pub delta: usize,
    /// The lexicographically smallest optimal elimination ordering.
    pub ordering: Vec<usize>,
    pub decomposition: TreeDecomposition,
}

impl TreewidthResult {
    /// The tree-width, or `None` for the graph without vertices.
    pub fn tw(&self) -> Option<usize> {
        self.delta.checked_sub(1)
    }
}

/// `Q(S, v)`.
pub(crate) fn reach_through(g: &Graph, eliminated: VertexSet, v: usize) -> VertexSet {
    let mut comp = bitset::bit(v);
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for u in bitset::members(frontier) {
            next |= g.neighbors(u) & eliminated;
        }
        frontier = next & !comp;
        comp |= frontier;
    }
    let mut out = 0;
    for u in bitset::members(comp) {
        out |= g.neighbors(u);
    }
    out & !comp & !eliminated
}

/// All `n`-bit masks with exactly `k` bits set, increasing.
fn masks_with_popcount(n: usize, k: usize) -> Vec<VertexSet> {
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = bitset::full(n);
    let mut m: VertexSet = bitset::full(k);
    while m <= limit {
        out.push(m);
        // Gosper's hack: next larger mask with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

pub fn treewidth_dp(g: &Graph) -> Result<TreewidthResult> {
    treewidth_dp_with(g, Execution::default())
}

pub fn treewidth_dp_with(g: &Graph, exec: Execution) -> Result<TreewidthResult> {
    let n = g.n();
    Error::cap("tree-width DP vertices", n, DP_CAP)?;
    if n == 0 {
        return Ok(TreewidthResult {
            delta: 0,
            ordering: Vec::new(),
            decomposition: TreeDecomposition::trivial(0),
        });
    }
    let all = bitset::full(n);
    let mut table = vec![0u8; 1usize << n];
    for k in (0..n).rev() {
        let masks = masks_with_popcount(n, k);
        let table_ref = &table;
        let values = exec.map(&masks, |&s| {
            bitset::members(all & !s)
                .map(|v| {
                    let q = bitset::len(reach_through(g, s, v)) as u8;
                    q.max(table_ref[(s | bitset::bit(v)) as usize])
                })
                .min()
                .expect("S is a proper subset")
        });
        for (s, value) in masks.into_iter().zip(values) {
            table[s as usize] = value;
        }
    }
    let tw = table[0] as usize;

    let mut ordering = Vec::with_capacity(n);
    let mut higher = Vec::with_capacity(n);
    let mut s: VertexSet = 0;
    while s != all {
        let (v, q) = bitset::members(all & !s)
            .map(|v| (v, reach_through(g, s, v)))
            .find(|&(v, q)| bitset::len(q).max(table[(s | bitset::bit(v)) as usize] as usize) <= tw)
            .expect("an optimal continuation exists");
        ordering.push(v);
        higher.push(q);
        s |= bitset::bit(v);
    }
    let decomposition = decomposition_from_ordering(n, &ordering, &higher);
    Ok(TreewidthResult {
        delta: tw + 1,
        ordering,
        decomposition,
    })
}

/// Bags `{v} ∪ higher(v)` along `ordering`, each attached to the bag of its
/// earliest higher neighbour (or to the last vertex's bag), then contracted
/// so that no bag is contained in a neighbouring one.
pub(crate) fn decomposition_from_ordering(
    n: usize,
    ordering: &[usize],
    higher: &[VertexSet],
) -> TreeDecomposition {
    let mut position = vec![0; n];
    for (i, &v) in ordering.iter().enumerate() {
        position[v] = i;
    }
    let mut bags: Vec<VertexSet> = ordering
        .iter()
        .zip(higher)
        .map(|(&v, &q)| q | bitset::bit(v))
        .collect();
    let mut parent: Vec<Option<usize>> = (0..n)
        .map(|i| {
            if i + 1 == n {
                None
            } else {
                Some(
                    bitset::members(higher[i])
                        .map(|u| position[u])
                        .min()
                        .unwrap_or(n - 1),
                )
            }
        })
        .collect();

    // Contract tree edges whose endpoint bags are nested. `alive[i]` marks
    // surviving nodes; a contracted node's children move to its parent.
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for i in 0..n {
            let Some(p) = parent[i].filter(|_| alive[i]) else {
                continue;
            };
            if bags[i] & !bags[p] == 0 {
                // Child bag inside parent: drop the child.
                for c in 0..n {
                    if alive[c] && parent[c] == Some(i) {
                        parent[c] = Some(p);
                    }
                }
                alive[i] = false;
                changed = true;
            } else if bags[p] & !bags[i] == 0 {
                // Parent bag inside child: the child takes the parent's place.
                bags[p] = bags[i];
                for c in 0..n {
                    if alive[c] && parent[c] == Some(i) {
                        parent[c] = Some(p);
                    }
                }
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut index = vec![usize::MAX; n];
    let mut out_bags = Vec::new();
    for i in (0..n).filter(|&i| alive[i]) {
        index[i] = out_bags.len();
        out_bags.push(bitset::members(bags[i]).collect());
    }
    let tree_edges = (0..n)
        .filter(|&i| alive[i])
        .filter_map(|i| parent[i].map(|p| (index[i], index[p])))
        .collect();
    TreeDecomposition::new(n, out_bags, tree_edges)
}
