//! Exhaustive isomorphism testing and canonical forms for small graphs.
//!
//! Candidate labelings only permute vertices within classes of equal
//! (degree, sorted neighbour degrees); the canonical code is the largest
//! upper-triangle adjacency string over those labelings, built column by
//! column so partial codes can be pruned.

use super::Graph;
use crate::bitset;
use crate::error::{Error, Result};

/// Largest graph accepted by the exhaustive search.
pub const ISO_CAP: usize = 10;

fn invariant(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = bitset::members(g.neighbors(v))
        .map(|u| g.degree(u))
        .collect();
    nd.sort_unstable();
    (g.degree(v), nd)
}

/// `(code, order)` where `order[p]` is the vertex placed at position `p`.
fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>)> {
    Error::cap("isomorphism search", g.n(), ISO_CAP)?;
    let n = g.n();
    let invariants: Vec<_> = (0..n).map(|v| invariant(g, v)).collect();
    let mut by_class: Vec<usize> = (0..n).collect();
    by_class.sort_by(|&a, &b| invariants[a].cmp(&invariants[b]));
    // class_of_position[p]: which vertices may sit at position p.
    let mut slots = Vec::with_capacity(n);
    for p in 0..n {
        let inv = &invariants[by_class[p]];
        slots.push(
            by_class
                .iter()
                .copied()
                .filter(|&v| invariants[v] == *inv)
                .fold(0u64, |acc, v| acc | bitset::bit(v)),
        );
    }

    struct Best {
        code: u64,
        order: Vec<usize>,
        found: bool,
    }

    fn dfs(
        g: &Graph,
        slots: &[u64],
        order: &mut Vec<usize>,
        used: u64,
        code: u64,
        best: &mut Best,
    ) {
        let p = order.len();
        if p == slots.len() {
            if !best.found || code > best.code {
                best.code = code;
                best.order = order.clone();
                best.found = true;
            }
            return;
        }
        for v in bitset::members(slots[p] & !used) {
            let mut c = code;
            for &u in order.iter() {
                c = (c << 1) | g.has_edge(u, v) as u64;
            }
            // Prefix of the best code with the same number of bits.
            if best.found {
                let total: u32 = (slots.len() * (slots.len() - 1) / 2) as u32;
                let bits: u32 = (p * (p + 1) / 2) as u32;
                let prefix = best.code >> (total - bits);
                if c < prefix {
                    continue;
                }
            }
            order.push(v);
            dfs(g, slots, order, used | bitset::bit(v), c, best);
            order.pop();
        }
    }

    let mut best = Best {
        code: 0,
        order: Vec::new(),
        found: false,
    };
    dfs(g, &slots, &mut Vec::with_capacity(n), 0, 0, &mut best);
    Ok((best.code, best.order))
}

/// A code that is equal for two graphs iff they are isomorphic
/// (together with the vertex count).
pub fn canonical_code(g: &Graph) -> Result<(usize, u64)> {
    Ok((g.n(), canonical_labeling(g)?.0))
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    let mut perm = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    Ok(g.permuted(&perm))
}

/// A bijection `phi` with `uv ∈ E(a) ⇔ phi(u)phi(v) ∈ E(b)`, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let (ca, oa) = canonical_labeling(a)?;
    let (cb, ob) = canonical_labeling(b)?;
    if ca != cb {
        return Ok(None);
    }
    let mut phi = vec![0; a.n()];
    for p in 0..a.n() {
        phi[oa[p]] = ob[p];
    }
    Ok(Some(phi))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}
