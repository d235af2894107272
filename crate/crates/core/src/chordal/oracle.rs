//! Brute-force tree-width: the minimum over all elimination orderings of the
//! largest degree at elimination time.
//!
//! Deliberately naive and independent of the subset DP: it uses a boolean
//! adjacency matrix and walks the tree of orderings depth-first, sharing the
//! simulated elimination of common prefixes and cutting branches that cannot
//! beat the best ordering found so far.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_CAP: usize = 9;

/// The tree-width of `g`; `None` for the graph without vertices.
pub fn treewidth_oracle(g: &Graph) -> Result<Option<usize>> {
    let n = g.n();
    Error::cap("tree-width oracle vertices", n, ORACLE_CAP)?;
    if n == 0 {
        return Ok(None);
    }
    let mut adj: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect())
        .collect();
    let mut best = n - 1;
    let mut alive = vec![true; n];
    search(&mut adj, &mut alive, n, 0, &mut best);
    Ok(Some(best))
}

fn search(
    adj: &mut Vec<Vec<bool>>,
    alive: &mut Vec<bool>,
    remaining: usize,
    width: usize,
    best: &mut usize,
) {
    if remaining == 0 {
        *best = (*best).min(width);
        return;
    }
    let n = adj.len();
    for v in 0..n {
        if !alive[v] {
            continue;
        }
        let nbrs: Vec<usize> = (0..n).filter(|&u| alive[u] && adj[v][u]).collect();
        let w = width.max(nbrs.len());
        // `best` starts at n - 1, which every ordering achieves.
        if w >= *best {
            continue;
        }
        let saved = adj.clone();
        for &a in &nbrs {
            for &b in &nbrs {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
        alive[v] = false;
        search(adj, alive, remaining - 1, w, best);
        alive[v] = true;
        *adj = saved;
    }
}
