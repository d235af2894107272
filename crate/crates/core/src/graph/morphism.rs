use super::Graph;
use crate::bitset;
use crate::category::{Morphism, MorphismKind, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::exec::Execution;

pub type GraphMorphism = Morphism<Graph>;

/// Parameters of a backtracking search over vertex maps
/// `0..domain -> 0..codomain`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct MapSearch {
    pub domain: usize,
    pub codomain: usize,
    pub injective: bool,
    /// Stop after this many maps (sequential search).
    pub limit: Option<usize>,
    pub execution: Execution,
}

/// All maps accepted by `accept`, in lexicographic order.
///
/// `accept(partial, c)` decides whether vertex `partial.len()` may be sent to
/// `c` given the images already fixed in `partial`. The parallel path splits
/// on the image of vertex 0 and concatenates in order, so the output does not
/// depend on the schedule.
pub(crate) fn search_maps<F>(search: MapSearch, accept: F) -> Vec<Vec<usize>>
where
    F: Fn(&[usize], usize) -> bool + Sync,
{
    fn dfs<F: Fn(&[usize], usize) -> bool>(
        s: &MapSearch,
        accept: &F,
        assign: &mut Vec<usize>,
        used: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        if s.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if assign.len() == s.domain {
            out.push(assign.clone());
            return;
        }
        for c in 0..s.codomain {
            if s.injective && used & bitset::bit(c) != 0 {
                continue;
            }
            if accept(assign, c) {
                assign.push(c);
                dfs(s, accept, assign, used | bitset::bit(c), out);
                assign.pop();
            }
        }
    }

    if search.domain == 0 || search.limit.is_some() || !search.execution.is_parallel() {
        let mut out = Vec::new();
        dfs(
            &search,
            &accept,
            &mut Vec::with_capacity(search.domain),
            0,
            &mut out,
        );
        return out;
    }
    search
        .execution
        .map_range(search.codomain, |first| {
            let mut out = Vec::new();
            if accept(&[], first) {
                let mut assign = vec![first];
                dfs(&search, &accept, &mut assign, bitset::bit(first), &mut out);
            }
            out
        })
        .into_iter()
        .flatten()
        .collect()
}

fn edges_preserved(g: &Graph, h: &Graph, partial: &[usize], c: usize) -> bool {
    let v = partial.len();
    bitset::members(g.neighbors(v) & bitset::full(v)).all(|u| h.has_edge(partial[u], c))
}

/// Whether `m` is a graph homomorphism: total, in range, edges to edges.
pub fn is_homomorphism(m: &GraphMorphism) -> bool {
    m.map.len() == m.source.n()
        && m.map.iter().all(|&v| v < m.target.n())
        && m.source
            .edges()
            .into_iter()
            .all(|(u, v)| m.target.has_edge(m.map[u], m.map[v]))
}

/// A homomorphism that is injective on vertices.
pub fn is_monomorphism(m: &GraphMorphism) -> bool {
    is_homomorphism(m) && bitset::len(bitset::from_members(m.map.iter().copied())) == m.map.len()
}

fn wrap(g: &Graph, h: &Graph, maps: Vec<Vec<usize>>, kind: MorphismKind) -> Vec<GraphMorphism> {
    maps.into_iter()
        .map(|map| Morphism::new(g.clone(), h.clone(), map, kind))
        .collect()
}

/// All injective homomorphisms `g -> h`, lexicographically ordered.
pub fn enumerate_monomorphisms(g: &Graph, h: &Graph) -> Result<Vec<GraphMorphism>> {
    enumerate_monomorphisms_with(g, h, DEFAULT_ENUMERATION_CAP, Execution::default())
}

pub fn enumerate_monomorphisms_with(
    g: &Graph,
    h: &Graph,
    cap: usize,
    execution: Execution,
) -> Result<Vec<GraphMorphism>> {
    Error::cap("morphism domain", g.n(), cap)?;
    let search = MapSearch {
        domain: g.n(),
        codomain: h.n(),
        injective: true,
        limit: None,
        execution,
    };
    let maps = search_maps(search, |p, c| edges_preserved(g, h, p, c));
    Ok(wrap(g, h, maps, MorphismKind::Mono))
}

/// All homomorphisms `g -> h` (not necessarily injective).
pub fn enumerate_homomorphisms(g: &Graph, h: &Graph) -> Result<Vec<GraphMorphism>> {
    Error::cap("morphism domain", g.n(), DEFAULT_ENUMERATION_CAP)?;
    let search = MapSearch {
        domain: g.n(),
        codomain: h.n(),
        injective: false,
        limit: None,
        execution: Execution::default(),
    };
    let maps = search_maps(search, |p, c| edges_preserved(g, h, p, c));
    Ok(wrap(g, h, maps, MorphismKind::Homo))
}

/// The lexicographically first injective homomorphism `g -> h`.
///
/// Not capped: it stops at the first hit, but the search is still
/// exponential in the worst case.
pub fn find_monomorphism(g: &Graph, h: &Graph) -> Option<GraphMorphism> {
    let search = MapSearch {
        domain: g.n(),
        codomain: h.n(),
        injective: true,
        limit: Some(1),
        execution: Execution::Sequential,
    };
    let maps = search_maps(search, |p, c| edges_preserved(g, h, p, c));
    wrap(g, h, maps, MorphismKind::Mono).pop()
}
