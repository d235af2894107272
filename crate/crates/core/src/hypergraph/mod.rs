//! Hypergraphs, the category of hypergraphs with injective homomorphisms
//! (spine `n ↦ ([n], 2^[n])`), the Gaifman functor and hypergraph
//! tree-width.

mod instance;
mod width;

pub use instance::{hgr_instance, hgr_proxy_pushout, HgrMono, HypergraphPushout};
pub use width::{
    hypergraph_treewidth, hypergraph_treewidth_direct, hypergraph_triangulation_functor, DIRECT_CAP,
};

use std::collections::BTreeSet;
use std::fmt::Write;

use rand::Rng;

use crate::bitset::{self, VertexSet};
use crate::category::{Morphism, MorphismKind, DEFAULT_ENUMERATION_CAP};
use crate::chordal::Decomposable;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{search_maps, Graph, MapSearch, MAX_VERTICES};

/// Largest spine index: `([n], 2^[n])` has `2^n` hyperedges.
pub const SPINE_CAP: usize = 16;

/// A finite hypergraph on `0..n`; hyperedges are stored as sorted bitsets,
/// without duplicates. The empty hyperedge is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<VertexSet>,
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<Vec<usize>> = self.edge_lists();
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

pub type HypergraphMorphism = Morphism<Hypergraph>;

impl Hypergraph {
    pub fn new(n: usize) -> Result<Hypergraph> {
        Error::cap("hypergraph vertices", n, MAX_VERTICES)?;
        Ok(Hypergraph {
            n,
            edges: BTreeSet::new(),
        })
    }

    pub fn from_edges(n: usize, edges: &[Vec<usize>]) -> Result<Hypergraph> {
        let mut h = Hypergraph::new(n)?;
        for e in edges {
            h.add_edge(e)?;
        }
        Ok(h)
    }

    /// Adds a hyperedge; repeated vertices and repeated edges collapse.
    pub fn add_edge(&mut self, edge: &[usize]) -> Result<()> {
        if let Some(&v) = edge.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.edges
            .insert(bitset::from_members(edge.iter().copied()));
        Ok(())
    }

    pub(crate) fn add_edge_set(&mut self, edge: VertexSet) {
        debug_assert_eq!(edge & !bitset::full(self.n), 0);
        self.edges.insert(edge);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, edge: VertexSet) -> bool {
        self.edges.contains(&edge)
    }

    /// Hyperedges as bitsets, in increasing order.
    pub fn edge_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .map(|&e| bitset::members(e).collect())
            .collect()
    }

    /// The same hypergraph viewed as 2-uniform, one hyperedge per edge.
    pub fn from_graph(g: &Graph) -> Hypergraph {
        let mut h = Hypergraph::new(g.n()).expect("graph within cap");
        for (u, v) in g.edges() {
            h.add_edge_set(bitset::bit(u) | bitset::bit(v));
        }
        h
    }
}

impl Decomposable for Hypergraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn covering_sets(&self) -> Vec<Vec<usize>> {
        self.edge_lists()
    }
}

/// `([n], 2^[n])`.
pub fn spine_hypergraph(n: usize) -> Result<Hypergraph> {
    Error::cap("spine hypergraph index", n, SPINE_CAP)?;
    Ok(Hypergraph {
        n,
        edges: (0..1u64 << n).collect(),
    })
}

/// The Gaifman (primal) graph: `uv` is an edge iff some hyperedge holds both.
pub fn gaifman(h: &Hypergraph) -> Graph {
    let mut g = Graph::new(h.n).expect("hypergraph within cap");
    for e in h.edge_sets() {
        let members: Vec<usize> = bitset::members(e).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                g.add_edge(u, v).expect("distinct vertices in range");
            }
        }
    }
    g
}

fn image(map: &[usize], edge: VertexSet) -> VertexSet {
    bitset::members(edge).fold(0, |acc, v| acc | bitset::bit(map[v]))
}

/// Whether `m` maps every hyperedge onto a hyperedge.
pub fn is_hypergraph_homomorphism(m: &HypergraphMorphism) -> bool {
    m.map.len() == m.source.n
        && m.map.iter().all(|&v| v < m.target.n)
        && m.source
            .edge_sets()
            .all(|e| m.target.has_edge(image(&m.map, e)))
}

pub fn is_hypergraph_monomorphism(m: &HypergraphMorphism) -> bool {
    is_hypergraph_homomorphism(m)
        && bitset::len(bitset::from_members(m.map.iter().copied())) == m.map.len()
}

/// Edges of `h` grouped by their largest vertex, so a partial map can be
/// checked as soon as an edge is fully assigned.
fn edges_by_last_vertex(h: &Hypergraph) -> Vec<Vec<VertexSet>> {
    let mut out = vec![Vec::new(); h.n];
    for e in h.edge_sets().filter(|&e| e != 0) {
        out[63 - e.leading_zeros() as usize].push(e);
    }
    out
}

fn search_monomorphisms(
    a: &Hypergraph,
    b: &Hypergraph,
    limit: Option<usize>,
    execution: Execution,
) -> Vec<HypergraphMorphism> {
    if a.has_edge(0) && !b.has_edge(0) {
        return Vec::new();
    }
    let by_last = edges_by_last_vertex(a);
    let search = MapSearch {
        domain: a.n,
        codomain: b.n,
        injective: true,
        limit,
        execution,
    };
    let maps = search_maps(search, |partial, c| {
        let v = partial.len();
        by_last[v].iter().all(|&e| {
            let img = image(partial, e & !bitset::bit(v)) | bitset::bit(c);
            b.has_edge(img)
        })
    });
    maps.into_iter()
        .map(|map| Morphism::new(a.clone(), b.clone(), map, MorphismKind::HypergraphMono))
        .collect()
}

/// All injective hypergraph homomorphisms `a -> b`, lexicographically.
pub fn enumerate_hypergraph_monomorphisms(
    a: &Hypergraph,
    b: &Hypergraph,
) -> Result<Vec<HypergraphMorphism>> {
    Error::cap("morphism domain", a.n, DEFAULT_ENUMERATION_CAP)?;
    Ok(search_monomorphisms(a, b, None, Execution::default()))
}

/// Random hypergraph on `1..=max_n` vertices with up to `max_edges`
/// non-empty hyperedges of random size.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=max_edges);
    let mut h = Hypergraph::new(n).expect("within cap");
    for _ in 0..m {
        let size = rng.random_range(1..=n.min(4));
        let mut e = 0;
        while bitset::len(e) < size {
            e |= bitset::bit(rng.random_range(0..n));
        }
        h.add_edge_set(e);
    }
    h
}

/// Like [`random_hypergraph`], plus every subset of one random vertex set,
/// so that some spine object (at least `([0], {∅})`) maps in.
pub fn random_spanning_hypergraph<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_edges: usize,
) -> Hypergraph {
    let mut h = random_hypergraph(rng, max_n, max_edges);
    let core: VertexSet = (0..h.n)
        .filter(|_| rng.random_bool(0.5))
        .fold(0, |acc, v| acc | bitset::bit(v));
    // All subsets of `core`, enumerated by the standard submask walk.
    let mut sub = core;
    loop {
        h.add_edge_set(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & core;
    }
    h
}

/// Text format: `n m`, then `m` lines, one hyperedge each (0-based vertex
/// lists). A blank line is the empty hyperedge. Lines starting with `#` are
/// skipped and a trailing `# ...` is stripped.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    let (hline, header) = loop {
        match lines.next() {
            Some((_, "")) => continue,
            Some(found) => break found,
            None => return Err(Error::parse(1, "missing `n m` header")),
        }
    };
    let nums = crate::graph::io::parse_numbers(hline, header)?;
    let [n, m] = nums[..] else {
        return Err(Error::parse(hline, "header must be `n m`"));
    };
    let mut h = Hypergraph::new(n)?;
    for k in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| {
            Error::parse(hline, format!("header announces {m} hyperedges, found {k}"))
        })?;
        let verts = crate::graph::io::parse_numbers(line_no, line)?;
        h.add_edge(&verts)
            .map_err(|e| Error::parse(line_no, e.to_string()))?;
    }
    if let Some((line_no, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(Error::parse(line_no, "more hyperedge lines than announced"));
    }
    Ok(h)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {}\n", h.n, h.edge_count());
    for e in h.edge_lists() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}
