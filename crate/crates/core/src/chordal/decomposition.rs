//! Tree decompositions, their validator, and the PACE `.td` format.
//!
//! The validator works on plain vertex lists and its own union-find, sharing
//! nothing with the engines that produce decompositions.

use std::fmt::{self, Write};

use crate::error::{Error, Result};
use crate::graph::io::{content_lines, parse_numbers};
use crate::graph::Graph;

/// A tree on nodes `0..bags.len()` with one bag of object vertices per node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Number of vertices of the decomposed object.
    pub vertex_count: usize,
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
    /// `width + 1` as announced by a parsed certificate header.
    pub declared_delta: Option<usize>,
}

impl TreeDecomposition {
    pub fn new(
        vertex_count: usize,
        bags: Vec<Vec<usize>>,
        tree_edges: Vec<(usize, usize)>,
    ) -> Self {
        TreeDecomposition {
            vertex_count,
            bags,
            tree_edges,
            declared_delta: None,
        }
    }

    /// The decomposition with a single bag holding every vertex.
    pub fn trivial(vertex_count: usize) -> Self {
        let bags = if vertex_count == 0 {
            Vec::new()
        } else {
            vec![(0..vertex_count).collect()]
        };
        TreeDecomposition::new(vertex_count, bags, Vec::new())
    }

    /// Largest bag size, i.e. width + 1.
    pub fn delta(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `None` when every bag is empty (or there are none).
    pub fn width(&self) -> Option<usize> {
        self.delta().checked_sub(1)
    }
}

/// Objects whose tree decompositions can be validated: a vertex count and
/// the sets every one of which must lie inside some bag.
pub trait Decomposable {
    fn vertex_count(&self) -> usize;
    fn covering_sets(&self) -> Vec<Vec<usize>>;
}

impl Decomposable for Graph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn covering_sets(&self) -> Vec<Vec<usize>> {
        self.edges().into_iter().map(|(u, v)| vec![u, v]).collect()
    }
}

/// The first condition a decomposition was found to violate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexCountMismatch {
        expected: usize,
        found: usize,
    },
    BagVertexOutOfRange {
        bag: usize,
        vertex: usize,
    },
    NotATree(String),
    /// A set that must be covered is contained in no bag.
    EdgeNotCovered(Vec<usize>),
    /// The vertex occurs in no bag.
    VertexMissing(usize),
    /// The nodes whose bags hold the vertex do not induce a subtree.
    VertexDisconnected(usize),
    WidthMismatch {
        declared: usize,
        actual: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCountMismatch { expected, found } => {
                write!(
                    f,
                    "decomposition is for {found} vertices, object has {expected}"
                )
            }
            Violation::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} holds vertex {vertex}, which does not exist")
            }
            Violation::NotATree(why) => write!(f, "not a tree: {why}"),
            Violation::EdgeNotCovered(e) => write!(f, "edge {e:?} lies in no bag"),
            Violation::VertexMissing(v) => write!(f, "vertex {v} lies in no bag"),
            Violation::VertexDisconnected(v) => {
                write!(f, "bags holding vertex {v} are not connected")
            }
            Violation::WidthMismatch { declared, actual } => {
                write!(
                    f,
                    "header declares bag size {declared}, largest bag has {actual}"
                )
            }
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    /// `false` if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Checks that `td` is a tree decomposition of `obj`. On success returns the
/// largest bag size (width + 1).
pub fn validate_tree_decomposition<D: Decomposable + ?Sized>(
    obj: &D,
    td: &TreeDecomposition,
) -> std::result::Result<usize, Violation> {
    let n = obj.vertex_count();
    if td.vertex_count != n {
        return Err(Violation::VertexCountMismatch {
            expected: n,
            found: td.vertex_count,
        });
    }
    let k = td.bags.len();
    let mut member = vec![vec![false; n]; k];
    for (b, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(Violation::BagVertexOutOfRange { bag: b, vertex: v });
            }
            member[b][v] = true;
        }
    }

    // The tree: k - 1 edges joining all k nodes without a cycle.
    let mut uf = UnionFind::new(k);
    for &(a, b) in &td.tree_edges {
        if a >= k || b >= k {
            return Err(Violation::NotATree(format!(
                "edge {a}-{b} names a missing node"
            )));
        }
        if !uf.union(a, b) {
            return Err(Violation::NotATree(format!("edge {a}-{b} closes a cycle")));
        }
    }
    if k > 0 && td.tree_edges.len() != k - 1 {
        return Err(Violation::NotATree(format!(
            "{} nodes but {} edges",
            k,
            td.tree_edges.len()
        )));
    }
    if k == 0 && !td.tree_edges.is_empty() {
        return Err(Violation::NotATree("edges without nodes".into()));
    }

    for set in obj.covering_sets() {
        // The empty set lies in every bag, and in no bag when there are none;
        // it is covered vacuously either way.
        if !set.is_empty() && !(0..k).any(|b| set.iter().all(|&v| member[b][v])) {
            return Err(Violation::EdgeNotCovered(set));
        }
    }

    #[allow(clippy::needless_range_loop)]
    for v in 0..n {
        let holders: Vec<usize> = (0..k).filter(|&b| member[b][v]).collect();
        let Some(&first) = holders.first() else {
            return Err(Violation::VertexMissing(v));
        };
        // Connected iff the tree edges inside `holders` form a spanning tree
        // of them, i.e. there are exactly |holders| - 1 of them (a forest).
        let mut sub = UnionFind::new(k);
        for &(a, b) in &td.tree_edges {
            if member[a][v] && member[b][v] {
                sub.union(a, b);
            }
        }
        let root = sub.find(first);
        if holders.iter().any(|&b| sub.find(b) != root) {
            return Err(Violation::VertexDisconnected(v));
        }
    }

    let actual = td.delta();
    if let Some(declared) = td.declared_delta {
        if declared != actual {
            return Err(Violation::WidthMismatch { declared, actual });
        }
    }
    Ok(actual)
}

/// PACE `.td` text. Bag ids and vertices are 1-based in this format.
pub fn write_pace(td: &TreeDecomposition) -> String {
    let mut out = format!(
        "s td {} {} {}\n",
        td.bags.len(),
        td.delta(),
        td.vertex_count
    );
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &td.tree_edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses PACE `.td` text; `c` lines are comments. The declared width is
/// kept so that the validator can compare it with the bags.
pub fn parse_pace(text: &str) -> Result<TreeDecomposition> {
    let mut header = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges = Vec::new();
    for (line_no, line) in content_lines(text) {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("s") => {
                if header.is_some() {
                    return Err(Error::parse(line_no, "second `s` line"));
                }
                if tokens.next() != Some("td") {
                    return Err(Error::parse(
                        line_no,
                        "expected `s td <bags> <width+1> <n>`",
                    ));
                }
                let rest: Vec<&str> = tokens.collect();
                let nums = parse_numbers(line_no, &rest.join(" "))?;
                let [k, delta, n] = nums[..] else {
                    return Err(Error::parse(
                        line_no,
                        "expected `s td <bags> <width+1> <n>`",
                    ));
                };
                bags = vec![None; k];
                header = Some((delta, n));
            }
            Some("b") => {
                let (_, n) = header.ok_or_else(|| Error::parse(line_no, "bag before header"))?;
                let rest: Vec<&str> = tokens.collect();
                let nums = parse_numbers(line_no, &rest.join(" "))?;
                let Some((&id, verts)) = nums.split_first() else {
                    return Err(Error::parse(line_no, "bag line without an id"));
                };
                if id == 0 || id > bags.len() {
                    return Err(Error::parse(line_no, format!("bag id {id} out of range")));
                }
                if bags[id - 1].is_some() {
                    return Err(Error::parse(line_no, format!("bag {id} given twice")));
                }
                let mut bag = Vec::with_capacity(verts.len());
                for &v in verts {
                    if v == 0 || v > n {
                        return Err(Error::parse(line_no, format!("vertex {v} out of range")));
                    }
                    bag.push(v - 1);
                }
                bags[id - 1] = Some(bag);
            }
            Some(_) => {
                if header.is_none() {
                    return Err(Error::parse(line_no, "tree edge before header"));
                }
                let nums = parse_numbers(line_no, line)?;
                let [a, b] = nums[..] else {
                    return Err(Error::parse(line_no, "tree edge must be `a b`"));
                };
                if a == 0 || b == 0 || a > bags.len() || b > bags.len() {
                    return Err(Error::parse(line_no, "tree edge names a missing bag"));
                }
                tree_edges.push((a - 1, b - 1));
            }
            None => {}
        }
    }
    let (delta, n) = header.ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(0, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeDecomposition {
        vertex_count: n,
        bags,
        tree_edges,
        declared_delta: Some(delta),
    })
}
