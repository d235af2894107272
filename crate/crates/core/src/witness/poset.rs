//! Finite posets with order-preserving injections, spined by chains.
//!
//! The spine object `L_n` is the chain `0 < 1 < … < n-1` on `n` elements.
//! Pushouts are computed in the category of posets with all monotone maps,
//! which is where the obstruction to a spinal functor lives.

use std::fmt;

use crate::bitset::{self, VertexSet};
use crate::category::{
    CoconeDiagram, Morphism, MorphismKind, SpanDiagram, SpineIndex, SpinedCategory,
    DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{search_maps, MapSearch};

pub const POSET_MAX: usize = crate::graph::MAX_VERTICES;

/// A partial order on `0..n`. `up[a]` holds every `b` with `a ≤ b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    up: Vec<VertexSet>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset({}; {:?})", self.n, self.strict_pairs())
    }
}

fn reflexive_transitive_closure(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<VertexSet>> {
    Error::cap("poset", n, POSET_MAX)?;
    let mut up: Vec<VertexSet> = (0..n).map(bitset::bit).collect();
    for &(a, b) in pairs {
        for v in [a, b] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        up[a] |= bitset::bit(b);
    }
    // Warshall on bit rows.
    for k in 0..n {
        for a in 0..n {
            if up[a] & bitset::bit(k) != 0 {
                up[a] |= up[k];
            }
        }
    }
    Ok(up)
}

fn first_antisymmetry_violation(up: &[VertexSet]) -> Option<(usize, usize)> {
    (0..up.len()).find_map(|a| {
        bitset::members(up[a])
            .find(|&b| b != a && up[b] & bitset::bit(a) != 0)
            .map(|b| (a, b))
    })
}

impl Poset {
    /// The order generated by `pairs` (each `(a, b)` meaning `a ≤ b`).
    /// Fails with [`Error::AntisymmetryViolated`] when the generated preorder
    /// identifies two distinct elements.
    pub fn generated(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        let up = reflexive_transitive_closure(n, pairs)?;
        if let Some((a, b)) = first_antisymmetry_violation(&up) {
            return Err(Error::AntisymmetryViolated(a, b));
        }
        Ok(Poset { n, up })
    }

    /// Takes `pairs` as the complete relation and checks the three axioms.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        Error::cap("poset", n, POSET_MAX)?;
        let mut up = vec![0; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            up[a] |= bitset::bit(b);
        }
        if let Some(a) = (0..n).find(|&a| up[a] & bitset::bit(a) == 0) {
            return Err(Error::NotAPoset(format!("{a} ≤ {a} missing")));
        }
        if let Some((a, b)) = first_antisymmetry_violation(&up) {
            return Err(Error::NotAPoset(format!("{a} ≤ {b} and {b} ≤ {a}")));
        }
        for a in 0..n {
            for b in bitset::members(up[a]) {
                if let Some(c) = bitset::members(up[b] & !up[a]).next() {
                    return Err(Error::NotAPoset(format!(
                        "{a} ≤ {b} ≤ {c} but not {a} ≤ {c}"
                    )));
                }
            }
        }
        Ok(Poset { n, up })
    }

    /// The chain `L_n`.
    pub fn chain(n: usize) -> Result<Poset> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::generated(n, &pairs)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Result<Poset> {
        Poset::generated(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] & bitset::bit(b) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Every `(a, b)` with `a < b`, sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| {
                bitset::members(self.up[a])
                    .filter(move |&b| b != a)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        (0..self.n).all(|a| (a + 1..self.n).all(|b| self.comparable(a, b)))
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        // Longest path in the strict order; process elements by number of
        // predecessors, which is a linear extension.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&a| (0..self.n).filter(|&b| self.leq(b, a)).count());
        let mut best = vec![1usize; self.n];
        for (i, &a) in order.iter().enumerate() {
            for &b in &order[..i] {
                if b != a && self.leq(b, a) {
                    best[a] = best[a].max(best[b] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }
}

pub type PosetMorphism = Morphism<Poset>;

fn monotone_step(p: &Poset, q: &Poset, partial: &[usize], c: usize) -> bool {
    let v = partial.len();
    partial
        .iter()
        .enumerate()
        .all(|(u, &fu)| (!p.leq(u, v) || q.leq(fu, c)) && (!p.leq(v, u) || q.leq(c, fu)))
}

pub fn is_monotone(m: &PosetMorphism) -> bool {
    let (p, q) = (&m.source, &m.target);
    m.map.len() == p.n
        && m.map.iter().all(|&x| x < q.n)
        && (0..p.n).all(|a| (0..p.n).all(|b| !p.leq(a, b) || q.leq(m.map[a], m.map[b])))
}

pub fn is_poset_monomorphism(m: &PosetMorphism) -> bool {
    is_monotone(m) && bitset::len(bitset::from_members(m.map.iter().copied())) == m.map.len()
}

fn enumerate(p: &Poset, q: &Poset, injective: bool, kind: MorphismKind) -> Vec<PosetMorphism> {
    let search = MapSearch {
        domain: p.n,
        codomain: q.n,
        injective,
        limit: None,
        execution: Execution::default(),
    };
    search_maps(search, |partial, c| monotone_step(p, q, partial, c))
        .into_iter()
        .map(|map| Morphism::new(p.clone(), q.clone(), map, kind))
        .collect()
}

/// All monotone maps `p -> q`, lexicographically.
pub fn enumerate_poset_homomorphisms(p: &Poset, q: &Poset) -> Result<Vec<PosetMorphism>> {
    Error::cap("morphism domain", p.n, DEFAULT_ENUMERATION_CAP)?;
    Ok(enumerate(p, q, false, MorphismKind::PosetHomo))
}

/// All order-preserving injections `p -> q`, lexicographically.
pub fn enumerate_poset_monomorphisms(p: &Poset, q: &Poset) -> Result<Vec<PosetMorphism>> {
    Error::cap("morphism domain", p.n, DEFAULT_ENUMERATION_CAP)?;
    Ok(enumerate(p, q, true, MorphismKind::PosetMono))
}

/// An order isomorphism `a -> b`, if one exists.
pub fn find_poset_isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.n != b.n || a.strict_pairs().len() != b.strict_pairs().len() {
        return None;
    }
    let search = MapSearch {
        domain: a.n,
        codomain: b.n,
        injective: true,
        limit: Some(1),
        execution: Execution::Sequential,
    };
    let reflects = |partial: &[usize], c: usize| {
        let v = partial.len();
        partial
            .iter()
            .enumerate()
            .all(|(u, &fu)| a.leq(u, v) == b.leq(fu, c) && a.leq(v, u) == b.leq(c, fu))
    };
    search_maps(search, reflects).into_iter().next()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetPushout {
    pub apex: Poset,
    pub inj1: PosetMorphism,
    pub inj2: PosetMorphism,
}

/// The pushout of two monotone maps out of a common poset, taken among all
/// monotone maps: the disjoint union with `f(x) ~ g(x)`, ordered by the
/// generated relation.
///
/// Elements of `f.target` keep their indices; those of `g.target` not hit by
/// `g` follow in order. Fails with [`Error::AntisymmetryViolated`] when the
/// glued relation is only a preorder.
pub fn poset_pushout(f: &PosetMorphism, g: &PosetMorphism) -> Result<PosetPushout> {
    if f.source != g.source {
        return Err(Error::ApexMismatch);
    }
    if !is_monotone(f) || !is_monotone(g) {
        return Err(Error::InvalidMorphism(
            "pushout legs must be monotone".into(),
        ));
    }
    let (left, right) = (&f.target, &g.target);
    let n1 = left.n;

    // Union-find over left ⊔ right to merge f(x) with g(x).
    let total = n1 + right.n;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (&a, &b) in f.map.iter().zip(&g.map) {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, n1 + b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            parent[hi] = lo;
        }
    }
    let mut index = vec![usize::MAX; total];
    let mut next = 0;
    for x in 0..total {
        let r = find(&mut parent, x);
        if index[r] == usize::MAX {
            index[r] = next;
            next += 1;
        }
        index[x] = index[r];
    }
    let mut pairs = Vec::new();
    pairs.extend(
        left.strict_pairs()
            .into_iter()
            .map(|(a, b)| (index[a], index[b])),
    );
    pairs.extend(
        right
            .strict_pairs()
            .into_iter()
            .map(|(a, b)| (index[n1 + a], index[n1 + b])),
    );
    let apex = Poset::generated(next, &pairs)?;
    let inj1 = Morphism::new(
        left.clone(),
        apex.clone(),
        index[..n1].to_vec(),
        MorphismKind::PosetHomo,
    );
    let inj2 = Morphism::new(
        right.clone(),
        apex.clone(),
        index[n1..].to_vec(),
        MorphismKind::PosetHomo,
    );
    Ok(PosetPushout { apex, inj1, inj2 })
}

/// Finite posets with order-preserving injections; spine `n ↦ L_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PosetMono {
    cap: usize,
}

impl Default for PosetMono {
    fn default() -> Self {
        PosetMono {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

pub fn poset_mono_instance() -> PosetMono {
    PosetMono::default()
}

impl SpinedCategory for PosetMono {
    type Object = Poset;

    fn name(&self) -> &str {
        "Poset_mono"
    }

    fn cap(&self) -> usize {
        self.cap
    }

    fn size(&self, x: &Poset) -> usize {
        x.n
    }

    fn spine(&self, n: SpineIndex) -> Result<Poset> {
        Poset::chain(n)
    }

    fn identity(&self, x: &Poset) -> PosetMorphism {
        Morphism::new(
            x.clone(),
            x.clone(),
            (0..x.n).collect(),
            MorphismKind::PosetMono,
        )
    }

    fn is_morphism(&self, m: &PosetMorphism) -> bool {
        is_poset_monomorphism(m)
    }

    fn morphisms(&self, from: &Poset, to: &Poset) -> Result<Vec<PosetMorphism>> {
        Error::cap("morphism domain", from.n, self.cap)?;
        Ok(enumerate(from, to, true, MorphismKind::PosetMono))
    }

    /// The pushout among monotone maps. Its legs stay injective on each side
    /// because a chain sits inside both targets with the same order, but
    /// nothing here makes the apex a spinal proxy: see
    /// [`demo_poset_no_sfunctor`](super::demo_poset_no_sfunctor).
    fn proxy_pushout(&self, span: &SpanDiagram<Poset>) -> Result<CoconeDiagram<Poset>> {
        self.validate_span(span)?;
        let p = poset_pushout(&span.left, &span.right)?;
        let relabel = |m: PosetMorphism| Morphism {
            kind: MorphismKind::PosetMono,
            ..m
        };
        Ok(CoconeDiagram {
            apex: p.apex,
            left_leg: relabel(p.inj1),
            right_leg: relabel(p.inj2),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Poset::from_relation(2, &[(0, 0), (1, 1), (0, 1)]).is_ok());
        assert!(matches!(
            Poset::from_relation(2, &[(0, 0)]),
            Err(Error::NotAPoset(_))
        ));
        assert!(matches!(
            Poset::from_relation(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]),
            Err(Error::NotAPoset(_))
        ));
        assert!(matches!(
            Poset::from_relation(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
            Err(Error::NotAPoset(_))
        ));
        assert_eq!(
            Poset::generated(2, &[(0, 1), (1, 0)]),
            Err(Error::AntisymmetryViolated(0, 1))
        );
    }

    #[test]
    fn chains() {
        let l = Poset::chain(4).unwrap();
        assert!(l.is_chain());
        assert_eq!(l.height(), 4);
        assert_eq!(Poset::antichain(3).unwrap().height(), 1);
        assert_eq!(Poset::chain(0).unwrap().height(), 0);
        // C(4, 2) order-preserving injections L_2 -> L_4.
        let m = enumerate_poset_monomorphisms(&Poset::chain(2).unwrap(), &l).unwrap();
        assert_eq!(m.len(), 6);
    }

    #[test]
    fn pushout_of_chains_along_a_point() {
        let one = Poset::chain(1).unwrap();
        let f = Morphism::new(
            one.clone(),
            Poset::chain(3).unwrap(),
            vec![2],
            MorphismKind::PosetMono,
        );
        let g = Morphism::new(
            one,
            Poset::chain(2).unwrap(),
            vec![0],
            MorphismKind::PosetMono,
        );
        let p = poset_pushout(&f, &g).unwrap();
        assert!(p.apex.is_chain());
        assert_eq!(p.apex.n(), 4);
        assert!(find_poset_isomorphism(&p.apex, &Poset::chain(4).unwrap()).is_some());
    }
}
