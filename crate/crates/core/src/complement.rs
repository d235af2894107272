//! Graphs with reflexive monomorphisms, spined by the discrete graphs `K̄_n`
//! with the independent gluing `𝔍` as proxy pushout, and the complementation
//! isomorphism onto graphs with injective homomorphisms.

use crate::bitset;
use crate::category::{
    CoconeDiagram, Morphism, MorphismKind, SFunctor, SpanDiagram, SpineIndex, SpinedCategory,
    DEFAULT_ENUMERATION_CAP,
};
use crate::chordal::{is_chordal, treewidth_dp, TreewidthResult};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{
    complement, discrete_graph, independence_number, is_monomorphism, search_maps, Graph,
    GraphMorphism, MapSearch, MAX_VERTICES,
};

/// Whether `f(x)f(y) ∈ E(target)` implies `xy ∈ E(source)` for all pairs.
pub fn is_reflexive_homomorphism(m: &GraphMorphism) -> bool {
    let (g, h) = (&m.source, &m.target);
    m.map.len() == g.n()
        && m.map.iter().all(|&v| v < h.n())
        && (0..g.n())
            .all(|x| (x + 1..g.n()).all(|y| !h.has_edge(m.map[x], m.map[y]) || g.has_edge(x, y)))
}

pub fn is_reflexive_monomorphism(m: &GraphMorphism) -> bool {
    is_reflexive_homomorphism(m)
        && bitset::len(bitset::from_members(m.map.iter().copied())) == m.map.len()
}

fn search_reflexive(
    g: &Graph,
    h: &Graph,
    limit: Option<usize>,
    execution: Execution,
) -> Vec<GraphMorphism> {
    let search = MapSearch {
        domain: g.n(),
        codomain: h.n(),
        injective: true,
        limit,
        execution,
    };
    let maps = search_maps(search, |partial, c| {
        let v = partial.len();
        (0..v).all(|u| !h.has_edge(partial[u], c) || g.has_edge(u, v))
    });
    maps.into_iter()
        .map(|map| Morphism::new(g.clone(), h.clone(), map, MorphismKind::ReflexiveMono))
        .collect()
}

/// All injective reflexive homomorphisms `g -> h`, lexicographically.
pub fn enumerate_reflexive_monomorphisms(g: &Graph, h: &Graph) -> Result<Vec<GraphMorphism>> {
    Error::cap("morphism domain", g.n(), DEFAULT_ENUMERATION_CAP)?;
    Ok(search_reflexive(g, h, None, Execution::default()))
}

/// `𝔍(ℓ, r)` with its two legs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentGluing {
    pub left: Graph,
    pub right: Graph,
    /// Size of the shared independent set.
    pub n: usize,
    pub apex: Graph,
    pub left_leg: GraphMorphism,
    pub right_leg: GraphMorphism,
}

fn glue(l: &GraphMorphism, r: &GraphMorphism, join: bool) -> Result<IndependentGluing> {
    if l.source != r.source {
        return Err(Error::ApexMismatch);
    }
    let k = &l.source;
    if k.edge_count() != 0 || !is_reflexive_monomorphism(l) || !is_reflexive_monomorphism(r) {
        return Err(Error::LegsInvalid);
    }
    let (left, right) = (&l.target, &r.target);
    let mut right_map = vec![usize::MAX; right.n()];
    for (i, &w) in r.map.iter().enumerate() {
        right_map[w] = l.map[i];
    }
    let mut next = left.n();
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    Error::cap("graph vertices", next, MAX_VERTICES)?;
    let mut apex = Graph::new(next)?;
    for (u, v) in left.edges() {
        apex.add_edge(u, v)?;
    }
    for (u, v) in right.edges() {
        apex.add_edge(right_map[u], right_map[v])?;
    }
    if join {
        let shared = bitset::from_members(l.map.iter().copied());
        for u in bitset::members(bitset::full(left.n()) & !shared) {
            for v in left.n()..next {
                apex.add_edge(u, v)?;
            }
        }
    }
    let left_leg = Morphism::new(
        left.clone(),
        apex.clone(),
        (0..left.n()).collect(),
        MorphismKind::ReflexiveMono,
    );
    let right_leg = Morphism::new(
        right.clone(),
        apex.clone(),
        right_map,
        MorphismKind::ReflexiveMono,
    );
    if join {
        assert!(is_reflexive_monomorphism(&left_leg) && is_reflexive_monomorphism(&right_leg));
    }
    Ok(IndependentGluing {
        left: left.clone(),
        right: right.clone(),
        n: k.n(),
        apex,
        left_leg,
        right_leg,
    })
}

/// Identifies `L` and `R` along the images of `K̄_n` and makes every
/// remaining vertex of `L` adjacent to every remaining vertex of `R`.
/// Left vertices keep their indices; the rest of `R` follows in order.
pub fn independent_gluing(l: &GraphMorphism, r: &GraphMorphism) -> Result<IndependentGluing> {
    glue(l, r, true)
}

/// Graphs with reflexive monomorphisms, spine `n ↦ K̄_n`, proxy pushout `𝔍`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RMono {
    cap: usize,
}

impl Default for RMono {
    fn default() -> Self {
        RMono {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl RMono {
    pub fn with_cap(cap: usize) -> Self {
        RMono { cap }
    }
}

pub fn rmono_instance() -> RMono {
    RMono::default()
}

macro_rules! reflexive_category {
    ($ty:ty, $name:expr, $join:expr) => {
        impl SpinedCategory for $ty {
            type Object = Graph;

            fn name(&self) -> &str {
                $name
            }

            fn cap(&self) -> usize {
                self.cap
            }

            fn size(&self, x: &Graph) -> usize {
                x.n()
            }

            fn spine(&self, n: SpineIndex) -> Result<Graph> {
                Error::cap("spine index", n, MAX_VERTICES)?;
                Ok(discrete_graph(n))
            }

            fn identity(&self, x: &Graph) -> GraphMorphism {
                Morphism::new(
                    x.clone(),
                    x.clone(),
                    (0..x.n()).collect(),
                    MorphismKind::ReflexiveMono,
                )
            }

            fn is_morphism(&self, m: &GraphMorphism) -> bool {
                is_reflexive_monomorphism(m)
            }

            fn morphisms(&self, from: &Graph, to: &Graph) -> Result<Vec<GraphMorphism>> {
                Error::cap("morphism domain", from.n(), self.cap)?;
                Ok(search_reflexive(from, to, None, Execution::default()))
            }

            fn first_morphism(&self, from: &Graph, to: &Graph) -> Result<Option<GraphMorphism>> {
                Error::cap("morphism domain", from.n(), self.cap)?;
                Ok(search_reflexive(from, to, Some(1), Execution::Sequential).pop())
            }

            fn proxy_pushout(&self, span: &SpanDiagram<Graph>) -> Result<CoconeDiagram<Graph>> {
                self.validate_span(span)?;
                let p = glue(&span.left, &span.right, $join)?;
                Ok(CoconeDiagram {
                    apex: p.apex,
                    left_leg: p.left_leg,
                    right_leg: p.right_leg,
                })
            }
        }
    };
}

reflexive_category!(RMono, "R_mono", true);

/// The same category with the naive gluing (identification only, no join)
/// as its would-be proxy pushout. It admits no S-functor: gluing `K̄_l` and
/// `K̄_r` along `K̄_n` gives the spine object `K̄_{l+r-n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveRMono {
    cap: usize,
}

impl Default for NaiveRMono {
    fn default() -> Self {
        NaiveRMono {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

reflexive_category!(NaiveRMono, "R_mono with naive gluing", false);

/// Complementation on arrows. A reflexive monomorphism `A -> B` becomes the
/// injective homomorphism `Ā -> B̄` with the same vertex map, and an
/// injective homomorphism becomes a reflexive monomorphism between the
/// complements, so applying this twice gives back the input.
pub fn complement_functor_check(m: &GraphMorphism) -> Result<GraphMorphism> {
    let kind = match m.kind {
        MorphismKind::ReflexiveMono if is_reflexive_monomorphism(m) => MorphismKind::Mono,
        MorphismKind::ReflexiveMono => return Err(Error::NotReflexiveMono),
        MorphismKind::Mono if is_monomorphism(m) => MorphismKind::ReflexiveMono,
        _ => {
            return Err(Error::InvalidMorphism(format!(
                "complementation expects a reflexive or graph monomorphism, got {:?}",
                m.kind
            )))
        }
    };
    let image = Morphism::new(
        complement(&m.source),
        complement(&m.target),
        m.map.clone(),
        kind,
    );
    let valid = match kind {
        MorphismKind::Mono => is_monomorphism(&image),
        _ => is_reflexive_monomorphism(&image),
    };
    assert!(valid, "complementation must carry arrows to arrows");
    Ok(image)
}

/// `tw(Ḡ) + 1`.
pub fn complemented_treewidth(g: &Graph) -> Result<usize> {
    Ok(complemented_decomposition(g)?.delta)
}

/// Tree-width data of the complement, whose decomposition certifies
/// [`complemented_treewidth`].
pub fn complemented_decomposition(g: &Graph) -> Result<TreewidthResult> {
    treewidth_dp(&complement(g))
}

/// The independence number, the generalized clique number of `R_mono`.
pub fn independence_number_functor() -> SFunctor<Graph> {
    SFunctor::new("independence number", |g: &Graph| {
        Ok(independence_number(g))
    })
}

/// Largest graph accepted by [`native_delta`].
pub const NATIVE_CAP: usize = 5;

/// `Δ` computed inside `R_mono` without passing to complements of the whole
/// problem: the least independence number of a `𝔍`-chordal object (the
/// complement of a chordal graph) receiving a reflexive monomorphism from
/// `g`.
///
/// A completion may be restricted to the image of `g` without raising its
/// independence number, and a bijective reflexive monomorphism `g -> h`
/// exists exactly when `h` is a spanning subgraph of `g`; so the search runs
/// over all edge subsets of `g`, each checked through the identity map.
pub fn native_delta(g: &Graph) -> Result<usize> {
    Error::cap("native completion search vertices", g.n(), NATIVE_CAP)?;
    let edges = g.edges();
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << edges.len()) {
        let kept: Vec<_> = bitset::members(mask).map(|i| edges[i]).collect();
        let h = Graph::from_edges(g.n(), &kept)?;
        if !is_chordal(&complement(&h)) {
            continue;
        }
        let id = Morphism::new(
            g.clone(),
            h.clone(),
            (0..g.n()).collect(),
            MorphismKind::ReflexiveMono,
        );
        if !is_reflexive_monomorphism(&id) {
            continue;
        }
        best = best.min(independence_number(&h));
    }
    Ok(best)
}
