use super::{
    is_hypergraph_monomorphism, search_monomorphisms, spine_hypergraph, Hypergraph,
    HypergraphMorphism,
};
use crate::bitset;
use crate::category::{
    CoconeDiagram, Morphism, MorphismKind, SpanDiagram, SpineIndex, SpinedCategory,
    DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::exec::Execution;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergraphPushout {
    pub apex: Hypergraph,
    pub inj1: HypergraphMorphism,
    pub inj2: HypergraphMorphism,
}

/// Glues `h1.target` and `h2.target` along the images of `([n], 2^[n])`,
/// merging the two hyperedge families. Vertex numbering follows
/// [`crate::graph::clique_sum`]: the left side keeps its indices.
pub fn hgr_proxy_pushout(
    h1: &HypergraphMorphism,
    h2: &HypergraphMorphism,
) -> Result<HypergraphPushout> {
    if h1.source != h2.source {
        return Err(Error::ApexMismatch);
    }
    let k = h1.source.n();
    if k > super::SPINE_CAP || h1.source != spine_hypergraph(k)? {
        return Err(Error::SpineMismatch(k));
    }
    if !is_hypergraph_monomorphism(h1) || !is_hypergraph_monomorphism(h2) {
        return Err(Error::LegsNotMono);
    }
    let (left, right) = (&h1.target, &h2.target);
    let mut right_map = vec![usize::MAX; right.n()];
    for (i, &w) in h2.map.iter().enumerate() {
        right_map[w] = h1.map[i];
    }
    let mut next = left.n();
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut apex = Hypergraph::new(next)?;
    for e in left.edge_sets() {
        apex.add_edge_set(e);
    }
    for e in right.edge_sets() {
        apex.add_edge_set(bitset::members(e).fold(0, |acc, v| acc | bitset::bit(right_map[v])));
    }
    Ok(HypergraphPushout {
        inj1: Morphism::new(
            left.clone(),
            apex.clone(),
            (0..left.n()).collect(),
            MorphismKind::HypergraphMono,
        ),
        inj2: Morphism::new(
            right.clone(),
            apex.clone(),
            right_map,
            MorphismKind::HypergraphMono,
        ),
        apex,
    })
}

/// Hypergraphs with injective homomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HgrMono {
    cap: usize,
}

impl Default for HgrMono {
    fn default() -> Self {
        HgrMono {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl HgrMono {
    pub fn with_cap(cap: usize) -> Self {
        HgrMono { cap }
    }
}

pub fn hgr_instance() -> HgrMono {
    HgrMono::default()
}

impl SpinedCategory for HgrMono {
    type Object = Hypergraph;

    fn name(&self) -> &str {
        "HGr_mono"
    }

    fn cap(&self) -> usize {
        self.cap
    }

    fn size(&self, x: &Hypergraph) -> usize {
        x.n()
    }

    fn spine(&self, n: SpineIndex) -> Result<Hypergraph> {
        spine_hypergraph(n)
    }

    fn identity(&self, x: &Hypergraph) -> HypergraphMorphism {
        Morphism::new(
            x.clone(),
            x.clone(),
            (0..x.n()).collect(),
            MorphismKind::HypergraphMono,
        )
    }

    fn is_morphism(&self, m: &HypergraphMorphism) -> bool {
        is_hypergraph_monomorphism(m)
    }

    fn morphisms(&self, from: &Hypergraph, to: &Hypergraph) -> Result<Vec<HypergraphMorphism>> {
        Error::cap("morphism domain", from.n(), self.cap)?;
        Ok(search_monomorphisms(from, to, None, Execution::default()))
    }

    fn first_morphism(
        &self,
        from: &Hypergraph,
        to: &Hypergraph,
    ) -> Result<Option<HypergraphMorphism>> {
        Error::cap("morphism domain", from.n(), self.cap)?;
        Ok(search_monomorphisms(from, to, Some(1), Execution::Sequential).pop())
    }

    fn proxy_pushout(&self, span: &SpanDiagram<Hypergraph>) -> Result<CoconeDiagram<Hypergraph>> {
        self.validate_span(span)?;
        let p = hgr_proxy_pushout(&span.left, &span.right)?;
        Ok(CoconeDiagram {
            apex: p.apex,
            left_leg: p.inj1,
            right_leg: p.inj2,
        })
    }
}
