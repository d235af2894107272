use super::{
    clique_sum, complete_graph, enumerate_monomorphisms_with, find_monomorphism, is_monomorphism,
    Graph, GraphMorphism, MAX_VERTICES,
};
use crate::category::{
    CoconeDiagram, Morphism, MorphismKind, SpanDiagram, SpineIndex, SpinedCategory,
    DEFAULT_ENUMERATION_CAP,
};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Graphs with injective homomorphisms, spine `n ↦ K_n`, clique sums as
/// proxy pushouts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrphMono {
    cap: usize,
}

impl Default for GrphMono {
    fn default() -> Self {
        GrphMono {
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl GrphMono {
    pub fn with_cap(cap: usize) -> Self {
        GrphMono { cap }
    }
}

pub fn grph_mono_instance() -> GrphMono {
    GrphMono::default()
}

impl SpinedCategory for GrphMono {
    type Object = Graph;

    fn name(&self) -> &str {
        "GRPH_mono"
    }

    fn cap(&self) -> usize {
        self.cap
    }

    fn size(&self, x: &Graph) -> usize {
        x.n()
    }

    fn spine(&self, n: SpineIndex) -> Result<Graph> {
        Error::cap("spine index", n, MAX_VERTICES)?;
        Ok(complete_graph(n))
    }

    fn identity(&self, x: &Graph) -> GraphMorphism {
        Morphism::new(
            x.clone(),
            x.clone(),
            (0..x.n()).collect(),
            MorphismKind::Mono,
        )
    }

    fn is_morphism(&self, m: &GraphMorphism) -> bool {
        is_monomorphism(m)
    }

    fn morphisms(&self, from: &Graph, to: &Graph) -> Result<Vec<GraphMorphism>> {
        enumerate_monomorphisms_with(from, to, self.cap, Execution::default())
    }

    fn first_morphism(&self, from: &Graph, to: &Graph) -> Result<Option<GraphMorphism>> {
        Error::cap("morphism domain", from.n(), self.cap)?;
        Ok(find_monomorphism(from, to))
    }

    fn proxy_pushout(&self, span: &SpanDiagram<Graph>) -> Result<CoconeDiagram<Graph>> {
        self.validate_span(span)?;
        let sum = clique_sum(&span.left, &span.right)?;
        Ok(CoconeDiagram {
            apex: sum.apex,
            left_leg: sum.inj1,
            right_leg: sum.inj2,
        })
    }
}
