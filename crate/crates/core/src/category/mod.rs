//! The instance-independent part: spined categories, proxy pushouts,
//! S-functors and the checkers for their axioms.
//!
//! A spined category is a category with a distinguished sequence of objects
//! `spine(0), spine(1), ..` (the spine) and an operation that assigns to every
//! span `G <- spine(n) -> H` a distinguished cocone, the proxy pushout. The
//! concrete categories in this crate (graphs with injective homomorphisms,
//! hypergraphs, reflexive monomorphisms, divisibility, posets, labelings)
//! implement [`SpinedCategory`]; everything in this module works for all of
//! them.

mod axioms;
mod functor;
mod sampling;

pub use axioms::{
    check_sc1, check_sc2, check_spinal, check_spinal_with, generalized_clique, object_order, Leg,
    MonotonicityViolation, PushoutViolation, Sc1Witness, Sc2Verdict, SpinalOptions, SpinalVerdict,
    SpineViolation, DEFAULT_SPINE_CHECK,
};
pub use functor::{generalized_clique_functor, order_functor, sfunctor_join, SFunctor};
pub use sampling::{sample_extension_pairs, sample_spans};

use std::fmt::Debug;

use crate::error::{Error, Result};

/// Index `n` of the spine object `spine(n)`.
pub type SpineIndex = usize;

/// Default cap on the size of the domain of an exhaustive morphism
/// enumeration. Operations refuse larger inputs.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MorphismKind {
    /// Graph homomorphism.
    Homo,
    /// Injective graph homomorphism.
    Mono,
    /// Injective map reflecting edges.
    ReflexiveMono,
    HypergraphHomo,
    HypergraphMono,
    PosetHomo,
    PosetMono,
    /// The unique arrow `a -> b` of the divisibility order when `a | b`.
    Divisibility,
}

/// A typed vertex map between two objects.
///
/// For poset categories such as divisibility the map is empty: an arrow is
/// determined by its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism<O> {
    pub source: O,
    pub target: O,
    pub map: Vec<usize>,
    pub kind: MorphismKind,
}

impl<O: Clone + PartialEq> Morphism<O> {
    pub fn new(source: O, target: O, map: Vec<usize>, kind: MorphismKind) -> Self {
        Morphism {
            source,
            target,
            map,
            kind,
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism<O>) -> Result<Morphism<O>> {
        if self.target != next.source {
            return Err(Error::InvalidMorphism(
                "composition of non-composable arrows".into(),
            ));
        }
        let map = self
            .map
            .iter()
            .map(|&v| {
                next.map.get(v).copied().ok_or_else(|| {
                    Error::InvalidMorphism(format!("vertex {v} outside the map's domain"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Morphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map,
            kind: self.kind,
        })
    }

    /// Same vertex map, compared without regard to the endpoint objects.
    pub fn same_map(&self, other: &Morphism<O>) -> bool {
        self.map == other.map
    }
}

/// A span `left.target <- spine(n) -> right.target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanDiagram<O> {
    pub n: SpineIndex,
    pub left: Morphism<O>,
    pub right: Morphism<O>,
}

impl<O> SpanDiagram<O> {
    pub fn new(n: SpineIndex, left: Morphism<O>, right: Morphism<O>) -> Self {
        SpanDiagram { n, left, right }
    }

    pub fn apex(&self) -> &O {
        &self.left.source
    }

    pub fn left_object(&self) -> &O {
        &self.left.target
    }

    pub fn right_object(&self) -> &O {
        &self.right.target
    }
}

/// The distinguished cocone `G -> apex <- H` produced by a proxy pushout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoconeDiagram<O> {
    pub apex: O,
    pub left_leg: Morphism<O>,
    pub right_leg: Morphism<O>,
}

/// A runnable description of one spined category.
///
/// Implementations supply the spine, the proxy pushout, a validity test for
/// arrows, and an exhaustive enumerator of arrows between two objects (in
/// lexicographic order of vertex assignments, so that every verdict and
/// witness is reproducible).
pub trait SpinedCategory: Sync {
    type Object: Clone + Eq + Debug + Send + Sync;

    fn name(&self) -> &str;

    /// Largest object size accepted by exhaustive operations.
    fn cap(&self) -> usize;

    /// The quantity bounded by [`SpinedCategory::cap`] (usually the number of
    /// vertices).
    fn size(&self, x: &Self::Object) -> usize;

    fn spine(&self, n: SpineIndex) -> Result<Self::Object>;

    fn identity(&self, x: &Self::Object) -> Morphism<Self::Object>;

    fn is_morphism(&self, m: &Morphism<Self::Object>) -> bool;

    /// All arrows `from -> to`, lexicographically ordered. Refuses domains
    /// larger than the cap.
    fn morphisms(
        &self,
        from: &Self::Object,
        to: &Self::Object,
    ) -> Result<Vec<Morphism<Self::Object>>>;

    /// The lexicographically first arrow `from -> to`, if any.
    fn first_morphism(
        &self,
        from: &Self::Object,
        to: &Self::Object,
    ) -> Result<Option<Morphism<Self::Object>>> {
        Ok(self.morphisms(from, to)?.into_iter().next())
    }

    fn proxy_pushout(
        &self,
        span: &SpanDiagram<Self::Object>,
    ) -> Result<CoconeDiagram<Self::Object>>;

    fn morphism_to_spine(
        &self,
        x: &Self::Object,
        n: SpineIndex,
    ) -> Result<Option<Morphism<Self::Object>>> {
        self.first_morphism(x, &self.spine(n)?)
    }

    fn morphism_from_spine(
        &self,
        n: SpineIndex,
        x: &Self::Object,
    ) -> Result<Option<Morphism<Self::Object>>> {
        self.first_morphism(&self.spine(n)?, x)
    }

    /// Largest `n` worth testing for an arrow `spine(n) -> x`.
    fn spine_search_limit(&self, x: &Self::Object) -> SpineIndex {
        self.size(x)
    }

    /// Checks that `span` is a span out of the spine object it names, with
    /// valid legs.
    fn validate_span(&self, span: &SpanDiagram<Self::Object>) -> Result<()> {
        if span.left.source != span.right.source {
            return Err(Error::ApexMismatch);
        }
        if span.left.source != self.spine(span.n)? {
            return Err(Error::SpineMismatch(span.n));
        }
        if !self.is_morphism(&span.left) || !self.is_morphism(&span.right) {
            return Err(Error::InvalidMorphism(format!(
                "span legs are not arrows of {}",
                self.name()
            )));
        }
        Ok(())
    }
}
