//! Reproducible counterexamples: functors that are not spinal, a spined
//! category that admits none, and pseudo-chordal graphs that are not chordal.

use rand::Rng;

use super::ndiv::{max_prime_exponent_functor, ndiv_instance, ndiv_spine, DivObject};
use super::poset::{
    find_poset_isomorphism, poset_mono_instance, poset_pushout, Poset, PosetMorphism,
};
use crate::category::{
    check_spinal, generalized_clique, generalized_clique_functor, order_functor, sample_spans,
    Morphism, MorphismKind, SFunctor, SpanDiagram, SpinalVerdict, SpinedCategory,
};
use crate::chordal::{is_chordal, treewidth_dp, triangulation_functor};
use crate::error::{Error, Result};
use crate::graph::{
    clique_number_functor, clique_sum, complete_graph, cycle_graph, enumerate_monomorphisms,
    find_monomorphism, grph_mono_instance, is_monomorphism, path_graph, Graph, GraphMorphism,
};

/// Spans drawn for the exponent check in [`demo_clique_failure`].
pub const EXPONENT_SAMPLE: usize = 500;
const EXPONENT_SEED: u64 = 0x5eed_d1f5;

#[derive(Debug, Clone)]
pub struct CliqueFailure {
    pub left: DivObject,
    pub right: DivObject,
    /// `lcm(left, right)`.
    pub apex: DivObject,
    /// Generalized clique numbers of `left`, `right`, `apex`.
    pub omega: (usize, usize, usize),
    /// The largest prime exponent, checked on seeded spans of values up to
    /// `10^4`.
    pub exponent: SpinalVerdict,
}

impl CliqueFailure {
    pub fn clique_violates_sf2(&self) -> bool {
        self.omega.2 != self.omega.0.max(self.omega.1)
    }
}

fn ndiv_span(n: usize, a: &DivObject, b: &DivObject) -> SpanDiagram<DivObject> {
    let omega = ndiv_spine(n);
    let leg = |x: &DivObject| {
        Morphism::new(
            omega.clone(),
            x.clone(),
            Vec::new(),
            MorphismKind::Divisibility,
        )
    };
    SpanDiagram::new(n, leg(a), leg(b))
}

/// In `ℕ_div` the generalized clique number is not spinal (`ω(16) = 2`,
/// `ω(81) = 1`, `ω(1296) = 4`), while the largest prime exponent respects
/// every sampled pushout.
pub fn demo_clique_failure() -> Result<CliqueFailure> {
    let cat = ndiv_instance();
    let left = DivObject::new(16)?;
    let right = DivObject::new(81)?;
    let cocone = cat.proxy_pushout(&ndiv_span(1, &left, &right))?;
    let w = |x: &DivObject| -> Result<usize> { Ok(generalized_clique(&cat, x)?.unwrap_or(0)) };
    let omega = (w(&left)?, w(&right)?, w(&cocone.apex)?);

    let spans = sample_spans(&cat, EXPONENT_SAMPLE, EXPONENT_SEED, |rng| {
        DivObject::new(rng.random_range(1..=10_000)).expect("positive")
    })?;
    let exponent = check_spinal(&cat, &max_prime_exponent_functor(), &spans)?;
    Ok(CliqueFailure {
        left,
        right,
        apex: cocone.apex,
        omega,
        exponent,
    })
}

#[derive(Debug, Clone)]
pub struct OrderFailure {
    /// `K_2 <- K_1 -> K_2`, whose proxy pushout is `P_3`.
    pub span: SpanDiagram<Graph>,
    pub order: SpinalVerdict,
    pub clique_number: SpinalVerdict,
    pub delta: SpinalVerdict,
}

/// The order `|G|` breaks SF2 on `P_3 = K_2 #_{K_1} K_2` (3 against 2), while
/// the clique number and `Δ` hold.
pub fn demo_order_failure() -> Result<OrderFailure> {
    let cat = grph_mono_instance();
    let k1 = complete_graph(1);
    let k2 = complete_graph(2);
    let span = SpanDiagram::new(
        1,
        Morphism::new(k1.clone(), k2.clone(), vec![1], MorphismKind::Mono),
        Morphism::new(k1, k2, vec![0], MorphismKind::Mono),
    );
    debug_assert_eq!(cat.proxy_pushout(&span)?.apex, path_graph(3)?);
    let spans = [span.clone()];
    Ok(OrderFailure {
        order: check_spinal(&cat, &order_functor(cat), &spans)?,
        clique_number: check_spinal(&cat, &clique_number_functor(), &spans)?,
        delta: check_spinal(&cat, &triangulation_functor(), &spans)?,
        span,
    })
}

#[derive(Debug, Clone)]
pub struct PosetObstruction {
    /// `L_3 <- L_1 -> L_2` with the point sent to the top of `L_3` and the
    /// bottom of `L_2`.
    pub left: PosetMorphism,
    pub right: PosetMorphism,
    pub pushout: Poset,
    /// An order isomorphism from the pushout onto `L_4`.
    pub iso_to_chain: Vec<usize>,
    /// Any S-functor must take the pushout to 4 (it is `L_4`) and to
    /// `max(3, 2)` (SF2).
    pub forced: usize,
    pub required: usize,
    /// The same span after extending `L_3 ↪ L_4` and `L_2 ↪ L_3` at the top:
    /// the new pushout contains a chain of this height, while SF2 asks for
    /// `max(4, 3)`.
    pub extended_height: usize,
    pub extended_required: usize,
    /// Height (the natural candidate) run through the checker on the span.
    pub height: SpinalVerdict,
}

impl PosetObstruction {
    pub fn contradiction(&self) -> bool {
        self.forced != self.required && self.extended_height > self.extended_required
    }
}

pub fn poset_height_functor() -> SFunctor<Poset> {
    SFunctor::new("height", |p: &Poset| Ok(p.height()))
}

fn prefix(from: &Poset, to: &Poset) -> PosetMorphism {
    Morphism::new(
        from.clone(),
        to.clone(),
        (0..from.n()).collect(),
        MorphismKind::PosetMono,
    )
}

/// `Poset_mono` admits no S-functor: the pushout of a point into the top of
/// `L_3` and the bottom of `L_2` is `L_4`, so SF1 and SF2 disagree.
pub fn demo_poset_no_sfunctor() -> Result<PosetObstruction> {
    let one = Poset::chain(1)?;
    let (l2, l3, l4) = (Poset::chain(2)?, Poset::chain(3)?, Poset::chain(4)?);
    let left = Morphism::new(one.clone(), l3.clone(), vec![2], MorphismKind::PosetMono);
    let right = Morphism::new(one, l2.clone(), vec![0], MorphismKind::PosetMono);
    let p = poset_pushout(&left, &right)?;
    let iso_to_chain = find_poset_isomorphism(&p.apex, &l4)
        .ok_or_else(|| Error::OutOfRange("pushout is not a 4-chain".into()))?;

    let ext_left = left.then(&prefix(&l3, &l4))?;
    let ext_right = right.then(&prefix(&l2, &l3))?;
    let extended = poset_pushout(&ext_left, &ext_right)?;

    let cat = poset_mono_instance();
    let span = SpanDiagram::new(1, left.clone(), right.clone());
    let height = check_spinal(&cat, &poset_height_functor(), &[span])?;
    Ok(PosetObstruction {
        forced: iso_to_chain.len(),
        required: l3.n().max(l2.n()),
        extended_height: extended.apex.height(),
        extended_required: l4.n().max(l3.n()),
        left,
        right,
        pushout: p.apex,
        iso_to_chain,
        height,
    })
}

#[derive(Debug, Clone)]
pub struct PseudoChordalWitness {
    pub n: usize,
    /// `K_n #_{K_1} C_n`.
    pub graph: Graph,
    pub chordal: bool,
    pub delta: usize,
    /// `K_n ↪ graph`.
    pub lower: GraphMorphism,
    /// `graph ↪ K_n #_{K_1} K_n`, identity on vertices.
    pub upper: GraphMorphism,
}

/// Bounds for [`pseudo_chordal_witness`].
pub const PSEUDO_CHORDAL_RANGE: std::ops::RangeInclusive<usize> = 3..=8;

/// `K_n #_{K_1} C_n` sits between `K_n` and `K_n #_{K_1} K_n` with `Δ = n`
/// at both ends, yet contains an induced `C_n`.
pub fn pseudo_chordal_witness(n: usize) -> Result<PseudoChordalWitness> {
    if !PSEUDO_CHORDAL_RANGE.contains(&n) {
        return Err(Error::OutOfRange(format!("n = {n} outside 3..=8")));
    }
    let k1 = complete_graph(1);
    let kn = complete_graph(n);
    let at_zero = |g: &Graph| Morphism::new(k1.clone(), g.clone(), vec![0], MorphismKind::Mono);
    let graph = clique_sum(&at_zero(&kn), &at_zero(&cycle_graph(n)?))?.apex;
    let doubled = clique_sum(&at_zero(&kn), &at_zero(&kn))?.apex;

    let lower = enumerate_monomorphisms(&kn, &graph)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::OutOfRange("K_n does not embed".into()))?;
    let upper = Morphism::new(
        graph.clone(),
        doubled.clone(),
        (0..graph.n()).collect(),
        MorphismKind::Mono,
    );
    if !is_monomorphism(&upper) || find_monomorphism(&graph, &doubled).is_none() {
        return Err(Error::OutOfRange(
            "witness does not embed in K_n # K_n".into(),
        ));
    }
    Ok(PseudoChordalWitness {
        n,
        chordal: is_chordal(&graph),
        delta: treewidth_dp(&graph)?.delta,
        graph,
        lower,
        upper,
    })
}

/// Clique number as a generalized-clique functor on graphs, for side-by-side
/// reports.
pub fn graph_generalized_clique() -> SFunctor<Graph> {
    generalized_clique_functor(grph_mono_instance())
}
