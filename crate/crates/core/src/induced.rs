//! Induced categories `S↓f`: objects from a set `S`, arrows borrowed from a
//! spined category through a map `f`. Applied to labeled graphs and their
//! quotients this yields modular and chromatic tree-width.

use std::fmt::Debug;

use crate::bitset::{self, VertexSet};
use crate::category::{
    CoconeDiagram, Morphism, SFunctor, SpanDiagram, SpineIndex, SpinedCategory, DEFAULT_SPINE_CHECK,
};
use crate::chordal::treewidth_dp_with;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{Graph, GrphMono};

/// A graph with a vertex labeling onto `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    base: Graph,
    map: Vec<usize>,
    classes: usize,
}

impl Labeling {
    /// Checks totality and that the labels used are exactly `0..k`.
    pub fn new(base: Graph, map: Vec<usize>) -> Result<Labeling> {
        if map.len() != base.n() {
            return Err(Error::InvalidLabeling(format!(
                "{} labels for {} vertices",
                map.len(),
                base.n()
            )));
        }
        let classes = map.iter().max().map_or(0, |&m| m + 1);
        let mut used = vec![false; classes];
        for &l in &map {
            used[l] = true;
        }
        if let Some(missing) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidLabeling(format!("label {missing} is unused")));
        }
        Ok(Labeling { base, map, classes })
    }

    /// Every vertex in its own class.
    pub fn identity(base: &Graph) -> Labeling {
        Labeling {
            map: (0..base.n()).collect(),
            classes: base.n(),
            base: base.clone(),
        }
    }

    /// A single class holding every vertex.
    pub fn constant(base: &Graph) -> Labeling {
        Labeling {
            map: vec![0; base.n()],
            classes: usize::from(base.n() > 0),
            base: base.clone(),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn labels(&self) -> &[usize] {
        &self.map
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    /// The vertex set of class `label`.
    pub fn class(&self, label: usize) -> VertexSet {
        bitset::from_members((0..self.map.len()).filter(|&v| self.map[v] == label))
    }
}

/// `G/f`: one vertex per label, `ij` an edge iff some edge of `G` joins the
/// two classes; edges inside a class disappear.
pub fn quotient_graph(lab: &Labeling) -> Graph {
    let mut q = Graph::new(lab.classes).expect("at most as many classes as vertices");
    for (u, v) in lab.base.edges() {
        let (a, b) = (lab.map[u], lab.map[v]);
        if a != b {
            q.add_edge(a, b).expect("labels in range");
        }
    }
    q
}

/// Whether every vertex outside `s` sees all of `s` or none of it.
pub fn is_module(g: &Graph, s: VertexSet) -> bool {
    bitset::members(g.vertices() & !s).all(|z| {
        let seen = g.neighbors(z) & s;
        seen == 0 || seen == s
    })
}

pub fn is_modular_labeling(lab: &Labeling) -> bool {
    (0..lab.classes).all(|c| is_module(&lab.base, lab.class(c)))
}

pub fn is_proper_coloring(lab: &Labeling) -> bool {
    lab.base
        .edges()
        .into_iter()
        .all(|(u, v)| lab.map[u] != lab.map[v])
}

/// Largest graph accepted by the partition enumerations.
pub const PARTITION_CAP: usize = 10;

/// Restricted-growth strings are fixed on this many leading vertices before
/// the per-prefix searches fan out.
const PREFIX_LEN: usize = 4;

/// All restricted-growth strings of length `len` (set partitions of
/// `0..len`), in lexicographic order.
fn growth_strings(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, cur: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for l in 0..=blocks {
            cur.push(l);
            rec(len, cur, blocks.max(l + 1), out);
            cur.pop();
        }
    }
    rec(len, &mut cur, 0, &mut out);
    out
}

/// `(tw of the quotient, growth string)` minimizing the width over the
/// partitions accepted by `keep`, ties going to the lexicographically first
/// string.
fn min_quotient_width<P>(g: &Graph, exec: Execution, keep: P) -> Option<(usize, Vec<usize>)>
where
    P: Fn(&Labeling) -> bool + Sync,
{
    let n = g.n();
    let prefixes = growth_strings(n.min(PREFIX_LEN));
    let per_prefix = exec.map(&prefixes, |prefix| {
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut cur = prefix.clone();
        let blocks = prefix.iter().max().map_or(0, |&m| m + 1);
        extend(g, n, &mut cur, blocks, &keep, &mut best);
        best
    });
    per_prefix.into_iter().flatten().fold(
        None,
        |acc: Option<(usize, Vec<usize>)>, cand| match acc {
            Some(a) if a.0 <= cand.0 => Some(a),
            _ => Some(cand),
        },
    )
}

fn extend<P: Fn(&Labeling) -> bool>(
    g: &Graph,
    n: usize,
    cur: &mut Vec<usize>,
    blocks: usize,
    keep: &P,
    best: &mut Option<(usize, Vec<usize>)>,
) {
    if best.as_ref().is_some_and(|b| b.0 == 0) {
        return;
    }
    if cur.len() == n {
        let lab = Labeling {
            base: g.clone(),
            map: cur.clone(),
            classes: blocks,
        };
        if keep(&lab) {
            let tw = treewidth_dp_with(&quotient_graph(&lab), Execution::Sequential)
                .expect("quotient within the DP cap")
                .tw()
                .expect("quotient of a non-empty graph");
            if best.as_ref().is_none_or(|b| tw < b.0) {
                *best = Some((tw, cur.clone()));
            }
        }
        return;
    }
    for l in 0..=blocks {
        cur.push(l);
        extend(g, n, cur, blocks.max(l + 1), keep, best);
        cur.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientWidth {
    /// The minimum tree-width of a quotient.
    pub value: usize,
    pub witness: Labeling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularWidth {
    /// Minimum over modular labelings with at least two classes (the single
    /// labeling when `g` has one vertex).
    pub headline: QuotientWidth,
    /// Minimum with the one-class labeling admitted; `0` for every graph.
    pub with_trivial: QuotientWidth,
}

fn quotient_width<P>(g: &Graph, exec: Execution, keep: P) -> Result<QuotientWidth>
where
    P: Fn(&Labeling) -> bool + Sync,
{
    let (value, map) = min_quotient_width(g, exec, keep).expect("the identity labeling qualifies");
    Ok(QuotientWidth {
        value,
        witness: Labeling::new(g.clone(), map)?,
    })
}

fn check_partition_input(g: &Graph) -> Result<()> {
    Error::cap("partition enumeration vertices", g.n(), PARTITION_CAP)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

/// Least tree-width of a quotient by a modular labeling.
pub fn modular_treewidth(g: &Graph) -> Result<ModularWidth> {
    modular_treewidth_with(g, Execution::default())
}

pub fn modular_treewidth_with(g: &Graph, exec: Execution) -> Result<ModularWidth> {
    check_partition_input(g)?;
    let min_classes = 2.min(g.n());
    let headline = quotient_width(g, exec, |lab| {
        lab.classes >= min_classes && is_modular_labeling(lab)
    })?;
    let with_trivial = quotient_width(g, exec, is_modular_labeling)?;
    Ok(ModularWidth {
        headline,
        with_trivial,
    })
}

/// Least tree-width of a quotient by a proper colouring.
pub fn chromatic_treewidth(g: &Graph) -> Result<QuotientWidth> {
    chromatic_treewidth_with(g, Execution::default())
}

pub fn chromatic_treewidth_with(g: &Graph, exec: Execution) -> Result<QuotientWidth> {
    check_partition_input(g)?;
    quotient_width(g, exec, is_proper_coloring)
}

/// A map `f: S -> objects of C` that hits every spine object and picks a
/// preimage for each proxy-pushout apex.
pub trait Surjection: Sync {
    type Base: SpinedCategory;
    type Source: Clone + Eq + Debug + Send + Sync;

    fn image(&self, s: &Self::Source) -> <Self::Base as SpinedCategory>::Object;

    /// Some `s` with `image(s) = spine(n)`.
    fn spine_preimage(&self, n: SpineIndex) -> Result<Self::Source>;

    /// The distinguished preimage of a proxy-pushout apex.
    fn distinguished_preimage(
        &self,
        apex: &<Self::Base as SpinedCategory>::Object,
    ) -> Result<Self::Source>;
}

/// `S↓f` with spine and proxy pushouts chosen through the preimages of `f`.
#[derive(Debug, Clone)]
pub struct InducedCategory<F: Surjection> {
    base: F::Base,
    f: F,
    name: String,
}

/// Builds `S↓f`, checking that `f` hits the spine objects up to the base
/// category's cap (at most [`DEFAULT_SPINE_CHECK`]).
pub fn induced_instance<F: Surjection>(base: F::Base, f: F) -> Result<InducedCategory<F>> {
    for n in 0..=base.cap().min(DEFAULT_SPINE_CHECK) {
        let s = f.spine_preimage(n)?;
        if f.image(&s) != base.spine(n)? {
            return Err(Error::SurjectionMissesSpine(n));
        }
    }
    let name = format!("induced over {}", base.name());
    Ok(InducedCategory { base, f, name })
}

impl<F: Surjection> InducedCategory<F> {
    pub fn surjection(&self) -> &F {
        &self.f
    }

    pub fn base(&self) -> &F::Base {
        &self.base
    }

    fn down(&self, m: &Morphism<F::Source>) -> Morphism<<F::Base as SpinedCategory>::Object> {
        Morphism::new(
            self.f.image(&m.source),
            self.f.image(&m.target),
            m.map.clone(),
            m.kind,
        )
    }

    fn up(
        &self,
        source: &F::Source,
        target: &F::Source,
        m: Morphism<<F::Base as SpinedCategory>::Object>,
    ) -> Morphism<F::Source> {
        Morphism::new(source.clone(), target.clone(), m.map, m.kind)
    }

    /// `G ∘ f` for an S-functor `G` of the base category.
    pub fn compose(&self, g: &SFunctor<<F::Base as SpinedCategory>::Object>) -> SFunctor<F::Source>
    where
        F: Clone + Send + 'static,
        <F::Base as SpinedCategory>::Object: 'static,
    {
        let (f, g) = (self.f.clone(), g.clone());
        SFunctor::new(format!("{} ∘ f", g.name()), move |s: &F::Source| {
            g.eval(&f.image(s))
        })
    }
}

impl<F: Surjection> SpinedCategory for InducedCategory<F> {
    type Object = F::Source;

    fn name(&self) -> &str {
        &self.name
    }

    fn cap(&self) -> usize {
        self.base.cap()
    }

    fn size(&self, x: &F::Source) -> usize {
        self.base.size(&self.f.image(x))
    }

    fn spine(&self, n: SpineIndex) -> Result<F::Source> {
        let s = self.f.spine_preimage(n)?;
        if self.f.image(&s) != self.base.spine(n)? {
            return Err(Error::SurjectionMissesSpine(n));
        }
        Ok(s)
    }

    fn identity(&self, x: &F::Source) -> Morphism<F::Source> {
        let id = self.base.identity(&self.f.image(x));
        self.up(x, x, id)
    }

    fn is_morphism(&self, m: &Morphism<F::Source>) -> bool {
        self.base.is_morphism(&self.down(m))
    }

    fn morphisms(&self, from: &F::Source, to: &F::Source) -> Result<Vec<Morphism<F::Source>>> {
        let found = self
            .base
            .morphisms(&self.f.image(from), &self.f.image(to))?;
        Ok(found.into_iter().map(|m| self.up(from, to, m)).collect())
    }

    fn first_morphism(
        &self,
        from: &F::Source,
        to: &F::Source,
    ) -> Result<Option<Morphism<F::Source>>> {
        let found = self
            .base
            .first_morphism(&self.f.image(from), &self.f.image(to))?;
        Ok(found.map(|m| self.up(from, to, m)))
    }

    fn proxy_pushout(&self, span: &SpanDiagram<F::Source>) -> Result<CoconeDiagram<F::Source>> {
        self.validate_span(span)?;
        let base_span = SpanDiagram::new(span.n, self.down(&span.left), self.down(&span.right));
        let cocone = self.base.proxy_pushout(&base_span)?;
        let apex = self.f.distinguished_preimage(&cocone.apex)?;
        if self.f.image(&apex) != cocone.apex {
            return Err(Error::NoDistinguishedPreimage);
        }
        Ok(CoconeDiagram {
            left_leg: self.up(span.left_object(), &apex, cocone.left_leg),
            right_leg: self.up(span.right_object(), &apex, cocone.right_leg),
            apex,
        })
    }
}

/// Labeled graphs onto graphs with injective homomorphisms, by quotient.
/// Spine and pushout preimages are identity labelings.
#[derive(Debug, Clone, Copy, Default)]
pub struct QuotientSurjection;

impl Surjection for QuotientSurjection {
    type Base = GrphMono;
    type Source = Labeling;

    fn image(&self, s: &Labeling) -> Graph {
        quotient_graph(s)
    }

    fn spine_preimage(&self, n: SpineIndex) -> Result<Labeling> {
        Ok(Labeling::identity(&GrphMono::default().spine(n)?))
    }

    fn distinguished_preimage(&self, apex: &Graph) -> Result<Labeling> {
        Ok(Labeling::identity(apex))
    }
}

/// `S↓f` for labeled graphs over graphs with injective homomorphisms.
pub fn labeled_graph_instance() -> InducedCategory<QuotientSurjection> {
    induced_instance(GrphMono::default(), QuotientSurjection)
        .expect("identity labelings hit every complete graph")
}

/// `Δ_ℓ[f] = tw(G/f) + 1`.
pub fn labeled_triangulation_functor() -> SFunctor<Labeling> {
    SFunctor::new("Δ ∘ quotient", |lab: &Labeling| {
        Ok(treewidth_dp_with(&quotient_graph(lab), Execution::default())?.delta)
    })
}
