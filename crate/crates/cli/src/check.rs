//! `check <instance>`: seeded SC1, SC2 and SF runs over one spined category.

use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use spined::category::{
    check_sc1, check_sc2, check_spinal, sample_extension_pairs, sample_spans, Morphism,
    MorphismKind, SFunctor, SpinedCategory, DEFAULT_ENUMERATION_CAP,
};
use spined::chordal::triangulation_functor;
use spined::complement::{complemented_treewidth, independence_number_functor, RMono};
use spined::graph::gen::{random_extension, random_small_graph};
use spined::graph::{clique_number_functor, Graph, GrphMono};
use spined::hypergraph::{
    hypergraph_triangulation_functor, random_spanning_hypergraph, HgrMono, Hypergraph,
};
use spined::induced::{
    induced_instance, labeled_triangulation_functor, quotient_graph, Labeling, QuotientSurjection,
};
use spined::witness::{max_prime_exponent_functor, DivObject, NDiv, NDIV_CAP};
use spined::Error;

use crate::render::{effective_cap, verdict_json, verdict_line, Failure, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Instance {
    /// Graphs with injective homomorphisms; ω and Δ.
    Grph,
    /// Hypergraphs with injective homomorphisms; Δ via the Gaifman graph.
    Hgr,
    /// Graphs with reflexive monomorphisms; α and Δ of the complement.
    Rmono,
    /// Naturals under divisibility; largest prime exponent.
    Ndiv,
    /// Labeled graphs over their quotients; Δ of the quotient.
    Labeled,
}

pub struct CheckConfig {
    pub seed: u64,
    pub samples: usize,
    pub cap: Option<usize>,
}

/// Largest object drawn by the graph-like generators; extensions add up to
/// two vertices, so pushouts stay within the default enumeration cap.
const SAMPLE_VERTICES: usize = 4;

pub fn check(instance: Instance, cfg: &CheckConfig) -> Result<Output, Failure> {
    match instance {
        Instance::Grph => {
            let cat = GrphMono::with_cap(effective_cap(cfg.cap, DEFAULT_ENUMERATION_CAP)?);
            run(
                &cat,
                &[clique_number_functor(), triangulation_functor()],
                cfg,
                |rng| random_small_graph(rng, SAMPLE_VERTICES),
                |rng, g| random_extension(rng, g, 2),
            )
        }
        Instance::Hgr => {
            let cat = HgrMono::with_cap(effective_cap(cfg.cap, DEFAULT_ENUMERATION_CAP)?);
            run(
                &cat,
                &[hypergraph_triangulation_functor()],
                cfg,
                |rng| random_spanning_hypergraph(rng, SAMPLE_VERTICES, 3),
                hypergraph_extension,
            )
        }
        Instance::Rmono => {
            let cat = RMono::with_cap(effective_cap(cfg.cap, DEFAULT_ENUMERATION_CAP)?);
            let complement_delta = SFunctor::new("Δ of the complement", |g: &Graph| {
                complemented_treewidth(g)
            });
            run(
                &cat,
                &[independence_number_functor(), complement_delta],
                cfg,
                |rng| random_small_graph(rng, SAMPLE_VERTICES),
                reflexive_extension,
            )
        }
        Instance::Ndiv => {
            let cat = NDiv::with_cap(effective_cap(cfg.cap, NDIV_CAP)?);
            run(
                &cat,
                &[max_prime_exponent_functor()],
                cfg,
                |rng| DivObject::new(rng.random_range(1..=10_000)).expect("positive"),
                divisibility_extension,
            )
        }
        Instance::Labeled => {
            let base = GrphMono::with_cap(effective_cap(cfg.cap, DEFAULT_ENUMERATION_CAP)?);
            let cat = induced_instance(base, QuotientSurjection)?;
            let composite = cat.compose(&triangulation_functor());
            run(
                &cat,
                &[composite, labeled_triangulation_functor()],
                cfg,
                random_labeling,
                labeled_extension,
            )
        }
    }
}

fn hypergraph_extension(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Morphism<Hypergraph> {
    let extra = rng.random_range(0..=1);
    let mut big = Hypergraph::new(h.n() + extra).expect("within cap");
    for e in h.edge_lists() {
        big.add_edge(&e).expect("vertices in range");
    }
    for v in 0..big.n() {
        if rng.random_bool(0.3) {
            big.add_edge(&[v]).expect("vertex in range");
        }
    }
    Morphism::new(
        h.clone(),
        big,
        (0..h.n()).collect(),
        MorphismKind::HypergraphMono,
    )
}

/// Keeps a random subset of the old edges and adds new vertices with random
/// neighbourhoods: non-edges stay non-edges, so the inclusion reflects them.
fn reflexive_extension(rng: &mut ChaCha8Rng, g: &Graph) -> Morphism<Graph> {
    let extra = rng.random_range(0..=2);
    let mut h = Graph::new(g.n() + extra).expect("within cap");
    for (u, v) in g.edges() {
        if rng.random_bool(0.7) {
            h.add_edge(u, v).expect("valid pair");
        }
    }
    for u in g.n()..h.n() {
        for v in 0..u {
            if rng.random_bool(0.4) {
                h.add_edge(u, v).expect("valid pair");
            }
        }
    }
    Morphism::new(
        g.clone(),
        h,
        (0..g.n()).collect(),
        MorphismKind::ReflexiveMono,
    )
}

fn divisibility_extension(rng: &mut ChaCha8Rng, x: &DivObject) -> Morphism<DivObject> {
    let k = DivObject::new(rng.random_range(1..=12)).expect("positive");
    Morphism::new(x.clone(), x.lcm(&k), Vec::new(), MorphismKind::Divisibility)
}

/// A random graph with a random surjective labeling onto `0..k`.
fn random_labeling(rng: &mut ChaCha8Rng) -> Labeling {
    let g = random_small_graph(rng, SAMPLE_VERTICES);
    let k = rng.random_range(1..=g.n());
    let mut labels: Vec<usize> = (0..g.n()).map(|v| v % k).collect();
    labels.shuffle(rng);
    Labeling::new(g, labels).expect("every label below k is used")
}

/// Extends the quotient and lands on the identity labeling of the extension,
/// which is an arrow of the induced category by construction.
fn labeled_extension(rng: &mut ChaCha8Rng, lab: &Labeling) -> Morphism<Labeling> {
    let ext = random_extension(rng, &quotient_graph(lab), 2);
    let target = Labeling::identity(&ext.target);
    Morphism::new(lab.clone(), target, ext.map, MorphismKind::Mono)
}

/// Errors that count as an axiom failure rather than aborting the run.
fn as_violation(e: Error) -> Result<String, Failure> {
    match e {
        Error::CapExceeded { .. } => Err(e.into()),
        other => Ok(other.to_string()),
    }
}

fn run<C, G, E>(
    cat: &C,
    functors: &[SFunctor<C::Object>],
    cfg: &CheckConfig,
    mut gen: G,
    extend: E,
) -> Result<Output, Failure>
where
    C: SpinedCategory,
    G: FnMut(&mut ChaCha8Rng) -> C::Object,
    E: FnMut(&mut ChaCha8Rng, &C::Object) -> Morphism<C::Object>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut sc1 = Vec::new();
    for i in 0..cfg.samples {
        let x = gen(&mut rng);
        if let Err(e) = check_sc1(cat, &x) {
            sc1.push(format!("object {i}: {}", as_violation(e)?));
        }
    }

    let pairs =
        sample_extension_pairs(cat, cfg.samples, cfg.seed.wrapping_add(1), &mut gen, extend)?;
    let mut sc2 = Vec::new();
    for (i, (span, l, r)) in pairs.iter().enumerate() {
        if let Err(e) = check_sc2(cat, span, l, r) {
            sc2.push(format!("span {i}: {}", as_violation(e)?));
        }
    }

    let spans = sample_spans(cat, cfg.samples, cfg.seed.wrapping_add(2), &mut gen)?;
    let verdicts = functors
        .iter()
        .map(|f| check_spinal(cat, f, &spans))
        .collect::<Result<Vec<_>, _>>()?;

    let passed = sc1.is_empty() && sc2.is_empty() && verdicts.iter().all(|v| v.passes());
    let mut human = format!(
        "instance {} (cap {}), seed {}, {} samples\n",
        cat.name(),
        cat.cap(),
        cfg.seed,
        cfg.samples
    );
    for (label, found, what) in [("SC1", &sc1, "objects"), ("SC2", &sc2, "extended spans")] {
        if found.is_empty() {
            let _ = writeln!(human, "ok   {label} on {} {what}", cfg.samples);
        } else {
            let _ = writeln!(
                human,
                "FAIL {label} on {} of {} {what}: {}",
                found.len(),
                cfg.samples,
                found.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
            );
        }
    }
    for v in &verdicts {
        let _ = writeln!(human, "{}", verdict_line(v));
    }
    let _ = writeln!(human, "result: {}", if passed { "pass" } else { "fail" });

    let json = json!({
        "verb": "check",
        "instance": cat.name(),
        "cap": cat.cap(),
        "seed": cfg.seed,
        "samples": cfg.samples,
        "sc1": { "checked": cfg.samples, "violations": sc1 },
        "sc2": { "checked": cfg.samples, "violations": sc2 },
        "functors": verdicts.iter().map(verdict_json).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Output {
        human,
        json,
        pace: None,
        passed,
    })
}
