mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spined::category::{sample_spans, SpanDiagram};
use spined::category::{Morphism, MorphismKind};
use spined::chordal::treewidth_dp;
use spined::graph::gen::{graphs_on, graphs_up_to_iso, random_graph, random_small_graph};
use spined::graph::io::{parse_edge_list, write_edge_list};
use spined::graph::iso::{are_isomorphic, canonical_form, find_isomorphism};
use spined::graph::{
    apex_extension, clique_sum, complement, complete_graph, cycle_graph, discrete_graph,
    enumerate_homomorphisms, enumerate_monomorphisms, grph_mono_instance, is_homomorphism,
    is_monomorphism, path_graph, Graph, GraphMorphism,
};
use spined::Error;

use common::{brute_isomorphic, labeled_graphs};

#[test]
fn constructors() {
    assert_eq!(complete_graph(0).n(), 0);
    assert_eq!(complete_graph(4).edge_count(), 6);
    let c5 = cycle_graph(5).unwrap();
    assert_eq!(c5.edge_count(), 5);
    assert!((0..5).all(|v| c5.degree(v) == 2));
    assert_eq!(discrete_graph(3).edge_count(), 0);
}

#[test]
fn homomorphism_predicates() {
    let k3 = complete_graph(3);
    let id = Morphism::new(k3.clone(), k3, vec![0, 1, 2], MorphismKind::Mono);
    assert!(is_homomorphism(&id) && is_monomorphism(&id));
    let constant = Morphism::new(
        discrete_graph(2),
        complete_graph(1),
        vec![0, 0],
        MorphismKind::Homo,
    );
    assert!(is_homomorphism(&constant) && !is_monomorphism(&constant));
    for map in [[0, 1], [1, 0], [0, 0]] {
        let m = Morphism::new(
            complete_graph(2),
            discrete_graph(2),
            map.to_vec(),
            MorphismKind::Homo,
        );
        assert!(!is_homomorphism(&m));
    }
}

#[test]
fn monomorphism_counts() {
    assert_eq!(
        enumerate_monomorphisms(&complete_graph(1), &complete_graph(3))
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        enumerate_monomorphisms(&complete_graph(2), &complete_graph(3))
            .unwrap()
            .len(),
        6
    );
    assert!(
        enumerate_monomorphisms(&complete_graph(3), &cycle_graph(4).unwrap())
            .unwrap()
            .is_empty()
    );
}

fn mono(from: &Graph, to: &Graph, map: Vec<usize>) -> GraphMorphism {
    Morphism::new(from.clone(), to.clone(), map, MorphismKind::Mono)
}

#[test]
fn clique_sum_examples() {
    let k2 = complete_graph(2);
    let k3 = complete_graph(3);
    let s = clique_sum(&mono(&k2, &k3, vec![0, 1]), &mono(&k2, &k3, vec![1, 2])).unwrap();
    assert_eq!((s.apex.n(), s.apex.edge_count()), (4, 5));

    let k1 = complete_graph(1);
    let p3 = clique_sum(&mono(&k1, &k2, vec![1]), &mono(&k1, &k2, vec![0])).unwrap();
    assert_eq!(p3.apex, path_graph(3).unwrap());

    let c5 = cycle_graph(5).unwrap();
    let absorbed = clique_sum(&mono(&k2, &c5, vec![2, 3]), &mono(&k2, &k2, vec![0, 1])).unwrap();
    assert!(are_isomorphic(&absorbed.apex, &c5).unwrap());

    let not_clique = clique_sum(
        &mono(&discrete_graph(2), &k2, vec![0, 1]),
        &mono(&discrete_graph(2), &k2, vec![0, 1]),
    );
    assert!(not_clique.is_err());
}

#[test]
fn clique_sum_is_symmetric_up_to_isomorphism() {
    let cat = grph_mono_instance();
    let spans = sample_spans(&cat, 200, 31, |rng| random_small_graph(rng, 5)).unwrap();
    for span in spans {
        let a = clique_sum(&span.left, &span.right).unwrap().apex;
        let b = clique_sum(&span.right, &span.left).unwrap().apex;
        assert!(find_isomorphism(&a, &b).unwrap().is_some());
    }
}

/// Counts homomorphisms `m` out of the apex that factor a cocone `(z1, z2)`.
fn factorizations(sum: &spined::graph::CliqueSum, z1: &GraphMorphism, z2: &GraphMorphism) -> usize {
    enumerate_homomorphisms(&sum.apex, &z1.target)
        .unwrap()
        .into_iter()
        .filter(|m| {
            sum.inj1.then(m).unwrap().same_map(z1) && sum.inj2.then(m).unwrap().same_map(z2)
        })
        .count()
}

#[test]
fn clique_sum_universal_property_among_homomorphisms() {
    let cat = grph_mono_instance();
    let spans: Vec<SpanDiagram<Graph>> =
        sample_spans(&cat, 25, 41, |rng| random_small_graph(rng, 4)).unwrap();
    let targets = [
        complete_graph(3),
        path_graph(3).unwrap(),
        cycle_graph(4).unwrap(),
        complete_graph(2),
    ];
    let mut cocones = 0;
    for span in &spans {
        let sum = clique_sum(&span.left, &span.right).unwrap();
        for z in &targets {
            let left = enumerate_homomorphisms(span.left_object(), z).unwrap();
            let right = enumerate_homomorphisms(span.right_object(), z).unwrap();
            for z1 in &left {
                for z2 in &right {
                    let a = span.left.then(z1).unwrap();
                    let b = span.right.then(z2).unwrap();
                    if a.same_map(&b) {
                        cocones += 1;
                        assert_eq!(factorizations(&sum, z1, z2), 1);
                    }
                }
            }
        }
    }
    assert!(cocones > 100, "only {cocones} cocones exercised");
}

#[test]
fn apex_extension_examples_and_law() {
    assert_eq!(
        apex_extension(&complete_graph(0)).unwrap(),
        complete_graph(1)
    );
    assert_eq!(
        apex_extension(&complete_graph(4)).unwrap(),
        complete_graph(5)
    );
    assert_eq!(
        apex_extension(&cycle_graph(4).unwrap())
            .unwrap()
            .edge_count(),
        8
    );
    for g in graphs_up_to_iso(6).unwrap() {
        let before = treewidth_dp(&g).unwrap().delta;
        let after = treewidth_dp(&apex_extension(&g).unwrap()).unwrap().delta;
        assert_eq!(after, before + 1);
    }
}

#[test]
fn complement_examples() {
    assert_eq!(complement(&complete_graph(4)), discrete_graph(4));
    let c5 = cycle_graph(5).unwrap();
    assert!(brute_isomorphic(&complement(&c5), &c5));
}

#[test]
fn isomorphism_classes_match_known_counts() {
    let counts: Vec<usize> = (0..=6).map(|n| graphs_on(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    assert_eq!(graphs_on(7).unwrap().len(), 1044);
}

#[test]
fn canonical_form_agrees_with_brute_isomorphism() {
    let all = labeled_graphs(5);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    use rand::seq::IndexedRandom;
    for _ in 0..300 {
        let a = all.choose(&mut rng).unwrap();
        let b = all.choose(&mut rng).unwrap();
        let same = canonical_form(a).unwrap() == canonical_form(b).unwrap();
        assert_eq!(same, brute_isomorphic(a, b));
    }
}

#[test]
fn edge_list_errors() {
    assert!(matches!(
        parse_edge_list("3 2\n0 1\n"),
        Err(Error::Parse { .. })
    ));
    assert!(parse_edge_list("3 1\n0 3\n").is_err());
    assert!(matches!(
        parse_edge_list("70 0\n"),
        Err(Error::CapExceeded { .. })
    ));
    assert!(matches!(
        parse_edge_list("2 1\nx y\n"),
        Err(Error::Parse { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_is_an_involution(seed in any::<u64>(), n in 0usize..12) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.5);
        prop_assert_eq!(complement(&complement(&g)), g);
    }

    #[test]
    fn edge_list_round_trip(seed in any::<u64>(), n in 0usize..20) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.4);
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_relabeling(seed in any::<u64>(), n in 1usize..9) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        prop_assert_eq!(canonical_form(&g.permuted(&perm)).unwrap(), canonical_form(&g).unwrap());
    }
}
