use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spined::category::{check_sc1, check_spinal, sample_spans, Morphism, MorphismKind};
use spined::chordal::{treewidth_dp, validate_tree_decomposition};
use spined::graph::gen::random_graph;
use spined::graph::{clique_sum, complete_graph, discrete_graph, path_graph, Graph, GraphMorphism};
use spined::hypergraph::{
    gaifman, hgr_instance, hgr_proxy_pushout, hypergraph_treewidth, hypergraph_treewidth_direct,
    hypergraph_triangulation_functor, parse_hypergraph, random_hypergraph,
    random_spanning_hypergraph, spine_hypergraph, write_hypergraph, Hypergraph, HypergraphMorphism,
};

fn hmono(from: &Hypergraph, to: &Hypergraph, map: Vec<usize>) -> HypergraphMorphism {
    Morphism::new(from.clone(), to.clone(), map, MorphismKind::HypergraphMono)
}

fn gaifman_leg(m: &HypergraphMorphism) -> GraphMorphism {
    Morphism::new(
        gaifman(&m.source),
        gaifman(&m.target),
        m.map.clone(),
        MorphismKind::Mono,
    )
}

#[test]
fn spine_examples() {
    assert_eq!(spine_hypergraph(0).unwrap().edge_count(), 1);
    assert_eq!(spine_hypergraph(2).unwrap().edge_count(), 4);
    let s3 = spine_hypergraph(3).unwrap();
    assert_eq!(s3.edge_count(), 8);
    for n in 0..=6 {
        assert_eq!(gaifman(&spine_hypergraph(n).unwrap()), complete_graph(n));
    }
}

#[test]
fn gaifman_examples() {
    let h = Hypergraph::from_edges(5, &[vec![0, 1, 2]]).unwrap();
    assert_eq!(
        gaifman(&h),
        Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    );
    let singles = Hypergraph::from_edges(4, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
    assert_eq!(gaifman(&singles), discrete_graph(4));
}

#[test]
fn proxy_pushout_examples() {
    let s2 = spine_hypergraph(2).unwrap();
    let p = hgr_proxy_pushout(&hmono(&s2, &s2, vec![0, 1]), &hmono(&s2, &s2, vec![0, 1])).unwrap();
    assert_eq!(p.apex, s2);

    let mut left = Hypergraph::from_edges(3, &[vec![0, 1, 2]]).unwrap();
    let mut right = Hypergraph::from_edges(3, &[vec![0, 1, 2]]).unwrap();
    for h in [&mut left, &mut right] {
        for e in s2.edge_lists() {
            h.add_edge(&e).unwrap();
        }
    }
    let p = hgr_proxy_pushout(
        &hmono(&s2, &left, vec![0, 1]),
        &hmono(&s2, &right, vec![0, 1]),
    )
    .unwrap();
    assert_eq!(p.apex.n(), 4);
    let two_triangles = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
    assert_eq!(gaifman(&p.apex), two_triangles);

    let s0 = spine_hypergraph(0).unwrap();
    let a = Hypergraph::from_edges(2, &[vec![], vec![0, 1]]).unwrap();
    let b = Hypergraph::from_edges(3, &[vec![], vec![0, 1, 2]]).unwrap();
    let p = hgr_proxy_pushout(&hmono(&s0, &a, vec![]), &hmono(&s0, &b, vec![])).unwrap();
    assert_eq!(
        p.apex,
        Hypergraph::from_edges(5, &[vec![], vec![0, 1], vec![2, 3, 4]]).unwrap()
    );
}

#[test]
fn width_examples() {
    for n in 1..=6 {
        let s = spine_hypergraph(n).unwrap();
        assert_eq!(hypergraph_treewidth(&s).unwrap().tw(), Some(n - 1));
    }
    let one = Hypergraph::from_edges(6, &[vec![0, 1, 2, 3]]).unwrap();
    assert_eq!(hypergraph_treewidth(&one).unwrap().tw(), Some(3));
    let path = Hypergraph::from_edges(3, &[vec![0, 1], vec![1, 2]]).unwrap();
    assert_eq!(hypergraph_treewidth_direct(&path).unwrap(), Some(1));
    assert_eq!(
        hypergraph_treewidth_direct(&Hypergraph::new(4).unwrap()).unwrap(),
        Some(0)
    );
    let p4 = path_graph(4).unwrap();
    assert_eq!(
        hypergraph_treewidth(&Hypergraph::from_graph(&p4)).unwrap(),
        treewidth_dp(&p4).unwrap()
    );
}

#[test]
fn gaifman_carries_proxy_pushouts_to_clique_sums() {
    let cat = hgr_instance();
    let spans = sample_spans(&cat, 150, 51, |rng| random_spanning_hypergraph(rng, 5, 4)).unwrap();
    for span in spans {
        let p = hgr_proxy_pushout(&span.left, &span.right).unwrap();
        let sum = clique_sum(&gaifman_leg(&span.left), &gaifman_leg(&span.right)).unwrap();
        assert_eq!(gaifman(&p.apex), sum.apex);
    }
}

#[test]
fn gaifman_width_matches_direct_width() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..100 {
        let h = random_hypergraph(&mut rng, 6, 8);
        let via_gaifman = hypergraph_treewidth(&h).unwrap();
        assert_eq!(via_gaifman.tw(), hypergraph_treewidth_direct(&h).unwrap());
        assert_eq!(
            validate_tree_decomposition(&h, &via_gaifman.decomposition),
            Ok(via_gaifman.delta)
        );
    }
}

#[test]
fn sc1_on_all_hypergraphs_with_four_vertices() {
    let cat = hgr_instance();
    let subsets: Vec<Vec<usize>> = (0u32..16)
        .map(|s| (0..4).filter(|v| s >> v & 1 == 1).collect())
        .collect();
    for family in 0u32..1 << 16 {
        let edges: Vec<Vec<usize>> = (0..16)
            .filter(|i| family >> i & 1 == 1)
            .map(|i| subsets[i].clone())
            .collect();
        let h = Hypergraph::from_edges(4, &edges).unwrap();
        assert_eq!(check_sc1(&cat, &h).unwrap().n, 4);
    }
}

#[test]
fn hypergraph_delta_is_spinal_on_samples() {
    let cat = hgr_instance();
    let spans = sample_spans(&cat, 200, 71, |rng| random_spanning_hypergraph(rng, 5, 5)).unwrap();
    let v = check_spinal(&cat, &hypergraph_triangulation_functor(), &spans).unwrap();
    assert!(v.passes(), "{v:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let h = random_spanning_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), 8, 10);
        prop_assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn two_uniform_width_is_graph_width(seed in any::<u64>(), n in 1usize..12) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.4);
        prop_assert_eq!(
            hypergraph_treewidth(&Hypergraph::from_graph(&g)).unwrap().delta,
            treewidth_dp(&g).unwrap().delta
        );
    }
}
