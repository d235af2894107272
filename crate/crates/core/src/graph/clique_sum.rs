use super::{is_monomorphism, Graph, GraphMorphism};
use crate::bitset;
use crate::category::{Morphism, MorphismKind};
use crate::error::{Error, Result};

/// A clique sum `G1 #_{K_n} G2` with its two canonical injections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSum {
    pub apex: Graph,
    pub inj1: GraphMorphism,
    pub inj2: GraphMorphism,
}

/// Glues `g1.target` and `g2.target` along the shared clique `K_n`.
///
/// Vertices of `G1` keep their indices; the vertices of `G2` outside the
/// image of `g2` follow in `G2`'s order. Parallel edges are merged.
pub fn clique_sum(g1: &GraphMorphism, g2: &GraphMorphism) -> Result<CliqueSum> {
    if g1.source != g2.source {
        return Err(Error::ApexMismatch);
    }
    let k = &g1.source;
    if !k.is_clique(k.vertices()) {
        return Err(Error::SpineMismatch(k.n()));
    }
    if !is_monomorphism(g1) || !is_monomorphism(g2) {
        return Err(Error::LegsNotMono);
    }
    let (left, right) = (&g1.target, &g2.target);
    let n1 = left.n();

    let mut right_map = vec![usize::MAX; right.n()];
    for (i, &w) in g2.map.iter().enumerate() {
        right_map[w] = g1.map[i];
    }
    let mut next = n1;
    for slot in right_map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }

    let mut apex = Graph::new(next)?;
    for (u, v) in left.edges() {
        apex.add_edge(u, v)?;
    }
    for (u, v) in right.edges() {
        apex.add_edge(right_map[u], right_map[v])?;
    }
    debug_assert_eq!(
        bitset::len(bitset::from_members(right_map.iter().copied())),
        right.n()
    );

    Ok(CliqueSum {
        inj1: Morphism::new(
            left.clone(),
            apex.clone(),
            (0..n1).collect(),
            MorphismKind::Mono,
        ),
        inj2: Morphism::new(right.clone(), apex.clone(), right_map, MorphismKind::Mono),
        apex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    fn mono(from: Graph, to: Graph, map: Vec<usize>) -> GraphMorphism {
        Morphism::new(from, to, map, MorphismKind::Mono)
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        let k2 = complete_graph(2);
        let s = clique_sum(
            &mono(k2.clone(), complete_graph(3), vec![0, 1]),
            &mono(k2, complete_graph(3), vec![1, 2]),
        )
        .unwrap();
        assert_eq!(s.apex.n(), 4);
        assert_eq!(s.apex.edge_count(), 5);
        // Right triangle's vertices 1, 2 land on 0, 1; vertex 0 is new.
        assert_eq!(s.inj2.map, vec![3, 0, 1]);
    }

    #[test]
    fn gluing_two_edges_at_a_vertex_gives_p3() {
        let k1 = complete_graph(1);
        let s = clique_sum(
            &mono(k1.clone(), complete_graph(2), vec![1]),
            &mono(k1, complete_graph(2), vec![0]),
        )
        .unwrap();
        assert_eq!(s.apex, path_graph(3).unwrap());
    }

    #[test]
    fn absorbing_a_sub_clique() {
        let c5 = cycle_graph(5).unwrap();
        let k2 = complete_graph(2);
        let s = clique_sum(
            &mono(k2.clone(), c5.clone(), vec![2, 3]),
            &mono(k2.clone(), k2.clone(), vec![0, 1]),
        )
        .unwrap();
        assert_eq!(s.apex, c5);
        assert!(is_monomorphism(&s.inj1) && is_monomorphism(&s.inj2));
        // Legs commute with the span.
        let left = mono(k2.clone(), c5.clone(), vec![2, 3])
            .then(&s.inj1)
            .unwrap();
        let right = mono(k2.clone(), k2, vec![0, 1]).then(&s.inj2).unwrap();
        assert_eq!(left.map, right.map);
    }

    #[test]
    fn rejects_bad_legs() {
        let k1 = complete_graph(1);
        let d2 = crate::graph::discrete_graph(2);
        let not_mono = Morphism::new(
            d2.clone(),
            complete_graph(1),
            vec![0, 0],
            MorphismKind::Homo,
        );
        let mono_from_d2 = mono(d2, complete_graph(2), vec![0, 1]);
        assert_eq!(
            clique_sum(&not_mono, &not_mono),
            Err(Error::SpineMismatch(2))
        );
        assert_eq!(
            clique_sum(&mono(k1.clone(), complete_graph(2), vec![0]), &mono_from_d2),
            Err(Error::ApexMismatch)
        );
        let k2 = complete_graph(2);
        let collapsing = Morphism::new(
            k2.clone(),
            complete_graph(2),
            vec![0, 0],
            MorphismKind::Homo,
        );
        assert_eq!(
            clique_sum(&collapsing, &collapsing),
            Err(Error::LegsNotMono)
        );
    }
}
