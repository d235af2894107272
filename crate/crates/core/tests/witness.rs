use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spined::category::{
    check_sc1, check_sc2, check_spinal, generalized_clique, sample_extension_pairs, Morphism,
    MorphismKind,
};
use spined::chordal::{is_chordal, treewidth_oracle};
use spined::graph::{clique_sum, complete_graph, enumerate_monomorphisms};
use spined::witness::{
    demo_clique_failure, demo_order_failure, demo_poset_no_sfunctor, enumerate_poset_homomorphisms,
    enumerate_poset_monomorphisms, find_poset_isomorphism, max_prime_exponent,
    max_prime_exponent_functor, ndiv_instance, ndiv_spine, poset_pushout, pseudo_chordal_witness,
    DivObject, Poset, PosetMorphism,
};

fn d(v: u64) -> DivObject {
    DivObject::new(v).unwrap()
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// `∏_{p ≤ n} p^n mod v`, with `primes` every prime up to at least `n`.
fn omega_mod(primes: &[u64], n: usize, v: u64) -> u64 {
    primes
        .iter()
        .take_while(|&&p| p <= n as u64)
        .fold(1 % v, |acc, &p| acc * pow_mod(p, n as u64, v) % v)
}

fn primes_by_trial_division(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0))
        .collect()
}

#[test]
fn spine_values() {
    assert_eq!(ndiv_spine(2), d(4));
    assert_eq!(ndiv_spine(3), d(216));
    assert_eq!(ndiv_spine(4), d(1296));
}

#[test]
fn order_is_least_spine_index_for_every_value_up_to_ten_thousand() {
    let cat = ndiv_instance();
    let primes = primes_by_trial_division(10_000);
    for v in 1..=10_000u64 {
        let n = check_sc1(&cat, &d(v)).unwrap().n;
        assert_eq!(omega_mod(&primes, n, v), 0, "{v} does not divide Ω_{n}");
        if n > 0 {
            assert_ne!(
                omega_mod(&primes, n - 1, v),
                0,
                "{v} already divides Ω_{}",
                n - 1
            );
        }
    }
    assert_eq!(check_sc1(&cat, &d(12)).unwrap().n, 3);
    assert_eq!(check_sc1(&cat, &d(16)).unwrap().n, 4);
}

#[test]
fn generalized_clique_values() {
    let cat = ndiv_instance();
    assert_eq!(generalized_clique(&cat, &d(16)).unwrap(), Some(2));
    assert_eq!(generalized_clique(&cat, &d(81)).unwrap(), Some(1));
    assert_eq!(generalized_clique(&cat, &d(1296)).unwrap(), Some(4));
}

#[test]
fn lcm_satisfies_sc2() {
    let cat = ndiv_instance();
    let pairs = sample_extension_pairs(
        &cat,
        300,
        101,
        |rng| d(rng.random_range(1..=10_000)),
        |rng, x| {
            let target = x.lcm(&d(rng.random_range(1..=50)));
            Morphism::new(x.clone(), target, Vec::new(), MorphismKind::Divisibility)
        },
    )
    .unwrap();
    for (span, l, r) in pairs {
        let v = check_sc2(&cat, &span, &l, &r).unwrap();
        assert_eq!(v.candidates, 1);
    }
}

/// Largest exponent in the factorization of `v`, from a smallest-prime-factor
/// table.
fn mpe_by_sieve(spf: &[u32], mut v: usize) -> usize {
    let mut best = 0;
    while v > 1 {
        let p = spf[v] as usize;
        let mut e = 0;
        while v.is_multiple_of(p) {
            v /= p;
            e += 1;
        }
        best = best.max(e);
    }
    best
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn exponent_of_lcm_is_max_of_exponents() {
    const LIMIT: usize = 1_000_000;
    let mut spf = vec![0u32; LIMIT + 1];
    for i in 2..=LIMIT {
        if spf[i] == 0 {
            for j in (i..=LIMIT).step_by(i) {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
            }
        }
    }
    let mpe: Vec<usize> = (0..=1000)
        .map(|v| {
            if v == 0 {
                0
            } else {
                max_prime_exponent(&d(v as u64))
            }
        })
        .collect();
    for a in 1..=1000u64 {
        for b in 1..=1000u64 {
            let l = (a / gcd(a, b) * b) as usize;
            assert_eq!(mpe_by_sieve(&spf, l), mpe[a as usize].max(mpe[b as usize]));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100_000 {
        let (a, b) = (
            rng.random_range(1..=10_000u64),
            rng.random_range(1..=10_000u64),
        );
        let lcm = d(a).lcm(&d(b));
        assert_eq!(
            max_prime_exponent(&lcm),
            max_prime_exponent(&d(a)).max(max_prime_exponent(&d(b)))
        );
        assert_eq!(lcm, d(a / gcd(a, b) * b));
    }
}

#[test]
fn exponent_preserves_the_spine_except_where_it_collapses() {
    for n in [0, 2, 3, 4, 5, 6] {
        assert_eq!(max_prime_exponent(&ndiv_spine(n)), n);
    }
    // Ω_0 = Ω_1 = 1, so no functor can send both to their index.
    assert_eq!(ndiv_spine(1), ndiv_spine(0));
    assert_eq!(max_prime_exponent(&ndiv_spine(1)), 0);
}

#[test]
fn clique_failure_report() {
    let r = demo_clique_failure().unwrap();
    assert_eq!(
        (r.left.clone(), r.right.clone(), r.apex.clone()),
        (d(16), d(81), d(1296))
    );
    assert_eq!(r.omega, (2, 1, 4));
    assert!(r.clique_violates_sf2());
    assert!(r.exponent.sf2_holds());
    assert!(r.exponent.monotone());
    let sf1: Vec<usize> = r.exponent.sf1_violations.iter().map(|v| v.n).collect();
    assert_eq!(sf1, vec![1]);
    let cat = ndiv_instance();
    let again = check_spinal(&cat, &max_prime_exponent_functor(), &[]).unwrap();
    assert_eq!(again.sf1_violations.len(), 1);
}

#[test]
fn order_failure_report() {
    let r = demo_order_failure().unwrap();
    let bad = &r.order.sf2_violations[0];
    assert_eq!((bad.left, bad.right, bad.apex), (2, 2, 3));
    assert!(r.clique_number.passes());
    assert!(r.delta.passes());
}

#[test]
fn poset_pushout_examples() {
    let l3 = Poset::chain(3).unwrap();
    let id = |p: &Poset| {
        Morphism::new(
            p.clone(),
            p.clone(),
            (0..p.n()).collect(),
            MorphismKind::PosetMono,
        )
    };
    assert_eq!(poset_pushout(&id(&l3), &id(&l3)).unwrap().apex, l3);

    let l0 = Poset::chain(0).unwrap();
    let l2 = Poset::chain(2).unwrap();
    let empty = Morphism::new(l0, l2.clone(), vec![], MorphismKind::PosetMono);
    let p = poset_pushout(&empty, &empty).unwrap().apex;
    assert_eq!(p.n(), 4);
    assert_eq!(p.strict_pairs(), vec![(0, 1), (2, 3)]);
    assert_eq!(p.height(), 2);
}

#[test]
fn poset_obstruction_report() {
    let r = demo_poset_no_sfunctor().unwrap();
    assert_eq!(r.pushout.n(), 4);
    assert!(find_poset_isomorphism(&r.pushout, &Poset::chain(4).unwrap()).is_some());
    assert_eq!((r.forced, r.required), (4, 3));
    assert!(r.extended_height > r.extended_required);
    assert!(r.contradiction());
}

/// Every poset on `n` labeled elements, as generated orders.
fn posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out: Vec<Poset> = (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let chosen: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            Poset::generated(n, &chosen).ok()
        })
        .collect();
    out.sort_by_key(|p| p.strict_pairs());
    out.dedup();
    out
}

#[test]
fn poset_labeled_counts() {
    // Labeled posets: 1, 1, 3, 19.
    let counts: Vec<usize> = (0..=3).map(|n| posets(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 19]);
}

#[test]
fn poset_pushout_is_universal_among_monotone_maps() {
    let mut targets: Vec<Poset> = (0..=3).flat_map(posets).collect();
    targets.push(Poset::chain(5).unwrap());
    targets.push(Poset::generated(6, &[(0, 2), (1, 2), (2, 3), (2, 4), (4, 5)]).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let small: Vec<Poset> = (1..=3).flat_map(posets).collect();
    let mut cocones = 0;
    for _ in 0..25 {
        let p = &small[rng.random_range(0..small.len())];
        let q = &small[rng.random_range(0..small.len())];
        let k = rng.random_range(0..=p.n().min(q.n()).min(2));
        let chain = Poset::chain(k).unwrap();
        let fs: Vec<PosetMorphism> = enumerate_poset_monomorphisms(&chain, p).unwrap();
        let gs: Vec<PosetMorphism> = enumerate_poset_monomorphisms(&chain, q).unwrap();
        let (Some(f), Some(g)) = (fs.first(), gs.last()) else {
            continue;
        };
        let Ok(push) = poset_pushout(f, g) else {
            continue;
        };
        for z in &targets {
            let z1s = enumerate_poset_homomorphisms(p, z).unwrap();
            let z2s = enumerate_poset_homomorphisms(q, z).unwrap();
            // How many monotone maps out of the apex restrict to each pair.
            let mut restrictions = std::collections::HashMap::new();
            for m in enumerate_poset_homomorphisms(&push.apex, z).unwrap() {
                let key = (
                    push.inj1.then(&m).unwrap().map,
                    push.inj2.then(&m).unwrap().map,
                );
                *restrictions.entry(key).or_insert(0) += 1;
            }
            for z1 in &z1s {
                for z2 in &z2s {
                    if !f.then(z1).unwrap().same_map(&g.then(z2).unwrap()) {
                        continue;
                    }
                    cocones += 1;
                    let key = (z1.map.clone(), z2.map.clone());
                    assert_eq!(restrictions.get(&key), Some(&1));
                }
            }
        }
    }
    assert!(cocones > 1000, "only {cocones} cocones");
}

#[test]
fn pseudo_chordal_witnesses() {
    let w = pseudo_chordal_witness(4).unwrap();
    assert_eq!(w.graph.n(), 7);
    assert!(!w.chordal && !is_chordal(&w.graph));
    assert_eq!(w.delta, 4);
    assert_eq!(treewidth_oracle(&w.graph).unwrap(), Some(3));
    assert_eq!(pseudo_chordal_witness(5).unwrap().delta, 5);
    for n in 3..=4 {
        let w = pseudo_chordal_witness(n).unwrap();
        let k1 = complete_graph(1);
        let kn = complete_graph(n);
        let at = |g| Morphism::new(k1.clone(), g, vec![0], MorphismKind::Mono);
        let doubled = clique_sum(&at(kn.clone()), &at(kn.clone())).unwrap().apex;
        assert!(!enumerate_monomorphisms(&kn, &w.graph).unwrap().is_empty());
        assert!(!enumerate_monomorphisms(&w.graph, &doubled)
            .unwrap()
            .is_empty());
    }
}
