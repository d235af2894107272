//! Counterexample machinery: `ℕ_div`, finite posets, and the demos built on
//! them.

mod demos;
mod ndiv;
mod poset;

pub use demos::{
    demo_clique_failure, demo_order_failure, demo_poset_no_sfunctor, graph_generalized_clique,
    poset_height_functor, pseudo_chordal_witness, CliqueFailure, OrderFailure, PosetObstruction,
    PseudoChordalWitness, EXPONENT_SAMPLE, PSEUDO_CHORDAL_RANGE,
};
pub use ndiv::{
    max_prime_exponent, max_prime_exponent_functor, ndiv_instance, ndiv_spine, primes_up_to,
    DivObject, NDiv, NDIV_CAP,
};
pub use poset::{
    enumerate_poset_homomorphisms, enumerate_poset_monomorphisms, find_poset_isomorphism,
    is_monotone, is_poset_monomorphism, poset_mono_instance, poset_pushout, Poset, PosetMono,
    PosetMorphism, PosetPushout, POSET_MAX,
};
