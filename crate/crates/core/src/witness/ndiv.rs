//! The divisibility order on the positive integers, spined by
//! `Ω_n = ∏_{p ≤ n} p^n` with least common multiples as proxy pushouts.
//!
//! Values are kept factored, so spine objects far beyond machine integers
//! stay cheap; [`DivObject::value`] expands to an arbitrary-precision
//! integer on demand.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::category::{
    CoconeDiagram, Morphism, MorphismKind, SFunctor, SpanDiagram, SpineIndex, SpinedCategory,
};
use crate::error::{Error, Result};

/// A positive integer as its prime factorization.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DivObject {
    factors: BTreeMap<u64, u32>,
}

impl fmt::Debug for DivObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DivObject({})", self.value())
    }
}

impl fmt::Display for DivObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl DivObject {
    /// Factors `v` by trial division.
    pub fn new(v: u64) -> Result<DivObject> {
        if v == 0 {
            return Err(Error::NonPositive);
        }
        let mut factors = BTreeMap::new();
        let mut rest = v;
        let mut p = 2u64;
        while p * p <= rest {
            while rest.is_multiple_of(p) {
                *factors.entry(p).or_insert(0) += 1;
                rest /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            *factors.entry(rest).or_insert(0) += 1;
        }
        Ok(DivObject { factors })
    }

    pub fn one() -> DivObject {
        DivObject::default()
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::from(1u32), |acc, (&p, &e)| {
                acc * BigUint::from(p).pow(e)
            })
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.keys().next_back().copied()
    }

    pub fn divides(&self, other: &DivObject) -> bool {
        self.factors.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    pub fn lcm(&self, other: &DivObject) -> DivObject {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            let slot = factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        DivObject { factors }
    }
}

/// Primes `p ≤ n`, by a sieve.
pub fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            for j in (i * i..=n).step_by(i) {
                composite[j] = true;
            }
        }
    }
    out
}

/// `Ω_n = ∏_{p ≤ n} p^n`. Note `Ω_0 = Ω_1 = 1`.
pub fn ndiv_spine(n: SpineIndex) -> DivObject {
    let e = u32::try_from(n).expect("spine index fits in u32");
    DivObject {
        factors: primes_up_to(n).into_iter().map(|p| (p, e)).collect(),
    }
}

/// The largest exponent in the factorization; `0` for `1`.
pub fn max_prime_exponent(v: &DivObject) -> usize {
    v.factors.values().copied().max().unwrap_or(0) as usize
}

pub fn max_prime_exponent_functor() -> SFunctor<DivObject> {
    SFunctor::new("max prime exponent", |v: &DivObject| {
        Ok(max_prime_exponent(v))
    })
}

/// Default cap on the spine index searched for an arrow `x -> Ω_n`; enough
/// for every value up to `10^4`.
pub const NDIV_CAP: usize = 10_000;

/// `(ℕ, |)` with spine `Ω_n` and `lcm` as proxy pushout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NDiv {
    cap: usize,
}

impl Default for NDiv {
    fn default() -> Self {
        NDiv { cap: NDIV_CAP }
    }
}

impl NDiv {
    pub fn with_cap(cap: usize) -> Self {
        NDiv { cap }
    }
}

pub fn ndiv_instance() -> NDiv {
    NDiv::default()
}

fn arrow(a: &DivObject, b: &DivObject) -> Morphism<DivObject> {
    Morphism::new(a.clone(), b.clone(), Vec::new(), MorphismKind::Divisibility)
}

impl SpinedCategory for NDiv {
    type Object = DivObject;

    fn name(&self) -> &str {
        "N_div"
    }

    fn cap(&self) -> usize {
        self.cap
    }

    /// The least `n` with `x | Ω_n`, read off the factorization: every
    /// prime of `x` must be at most `n`, and so must every exponent.
    fn size(&self, x: &DivObject) -> usize {
        let p = x.largest_prime().unwrap_or(0);
        (p as usize).max(max_prime_exponent(x))
    }

    fn spine(&self, n: SpineIndex) -> Result<DivObject> {
        Error::cap("spine index", n, self.cap)?;
        Ok(ndiv_spine(n))
    }

    fn identity(&self, x: &DivObject) -> Morphism<DivObject> {
        arrow(x, x)
    }

    fn is_morphism(&self, m: &Morphism<DivObject>) -> bool {
        m.kind == MorphismKind::Divisibility && m.map.is_empty() && m.source.divides(&m.target)
    }

    fn morphisms(&self, from: &DivObject, to: &DivObject) -> Result<Vec<Morphism<DivObject>>> {
        Ok(if from.divides(to) {
            vec![arrow(from, to)]
        } else {
            Vec::new()
        })
    }

    fn morphism_to_spine(
        &self,
        x: &DivObject,
        n: SpineIndex,
    ) -> Result<Option<Morphism<DivObject>>> {
        let fits = x.largest_prime().is_none_or(|p| p as usize <= n) && max_prime_exponent(x) <= n;
        Ok(fits.then(|| arrow(x, &ndiv_spine(n))))
    }

    fn morphism_from_spine(
        &self,
        n: SpineIndex,
        x: &DivObject,
    ) -> Result<Option<Morphism<DivObject>>> {
        let omega = self.spine(n)?;
        Ok(omega.divides(x).then(|| arrow(&omega, x)))
    }

    /// `Ω_n | x` with `n ≥ 2` forces `2^n | x`, so `n` is at most the largest
    /// exponent of `x`.
    fn spine_search_limit(&self, x: &DivObject) -> SpineIndex {
        max_prime_exponent(x).max(1)
    }

    fn proxy_pushout(&self, span: &SpanDiagram<DivObject>) -> Result<CoconeDiagram<DivObject>> {
        self.validate_span(span)?;
        let (a, b) = (span.left_object(), span.right_object());
        let apex = a.lcm(b);
        Ok(CoconeDiagram {
            left_leg: arrow(a, &apex),
            right_leg: arrow(b, &apex),
            apex,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{check_sc1, check_sc2, generalized_clique, object_order};

    fn d(v: u64) -> DivObject {
        DivObject::new(v).unwrap()
    }

    #[test]
    fn spine_values() {
        assert_eq!(ndiv_spine(0), d(1));
        assert_eq!(ndiv_spine(1), d(1));
        assert_eq!(ndiv_spine(2), d(4));
        assert_eq!(ndiv_spine(3), d(216));
        assert_eq!(ndiv_spine(4), d(1296));
        assert_eq!(
            ndiv_spine(6).value(),
            BigUint::from(2u64.pow(6) * 3u64.pow(6) * 5u64.pow(6))
        );
    }

    #[test]
    fn factorization() {
        assert_eq!(max_prime_exponent(&d(1)), 0);
        assert_eq!(max_prime_exponent(&d(16)), 4);
        assert_eq!(max_prime_exponent(&d(1296)), 4);
        assert_eq!(d(16).lcm(&d(81)), d(1296));
        assert!(d(12).divides(&d(216)) && !d(16).divides(&d(216)));
        assert_eq!(DivObject::new(0), Err(Error::NonPositive));
        assert_eq!(d(9973).largest_prime(), Some(9973));
    }

    #[test]
    fn order_and_generalized_clique() {
        let cat = ndiv_instance();
        assert_eq!(check_sc1(&cat, &d(12)).unwrap().n, 3);
        assert_eq!(object_order(&cat, &d(16)).unwrap(), 4);
        assert_eq!(object_order(&cat, &d(1)).unwrap(), 0);
        assert_eq!(generalized_clique(&cat, &d(16)).unwrap(), Some(2));
        assert_eq!(generalized_clique(&cat, &d(81)).unwrap(), Some(1));
        assert_eq!(generalized_clique(&cat, &d(1296)).unwrap(), Some(4));
    }

    #[test]
    fn lcm_mediator_is_unique() {
        let cat = ndiv_instance();
        let one = d(1);
        let span = SpanDiagram::new(0, arrow(&one, &d(16)), arrow(&one, &d(81)));
        let v = check_sc2(&cat, &span, &arrow(&d(16), &d(32)), &arrow(&d(81), &d(81))).unwrap();
        assert_eq!(v.mediator.source, d(1296));
        assert_eq!(v.mediator.target, d(2592));
        assert_eq!(v.candidates, 1);
    }
}
