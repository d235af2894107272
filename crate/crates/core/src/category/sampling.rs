//! Seeded span sampling.
//!
//! The checkers take explicit span lists; this module produces them. Policy:
//! draw two objects from a caller-supplied generator, pick `n` uniformly from
//! `0..=min(ω(G), ω(H))`, then pick each leg uniformly among all arrows
//! `spine(n) -> G` (resp. `H`). Pairs into which no spine object maps are
//! redrawn. The same seed always yields the same spans.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{generalized_clique, Morphism, SpanDiagram, SpinedCategory};
use crate::error::{Error, Result};

const MAX_REDRAWS: usize = 1000;

fn sample_one<C, G>(cat: &C, rng: &mut ChaCha8Rng, gen: &mut G) -> Result<SpanDiagram<C::Object>>
where
    C: SpinedCategory,
    G: FnMut(&mut ChaCha8Rng) -> C::Object,
{
    for _ in 0..MAX_REDRAWS {
        let g = gen(rng);
        let h = gen(rng);
        let (Some(wg), Some(wh)) = (generalized_clique(cat, &g)?, generalized_clique(cat, &h)?)
        else {
            continue;
        };
        let n = rng.random_range(0..=wg.min(wh));
        let apex = cat.spine(n)?;
        let left = cat.morphisms(&apex, &g)?;
        let right = cat.morphisms(&apex, &h)?;
        if let (Some(l), Some(r)) = (left.choose(rng), right.choose(rng)) {
            return Ok(SpanDiagram::new(n, l.clone(), r.clone()));
        }
    }
    Err(Error::OutOfRange(
        "generator never produced objects admitting a span".into(),
    ))
}

/// Draws `count` spans, deterministically from `seed`.
pub fn sample_spans<C, G>(
    cat: &C,
    count: usize,
    seed: u64,
    mut gen: G,
) -> Result<Vec<SpanDiagram<C::Object>>>
where
    C: SpinedCategory,
    G: FnMut(&mut ChaCha8Rng) -> C::Object,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| sample_one(cat, &mut rng, &mut gen))
        .collect()
}

/// A span together with one extension of each side, as consumed by
/// [`super::check_sc2`].
pub type ExtendedSpan<O> = (SpanDiagram<O>, Morphism<O>, Morphism<O>);

/// Draws spans and extends each side with `extend`, deterministically.
pub fn sample_extension_pairs<C, G, E>(
    cat: &C,
    count: usize,
    seed: u64,
    mut gen: G,
    mut extend: E,
) -> Result<Vec<ExtendedSpan<C::Object>>>
where
    C: SpinedCategory,
    G: FnMut(&mut ChaCha8Rng) -> C::Object,
    E: FnMut(&mut ChaCha8Rng, &C::Object) -> Morphism<C::Object>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let span = sample_one(cat, &mut rng, &mut gen)?;
            let l = extend(&mut rng, span.left_object());
            let r = extend(&mut rng, span.right_object());
            Ok((span, l, r))
        })
        .collect()
}
