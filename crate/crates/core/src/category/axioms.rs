use super::{Morphism, SFunctor, SpanDiagram, SpineIndex, SpinedCategory};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// SF1 is checked on `spine(0..=DEFAULT_SPINE_CHECK)` unless the instance
/// cap is smaller.
pub const DEFAULT_SPINE_CHECK: SpineIndex = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc1Witness<O> {
    pub n: SpineIndex,
    pub morphism: Morphism<O>,
}

/// Finds the least `n` with an arrow `x -> spine(n)`, with a witness.
pub fn check_sc1<C: SpinedCategory>(cat: &C, x: &C::Object) -> Result<Sc1Witness<C::Object>> {
    Error::cap("object", cat.size(x), cat.cap())?;
    for n in 0..=cat.cap() {
        if let Some(morphism) = cat.morphism_to_spine(x, n)? {
            return Ok(Sc1Witness { n, morphism });
        }
    }
    Err(Error::NoSpineMorphism { cap: cat.cap() })
}

/// The order `|x|`: least `n` with an arrow `x -> spine(n)`.
pub fn object_order<C: SpinedCategory>(cat: &C, x: &C::Object) -> Result<usize> {
    check_sc1(cat, x).map(|w| w.n)
}

/// The generalized clique number: largest `n` with an arrow `spine(n) -> x`,
/// or `None` when no spine object maps into `x` at all.
pub fn generalized_clique<C: SpinedCategory>(cat: &C, x: &C::Object) -> Result<Option<usize>> {
    let mut best = None;
    for n in 0..=cat.spine_search_limit(x) {
        if cat.morphism_from_spine(n, x)?.is_some() {
            best = Some(n);
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sc2Verdict<O> {
    /// The unique arrow `P(g, h) -> P(g'g, h'h)` commuting with the legs.
    pub mediator: Morphism<O>,
    /// Number of arrows between the two apexes that were examined.
    pub candidates: usize,
}

/// Checks SC2 for one span and one pair of extensions by exhaustive search
/// over all arrows between the two proxy-pushout apexes.
pub fn check_sc2<C: SpinedCategory>(
    cat: &C,
    span: &SpanDiagram<C::Object>,
    ext_left: &Morphism<C::Object>,
    ext_right: &Morphism<C::Object>,
) -> Result<Sc2Verdict<C::Object>> {
    cat.validate_span(span)?;
    if ext_left.source != *span.left_object() || ext_right.source != *span.right_object() {
        return Err(Error::ExtensionMismatch);
    }
    if !cat.is_morphism(ext_left) || !cat.is_morphism(ext_right) {
        return Err(Error::InvalidMorphism("extension is not an arrow".into()));
    }
    let inner = cat.proxy_pushout(span)?;
    let extended_span = SpanDiagram::new(
        span.n,
        span.left.then(ext_left)?,
        span.right.then(ext_right)?,
    );
    let outer = cat.proxy_pushout(&extended_span)?;

    // Both paths G -> P(g'g, h'h) (and H -> ...) the mediator must equalize.
    let left_path = ext_left.then(&outer.left_leg)?;
    let right_path = ext_right.then(&outer.right_leg)?;

    let candidates = cat.morphisms(&inner.apex, &outer.apex)?;
    let total = candidates.len();
    let mut commuting = candidates.into_iter().filter(|m| {
        let l = inner.left_leg.then(m);
        let r = inner.right_leg.then(m);
        matches!((l, r), (Ok(l), Ok(r)) if l.same_map(&left_path) && r.same_map(&right_path))
    });
    let mediator = commuting.next().ok_or(Error::NoMediator)?;
    let extra = commuting.count();
    if extra > 0 {
        return Err(Error::NonUniqueMediator { count: extra + 1 });
    }
    Ok(Sc2Verdict {
        mediator,
        candidates: total,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineViolation {
    pub n: SpineIndex,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushoutViolation {
    pub span: usize,
    pub left: usize,
    pub right: usize,
    pub apex: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leg {
    SpanLeft,
    SpanRight,
    CoconeLeft,
    CoconeRight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityViolation {
    pub span: usize,
    pub leg: Leg,
    pub source: usize,
    pub target: usize,
}

/// Outcome of [`check_spinal`]. Failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinalVerdict {
    pub functor: String,
    /// SF1 was checked on `spine(0..=spine_checked)`.
    pub spine_checked: SpineIndex,
    pub spans_checked: usize,
    pub sf1_violations: Vec<SpineViolation>,
    pub sf2_violations: Vec<PushoutViolation>,
    pub monotonicity_violations: Vec<MonotonicityViolation>,
}

impl SpinalVerdict {
    pub fn sf1_holds(&self) -> bool {
        self.sf1_violations.is_empty()
    }

    pub fn sf2_holds(&self) -> bool {
        self.sf2_violations.is_empty()
    }

    pub fn monotone(&self) -> bool {
        self.monotonicity_violations.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.sf1_holds() && self.sf2_holds() && self.monotone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpinalOptions {
    pub spine_up_to: SpineIndex,
    pub execution: Execution,
}

impl SpinalOptions {
    pub fn for_category<C: SpinedCategory>(cat: &C) -> Self {
        SpinalOptions {
            spine_up_to: cat.cap().min(DEFAULT_SPINE_CHECK),
            execution: Execution::default(),
        }
    }
}

/// Checks that `f` preserves the spine (SF1), sends every supplied proxy
/// pushout to the maximum of its two sides (SF2), and is monotone along every
/// arrow appearing in the spans and their cocones.
///
/// Returns `Err` only when an evaluation or a proxy pushout cannot be
/// computed (cap exceeded, invalid span).
pub fn check_spinal<C: SpinedCategory>(
    cat: &C,
    f: &SFunctor<C::Object>,
    spans: &[SpanDiagram<C::Object>],
) -> Result<SpinalVerdict> {
    check_spinal_with(cat, f, spans, SpinalOptions::for_category(cat))
}

struct SpanOutcome {
    sf2: Option<PushoutViolation>,
    monotonicity: Vec<MonotonicityViolation>,
}

pub fn check_spinal_with<C: SpinedCategory>(
    cat: &C,
    f: &SFunctor<C::Object>,
    spans: &[SpanDiagram<C::Object>],
    options: SpinalOptions,
) -> Result<SpinalVerdict> {
    let mut sf1_violations = Vec::new();
    for n in 0..=options.spine_up_to {
        let value = f.eval(&cat.spine(n)?)?;
        if value != n {
            sf1_violations.push(SpineViolation { n, value });
        }
    }

    let indexed: Vec<(usize, &SpanDiagram<C::Object>)> = spans.iter().enumerate().collect();
    let outcomes = options.execution.try_map(&indexed, |&(i, span)| {
        cat.validate_span(span)?;
        let cocone = cat.proxy_pushout(span)?;
        let apex_value = f.eval(span.apex())?;
        let left = f.eval(span.left_object())?;
        let right = f.eval(span.right_object())?;
        let top = f.eval(&cocone.apex)?;
        let sf2 = (top != left.max(right)).then_some(PushoutViolation {
            span: i,
            left,
            right,
            apex: top,
        });
        let monotonicity = [
            (Leg::SpanLeft, apex_value, left),
            (Leg::SpanRight, apex_value, right),
            (Leg::CoconeLeft, left, top),
            (Leg::CoconeRight, right, top),
        ]
        .into_iter()
        .filter(|&(_, s, t)| s > t)
        .map(|(leg, source, target)| MonotonicityViolation {
            span: i,
            leg,
            source,
            target,
        })
        .collect();
        Ok::<_, Error>(SpanOutcome { sf2, monotonicity })
    })?;

    let mut sf2_violations = Vec::new();
    let mut monotonicity_violations = Vec::new();
    for outcome in outcomes {
        sf2_violations.extend(outcome.sf2);
        monotonicity_violations.extend(outcome.monotonicity);
    }
    Ok(SpinalVerdict {
        functor: f.name().to_string(),
        spine_checked: options.spine_up_to,
        spans_checked: spans.len(),
        sf1_violations,
        sf2_violations,
        monotonicity_violations,
    })
}
