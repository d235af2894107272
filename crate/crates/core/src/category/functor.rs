use std::fmt;
use std::sync::Arc;

use super::{generalized_clique, object_order, SpinedCategory};
use crate::error::{Error, Result};

type Evaluator<O> = dyn Fn(&O) -> Result<usize> + Send + Sync;

/// A candidate S-functor: a named, deterministic map from objects to the
/// naturals. Whether it really is an S-functor on a given instance is what
/// [`super::check_spinal`] tests.
pub struct SFunctor<O> {
    name: String,
    eval: Arc<Evaluator<O>>,
}

impl<O> Clone for SFunctor<O> {
    fn clone(&self) -> Self {
        SFunctor {
            name: self.name.clone(),
            eval: Arc::clone(&self.eval),
        }
    }
}

impl<O> fmt::Debug for SFunctor<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SFunctor")
            .field("name", &self.name)
            .finish()
    }
}

impl<O> SFunctor<O> {
    pub fn new<F>(name: impl Into<String>, eval: F) -> Self
    where
        F: Fn(&O) -> Result<usize> + Send + Sync + 'static,
    {
        SFunctor {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: &O) -> Result<usize> {
        (self.eval)(x)
    }
}

/// Pointwise maximum of two S-functors.
pub fn sfunctor_join<O: 'static>(f: &SFunctor<O>, g: &SFunctor<O>) -> SFunctor<O> {
    let (f2, g2) = (f.clone(), g.clone());
    SFunctor::new(format!("max({}, {})", f.name, g.name), move |x| {
        Ok(f2.eval(x)?.max(g2.eval(x)?))
    })
}

/// The order map `x ↦ |x|` of an instance, as a candidate S-functor.
pub fn order_functor<C>(cat: C) -> SFunctor<C::Object>
where
    C: SpinedCategory + Send + 'static,
{
    SFunctor::new("order", move |x| object_order(&cat, x))
}

/// The generalized clique number of an instance, as a candidate S-functor.
pub fn generalized_clique_functor<C>(cat: C) -> SFunctor<C::Object>
where
    C: SpinedCategory + Send + 'static,
{
    SFunctor::new("generalized clique", move |x| {
        generalized_clique(&cat, x)?.ok_or(Error::NoSpineMorphism { cap: cat.cap() })
    })
}
