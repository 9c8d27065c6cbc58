use crate::error::{Error, Result};
use crate::polycore::{MonomialOrder, Polynomial, Variables};
use crate::scalar::Field;

/// Limits for standard-basis and normal-form computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Maximal number of single-term reduction steps per computation.
    pub iteration_cap: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions { iteration_cap: 1_000_000 }
    }
}

/// Generators of an ideal of the polynomial ring, viewed in the local ring
/// at the origin when `order` is local.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealGens<C> {
    vars: Variables,
    generators: Vec<Polynomial<C>>,
    order: MonomialOrder,
}

impl<C: Field> IdealGens<C> {
    /// Ideal in the local ring `O_{m,0}`. Zero generators are dropped.
    pub fn local(generators: impl IntoIterator<Item = Polynomial<C>>) -> Result<Self> {
        Self::with_order(generators, MonomialOrder::LocalAntiDegRevLex)
    }

    pub fn with_order(generators: impl IntoIterator<Item = Polynomial<C>>, order: MonomialOrder) -> Result<Self> {
        let all: Vec<_> = generators.into_iter().collect();
        let Some(first) = all.first() else {
            return Err(Error::Invalid("an ideal needs at least one generator".into()));
        };
        let vars = first.variables().clone();
        if all.iter().any(|g| *g.variables() != vars) {
            return Err(Error::VariableMismatch);
        }
        let generators = all.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealGens { vars, generators, order })
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn variables(&self) -> &Variables {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub(crate) fn require_local(&self) -> Result<()> {
        if self.order.is_local() {
            Ok(())
        } else {
            Err(Error::Invalid("local-ring computations need a local monomial order".into()))
        }
    }
}
