//! Buchberger's algorithm over ℚ, normal forms and standard monomials.

mod buchberger;
mod quotient;
mod sparse;

pub use buchberger::{buchberger, s_polynomial};
pub use quotient::{hilbert_series, leading_terms, normal_form, GroebnerQuotient};

use crate::error::{domain, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// A nonempty list of nonzero generators in one ring, with a monomial order.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(domain("an ideal needs at least one generator"));
        };
        let nvars = first.nvars();
        if generators.iter().any(Polynomial::is_zero) {
            return Err(domain("generators must be nonzero"));
        }
        if generators.iter().any(|g| g.nvars() != nvars) {
            return Err(domain("generators live in different rings"));
        }
        Ok(Ideal { generators, order })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.generators[0].nvars()
    }
}
