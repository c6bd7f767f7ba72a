use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{domain, Result};

/// Monomial orders on a fixed number of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// `x^a < x^b` iff for the last index `i` where they differ, `a_i < b_i`.
    #[default]
    NegLex,
    /// `x_1 > x_2 > ...`, decided at the first differing index.
    Lex,
    /// Total degree, ties broken by reverse lexicographic order.
    GrevLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match self {
            MonomialOrder::NegLex => {
                for i in (0..x.len()).rev() {
                    match x[i].cmp(&y[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => x.cmp(y),
            MonomialOrder::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for i in (0..x.len()).rev() {
                    match x[i].cmp(&y[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// `neglex` comparison with a length check.
pub fn neglex_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(domain(format!(
            "comparing monomials in {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(MonomialOrder::NegLex.cmp(a, b))
}
