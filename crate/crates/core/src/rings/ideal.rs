use serde::Serialize;

use crate::combinatorics::Parameters;
use crate::error::Result;
use crate::groebner::{buchberger, GroebnerQuotient, Ideal};
use num_traits::One;

use crate::poly::{elementary, homogeneous, Coeff, Monomial, MonomialOrder, Polynomial};

/// Generators of `I_{n,k}^{(r)}`, kept in their three families.
#[derive(Debug, Clone)]
pub struct IdealGenerators {
    pub p: Parameters,
    /// `x_1^k, ..., x_n^k`
    pub powers: Vec<Polynomial>,
    /// `e_n(x_n), e_{n-1}(x_n), ..., e_{n-k+1}(x_n)`
    pub elementaries: Vec<Polynomial>,
    /// `h_{k-r+1}(x_r), ..., h_k(x_r)`
    pub homogeneous: Vec<Polynomial>,
}

impl IdealGenerators {
    pub fn generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.powers
            .iter()
            .chain(&self.elementaries)
            .chain(&self.homogeneous)
    }

    pub fn len(&self) -> usize {
        self.powers.len() + self.elementaries.len() + self.homogeneous.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.generators().cloned().collect(), MonomialOrder::NegLex)
            .expect("generators are nonzero and share a ring")
    }

    /// Generators rendered as strings, grouped by family.
    pub fn summary(&self) -> GeneratorSummary {
        let show = |v: &[Polynomial]| v.iter().map(|g| g.to_string()).collect();
        GeneratorSummary {
            powers: show(&self.powers),
            elementaries: show(&self.elementaries),
            homogeneous: show(&self.homogeneous),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorSummary {
    pub powers: Vec<String>,
    pub elementaries: Vec<String>,
    pub homogeneous: Vec<String>,
}

pub fn build_ideal(p: &Parameters) -> IdealGenerators {
    let (n, k, r) = (p.n(), p.k(), p.r());
    let powers = (1..=n)
        .map(|i| Polynomial::monomial(var_power(i, k, n), Coeff::one()))
        .collect();
    let elementaries = (n - k + 1..=n)
        .rev()
        .map(|d| elementary(d, n, n).expect("1 <= n"))
        .collect();
    let homogeneous = if r == 0 {
        Vec::new()
    } else {
        (k - r + 1..=k)
            .map(|d| homogeneous(d, r, n).expect("1 <= r <= n"))
            .collect()
    };
    IdealGenerators {
        p: *p,
        powers,
        elementaries,
        homogeneous,
    }
}

fn var_power(i: usize, e: usize, n: usize) -> Monomial {
    let mut exps = vec![0usize; n];
    exps[i - 1] = e;
    Monomial::from_usizes(&exps)
}

/// The neglex Gröbner quotient `R_{n,k}^{(r)}`.
pub fn stirling_quotient(p: &Parameters) -> GroebnerQuotient {
    buchberger(&build_ideal(p).ideal())
}

/// Same as [`stirling_quotient`] behind the Gröbner size budget.
pub fn checked_quotient(p: &Parameters, budget: &super::Budget) -> Result<GroebnerQuotient> {
    budget.check_groebner(p)?;
    Ok(stirling_quotient(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        for p in Parameters::all_up_to(6) {
            let s = build_ideal(&p);
            assert_eq!(s.len(), p.n() + p.k() + p.r(), "{}", p);
        }
        let s = build_ideal(&Parameters::new(5, 3, 0).unwrap());
        assert_eq!(s.len(), 8);
        assert!(s.homogeneous.is_empty());
    }

    #[test]
    fn example_generators() {
        let s = build_ideal(&Parameters::new(4, 3, 2).unwrap());
        let sm = s.summary();
        assert_eq!(sm.powers[0], "x1^3");
        assert_eq!(sm.elementaries[0], "x1*x2*x3*x4");
        assert_eq!(s.elementaries[2].len(), 6);
        assert_eq!(sm.homogeneous, vec!["x2^2 + x1*x2 + x1^2", "x2^3 + x1*x2^2 + x1^2*x2 + x1^3"]);
    }

    #[test]
    fn invariant_ideal_case() {
        let s = build_ideal(&Parameters::new(3, 3, 3).unwrap());
        assert_eq!(s.elementaries.last().unwrap().to_string(), "x3 + x2 + x1");
        assert_eq!(s.homogeneous[0].to_string(), "x3 + x2 + x1");
    }
}
