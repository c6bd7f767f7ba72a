use std::fmt;

use smallvec::SmallVec;

use crate::error::{domain, Result};

pub type Exponent = u16;

/// Dense exponent vector; position `i` holds the exponent of `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[Exponent; 12]>);

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = Exponent>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn from_usizes(exps: &[usize]) -> Self {
        Monomial(exps.iter().map(|&e| e as Exponent).collect())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    /// `x_i`, 1-based.
    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i - 1] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[Exponent] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> Exponent {
        self.0[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Pads with zero exponents up to `nvars`.
    pub fn extended(&self, nvars: usize) -> Monomial {
        let mut v = self.0.clone();
        v.resize(nvars.max(v.len()), 0);
        Monomial(v)
    }

    /// Drops trailing variables; fails if any dropped exponent is nonzero.
    pub fn truncated(&self, nvars: usize) -> Result<Monomial> {
        if self.0.iter().skip(nvars).any(|&e| e != 0) {
            return Err(domain(format!(
                "monomial {} uses variables beyond x{}",
                self, nvars
            )));
        }
        Ok(Monomial(self.0.iter().take(nvars).copied().collect()))
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [Exponent] {
        &mut self.0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}
