use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{Exponent, Monomial};
use super::order::MonomialOrder;
use crate::error::{domain, Error, Result};

pub type Coeff = BigRational;

/// Sparse polynomial over ℚ in a fixed number of variables.
///
/// No zero coefficient is ever stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::monomial(Monomial::one(nvars), Coeff::one())
    }

    pub fn constant(c: Coeff, nvars: usize) -> Self {
        Polynomial::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `x_i`, 1-based.
    pub fn var(i: usize, nvars: usize) -> Self {
        Polynomial::monomial(Monomial::var(i, nvars), Coeff::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coeff)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted from largest to smallest in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Embeds into a ring with more variables.
    pub fn extended(&self, nvars: usize) -> Self {
        let nvars = nvars.max(self.nvars);
        Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extended(nvars), c.clone()))
                .collect(),
        }
    }

    /// Restricts to the first `nvars` variables; fails if a dropped variable occurs.
    pub fn truncated(&self, nvars: usize) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.truncated(nvars)?, c.clone())))
            .collect::<Result<_>>()?;
        Ok(Polynomial { nvars, terms })
    }

    /// Largest variable index with a nonzero exponent in some term.
    pub fn max_variable(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.exps().iter().rposition(|&e| e != 0))
            .max()
            .map_or(0, |i| i + 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::one(self.nvars), |acc, _| &acc * self)
    }

    fn check_same_ring(&self, other: &Polynomial) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials live in rings with different numbers of variables"
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_ring(rhs);
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Canonical text: terms in decreasing `neglex` order, coefficients in lowest
/// terms, e.g. `x1^2*x2 - 3/2*x3 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.sorted_terms(MonomialOrder::NegLex).into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

impl Polynomial {
    /// Parses the canonical text form (and any reordering of it) into a ring
    /// with `nvars` variables.
    pub fn parse_in(s: &str, nvars: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero(nvars);
        let mut rest = compact.as_str();
        let mut sign = 1;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            let (m, c) = parse_term(term, nvars)?;
            p.add_term(m, if sign < 0 { -c } else { c });
            if tail.is_empty() {
                break;
            }
            sign = if tail.starts_with('-') { -1 } else { 1 };
            rest = &tail[1..];
        }
        Ok(p)
    }
}

fn parse_term(term: &str, nvars: usize) -> Result<(Monomial, Coeff)> {
    let bad = || Error::Parse(format!("cannot read term {:?}", term));
    if term.is_empty() {
        return Err(bad());
    }
    let mut coeff = Coeff::one();
    let mut exps = vec![0 as Exponent; nvars];
    for factor in term.split('*') {
        if let Some(var) = factor.strip_prefix('x') {
            let (idx, e) = match var.split_once('^') {
                Some((i, e)) => (i, e.parse::<Exponent>().map_err(|_| bad())?),
                None => (var, 1),
            };
            let i: usize = idx.parse().map_err(|_| bad())?;
            if i == 0 || i > nvars {
                return Err(Error::Parse(format!("x{} outside x1..x{}", i, nvars)));
            }
            exps[i - 1] += e;
        } else {
            let c = match factor.split_once('/') {
                Some((a, b)) => {
                    let a: BigInt = a.parse().map_err(|_| bad())?;
                    let b: BigInt = b.parse().map_err(|_| bad())?;
                    if b.is_zero() {
                        return Err(bad());
                    }
                    Coeff::new(a, b)
                }
                None => Coeff::from_integer(factor.parse().map_err(|_| bad())?),
            };
            coeff *= c;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Infers the number of variables from the largest index mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let mut nvars = 0;
        let bytes = s.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'x' {
                let digits: String = s[i + 1..].chars().take_while(|c| c.is_ascii_digit()).collect();
                let idx: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable in {:?}", s)))?;
                nvars = nvars.max(idx);
            }
        }
        Polynomial::parse_in(s, nvars)
    }
}

/// Reads an integer-valued coefficient.
pub fn integer_value(c: &Coeff) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(domain(format!("{} is not an integer", c)))
    }
}
