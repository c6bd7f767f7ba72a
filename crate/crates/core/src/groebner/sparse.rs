use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

/// Working representation: terms sorted increasingly, leading term last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SparsePoly {
    pub terms: Vec<(Monomial, Coeff)>,
}

impl SparsePoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SparsePoly { terms }
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub fn lc(&self) -> &Coeff {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub fn make_monic(&mut self) {
        let lc = self.lc().clone();
        if !lc.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &lc;
            }
        }
    }

    /// `self - c * q * g`, where the leading terms are known to cancel.
    pub fn sub_mul_cancelling(&self, c: &Coeff, q: &Monomial, g: &SparsePoly, order: MonomialOrder) -> SparsePoly {
        let a = &self.terms[..self.terms.len() - 1];
        let b = &g.terms[..g.terms.len() - 1];
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Monomial> = b.first().map(|t| t.0.mul(q));
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), &shifted) {
                (Some(x), Some(y)) => order.cmp(&x.0, y),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let m = shifted.take().unwrap();
                    out.push((m, -(c * &b[j].1)));
                    j += 1;
                    shifted = b.get(j).map(|t| t.0.mul(q));
                }
                Ordering::Equal => {
                    let m = shifted.take().unwrap();
                    let v = &a[i].1 - c * &b[j].1;
                    if !v.is_zero() {
                        out.push((m, v));
                    }
                    i += 1;
                    j += 1;
                    shifted = b.get(j).map(|t| t.0.mul(q));
                }
            }
        }
        SparsePoly { terms: out }
    }
}

/// Full reduction of `f` by `divisors` (leading and tail terms).
pub(crate) fn reduce(f: SparsePoly, divisors: &[&SparsePoly], order: MonomialOrder) -> SparsePoly {
    let mut p = f;
    let mut remainder = Vec::new();
    while let Some((m, c)) = p.terms.last() {
        match divisors.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = g.lm().quotient_of(m).unwrap();
                let coef = c / g.lc();
                p = p.sub_mul_cancelling(&coef, &q, g, order);
            }
            None => remainder.push(p.terms.pop().unwrap()),
        }
    }
    remainder.reverse();
    SparsePoly { terms: remainder }
}
