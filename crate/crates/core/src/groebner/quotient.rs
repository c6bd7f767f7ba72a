use std::collections::HashMap;

use super::buchberger::s_polynomial;
use super::sparse::{reduce, SparsePoly};
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

/// A reduced Gröbner basis together with the standard monomials it cuts out.
#[derive(Debug, Clone)]
pub struct GroebnerQuotient {
    nvars: usize,
    order: MonomialOrder,
    sparse: Vec<SparsePoly>,
    basis: Vec<Polynomial>,
    leading: Vec<Monomial>,
    standard: Option<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
}

impl GroebnerQuotient {
    pub(crate) fn from_reduced_basis(nvars: usize, order: MonomialOrder, sparse: Vec<SparsePoly>) -> Self {
        let basis = sparse.iter().map(|p| p.to_poly(nvars)).collect();
        let leading: Vec<Monomial> = sparse.iter().map(|p| p.lm().clone()).collect();
        let standard = enumerate_standard(nvars, &leading, order);
        let index = standard
            .iter()
            .flatten()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GroebnerQuotient {
            nvars,
            order,
            sparse,
            basis,
            leading,
            standard,
            index,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Reduced basis: monic, sorted by increasing leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Minimal generators of the initial ideal.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn is_finite(&self) -> bool {
        self.standard.is_some()
    }

    /// Standard monomials sorted by increasing degree, then increasing order.
    pub fn standard_monomials(&self) -> Result<&[Monomial]> {
        self.standard.as_deref().ok_or_else(|| {
            Error::Unsupported("quotient is infinite dimensional".to_string())
        })
    }

    pub fn dimension(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Position of a standard monomial in `standard_monomials()`.
    pub fn standard_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let divisors: Vec<&SparsePoly> = self.sparse.iter().collect();
        reduce(SparsePoly::from_poly(f, self.order), &divisors, self.order).to_poly(self.nvars)
    }

    /// Normal form as `(standard index, coefficient)` pairs.
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<(usize, Coeff)>> {
        self.standard_monomials()?;
        Ok(self
            .normal_form(f)
            .into_terms()
            .map(|(m, c)| (self.index[&m], c))
            .collect())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Re-checks that every S-polynomial of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.basis.len() {
            for j in i + 1..self.basis.len() {
                let s = s_polynomial(&self.basis[i], &self.basis[j], self.order);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Reduced-basis shape: monic, and no term of any element divisible by
    /// another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.sparse.iter().enumerate().all(|(i, p)| {
            p.lc() == &Coeff::from_integer(1.into())
                && p.terms.iter().all(|(m, _)| {
                    self.leading
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }
}

pub fn normal_form(f: &Polynomial, q: &GroebnerQuotient) -> Polynomial {
    q.normal_form(f)
}

/// Coefficient of `q^d` is the number of standard monomials of degree `d`.
pub fn hilbert_series(q: &GroebnerQuotient) -> Result<Vec<u64>> {
    let std = q.standard_monomials()?;
    let top = std.iter().map(Monomial::degree).max().unwrap_or(0);
    let mut series = vec![0u64; top + 1];
    for m in std {
        series[m.degree()] += 1;
    }
    Ok(series)
}

pub fn leading_terms(q: &GroebnerQuotient) -> &[Monomial] {
    q.leading_monomials()
}

/// Walks the order ideal below the staircase. Finite exactly when every
/// variable has a pure power among the leading monomials.
fn enumerate_standard(nvars: usize, leading: &[Monomial], order: MonomialOrder) -> Option<Vec<Monomial>> {
    let mut bounds = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let b = leading
            .iter()
            .filter(|l| l.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
            .map(|l| l.exps()[i])
            .min()?;
        bounds.push(b);
    }
    let mut out = Vec::new();
    let mut cur = Monomial::one(nvars);
    fn go(i: usize, cur: &mut Monomial, bounds: &[u16], leading: &[Monomial], out: &mut Vec<Monomial>) {
        if i == bounds.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..bounds[i] {
            cur.exps_mut()[i] = e;
            if leading.iter().any(|l| l.divides(cur)) {
                break;
            }
            go(i + 1, cur, bounds, leading, out);
        }
        cur.exps_mut()[i] = 0;
    }
    go(0, &mut cur, &bounds, leading, &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(a, b)));
    Some(out)
}
