use std::cmp::Ordering;

use super::quotient::GroebnerQuotient;
use super::sparse::{reduce, SparsePoly};
use super::Ideal;
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: usize,
}

struct State {
    order: MonomialOrder,
    polys: Vec<SparsePoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State {
    fn divisors(&self) -> Vec<&SparsePoly> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn reduce(&self, f: SparsePoly) -> SparsePoly {
        reduce(f, &self.divisors(), self.order)
    }

    /// Adds a reduced, monic `h` and updates the pair list with the
    /// Gebauer-Möller installation of both Buchberger criteria.
    fn insert(&mut self, h: SparsePoly) {
        let hi = self.polys.len();
        let lh = h.lm().clone();
        self.polys.push(h);

        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lh.lcm(self.polys[g].lm())))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = lh.coprime(self.polys[*g].lm());
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.coprime(self.polys[*g].lm()))
            .map(|(g, lcm)| Pair {
                i: g,
                j: hi,
                degree: lcm.degree(),
                lcm,
            })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let l1 = polys[p.i].lm().lcm(&lh);
            let l2 = lh.lcm(polys[p.j].lm());
            !(lh.divides(&p.lcm) && l1 != p.lcm && l2 != p.lcm)
        });
        self.pairs.extend(fresh);

        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(hi);
    }

    /// Normal strategy: smallest lcm degree, then smallest lcm in the order.
    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }
}

fn s_poly_sparse(f: &SparsePoly, g: &SparsePoly, order: MonomialOrder) -> SparsePoly {
    let l = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&l).unwrap();
    let qg = g.lm().quotient_of(&l).unwrap();
    // (l/lm f) f / lc f - (l/lm g) g / lc g, with leading terms cancelling
    let mut a = SparsePoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&qf), c / f.lc()))
            .collect(),
    };
    if a.terms.is_empty() {
        return a;
    }
    let coef: Coeff = a.lc() / g.lc();
    a = a.sub_mul_cancelling(&coef, &qg, g, order);
    a
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let a = SparsePoly::from_poly(f, order);
    let b = SparsePoly::from_poly(g, order);
    s_poly_sparse(&a, &b, order).to_poly(f.nvars())
}

/// Reduced Gröbner basis of `ideal`, packaged with its standard monomials.
pub fn buchberger(ideal: &Ideal) -> GroebnerQuotient {
    let order = ideal.order();
    let nvars = ideal.nvars();
    let mut st = State {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in ideal.generators() {
        let mut h = st.reduce(SparsePoly::from_poly(g, order));
        if !h.is_zero() {
            h.make_monic();
            st.insert(h);
        }
    }
    while let Some(pair) = st.pop_pair() {
        let s = s_poly_sparse(&st.polys[pair.i], &st.polys[pair.j], order);
        let mut h = st.reduce(s);
        if !h.is_zero() {
            h.make_monic();
            st.insert(h);
        }
    }

    // The active set is minimal; tail-reduce each element against the rest.
    let mut basis: Vec<SparsePoly> = st.active.iter().map(|&i| st.polys[i].clone()).collect();
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for idx in 0..basis.len() {
        let f = basis[idx].clone();
        let others: Vec<&SparsePoly> = basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != idx)
            .map(|(_, g)| g)
            .collect();
        let lead = f.terms.last().unwrap().clone();
        let tail = SparsePoly {
            terms: f.terms[..f.terms.len() - 1].to_vec(),
        };
        let mut reduced = reduce(tail, &others, order);
        reduced.terms.push(lead);
        debug_assert!(reduced
            .terms
            .windows(2)
            .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Less));
        basis[idx] = reduced;
    }
    GroebnerQuotient::from_reduced_basis(nvars, order, basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str], n: usize) -> Ideal {
        Ideal::new(
            gens.iter()
                .map(|s| Polynomial::parse_in(s, n).unwrap())
                .collect(),
            MonomialOrder::NegLex,
        )
        .unwrap()
    }

    #[test]
    fn variables_ideal() {
        let q = buchberger(&ideal(&["x1", "x2"], 2));
        assert_eq!(q.basis().len(), 2);
        assert_eq!(q.standard_monomials().unwrap(), &[Monomial::one(2)]);
    }

    #[test]
    fn two_variable_coinvariants() {
        let q = buchberger(&ideal(&["x1 + x2", "x1*x2"], 2));
        let std: Vec<String> = q
            .standard_monomials()
            .unwrap()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(std, vec!["1", "x1"]);
    }

    #[test]
    fn lex_textbook_example() {
        // ⟨x^2 - y, x^3 - x⟩ in lex with x > y: reduced basis {y^2 - y, x*y - x, x^2 - y}
        let i = Ideal::new(
            vec![
                Polynomial::parse_in("x1^2 - x2", 2).unwrap(),
                Polynomial::parse_in("x1^3 - x1", 2).unwrap(),
            ],
            MonomialOrder::Lex,
        )
        .unwrap();
        let q = buchberger(&i);
        let mut got: Vec<String> = q.basis().iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["-x2 + x1^2", "x1*x2 - x1", "x2^2 - x2"]);
        assert!(q.satisfies_buchberger_criterion());
    }

    #[test]
    fn redundant_generators_collapse() {
        let q = buchberger(&ideal(&["x1^2", "x1^3", "x1^2*x2"], 2));
        assert_eq!(q.basis().len(), 1);
        assert!(q.standard_monomials().is_err());
    }
}
