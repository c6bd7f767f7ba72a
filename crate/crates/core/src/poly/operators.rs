use num_traits::Zero;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::combinatorics::Permutation;
use crate::error::{domain, Result};

/// `s_i f`: swap `x_i` and `x_{i+1}`.
pub fn swap_variables(i: usize, f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        f.nvars(),
        f.terms().map(|(m, c)| {
            let mut m = m.clone();
            m.exps_mut().swap(i - 1, i);
            (m, c.clone())
        }),
    )
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
///
/// Computed monomial by monomial: for `x_i^a x_{i+1}^b` with `a > b` the
/// quotient is `(x_i x_{i+1})^b` times the complete homogeneous sum of degree
/// `a - b - 1` in `x_i, x_{i+1}`; `a = b` gives zero and `a < b` the negative
/// of the swapped case.
pub fn divided_difference(i: usize, f: &Polynomial) -> Result<Polynomial> {
    let n = f.nvars();
    if i == 0 || i >= n {
        return Err(domain(format!(
            "∂_{} needs 1 <= i < number of variables ({})",
            i, n
        )));
    }
    let mut out = Polynomial::zero(n);
    for (m, c) in f.terms() {
        let (a, b) = (m.exp(i), m.exp(i + 1));
        if a == b {
            continue;
        }
        let (hi, lo, coef) = if a > b {
            (a, b, c.clone())
        } else {
            (b, a, -c.clone())
        };
        let top = hi - lo - 1;
        for t in 0..=top {
            let mut e = m.clone();
            let ex = e.exps_mut();
            ex[i - 1] = lo + top - t;
            ex[i] = lo + t;
            out.add_term(e, coef.clone());
        }
    }
    Ok(out)
}

/// Isobaric divided difference `π_i f = ∂_i(x_i f)`.
pub fn isobaric_divided_difference(i: usize, f: &Polynomial) -> Result<Polynomial> {
    if i == 0 || i >= f.nvars() {
        return Err(domain(format!("π_{} out of range", i)));
    }
    divided_difference(i, &f.mul_monomial(&Monomial::var(i, f.nvars())))
}

/// The ring automorphism `x_i ↦ x_{w(i)}` for `i <= |w|`; other variables are
/// fixed. The result lives in `max(nvars, |w|)` variables.
pub fn permute_variables(w: &Permutation, f: &Polynomial) -> Polynomial {
    let n = f.nvars().max(w.size());
    Polynomial::from_terms(
        n,
        f.terms().map(|(m, c)| {
            let src = m.extended(n);
            let mut dst = Monomial::one(n);
            let ex = dst.exps_mut();
            for (idx, &e) in src.exps().iter().enumerate() {
                let target = if idx < w.size() { w.apply(idx + 1) } else { idx + 1 };
                ex[target - 1] = e;
            }
            (dst, c.clone())
        }),
    )
    .extended(n)
}

/// Checks `(x_i - x_{i+1}) ∂_i f = f - s_i f`; used as an independent route.
pub fn divided_difference_residual(i: usize, f: &Polynomial) -> Result<bool> {
    let q = divided_difference(i, f)?;
    let n = f.nvars();
    let linear = &Polynomial::var(i, n) - &Polynomial::var(i + 1, n);
    let lhs = &linear * &q;
    let rhs = f - &swap_variables(i, f);
    Ok((&lhs - &rhs).terms().all(|(_, c)| c.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::symmetric::elementary;
    use crate::poly::Coeff;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse_in(s, n).unwrap()
    }

    #[test]
    fn small_divided_differences() {
        assert_eq!(divided_difference(1, &p("x1", 2)).unwrap(), p("1", 2));
        assert_eq!(divided_difference(1, &p("x1^2*x2", 2)).unwrap(), p("x1*x2", 2));
        assert_eq!(divided_difference(1, &p("x2", 2)).unwrap(), p("-1", 2));
        assert!(divided_difference(1, &elementary(2, 3, 3).unwrap()).unwrap().is_zero());
        assert!(divided_difference(3, &p("x1", 3)).is_err());
        assert!(divided_difference(0, &p("x1", 3)).is_err());
    }

    #[test]
    fn permute_examples() {
        let f = p("x1^2*x3 + 5*x2", 3);
        assert_eq!(permute_variables(&Permutation::identity(3), &f), f);
        let s1: Permutation = "213".parse().unwrap();
        assert_eq!(permute_variables(&s1, &p("x1", 3)), p("x2", 3));
        // σ(242141) = 132546, σ^{-1} = 132546 as well; x1^3 x2^2 x4 ↦ x1^3 x3^2 x5
        let sigma: Permutation = "132546".parse().unwrap();
        let g = permute_variables(&sigma.inverse(), &p("x1^3*x2^2*x4", 6));
        assert_eq!(g, p("x1^3*x3^2*x5", 6));
    }

    #[test]
    fn permutation_action_is_left_action() {
        let u: Permutation = "2314".parse().unwrap();
        let v: Permutation = "1432".parse().unwrap();
        let f = p("x1^3*x2 + x3*x4^2 - x2", 4);
        let lhs = permute_variables(&u, &permute_variables(&v, &f));
        let rhs = permute_variables(&u.compose(&v).unwrap(), &f);
        assert_eq!(lhs, rhs);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u16..4, n), -4i64..5), 0..7)
            .prop_map(move |ts| {
                Polynomial::from_terms(
                    n,
                    ts.into_iter()
                        .map(|(e, a)| (Monomial::new(e), Coeff::from_integer(a.into()))),
                )
            })
    }

    proptest! {
        #[test]
        fn nil_and_braid_relations(f in arb_poly(5), i in 1usize..4) {
            let d = |j: usize, g: &Polynomial| divided_difference(j, g).unwrap();
            prop_assert!(d(i, &d(i, &f)).is_zero());
            prop_assert_eq!(d(i, &d(i + 1, &d(i, &f))), d(i + 1, &d(i, &d(i + 1, &f))));
            if i + 2 < 5 {
                prop_assert_eq!(d(i, &d(i + 2, &f)), d(i + 2, &d(i, &f)));
            }
        }

        #[test]
        fn divided_difference_multiplies_back(f in arb_poly(4), i in 1usize..4) {
            prop_assert!(divided_difference_residual(i, &f).unwrap());
        }
    }
}
