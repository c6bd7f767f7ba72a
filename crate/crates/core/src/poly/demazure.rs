use num_traits::One;

use super::monomial::Monomial;
use super::operators::isobaric_divided_difference;
use super::polynomial::{Coeff, Polynomial};

/// Key polynomial `κ_γ` in `|γ|` variables.
///
/// A weakly decreasing `γ` gives `x^γ`. Otherwise, for the first `i` with
/// `γ_i < γ_{i+1}`, `κ_γ = π_i κ_{s_i γ}`.
pub fn demazure(gamma: &[usize]) -> Polynomial {
    match gamma.windows(2).position(|g| g[0] < g[1]) {
        None => Polynomial::monomial(Monomial::from_usizes(gamma), Coeff::one()),
        Some(idx) => {
            let mut swapped = gamma.to_vec();
            swapped.swap(idx, idx + 1);
            isobaric_divided_difference(idx + 1, &demazure(&swapped)).expect("index within range")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::reverse_skip;
    use crate::poly::order::MonomialOrder;
    use crate::poly::symmetric::homogeneous;

    #[test]
    fn dominant_is_monomial() {
        assert_eq!(demazure(&[3, 1, 1, 0]).to_string(), "x1^3*x2*x3");
        assert_eq!(demazure(&[0, 0, 0, 0]), Polynomial::one(4));
    }

    #[test]
    fn two_variable_keys() {
        assert_eq!(demazure(&[0, 2]), homogeneous(2, 2, 2).unwrap());
        assert_eq!(demazure(&[0, 1]).to_string(), "x2 + x1");
    }

    #[test]
    fn reverse_skip_leading_term() {
        // S = {3,4}, n = 4: γ(S) = (0,0,3,3), γ(S)* = (3,3,0,0), already dominant.
        let g = reverse_skip(&[3, 4], 4).unwrap();
        assert_eq!(g, vec![3, 3, 0, 0]);
        let k = demazure(&g);
        let (m, c) = k.leading_term(MonomialOrder::NegLex).unwrap();
        assert_eq!(m.to_string(), "x1^3*x2^3");
        assert!(c.is_one());
        // S = {1,2}: γ(S)* = (0,0,1,1)
        let k = demazure(&reverse_skip(&[1, 2], 4).unwrap());
        let (m, c) = k.leading_term(MonomialOrder::NegLex).unwrap();
        assert_eq!(m.to_string(), "x3*x4");
        assert!(c.is_one());
    }

    #[test]
    fn monomial_positive_small_compositions() {
        fn all(n: usize, total: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return if total == 0 { vec![vec![]] } else { vec![] };
            }
            let mut out = Vec::new();
            for a in 0..=total {
                for mut rest in all(n - 1, total - a) {
                    rest.insert(0, a);
                    out.push(rest);
                }
            }
            out
        }
        for n in 1..=5 {
            for total in 0..=6 {
                for g in all(n, total) {
                    let k = demazure(&g);
                    assert!(k.has_nonnegative_coefficients(), "{:?}", g);
                    assert!(k.is_integral());
                    assert!(k.is_homogeneous());
                    assert!(k.coefficient(&Monomial::from_usizes(&g)).is_one());
                }
            }
        }
    }
}
