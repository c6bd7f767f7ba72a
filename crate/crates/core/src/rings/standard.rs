use std::collections::BTreeSet;

use serde::Serialize;

use crate::combinatorics::{enumerate_partitions, reverse_skip, Parameters};
use crate::error::Result;
use crate::groebner::{hilbert_series, GroebnerQuotient};
use crate::poly::{demazure, Monomial, MonomialOrder};

#[derive(Debug, Clone, Serialize)]
pub struct StandardBasisReport {
    pub params: Parameters,
    pub equal: bool,
    pub groebner_size: usize,
    pub code_size: usize,
    /// Standard monomials that are not `x^code(σ)` for any σ.
    pub only_groebner: Vec<String>,
    /// Code monomials missing from the standard monomials.
    pub only_codes: Vec<String>,
}

/// `{x^code(σ) : σ ∈ OP_{n,k}^{(r)}}`, ordered by degree then neglex.
pub fn code_monomials(p: &Parameters) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = enumerate_partitions(p)
        .iter()
        .map(|s| Monomial::from_usizes(&s.code_entries()))
        .collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| MonomialOrder::NegLex.cmp(a, b))
    });
    out
}

/// Compares the Gröbner standard monomials with the code monomials as sets.
pub fn verify_standard_basis(p: &Parameters, q: &GroebnerQuotient) -> Result<StandardBasisReport> {
    let groebner: BTreeSet<Monomial> = q.standard_monomials()?.iter().cloned().collect();
    let codes: BTreeSet<Monomial> = code_monomials(p).into_iter().collect();
    let only_groebner: Vec<String> = groebner.difference(&codes).map(|m| m.to_string()).collect();
    let only_codes: Vec<String> = codes.difference(&groebner).map(|m| m.to_string()).collect();
    Ok(StandardBasisReport {
        params: *p,
        equal: only_groebner.is_empty() && only_codes.is_empty(),
        groebner_size: groebner.len(),
        code_size: codes.len(),
        only_groebner,
        only_codes,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertReport {
    pub params: Parameters,
    pub groebner: Vec<u64>,
    pub coinversions: Vec<u64>,
    pub equal: bool,
    pub series: String,
}

/// `Σ_σ q^{coinv(σ)}` over `OP_{n,k}^{(r)}`, as a coefficient list.
pub fn coinv_distribution(p: &Parameters) -> Vec<u64> {
    let mut out = Vec::new();
    for s in enumerate_partitions(p) {
        let d = s.coinv();
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += 1;
    }
    out
}

pub fn verify_hilbert(p: &Parameters, q: &GroebnerQuotient) -> Result<HilbertReport> {
    let groebner = hilbert_series(q)?;
    let coinversions = coinv_distribution(p);
    Ok(HilbertReport {
        params: *p,
        equal: groebner == coinversions,
        series: format_q_series(&groebner),
        groebner,
        coinversions,
    })
}

/// `[1, 4, 8]` renders as `1 + 4q + 8q^2`.
pub fn format_q_series(coeffs: &[u64]) -> String {
    let parts: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let var = match d {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{}", d),
            };
            match (c, d) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{}{}", c, var),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Smallest `e` with `x_i^e` in the initial ideal, for each `i`.
pub fn pure_power_exponents(q: &GroebnerQuotient) -> Vec<Option<usize>> {
    (1..=q.nvars())
        .map(|i| {
            q.leading_monomials()
                .iter()
                .filter(|m| (1..=q.nvars()).all(|j| j == i || m.exp(j) == 0))
                .map(|m| m.exp(i) as usize)
                .min()
        })
        .collect()
}

/// The pure powers implied by the standard basis: `k - i + 1` for `i <= r`,
/// `k` otherwise, and `n - i + 1` when `k = n`; the smallest applies.
pub fn expected_pure_powers(p: &Parameters) -> Vec<usize> {
    let (n, k, r) = (p.n(), p.k(), p.r());
    (1..=n)
        .map(|i| {
            let mut e = k;
            if i <= r {
                e = e.min(k - i + 1);
            }
            if k == n {
                e = e.min(n - i + 1);
            }
            e
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DemazureFailure {
    pub subset: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DemazureReport {
    pub params: Parameters,
    pub subsets: usize,
    pub failures: Vec<DemazureFailure>,
}

impl DemazureReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All `m`-element subsets of `[n]`, lexicographically.
pub fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for s in start..=n {
            if n - s + 1 < m - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, n, m, cur, out);
            cur.pop();
        }
    }
    go(1, n, m, &mut cur, &mut out);
    out
}

/// For every `S ⊆ [n]` with `|S| = n - k + 1`: `κ_{γ(S)*}` lies in the
/// ideal and has leading term `x(S)*` with coefficient 1.
pub fn demazure_membership(p: &Parameters, q: &GroebnerQuotient) -> Result<DemazureReport> {
    let n = p.n();
    let all = subsets(n, n - p.k() + 1);
    let mut failures = Vec::new();
    for s in &all {
        let gamma = reverse_skip(s, n)?;
        let kappa = demazure(&gamma);
        let fail = |reason: String| DemazureFailure {
            subset: s.clone(),
            reason,
        };
        match kappa.leading_term(MonomialOrder::NegLex) {
            Some((m, c)) if *m == Monomial::from_usizes(&gamma) && num_traits::One::is_one(c) => {}
            other => {
                failures.push(fail(format!(
                    "leading term {:?} differs from x^{:?}",
                    other.map(|(m, c)| format!("{}*{}", c, m)),
                    gamma
                )));
                continue;
            }
        }
        if !kappa.is_integral() {
            failures.push(fail("non-integer coefficient".into()));
        } else if !q.contains(&kappa) {
            failures.push(fail(format!("normal form {}", q.normal_form(&kappa))));
        }
    }
    Ok(DemazureReport {
        params: *p,
        subsets: all.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::stirling_quotient;

    fn params(n: usize, k: usize, r: usize) -> Parameters {
        Parameters::new(n, k, r).unwrap()
    }

    #[test]
    fn example_standard_basis() {
        let p = params(4, 3, 2);
        let q = stirling_quotient(&p);
        let rep = verify_standard_basis(&p, &q).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.groebner_size, 30);
        let std: Vec<String> = q.standard_monomials().unwrap().iter().map(|m| m.to_string()).collect();
        for m in ["x1^2*x2*x4^2", "x2", "1", "x3^2"] {
            assert!(std.contains(&m.to_string()), "{}", m);
        }
    }

    #[test]
    fn example_hilbert() {
        let p = params(4, 3, 2);
        let rep = verify_hilbert(&p, &stirling_quotient(&p)).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.groebner, vec![1, 4, 8, 9, 6, 2]);
        assert_eq!(rep.series, "1 + 4q + 8q^2 + 9q^3 + 6q^4 + 2q^5");
    }

    #[test]
    fn small_triples_pass() {
        for p in Parameters::all_up_to(4) {
            let q = stirling_quotient(&p);
            assert!(verify_standard_basis(&p, &q).unwrap().equal, "{}", p);
            assert!(verify_hilbert(&p, &q).unwrap().equal, "{}", p);
            assert!(demazure_membership(&p, &q).unwrap().passed(), "{}", p);
            let got: Vec<usize> = pure_power_exponents(&q).into_iter().map(Option::unwrap).collect();
            assert_eq!(got, expected_pure_powers(&p), "{}", p);
        }
    }

    #[test]
    fn coinvariant_staircase() {
        for n in 1..=4 {
            let p = params(n, n, n);
            let q = stirling_quotient(&p);
            assert!(q
                .standard_monomials()
                .unwrap()
                .iter()
                .all(|m| (1..=n).all(|i| (m.exp(i) as usize) <= n - i)));
            assert_eq!(q.dimension().unwrap(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn demazure_subset_counts() {
        let p = params(4, 3, 2);
        assert_eq!(demazure_membership(&p, &stirling_quotient(&p)).unwrap().subsets, 6);
        let p = params(5, 3, 0);
        assert_eq!(demazure_membership(&p, &stirling_quotient(&p)).unwrap().subsets, 10);
        let p = params(4, 4, 1);
        assert_eq!(demazure_membership(&p, &stirling_quotient(&p)).unwrap().subsets, 4);
        for s in subsets(4, 1) {
            assert_eq!(reverse_skip(&s, 4).unwrap().iter().filter(|&&a| a > 0).count(), 1);
        }
    }

    #[test]
    fn series_format() {
        assert_eq!(format_q_series(&[]), "0");
        assert_eq!(format_q_series(&[0, 1, 0, 3]), "q + 3q^3");
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
