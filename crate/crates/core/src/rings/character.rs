use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::ideal::build_ideal;
use crate::combinatorics::{enumerate_partitions, OrderedSetPartition, Parameters, Permutation};
use crate::error::{domain, Result};
use crate::groebner::{buchberger, hilbert_series, GroebnerQuotient, Ideal};
use crate::poly::{elementary, integer_value, permute_variables, Coeff, Monomial, MonomialOrder, Polynomial};

/// Graded traces of `S_r × S_{n-r}` on a quotient, with normal forms of
/// permuted standard monomials cached across group elements.
pub struct CharacterTable<'a> {
    q: &'a GroebnerQuotient,
    r: usize,
    memo: HashMap<Monomial, Polynomial>,
}

impl<'a> CharacterTable<'a> {
    pub fn new(q: &'a GroebnerQuotient, r: usize) -> Self {
        CharacterTable {
            q,
            r,
            memo: HashMap::new(),
        }
    }

    fn nf_monomial(&mut self, m: Monomial) -> &Polynomial {
        let q = self.q;
        self.memo
            .entry(m)
            .or_insert_with_key(|m| q.normal_form(&Polynomial::monomial(m.clone(), Coeff::from(BigInt::from(1)))))
    }

    /// Trace of `w1 × w2` on each graded piece.
    pub fn trace(&mut self, w1: &Permutation, w2: &Permutation) -> Result<Vec<i64>> {
        let n = self.q.nvars();
        if w1.size() != self.r || w1.size() + w2.size() != n {
            return Err(domain(format!(
                "need w1 in S_{} and w2 in S_{}, got sizes {} and {}",
                self.r,
                n - self.r,
                w1.size(),
                w2.size()
            )));
        }
        let g = Permutation::direct_sum(w1, w2);
        let standard = self.q.standard_monomials()?;
        let top = standard.iter().map(Monomial::degree).max().unwrap_or(0);
        let mut traces = vec![0i64; top + 1];
        for m in standard {
            let moved = permute_monomial(&g, m);
            let c = self.nf_monomial(moved).coefficient(m);
            if !c.is_zero() {
                let v = integer_value(&c)?
                    .to_i64()
                    .ok_or_else(|| domain("trace entry out of range"))?;
                traces[m.degree()] += v;
            }
        }
        Ok(traces)
    }
}

fn permute_monomial(g: &Permutation, m: &Monomial) -> Monomial {
    let mut exps = vec![0usize; m.nvars()];
    for i in 1..=m.nvars() {
        exps[g.apply(i) - 1] = m.exp(i) as usize;
    }
    Monomial::from_usizes(&exps)
}

/// Graded trace of `(w1, w2)` on `R_{n,k}^{(r)}` given its quotient.
pub fn character_trace(
    w1: &Permutation,
    w2: &Permutation,
    p: &Parameters,
    q: &GroebnerQuotient,
) -> Result<Vec<i64>> {
    CharacterTable::new(q, p.r()).trace(w1, w2)
}

/// Number of `σ ∈ OP_{n,k}^{(r)}` with `(w1 × w2).σ = σ`.
pub fn fixed_points(w1: &Permutation, w2: &Permutation, partitions: &[OrderedSetPartition]) -> Result<usize> {
    let g = Permutation::direct_sum(w1, w2);
    let mut count = 0;
    for s in partitions {
        if &s.act(&g)? == s {
            count += 1;
        }
    }
    Ok(count)
}

/// Every generator, moved by each simple transposition of `S_r × S_{n-r}`,
/// still reduces to zero.
pub fn ideal_is_stable(p: &Parameters, q: &GroebnerQuotient) -> bool {
    let n = p.n();
    let gens: Vec<Polynomial> = build_ideal(p).generators().cloned().collect();
    (1..n).filter(|&i| i != p.r()).all(|i| {
        let s = Permutation::identity(n).swap_positions(i);
        gens.iter().all(|g| q.contains(&permute_variables(&s, g)))
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceMismatch {
    pub w1: String,
    pub w2: String,
    pub trace: i64,
    pub fixed_points: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChevalleyReport {
    pub params: Parameters,
    pub stable: bool,
    pub group_order: usize,
    pub identity_traces: Vec<i64>,
    pub mismatches: Vec<TraceMismatch>,
}

impl ChevalleyReport {
    pub fn passed(&self) -> bool {
        self.stable && self.mismatches.is_empty()
    }
}

/// Total trace against fixed-point count for every element of `S_r × S_{n-r}`.
pub fn verify_chevalley(p: &Parameters, q: &GroebnerQuotient) -> Result<ChevalleyReport> {
    let (n, r) = (p.n(), p.r());
    let stable = ideal_is_stable(p, q);
    let partitions = enumerate_partitions(p);
    let mut table = CharacterTable::new(q, r);
    let mut mismatches = Vec::new();
    let mut group_order = 0;
    for w1 in Permutation::all(r) {
        for w2 in Permutation::all(n - r) {
            group_order += 1;
            let total: i64 = table.trace(&w1, &w2)?.iter().sum();
            let fixed = fixed_points(&w1, &w2, &partitions)?;
            if total != fixed as i64 {
                mismatches.push(TraceMismatch {
                    w1: w1.to_string(),
                    w2: w2.to_string(),
                    trace: total,
                    fixed_points: fixed,
                });
            }
        }
    }
    let identity_traces = table.trace(&Permutation::identity(r), &Permutation::identity(n - r))?;
    Ok(ChevalleyReport {
        params: *p,
        stable,
        group_order,
        identity_traces,
        mismatches,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TensorProbeReport {
    pub params: Parameters,
    pub label: &'static str,
    pub lhs: Vec<u64>,
    pub coinvariant_r: Vec<u64>,
    pub sign_component: Vec<u64>,
    pub rhs: Vec<u64>,
    /// `lhs == rhs` coefficient by coefficient.
    pub equal: bool,
    /// The sign component starts in degree `C(r, 2)`.
    pub shift: usize,
    /// `q^shift · lhs == rhs`.
    pub equal_after_shift: bool,
}

/// Hilbert series of the coinvariant ring `Q[x_1..x_r]/<e_1, ..., e_r>`.
pub fn coinvariant_hilbert(r: usize) -> Vec<u64> {
    if r == 0 {
        return vec![1];
    }
    let gens = (1..=r).map(|d| elementary(d, r, r).expect("d <= r")).collect();
    let q = buchberger(&Ideal::new(gens, MonomialOrder::NegLex).expect("nonzero generators"));
    hilbert_series(&q).expect("coinvariant ring is finite")
}

fn multiply(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Hilbert-level comparison of `R_{n,k}^{(r)}` against `R_r ⊗ ε_r R_{n,k}`.
///
/// `q_r` must be the quotient for `p` and `q_0` the one for `(n, k, 0)`.
pub fn tensor_conjecture_probe(
    p: &Parameters,
    q_r: &GroebnerQuotient,
    q_0: &GroebnerQuotient,
) -> Result<TensorProbeReport> {
    let (n, r) = (p.n(), p.r());
    let lhs = hilbert_series(q_r)?;
    let coinvariant_r = coinvariant_hilbert(r);

    // ε_r projection: average of sign(w) · trace(w × id) over S_r
    let mut table = CharacterTable::new(q_0, r);
    let mut signed: Vec<i64> = Vec::new();
    let mut order = 0i64;
    for w in Permutation::all(r) {
        let t = table.trace(&w, &Permutation::identity(n - r))?;
        if signed.len() < t.len() {
            signed.resize(t.len(), 0);
        }
        for (d, v) in t.iter().enumerate() {
            signed[d] += w.sign() * v;
        }
        order += 1;
    }
    let mut sign_component = Vec::with_capacity(signed.len());
    for v in signed {
        if v % order != 0 || v < 0 {
            return Err(domain(format!("signed trace {} is not a multiple of {}", v, order)));
        }
        sign_component.push((v / order) as u64);
    }
    let sign_component = trim(sign_component);
    let rhs = trim(multiply(&coinvariant_r, &sign_component));
    let shift = r * r.saturating_sub(1) / 2;
    let mut shifted = vec![0u64; shift];
    shifted.extend(lhs.iter().copied());
    Ok(TensorProbeReport {
        params: *p,
        label: "conjecture evidence (Hilbert series only)",
        equal: lhs == rhs,
        equal_after_shift: trim(shifted) == rhs,
        lhs,
        coinvariant_r,
        sign_component,
        rhs,
        shift,
    })
}
