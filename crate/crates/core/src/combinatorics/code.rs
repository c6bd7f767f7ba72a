use std::fmt;

use serde::Serialize;

use super::params::Parameters;
use super::partition::OrderedSetPartition;
use crate::error::{domain, Error, Result};

/// Which of the three characterizing conditions a candidate code breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum CodeViolation {
    WrongLength { expected: usize, found: usize },
    /// `c_i < k` fails for some `i > r`.
    BlockBound { position: usize, value: usize, bound: usize },
    /// `c_i < k - i + 1` fails for some `i <= r`.
    StirlingBound { position: usize, value: usize, bound: usize },
    /// `γ(S)* <= c` holds for this `S` of size `n - k + 1`.
    SkipDominated { subset: Vec<usize> },
}

impl fmt::Display for CodeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeViolation::WrongLength { expected, found } => {
                write!(f, "length {} but expected {}", found, expected)
            }
            CodeViolation::BlockBound { position, value, bound } => write!(
                f,
                "condition c_i < k fails at i={}: c_i={} >= {}",
                position, value, bound
            ),
            CodeViolation::StirlingBound { position, value, bound } => write!(
                f,
                "condition c_i < k-i+1 fails at i={}: c_i={} >= {}",
                position, value, bound
            ),
            CodeViolation::SkipDominated { subset } => {
                write!(f, "reverse skip composition of S={:?} is dominated", subset)
            }
        }
    }
}

/// A length-`n` sequence satisfying all three conditions for its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoinversionCode {
    entries: Vec<usize>,
    params: Parameters,
}

impl CoinversionCode {
    pub fn new(entries: Vec<usize>, params: Parameters) -> Result<Self> {
        validate_code(&entries, &params).map_err(Error::InvalidCode)?;
        Ok(CoinversionCode { entries, params })
    }

    pub(crate) fn from_trusted(entries: Vec<usize>, params: Parameters) -> Self {
        debug_assert!(is_valid_code(&entries, &params));
        CoinversionCode { entries, params }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn to_partition(&self) -> OrderedSetPartition {
        insert_by_labels(&self.entries, self.params.k())
    }
}

impl fmt::Display for CoinversionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Skip composition: `γ(S)_i = i - j + 1` when `i` is the `j`-th smallest
/// element of `S`, and `0` otherwise.
pub fn skip_composition(subset: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut gamma = vec![0; n];
    for (j, &s) in sorted.iter().enumerate() {
        if s == 0 || s > n {
            return Err(domain(format!("{} is outside [1, {}]", s, n)));
        }
        gamma[s - 1] = s - j;
    }
    Ok(gamma)
}

/// `γ(S)*`, the reversal of the skip composition.
pub fn reverse_skip(subset: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut g = skip_composition(subset, n)?;
    g.reverse();
    Ok(g)
}

/// Checks the three conditions; on failure names the condition and, for the
/// skip condition, a witnessing subset.
///
/// The skip condition asks for `t_1 < ... < t_m` (`m = n - k + 1`, the
/// positions of `γ(S)*`'s support) with `c_{t_i} >= k - t_i + i`. Choosing
/// each `t_i` as early as possible finds such a chain whenever one exists.
pub fn validate_code(c: &[usize], p: &Parameters) -> std::result::Result<(), CodeViolation> {
    let (n, k, r) = (p.n(), p.k(), p.r());
    if c.len() != n {
        return Err(CodeViolation::WrongLength {
            expected: n,
            found: c.len(),
        });
    }
    for (idx, &v) in c.iter().enumerate() {
        let i = idx + 1;
        if i <= r {
            let bound = k - i + 1;
            if v >= bound {
                return Err(CodeViolation::StirlingBound {
                    position: i,
                    value: v,
                    bound,
                });
            }
        } else if v >= k {
            return Err(CodeViolation::BlockBound {
                position: i,
                value: v,
                bound: k,
            });
        }
    }
    match skip_chain(c, k, n - k + 1) {
        Some(chain) => {
            let mut subset: Vec<usize> = chain.iter().map(|&t| n - t + 1).collect();
            subset.sort_unstable();
            Err(CodeViolation::SkipDominated { subset })
        }
        None => Ok(()),
    }
}

pub fn is_valid_code(c: &[usize], p: &Parameters) -> bool {
    validate_code(c, p).is_ok()
}

/// Greedy search for positions `t_1 < ... < t_m` with `c_{t_i} + t_i >= k + i`.
fn skip_chain(c: &[usize], k: usize, m: usize) -> Option<Vec<usize>> {
    let mut chain = Vec::with_capacity(m);
    for (idx, &v) in c.iter().enumerate() {
        if chain.len() == m {
            break;
        }
        let t = idx + 1;
        if v + t >= k + chain.len() + 1 {
            chain.push(t);
        }
    }
    (chain.len() == m).then_some(chain)
}

/// Inserts `1, ..., n` in turn into the block whose coinversion label is `c_i`.
///
/// Labels: the `e` empty blocks get `0, ..., e-1` from right to left, then the
/// nonempty blocks get `e, ..., k-1` from left to right.
fn insert_by_labels(c: &[usize], k: usize) -> OrderedSetPartition {
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (idx, &label) in c.iter().enumerate() {
        let empties = blocks.iter().filter(|b| b.is_empty()).count();
        let target = if label < empties {
            // label-th empty block counted from the right
            blocks
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, b)| b.is_empty())
                .nth(label)
                .map(|(j, _)| j)
        } else {
            blocks
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_empty())
                .nth(label - empties)
                .map(|(j, _)| j)
        };
        let j = target.expect("coinversion label out of range");
        blocks[j].push(idx + 1);
    }
    OrderedSetPartition::new(blocks).expect("valid code yields a partition")
}

/// The insertion map, inverse to `code`.
pub fn iota(c: &[usize], p: &Parameters) -> Result<OrderedSetPartition> {
    validate_code(c, p).map_err(Error::InvalidCode)?;
    Ok(insert_by_labels(c, p.k()))
}

/// All valid codes in lexicographic order.
///
/// The conditions are closed under lowering entries, so a prefix extends to a
/// valid code exactly when the prefix padded with zeros is valid.
pub fn enumerate_codes(p: &Parameters) -> Vec<Vec<usize>> {
    let n = p.n();
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    fn go(pos: usize, cur: &mut Vec<usize>, p: &Parameters, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..p.k() {
            cur[pos] = v;
            if !is_valid_code(cur, p) {
                break;
            }
            go(pos + 1, cur, p, out);
        }
        cur[pos] = 0;
    }
    go(0, &mut cur, p, &mut out);
    out
}

/// `OP_{n,k}^{(r)}`, listed in lexicographic order of coinversion codes.
pub fn enumerate_partitions(p: &Parameters) -> Vec<OrderedSetPartition> {
    enumerate_codes(p)
        .iter()
        .map(|c| insert_by_labels(c, p.k()))
        .collect()
}
