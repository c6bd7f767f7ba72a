use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A permutation of `{1, ..., m}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let m = one_line.len();
        let mut seen = vec![false; m + 1];
        for &v in &one_line {
            if v == 0 || v > m || seen[v] {
                return Err(domain(format!(
                    "{:?} is not a permutation of 1..={}",
                    one_line, m
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m).collect())
    }

    /// The longest element `m (m-1) ... 1`.
    pub fn longest(m: usize) -> Self {
        Permutation((1..=m).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.size() != other.size() {
            return Err(domain("composing permutations of different sizes"));
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect()))
    }

    /// `w s_i`: swap the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Lehmer code: `c_i = #{ j > i : w_j < w_i }`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.0;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect()
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        self.lehmer_code().iter().sum()
    }

    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 1-based positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] > self.0[i])
            .collect()
    }

    /// 1-based positions `i` with `w(i) < w(i+1)`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] < self.0[i])
            .collect()
    }

    /// Block-diagonal product `a × b` acting on `{1..|a|}` and `{|a|+1 ..}`.
    pub fn direct_sum(a: &Permutation, b: &Permutation) -> Self {
        let shift = a.size();
        Permutation(
            a.0.iter()
                .copied()
                .chain(b.0.iter().map(|&v| v + shift))
                .collect(),
        )
    }

    /// All of `S_m` in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_letters(s)?)
    }
}

/// Digits run together below ten, comma separated otherwise.
pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    if letters.iter().all(|&v| v < 10) {
        for v in letters {
            write!(f, "{}", v)?;
        }
    } else {
        for (i, v) in letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
    }
    Ok(())
}

/// Accepts `"242141"` or `"2,4,2,1,4,1"`.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("cannot read {:?} as a sequence of letters", s));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect()
    }
}
