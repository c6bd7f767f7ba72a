use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::params::Parameters;
use super::permutation::{parse_letters, write_letters, Permutation};
use crate::error::{domain, Error, Result};

/// A word `w_1 ... w_n` over the letters `1, 2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(domain("letters start at 1"));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Membership in `W_{n,k}^{(r)}`: length `n`, letters in `[k]`, every
    /// letter of `[k]` present, and the first `r` letters distinct.
    pub fn is_member(&self, p: &Parameters) -> bool {
        if self.len() != p.n() || self.max_letter() > p.k() {
            return false;
        }
        let mut seen = vec![false; p.k() + 1];
        for &a in &self.0 {
            seen[a] = true;
        }
        if !seen[1..].iter().all(|&s| s) {
            return false;
        }
        let head = &self.0[..p.r()];
        (0..head.len()).all(|i| !head[i + 1..].contains(&head[i]))
    }

    /// 1-based positions of first occurrences.
    pub fn initial_indices(&self) -> Vec<usize> {
        let mut seen = std::collections::HashSet::new();
        self.0
            .iter()
            .enumerate()
            .filter(|(_, a)| seen.insert(**a))
            .map(|(j, _)| j + 1)
            .collect()
    }

    /// No subword of the form `i ... j ... i` with `i != j`.
    pub fn is_convex(&self) -> bool {
        let mut closed = std::collections::HashSet::new();
        for j in 0..self.0.len() {
            if closed.contains(&self.0[j]) {
                return false;
            }
            if j + 1 < self.0.len() && self.0[j + 1] != self.0[j] {
                closed.insert(self.0[j]);
            }
        }
        true
    }

    /// Letters grouped in order of first occurrence, multiplicities preserved.
    pub fn convexify(&self) -> Word {
        let order = self.sort_order();
        Word(order.iter().map(|&j| self.0[j - 1]).collect())
    }

    /// The minimal-inversion permutation `σ` with `conv(w)_j = w_{σ(j)}`.
    pub fn sigma_perm(&self) -> Permutation {
        Permutation::new(self.sort_order()).expect("stable sort yields a permutation")
    }

    /// Positions sorted stably by the first-occurrence rank of their letter.
    fn sort_order(&self) -> Vec<usize> {
        let firsts: Vec<usize> = self.initial_indices().iter().map(|&j| self.0[j - 1]).collect();
        let rank = |a: usize| firsts.iter().position(|&b| b == a).unwrap();
        let mut positions: Vec<usize> = (1..=self.0.len()).collect();
        positions.sort_by_key(|&j| rank(self.0[j - 1]));
        positions
    }

    /// Standardization of a convex word in `[k]^n` with `m` distinct letters:
    /// initial letters stay, non-initial letters become `k+1, k+2, ...` from
    /// left to right, and the missing letters of `[k]` are appended in
    /// increasing order. The result lies in `S_{n+k-m}`.
    pub fn standardize(&self, k: usize) -> Result<Permutation> {
        if !self.is_convex() {
            return Err(domain(format!("{} is not convex", self)));
        }
        if self.max_letter() > k {
            return Err(domain(format!("{} has a letter larger than k={}", self, k)));
        }
        let initial = self.initial_indices();
        let mut next = k + 1;
        let mut out = Vec::with_capacity(self.len() + k);
        for (idx, &a) in self.0.iter().enumerate() {
            if initial.contains(&(idx + 1)) {
                out.push(a);
            } else {
                out.push(next);
                next += 1;
            }
        }
        out.extend((1..=k).filter(|a| !self.0.contains(a)));
        Permutation::new(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `W_{n,k}^{(r)}` in lexicographic order.
pub fn enumerate_words(p: &Parameters) -> Vec<Word> {
    let (n, k, r) = (p.n(), p.k(), p.r());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut counts = vec![0usize; k + 1];
    fn go(
        cur: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        missing: usize,
        p: (usize, usize, usize),
        out: &mut Vec<Word>,
    ) {
        let (n, k, r) = p;
        if cur.len() == n {
            if missing == 0 {
                out.push(Word(cur.clone()));
            }
            return;
        }
        if missing > n - cur.len() {
            return;
        }
        for a in 1..=k {
            if cur.len() < r && counts[a] > 0 {
                continue;
            }
            let fresh = counts[a] == 0;
            counts[a] += 1;
            cur.push(a);
            go(cur, counts, missing - fresh as usize, p, out);
            cur.pop();
            counts[a] -= 1;
        }
    }
    go(&mut cur, &mut counts, k, (n, k, r), &mut out);
    out
}
