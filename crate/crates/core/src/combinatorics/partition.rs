use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::code::CoinversionCode;
use super::params::Parameters;
use super::permutation::{parse_letters, Permutation};
use crate::error::{domain, Error, Result};

/// An ordered set partition `(B_1 | ... | B_k)` of `{1, ..., n}`.
///
/// Blocks are kept sorted; the block index of every letter and the minimum of
/// every block are cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    mins: Vec<usize>,
}

impl OrderedSetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut block_of = vec![usize::MAX; n];
        for (j, b) in blocks.iter_mut().enumerate() {
            if b.is_empty() {
                return Err(domain(format!("block {} is empty", j + 1)));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n {
                    return Err(domain(format!("letter {} outside 1..={}", x, n)));
                }
                if block_of[x - 1] != usize::MAX {
                    return Err(domain(format!("letter {} appears twice", x)));
                }
                block_of[x - 1] = j;
            }
        }
        let mins = blocks.iter().map(|b| b[0]).collect();
        Ok(OrderedSetPartition {
            blocks,
            block_of,
            mins,
        })
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// 0-based index of the block containing letter `i`.
    pub fn block_index(&self, i: usize) -> usize {
        self.block_of[i - 1]
    }

    pub fn is_block_min(&self, i: usize) -> bool {
        self.mins[self.block_of[i - 1]] == i
    }

    /// `1, ..., r` lie in distinct blocks.
    pub fn is_r_stirling(&self, r: usize) -> bool {
        r <= self.n() && (1..=r).all(|i| self.is_block_min(i))
    }

    /// Whether this partition lies in `OP_{n,k}^{(r)}` for `p`.
    pub fn belongs_to(&self, p: &Parameters) -> bool {
        self.n() == p.n() && self.k() == p.k() && self.is_r_stirling(p.r())
    }

    /// Pairs `i < j` with the block of `i` strictly right of the block of `j`
    /// and `i` minimal in its block.
    pub fn inv(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 1..=n {
            if !self.is_block_min(i) {
                continue;
            }
            let bi = self.block_index(i);
            count += (i + 1..=n).filter(|&j| self.block_index(j) < bi).count();
        }
        count
    }

    /// `(n-k)(k-1) + C(k,2) - inv`.
    pub fn coinv(&self) -> usize {
        max_inv(self.n(), self.k()) - self.inv()
    }

    /// The raw two-case code formula, defined for any ordered set partition.
    pub fn code_entries(&self) -> Vec<usize> {
        (1..=self.n())
            .map(|i| {
                let j = self.block_index(i);
                let later = self.mins[j + 1..].iter().filter(|&&m| m > i).count();
                if self.mins[j] == i {
                    later
                } else {
                    later + j
                }
            })
            .collect()
    }

    /// The coinversion code, for a partition in `OP_{n,k}^{(r)}`.
    pub fn code(&self, p: &Parameters) -> Result<CoinversionCode> {
        if !self.belongs_to(p) {
            return Err(domain(format!(
                "{} is not an ordered {}-Stirling partition of [{}] into {} blocks",
                self,
                p.r(),
                p.n(),
                p.k()
            )));
        }
        Ok(CoinversionCode::from_trusted(self.code_entries(), *p))
    }

    /// Letter permutation: every letter `i` becomes `u(i)`.
    pub fn act(&self, u: &Permutation) -> Result<Self> {
        if u.size() != self.n() {
            return Err(domain("permutation size differs from partition size"));
        }
        OrderedSetPartition::new(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|&i| u.apply(i)).collect())
                .collect(),
        )
    }

    /// `(k, k+1, ..., n | k-1 | ... | 1)`, the unique maximizer of `inv`.
    pub fn max_inv_point(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(domain("need 1 <= k <= n"));
        }
        let mut blocks = vec![(k..=n).collect::<Vec<_>>()];
        blocks.extend((1..k).rev().map(|i| vec![i]));
        OrderedSetPartition::new(blocks)
    }
}

pub fn max_inv(n: usize, k: usize) -> usize {
    (n - k) * (k - 1) + k * (k - 1) / 2
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.n() >= 10;
        for (j, b) in self.blocks.iter().enumerate() {
            if j > 0 {
                write!(f, "|")?;
            }
            for (t, x) in b.iter().enumerate() {
                if wide && t > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x)?;
            }
        }
        Ok(())
    }
}

impl FromStr for OrderedSetPartition {
    type Err = Error;

    /// `"25|1|34"`, or `"2,5|1|3,4"`; parentheses and spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let blocks = cleaned
            .split('|')
            .map(parse_letters)
            .collect::<Result<Vec<_>>>()?;
        OrderedSetPartition::new(blocks)
    }
}

impl Serialize for OrderedSetPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
