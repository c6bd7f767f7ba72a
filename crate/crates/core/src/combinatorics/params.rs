use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated triple `r <= k <= n` with `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Parameters {
    n: usize,
    k: usize,
    r: usize,
}

impl Parameters {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self> {
        if k == 0 || r > k || k > n {
            return Err(Error::InvalidParameters { n, k, r });
        }
        Ok(Parameters { n, k, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Every valid triple with `1 <= n <= max_n`, ordered by `(n, k, r)`.
    pub fn all_up_to(max_n: usize) -> Vec<Parameters> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for k in 1..=n {
                for r in 0..=k {
                    out.push(Parameters { n, k, r });
                }
            }
        }
        out
    }
}

impl std::fmt::Display for Parameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={}, r={})", self.n, self.k, self.r)
    }
}

/// The r-Stirling number of the second kind, by the recurrence
/// `S(m, j) = j * S(m-1, j) + S(m-1, j-1)` for `m > r` with `S(r, j) = [j = r]`.
pub fn stirling_r(p: &Parameters) -> u128 {
    let (n, k, r) = (p.n, p.k, p.r);
    let mut row = vec![0u128; k + 1];
    row[r] = 1;
    for _ in r..n {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k {
            next[j] = (j as u128) * row[j] + row[j - 1];
        }
        row = next;
    }
    row[k]
}

/// `k! * Stir^{(r)}_{n,k}`, the number of ordered r-Stirling partitions.
pub fn ordered_count(p: &Parameters) -> u128 {
    (1..=p.k as u128).product::<u128>() * stirling_r(p)
}
