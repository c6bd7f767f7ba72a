use serde::Serialize;

use crate::combinatorics::Word;
use crate::error::{domain, Result};
use crate::poly::{elementary, homogeneous, word_schubert, Polynomial};

/// `w^i`: the letters of `[k] \ {i}` in increasing order, then the largest of
/// them repeated up to length `n`. Needs `k >= 2`.
pub fn e_generator_word(i: usize, n: usize, k: usize) -> Result<Word> {
    if k < 2 || i == 0 || i > k || k > n {
        return Err(domain(format!("w^{} needs 1 <= i <= k, 2 <= k <= n", i)));
    }
    let mut letters: Vec<usize> = (1..=k).filter(|&a| a != i).collect();
    let top = *letters.last().unwrap();
    letters.resize(n, top);
    Word::new(letters)
}

/// `v^i = 1 2 ... i i (i+1) ... k k ... k` of length `n`. Needs `k < n`.
pub fn h_generator_word(i: usize, n: usize, k: usize) -> Result<Word> {
    if i == 0 || i >= k || k >= n {
        return Err(domain(format!("v^{} needs 1 <= i < k < n", i)));
    }
    let mut letters: Vec<usize> = (1..=i).collect();
    letters.extend(i..=k);
    letters.resize(n, k);
    Word::new(letters)
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub family: &'static str,
    pub i: usize,
    pub word: String,
    pub expected: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub k: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// `𝔖_{w^i} = e_{n-i+1}(x_n)` for `1 <= i <= k`, and
/// `𝔖_{v^i} = h_{k-i}(x_{i+1})` for `1 <= i <= k-1` when `k < n`.
pub fn generator_identities(n: usize, k: usize) -> Result<IdentityReport> {
    let mut checks = Vec::new();
    let mut push = |family, i, w: Word, expected: Polynomial| -> Result<()> {
        let got = word_schubert(&w, k)?;
        checks.push(IdentityCheck {
            family,
            i,
            word: w.to_string(),
            expected: expected.to_string(),
            holds: got == expected,
        });
        Ok(())
    };
    if k >= 2 {
        for i in 1..=k {
            push("e", i, e_generator_word(i, n, k)?, elementary(n - i + 1, n, n)?)?;
        }
    }
    if k < n {
        for i in 1..k {
            push("h", i, h_generator_word(i, n, k)?, homogeneous(k - i, i + 1, n)?)?;
        }
    }
    Ok(IdentityReport { n, k, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_words() {
        assert_eq!(e_generator_word(3, 7, 5).unwrap().to_string(), "1245555");
        assert_eq!(h_generator_word(3, 7, 5).unwrap().to_string(), "1233455");
        assert!(h_generator_word(1, 3, 3).is_err());
        assert!(e_generator_word(1, 3, 1).is_err());
    }

    #[test]
    fn identities_up_to_five() {
        for n in 1..=5 {
            for k in 1..=n {
                let rep = generator_identities(n, k).unwrap();
                assert!(rep.passed(), "{:?}", rep);
            }
        }
    }
}
