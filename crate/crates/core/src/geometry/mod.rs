//! Pattern matrices of words and the codimensions of their cells.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinatorics::{enumerate_words, Parameters, Word};
use crate::error::{domain, Result};
use crate::poly::word_schubert;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    One,
    Star,
}

impl Entry {
    pub fn symbol(self) -> char {
        match self {
            Entry::Zero => '0',
            Entry::One => '1',
            Entry::Star => '*',
        }
    }
}

/// The `k × n` matrix over `{0, 1, *}` describing the cell of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternMatrix {
    rows: Vec<Vec<Entry>>,
}

impl PatternMatrix {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Entry in row `i`, column `j`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn star_count(&self) -> usize {
        self.rows.iter().flatten().filter(|&&e| e == Entry::Star).count()
    }

    /// Rows of space separated `0`, `1`, `*`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PatternMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|e| e.symbol().to_string()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for PatternMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.symbol()).collect())
            .collect();
        rows.serialize(s)
    }
}

/// 1-based positions of first occurrences.
pub fn initial_indices(w: &Word) -> Vec<usize> {
    w.initial_indices()
}

/// `PM(w)` for `w ∈ [k]^n`.
pub fn pattern_matrix(w: &Word, k: usize) -> Result<PatternMatrix> {
    if w.max_letter() > k {
        return Err(domain(format!("{} is not a word over [{}]", w, k)));
    }
    let letters = w.letters();
    let n = letters.len();
    // first[i] = 1-based position of the first occurrence of letter i
    let mut first = vec![None; k + 1];
    for (j, &a) in letters.iter().enumerate() {
        first[a].get_or_insert(j + 1);
    }
    let mut rows = vec![vec![Entry::Zero; n]; k];
    for i in 1..=k {
        let Some(fi) = first[i] else {
            continue;
        };
        for j in 1..=n {
            let wj = letters[j - 1];
            let initial = first[wj] == Some(j);
            rows[i - 1][j - 1] = if wj == i {
                Entry::One
            } else if initial {
                if i < wj && fi < j {
                    Entry::Star
                } else {
                    Entry::Zero
                }
            } else if fi < first[wj].unwrap() {
                Entry::Star
            } else {
                Entry::Zero
            };
        }
    }
    Ok(PatternMatrix { rows })
}

/// Codimension of the cell `C_w` in `X_{n,k}^{(r)}`: the degree of `𝔖_w`.
pub fn codim(w: &Word, p: &Parameters) -> Result<usize> {
    if !w.is_member(p) {
        return Err(domain(format!("{} is not in W for {}", w, p)));
    }
    Ok(word_schubert(w, p.k())?.degree().unwrap_or(0))
}

/// `Σ_{w ∈ W} q^{codim(w)}` as a coefficient list.
pub fn codim_distribution(p: &Parameters) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for w in enumerate_words(p) {
        let d = codim(&w, p)?;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += 1;
    }
    Ok(out)
}
