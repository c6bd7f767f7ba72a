use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::combinatorics::{enumerate_words, Parameters, Word};
use crate::error::Result;
use crate::groebner::GroebnerQuotient;
use crate::poly::{integer_value, word_schubert, Polynomial};

/// One square block of a graded change of basis: rows are words, columns are
/// standard monomials of the same degree.
#[derive(Debug, Clone, Serialize)]
pub struct DegreeBlock {
    pub degree: usize,
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    #[serde(serialize_with = "ser_matrix")]
    pub entries: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "ser_int")]
    pub determinant: BigInt,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedIntegerMatrix {
    pub blocks: Vec<DegreeBlock>,
}

impl GradedIntegerMatrix {
    pub fn is_unimodular(&self) -> bool {
        self.blocks.iter().all(|b| b.determinant.abs().is_one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CertificateVerdict {
    Unimodular,
    NonInteger { word: String, coefficient: String },
    NotSquare { degree: usize, words: usize, monomials: usize },
    NotUnimodular { degree: usize, determinant: String, smith_diagonal: Vec<String> },
}

#[derive(Debug, Clone, Serialize)]
pub struct SchubertCertificate {
    pub params: Parameters,
    pub words: usize,
    pub verdict: CertificateVerdict,
    pub matrix: Option<GradedIntegerMatrix>,
}

impl SchubertCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == CertificateVerdict::Unimodular
    }
}

/// Expands `NF(𝔖_w)` for every `w ∈ W_{n,k}^{(r)}` in the standard monomial
/// basis and checks that each degree block is an integer matrix of
/// determinant ±1.
pub fn schubert_basis_certificate(p: &Parameters, q: &GroebnerQuotient) -> Result<SchubertCertificate> {
    let words = enumerate_words(p);
    let polys = words
        .iter()
        .map(|w| word_schubert(w, p.k()))
        .collect::<Result<Vec<_>>>()?;
    certify(p, q, &words, &polys)
}

/// The certificate for an arbitrary family indexed by `words`.
pub fn certify(
    p: &Parameters,
    q: &GroebnerQuotient,
    words: &[Word],
    polys: &[Polynomial],
) -> Result<SchubertCertificate> {
    let standard = q.standard_monomials()?;
    let done = |verdict, matrix| SchubertCertificate {
        params: *p,
        words: words.len(),
        verdict,
        matrix,
    };

    let mut col_blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, m) in standard.iter().enumerate() {
        col_blocks.entry(m.degree()).or_default().push(i);
    }
    let mut row_blocks: BTreeMap<usize, Vec<(usize, Vec<(usize, BigInt)>)>> = BTreeMap::new();
    for (idx, (w, f)) in words.iter().zip(polys).enumerate() {
        let mut coords = Vec::new();
        for (j, c) in q.coordinates(f)? {
            match integer_value(&c) {
                Ok(v) => coords.push((j, v)),
                Err(_) => {
                    return Ok(done(
                        CertificateVerdict::NonInteger {
                            word: w.to_string(),
                            coefficient: c.to_string(),
                        },
                        None,
                    ))
                }
            }
        }
        let d = f.degree().unwrap_or(0);
        row_blocks.entry(d).or_default().push((idx, coords));
    }

    let degrees: Vec<usize> = col_blocks.keys().chain(row_blocks.keys()).copied().collect();
    let mut blocks = Vec::new();
    let mut failure = None;
    for d in degrees.into_iter().collect::<std::collections::BTreeSet<_>>() {
        let cols = col_blocks.get(&d).cloned().unwrap_or_default();
        let rows = row_blocks.remove(&d).unwrap_or_default();
        if cols.len() != rows.len() {
            return Ok(done(
                CertificateVerdict::NotSquare {
                    degree: d,
                    words: rows.len(),
                    monomials: cols.len(),
                },
                None,
            ));
        }
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(a, &b)| (b, a)).collect();
        let mut entries = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
        for (ri, (_, coords)) in rows.iter().enumerate() {
            for (j, v) in coords {
                // NF of a homogeneous element stays in its degree.
                entries[ri][pos[j]] = v.clone();
            }
        }
        let det = determinant(&entries);
        if failure.is_none() && !det.abs().is_one() {
            failure = Some(CertificateVerdict::NotUnimodular {
                degree: d,
                determinant: det.to_string(),
                smith_diagonal: smith_diagonal(&entries).iter().map(|x| x.to_string()).collect(),
            });
        }
        blocks.push(DegreeBlock {
            degree: d,
            rows: rows.iter().map(|(i, _)| words[*i].to_string()).collect(),
            columns: cols.iter().map(|&j| standard[j].to_string()).collect(),
            entries,
            determinant: det,
        });
    }
    let matrix = GradedIntegerMatrix { blocks };
    Ok(done(failure.unwrap_or(CertificateVerdict::Unimodular), Some(matrix)))
}

/// Fraction-free Gaussian elimination (Bareiss).
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Invariant factors of an integer matrix (zeros included for rank defect).
pub fn smith_diagonal(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining submatrix
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(x, y)| a[i][j].abs().cmp(&a[x][y].abs()));
        let Some((pi, pj)) = pivot else {
            diag.extend(std::iter::repeat(BigInt::zero()).take(rows.min(cols) - t));
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let qt = &a[i][t] / &a[t][t];
                if !qt.is_zero() {
                    for j in t..cols {
                        let v = &qt * &a[t][j];
                        a[i][j] -= v;
                    }
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                let qt = &a[t][j] / &a[t][t];
                if !qt.is_zero() {
                    for i in t..rows {
                        let v = &qt * &a[i][t];
                        a[i][j] -= v;
                    }
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // the pivot must divide the rest of the submatrix
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn ser_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_matrix<S: serde::Serializer>(m: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for row in m {
        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(determinant(&mat(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(determinant(&[]), BigInt::one());
    }

    #[test]
    fn word_schubert_basis_is_unimodular() {
        use crate::rings::stirling_quotient;
        for p in Parameters::all_up_to(4) {
            let cert = schubert_basis_certificate(&p, &stirling_quotient(&p)).unwrap();
            assert!(cert.passed(), "{} {:?}", p, cert.verdict);
        }
        let p = Parameters::new(3, 2, 1).unwrap();
        let cert = schubert_basis_certificate(&p, &stirling_quotient(&p)).unwrap();
        let m = cert.matrix.unwrap();
        assert_eq!(m.blocks[0].degree, 0);
        assert_eq!(m.blocks[0].entries, vec![vec![BigInt::one()]]);
        assert!(m.is_unimodular());
    }

    #[test]
    fn smith_small() {
        let d = smith_diagonal(&mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = smith_diagonal(&mat(&[&[1, 2], &[2, 4]]));
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(0)]);
    }
}
