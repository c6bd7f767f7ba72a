//! Schubert polynomials of permutations and words.

use std::cell::RefCell;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicUsize, Ordering};

use lru::LruCache;
use num_traits::One;

use super::monomial::Monomial;
use super::operators::{divided_difference, permute_variables};
use super::polynomial::{Coeff, Polynomial};
use crate::combinatorics::{Permutation, Word};
use crate::error::{domain, Result};

pub const DEFAULT_CACHE_CAPACITY: usize = 1 << 14;

static CACHE_CAPACITY: AtomicUsize = AtomicUsize::new(DEFAULT_CACHE_CAPACITY);

/// Sets the entry budget of Schubert tables created after this call.
pub fn set_cache_capacity(entries: usize) {
    CACHE_CAPACITY.store(entries.max(1), Ordering::Relaxed);
}

/// Memo table for `𝔖_w`, keyed by one-line notation (which also fixes `m`).
pub struct SchubertTable {
    cache: LruCache<Vec<usize>, Polynomial>,
}

impl SchubertTable {
    pub fn with_capacity(entries: usize) -> Self {
        SchubertTable {
            cache: LruCache::new(NonZeroUsize::new(entries.max(1)).unwrap()),
        }
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    /// `𝔖_w` in `|w|` variables.
    ///
    /// A dominant permutation (weakly decreasing Lehmer code) has `𝔖_w = x^code`;
    /// the longest element is the extreme case. Otherwise pick the first `i`
    /// with `c_i < c_{i+1}`; then `w(i) < w(i+1)` and `𝔖_w = ∂_i 𝔖_{w s_i}`.
    pub fn get(&mut self, w: &Permutation) -> Polynomial {
        if let Some(p) = self.cache.get(w.one_line()) {
            return p.clone();
        }
        let code = w.lehmer_code();
        let result = match code.windows(2).position(|c| c[0] < c[1]) {
            None => Polynomial::monomial(Monomial::from_usizes(&code), Coeff::one()),
            Some(idx) => {
                let up = self.get(&w.swap_positions(idx + 1));
                divided_difference(idx + 1, &up).expect("index within range")
            }
        };
        self.cache.put(w.one_line().to_vec(), result.clone());
        result
    }
}

impl Default for SchubertTable {
    fn default() -> Self {
        SchubertTable::with_capacity(CACHE_CAPACITY.load(Ordering::Relaxed))
    }
}

thread_local! {
    static TABLE: RefCell<SchubertTable> = RefCell::new(SchubertTable::default());
}

/// `𝔖_w` through this thread's memo table.
pub fn schubert(w: &Permutation) -> Polynomial {
    TABLE.with(|t| t.borrow_mut().get(w))
}

/// How the pure recursion from `w_0` picks the next ascent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// `𝔖_w` by the descending recursion `𝔖_{u s_i} = ∂_i 𝔖_u` (`u(i) > u(i+1)`)
/// started at `𝔖_{w_0} = x_1^{m-1} ... x_m^0`, without memoization or
/// shortcuts. Exponential in `m`; meant for cross-checking small cases.
pub fn schubert_by_recursion(w: &Permutation, choice: AscentChoice) -> Polynomial {
    let m = w.size();
    // Climb from w to w_0 by ascents, then apply the operators in reverse.
    let mut path = Vec::new();
    let mut u = w.clone();
    loop {
        let ascents = u.ascents();
        let pick = match choice {
            AscentChoice::First => ascents.first(),
            AscentChoice::Last => ascents.last(),
        };
        match pick {
            None => break,
            Some(&i) => {
                path.push(i);
                u = u.swap_positions(i);
            }
        }
    }
    let stair: Vec<usize> = (0..m).rev().collect();
    let mut f = Polynomial::monomial(Monomial::from_usizes(&stair), Coeff::one());
    for &i in path.iter().rev() {
        f = divided_difference(i, &f).expect("index within range");
    }
    f
}

/// Convention for the variable action in the word Schubert polynomial
/// `σ(w)^{-1}.𝔖_{st(conv(w))}`.
///
/// The action used is the substitution `x_j ↦ x_{σ(w)(j)}`, i.e.
/// `permute_variables(σ(w), ·)`, which is the left action of `σ(w)^{-1}` on
/// variable indices read as positions. It is the convention under which the
/// Schubert polynomials of words outside `W_{n,k}^{(r)}` lie in the ideal.
pub fn word_schubert(w: &Word, k: usize) -> Result<Polynomial> {
    if w.max_letter() > k {
        return Err(domain(format!("{} is not a word over [{}]", w, k)));
    }
    let n = w.len();
    let conv = w.convexify();
    let st = conv.standardize(k)?;
    let base = schubert(&st);
    let sigma = w.sigma_perm();
    let moved = permute_variables(&sigma, &base);
    moved.truncated(n).map_err(|e| {
        domain(format!(
            "word Schubert polynomial of {} leaves x1..x{}: {}",
            w, n, e
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::symmetric::{elementary, homogeneous};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn base_and_identity() {
        assert_eq!(schubert(&perm("321")).to_string(), "x1^2*x2");
        for m in 1..6 {
            assert_eq!(schubert(&Permutation::identity(m)), Polynomial::one(m));
        }
    }

    #[test]
    fn s3_table() {
        // Classical S_3 Schubert polynomials.
        let expect = [
            ("123", "1"),
            ("213", "x1"),
            ("132", "x2 + x1"),
            ("231", "x1*x2"),
            ("312", "x1^2"),
            ("321", "x1^2*x2"),
        ];
        for (w, s) in expect {
            assert_eq!(schubert(&perm(w)), Polynomial::parse_in(s, 3).unwrap(), "{}", w);
        }
    }

    #[test]
    fn transition_check_1432() {
        // 𝔖_1432 = x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x2 x3 + x2^2 x3
        let expect = Polynomial::parse_in(
            "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3",
            4,
        )
        .unwrap();
        assert_eq!(schubert(&perm("1432")), expect);
    }

    #[test]
    fn memo_and_recursion_agree() {
        for m in 1..=5 {
            for w in Permutation::all(m) {
                let a = schubert(&w);
                assert_eq!(a, schubert_by_recursion(&w, AscentChoice::First), "{}", w);
                assert_eq!(a, schubert_by_recursion(&w, AscentChoice::Last), "{}", w);
                assert!(a.is_integral());
                assert_eq!(a.degree(), Some(w.length()));
            }
        }
    }

    #[test]
    fn grassmannian_elementary() {
        // 1 2 ... (i-1) (i+1) ... (n+1) i has Schubert polynomial e_{n-i+1}(x_1..x_n).
        for n in 1..=5 {
            for i in 1..=n {
                let mut v: Vec<usize> = (1..=n + 1).filter(|&a| a != i).collect();
                v.push(i);
                let s = schubert(&Permutation::new(v).unwrap());
                assert_eq!(s, elementary(n - i + 1, n, n + 1).unwrap());
            }
        }
    }

    #[test]
    fn word_schubert_of_permutation_words() {
        for w in Permutation::all(4) {
            let word = Word::new(w.one_line().to_vec()).unwrap();
            assert_eq!(word_schubert(&word, 4).unwrap(), schubert(&w));
        }
    }

    #[test]
    fn word_schubert_generator_examples() {
        // w^3 = 1245555 in [5]^7 gives e_5(x_7)
        let w: Word = "1245555".parse().unwrap();
        assert_eq!(word_schubert(&w, 5).unwrap(), elementary(5, 7, 7).unwrap());
        // v^3 in [5]^7 is 1233455 and gives h_2(x_1..x_4)
        let v: Word = "1233455".parse().unwrap();
        assert_eq!(word_schubert(&v, 5).unwrap(), homogeneous(2, 4, 7).unwrap());
    }

    #[test]
    fn small_cache_still_correct() {
        let mut t = SchubertTable::with_capacity(2);
        for w in Permutation::all(4) {
            assert_eq!(t.get(&w), schubert_by_recursion(&w, AscentChoice::First));
        }
        assert!(t.len() <= 2);
    }
}
