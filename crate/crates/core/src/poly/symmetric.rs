use num_traits::One;

use super::monomial::{Exponent, Monomial};
use super::polynomial::{Coeff, Polynomial};
use crate::error::{domain, Result};

fn check_ranges(m: usize, nvars: usize) -> Result<()> {
    if m == 0 || m > nvars {
        return Err(domain(format!(
            "need 1 <= m <= number of variables, got m={} with {} variables",
            m, nvars
        )));
    }
    Ok(())
}

/// `e_d(x_1, ..., x_m)` inside a ring with `nvars` variables.
pub fn elementary(d: usize, m: usize, nvars: usize) -> Result<Polynomial> {
    check_ranges(m, nvars)?;
    let mut p = Polynomial::zero(nvars);
    if d > m {
        return Ok(p);
    }
    let mut exps = vec![0 as Exponent; nvars];
    fn go(start: usize, left: usize, m: usize, exps: &mut Vec<Exponent>, p: &mut Polynomial) {
        if left == 0 {
            p.add_term(Monomial::new(exps.iter().copied()), Coeff::one());
            return;
        }
        for i in start..=m - left {
            exps[i] = 1;
            go(i + 1, left - 1, m, exps, p);
            exps[i] = 0;
        }
    }
    go(0, d, m, &mut exps, &mut p);
    Ok(p)
}

/// `h_d(x_1, ..., x_m)` inside a ring with `nvars` variables.
pub fn homogeneous(d: usize, m: usize, nvars: usize) -> Result<Polynomial> {
    check_ranges(m, nvars)?;
    let mut p = Polynomial::zero(nvars);
    let mut exps = vec![0 as Exponent; nvars];
    fn go(i: usize, left: usize, m: usize, exps: &mut Vec<Exponent>, p: &mut Polynomial) {
        if i == m - 1 {
            exps[i] = left as Exponent;
            p.add_term(Monomial::new(exps.iter().copied()), Coeff::one());
            exps[i] = 0;
            return;
        }
        for e in 0..=left {
            exps[i] = e as Exponent;
            go(i + 1, left - e, m, exps, p);
        }
        exps[i] = 0;
    }
    go(0, d, m, &mut exps, &mut p);
    Ok(p)
}
