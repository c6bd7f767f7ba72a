//! The ideals `I_{n,k}^{(r)}` and the checks run against them.

mod certificate;
mod character;
mod ideal;
mod identities;
mod standard;

pub use certificate::{
    certify, determinant, schubert_basis_certificate, smith_diagonal, CertificateVerdict, DegreeBlock,
    GradedIntegerMatrix, SchubertCertificate,
};
pub use character::{
    character_trace, coinvariant_hilbert, fixed_points, ideal_is_stable, tensor_conjecture_probe, verify_chevalley,
    CharacterTable, ChevalleyReport, TensorProbeReport, TraceMismatch,
};
pub use identities::{e_generator_word, generator_identities, h_generator_word, IdentityCheck, IdentityReport};
pub use standard::{
    code_monomials, coinv_distribution, demazure_membership, expected_pure_powers, format_q_series, pure_power_exponents,
    subsets, verify_hilbert, verify_standard_basis, DemazureFailure, DemazureReport, HilbertReport, StandardBasisReport,
};
pub use ideal::{build_ideal, checked_quotient, stirling_quotient, GeneratorSummary, IdealGenerators};

use crate::combinatorics::Parameters;
use crate::error::{Error, Result};

pub const DEFAULT_GROEBNER_MAX_N: usize = 6;
pub const DEFAULT_CHARACTER_MAX_N: usize = 5;

/// Environment variable that raises both limits; honoured only together with
/// an explicit acknowledgment (see [`Budget::from_env`]).
pub const BUDGET_ENV: &str = "RSTIRLING_MAX_N";

/// Size limits on `n` for the expensive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub groebner_max_n: usize,
    pub character_max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            groebner_max_n: DEFAULT_GROEBNER_MAX_N,
            character_max_n: DEFAULT_CHARACTER_MAX_N,
        }
    }
}

impl Budget {
    /// Both limits set to `max_n`.
    pub fn uniform(max_n: usize) -> Self {
        Budget {
            groebner_max_n: max_n,
            character_max_n: max_n,
        }
    }

    pub fn unlimited() -> Self {
        Budget::uniform(usize::MAX)
    }

    /// Defaults, or `RSTIRLING_MAX_N` when `acknowledged` is set.
    pub fn from_env(acknowledged: bool) -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(v) if acknowledged => v
                .trim()
                .parse()
                .map(Budget::uniform)
                .map_err(|_| Error::Parse(format!("{}={:?} is not a number", BUDGET_ENV, v))),
            _ => Ok(Budget::default()),
        }
    }

    pub fn check_groebner(&self, p: &Parameters) -> Result<()> {
        if p.n() > self.groebner_max_n {
            return Err(Error::Budget {
                what: "Gröbner computation",
                n: p.n(),
                limit: self.groebner_max_n,
            });
        }
        Ok(())
    }

    pub fn check_character(&self, p: &Parameters) -> Result<()> {
        if p.n() > self.character_max_n {
            return Err(Error::Budget {
                what: "character computation",
                n: p.n(),
                limit: self.character_max_n,
            });
        }
        Ok(())
    }
}

/// Runs `f` on every triple in parallel; results come back in input order.
pub fn par_map<T, F>(params: &[Parameters], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Parameters) -> T + Sync + Send,
{
    use rayon::prelude::*;
    params.par_iter().map(f).collect()
}
