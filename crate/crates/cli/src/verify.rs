use std::collections::BTreeSet;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rstirling::combinatorics::Parameters;
use rstirling::groebner::GroebnerQuotient;
use rstirling::poly::{Monomial, Polynomial};
use rstirling::rings::{
    demazure_membership, format_q_series, generator_identities, schubert_basis_certificate, stirling_quotient,
    tensor_conjecture_probe, verify_chevalley, verify_hilbert, verify_standard_basis, Budget,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    StandardBasis,
    Hilbert,
    SchubertZbasis,
    Demazure,
    Chevalley,
    GeneratorIdentities,
    ConjectureProbe,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 7] = [
        Suite::StandardBasis,
        Suite::Hilbert,
        Suite::SchubertZbasis,
        Suite::Demazure,
        Suite::Chevalley,
        Suite::GeneratorIdentities,
        Suite::ConjectureProbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::StandardBasis => "standard-basis",
            Suite::Hilbert => "hilbert",
            Suite::SchubertZbasis => "schubert-zbasis",
            Suite::Demazure => "demazure",
            Suite::Chevalley => "chevalley",
            Suite::GeneratorIdentities => "generator-identities",
            Suite::ConjectureProbe => "conjecture-probe",
            Suite::All => "all",
        }
    }

    /// The probe is reported but never decides the exit code.
    pub fn gating(self) -> bool {
        self != Suite::ConjectureProbe
    }

    fn uses_characters(self) -> bool {
        matches!(self, Suite::Chevalley | Suite::ConjectureProbe)
    }

    pub fn expand(list: &[Suite]) -> Vec<Suite> {
        let set: BTreeSet<Suite> = list
            .iter()
            .flat_map(|&s| if s == Suite::All { Suite::CONCRETE.to_vec() } else { vec![s] })
            .collect();
        set.into_iter().collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub params: Parameters,
    pub gating: bool,
    pub passed: bool,
    pub summary: String,
    pub detail: Value,
}

/// First triple that a suite may not run under `budget`.
pub fn over_budget(suites: &[Suite], triples: &[Parameters], budget: &Budget) -> Option<rstirling::Error> {
    for s in suites {
        for p in triples {
            let check = if s.uses_characters() {
                budget.check_character(p)
            } else {
                budget.check_groebner(p)
            };
            if let Err(e) = check {
                return Some(e);
            }
        }
    }
    None
}

/// Normal-form sanity checks on seeded random polynomials.
fn random_nf_checks(q: &GroebnerQuotient, seed: u64, p: &Parameters) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((p.n() * 10_000 + p.k() * 100 + p.r()) as u64));
    let n = q.nvars();
    let random_poly = |rng: &mut ChaCha8Rng| {
        let terms = (0..rng.gen_range(1..6)).map(|_| {
            let exps: Vec<usize> = (0..n).map(|_| rng.gen_range(0..p.k() + 1)).collect();
            let c = BigRational::from_integer(BigInt::from(rng.gen_range(-5i64..6)));
            (Monomial::from_usizes(&exps), c)
        });
        Polynomial::from_terms(n, terms.collect::<Vec<_>>())
    };
    for _ in 0..4 {
        let f = random_poly(&mut rng);
        let g = random_poly(&mut rng);
        let nf = |h: &Polynomial| q.normal_form(h);
        if nf(&nf(&f)) != nf(&f) {
            return Err(format!("NF not idempotent on {}", f));
        }
        if nf(&(&f + &g)) != &nf(&f) + &nf(&g) {
            return Err(format!("NF not additive on {} and {}", f, g));
        }
        if nf(&(&f * &g)) != nf(&(&nf(&f) * &nf(&g))) {
            return Err(format!("NF not multiplicative on {} and {}", f, g));
        }
    }
    Ok(())
}

fn result(suite: Suite, p: &Parameters, passed: bool, summary: String, detail: impl Serialize) -> CheckResult {
    CheckResult {
        suite,
        params: *p,
        gating: suite.gating(),
        passed,
        summary,
        detail: serde_json::to_value(detail).unwrap_or(Value::Null),
    }
}

fn err_result(suite: Suite, p: &Parameters, e: impl std::fmt::Display) -> CheckResult {
    result(suite, p, false, format!("error: {}", e), json!({ "error": e.to_string() }))
}

/// Runs the suites for one triple. Generator identities depend on `(n, k)`
/// only; the caller sets `identities` on one triple per pair.
pub fn run_triple(p: &Parameters, suites: &[Suite], seed: u64, identities: bool) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let q = stirling_quotient(p);
    for &s in suites {
        let r = match s {
            Suite::StandardBasis => match verify_standard_basis(p, &q) {
                Ok(rep) => {
                    let nf = random_nf_checks(&q, seed, p);
                    let passed = rep.equal && nf.is_ok();
                    let summary = match &nf {
                        Err(e) => e.clone(),
                        Ok(()) if rep.equal => format!("{} standard monomials", rep.groebner_size),
                        Ok(()) => format!(
                            "sets differ: {} only in Gröbner, {} only from codes",
                            rep.only_groebner.len(),
                            rep.only_codes.len()
                        ),
                    };
                    result(s, p, passed, summary, rep)
                }
                Err(e) => err_result(s, p, e),
            },
            Suite::Hilbert => match verify_hilbert(p, &q) {
                Ok(rep) => {
                    let summary = if rep.equal {
                        rep.series.clone()
                    } else {
                        format!("{} vs {}", rep.series, format_q_series(&rep.coinversions))
                    };
                    result(s, p, rep.equal, summary, rep)
                }
                Err(e) => err_result(s, p, e),
            },
            Suite::SchubertZbasis => match schubert_basis_certificate(p, &q) {
                Ok(cert) => {
                    let blocks: Vec<Value> = cert
                        .matrix
                        .iter()
                        .flat_map(|m| &m.blocks)
                        .map(|b| {
                            json!({
                                "degree": b.degree,
                                "size": b.rows.len(),
                                "determinant": b.determinant.to_string(),
                            })
                        })
                        .collect();
                    let summary = format!("{} words, {:?}", cert.words, cert.verdict);
                    let detail = json!({ "words": cert.words, "verdict": cert.verdict, "blocks": blocks });
                    result(s, p, cert.passed(), summary, detail)
                }
                Err(e) => err_result(s, p, e),
            },
            Suite::Demazure => match demazure_membership(p, &q) {
                Ok(rep) => result(
                    s,
                    p,
                    rep.passed(),
                    format!("{} subsets, {} failures", rep.subsets, rep.failures.len()),
                    rep,
                ),
                Err(e) => err_result(s, p, e),
            },
            Suite::Chevalley => match verify_chevalley(p, &q) {
                Ok(rep) => result(
                    s,
                    p,
                    rep.passed(),
                    format!(
                        "{} group elements, stable={}, {} mismatches",
                        rep.group_order,
                        rep.stable,
                        rep.mismatches.len()
                    ),
                    rep,
                ),
                Err(e) => err_result(s, p, e),
            },
            Suite::GeneratorIdentities => {
                if !identities {
                    continue;
                }
                match generator_identities(p.n(), p.k()) {
                    Ok(rep) => result(
                        s,
                        p,
                        rep.passed(),
                        format!("{} identities", rep.checks.len()),
                        rep,
                    ),
                    Err(e) => err_result(s, p, e),
                }
            }
            Suite::ConjectureProbe => {
                let base = Parameters::new(p.n(), p.k(), 0).expect("r = 0 is valid");
                let q0 = if p.r() == 0 { q.clone() } else { stirling_quotient(&base) };
                match tensor_conjecture_probe(p, &q, &q0) {
                    Ok(rep) => result(
                        s,
                        p,
                        rep.equal_after_shift,
                        format!(
                            "conjecture evidence: equal={}, equal after q^{} shift={}",
                            rep.equal, rep.shift, rep.equal_after_shift
                        ),
                        rep,
                    ),
                    Err(e) => err_result(s, p, e),
                }
            }
            Suite::All => continue,
        };
        out.push(r);
    }
    out
}
