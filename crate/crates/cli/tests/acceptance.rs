//! Acceptance report: one PASS/FAIL line per criterion. Criterion 12 is
//! informational and never fails the run.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rstirling::combinatorics::{
    enumerate_codes, enumerate_words, iota, max_inv, ordered_count, stirling_r, OrderedSetPartition, Parameters,
    Word,
};
use rstirling::geometry::{initial_indices, pattern_matrix};
use rstirling::rings::{
    demazure_membership, generator_identities, par_map, schubert_basis_certificate, stirling_quotient,
    tensor_conjecture_probe, verify_chevalley, verify_hilbert, verify_standard_basis,
};

/// Every ordered set partition of [n] into k blocks: restricted growth
/// strings for the set partitions, then all orderings of the blocks.
fn ordered_partitions(n: usize, k: usize) -> Vec<OrderedSetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn orderings(blocks: &[Vec<usize>], out: &mut Vec<OrderedSetPartition>) {
        let k = blocks.len();
        let mut idx: Vec<usize> = (0..k).collect();
        // Heap's algorithm
        let mut c = vec![0usize; k];
        let emit = |idx: &[usize], out: &mut Vec<OrderedSetPartition>| {
            out.push(OrderedSetPartition::new(idx.iter().map(|&j| blocks[j].clone()).collect()).unwrap());
        };
        emit(&idx, out);
        let mut i = 0;
        while i < k {
            if c[i] < i {
                if i % 2 == 0 {
                    idx.swap(0, i);
                } else {
                    idx.swap(c[i], i);
                }
                emit(&idx, out);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
    }
    fn go(pos: usize, used: usize, n: usize, k: usize, rgs: &mut Vec<usize>, out: &mut Vec<OrderedSetPartition>) {
        if n - pos < k - used {
            return;
        }
        if pos == n {
            let mut blocks = vec![Vec::new(); k];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            orderings(&blocks, out);
            return;
        }
        for b in 0..=used.min(k - 1) {
            rgs[pos] = b;
            go(pos + 1, used.max(b + 1), n, k, rgs, out);
        }
    }
    go(0, 0, n, k, &mut rgs, &mut out);
    out
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn c1_bijection() -> Outcome {
    let ps = Parameters::all_up_to(8);
    let checked: Vec<Result<usize, String>> = par_map(&ps, |p| {
        let mut count = 0;
        for c in enumerate_codes(p) {
            let s = iota(&c, p).map_err(|e| format!("{} {:?}: {}", p, c, e))?;
            if s.code_entries() != c {
                return Err(format!("{} code(iota({:?})) = {:?}", p, c, s.code_entries()));
            }
            count += 1;
        }
        for s in ordered_partitions(p.n(), p.k()) {
            if !s.is_r_stirling(p.r()) {
                continue;
            }
            let c = s.code(p).map_err(|e| format!("{} {}: {}", p, s, e))?;
            if iota(c.entries(), p).as_ref() != Ok(&s) {
                return Err(format!("{} iota(code({})) differs", p, s));
            }
            count += 1;
        }
        Ok(count)
    });
    let mut total = 0;
    for r in checked {
        match r {
            Ok(c) => total += c,
            Err(e) => return outcome(false, e),
        }
    }
    outcome(true, format!("{} triples, {} round trips", ps.len(), total))
}

fn c2_cardinality() -> Outcome {
    let ps = Parameters::all_up_to(8);
    let bad: Vec<String> = par_map(&ps, |p| {
        let op = enumerate_codes(p).len() as u128;
        let brute = ordered_partitions(p.n(), p.k())
            .iter()
            .filter(|s| s.is_r_stirling(p.r()))
            .count() as u128;
        let formula = (1..=p.k() as u128).product::<u128>() * stirling_r(p);
        let w = enumerate_words(p).len() as u128;
        (op != formula || brute != formula || w != formula || ordered_count(p) != formula)
            .then(|| format!("{}: op={} brute={} k!Stir={} W={}", p, op, brute, formula, w))
    })
    .into_iter()
    .flatten()
    .collect();
    outcome(bad.is_empty(), bad.first().cloned().unwrap_or_else(|| format!("{} triples", ps.len())))
}

fn c3_golden() -> Outcome {
    let golden = include_str!("golden/enumerate_4_3_2.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_rstirling"))
        .args(["enumerate", "--n", "4", "--k", "3", "--r", "2", "--format", "csv"])
        .output();
    match out {
        Ok(o) if o.status.success() && o.stdout == golden.as_bytes() => {
            outcome(true, format!("{} rows byte-identical", golden.lines().count() - 1))
        }
        Ok(o) => outcome(false, format!("output differs: {}", String::from_utf8_lossy(&o.stdout))),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn c4_c5_groebner() -> (Outcome, Outcome) {
    let ps = Parameters::all_up_to(6);
    let reps = par_map(&ps, |p| {
        let q = stirling_quotient(p);
        (verify_standard_basis(p, &q).unwrap(), verify_hilbert(p, &q).unwrap())
    });
    let sb_bad = reps.iter().find(|(s, _)| !s.equal).map(|(s, _)| s.params.to_string());
    let h_bad = reps.iter().find(|(_, h)| !h.equal).map(|(_, h)| h.params.to_string());
    let example = reps
        .iter()
        .find(|(_, h)| h.params == Parameters::new(4, 3, 2).unwrap())
        .map(|(_, h)| h.groebner.clone());
    let ex_ok = example.as_deref() == Some(&[1, 4, 8, 9, 6, 2][..]);
    let monomials: usize = reps.iter().map(|(s, _)| s.groebner_size).sum();
    (
        match sb_bad {
            None => outcome(true, format!("{} triples, {} standard monomials", ps.len(), monomials)),
            Some(p) => outcome(false, format!("sets differ at {}", p)),
        },
        match (h_bad, ex_ok) {
            (None, true) => outcome(true, "all n <= 6; (4,3,2): 1 + 4q + 8q^2 + 9q^3 + 6q^4 + 2q^5"),
            (Some(p), _) => outcome(false, format!("series differ at {}", p)),
            (None, false) => outcome(false, format!("(4,3,2) gave {:?}", example)),
        },
    )
}

fn c6_max_inv() -> Outcome {
    for n in 1..=8 {
        for k in 1..=n {
            let all = ordered_partitions(n, k);
            let top = all.iter().map(OrderedSetPartition::inv).max().unwrap();
            let argmax: Vec<&OrderedSetPartition> = all.iter().filter(|s| s.inv() == top).collect();
            let expected = OrderedSetPartition::max_inv_point(n, k).unwrap();
            if top != max_inv(n, k) || argmax.len() != 1 || *argmax[0] != expected {
                return outcome(false, format!("n={} k={}: max {} with {} maximizers", n, k, top, argmax.len()));
            }
        }
    }
    outcome(true, "unique maximizer for all 1 <= k <= n <= 8")
}

fn c7_identities() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for k in 1..=n {
            let rep = generator_identities(n, k).unwrap();
            if let Some(c) = rep.checks.iter().find(|c| !c.holds) {
                return outcome(false, format!("n={} k={} {} word {}", n, k, c.family, c.word));
            }
            count += rep.checks.len();
        }
    }
    outcome(true, format!("{} identities", count))
}

fn c8_demazure() -> Outcome {
    let ps = Parameters::all_up_to(6);
    let reps = par_map(&ps, |p| demazure_membership(p, &stirling_quotient(p)).unwrap());
    match reps.iter().find(|r| !r.passed()) {
        Some(r) => outcome(false, format!("{}: {:?}", r.params, r.failures.first())),
        None => outcome(true, format!("{} subsets", reps.iter().map(|r| r.subsets).sum::<usize>())),
    }
}

fn c9_zbasis() -> Outcome {
    let ps = Parameters::all_up_to(5);
    let certs = par_map(&ps, |p| schubert_basis_certificate(p, &stirling_quotient(p)).unwrap());
    match certs.iter().find(|c| !c.passed()) {
        Some(c) => outcome(false, format!("{}: {:?}", c.params, c.verdict)),
        None => outcome(true, format!("{} triples unimodular", certs.len())),
    }
}

fn c10_chevalley() -> Outcome {
    let ps = Parameters::all_up_to(5);
    let reps = par_map(&ps, |p| verify_chevalley(p, &stirling_quotient(p)).unwrap());
    match reps.iter().find(|r| !r.passed()) {
        Some(r) => outcome(false, format!("{}: stable={} {:?}", r.params, r.stable, r.mismatches.first())),
        None => outcome(
            true,
            format!("{} group elements", reps.iter().map(|r| r.group_order).sum::<usize>()),
        ),
    }
}

fn c11_pattern() -> Outcome {
    let w: Word = "242141".parse().unwrap();
    let pm = pattern_matrix(&w, 4).unwrap().render();
    let expected = "0 0 0 1 0 1\n1 * 1 0 * *\n0 0 0 0 0 0\n0 1 0 0 1 *";
    let conv = w.convexify().to_string();
    let sigma = w.sigma_perm().to_string();
    let st = "3344411".parse::<Word>().unwrap().standardize(5).unwrap().to_string();
    let checks = [
        (pm == expected, "PM(242141)"),
        (initial_indices(&w) == vec![1, 2, 4], "in(242141)"),
        (conv == "224411", "conv"),
        (sigma == "132546", "sigma"),
        (st == "364781925", "st"),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some((_, what)) => outcome(false, format!("{} mismatch", what)),
        None => outcome(true, "PM, in, conv, sigma and st match"),
    }
}

fn c12_probe() -> Outcome {
    let ps = Parameters::all_up_to(5);
    let reps = par_map(&ps, |p| {
        let q0 = stirling_quotient(&Parameters::new(p.n(), p.k(), 0).unwrap());
        tensor_conjecture_probe(p, &stirling_quotient(p), &q0).unwrap()
    });
    let literal = reps.iter().filter(|r| r.equal).count();
    let shifted = reps.iter().filter(|r| r.equal_after_shift).count();
    outcome(
        shifted == reps.len(),
        format!(
            "conjecture evidence: {}/{} equal as stated, {}/{} equal after the q^C(r,2) shift",
            literal,
            reps.len(),
            shifted,
            reps.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut gating_failed = false;
    let mut report = |id: u32, name: &str, gating: bool, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        let tag = match (o.passed, gating) {
            (true, _) => "PASS",
            (false, true) => "FAIL",
            (false, false) => "FAIL (informational)",
        };
        if gating && !o.passed {
            gating_failed = true;
        }
        println!("criterion {:>2} {:<22} {}  {} [{}]", id, name, tag, o.detail, fmt(t.elapsed()));
    };
    report(1, "bijection", true, &mut c1_bijection);
    report(2, "cardinality", true, &mut c2_cardinality);
    report(3, "worked-example-golden", true, &mut c3_golden);
    let mut groebner = None;
    report(4, "standard-basis", true, &mut || {
        let (a, b) = c4_c5_groebner();
        groebner = Some(b);
        a
    });
    report(5, "hilbert-series", true, &mut || groebner.take().unwrap());
    report(6, "max-inv", true, &mut c6_max_inv);
    report(7, "generator-identities", true, &mut c7_identities);
    report(8, "demazure", true, &mut c8_demazure);
    report(9, "z-basis-certificate", true, &mut c9_zbasis);
    report(10, "chevalley-character", true, &mut c10_chevalley);
    report(11, "pattern-matrix-golden", true, &mut c11_pattern);
    report(12, "tensor-probe", false, &mut c12_probe);
    if gating_failed {
        println!("acceptance: FAIL");
        ExitCode::FAILURE
    } else {
        println!("acceptance: PASS");
        ExitCode::SUCCESS
    }
}

fn fmt(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
