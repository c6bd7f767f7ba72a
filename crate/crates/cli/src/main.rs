mod output;
mod verify;

use std::collections::BTreeSet;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rstirling::combinatorics::{enumerate_partitions, enumerate_words, Parameters, Permutation, Word};
use rstirling::geometry::{codim, pattern_matrix};
use rstirling::poly::{demazure, elementary, homogeneous, schubert, schubert::set_cache_capacity, word_schubert, Monomial};
use rstirling::rings::{par_map, Budget, BUDGET_ENV};
use serde::Serialize;
use serde_json::json;

use output::{print_csv, print_json, print_table, Envelope, Format};
use verify::{over_budget, run_triple, CheckResult, Suite};

#[derive(Parser, Debug)]
#[command(name = "rstirling", version, about = "Ordered r-Stirling partitions, their codes and quotient rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for the randomized normal-form spot checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Entries kept in each thread's Schubert memo table.
    #[arg(long, global = true)]
    cache_capacity: Option<usize>,

    /// Omit wall-clock timings from JSON output.
    #[arg(long, global = true)]
    no_timings: bool,

    /// Raise the size budget to this n (needs --allow-large).
    #[arg(long, global = true)]
    budget: Option<usize>,

    /// Acknowledge that a raised budget may run for a long time.
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Args, Debug, Clone)]
struct Triple {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    r: usize,
}

impl Triple {
    fn params(&self) -> anyhow::Result<Parameters> {
        Parameters::new(self.n, self.k, self.r).map_err(|e| usage(e.to_string()))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List OP_{n,k}^{(r)} with codes, statistics and monomials.
    Enumerate(Triple),
    /// List W_{n,k}^{(r)} with cell codimensions.
    Words(Triple),
    /// Pattern matrix of a word.
    Pattern {
        #[arg(long)]
        word: String,
        #[arg(long)]
        k: usize,
    },
    /// Polynomial constructors.
    Poly {
        #[command(subcommand)]
        kind: PolyKind,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum PolyKind {
    Schubert {
        #[arg(long)]
        perm: String,
    },
    WordSchubert {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Demazure {
        /// Comma separated composition.
        #[arg(long)]
        gamma: String,
    },
    Elementary {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nvars: Option<usize>,
    },
    Homogeneous {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        nvars: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, required = true, num_args = 1..)]
    suite: Vec<Suite>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Every triple with n up to this value (filtered by --n/--k/--r if given).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
    Verification,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Budget(m) => write!(f, "{}", m),
            Failure::Verification => write!(f, "verification failed"),
        }
    }
}

impl std::error::Error for Failure {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    anyhow!(Failure::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = match e.downcast_ref::<Failure>() {
                Some(Failure::Verification) => 1,
                Some(Failure::Usage(_)) => 2,
                Some(Failure::Budget(_)) => 3,
                None => match e.downcast_ref::<rstirling::Error>() {
                    Some(rstirling::Error::Budget { .. }) => 3,
                    Some(rstirling::Error::Parse(_)) | Some(rstirling::Error::InvalidParameters { .. }) => 2,
                    _ => 1,
                },
            };
            if !matches!(e.downcast_ref::<Failure>(), Some(Failure::Verification)) {
                eprintln!("error: {:#}", e);
            }
            ExitCode::from(code)
        }
    }
}

fn budget(cli: &Cli) -> anyhow::Result<Budget> {
    match (cli.budget, cli.allow_large) {
        (Some(_), false) => Err(usage("--budget needs --allow-large")),
        (Some(n), true) => {
            eprintln!("warning: size budget raised to n <= {}; large cases can take a long time", n);
            Ok(Budget::uniform(n))
        }
        (None, ack) => {
            if std::env::var(BUDGET_ENV).is_ok() && !ack {
                eprintln!("note: {} is ignored without --allow-large", BUDGET_ENV);
            }
            Ok(Budget::from_env(ack)?)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    if let Some(c) = cli.cache_capacity {
        set_cache_capacity(c);
    }
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .context("configuring the worker pool")?;
    }
    let timings = !cli.no_timings;
    match &cli.command {
        Command::Enumerate(t) => enumerate(cli.format, &t.params()?, timings),
        Command::Words(t) => words(cli.format, &t.params()?, timings),
        Command::Pattern { word, k } => pattern(cli.format, word, *k, timings),
        Command::Poly { kind } => poly(cli.format, kind, timings),
        Command::Verify(args) => run_verify(cli, args, timings),
    }
}

#[derive(Serialize)]
struct PartitionRow {
    index: usize,
    partition: String,
    code: Vec<usize>,
    inv: usize,
    coinv: usize,
    monomial: String,
}

fn enumerate(format: Format, p: &Parameters, timings: bool) -> anyhow::Result<()> {
    let env = Envelope::new("enumerate", json!(p), timings);
    let rows: Vec<PartitionRow> = enumerate_partitions(p)
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let code = s.code_entries();
            PartitionRow {
                index: i + 1,
                partition: s.to_string(),
                monomial: Monomial::from_usizes(&code).to_string(),
                inv: s.inv(),
                coinv: s.coinv(),
                code,
            }
        })
        .collect();
    let header = ["index", "partition", "code", "inv", "coinv", "monomial"];
    let cells = || -> Vec<Vec<String>> {
        rows.iter()
            .map(|r| {
                let code: Vec<String> = r.code.iter().map(usize::to_string).collect();
                vec![
                    r.index.to_string(),
                    r.partition.clone(),
                    format!("({})", code.join(",")),
                    r.inv.to_string(),
                    r.coinv.to_string(),
                    r.monomial.clone(),
                ]
            })
            .collect()
    };
    match format {
        Format::Json => print_json(&env.finish(json!({ "count": rows.len(), "rows": rows }))?),
        Format::Csv => print_csv(&header, &cells()),
        Format::Text => print_table(&header, &cells()),
    }
}

fn words(format: Format, p: &Parameters, timings: bool) -> anyhow::Result<()> {
    let env = Envelope::new("words", json!(p), timings);
    let list = enumerate_words(p);
    let mut rows = Vec::with_capacity(list.len());
    for (i, w) in list.iter().enumerate() {
        let pm = pattern_matrix(w, p.k())?;
        rows.push(json!({
            "index": i + 1,
            "word": w.to_string(),
            "codim": codim(w, p)?,
            "stars": pm.star_count(),
        }));
    }
    let header = ["index", "word", "codim", "stars"];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| header.iter().map(|h| r[*h].to_string().trim_matches('"').to_string()).collect())
        .collect();
    match format {
        Format::Json => print_json(&env.finish(json!({ "count": rows.len(), "rows": rows }))?),
        Format::Csv => print_csv(&header, &cells),
        Format::Text => print_table(&header, &cells),
    }
}

fn parse_word(s: &str) -> anyhow::Result<Word> {
    s.parse().map_err(|e: rstirling::Error| usage(format!("bad word {:?}: {}", s, e)))
}

fn pattern(format: Format, word: &str, k: usize, timings: bool) -> anyhow::Result<()> {
    let w = parse_word(word)?;
    let pm = pattern_matrix(&w, k).map_err(|e| usage(e.to_string()))?;
    let env = Envelope::new("pattern", json!({ "word": word, "k": k }), timings);
    match format {
        Format::Text => {
            println!("{}", pm.render());
            Ok(())
        }
        Format::Json => print_json(&env.finish(json!({
            "matrix": pm,
            "initial_indices": w.initial_indices(),
            "stars": pm.star_count(),
        }))?),
        Format::Csv => {
            let rows: Vec<Vec<String>> = pm
                .rows()
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut v = vec![(i + 1).to_string()];
                    v.extend(r.iter().map(|e| e.symbol().to_string()));
                    v
                })
                .collect();
            let mut header = vec!["row".to_string()];
            header.extend((1..=pm.n()).map(|j| format!("c{}", j)));
            let h: Vec<&str> = header.iter().map(String::as_str).collect();
            print_csv(&h, &rows)
        }
    }
}

fn poly(format: Format, kind: &PolyKind, timings: bool) -> anyhow::Result<()> {
    let (name, input, f) = match kind {
        PolyKind::Schubert { perm } => {
            let w: Permutation = perm
                .parse()
                .map_err(|e: rstirling::Error| usage(format!("bad permutation {:?}: {}", perm, e)))?;
            ("schubert", json!({ "perm": perm }), schubert(&w))
        }
        PolyKind::WordSchubert { word, n, k } => {
            let w = parse_word(word)?;
            if w.len() != *n {
                return Err(usage(format!("word {} has length {}, not {}", word, w.len(), n)));
            }
            let f = word_schubert(&w, *k).map_err(|e| usage(e.to_string()))?;
            ("word-schubert", json!({ "word": word, "n": n, "k": k }), f)
        }
        PolyKind::Demazure { gamma } => {
            let g: Vec<usize> = gamma
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("bad composition {:?}", gamma)))?;
            ("demazure", json!({ "gamma": g }), demazure(&g))
        }
        PolyKind::Elementary { d, m, nvars } => {
            let f = elementary(*d, *m, nvars.unwrap_or(*m)).map_err(|e| usage(e.to_string()))?;
            ("elementary", json!({ "d": d, "m": m }), f)
        }
        PolyKind::Homogeneous { d, m, nvars } => {
            let f = homogeneous(*d, *m, nvars.unwrap_or(*m)).map_err(|e| usage(e.to_string()))?;
            ("homogeneous", json!({ "d": d, "m": m }), f)
        }
    };
    let text = f.to_string();
    match format {
        Format::Text => {
            println!("{}", text);
            Ok(())
        }
        Format::Json => {
            let env = Envelope::new("poly", json!({ "kind": name, "input": input }), timings);
            print_json(&env.finish(json!({ "polynomial": text, "nvars": f.nvars(), "terms": f.len() }))?)
        }
        Format::Csv => print_csv(&["kind", "polynomial"], &[vec![name.to_string(), text]]),
    }
}

fn select_triples(args: &VerifyArgs) -> anyhow::Result<Vec<Parameters>> {
    let top = match (args.max_n, args.n) {
        (Some(m), _) => m,
        (None, Some(n)) => n,
        (None, None) => return Err(usage("verify needs --n or --max-n")),
    };
    if let (Some(n), Some(k), Some(r)) = (args.n, args.k, args.r) {
        Parameters::new(n, k, r).map_err(|e| usage(e.to_string()))?;
    }
    let triples: Vec<Parameters> = Parameters::all_up_to(top)
        .into_iter()
        .filter(|p| args.n.map_or(true, |n| p.n() == n))
        .filter(|p| args.k.map_or(true, |k| p.k() == k))
        .filter(|p| args.r.map_or(true, |r| p.r() == r))
        .collect();
    if triples.is_empty() {
        return Err(usage("no valid (n, k, r) matches the selection"));
    }
    Ok(triples)
}

fn run_verify(cli: &Cli, args: &VerifyArgs, timings: bool) -> anyhow::Result<()> {
    let suites = Suite::expand(&args.suite);
    let triples = select_triples(args)?;
    let budget = budget(cli)?;
    if let Some(e) = over_budget(&suites, &triples, &budget) {
        return Err(anyhow!(Failure::Budget(format!(
            "{}; raise it with --budget N --allow-large or {}=N --allow-large",
            e, BUDGET_ENV
        ))));
    }
    let mut seen = BTreeSet::new();
    let jobs: Vec<(Parameters, bool)> = triples.iter().map(|p| (*p, seen.insert((p.n(), p.k())))).collect();
    let seed = cli.seed;
    let results: Vec<CheckResult> = par_map(&triples, |p| {
        let first = jobs.iter().find(|(q, _)| q == p).map_or(false, |(_, f)| *f);
        run_triple(p, &suites, seed, first)
    })
    .into_iter()
    .flatten()
    .collect();
    // canonical order: suite, then triple
    let mut results = results;
    results.sort_by(|a, b| (a.suite, a.params).cmp(&(b.suite, b.params)));

    let passed = results.iter().filter(|r| r.gating).all(|r| r.passed);
    let env = Envelope::new(
        "verify",
        json!({
            "suites": suites.iter().map(|s| s.name()).collect::<Vec<_>>(),
            "n": args.n, "k": args.k, "r": args.r, "max_n": args.max_n,
            "seed": seed,
        }),
        timings,
    );
    match cli.format {
        Format::Json => print_json(&env.finish(json!({ "passed": passed, "checks": results }))?)?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.suite.name().to_string(),
                        r.params.n().to_string(),
                        r.params.k().to_string(),
                        r.params.r().to_string(),
                        verdict(r).to_string(),
                        r.summary.clone(),
                    ]
                })
                .collect();
            print_csv(&["suite", "n", "k", "r", "verdict", "summary"], &rows)?
        }
        Format::Text => {
            for r in &results {
                println!("{:<21} {}  {:<4}  {}", r.suite.name(), r.params, verdict(r), r.summary);
            }
            println!("overall: {}", if passed { "PASS" } else { "FAIL" });
        }
    }
    if passed {
        Ok(())
    } else {
        Err(anyhow!(Failure::Verification))
    }
}

fn verdict(r: &CheckResult) -> &'static str {
    match (r.gating, r.passed) {
        (true, true) => "PASS",
        (true, false) => "FAIL",
        (false, _) => "INFO",
    }
}
