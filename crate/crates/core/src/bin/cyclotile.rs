use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cyclotile::tiling::{
    coset_structure_corollary, cube_rule_check, cube_rule_on_cosets, find_tiling_complement_with,
    generating_pair_witness, projection_decomposition, t1_check, t2_check, TilingOptions,
};
use cyclotile::verifier::{
    crosscheck_small, parse_budget, parse_sizes, run_campaign_with, CampaignConfig, CampaignReport, RecordStatus,
    RunOptions, Strategy, BUDGET_ENV,
};
use cyclotile::{cyclotomic_poly, find_spectrum, zero_divisor_set, Budget, CyclicMultiset, SearchOutcome};

const EXIT_DECIDED: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_FAILURE: u8 = 3;
const EXIT_INTERRUPTED: u8 = 4;

#[derive(Parser)]
#[command(name = "cyclotile", version, about = "Spectral sets and tiles of cyclic groups")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Search for a spectrum of a set.
    Spectrum {
        #[arg(long)]
        set: CyclicMultiset,
        #[arg(long, env = BUDGET_ENV, value_parser = budget_arg, default_value = "unlimited")]
        budget: Budget,
        #[arg(long)]
        json: bool,
    },
    /// Search for a tiling complement of a set.
    Tile {
        #[arg(long)]
        set: CyclicMultiset,
        #[arg(long, env = BUDGET_ENV, value_parser = budget_arg, default_value = "unlimited")]
        budget: Budget,
        /// Skip the (T1) filter and run the plain exact-cover search.
        #[arg(long)]
        no_pruning: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check the Coven–Meyerowitz conditions.
    T1t2 {
        #[arg(long)]
        set: CyclicMultiset,
        #[arg(long)]
        json: bool,
    },
    /// Cyclotomic divisor set of a set or multiset.
    Zeros {
        #[arg(long)]
        set: CyclicMultiset,
    },
    /// Print a cyclotomic polynomial.
    Cyclo {
        #[arg(long)]
        d: usize,
    },
    /// Cube-rule check, on Z_m itself or on every coset of the order-m subgroup.
    Cube {
        #[arg(long)]
        multiset: CyclicMultiset,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Structural lemma checkers.
    Lemma {
        #[arg(long, value_enum)]
        which: Lemma,
        #[arg(long)]
        set: CyclicMultiset,
        /// cube-coset: the prime playing p.
        #[arg(long)]
        p: Option<usize>,
        /// proj: the modulus m.
        #[arg(long)]
        m: Option<usize>,
        /// proj: the prime r.
        #[arg(long)]
        r: Option<usize>,
        /// genpair: the two primes.
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        y: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate and verify the spectral sets of Z_n.
    Campaign {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = strategy_arg, default_value = "clique")]
        strategy: Strategy,
        /// Sizes such as `1-12` or `4,6`.
        #[arg(long)]
        sizes: Option<String>,
        #[arg(long, env = BUDGET_ENV, value_parser = budget_arg, default_value = "unlimited")]
        budget: Budget,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write the full report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the per-size summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Where to dump re-verification data if a counterexample is found.
        #[arg(long, default_value = "cyclotile-failure.json")]
        bundle: PathBuf,
        #[arg(long, hide = true)]
        stop_after_units: Option<usize>,
    },
    /// Exhaustive spectral-versus-tile comparison on small groups.
    Crosscheck {
        /// Comma-separated orders, each at most 30.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Lemma {
    CubeCoset,
    Proj,
    Genpair,
}

fn budget_arg(s: &str) -> Result<Budget, String> {
    parse_budget(s).map_err(|e| e.to_string())
}

fn strategy_arg(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: cyclotile::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_DECIDED };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let interrupted = e
                .downcast_ref::<cyclotile::Error>()
                .is_some_and(|e| matches!(e, cyclotile::Error::Interrupted));
            ExitCode::from(if interrupted { EXIT_INTERRUPTED } else { EXIT_USAGE })
        }
    }
}

fn print_json(v: &serde_json::Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn outcome_code<T>(o: &SearchOutcome<T>) -> u8 {
    if o.is_exhausted() {
        EXIT_BUDGET
    } else {
        EXIT_DECIDED
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Spectrum { set, budget, json } => {
            let r = find_spectrum(&set, budget)?;
            let zero = zero_divisor_set(&set)?;
            let spectral = match r.outcome.decided() {
                Some(b) => json!(b),
                None => json!("unknown"),
            };
            let lambda = r.outcome.found().map(|c| c.spectrum.to_string());
            if json {
                print_json(&json!({
                    "n": set.n(),
                    "S": set.to_string(),
                    "spectral": spectral,
                    "lambda": lambda,
                    "zero_set": zero,
                    "nodes_visited": r.nodes,
                    "exhaustive": !r.outcome.is_exhausted(),
                }))?;
            } else {
                println!("S         {set}");
                println!("zero set  {:?}", zero.members());
                match &r.outcome {
                    SearchOutcome::Found(c) => println!("spectral  yes, spectrum {}", c.spectrum),
                    SearchOutcome::NotFound => println!("spectral  no"),
                    SearchOutcome::BudgetExhausted => println!("spectral  unknown (budget exhausted)"),
                }
                println!("nodes     {}", r.nodes);
            }
            Ok(outcome_code(&r.outcome))
        }
        Cmd::Tile {
            set,
            budget,
            no_pruning,
            json,
        } => {
            let opts = TilingOptions {
                cyclotomic_pruning: !no_pruning,
            };
            let r = find_tiling_complement_with(&set, budget, opts)?;
            if json {
                let tile = match r.outcome.decided() {
                    Some(b) => json!(b),
                    None => json!("unknown"),
                };
                print_json(&json!({
                    "n": set.n(),
                    "S": set.to_string(),
                    "tile": tile,
                    "complement": r.outcome.found().map(|c| c.complement.to_string()),
                    "nodes_visited": r.nodes,
                    "exhaustive": !r.outcome.is_exhausted(),
                }))?;
            } else {
                match &r.outcome {
                    SearchOutcome::Found(c) => println!("tiles with complement {}", c.complement),
                    SearchOutcome::NotFound => println!("does not tile"),
                    SearchOutcome::BudgetExhausted => println!("unknown (budget exhausted)"),
                }
                println!("nodes {}", r.nodes);
            }
            Ok(outcome_code(&r.outcome))
        }
        Cmd::T1t2 { set, json } => {
            let t1 = t1_check(&set)?;
            let t2 = t2_check(&set)?;
            if json {
                print_json(&json!({
                    "n": set.n(),
                    "S": set.to_string(),
                    "t1": t1.holds,
                    "h_s": t1.h_s,
                    "product": t1.product,
                    "t2": t2,
                }))?;
            } else {
                println!(
                    "H_S {:?}, product {} vs |S| = {}",
                    t1.h_s.members(),
                    t1.product,
                    set.total()
                );
                println!("T1 {}", t1.holds);
                println!("T2 {t2}");
            }
            Ok(EXIT_DECIDED)
        }
        Cmd::Zeros { set } => {
            println!("{:?}", zero_divisor_set(&set)?.members());
            Ok(EXIT_DECIDED)
        }
        Cmd::Cyclo { d } => {
            println!("{}", cyclotomic_poly(d)?);
            Ok(EXIT_DECIDED)
        }
        Cmd::Cube { multiset, m, json } => {
            if m == multiset.n() {
                let r = cube_rule_check(&multiset)?;
                if json {
                    print_json(&serde_json::to_value(&r)?)?;
                } else {
                    println!("cube rule {} ({} cuboids)", r.holds, r.cuboids_checked);
                    if let Some(c) = &r.counterexample {
                        println!("counterexample pairs {:?}", c.pairs);
                    }
                }
            } else {
                let holds = cube_rule_on_cosets(&multiset, m)?;
                if json {
                    print_json(&json!({ "m": m, "holds_on_every_coset": holds }))?;
                } else {
                    println!("cube rule on every Z_{m}-coset: {holds}");
                }
            }
            Ok(EXIT_DECIDED)
        }
        Cmd::Lemma {
            which,
            set,
            p,
            m,
            r,
            x,
            y,
            json,
        } => {
            let need = |v: Option<usize>, name: &str| v.with_context(|| format!("--{name} is required"));
            let value = match which {
                Lemma::CubeCoset => serde_json::to_value(coset_structure_corollary(&set, need(p, "p")?)?)?,
                Lemma::Proj => serde_json::to_value(projection_decomposition(&set, need(m, "m")?, need(r, "r")?)?)?,
                Lemma::Genpair => {
                    let w = generating_pair_witness(&set, need(x, "x")?, need(y, "y")?)?;
                    json!({ "witness": w })
                }
            };
            if json {
                print_json(&value)?;
            } else {
                println!("{value}");
            }
            Ok(EXIT_DECIDED)
        }
        Cmd::Campaign {
            n,
            strategy,
            sizes,
            budget,
            workers,
            seed,
            checkpoint,
            json,
            csv,
            bundle,
            stop_after_units,
        } => {
            let mut cfg = CampaignConfig::new(n, strategy)
                .with_budget(budget)
                .with_workers(workers)
                .with_seed(seed);
            if let Some(s) = sizes {
                cfg = cfg.with_sizes(parse_sizes(&s)?);
            }
            let opts = RunOptions {
                checkpoint,
                stop_after_units,
                ..RunOptions::default()
            };
            let report = run_campaign_with(&cfg, &opts)?;
            if let Some(path) = json {
                fs::write(&path, report.to_json()?).with_context(|| format!("writing {}", path.display()))?;
            }
            if let Some(path) = csv {
                report.write_csv(fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?)?;
            }
            print_summary(&report);
            if report.has_failures() {
                write_bundle(&report, &bundle)?;
                eprintln!(
                    "FAILURE: spectral set without a tiling complement; bundle written to {}",
                    bundle.display()
                );
                return Ok(EXIT_FAILURE);
            }
            Ok(if report.summary.sizes_budget_limited.is_empty() {
                EXIT_DECIDED
            } else {
                EXIT_BUDGET
            })
        }
        Cmd::Crosscheck { n, workers, json } => {
            if let Some(&bad) = n.iter().find(|&&k| k > 30) {
                bail!("crosscheck is limited to n <= 30, got {bad}");
            }
            let r = crosscheck_small(&n, workers)?;
            if json {
                print_json(&serde_json::to_value(&r)?)?;
            } else {
                for e in &r.entries {
                    println!(
                        "n={:<3} classes {:>8}  spectral {:>6}  tiles {:>6}  mismatches {}  {}",
                        e.n,
                        e.classes,
                        e.spectral,
                        e.tiles,
                        e.mismatches.len(),
                        if e.agrees() { "ok" } else { "MISMATCH" }
                    );
                    for m in &e.mismatches {
                        println!("    {m}");
                    }
                }
            }
            Ok(if r.holds() { EXIT_DECIDED } else { EXIT_FAILURE })
        }
    }
}

fn print_summary(report: &CampaignReport) {
    let s = &report.summary;
    println!(
        "n = {}, {} strategy: {} classes examined, {} spectral, {} nodes in {:.1}s",
        report.config.n,
        report.config.strategy,
        s.classes_examined,
        s.spectral_classes,
        s.nodes_total,
        report.execution.wall_seconds
    );
    println!("exhaustive sizes     {:?}", s.sizes_exhaustive);
    println!("budget-limited sizes {:?}", s.sizes_budget_limited);
    let t = &s.tallies;
    println!(
        "failures {}  duality {}  certificates {}  T1 {}  T1T2-without-tile {}  structure {}",
        t.failures,
        t.duality_violations,
        t.certificate_errors,
        t.t1_violations,
        t.t1t2_without_tile,
        s.structure_violations
    );
    if report.config.strategy == Strategy::ExhaustiveSubsets {
        println!("tiles without spectrum {}", t.converse_mismatches);
    }
}

/// Everything needed to re-check each failure by hand.
fn write_bundle(report: &CampaignReport, path: &PathBuf) -> Result<()> {
    let failures: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.status == RecordStatus::Failure)
        .map(|r| {
            json!({
                "set": r.set,
                "spectrum": r.spectrum,
                "zero_set": r.zero_set,
                "t1": r.t1,
                "t2": r.t2,
                "transcript": r.failure,
                "recheck": [
                    format!("cyclotile spectrum --set \"{}\"", r.set),
                    format!("cyclotile tile --no-pruning --set \"{}\"", r.set),
                ],
            })
        })
        .collect();
    let bundle = json!({
        "config": report.config,
        "failures": failures,
    });
    fs::write(path, serde_json::to_string_pretty(&bundle)? + "\n")?;
    Ok(())
}
