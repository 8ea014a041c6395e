//! rcg: command-line front end for the real-class group toolkit.
//!
//! Exit codes: 0 success (for `verify`, no suite failed; for `scan`, no
//! counterexample under --strict), 1 failure or error, 3 for `replay` when
//! the witness does not reproduce.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use rcg_core::caps::Caps;
use rcg_core::classes::conjugacy_classes;
use rcg_core::realprops::{good_elements, has_property_t, has_property_wt, zsigmondy_l};
use rcg_core::structure::{
    center, derived_series, is_p_closed, is_p_nilpotent, is_solvable, normal_subgroups, o_p,
    o_p_prime, o_upper_p_prime,
};
use rcg_core::verify::{
    replay, run_corpus, CorpusReport, ReplayOutcome, SuiteKind, SuiteStatus, Witness,
};
use rcg_core::zoo::{build, default_corpus, parse_spec, GroupSpec};
use rcg_core::PermGroup;

#[derive(Parser)]
#[command(name = "rcg")]
#[command(about = "Permutation-group analysis of real conjugacy class sizes")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Order, degree, and generators of a group
    Info { spec: String },
    /// Conjugacy classes with sizes, orders, and realness witnesses
    Classes {
        spec: String,
        /// Only list real classes
        #[arg(long)]
        real_only: bool,
    },
    /// Check property T or WT
    Check {
        spec: String,
        #[arg(long, value_enum)]
        property: PropertyArg,
    },
    /// Structural summary: center, cores, solvability, normal subgroups
    Structure { spec: String },
    /// Good elements with their certificates
    Good { spec: String },
    /// Smallest primitive prime divisor of q^n - 1
    Zsigmondy { q: u64, n: u32 },
    /// Run verification suites over a corpus
    Verify {
        /// JSON array of group specs; defaults to the built-in corpus
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Comma-separated suites (default: lemmas,theoremA,theoremB,prop45,prop31,lemma41)
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        /// Parallel group verifications
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Omit timings so reports are byte-identical across runs
        #[arg(long)]
        no_timing: bool,
    },
    /// Scan for counterexamples to the open questions
    Scan {
        #[arg(value_enum)]
        scanner: ScannerArg,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Exit nonzero when a counterexample is found
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        no_timing: bool,
    },
    /// Re-run the failing assertion recorded in a witness file
    Replay { witness: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "WT", alias = "wt")]
    Wt,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScannerArg {
    #[value(name = "conjC")]
    ConjC,
    Navarro,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get().min(8))
        .unwrap_or(1)
}

fn build_spec(text: &str) -> Result<PermGroup> {
    let spec = parse_spec(text)?;
    Ok(build(&spec)?)
}

fn load_corpus(path: &Option<PathBuf>) -> Result<Vec<GroupSpec>> {
    match path {
        None => Ok(default_corpus()),
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("cannot read corpus file {}", p.display()))?;
            let specs: Vec<GroupSpec> = serde_json::from_str(&text)
                .with_context(|| format!("corpus file {} is not a JSON spec array", p.display()))?;
            Ok(specs)
        }
    }
}

fn parse_suites(raw: &[String]) -> Result<Vec<SuiteKind>> {
    if raw.is_empty() {
        return Ok(SuiteKind::VERIFY_DEFAULT.to_vec());
    }
    raw.iter()
        .map(|s| {
            SuiteKind::parse(s).ok_or_else(|| {
                anyhow!(
                    "unknown suite {s:?} (expected lemmas, theoremA, theoremB, prop45, prop31, lemma41)"
                )
            })
        })
        .collect()
}

fn cmd_info(spec: &str) -> Result<()> {
    let g = build_spec(spec)?;
    println!("group:      {}", g.name());
    println!("degree:     {}", g.degree());
    println!("order:      {}", g.order());
    println!("abelian:    {}", g.is_abelian());
    println!("solvable:   {}", is_solvable(&g)?);
    println!("|Z(G)|:     {}", center(&g)?.order());
    println!("generators:");
    for gen in g.generators() {
        println!("  {}", gen.cycle_string(1));
    }
    Ok(())
}

fn cmd_classes(spec: &str, real_only: bool) -> Result<()> {
    let g = build_spec(spec)?;
    let classes = conjugacy_classes(&g)?;
    println!(
        "{} classes of {} (order {})",
        classes.len(),
        g.name(),
        g.order()
    );
    for c in classes.iter() {
        if real_only && !c.is_real {
            continue;
        }
        let witness = match &c.reversing_witness {
            Some(w) => format!(" witness={}", w.cycle_string(1)),
            None => String::new(),
        };
        println!(
            "  order={:<4} size={:<8} real={}{} rep={}",
            c.element_order,
            c.size,
            if c.is_real { "yes" } else { "no " },
            witness,
            c.representative.cycle_string(1),
        );
    }
    Ok(())
}

fn cmd_check(spec: &str, property: PropertyArg) -> Result<ExitCode> {
    let g = build_spec(spec)?;
    let (label, verdict) = match property {
        PropertyArg::T => ("T", has_property_t(&g)?),
        PropertyArg::Wt => ("WT", has_property_wt(&g)?),
    };
    if verdict.holds {
        println!("{}: property {} holds", g.name(), label);
    } else {
        let v = verdict
            .violating
            .expect("violating class present on failure");
        println!(
            "{}: property {} fails (real class of order {} has size {})",
            g.name(),
            label,
            v.element_order,
            v.size
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_structure(spec: &str) -> Result<()> {
    let g = build_spec(spec)?;
    println!("group:              {}", g.name());
    println!("order:              {}", g.order());
    println!("|Z(G)|:             {}", center(&g)?.order());
    let series: Vec<u64> = derived_series(&g)?.iter().map(|h| h.order()).collect();
    println!("derived series:     {:?}", series);
    println!("solvable:           {}", is_solvable(&g)?);
    println!("|O_2(G)|:           {}", o_p(&g, 2)?.order());
    println!("|O_2'(G)|:          {}", o_p_prime(&g, 2)?.order());
    println!("|O^{{2'}}(G)|:        {}", o_upper_p_prime(&g, 2)?.order());
    println!("2-closed:           {}", is_p_closed(&g, 2)?);
    println!("2-nilpotent:        {}", is_p_nilpotent(&g, 2)?);
    match normal_subgroups(&g, Caps::default().normal_scan) {
        Ok(lattice) => {
            let orders: Vec<u64> = lattice.iter().map(|h| h.order()).collect();
            println!("normal subgroups:   {:?}", orders);
        }
        Err(e) => println!("normal subgroups:   skipped ({e})"),
    }
    Ok(())
}

fn cmd_good(spec: &str) -> Result<()> {
    let g = build_spec(spec)?;
    let z = center(&g)?.order();
    let good = good_elements(&g)?;
    if good.is_empty() {
        println!("{}: no good elements", g.name());
        return Ok(());
    }
    println!("{}: {} good class(es), |Z(G)| = {z}", g.name(), good.len());
    for c in &good {
        let w = c
            .reversing_witness
            .as_ref()
            .expect("good elements are real");
        println!(
            "  order={} size={} (4 | size: {}) rep={} witness={}",
            c.element_order,
            c.size,
            c.size % 4 == 0,
            c.representative.cycle_string(1),
            w.cycle_string(1),
        );
    }
    Ok(())
}

fn cmd_zsigmondy(q: u64, n: u32) -> Result<()> {
    match zsigmondy_l(q, n)? {
        Some(l) => println!("l_{n}({q}) = {l}"),
        None => println!("l_{n}({q}) = NONE"),
    }
    Ok(())
}

fn print_corpus_summary(report: &CorpusReport) {
    for g in &report.groups {
        let suite_text: Vec<String> = g
            .suites
            .iter()
            .map(|s| format!("{}={:?}", s.suite, s.status))
            .collect();
        let timing = match g.timing_ms {
            Some(ms) => format!(" [{ms} ms]"),
            None => String::new(),
        };
        println!(
            "{:<22} order={:<8} {}{}",
            g.name,
            g.order,
            suite_text.join(" "),
            timing
        );
        if let Some(e) = &g.error {
            println!("  error: {e}");
        }
    }
    println!();
    for (suite, counts) in &report.aggregate {
        println!(
            "{:<10} pass={} fail={} skipped={} vacuous={} counterexamples={} assertions={}",
            suite,
            counts.pass,
            counts.fail,
            counts.skipped,
            counts.vacuous,
            counts.counterexample,
            counts.assertions
        );
    }
}

fn write_json_report(report: &CorpusReport, path: &Option<PathBuf>) -> Result<()> {
    if let Some(p) = path {
        let text = serde_json::to_string_pretty(report)? + "\n";
        fs::write(p, text).with_context(|| format!("cannot write report to {}", p.display()))?;
        println!("report written to {}", p.display());
    }
    Ok(())
}

fn cmd_verify(
    corpus: &Option<PathBuf>,
    suites: &[String],
    jobs: usize,
    json: &Option<PathBuf>,
    no_timing: bool,
) -> Result<ExitCode> {
    let specs = load_corpus(corpus)?;
    let suites = parse_suites(suites)?;
    let mut report = run_corpus(&specs, &suites, &Caps::default(), jobs.max(1));
    if no_timing {
        report.strip_timing();
    }
    print_corpus_summary(&report);
    write_json_report(&report, json)?;
    if report.failures > 0 {
        println!("FAILURES: {}", report.failures);
        Ok(ExitCode::FAILURE)
    } else {
        println!("all suites passed (or were vacuous/skipped)");
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_scan(
    scanner: ScannerArg,
    corpus: &Option<PathBuf>,
    strict: bool,
    jobs: Option<usize>,
    json: &Option<PathBuf>,
    no_timing: bool,
) -> Result<ExitCode> {
    let specs = load_corpus(corpus)?;
    let kind = match scanner {
        ScannerArg::ConjC => SuiteKind::ConjC,
        ScannerArg::Navarro => SuiteKind::Navarro,
    };
    let jobs = jobs.unwrap_or_else(default_jobs).max(1);
    let mut report = run_corpus(&specs, &[kind], &Caps::default(), jobs);
    if no_timing {
        report.strip_timing();
    }
    print_corpus_summary(&report);
    write_json_report(&report, json)?;
    if report.counterexamples > 0 {
        println!("COUNTEREXAMPLES FOUND: {}", report.counterexamples);
        for g in &report.groups {
            for s in &g.suites {
                if s.status == SuiteStatus::Counterexample {
                    for w in &s.witnesses {
                        println!("{}", serde_json::to_string_pretty(w)?);
                    }
                }
            }
        }
        if strict {
            return Ok(ExitCode::FAILURE);
        }
    } else {
        println!("no counterexamples over {} groups", report.groups.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_replay(path: &PathBuf) -> Result<ExitCode> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read witness file {}", path.display()))?;
    let witness: Witness = serde_json::from_str(&text)
        .with_context(|| format!("witness file {} is malformed", path.display()))?;
    let (outcome, suite) = replay(&witness)?;
    println!(
        "replay of suite {:?} on {}: {:?} (status {:?}, {} assertions)",
        witness.suite, witness.group.name, outcome, suite.status, suite.assertions
    );
    for w in &suite.witnesses {
        println!("{}", serde_json::to_string_pretty(w)?);
    }
    match outcome {
        ReplayOutcome::Reproduced => Ok(ExitCode::SUCCESS),
        ReplayOutcome::NotReproduced => Ok(ExitCode::from(3)),
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match &cli.command {
        Commands::Info { spec } => {
            cmd_info(spec)?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Classes { spec, real_only } => {
            cmd_classes(spec, *real_only)?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Check { spec, property } => cmd_check(spec, *property),
        Commands::Structure { spec } => {
            cmd_structure(spec)?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Good { spec } => {
            cmd_good(spec)?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Zsigmondy { q, n } => {
            cmd_zsigmondy(*q, *n)?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Verify {
            corpus,
            suites,
            jobs,
            json,
            no_timing,
        } => cmd_verify(corpus, suites, *jobs, json, *no_timing),
        Commands::Scan {
            scanner,
            corpus,
            strict,
            jobs,
            json,
            no_timing,
        } => cmd_scan(*scanner, corpus, *strict, *jobs, json, *no_timing),
        Commands::Replay { witness } => cmd_replay(witness),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
