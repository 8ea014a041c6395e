//! Acceptance suite: every release gate in one target, one test per
//! criterion, each printing a PASS line (run with `-- --nocapture` to see
//! them). The corpus verification is shared across criteria through a
//! OnceLock so the suite stays fast.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rcg_core::arith;
use rcg_core::caps::Caps;
use rcg_core::classes::class_of;
use rcg_core::perm::Permutation;
use rcg_core::realprops::{decomposition_count_t, real_spectrum, zsigmondy_l};
use rcg_core::verify::{run_corpus, CorpusReport, SuiteKind, SuiteStatus};
use rcg_core::zoo::{build, default_corpus, parse_spec};
use rcg_oracle::check::assert_group_matches_oracle;

const LEMMA_CAP: u64 = 10_000;

fn five_second_budget(label: &str, start: Instant) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(5),
        "{label} took {elapsed:?}, over the 5 s budget"
    );
}

static SHARED: OnceLock<(CorpusReport, Duration)> = OnceLock::new();

fn corpus_report() -> &'static (CorpusReport, Duration) {
    SHARED.get_or_init(|| {
        let specs = default_corpus();
        let start = Instant::now();
        let report = run_corpus(&specs, &SuiteKind::VERIFY_DEFAULT, &Caps::default(), 4);
        (report, start.elapsed())
    })
}

fn suite_status(report: &CorpusReport, group: &str, suite: &str) -> SuiteStatus {
    report
        .groups
        .iter()
        .find(|g| g.name == group)
        .unwrap_or_else(|| panic!("group {group} missing from corpus report"))
        .suites
        .iter()
        .find(|s| s.suite == suite)
        .unwrap_or_else(|| panic!("suite {suite} missing for {group}"))
        .status
}

#[test]
fn criterion_1_paper_numbers_exact() {
    let five_cycle =
        |degree: usize| Permutation::from_cycles(degree, &[vec![0, 1, 2, 3, 4]]).unwrap();

    for (spec, expected) in [("alt:5", 12u64), ("alt:6", 72), ("alt:7", 504)] {
        let start = Instant::now();
        let g = build(&parse_spec(spec).unwrap()).unwrap();
        let class = class_of(&g, &five_cycle(g.degree())).unwrap();
        assert_eq!(class.size, expected, "{spec} 5-cycle class size");
        assert!(class.is_real, "{spec} 5-cycle class must be real");
        five_second_budget(spec, start);
    }

    // PSL2(7): exactly one noncentral odd-order real class, of size 7 * 2^3.
    let start = Instant::now();
    let psl27 = build(&parse_spec("psl2:7").unwrap()).unwrap();
    let spectrum = real_spectrum(&psl27).unwrap();
    let noncentral_odd: Vec<u64> = spectrum
        .entries
        .iter()
        .filter(|e| !e.is_central && e.element_order % 2 == 1)
        .map(|e| e.size)
        .collect();
    assert_eq!(noncentral_odd, [56]);
    assert_eq!(56, 7 * 8);
    let real_sizes: Vec<u64> = spectrum.entries.iter().map(|e| e.size).collect();
    assert_eq!(real_sizes, [1, 21, 56, 42]);
    five_second_budget("psl2:7 spectrum", start);

    // PSL2(13): a real class of order-7 elements with centralizer order 7
    // and class size q(q-1) = 156.
    let start = Instant::now();
    let psl213 = build(&parse_spec("psl2:13").unwrap()).unwrap();
    let spectrum = real_spectrum(&psl213).unwrap();
    let order7: Vec<&_> = spectrum
        .entries
        .iter()
        .filter(|e| e.element_order == 7)
        .collect();
    assert!(!order7.is_empty(), "psl2:13 must have real order-7 classes");
    for e in &order7 {
        assert_eq!(e.size, 156);
        assert_eq!(psl213.order() / e.size, 7, "centralizer order");
    }
    assert_eq!(156, 13 * 12);
    five_second_budget("psl2:13 spectrum", start);

    // Sym(4): the worked example, all structural flags at once.
    let start = Instant::now();
    let report = &corpus_report().0;
    let sym4 = report.groups.iter().find(|g| g.name == "sym:4").unwrap();
    assert!(sym4.property_wt && !sym4.property_t);
    assert_eq!(sym4.odd_ppo_real_sizes, [1, 8]);
    assert_eq!(sym4.o_upper_2_prime_order, 24);
    assert_eq!(sym4.o2_prime_order, 1);
    assert!(!sym4.two_closed && !sym4.two_nilpotent);
    five_second_budget("sym:4 report", start);

    println!("ACCEPTANCE 1 (paper numbers, exact): PASS");
}

#[test]
fn criterion_2_theorem_a_over_corpus() {
    let (report, elapsed) = corpus_report();
    assert!(report.groups.len() >= 30, "corpus must have >= 30 groups");
    let max_order = report.groups.iter().map(|g| g.order).max().unwrap();
    assert!(max_order >= 100_000, "corpus must reach order ~2*10^5");
    assert!(
        *elapsed < Duration::from_secs(120),
        "corpus verification took {elapsed:?}, over the 2 min budget"
    );

    let mut non_vacuous = 0;
    for g in &report.groups {
        assert!(g.error.is_none(), "{}: {:?}", g.name, g.error);
        if g.property_wt {
            assert!(g.solvable, "{}: WT group must be solvable", g.name);
            non_vacuous += 1;
        }
        if !g.solvable {
            assert!(!g.property_wt, "{}: nonsolvable group must fail WT", g.name);
        }
        let status = suite_status(report, &g.name, "theoremA");
        assert_ne!(status, SuiteStatus::Fail, "{}", g.name);
        assert_ne!(status, SuiteStatus::Skipped, "{}", g.name);
    }
    assert!(
        non_vacuous >= 5,
        "need >= 5 non-vacuous instances, got {non_vacuous}"
    );
    println!("ACCEPTANCE 2 (theorem A suite, {non_vacuous} non-vacuous): PASS");
}

#[test]
fn criterion_3_theorem_b_and_prop45() {
    let report = &corpus_report().0;
    let mut non_vacuous = 0;
    for g in &report.groups {
        if !g.property_t {
            continue;
        }
        non_vacuous += 1;
        assert!(
            g.o_upper_2_prime_two_nilpotent,
            "{}: O^{{2'}} must be 2-nilpotent under T",
            g.name
        );
        assert!(
            g.quotient_by_o2_prime_two_closed,
            "{}: G/O_{{2'}} must be 2-closed under T",
            g.name
        );
        if g.o_upper_2_prime_order == g.order {
            assert!(
                g.two_nilpotent,
                "{}: T and G = O^{{2'}} force 2-nilpotency",
                g.name
            );
        }
        assert_ne!(suite_status(report, &g.name, "theoremB"), SuiteStatus::Fail);
        assert_ne!(suite_status(report, &g.name, "prop45"), SuiteStatus::Fail);
    }
    assert!(
        non_vacuous >= 8,
        "need >= 8 non-vacuous instances, got {non_vacuous}"
    );
    println!("ACCEPTANCE 3 (theorem B / prop 4.5 suite, {non_vacuous} non-vacuous): PASS");
}

#[test]
fn criterion_4_lemma_suite_zero_failures() {
    let report = &corpus_report().0;
    let mut assertions = 0;
    for g in &report.groups {
        for suite in &g.suites {
            if suite.suite == "lemmas" || suite.suite == "lemma41" {
                assert_ne!(
                    suite.status,
                    SuiteStatus::Fail,
                    "{}: {} failed: {:?}",
                    g.name,
                    suite.suite,
                    suite.witnesses
                );
                assertions += suite.assertions;
            }
        }
        if g.order <= LEMMA_CAP {
            assert_ne!(
                suite_status(report, &g.name, "lemmas"),
                SuiteStatus::Skipped,
                "{}: lemma suite must run at order <= 10^4",
                g.name
            );
        }
    }
    assert!(
        assertions >= 1_000,
        "need >= 10^3 lemma assertions, got {assertions}"
    );
    println!("ACCEPTANCE 4 (lemma suite, {assertions} assertions, zero failures): PASS");
}

#[test]
fn criterion_5_good_elements_in_simple_groups() {
    let report = &corpus_report().0;
    let targets = [
        "alt:5", "alt:6", "alt:7", "alt:8", "alt:9", "psl2:5", "psl2:7", "psl2:11", "psl2:13",
    ];
    for name in targets {
        assert_eq!(
            suite_status(report, name, "prop31"),
            SuiteStatus::Pass,
            "{name}: good element must be found and certified"
        );
        let g = report.groups.iter().find(|g| g.name == name).unwrap();
        assert!(!g.good_elements.is_empty());
        for cert in &g.good_elements {
            assert!(cert.four_divides_size, "{name}: 4 | size");
            assert!(cert.order_coprime_to_center, "{name}: gcd(o(x), |Z|) = 1");
            assert!(
                cert.witness_valid,
                "{name}: reversing witness must check out"
            );
            assert!(cert.size_two_part >= 4);
            assert!(arith::is_odd_prime_power(cert.element_order));
        }
    }
    println!(
        "ACCEPTANCE 5 (proposition 3.1 at desk scale, {} targets): PASS",
        targets.len()
    );
}

#[test]
fn criterion_6_oracle_equivalence() {
    let mut checked = 0;
    for spec in default_corpus() {
        let g = build(&spec).unwrap();
        if g.order() > LEMMA_CAP {
            continue;
        }
        assert_group_matches_oracle(&g);
        checked += 1;
    }
    assert!(
        checked >= 30,
        "expected >= 30 oracle-checked groups, got {checked}"
    );
    println!("ACCEPTANCE 6 (oracle equivalence on {checked} groups): PASS");
}

#[test]
fn criterion_7_zsigmondy_and_decomposition_count() {
    // Direct factorization oracle: the primitive prime is found by raw
    // divisibility of q^m - 1, no modular arithmetic shared with the
    // implementation.
    fn direct_primitive_prime(q: u64, n: u32) -> Option<u64> {
        let value = (1..=n).fold(1u128, |acc, _| acc * u128::from(q)) - 1;
        let mut primes = Vec::new();
        let mut rest = value;
        let mut d = 2u128;
        while d * d <= rest {
            if rest % d == 0 {
                primes.push(d);
                while rest % d == 0 {
                    rest /= d;
                }
            }
            d += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        primes.sort_unstable();
        'outer: for p in primes {
            for m in 1..n {
                let qm = (1..=m).fold(1u128, |acc, _| acc * u128::from(q)) - 1;
                if qm % p == 0 {
                    continue 'outer;
                }
            }
            return Some(p as u64);
        }
        None
    }

    for q in 2..=10u64 {
        for n in 3..=12u32 {
            let got = zsigmondy_l(q, n).unwrap();
            let expected = direct_primitive_prime(q, n);
            assert_eq!(got, expected, "zsigmondy_l({q}, {n})");
            match got {
                None => assert_eq!((q, n), (2, 6), "NONE only at (2,6)"),
                Some(l) => assert_eq!(l % u64::from(n), 1, "l = 1 (mod n) for ({q}, {n})"),
            }
        }
    }

    assert_eq!(decomposition_count_t(3, 2).unwrap(), 28);
    for (q, max_n) in [(2u64, 8u32), (4, 6), (8, 5)] {
        for n in 3..=max_n {
            let t = decomposition_count_t(n, q).unwrap();
            assert_eq!(t % 4, 0, "4 | t for n={n}, q={q}");
        }
    }
    println!("ACCEPTANCE 7 (zsigmondy + decomposition count): PASS");
}

#[test]
fn criterion_8_scanners_report_zero_counterexamples() {
    for scanner in ["conjC", "navarro"] {
        let output = Command::new(env!("CARGO_BIN_EXE_rcg"))
            .args(["scan", scanner, "--strict", "--jobs", "4", "--no-timing"])
            .output()
            .expect("scan subprocess runs");
        let stdout = String::from_utf8_lossy(&output.stdout);
        assert!(
            output.status.success(),
            "scan {scanner} exited nonzero:\n{stdout}"
        );
        assert!(
            stdout.contains("no counterexamples"),
            "scan {scanner} must report zero counterexamples:\n{stdout}"
        );
    }
    println!("ACCEPTANCE 8 (scanners clean over corpus): PASS");
}

#[test]
fn criterion_9_byte_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let run = |path: &std::path::Path| {
        let output = Command::new(env!("CARGO_BIN_EXE_rcg"))
            .args([
                "verify",
                "--no-timing",
                "--jobs",
                "4",
                "--json",
                path.to_str().unwrap(),
            ])
            .output()
            .expect("verify subprocess runs");
        assert!(
            output.status.success(),
            "verify exited nonzero:\n{}",
            String::from_utf8_lossy(&output.stdout)
        );
        std::fs::read(path).expect("report written")
    };
    let first = run(&dir.path().join("report_a.json"));
    let second = run(&dir.path().join("report_b.json"));
    assert!(!first.is_empty());
    assert_eq!(first, second, "reports must be byte-identical across runs");
    println!("ACCEPTANCE 9 (deterministic reports): PASS");
}
