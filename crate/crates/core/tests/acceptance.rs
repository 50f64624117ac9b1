//! Runs the twelve acceptance suites at full size and prints one line each.

use std::process::ExitCode;
use std::time::Instant;

use pjshadow::sweep::{self, SweepConfig};

const CRITERIA: [(&str, &str); 12] = [
    ("reciprocity", "Hilbert reciprocity, |num|,|den| <= 200"),
    ("hilbert-oracle", "closed form = solvability oracle, p <= 50 and inf, |a|,|b| <= 30"),
    ("zolotarev", "Zolotarev sign = Legendre symbol, odd p <= 500"),
    ("imj-consistency", "l-part of den(B_2k/4k) = l^v(u^2k - 1), l <= 97, k <= 30"),
    ("bernoulli", "Bernoulli denominators = von Staudt-Clausen, n <= 60; B_12"),
    ("rezk", "rezk log: 1+l is sent to a unit, Teichmuller lifts to 0"),
    ("surjectivity", "v_l(p^k - 1) >= v_l(u^k - 1), l,p <= 50, k <= 40"),
    ("norm-identity", "norm identity mod l^20, l <= 23, d <= 6, m <= 10"),
    ("quillen", "|K_2i-1(F_q)| = q^i - 1, K_2i = 0, q <= 49, i <= 10"),
    ("pi2-nontrivial", "a pair with (a,b)_p = -1 for every p <= 100"),
    ("appendix-a", "2 sum 3^i + 1 = 3^k, k <= 64"),
    ("low-degree", "low-degree J tables on seeded samples"),
];

fn main() -> ExitCode {
    let cfg = SweepConfig::default();
    let mut all = true;
    for (i, (suite, label)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = sweep::run_suite(suite, &cfg).expect("suite is registered");
        let secs = start.elapsed().as_secs_f64();
        let tag = if outcome.passed() { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] AC-{:<2} {label}: {} checks, {} failed ({secs:.2}s)",
            i + 1,
            outcome.checked,
            outcome.failed
        );
        for f in &outcome.failures {
            println!("         {f}");
        }
        all &= outcome.passed();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
