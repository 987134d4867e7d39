//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! The corpus is built once up front; each criterion's time budget covers
//! only its own checks.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mvs_core::corpus::{self, Corpus, CorpusSpec};
use mvs_core::verify;

struct Criterion {
    name: &'static str,
    suites: &'static [&'static str],
    budget: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "ideal-lattice laws", suites: &["ideal-intersection", "open-join"], budget: secs(60) },
    Criterion { name: "spectrality and root systems", suites: &["spectral-sober", "root-system"], budget: secs(60) },
    Criterion { name: "functor isomorphisms", suites: &["compact-opens-principal"], budget: secs(60) },
    Criterion {
        name: "closedness equivalence",
        suites: &["closed-epi-equivalence", "dual-closure-equalities"],
        budget: secs(300),
    },
    Criterion { name: "chain collapse counterexample", suites: &["closed-epi-counterexample"], budget: secs(1) },
    Criterion {
        name: "classification equivalences",
        suites: &[
            "chang-variety",
            "komori-variety",
            "local-criteria",
            "local-spectrum",
            "perfect-criteria",
            "perfect-ideal-criteria",
            "rank-convention",
            "rank-lifting",
            "root-supermaximal",
            "supermaximal-perfect",
        ],
        budget: secs(120),
    },
    Criterion { name: "ℓ-spectrum instances", suites: &["lgroup-spectrum", "komori-spectra"], budget: secs(5) },
    Criterion { name: "Chang table vs Γ", suites: &["chang-table"], budget: secs(5) },
    Criterion {
        name: "McNaughton functions",
        suites: &[
            "rho-truncation",
            "zero-at-origin",
            "local-homogeneity",
            "homogeneous-not-converse",
            "homogenization",
            "zeroset-1d",
            "homogeneous-cones",
        ],
        budget: secs(120),
    },
    Criterion { name: "sector decomposition over Δ(ℚ)", suites: &["delta-zerosets"], budget: secs(120) },
];

/// `Ok(())` or a one-line reason.
fn check(c: &Criterion, corpus: &Corpus) -> (Result<(), String>, Duration) {
    let start = Instant::now();
    for id in c.suites {
        let Some(suite) = verify::find(id) else {
            return (Err(format!("suite {id} is not registered")), start.elapsed());
        };
        match suite.run(corpus) {
            Ok(None) => {}
            Ok(Some(cx)) => return (Err(format!("{id}: counterexample {cx}")), start.elapsed()),
            Err(e) => return (Err(format!("{id}: {e}")), start.elapsed()),
        }
    }
    let elapsed = start.elapsed();
    if elapsed > c.budget {
        return (Err(format!("took {elapsed:.2?}, budget {:?}", c.budget)), elapsed);
    }
    (Ok(()), elapsed)
}

fn main() -> ExitCode {
    let corpus = match corpus::build(&CorpusSpec::default()) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL corpus construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failed = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let (verdict, elapsed) = check(c, &corpus);
        match verdict {
            Ok(()) => println!("PASS {:>2} {} ({elapsed:.2?})", i + 1, c.name),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {} ({elapsed:.2?}): {reason}", i + 1, c.name);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
