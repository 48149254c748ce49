//! Acceptance criteria 1 to 10. Runs without the libtest harness so that
//! each criterion prints exactly one line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use slq2::report::{Status, SuiteReport};
use slq2::suites::{run_suite, SuiteConfig, SUITES};

const PRESETS: [&str; 3] = ["rplus", "s1", "special"];

struct Verdict {
    ok: bool,
    detail: String,
}

fn run(suite: &str, preset: &str) -> Result<SuiteReport, String> {
    run_suite(suite, preset, &SuiteConfig::default()).map_err(|e| format!("{suite}@{preset}: {e}"))
}

fn failures(r: &SuiteReport) -> Vec<String> {
    r.checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{}@{}: {} [{}]", r.suite, r.preset, c.id, c.witness.as_deref().unwrap_or("")))
        .collect()
}

fn has(r: &SuiteReport, id: &str) -> bool {
    r.checks.iter().any(|c| c.id == id && c.status == Status::Pass)
}

/// Runs `suite` at each preset and requires every check to pass and every
/// listed id to be present.
fn suites_pass(suite: &str, presets: &[&str], required: impl Fn(&str) -> Vec<String>) -> Result<Verdict, String> {
    let mut bad = Vec::new();
    let mut count = 0;
    for p in presets {
        let r = run(suite, p)?;
        count += r.checks.len();
        bad.extend(failures(&r));
        for id in required(p) {
            if !has(&r, &id) {
                bad.push(format!("{suite}@{p}: missing {id}"));
            }
        }
    }
    Ok(Verdict { ok: bad.is_empty(), detail: if bad.is_empty() { format!("{count} checks") } else { bad.join("; ") } })
}

fn range(n: i64) -> impl Iterator<Item = i64> {
    -n..=n
}

fn criterion(n: u32) -> Result<Verdict, String> {
    match n {
        1 => suites_pass("hopf", &["rplus"], |_| {
            let mut ids: Vec<_> = (0..100).map(|i| format!("axioms-random-{i:03}")).collect();
            for g in ["a", "b", "c", "d"] {
                for ax in ["coassociativity", "counit-left", "antipode-right", "coproduct-star", "tau-involution"] {
                    ids.push(format!("{ax}-{g}"));
                }
            }
            ids
        }),
        2 => suites_pass("pbw", &["s1"], |_| {
            let mut ids: Vec<_> = (0..=4).map(|n| format!("confluence-length-{n}")).collect();
            ids.extend((0..200).map(|i| format!("confluence-random-{i:03}")));
            ids.extend((0..100).map(|i| format!("associativity-{i:03}")));
            ids
        }),
        3 => suites_pass("coideal", &PRESETS, |_| {
            ["counit-k1", "counit-k2", "tau-k1", "tau-k2", "coproduct-k1", "coproduct-k2"].map(String::from).to_vec()
        }),
        4 => suites_pass("grouplike", &PRESETS, |_| {
            let mut ids = Vec::new();
            for n in range(5) {
                ids.extend([
                    format!("grouplike-right-{n}"),
                    format!("counit-right-{n}"),
                    format!("recursion-right-{n}"),
                    format!("tau-{n}"),
                ]);
            }
            for n in range(3) {
                ids.extend([format!("grouplike-left-{n}"), format!("counit-left-{n}")]);
            }
            ids
        }),
        5 => suites_pass("expansion", &["rplus", "s1"], |_| {
            let mut ids = Vec::new();
            for s in 0..=5 {
                ids.extend([format!("expand-b^{s}"), format!("shift-ab^{s}")]);
            }
            for n in range(5) {
                ids.extend([format!("vbva-b-{n}"), format!("vbva-a-{n}")]);
            }
            ids
        }),
        6 => {
            let a = suites_pass("special-series", &["special"], |_| {
                let mut ids = vec!["rank-v0..v5-x1..x5".to_string(), "span-equality-5".to_string()];
                for n in 1..=5 {
                    ids.extend([format!("x-coproduct-{n}"), format!("x-tau-{n}"), format!("x-three-term-{n}")]);
                }
                ids.extend((2..=5).map(|n| format!("x-formula-vs-recursion-{n}")));
                ids
            })?;
            let b = suites_pass("classical-limit", &["special"], |_| {
                (1..=2).flat_map(|n| [format!("classical-even-{n}"), format!("classical-odd-{n}")]).collect()
            })?;
            Ok(Verdict { ok: a.ok && b.ok, detail: format!("{}; {}", a.detail, b.detail) })
        }
        7 => suites_pass("homspace", &PRESETS, |_| {
            let mut ids: Vec<_> = ["z-comm-12", "z-comm-13", "z-quad"].map(String::from).to_vec();
            for i in 1..=3 {
                ids.extend([format!("coproduct-z{i}"), format!("reality-z{i}")]);
            }
            ids
        }),
        8 => suites_pass("doublecoset", &PRESETS, |_| {
            let mut ids: Vec<_> = (0..=2).flat_map(|n| [format!("double-coset-right-{n}"), format!("double-coset-left-{n}")]).collect();
            ids.push("independence-y0-y2".into());
            ids
        }),
        9 => suites_pass("adjoint", &PRESETS, |p| {
            let mut ids = Vec::new();
            for a in ["2", "1/3"] {
                for g in ["ad-k1", "ad-k2", "ad-tau-k1", "ad-tau-k2", "bchar-quad", "rescale-family"] {
                    ids.push(format!("alpha={a}/{g}"));
                }
            }
            if p != "rplus" {
                for n in range(2) {
                    ids.extend([format!("annihilator-{n}-k1"), format!("annihilator-{n}-k2")]);
                }
            }
            ids
        }),
        10 => {
            let mut bad = Vec::new();
            let mut controls = 0;
            for s in SUITES {
                let r = run(s, if slq2::suites::needs_special(s) { "special" } else { "s1" })?;
                let found: Vec<_> = r.checks.iter().filter(|c| c.id.contains("control-")).collect();
                controls += found.len();
                if found.is_empty() {
                    bad.push(format!("{s}: no control"));
                }
                for c in found {
                    let w = c.witness.as_deref().unwrap_or("");
                    if c.status != Status::Pass || w.is_empty() || w == "0" {
                        bad.push(format!("{s}: {} not rejected with a nonzero witness", c.id));
                    }
                }
            }
            Ok(Verdict {
                ok: bad.is_empty(),
                detail: if bad.is_empty() { format!("{controls} controls rejected") } else { bad.join("; ") },
            })
        }
        _ => unreachable!(),
    }
}

const BUDGETS: [u64; 10] = [60, 120, 30, 300, 300, 300, 300, 300, 120, 300];

fn main() -> ExitCode {
    // libtest flags such as --nocapture are accepted and ignored
    let mut all = true;
    for n in 1..=10u32 {
        let start = Instant::now();
        let verdict = criterion(n).unwrap_or_else(|e| Verdict { ok: false, detail: e });
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(BUDGETS[n as usize - 1]);
        let ok = verdict.ok && elapsed < budget;
        all &= ok;
        let timing = format!("{:.2}s/{}s", elapsed.as_secs_f64(), budget.as_secs());
        println!("criterion {n:>2}: {} ({timing}) {}", if ok { "PASS" } else { "FAIL" }, verdict.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
