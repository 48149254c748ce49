use std::path::PathBuf;
use std::process::{Command, Output};

fn slq2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slq2")).args(args).env_remove("SLQ2_CONFIG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn config(name: &str, body: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn normalize_da() {
    let o = slq2(&["normalize", "d a"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + t^-2 b c");
    assert_eq!(stdout(&slq2(&["normalize", "d a - 1/(t^2) b c"])).trim(), "1");
}

#[test]
fn parse_errors_exit_2() {
    let o = slq2(&["normalize", "b^-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
    assert_eq!(slq2(&["normalize", "a +"]).status.code(), Some(2));
    assert_eq!(slq2(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(slq2(&["v", "--n", "1", "--preset", "nope"]).status.code(), Some(2));
}

#[test]
fn hopf_maps_on_generators() {
    assert_eq!(stdout(&slq2(&["coproduct", "a"])).trim(), "a (⊗) a + b (⊗) c");
    assert_eq!(stdout(&slq2(&["antipode", "a"])).trim(), "d");
    assert_eq!(stdout(&slq2(&["antipode", "b"])).trim(), "-t^-2 b");
    let star_s = stdout(&slq2(&["star", "--", "-t^-2 b"]));
    assert_eq!(stdout(&slq2(&["tau", "b"])), star_s);
    assert_eq!(star_s.trim(), "-t^2 b");
}

#[test]
fn v1_at_rplus_is_w1() {
    let got = stdout(&slq2(&["v", "--n", "1", "--preset", "rplus"]));
    let want = stdout(&slq2(&["normalize", "--preset", "rplus", "a + t chip b"]));
    assert_eq!(got, want);
    let got = stdout(&slq2(&["v", "--n", "-1", "--preset", "rplus"]));
    let want = stdout(&slq2(&["normalize", "--preset", "rplus", "a + t chim b"]));
    assert_eq!(got, want);
}

#[test]
fn reduce_and_expand() {
    assert_eq!(stdout(&slq2(&["reduce", "--preset", "s1", "a - d + 2 t mu b"])).trim(), "0");
    assert_eq!(stdout(&slq2(&["reduce", "--side", "left", "--preset", "s1", "nu q b + c"])).trim(), "0");
    let e = stdout(&slq2(&["expand", "--s", "1", "--preset", "s1"]));
    assert_eq!(e.lines().count(), 2);
    assert_eq!(slq2(&["expand", "--s", "1", "--preset", "special"]).status.code(), Some(2));
}

#[test]
fn x_requires_special_series() {
    assert!(slq2(&["x", "--n", "1"]).status.success());
    assert_eq!(stdout(&slq2(&["x", "--n", "1"])).trim(), "t b");
    assert_eq!(slq2(&["x", "--n", "1", "--preset", "s1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_json() {
    let o = slq2(&["verify", "coideal", "--preset", "s1", "--json", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let r = slq2::report::SuiteReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.suite, "coideal");
    assert_eq!(r.preset, "s1");
    assert!(r.passed());
    let o = slq2(&["verify", "special-series", "--preset", "s1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = slq2(&["verify", "grouplike", "--preset", "special", "--max-n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("grouplike-right-2"));
    assert!(!stdout(&o).contains("grouplike-right-3"));
}

#[test]
fn explicit_rationals_select_the_family() {
    assert_eq!(slq2(&["verify", "classical-limit", "--mu", "0", "--nu", "1"]).status.code(), Some(2));
    assert_eq!(slq2(&["verify", "doublecoset", "--mu", "2", "--nu", "4"]).status.code(), Some(0));
    assert_eq!(slq2(&["v", "--n", "1", "--mu", "1/2"]).status.code(), Some(2));
    assert_eq!(slq2(&["v", "--n", "1", "--mu", "x", "--nu", "1"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_union_of_suites() {
    let all = slq2(&["verify", "all", "--preset", "s1", "--json", "--samples", "5", "--max-n", "2"]);
    assert!(all.status.success());
    let all = slq2::report::SuiteReport::from_json(&stdout(&all)).unwrap();
    let mut ids = Vec::new();
    for s in slq2::suites::SUITES {
        if slq2::suites::needs_special(s) {
            continue;
        }
        let o = slq2(&["verify", s, "--preset", "s1", "--json", "--samples", "5", "--max-n", "2"]);
        let r = slq2::report::SuiteReport::from_json(&stdout(&o)).unwrap();
        ids.extend(r.checks.into_iter().map(|c| format!("{s}/{}", c.id)));
    }
    let all_ids: Vec<_> = all.checks.into_iter().map(|c| c.id).collect();
    assert_eq!(all_ids, ids);
}

#[test]
fn config_file_and_flag_override() {
    let cfg = config("special.conf", "# test\npreset = special\nmax-n = 1\nsamples = 3\n");
    let cfg = cfg.to_str().unwrap();
    let o = slq2(&["--config", cfg, "verify", "grouplike"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("preset special"));
    assert!(!stdout(&o).contains("grouplike-right-2"));
    let o = slq2(&["--config", cfg, "verify", "grouplike", "--max-n", "2"]);
    assert!(stdout(&o).contains("grouplike-right-2"));
    let o = slq2(&["--config", cfg, "verify", "grouplike", "--preset", "s1", "--max-n", "1"]);
    assert!(stdout(&o).contains("preset s1"));

    let o = Command::new(env!("CARGO_BIN_EXE_slq2"))
        .args(["v", "--n", "1"])
        .env("SLQ2_CONFIG", config("rat.conf", "mu = 0\nnu = 1\n"))
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), stdout(&slq2(&["v", "--n", "1", "--preset", "s1"])));

    let bad = config("bad.conf", "colour = blue\n");
    assert_eq!(slq2(&["--config", bad.to_str().unwrap(), "normalize", "a"]).status.code(), Some(2));
}
