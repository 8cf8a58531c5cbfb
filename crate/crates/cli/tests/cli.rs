use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sepbell"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Data rows of a CSV report, split into cells.
fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

fn header(csv: &str) -> String {
    csv.lines().find(|l| !l.starts_with('#')).unwrap().to_string()
}

#[test]
fn eval_werner_ppt() {
    let dir = TempDir::new().unwrap();
    let state = write(&dir, "w.json", r#"{"family":"werner","p":0.5}"#);
    let o = run(&["eval", "--state", s(&state), "--criteria", "ppt"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# sepbell-report v1\n# command=eval seed=0\n"));
    let r = &rows(&out)[0];
    assert_eq!(r[0], "ppt");
    assert!((r[1].parse::<f64>().unwrap() + 0.125).abs() < 1e-12);
    assert_eq!(r[4], "violated");
}

#[test]
fn eval_maximally_mixed_satisfies_everything() {
    let dir = TempDir::new().unwrap();
    let state = write(
        &dir,
        "mm.json",
        r#"{"pauli":{"r":[0,0,0],"s":[0,0,0],"T":[[0,0,0],[0,0,0],[0,0,0]]}}"#,
    );
    let o = run(&["eval", "--state", s(&state)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rs = rows(&out);
    assert!(rs.len() >= 14);
    assert!(rs.iter().all(|r| r[4] == "satisfied"), "{out}");
    assert!(out.contains("# violated: 0\n"));
}

#[test]
fn eval_noisy_singlet_linear_witness() {
    let dir = TempDir::new().unwrap();
    let state = write(&dir, "n.json", r#"{"family":"noisy_singlet","p":0.5}"#);
    let o = run(&["eval", "--state", s(&state), "--criteria", "loo_linear", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v["rows"][0];
    assert_eq!(row[0], "loo_linear");
    assert!((row[1].as_f64().unwrap() + 1.0 / 6.0).abs() < 1e-12);
    assert_eq!(row[4], "violated");
    assert_eq!(v["version"], "sepbell-report v1");
}

#[test]
fn eval_named_pair_and_pair_file_agree() {
    let dir = TempDir::new().unwrap();
    let state = write(&dir, "psi.json", r#"{"pure":[{"re":0,"im":0.5},-0.5,{"re":0,"im":0.5},0.5]}"#);
    let pair = write(&dir, "pair.json", r#"{"a":{"named":"beta_prime","side":"A"},"b":{"named":"beta_prime","side":"B"}}"#);
    let a = run(&["eval", "--state", s(&state), "--criteria", "mixsep2", "--named", "beta_prime"]);
    let b = run(&["eval", "--state", s(&state), "--criteria", "mixsep2", "--pair", s(&pair)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("# violated: 1\n"));
}

#[test]
fn invalid_inputs_exit_with_two_and_name_the_field() {
    let dir = TempDir::new().unwrap();
    let missing_p = write(&dir, "bad.json", r#"{"family":"werner"}"#);
    let o = run(&["--error-json", "eval", "--state", s(&missing_p)]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(e["error"]["field"], "p");
    assert_eq!(e["error"]["kind"], "validation");

    let truncated = write(&dir, "trunc.json", "{\n  \"pure\": [1,\n");
    let o = run(&["eval", "--state", s(&truncated)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let not_psd = write(&dir, "neg.json", r#"{"pauli":{"r":[0,0,0],"s":[0,0,0],"T":[[-1.2,0,0],[0,-1.2,0],[0,0,-1.2]]}}"#);
    assert_eq!(run(&["eval", "--state", s(&not_psd)]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--state", s(&dir.path().join("none.json"))]).status.code(), Some(2));
    let w = write(&dir, "w.json", r#"{"family":"werner","p":0.2}"#);
    assert_eq!(run(&["eval", "--state", s(&w), "--criteria", "nope"]).status.code(), Some(2));
}

#[test]
fn scan_reports_thresholds_and_rejects_zero_step() {
    let o = run(&["scan", "--family", "werner", "--step", "0.05"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        header(&out),
        "p,ppt_value,ppt_flag,mixsep2_pauli_value,mixsep2_pauli_flag,chsh_max_value,chsh_max_flag,gap_value,gap_flag"
    );
    assert_eq!(rows(&out).len(), 21);
    let ppt = out.lines().find(|l| l.starts_with("# threshold ppt:")).unwrap();
    let t: f64 = ppt.split(['"', ' ']).find_map(|w| w.parse().ok()).unwrap();
    assert!((t - 1.0 / 3.0).abs() < 1e-4);

    let o = run(&["--error-json", "scan", "--family", "werner", "--step", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let e: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(e["error"]["field"], "step");
    assert_eq!(run(&["scan", "--family", "werner", "--p-min", "0.8", "--p-max", "0.2"]).status.code(), Some(2));
}

#[test]
fn equivalence_is_reproducible_and_rejects_empty_runs() {
    let a = run(&["--seed", "3", "equivalence", "--samples", "12"]);
    let b = run(&["--seed", "3", "equivalence", "--samples", "12"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("# command=equivalence seed=3\n"));
    assert!(out.contains("# disagreements_outside_band: 0\n"));
    let c = run(&["--seed", "4", "equivalence", "--samples", "12"]);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(run(&["equivalence", "--samples", "0"]).status.code(), Some(2));
}

#[test]
fn region_footer_and_bounds() {
    let o = run(&["region", "--samples", "500", "--kind", "separable"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(header(&out), "sample,x,y,radius");
    assert!(out.contains("# within_bound: true\n"));
    assert!(out.contains("# excluded_area_fraction: 0.6073009183012759\n"));
    for r in rows(&out) {
        assert!(r[3].parse::<f64>().unwrap() <= 1.0 + 1e-9);
    }
}

#[test]
fn puretest_columns_and_counterexample() {
    let o = run(&["puretest", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        header(&out),
        "seed,rs,alpha_mixsep2_1,alpha_mixsep2_2,beta_prime_mixsep2_1,beta_prime_mixsep2_2,\
gamma_prime_mixsep2_1,gamma_prime_mixsep2_2,residual_abg_1,residual_abg_2,residual_abg_3,\
residual_prime_1,residual_prime_2,residual_prime_3,verdict,boundary"
    );
    assert_eq!(rows(&out).len(), 5);
    assert!(out.contains("# schmidt_mismatches: 0\n"));

    let dir = TempDir::new().unwrap();
    let cx = write(&dir, "cx.json", r#"{"pure":[{"re":0,"im":0.5},-0.5,{"re":0,"im":0.5},0.5]}"#);
    let out = stdout(&run(&["puretest", "--state", s(&cx)]));
    let r = &rows(&out)[0];
    assert_eq!(r[1], "0.5");
    assert_eq!(&r[8..11], ["0", "0", "0"]);
    assert_eq!(r[14], "entangled");
    let mixed = write(&dir, "w.json", r#"{"family":"werner","p":0.2}"#);
    assert_eq!(run(&["puretest", "--state", s(&mixed)]).status.code(), Some(2));
}

#[test]
fn optimize_matches_closed_form_and_strict_budget_fails_numerically() {
    let dir = TempDir::new().unwrap();
    let state = write(&dir, "w.json", r#"{"family":"werner","p":0.9}"#);
    let o = run(&["optimize", "--state", s(&state), "--objective", "chsh", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v["rows"][0];
    assert!((row[1].as_f64().unwrap() - 1.8 * 2f64.sqrt()).abs() < 1e-3);
    assert_eq!(row[3], true);

    let cfg = write(&dir, "tiny.toml", "[optimize]\nrestarts = 1\nevals_per_restart = 16\n");
    let o = run(&["--config", s(&cfg), "--error-json", "optimize", "--state", s(&state), "--strict"]);
    assert_eq!(o.status.code(), Some(3));
    let e: Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(e["error"]["kind"], "numerical");
}

#[test]
fn config_file_and_flags_layer_in_order() {
    let dir = TempDir::new().unwrap();
    let cfg = write(&dir, "run.toml", "seed = 11\nformat = \"json\"\n[tolerances]\nequality = 1e-6\n");
    let state = write(&dir, "w.json", r#"{"family":"werner","p":0.2}"#);
    let o = run(&["--config", s(&cfg), "eval", "--state", s(&state), "--criteria", "fidelity"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["rows"][0][5], 1e-6);
    let o = run(&["--config", s(&cfg), "--seed", "2", "--tol", "1e-8", "--format", "csv", "eval", "--state", s(&state), "--criteria", "fidelity"]);
    let out = stdout(&o);
    assert!(out.contains("seed=2"));
    assert_eq!(rows(&out)[0][5], "1e-8");
    let bad = write(&dir, "bad.toml", "[tolerances]\nequalty = 1\n");
    assert_eq!(run(&["--config", s(&bad), "eval", "--state", s(&state)]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_identical_bytes() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&["--seed", "5", "--out", s(p), "region", "--samples", "200"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}
