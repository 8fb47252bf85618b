use std::path::PathBuf;
use std::process::Command;

use discloci::cli;
use discloci::report::parse_machine;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("discloci").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("discloci-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn fixture_source(id: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("src/catalog/fixtures/{id}.fix"));
    std::fs::read_to_string(p).unwrap()
}

const FERMAT: &str = "ring: [x, y, z]\nsection: x^2\nsection: y^2\nsection: z^2\n";

#[test]
fn repeated_runs_are_byte_identical() {
    let p = scratch("fermat.txt", FERMAT);
    let p = p.to_str().unwrap();
    for verb in ["discriminant", "strata", "pencil-verify"] {
        let a = run(&["--seed", "5", verb, p]);
        let b = run(&["--seed", "5", verb, p]);
        assert_eq!(a.0, 0, "{verb}: {}", a.2);
        assert_eq!(a, b, "{verb}");
    }
    let a = run(&["fixture-all"]);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a, run(&["fixture-all"]));
}

#[test]
fn machine_block_round_trips() {
    let p = scratch("fermat-m.txt", FERMAT);
    let (code, out, _) = run(&["--machine", "discriminant", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    let kv = parse_machine(&out).unwrap();
    let get = |k: &str| kv.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
    assert_eq!(get("codegree"), Some("3"));
    assert_eq!(get("equation"), Some("l0*l1*l2"));
    assert_eq!(get("hyperplanes"), Some("3"));
    assert_eq!(get("field"), Some("GF(32003)"));
}

#[test]
fn field_flag_overrides_default() {
    let p = scratch("fermat-q.txt", FERMAT);
    let (code, out, _) = run(&["--field", "QQ", "--machine", "codegree", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("field: QQ"), "{out}");
    let (code, _, err) = run(&["--field", "GF(12)", "codegree", p.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn milnor_of_d4_singularity() {
    let (code, out, _) = run(&["milnor", "x^3+y^3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "milnor: 4"), "{out}");
}

#[test]
fn malformed_input_exits_two() {
    let p = scratch("bad.txt", "ring: [s, t]\nsection: s^2 +\n");
    let (code, _, err) = run(&["discriminant", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn base_points_exit_two() {
    let p = scratch("base.txt", "ring: [s, t]\nsection: s^2\nsection: s*t\n");
    let (code, _, err) = run(&["discriminant", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("base points"), "{err}");
}

#[test]
fn corrupted_expectation_exits_one() {
    let good = fixture_source("cone-web");
    let p = scratch("cone-web.fix", &good);
    assert_eq!(run(&["fixture", p.to_str().unwrap()]).0, 0);
    let bad = good.replace("hyperplanes = 1 |", "hyperplanes = 2 |");
    assert_ne!(bad, good);
    let p = scratch("cone-web-bad.fix", &bad);
    let (code, out, _) = run(&["fixture", p.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL hyperplanes"), "{out}");
}

#[test]
fn unknown_fixture_exits_two() {
    assert_eq!(run(&["fixture", "no-such-fixture"]).0, 2);
}

#[test]
fn binary_reports_exit_status() {
    let bin = env!("CARGO_BIN_EXE_discloci");
    let ok = Command::new(bin).args(["milnor", "x^2+y^2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("milnor: 1"));
    let bad = Command::new(bin).args(["milnor", "x^2+"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
