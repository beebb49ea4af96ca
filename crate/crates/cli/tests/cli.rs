use std::process::{Command, Output};

use serde_json::Value;

fn engel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_engel")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = engel(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn gen_writes_sequence_file() {
    let out = engel(&["gen", "--d1", "3", "--G", "1,2", "--n", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# engel-seq v1");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[6], "5599917937724687764238078261637795");

    let text = stdout(&engel(&["gen", "--z", "3,9,81", "--n", "4"]));
    assert_eq!(text, "# engel-seq v1\n# z: 3,9,81\n1\n3\n81\n531441\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        engel(&["gen", "--d1", "2", "--G", "1,2", "--n", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        engel(&["gen", "--z", "3,9", "--d1", "3", "--G", "1", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(engel(&["gen", "--u", "3", "--n", "4"]).status.code(), Some(2));
    assert_eq!(engel(&["cf", "--z", "3,2", "--n", "5"]).status.code(), Some(2));
    let out = engel(&["gen", "--d1", "3", "--G", "1,2", "--n", "40", "--bits", "4096"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(engel(&["gen", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn cf_examples() {
    assert_eq!(
        stdout(&engel(&["cf", "--z", "3,2,2", "--n", "4"])),
        "[1;2,1,1,3,1,1,2,1,1,2]\n"
    );
    let out = engel(&["cf", "--z", "2,6,300", "--n", "4", "--check", "oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[1;1,1,5,2,299,1,1,5,2]\n");
    assert_eq!(stdout(&engel(&["cf", "--z", "3,2", "--n", "1"])), "[1]\n");
    let v = json(&["cf", "--z", "5,1,2", "--n", "4", "--check", "oracle"]);
    assert_eq!(v["class"], "MIXED");
    assert_eq!(v["checked"], true);
}

#[test]
fn stream_json_shape() {
    let v = json(&["stream", "--d1", "3", "--G", "1,2", "--K", "11"]);
    assert_eq!(v["class"], "GENERIC");
    let certified: Vec<&str> = v["certified"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(certified.len(), 12);
    assert_eq!(certified[11], "7697947188058154");
    assert!(v["n_used"].as_u64().unwrap() >= 4);
    assert_eq!(v["lengths"][0], 1);

    let v = json(&["stream", "--z", "5,1,2,1", "--K", "5"]);
    assert_eq!(v["class"], "MIXED");
    assert_eq!(v["certified"].as_array().unwrap().len(), 6);
    assert_eq!(engel(&["stream", "--z", "5,1,2,1", "--K", "40"]).status.code(), Some(2));
}

#[test]
fn stream_shallit_source_matches_factor_source() {
    let a = stdout(&engel(&["stream", "--u", "3", "--c", "1,4,12,33", "--K", "10"]));
    let b = stdout(&engel(&["stream", "--z", "3,9,81,19683", "--K", "10"]));
    assert_eq!(a, b);
    assert_eq!(a, "[1;2,1,8,3,80,1,2,8,1,2]\n");
}

#[test]
fn asymp_report() {
    let v = json(&["asymp", "--d1", "3", "--G", "1,2", "--n", "6", "--digits", "30"]);
    assert!(v["lambda"].as_str().unwrap().starts_with("3.7320508075688772935"));
    let c: f64 = v["C"].as_str().unwrap().parse().unwrap();
    assert!((c - 0.107812043).abs() < 1e-8);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[1]["log_x"].as_str().unwrap()[..12], *"1.0986122886");
    assert!(rows[0]["roth_lo"].is_null());
    let lo: f64 = rows[4]["roth_lo"].as_str().unwrap().parse().unwrap();
    assert!(lo > 2.3);

    let v = json(&["asymp", "--d1", "3", "--G", "1,2", "--lift", "--n", "6"]);
    let c: f64 = v["C"].as_str().unwrap().parse().unwrap();
    assert!((c - 0.0227833).abs() < 1e-6);
    assert_eq!(v["C_kind"], "empirical");
    assert_eq!(engel(&["asymp", "--z", "3,2", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "--suite", "generic", "--trials", "100", "--maxn", "7"][..],
        &["verify", "--suite", "z2", "--trials", "20"],
        &["verify", "--suite", "lift", "--d1", "3", "--G", "1,2", "--n", "7"],
        &["verify", "--suite", "identities", "--z", "3,2,2,2", "--n", "5"],
        &["verify", "--suite", "lengths", "--trials", "10"],
        &["verify", "--suite", "alphabet", "--trials", "10"],
    ] {
        let out = engel(args);
        assert!(out.status.success(), "{args:?}: {}", stdout(&out));
        assert!(stdout(&out).ends_with(": ok\n"));
    }
    assert_eq!(
        engel(&["verify", "--suite", "identities", "--n", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn golden_example_groups() {
    let out = engel(&["paper-examples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.lines().last().unwrap().ends_with("checks passed"));

    let v = json(&["paper-examples", "--only", "nex"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    assert!(checks.iter().all(|c| c["group"] == "nex" && c["pass"] == true));

    let text = stdout(&engel(&["paper-examples", "--only", "kempner-u2"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    let text = stdout(&engel(&["paper-examples", "--only", "kempner"]));
    assert!(!text.contains("kempner-u2"));
    assert_eq!(engel(&["paper-examples", "--only", "nope"]).status.code(), Some(2));
}

#[test]
fn out_file_and_sequence_input() {
    let dir = std::env::temp_dir().join(format!("engel-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ex1.seq");
    let p = path.to_str().unwrap();
    let out = engel(&["gen", "--z", "3,9,81,19683", "--n", "5", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let a = stdout(&engel(&["stream", "--seq", p, "--K", "10"]));
    assert_eq!(a, "[1;2,1,8,3,80,1,2,8,1,2]\n");
    let b = stdout(&engel(&["cf", "--seq", p, "--n", "4"]));
    assert_eq!(b, "[1;2,1,8,3,80,1,2,8,1,2]\n");

    std::fs::write(&path, "# engel-seq v1\n1\n3\n10\n").unwrap();
    assert_eq!(engel(&["stream", "--seq", p, "--K", "2"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["asymp", "--d1", "3", "--G", "1,1", "--n", "7", "--json"][..],
        &[
            "verify", "--suite", "generic", "--trials", "20", "--seed", "9", "--json",
        ],
        &["paper-examples", "--json"],
    ] {
        assert_eq!(engel(args).stdout, engel(args).stdout, "{args:?}");
    }
}
