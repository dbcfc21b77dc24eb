use std::process::{Command, Output};

fn qrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrep"))
        .args(args)
        .env_remove("QREP_CAP_RESOLUTION")
        .env_remove("QREP_CAP_KNIT")
        .env_remove("QREP_CAP_ADMISSIBILITY")
        .output()
        .expect("qrep runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn demo_succeeds() {
    let o = qrep(&["paper-demo", "paper_A.alg"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = stdout(&o);
    assert!(text.contains("certified by both modes"));
    assert!(text.contains("a=0, p=2, m=2"));
}

#[test]
fn demo_json() {
    let o = qrep(&["paper-demo", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["list"]["result"], true);
    assert_eq!(v["endo"]["evidence"]["global_dimension"]["value"], 3);
    assert_eq!(v["endo"]["evidence"]["dominant_dimension"]["value"], 3);
    assert_eq!(v["complexity_s2"]["kind"], "infinite_certified");
    assert_eq!(v["complexity_s2"]["m"], 2);
}

#[test]
fn demo_mismatch_exits_3() {
    let o = qrep(&["paper-demo", "linear_A2.alg"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn ext_of_da_into_a_vanishes() {
    let o = qrep(&["ext", "1", "DA", "A"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let o = qrep(&["ext", "1", "A+DA", "S2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn ar_quiver_as_dot() {
    let o = qrep(&["ar-knit", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph ar_quiver {"));
    assert!(dot.trim_end().ends_with('}'));
    let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
    let dashed = dot
        .lines()
        .filter(|l| l.contains("->") && l.contains("style=dashed"))
        .count();
    let solid = dot
        .lines()
        .filter(|l| l.contains("->") && !l.contains("style=dashed"))
        .count();
    assert_eq!((nodes, solid, dashed), (9, 12, 6));
}

#[test]
fn output_is_deterministic() {
    let a = qrep(&["ar-knit", "--format", "json"]);
    let b = qrep(&["ar-knit", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
    assert_eq!(v["complete"], true);
}

#[test]
fn translates_and_resolutions() {
    assert_eq!(
        stdout(&qrep(&["tau", "I1"])).split_whitespace().nth(2),
        Some("S3")
    );
    let o = stdout(&qrep(&["tau-inv", "A"]));
    assert!(o.contains("S1 + S2 + S3"), "{o}");
    let o = stdout(&qrep(&["resolve", "S2", "4"]));
    assert!(o.contains("P_2 = P2^2  (dim 6)"), "{o}");
    let o = stdout(&qrep(&["complexity", "S2", "12"]));
    assert!(o.contains("exact growth: exponential"), "{o}");
    let o = stdout(&qrep(&["gldim", "--alg", "paper_B.alg"]));
    assert_eq!(o.trim(), "3");
    let o = stdout(&qrep(&["domdim"]));
    assert_eq!(o.trim(), "0");
}

#[test]
fn cluster_checks() {
    let o = qrep(&["cluster-check", "--mode", "list", "--n", "2", "A+DA"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is 2-cluster tilting"));
    let o = qrep(&["cluster-check", "--mode", "list", "--n", "2", "A+DA+S2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("is not 2-cluster tilting"));
    let o = qrep(&["cluster-check", "--mode", "endo", "--n", "2", "A"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("generator-cogenerator"));
}

#[test]
fn emitted_presentation_reparses() {
    let o = qrep(&["endo", "A+DA"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("qrep-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("endo.alg");
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let basis = stdout(&qrep(&["basis", "--alg", p]));
    assert!(basis.starts_with("dimension 27"), "{basis}");
    assert_eq!(stdout(&qrep(&["gldim", "--alg", p])).trim(), "3");
    let again = qrep(&["endo", "A", "--alg", p]);
    assert_eq!(again.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rep_files_and_fields() {
    let dir = std::env::temp_dir().join(format!("qrep-cli-rep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.rep");
    std::fs::write(
        &path,
        "module X over paper_A.alg\ndim 1 1 0\nmap alpha = [[1]]\n",
    )
    .unwrap();
    let p = path.to_str().unwrap();
    let o = qrep(&["hom", "X", "P1", "--rep", p]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("dim Hom(X, P1) = 1"));
    let o = qrep(&["ext", "1", "S2", "S1", "--field", "F5"]);
    assert_eq!(stdout(&o).trim(), "1");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn error_exit_codes() {
    let dir = std::env::temp_dir().join(format!("qrep-cli-err-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.alg");
    std::fs::write(
        &bad,
        "field Q\nquiver\n  vertices 2\n  arrow a : 1 -> 2\nrelations\n  a*b\n",
    )
    .unwrap();
    let o = qrep(&["basis", "--alg", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 6"));
    assert_eq!(qrep(&["hom", "S9", "S1"]).status.code(), Some(2));
    assert_eq!(qrep(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(qrep(&["gldim", "--format", "dot"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn caps_come_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_qrep"))
        .args(["ar-knit"])
        .env("QREP_CAP_KNIT", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap 4"));
}

#[test]
fn demo_in_small_characteristic() {
    for f in ["F2", "F3"] {
        let o = qrep(&["paper-demo", "--field", f]);
        assert_eq!(o.status.code(), Some(0), "field {f}");
    }
}
