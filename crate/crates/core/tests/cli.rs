use std::path::PathBuf;
use std::process::Command;

fn greedoid(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_greedoid")).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (out, err, code) = greedoid(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("greedoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn greedy_and_brute_force_on_fig1() {
    assert_eq!(stdout_ok(&["greedy", "--fixture", "fig1"]), "base=a,c value=3\norder=a,c\n");
    assert_eq!(stdout_ok(&["brute-opt", "--fixture", "fig1"]), "base=b,c value=4\n");
}

#[test]
fn path_sum_counterexample() {
    let args = ["--fixture", "lpg_counterexample", "--objective", "path-sum", "--direction", "min"];
    let greedy = stdout_ok(&[&["greedy"], &args[..]].concat());
    assert!(greedy.starts_with("base=x,y,z value=10\n"), "{greedy}");
    let opt = stdout_ok(&[&["brute-opt"], &args[..]].concat());
    assert_eq!(opt, "base=x,z,u value=9\n");
}

#[test]
fn classification_reports() {
    let out = stdout_ok(&["classify", "--fixture", "shadow_strict"]);
    assert!(out.contains("class=local_poset\n") && out.contains("has_lfp=false\n"), "{out}");
    assert!(stdout_ok(&["classify", "--fixture", "k3"]).starts_with("class=local_forest\n"));
}

#[test]
fn shadow_and_polytope() {
    assert_eq!(
        stdout_ok(&["shadow", "--fixture", "shadow_strict"]),
        "elements=a,b,c,d\nbase=a,b,c shadow=2,2,1,0\nbase=a,c,d shadow=3,0,1,2\n"
    );
    let out = stdout_ok(&[
        "polytope-check",
        "--fixture",
        "shadow_strict",
        "--point",
        "a=2,b=1,c=1,d=1",
        "--coeffs",
        "a=2,b=1,c=0,d=0",
        "--bound",
        "6",
    ]);
    assert!(out.contains("member_of_Q=true"), "{out}");
    assert!(out.contains("inequality_valid_on_shadow_vertices=true"), "{out}");
    assert!(out.contains("point_satisfies_inequality=false"), "{out}");

    let (out, _, code) = greedoid(&["polytope-check", "--fixture", "shadow_strict", "--point", "a=0,b=0,c=0,d=0"]);
    assert_eq!(code, 2);
    assert!(out.contains("member_of_Q=false"), "{out}");
}

#[test]
fn dual_certificate_verifies() {
    let out = stdout_ok(&["dual-cert", "--fixture", "fig1", "--verify"]);
    assert!(out.contains("objective=3\n") && out.contains("strong_duality=true\n"), "{out}");
    let (_, err, code) = greedoid(&["dual-cert", "--fixture", "lpg_counterexample"]);
    assert_eq!(code, 1);
    assert!(err.contains("local forest"), "{err}");
}

#[test]
fn game_value_with_oracle() {
    let out = stdout_ok(&["game-value", "--fixture", "fig1", "--oracle"]);
    assert!(out.starts_with("value=1 U=a,b\n"), "{out}");
    assert!(out.contains("agree=true\n") && out.contains("mixes_verified=true\n"), "{out}");
    assert_eq!(stdout_ok(&["game-value", "--fixture", "single"]), "value=1 U=e\n");
    assert!(stdout_ok(&["game-value", "--fixture", "k3"]).starts_with("value=2/3 "));
    assert_eq!(stdout_ok(&["strength", "--fixture", "k3"]), "strength=3/2\n");
}

#[test]
fn condition_checks_exit_with_violation_code() {
    let (out, _, code) = greedoid(&["check-conditions", "--fixture", "fig1", "--which", "c6"]);
    assert_eq!(code, 2);
    assert_eq!(out, "condition=c6 holds=false\nwitness A= B=b,c x=a\n");
    let (out, _, code) = greedoid(&["check-conditions", "--fixture", "fig1", "--which", "kl"]);
    assert_eq!(code, 2);
    assert!(out.contains("condition=1"), "{out}");
    assert_eq!(stdout_ok(&["check-strong-exchange", "--fixture", "fig1"]), "strong_exchange=true\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["greedy", "--fixture", "fig2", "--objective", "path-sum", "--direction", "min", "--all-runs"][..],
        &["game-value", "--fixture", "fig2", "--oracle"][..],
        &["dual-cert", "--fixture", "fig2", "--verify"][..],
    ] {
        assert_eq!(stdout_ok(args), stdout_ok(args));
    }
}

#[test]
fn fixture_round_trip_through_a_file() {
    let text = stdout_ok(&["fixtures", "--show", "fig2"]);
    let path = temp_file("fig2.toml", &text);
    let path = path.to_str().unwrap();
    for cmd in [&["greedy", "--objective", "path-sum", "--direction", "min"][..], &["shadow"][..], &["classify"][..]] {
        let from_file = stdout_ok(&[cmd, &[path]].concat());
        let from_fixture = stdout_ok(&[cmd, &["--fixture", "fig2"]].concat());
        assert_eq!(from_file, from_fixture);
    }
}

#[test]
fn hand_written_instance() {
    let text = "#greedoid-instance v1\n\
        [greedoid]\n\
        kind = \"uniform_matroid\"\n\
        n = 3\n\
        k = 2\n\
        labels = [\"p\", \"q\", \"r\"]\n\
        \n\
        [weights.c]\n\
        p = \"1/2\"\n\
        q = \"3\"\n\
        r = \"2\"\n";
    let path = temp_file("u32.toml", text);
    let out = stdout_ok(&["greedy", path.to_str().unwrap(), "--objective", "linear", "--direction", "max"]);
    assert_eq!(out, "base=q,r value=5\norder=q,r\n");
}

#[test]
fn errors_and_usage() {
    let (_, err, code) = greedoid(&["greedy", "/nonexistent/instance.toml"]);
    assert_eq!(code, 1);
    assert!(err.contains("/nonexistent/instance.toml"), "{err}");

    let bad = temp_file("bad.toml", "#greedoid-instance v1\n[greedoid]\nkind = \"explicit\"\nelements = [\"a\"\n");
    let (_, err, code) = greedoid(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line"), "{err}");

    let (_, err, code) = greedoid(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(err.contains("frobnicate"), "{err}");
    let (_, _, code) = greedoid(&["greedy", "--fixture", "nope"]);
    assert_eq!(code, 1);
    let (out, _, code) = greedoid(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}
