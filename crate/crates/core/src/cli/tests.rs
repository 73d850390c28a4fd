use super::run;

fn go(args: &[&str]) -> (i32, String, String) {
    let mut v = vec!["eqcurve"];
    v.extend_from_slice(args);
    run(v)
}

#[test]
fn embed_two_points() {
    let (code, out, _) = go(&["embed", "--lambda", "[1:1],[-1:1]"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("## tau"));
    assert!(out.contains("[[1, 0], [0, -1]] -> [[1, 0, 0], [0, -1, 0], [0, 0, -1]]"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn plane_extend_obstructed() {
    let (code, out, _) = go(&["plane-extend", "--lambda", "[0:1],[1:1],[1:0]", "--g", "[[0,1],[-1,1]]"]);
    assert_eq!(code, 0);
    assert!(out.contains("obstructed"), "{out}");
}

#[test]
fn plane_extend_constructs_for_involution() {
    let (code, out, _) = go(&["plane-extend", "--lambda", "[1:1],[-1:1],[2:1],[-2:1]", "--g", "[[-1,0],[0,1]]"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("extendable"), "{out}");
}

#[test]
fn malformed_input_is_exit_2() {
    assert_eq!(go(&["planar-normalize", "--P", "x^2+", "--Q", "0", "--R", "0"]).0, 2);
    assert_eq!(go(&["embed", "--lambda", "[1:1"]).0, 2);
    assert_eq!(go(&["preset", "--kind", "octagonal:3", "--params", "1,1"]).0, 2);
    assert_eq!(go(&["embed"]).0, 2);
    assert_eq!(go(&["nonsense"]).0, 2);
}

#[test]
fn construction_errors_are_exit_3() {
    // duplicate point
    assert_eq!(go(&["embed", "--lambda", "[1:1],[2:2]"]).0, 3);
    // x -> -x does not preserve {1, 2}
    assert_eq!(go(&["embed", "--lambda", "[1:1],[2:1]", "--group", "cyclic:2"]).0, 3);
    // non-squarefree P
    assert_eq!(go(&["planar-normalize", "--P", "x^2", "--Q", "x", "--R", "0"]).0, 3);
    // conductor cap exceeded inside arithmetic
    let (code, _, err) = go(&["--conductor-cap", "2", "preset", "--kind", "cyclic:7", "--params", "1,1"]);
    assert_eq!(code, 3);
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn failing_certificate_is_exit_1() {
    let (code, out, _) = go(&["verify-extension", "--F", "(Z, Y, X)", "--tau", "(x, 1/(x*(x-1)), 0)", "--phi", "[[1,0],[0,1]]"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL X"));
    let (code, _, _) = go(&["verify-extension", "--F", "(X, Y, Z)", "--tau", "(x, 1/(x*(x-1)), 0)", "--phi", "[[1,0],[0,1]]"]);
    assert_eq!(code, 0);
}

#[test]
fn every_command_runs() {
    let cases: &[&[&str]] = &[
        &["aut", "--lambda", "[1:1],[-1:1],[0:1],[1:0]"],
        &["delta", "--lambda", "[0:1],[1:0]", "--group", "cyclic:3"],
        &["preset", "--kind", "tetrahedral", "--params", "1,0"],
        &["preset", "--kind", "dihedral:3", "--params", "(1,2);(1,3)"],
        &["planar-normalize", "--P", "x^2-x", "--Q", "x", "--R", "1/(x^2-x)"],
        &["cor25", "--k", "3", "--a", "1,2,5"],
    ];
    for c in cases {
        let (code, out, err) = go(c);
        assert_eq!(code, 0, "{c:?}: {out}{err}");
    }
}

#[test]
fn json_mirrors_text() {
    let args = ["embed", "--lambda", "[1:1],[-1:1]", "--format", "json"];
    let (code, out, _) = go(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["command"], "embed");
    let (_, text, _) = go(&args[..3]);
    for sec in v["sections"].as_array().unwrap() {
        assert!(text.contains(sec["body"].as_str().unwrap().trim_end()));
    }
    let clauses: usize = v["certificates"].as_array().unwrap().iter().map(|c| c["clauses"].as_array().unwrap().len()).sum();
    assert_eq!(text.matches("  PASS ").count(), clauses);
}

#[test]
fn output_is_deterministic() {
    let args = ["preset", "--kind", "dihedral:4", "--params", "1,2;3,-1", "--certificate"];
    let a = go(&args);
    let b = go(&args);
    assert_eq!(a, b);
}
