use std::path::{Path, PathBuf};
use std::process::Command;

fn gdlab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gdlab"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn temp(name: &str, contents: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("gdlab-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = gdlab(&["check", "examples/gd_novikov_type.json", "--kind", "gd-bialg"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: pass"));

    let mutated = temp(
        "mutant.json",
        r#"{"dim": 2, "circ": [[1, 2, 2, 1, 1], [2, 2, 1, 1, 1]], "delta0": [[2, 1, 2, 1, 1], [2, 2, 1, -1, 1]]}"#,
    );
    let (code, out, _) = gdlab(&["check", path(&mutated), "--kind", "gd-bialg"]);
    assert_eq!(code, 1);
    assert!(out.contains("violation: novikov.left-symmetry at ("), "{out}");

    let broken = temp("broken.json", r#"{"dim": 2, "circ": [[1, 2"#);
    let (code, _, err) = gdlab(&["check", path(&broken), "--kind", "gd"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: parse error"));

    let unknown = temp("unknown.json", r#"{"dim": 2, "cric": []}"#);
    assert_eq!(gdlab(&["check", path(&unknown), "--kind", "gd"]).0, 2);
    assert_eq!(gdlab(&["check", "examples/gd_novikov_type.json", "--kind", "no-such-kind"]).0, 2);
}

#[test]
fn check_json_report() {
    let (code, out, _) = gdlab(&["check", "examples/novikov_bialgebra_2d.json", "--kind", "novikov-bialg", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["violations"][0]["axiom"], "novikov-bialgebra.coproduct-of-product");
    assert_eq!(v["violations"][0]["witness"], serde_json::json!([1, 1]));
}

#[test]
fn check_kinds_dispatch() {
    for (file, kind, code) in [
        ("examples/gd_lie_type.json", "lie-bialg", 0),
        ("examples/gd_lie_type.json", "gd", 0),
        ("examples/gd_lie_type.json", "conformal", 0),
        ("examples/gd_lie_type.json", "conformal-bialg", 0),
        ("examples/gd_novikov_type.json", "novikov", 0),
        ("examples/gd_novikov_type.json", "lie-coalg", 0),
        ("examples/zinbiel3.json", "zinbiel", 1),
        ("examples/zinbiel3_corrected.json", "zinbiel", 0),
    ] {
        assert_eq!(gdlab(&["check", file, "--kind", kind]).0, code, "{file} {kind}");
    }
    // Missing sections are input errors.
    assert_eq!(gdlab(&["check", "examples/gd_lie_type.json", "--kind", "rep"]).0, 2);
    assert_eq!(gdlab(&["check", "examples/gd_lie_type.json", "--kind", "quadratic"]).0, 2);
}

#[test]
fn check_representation_kinds() {
    let f = temp(
        "rep.json",
        r#"{"dim": 1, "circ": [[1, 1, 1, 1, 1]],
            "rep": {"l": [[[1]]], "r": [[[1]]], "rho": [[[0]]]},
            "T": [[1]], "form": [[1]], "r": [[1, 1, 1, 1]]}"#,
    );
    assert_eq!(gdlab(&["check", path(&f), "--kind", "rep"]).0, 0);
    assert_eq!(gdlab(&["check", path(&f), "--kind", "o-operator"]).0, 1);
    assert_eq!(gdlab(&["check", path(&f), "--kind", "conformal-o-operator"]).0, 1);
    let (code, out, _) = gdlab(&["check", path(&f), "--kind", "gdybe"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("skew: no"));
}

#[test]
fn construct_print() {
    let (code, out, _) = gdlab(&["construct", "affinize", "examples/gd_novikov_type.json", "--print"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "[e1 _λ e2] = λ e2"), "{out}");

    let (_, out, _) =
        gdlab(&["construct", "pipeline-zinbiel", "examples/zinbiel3.json", "--xi", "0", "--k", "1", "--print"]);
    assert!(out.lines().any(|l| l == "[e1 _λ e1] = 2(∂+2λ) e2"), "{out}");

    let (code, out, _) = gdlab(&["construct", "cobracket", "examples/gd_lie_type.json"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "δ(e2) = ∂e1⊗e2 − e2⊗∂e1"));
}

#[test]
fn construct_files() {
    let out1 = std::env::temp_dir().join(format!("gdlab-{}-double.json", std::process::id()));
    let (code, _, _) = gdlab(&["construct", "double", "examples/novikov_bialgebra_2d.json", "-o", path(&out1)]);
    assert_eq!(code, 1, "double of a failing bialgebra");
    let (code, _, _) = gdlab(&["construct", "double", "examples/gd_lie_type.json", "-o", path(&out1)]);
    assert_eq!(code, 0);
    assert_eq!(gdlab(&["check", path(&out1), "--kind", "quadratic"]).0, 0);

    let d1 = std::env::temp_dir().join(format!("gdlab-{}-dual1.json", std::process::id()));
    let d2 = std::env::temp_dir().join(format!("gdlab-{}-dual2.json", std::process::id()));
    assert_eq!(gdlab(&["construct", "dualize", "examples/gd_novikov_type.json", "-o", path(&d1)]).0, 0);
    assert_eq!(gdlab(&["construct", "dualize", path(&d1), "-o", path(&d2)]).0, 0);
    let original = gdlab::cli::format::StructureFile::load("examples/gd_novikov_type.json".as_ref()).unwrap();
    let mut back = gdlab::cli::format::StructureFile::load(&d2).unwrap();
    back.basis = None;
    assert_eq!(back, original);

    let r = temp(
        "coboundary.json",
        r#"{"dim": 2, "bracket": [[1, 2, 2, 1, 1], [2, 1, 2, -1, 1]], "r": [[1, 2, 1, 1], [2, 1, -1, 1]]}"#,
    );
    let (code, out, _) = gdlab(&["construct", "coboundary", path(&r), "--print"]);
    assert_eq!(code, 0, "{out}");

    let sd = temp(
        "semidirect.json",
        r#"{"dim": 1, "circ": [[1, 1, 1, 1, 1]], "rep": {"l": [[[1]]], "r": [[[1]]], "rho": [[[0]]]}}"#,
    );
    let (code, out, _) = gdlab(&["construct", "semidirect", path(&sd), "--print"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "e1∘v1 = v1"), "{out}");
}

#[test]
fn search_command() {
    let (code, out, _) = gdlab(&["search", "examples/gd_novikov_type.json", "--coeffs=-1,0,1", "--skew"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "r = 0"));
    assert!(!out.lines().any(|l| l == "r = e1⊗e2 − e2⊗e1"));

    let big = temp("dim5.json", r#"{"dim": 5}"#);
    assert_eq!(gdlab(&["search", path(&big), "--skew"]).0, 2);
    let non_gd = temp("nongd.json", r#"{"dim": 2, "circ": [[1, 1, 2, 1, 1], [2, 2, 1, 1, 1]]}"#);
    assert_eq!(gdlab(&["search", path(&non_gd), "--skew"]).0, 2);

    let (_, out, _) = gdlab(&["search", "examples/zinbiel3.json", "--skew", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["solutions"].as_array().unwrap().len(), 27);
}

#[test]
fn examples_command() {
    let (code, out, _) = gdlab(&["examples", "list"]);
    assert_eq!(code, 0);
    for e in gdlab::cli::registry::REGISTRY {
        assert!(out.contains(e.name));
    }

    let (_, out, _) = gdlab(&["examples", "run", "conformal-novikov-2d"]);
    assert!(out.contains("golden: match"));
    assert!(out.lines().any(|l| l == "[e1 _λ e1] = (∂+2λ) e1"));

    let (_, out, _) = gdlab(&["examples", "run", "zinbiel-pipeline", "--xi", "0", "--k", "1"]);
    assert!(out.contains("golden: match"));
    assert!(out
        .lines()
        .any(|l| l == "δ(e3*) = 2(e2*⊗e1* − e1*⊗e2*) − 4(∂e1*⊗e2* − e2*⊗∂e1*) − 2(∂e2*⊗e1* − e1*⊗∂e2*)"));

    let (code, out, _) = gdlab(&["examples", "run", "gd-novikov-type"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("result: ok\n"));
    assert_eq!(gdlab(&["examples", "run", "mutant-lie-type-bracket"]).0, 0);
    assert_eq!(gdlab(&["examples", "run", "no-such-example"]).0, 2);
}

#[test]
fn suites_respect_seed() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_gdlab")).arg("suites").env("GDLAB_SEED", seed).output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    let (code, a) = run("7");
    assert_eq!(code, Some(0), "{a}");
    assert!(a.starts_with("seed: 7\n"));
    assert_eq!(run("7").1, a);
    assert_eq!(run("x").0, Some(2));
}
