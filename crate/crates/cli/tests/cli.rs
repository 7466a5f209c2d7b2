use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn dagfem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dagfem"))
        .current_dir(data())
        .args(args)
        .output()
        .expect("dagfem runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn expect(args: &[&str], code: i32) -> Value {
    let out = dagfem(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    report(&out)
}

#[test]
fn valid_inputs_pass() {
    let r = expect(&["validate", "category", "z2.json"], 0);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["result"]["morphisms"], 2);
    assert_eq!(r["inputs"][0]["path"], "./z2.json");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    expect(&["validate", "functor", "swap.json"], 0);
    expect(&["validate", "monad", "ts-monad.json"], 0);
    expect(&["validate", "2category", "sigma-z2.json"], 0);
    expect(&["validate", "laxfunctor", "lax-sigma.json"], 0);
}

#[test]
fn law_checks_pass_on_the_swap_monad() {
    let r = expect(&["check", "frobenius", "ts-monad.json"], 0);
    assert_eq!(r["result"]["frobenius"], true);
    expect(
        &[
            "check",
            "th1",
            "--arg-category",
            "z2.json",
            "--monad",
            "ts-monad.json",
        ],
        0,
    );
    expect(
        &[
            "check",
            "fk-universal",
            "--arg-category",
            "unit-iso.json",
            "--monad",
            "ts-monad.json",
        ],
        0,
    );
    expect(
        &[
            "check",
            "fem-algebra",
            "ts-monad.json",
            "--object",
            "*",
            "--structure",
            "s",
        ],
        0,
    );
}

#[test]
fn two_dimensional_checks_pass() {
    for doc in ["universal2-fem.json", "universal2-kleisli.json"] {
        expect(&["check", "universal2", doc], 0);
    }
    expect(&["check", "fem-object", "fem-object.json"], 0);
    expect(&["check", "eta-commutation", "fem-object.json"], 0);
    expect(&["check", "pairs", "pairs.json"], 0);
    expect(&["check", "lax-limit", "lax-limit.json"], 0);
}

#[test]
fn enumerations_agree_with_the_oracle() {
    let r = expect(&["enumerate", "monads", "builtin:REL2"], 0);
    assert_eq!(r["result"]["count"], 2);
    expect(&["enumerate", "functors", "z2.json", "unit-iso.json"], 0);
    let r = expect(&["enumerate", "algebras", "ts-monad.json"], 0);
    assert_eq!(r["result"]["count"], 1);
}

#[test]
fn builds_emit_tables() {
    let r = expect(&["build", "fem", "ts-monad.json"], 0);
    assert_eq!(r["result"]["algebras"], serde_json::json!(["*:s"]));
    expect(&["build", "kleisli", "ts-monad.json"], 0);
    for kind in ["dfmnd", "fk-completion", "fem-completion"] {
        let r = expect(&["build", kind, "builtin:SIGMA_Z2"], 0);
        assert!(r["result"]["two_category"].is_object());
    }
}

#[test]
fn failures_carry_witnesses() {
    let r = expect(
        &[
            "check",
            "fem-algebra",
            "ts-monad.json",
            "--object",
            "*",
            "--structure",
            "1",
        ],
        1,
    );
    assert_eq!(r["verdict"], "fail");
    assert!(!r["witnesses"].as_array().unwrap().is_empty());
    let r = expect(&["check", "monadic", "isometry-adjunction.json"], 1);
    assert_eq!(r["witnesses"][0]["check"], "monadicity");
    expect(&["check", "comparison", "isometry-adjunction.json"], 0);
}

#[test]
fn malformed_input_is_an_error() {
    let r = expect(&["validate", "category", "broken-dagger.json"], 2);
    assert_eq!(r["verdict"], "error");
    assert!(r["error"].as_str().unwrap().contains("dagger"));
    expect(&["validate", "category", "missing.json"], 2);
    expect(&["validate", "category", "builtin:NOPE"], 2);
    expect(&["check", "th1", "--monad", "ts-monad.json"], 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    for args in [
        &["enumerate", "monads", "builtin:UNIT_ISO"][..],
        &["build", "fem-completion", "sigma-z2.json"],
    ] {
        let a = strip(report(&dagfem(args)));
        let b = strip(report(&dagfem(args)));
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn regen_golden_writes_every_fixture() {
    let dir = std::env::temp_dir().join(format!("dagfem-golden-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let r = expect(&["oracle", "regen-golden", "--golden-dir", d], 0);
    assert_eq!(r["result"]["written"].as_array().unwrap().len(), 5);
    let one: Value =
        serde_json::from_slice(&std::fs::read(dir.join("monads_ONE.json")).unwrap()).unwrap();
    assert_eq!(one["count"], 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
