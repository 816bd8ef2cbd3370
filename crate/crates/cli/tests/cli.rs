use std::process::{Command, Output};

use arbor_hopf::coeff::{from_json, parse_combination, Element, TensorElement};
use arbor_hopf::prelie::DualElement;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbor-hopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn connes_kreimer_edge() {
    let text = stdout(&["coproduct", "--n", "1", "--q", "1,0", "[1:[]]"]);
    let d: TensorElement = parse_combination(&text).unwrap();
    let expected: TensorElement = parse_combination("[1:[]] ⊗ 1 + 1 ⊗ [1:[]] + [] ⊗ []").unwrap();
    assert_eq!(d, expected);
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&["enumerate", "--n", "1", "--vertices", "5", "--count"]), "9");
    assert_eq!(stdout(&["enumerate", "--n", "2", "--vertices", "3", "--count"]), "7");
    assert_eq!(
        stdout(&["enumerate", "--vertices", "5", "--count", "--variant", "planar"]),
        "14"
    );
    let listed = stdout(&["enumerate", "--vertices", "3"]);
    assert_eq!(listed.lines().collect::<Vec<_>>(), vec!["[1:[],1:[]]", "[1:[1:[]]]"]);
}

#[test]
fn verify_exit_status() {
    assert_eq!(code(&["verify", "--n", "2", "--q", "sym", "--max-degree", "3"]), 0);
    assert_eq!(
        code(&[
            "verify",
            "--n",
            "1",
            "--q",
            "2,-1/3",
            "--max-degree",
            "4",
            "--seed",
            "9"
        ]),
        0
    );
    assert_eq!(
        code(&["verify", "--n", "2", "--max-degree", "3", "--variant", "planar"]),
        0
    );
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&["coproduct", "[1:"]), 2);
    assert_eq!(code(&["coproduct", "--q", "1,x", "[]"]), 2);
    assert_eq!(code(&["coproduct", "--n", "1", "[2:[]]"]), 5);
    assert_eq!(code(&["coproduct", "--n", "2", "--q", "1,0", "[]"]), 5);
    assert_eq!(code(&["bullet", "[1:[]]", "[1:[]]", "--budget", "3"]), 4);
    assert_eq!(code(&["simplicial", "--n", "2", "--face", "3", "[]"]), 2);
}

#[test]
fn json_and_text_agree() {
    for args in [
        vec!["coproduct", "--n", "2", "[1:[2:[]]]*[]"],
        vec!["antipode", "--n", "2", "[1:[],2:[]]", "--partitions"],
    ] {
        let text = stdout(&args);
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let value: serde_json::Value = serde_json::from_str(&stdout(&json_args)).unwrap();
        if args[0] == "coproduct" {
            let a: TensorElement = parse_combination(&text).unwrap();
            assert_eq!(a, from_json(&value).unwrap());
        } else {
            let a: Element = parse_combination(&text).unwrap();
            assert_eq!(a, from_json(&value).unwrap());
        }
    }
    let text = stdout(&["bullet", "--q", "1,0", "[1:[]]", "[]"]);
    let value: serde_json::Value =
        serde_json::from_str(&stdout(&["bullet", "--q", "1,0", "[1:[]]", "[]", "--format", "json"])).unwrap();
    let a: DualElement = parse_combination(&text).unwrap();
    assert_eq!(a, from_json(&value).unwrap());
    assert_eq!(a, parse_combination("[1:[1:[]]] + 2 [1:[],1:[]]").unwrap());
}

#[test]
fn output_is_deterministic() {
    let args = ["antipode", "--n", "2", "[1:[1:[]],2:[]]"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn other_subcommands() {
    assert_eq!(stdout(&["phi", "--n", "2", "[]"]), "1 (1)[] + 1 (2)[]");
    assert_eq!(
        stdout(&["simplicial", "--n", "2", "--face", "1", "[1:[],2:[]]"]),
        "1 [1:[],1:[]]"
    );
    assert_eq!(
        stdout(&["simplicial", "--n", "1", "--degeneracy", "0", "[1:[]]"]),
        "1 [2:[]]"
    );
    assert_eq!(
        stdout(&["bullet", "--prime", "[1:[]]", "[]"]),
        "1 [1:[],1:[]] + 1 [1:[1:[]]]"
    );
    assert_eq!(stdout(&["bracket", "--q", "1,0", "[]", "[]"]), "0");
    let bracket = stdout(&["bracket", "--q", "1,0", "[]", "[1:[]]"]);
    let opposite = stdout(&["bracket", "--q", "1,0", "[]", "[1:[]]", "--opposite"]);
    let b: DualElement = parse_combination(&bracket).unwrap();
    let o: DualElement = parse_combination(&opposite).unwrap();
    assert_eq!(b, o.neg());
    let planar = stdout(&["coproduct", "--variant", "planar", "--inductive", "[2:[]]", "--n", "2"]);
    assert_eq!(
        planar,
        stdout(&["coproduct", "--variant", "planar", "[2:[]]", "--n", "2"])
    );
}
