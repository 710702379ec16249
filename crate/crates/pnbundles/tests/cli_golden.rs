//! Runs the `pnbundles` binary and compares it with direct library calls.

use std::collections::BTreeSet;
use std::process::{Command, Output};

use pnbundles::classifier::filter_chern;
use pnbundles::cohomtab::{bott, enumerate_spectra};
use pnbundles::monadlab::{display_omega321, monad_cohomology_table, parse_expr};
use serde_json::Value;

fn run(args: &[&str], env_format: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pnbundles"));
    cmd.args(args).env_remove("PNB_FORMAT");
    if let Some(f) = env_format {
        cmd.env("PNB_FORMAT", f);
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args, None);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn table(args: &[&str]) -> String {
    let mut full = vec!["--format", "table"];
    full.extend_from_slice(args);
    let out = run(&full, None);
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn ints(v: &Value) -> Vec<i64> {
    strs(v).iter().map(|x| x.parse().unwrap()).collect()
}

/// Numeric tokens (integers or `p/q`) of a text, split at whitespace and
/// the punctuation the table renderer uses.
fn numeric_tokens(s: &str) -> Vec<String> {
    s.split(|c: char| c.is_whitespace() || "(),:;".contains(c))
        .filter(|t| {
            let digits = |p: &str| !p.is_empty() && p.chars().all(|c| c.is_ascii_digit());
            let t = t.strip_prefix('-').unwrap_or(t);
            match t.split_once('/') {
                Some((p, q)) => digits(p) && digits(q),
                None => digits(t),
            }
        })
        .map(str::to_string)
        .collect()
}

fn json_numeric_tokens(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::String(s) => out.extend(numeric_tokens(s)),
        Value::Array(a) => a.iter().for_each(|x| json_numeric_tokens(x, out)),
        Value::Object(m) => m.values().for_each(|x| json_numeric_tokens(x, out)),
        _ => {}
    }
}

fn assert_formats_agree(args: &[&str]) {
    let env = json(args);
    let mut want = Vec::new();
    json_numeric_tokens(&env["result"], &mut want);
    let text = table(args);
    let body: String = text
        .lines()
        .filter(|l| !l.starts_with("command:") && !l.starts_with("provenance:"))
        .collect::<Vec<_>>()
        .join("\n");
    assert_eq!(numeric_tokens(&body), want, "{args:?}\n{text}");
}

#[test]
fn documented_examples() {
    let v = json(&["congr", "--c", "5,10,10,5"]);
    assert_eq!(v["result"], serde_json::json!({ "holds": true }));

    let v = json(&["spectrum", "enum", "--c2g", "4", "--c3g", "4"]);
    let got: BTreeSet<Vec<i64>> = v["result"]["spectra"].as_array().unwrap().iter().map(ints).collect();
    assert_eq!(got, [vec![0, -1, -1, -2], vec![-1, -1, -1, -1]].into_iter().collect());

    let v = json(&["omega", "horrocks", "--omega", "e0^e1+e2^e3+e4^e5", "--dim", "6"]);
    assert_eq!(v["result"]["epi"], Value::Bool(true));
}

#[test]
fn envelope_shape_and_round_trip() {
    let v = json(&["--window", "-2:1", "chern", "--expr", "2*O(1)+Om(1,2)", "--twist", "-1"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "result", "provenance"]);
    assert_eq!(v["command"], "chern");
    assert_eq!(v["inputs"]["global"]["window"], "-2:1");
    assert_eq!(v["inputs"]["args"]["twist"], "-1");
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn chern_matches_library() {
    for (n, e) in [("4", "2*O(1)+Om(1,2)"), ("5", "T(-1)+Om(1,2)"), ("6", "Om(4,5)"), ("4", "P(O(5))")] {
        let v = json(&["--n", n, "chern", "--expr", e]);
        let lib = parse_expr(e).unwrap().chern(n.parse().unwrap()).unwrap();
        assert_eq!(v["result"]["rank"], lib.rank().to_string());
        let c: Vec<String> = lib.classes().iter().map(|x| x.to_string()).collect();
        assert_eq!(strs(&v["result"]["c"]), c, "{e}");
    }
}

#[test]
fn bott_matches_library() {
    let v = json(&["--n", "5", "--window", "-8:3", "bott", "--p", "2", "--twist", "1"]);
    for row in v["result"].as_array().unwrap() {
        let l: i64 = row["l"].as_str().unwrap().parse().unwrap();
        let lib = bott(5, 2, l + 1).unwrap();
        for (q, h) in lib.iter().enumerate() {
            assert_eq!(row[format!("h{q}")], h.to_string(), "l={l} q={q}");
        }
    }
}

#[test]
fn spectra_match_library() {
    let v = json(&["spectrum", "enum", "--c2g", "3", "--c3g", "-1", "--nonpositive"]);
    let lib: Vec<Vec<i64>> = enumerate_spectra(3, -1, true).unwrap().iter().map(|s| s.values().to_vec()).collect();
    let got: Vec<Vec<i64>> = v["result"]["spectra"].as_array().unwrap().iter().map(ints).collect();
    assert_eq!(got, lib);
}

#[test]
fn monad_matches_library() {
    let v = json(&["--window", "-4:1", "monad", "--left", "Om(3,3)", "--middle", "Om(2,2)+Om(1,1)", "--twist", "1"]);
    assert_eq!(strs(&v["result"]["bundle"]["c"]), ["5", "12", "16", "8"]);
    let lib = monad_cohomology_table(&display_omega321().twist(1), 4, -4, 1).unwrap();
    for row in v["result"]["table"].as_array().unwrap() {
        let l: i64 = row["l"].as_str().unwrap().parse().unwrap();
        for q in 0..=4 {
            assert_eq!(row[format!("h{q}")], lib.get(q, l).unwrap().to_string(), "l={l} q={q}");
        }
    }
}

#[test]
fn classify_and_verify_match_library() {
    let v = json(&["classify"]);
    let got: BTreeSet<(i64, i64, i64)> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let f = |k: &str| r[k].as_str().unwrap().parse::<i64>().unwrap();
            (f("c2"), f("c3"), f("c4"))
        })
        .collect();
    let lib: BTreeSet<(i64, i64, i64)> = filter_chern(4, 0..=12).unwrap().into_iter().collect();
    assert_eq!(got, lib);
    assert_eq!(json(&["verify"])["result"]["passed"], Value::Bool(true));
}

#[test]
fn table_and_json_agree() {
    assert_formats_agree(&["chern", "--expr", "2*O(1)+Om(1,2)"]);
    assert_formats_agree(&["pfun", "--c", "5,12,16,8", "--rank", "6", "--h0", "15"]);
    assert_formats_agree(&["--window", "-6:2", "chi", "--c", "5,12,16,8", "--rank", "6"]);
    assert_formats_agree(&["--window", "-5:1", "bott", "--p", "1", "--twist", "2"]);
    assert_formats_agree(&["spectrum", "enum", "--c2g", "4", "--c3g", "4"]);
    assert_formats_agree(&["spectrum", "cohom", "--k", "1,0,0,-1", "--l", "-2"]);
    assert_formats_agree(&["--n", "3", "h1", "--c2", "12", "--c3", "16", "--h0", "2"]);
    assert_formats_agree(&["--window", "-4:0", "monad", "--left", "Om(3,3)", "--middle", "Om(2,2)+Om(1,1)", "--twist", "1"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(64));
    assert_eq!(run(&["chern", "--c", "1,x"], None).status.code(), Some(2));
    assert_eq!(run(&["--window", "3:1", "bott", "--p", "1"], None).status.code(), Some(2));
    assert_eq!(run(&["--help"], None).status.code(), Some(0));

    // a library error still yields a JSON error envelope
    let out = run(&["omega", "horrocks", "--omega", "e0^e1+e2", "--dim", "6"], None);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "omega horrocks");
    assert!(v["error"]["message"].as_str().is_some());
    assert!(!out.stderr.is_empty());
}

#[test]
fn format_from_environment() {
    let args = ["congr", "--c", "5,10,10,5"];
    let t = run(&args, Some("table"));
    assert_eq!(t.status.code(), Some(0));
    assert!(String::from_utf8(t.stdout).unwrap().contains("holds: true"));
    let j = run(&args, Some("json"));
    assert!(serde_json::from_slice::<Value>(&j.stdout).is_ok());
    // an explicit flag wins over the environment
    let f = run(&["--format", "json", "congr", "--c", "5,10,10,5"], Some("table"));
    assert!(serde_json::from_slice::<Value>(&f.stdout).is_ok());
    assert_eq!(run(&args, Some("xml")).status.code(), Some(2));
}
