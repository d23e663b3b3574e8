use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn prefixdp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prefixdp")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_examples() {
    let v = json(&prefixdp(&["solve", "--problem", "huffman", "--radix", "2", "--weights", "3 2 1 1"]));
    assert_eq!(v["cost"], 13);
    assert_eq!(v["problem"], "huffman");
    assert_eq!(v["n"], 4);

    let v = json(&prefixdp(&[
        "solve", "--problem", "reserved-given", "--radix", "2", "--lengths", "2", "--weights", "1 2 3 4",
    ]));
    assert_eq!(v["cost"], 20);
    assert_eq!(v["lengths"], serde_json::json!([2, 2, 2, 2]));

    let v = json(&prefixdp(&["solve", "--problem", "one-ended", "--weights", "1 1 1"]));
    assert_eq!(v["cost"], 6);
    let mut words: Vec<String> =
        v["codewords"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_owned()).collect();
    words.sort();
    assert_eq!(words, ["001", "01", "1"]);
}

#[test]
fn codewords_follow_caller_order() {
    let v = json(&prefixdp(&["solve", "--problem", "huffman", "--weights", "1 3 1 2"]));
    assert_eq!(v["lengths"], serde_json::json!([3, 1, 3, 2]));
    let words = v["codewords"].as_array().unwrap();
    assert_eq!(words[1], "0");
    assert_eq!(words[3], "10");
}

#[test]
fn output_modes() {
    let base = ["solve", "--problem", "gmr", "--spec", "2:1,3:1", "--weights", "1 1 1 1 1"];
    let v = json(&prefixdp(&[&base[..], &["--output", "cost"]].concat()));
    assert_eq!(v["cost"], 10);
    assert!(v.get("codewords").is_none() && v.get("lengths").is_none());

    let v = json(&prefixdp(&[&base[..], &["--output", "leafseq"]].concat()));
    assert_eq!(v["leaf_sequence"], serde_json::json!([0, 0, 5]));
    assert!(v.get("codewords").is_none());

    let v = json(&prefixdp(&[&base[..], &["--output", "trace"]].concat()));
    assert!(v["expansion"].is_array() && v["codewords"].is_array() && v["leaf_sequence"].is_array());
}

#[test]
fn stable_output_is_byte_identical() {
    let args = ["solve", "--problem", "reserved-g", "--g", "2", "--weights", "9 7 7 4 3 3 1", "--stable"];
    let a = prefixdp(&args);
    let b = prefixdp(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a).get("elapsed_ms").is_none());
    let timed = json(&prefixdp(&args[..args.len() - 1]));
    assert!(timed["elapsed_ms"].is_number());
}

#[test]
fn naive_and_batched_print_the_same_code() {
    let problems: [&[&str]; 6] = [
        &["--problem", "gmr", "--spec", "[[3,1],[2,2],[2,1],[4,1],[2,1],[2,1]]"],
        &["--problem", "mixed-radix", "--arities", "3,2"],
        &["--problem", "reserved-given", "--radix", "3", "--lengths", "1,2,4"],
        &["--problem", "reserved-g", "--radix", "2", "--g", "2"],
        &["--problem", "one-ended"],
        &["--problem", "huffman", "--radix", "4"],
    ];
    for p in problems {
        let mut out = Vec::new();
        for alg in ["naive", "batched"] {
            let args = [&["solve"][..], p, &["--weights", "[40,22,22,9,5,5,3,1,1]", "--algorithm", alg]].concat();
            let v = json(&prefixdp(&args));
            out.push((v["cost"].clone(), v["lengths"].clone(), v["codewords"].clone()));
        }
        assert_eq!(out[0], out[1], "{p:?}");
    }
}

#[test]
fn weights_file_formats() {
    let mut lines = tempfile::NamedTempFile::new().unwrap();
    writeln!(lines, "3\n2\n1\n1").unwrap();
    let path = lines.path().to_str().unwrap();
    let v = json(&prefixdp(&["solve", "--problem", "huffman", "--weights-file", path]));
    assert_eq!(v["cost"], 13);

    let mut arr = tempfile::NamedTempFile::new().unwrap();
    write!(arr, "[3, 2, 1, 1]").unwrap();
    let v = json(&prefixdp(&["solve", "--problem", "huffman", "--weights-file", arr.path().to_str().unwrap()]));
    assert_eq!(v["cost"], 13);
}

#[test]
fn spec_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "2 1\n3 1").unwrap();
    let v = json(&prefixdp(&["solve", "--problem", "gmr", "--spec", f.path().to_str().unwrap(), "--weights", "1 1 1 1 1"]));
    assert_eq!(v["cost"], 10);
}

#[test]
fn verify_examples() {
    let out = prefixdp(&["verify", "--problem", "gmr", "--spec", "binary", "--weights", "3 2 1 1"]);
    let v = json(&out);
    assert_eq!(v["agree"], true);
    assert_eq!(v["oracle_cost"], 13);

    let v = json(&prefixdp(&["verify", "--problem", "one-ended", "--weights", "2 1"]));
    assert_eq!(v["solver_cost"], 4);
    assert_eq!(v["oracle_cost"], 4);

    let out = prefixdp(&["verify", "--problem", "gmr", "--weights", "8 3 5 1 9 9 2 4 7 1 6 2"]);
    assert!(!out.status.success());
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| prefixdp(args).status.code().unwrap();
    assert_eq!(code(&["solve", "--problem", "huffman", "--weights", "1 x"]), 2);
    assert_eq!(code(&["solve", "--problem", "huffman", "--weights", "1 -2"]), 2);
    assert_eq!(code(&["solve", "--problem", "nope", "--weights", "1"]), 2);
    assert_eq!(code(&["solve", "--problem", "gmr", "--radix", "3", "--weights", "1 1"]), 2);
    assert_eq!(code(&["solve", "--problem", "reserved-given", "--weights", "1 1"]), 2);
    assert_eq!(code(&["solve", "--problem", "reserved-given", "--lengths", "1", "--weights", "1 1 1"]), 3);
    assert_eq!(code(&["solve", "--problem", "gmr", "--spec", "2:1", "--weights", "1 1 1"]), 3);
    assert_eq!(code(&["solve", "--problem", "reserved-given", "--lengths", "1,90", "--weights", "1 1 1"]), 4);
    assert_eq!(code(&["solve", "--problem", "huffman", "--weights", "18446744073709551615 18446744073709551615"]), 4);
    assert_eq!(code(&["verify", "--problem", "one-ended", "--weights", "1 1 1 1 1 1 1"]), 5);
}

#[test]
fn bench_csv() {
    let out = prefixdp(&["bench", "--problem", "gmr", "--sizes", "10,20", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "problem,algorithm,n,cells_updated,wall_time,distribution,seed");
    assert_eq!(rows.len(), 5);
    assert!(rows[1].starts_with("gmr,naive,10,"));
    assert!(rows[4].starts_with("gmr,batched,20,") && rows[4].ends_with(",uniform,3"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("slope"));

    let out = prefixdp(&["bench", "--problem", "one-ended", "--sizes", "15", "--distribution", "zipf"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("at least two sizes"));
}
