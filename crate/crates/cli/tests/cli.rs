use std::process::Command;

use raney_cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::{json, Value};

fn ok(args: &str) -> String {
    let out = run(std::iter::once("raney").chain(args.split_whitespace()));
    assert_eq!(out.status, EXIT_OK, "{args}: {}", out.stderr);
    out.stdout
}

fn json(args: &str) -> Value {
    serde_json::from_str(&ok(args)).unwrap_or_else(|e| panic!("{args}: {e}"))
}

fn status(args: &str) -> i32 {
    run(std::iter::once("raney").chain(args.split_whitespace())).status
}

#[test]
fn raney_values_by_every_method() {
    for method in ["closed", "recurrence", "convolution"] {
        assert_eq!(
            ok(&format!("raney --p 2 --r 3 --k 3 --method {method}")).trim(),
            "28"
        );
    }
    assert_eq!(
        json("raney --p 2 --r 3 --k 3 --format json"),
        json!({"p": 2, "r": 3, "k": 3, "value": 28})
    );
    assert_eq!(ok("catalan --k 9").trim(), "4862");
    assert_eq!(ok("fuss --p 3 --k 3").trim(), "12");
}

#[test]
fn big_values_stay_exact_in_json() {
    let text = ok("catalan --k 60");
    let value = json("catalan --k 60 --format json");
    assert_eq!(value["value"].to_string(), text.trim());
    assert!(text.trim().len() > 20);
}

#[test]
fn core_listing_and_counts() {
    assert_eq!(
        json("list-cores --s 3 --t 4 --format json"),
        json!([[], [1], [2], [1, 1], [3, 1, 1]])
    );
    assert_eq!(
        ok("list-cores --s 3 --t 4"),
        "[]\n[1]\n[2]\n[1,1]\n[3,1,1]\n"
    );
    assert_eq!(
        json("count-cores --s 3 --t 5 --format json")["value"],
        json!(7)
    );
    let ideals = json("list-cores --s 3 --t 4 --ideals --format json");
    assert_eq!(ideals.as_array().map(Vec::len), Some(5));
}

#[test]
fn filtered_counts_agree_across_methods() {
    for method in ["direct", "ideal-property", "recurrence"] {
        assert_eq!(
            ok(&format!("count-filtered --s 6 --p 2 --method {method}")).trim(),
            "12"
        );
    }
    // the recurrence needs no enumeration
    assert_eq!(
        ok("count-filtered --s 40 --p 3 --method recurrence").trim(),
        { ok("raney --p 4 --r 2 --k 13").trim().to_string() }
    );
    assert_eq!(
        status("count-filtered --s 40 --p 3 --method direct"),
        EXIT_USAGE
    );
}

#[test]
fn coral_commands() {
    assert_eq!(ok("coral-count --p 2 --r 3 --k 3").trim(), "28");
    assert_eq!(ok("coral-list --p 2 --r 1 --k 2"), "<[.[..]]>\n<[[..].]>\n");
    assert_eq!(ok("coral-list --p 2 --r 3 --k 3").lines().count(), 28);
    let listed = json("coral-list --p 2 --r 2 --k 1 --format json");
    assert_eq!(listed.as_array().map(Vec::len), Some(2));
}

fn looks_like_dot(text: &str) {
    let lines: Vec<&str> = text.lines().collect();
    assert!(
        lines[0].starts_with("digraph ") && lines[0].ends_with('{'),
        "{text}"
    );
    assert_eq!(lines.last(), Some(&"}"));
    let opens = text.matches('{').count();
    assert_eq!(opens, text.matches('}').count());
    assert!(lines[1..lines.len() - 1]
        .iter()
        .all(|l| l.trim_end().ends_with(';') || l.trim_end().ends_with('}')));
}

#[test]
fn dot_output() {
    let poset = ok("poset-dot --s 3 --t 4");
    looks_like_dot(&poset);
    assert!(poset.contains("1 -> 5;") && poset.contains("2 -> 5;"));
    let poset = ok("poset-dot --s 4 --t 7");
    looks_like_dot(&poset);
    assert_eq!(poset.matches("->").count(), 10);
    looks_like_dot(&ok("coral-dot --p 2 --r 3 --k 3 --index 27"));
    assert_eq!(status("coral-dot --p 2 --r 3 --k 3 --index 28"), EXIT_USAGE);
}

#[test]
fn verify_report() {
    let report = json("verify --s-max 8 --p-max 4 --format json");
    assert_eq!(report["summary"]["all_agree"], json!(true));
    assert_eq!(report["summary"]["disagreements"], json!(0));
    let text = ok("verify --s-max 4 --p-max 2 --sequential");
    assert!(text.trim_end().ends_with("all_agree=true"));
    assert_eq!(
        ok("verify --s-max 6 --p-max 3"),
        ok("verify --s-max 6 --p-max 3 --sequential")
    );
}

#[test]
fn output_is_deterministic() {
    for args in [
        "list-cores --s 4 --t 7 --format json",
        "verify --s-max 7 --p-max 3 --format json",
        "coral-list --p 3 --r 2 --k 2",
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "raney --p 0 --r 1 --k 1",
        "catalan --k x",
        "catalan --k -1",
        "bogus",
        "",
        "list-cores --s 4 --t 6",
        "list-cores --s 3 --t 3",
        "list-cores --s 20 --t 21",
        "raney --p 2 --r 0 --k 1 --method convolution",
        "raney --p 2 --r 1 --k 1 --format dot",
    ] {
        let out = run(std::iter::once("raney").chain(args.split_whitespace()));
        assert_eq!(out.status, EXIT_USAGE, "{args}");
        assert!(!out.stderr.is_empty() && out.stdout.is_empty(), "{args}");
    }
    assert_eq!(status("--help"), EXIT_OK);
}

#[test]
fn binary_round_trip() {
    let bin = env!("CARGO_BIN_EXE_raney");
    let out = Command::new(bin)
        .args(["list-cores", "--s", "3", "--t", "4", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "[[],[1],[2],[1,1],[3,1,1]]"
    );
    let bad = Command::new(bin)
        .args(["raney", "--p", "0", "--r", "1", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    assert!(!bad.stderr.is_empty());
}
