use std::io::Write;

use brickyard::format::to_graph6;
use brickyard::{MultiGraph, NamedGraph, RemovableEdgeSet, Result};
use brickyard_cli::{run, run_with, Cli, EXIT_BAD_INPUT, EXIT_CAP, EXIT_OK, EXIT_VIOLATION};
use clap::Parser;
use serde_json::Value;
use tempfile::NamedTempFile;

fn file(suffix: &str, contents: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn g6_file(graphs: &[NamedGraph]) -> NamedTempFile {
    let lines: Vec<String> = graphs.iter().map(|g| to_graph6(&g.build().unwrap()).unwrap()).collect();
    file(".g6", &(lines.join("\n") + "\n"))
}

fn invoke(args: &[&str], input: &NamedTempFile) -> (i32, String, String) {
    let mut argv = vec!["brickyard"];
    argv.extend_from_slice(args);
    argv.push(input.path().to_str().unwrap());
    let cli = Cli::try_parse_from(argv).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json_lines(out: &str) -> Vec<Value> {
    out.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn analyze_k4() {
    let (code, out, _) = invoke(&["analyze"], &g6_file(&[NamedGraph::K4]));
    assert_eq!(code, EXIT_OK);
    let report = &json_lines(&out)[0];
    assert_eq!(report["class"]["brick"], true);
    assert_eq!(report["removable_edges"], Value::Array(Vec::new()));
    assert_eq!(report["b"], 1);
    assert_eq!(report["perfect_matchings"], 3);
    assert_eq!(report["theorem2"]["hypothesis_failures"][0], "is-K4");
}

#[test]
fn analyze_names_parallel_edges_apart() {
    // K4 with edge 01 doubled: both copies are removable
    let (code, out, _) = invoke(&["analyze"], &file(".el", "4 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 1\n"));
    assert_eq!(code, EXIT_OK);
    let report = &json_lines(&out)[0];
    assert!(report["input_id"].as_str().unwrap().ends_with("#1"));
    let removable = report["removable_edges"].as_array().unwrap();
    let copies: Vec<(Value, Value)> = removable.iter().map(|e| (e["ends"].clone(), e["copy"].clone())).collect();
    assert_eq!(copies, [(serde_json::json!([0, 1]), 0.into()), (serde_json::json!([0, 1]), 1.into())]);
}

#[test]
fn decompose_c6_into_two_braces() {
    let (code, out, _) = invoke(&["decompose"], &g6_file(&[NamedGraph::C6]));
    assert_eq!(code, EXIT_OK);
    let report = &json_lines(&out)[0];
    assert_eq!((report["bricks"].clone(), report["braces"].clone()), (0.into(), 2.into()));
    let children = report["tree"]["children"].as_array().unwrap();
    assert_eq!(children.len(), 2);
    assert!(children.iter().all(|c| c["kind"] == "brace" && c["n"] == 4));
    assert_eq!(report["tree"]["shore"].as_array().unwrap().len(), 3);
}

#[test]
fn decompose_as_dot() {
    let (code, out, _) = invoke(&["decompose", "--dot"], &g6_file(&[NamedGraph::C6]));
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("brace").count(), 2);
    assert_eq!(out.matches("->").count(), 2);
}

#[test]
fn verify_theorem1_on_k4() {
    let (code, out, _) = invoke(&["verify", "--theorem", "1"], &g6_file(&[NamedGraph::K4]));
    assert_eq!(code, EXIT_OK);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["summary"]["graphs"], 1);
    assert_eq!(lines[0]["summary"]["violations"], 0);
}

const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn verify_reports_every_verdict_on_request() {
    // K4 is excluded; K4 with a doubled edge satisfies the hypothesis
    let input = file(".el", &format!("4 6\n{K4}4 7\n{K4}0 1\n"));
    let (code, out, _) = invoke(&["verify", "--theorem", "2", "--all"], &input);
    assert_eq!(code, EXIT_OK);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert!(lines[1]["input_id"].as_str().unwrap().ends_with("#2"));
    assert_eq!(lines[1]["hypothesis_holds"], true);
    assert_eq!(lines[1]["removable_count"], 2);
    assert_eq!(lines[2]["summary"]["in_hypothesis"], 1);
}

#[test]
fn empty_and_corrupt_inputs_exit_2() {
    let (code, out, err) = invoke(&["analyze"], &file(".g6", ""));
    assert_eq!((code, out.as_str()), (EXIT_BAD_INPUT, ""));
    assert!(err.contains("no graphs"));
    let (code, _, err) = invoke(&["verify", "--theorem", "1"], &file(".g6", "C~\nC!\n"));
    assert_eq!(code, EXIT_BAD_INPUT);
    assert!(err.contains("line 2, byte 1"), "{err}");
    let (code, _, _) = invoke(&["analyze"], &file(".s6", ":Ch\n"));
    assert_eq!(code, EXIT_BAD_INPUT);
}

#[test]
fn exceeding_a_cap_exits_1() {
    let cycle = to_graph6(&NamedGraph::Cycle(18).build().unwrap()).unwrap();
    let input = file(".g6", &(cycle + "\n"));
    let (code, _, err) = invoke(&["analyze"], &input);
    assert_eq!(code, EXIT_CAP);
    assert!(err.contains("cap"), "{err}");
    assert_eq!(invoke(&["--max-n", "18", "--max-pm-enum", "18", "decompose"], &input).0, EXIT_OK);
}

#[test]
fn lemmas_are_clean_on_small_graphs() {
    let input = g6_file(&[NamedGraph::K4, NamedGraph::C6, NamedGraph::K33, NamedGraph::Prism]);
    let (code, out, _) = invoke(&["lemmas"], &input);
    assert_eq!(code, EXIT_OK);
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(|r| r["violations"].as_array().unwrap().is_empty()));
}

fn nothing_removable(_: &MultiGraph) -> Result<RemovableEdgeSet> {
    Ok(RemovableEdgeSet::default())
}

#[test]
fn faulty_removability_is_caught() {
    let input = g6_file(&[NamedGraph::K33]);
    let argv = ["brickyard", "lemmas", "--lemma", "l1", input.path().to_str().unwrap()];
    let cli = Cli::try_parse_from(argv).unwrap();
    let mut out = Vec::new();
    let code = run_with(&cli, &mut out, &mut Vec::new(), nothing_removable);
    assert_eq!(code, EXIT_VIOLATION);
    let report = &json_lines(std::str::from_utf8(&out).unwrap())[0];
    assert_eq!(report["lemma_id"], "L1");
    assert!(report["violations"][0]["graph"].as_str().unwrap().starts_with(':'));
}

#[test]
fn extremal_witnesses() {
    // doubled K4 attains the bound; replacing the twin by a path 0-4-5-1 makes it reducible with one removable edge
    let input = file(".el", &format!("4 7\n{K4}0 1\n6 9\n{K4}0 4\n4 5\n5 1\n"));
    let (code, out, _) = invoke(&["extremal"], &input);
    assert_eq!(code, EXIT_OK);
    let lines = json_lines(&out);
    let kinds: Vec<&str> = lines.iter().map(|l| l["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["sharp", "irreducibility-necessary"]);
    assert_eq!(lines[1]["removable_count"], 1);
}

#[test]
fn pretty_output_is_one_array() {
    let (code, out, _) = invoke(&["--pretty", "analyze"], &g6_file(&[NamedGraph::K4, NamedGraph::C4]));
    assert_eq!(code, EXIT_OK);
    let all: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 2);
}
