use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn facedist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facedist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn single_edge_has_one_face() {
    let v = json(&facedist(&["enumerate", "--kn", "2"]));
    assert_eq!(v["tool"], "facedist");
    assert_eq!(v["command"], "enumerate");
    assert_eq!(v["result"]["maps"], 1);
    assert_eq!(v["result"]["expected_faces_exact"], "1");
    assert_eq!(v["result"]["face_counts"][0]["faces"], 1);
}

#[test]
fn k4_embeddings_in_both_modes() {
    for flag in ["--fixed-e", "--all-e"] {
        let v = json(&facedist(&["enumerate", "--kn", "4", flag]));
        assert_eq!(v["result"]["expected_faces_exact"], "9/4");
        let counts = v["result"]["face_counts"].as_array().unwrap();
        let faces: Vec<u64> = counts
            .iter()
            .map(|c| c["faces"].as_u64().unwrap())
            .collect();
        assert_eq!(faces, vec![2, 4]);
    }
}

#[test]
fn edge_list_and_cycle_graph_agree() {
    let a = json(&facedist(&["enumerate", "--cycle", "4"]));
    let b = json(&facedist(&["enumerate", "--edges", "1-2,2-3,3-4,4-1"]));
    assert_eq!(a["result"]["face_counts"], b["result"]["face_counts"]);
}

#[test]
fn oversized_enumeration_is_refused() {
    let out = facedist(&["enumerate", "--kn", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("358318080000000"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_input_exits_with_four() {
    for args in [
        vec!["classprod", "--n", "5", "--lambda", "3,1"],
        vec![
            "classprod",
            "--n",
            "5",
            "--lambda",
            "3,2",
            "--samples",
            "100",
        ],
        vec!["localface", "--n", "5", "--vertex", "9", "--seed", "1"],
        vec!["enumerate", "--kn", "4", "--all-e", "--fixed-e"],
        vec!["enumerate"],
        vec!["enumerate", "--kn", "3", "--cycle", "4"],
        vec!["enumerate", "--edges", "1-2,2-x"],
        vec!["no-such-command"],
    ] {
        assert_eq!(facedist(&args).status.code(), Some(4), "{args:?}");
    }
    let out = facedist(&["inspect", "--map", &fixture("k4_bad_edge_scheme.json")]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn help_is_not_an_error() {
    assert_eq!(facedist(&["--help"]).status.code(), Some(0));
    assert_eq!(facedist(&["--version"]).status.code(), Some(0));
}

#[test]
fn character_sweep_exit_codes() {
    let ok = json(&facedist(&["charcheck", "--nmax", "4"]));
    assert_eq!(ok["result"]["violations"], 0);
    assert_eq!(ok["result"]["worked_example"]["g"], "2");
    assert_eq!(ok["result"]["worked_example"]["padded_subset_count"], "3");

    // The ratio bound fails at n = 5, λ = (2,2,1).
    let out = facedist(&["charcheck", "--nmax", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("5,2,\"(2,2,1)\",-2,6,1/3,1/4,false"),
        "{text}"
    );
}

#[test]
fn three_cycles_micro_example() {
    let v = json(&facedist(&[
        "classprod",
        "--n",
        "3",
        "--lambda",
        "3",
        "--exact",
    ]));
    assert_eq!(v["result"]["tv_exact"], "1/6");
    assert_eq!(v["result"]["holds"], true);
}

#[test]
fn inspect_reads_both_k4_embeddings() {
    let torus = json(&facedist(&["inspect", "--map", &fixture("k4_torus.json")]));
    assert_eq!(torus["result"]["genus"], 1);
    assert_eq!(torus["result"]["face_count"], 2);
    let first = &torus["result"]["vertices"][0];
    assert_eq!(first["omega"], "(1 2)(3)");
    assert_eq!(first["sigma"], "(1 3)(2)");

    let planar = json(&facedist(&["inspect", "--map", &fixture("k4_planar.json")]));
    assert_eq!(planar["result"]["genus"], 0);
    assert_eq!(planar["result"]["face_count"], 4);
}

#[test]
fn sampled_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [&[&str]; 3] = [
        &[
            "localface",
            "--n",
            "6",
            "--vertex",
            "2",
            "--samples",
            "5000",
            "--seed",
            "3",
        ],
        &["knextend", "--n", "7", "--samples", "3000", "--seed", "3"],
        &[
            "classprod",
            "--n",
            "7",
            "--lambda",
            "3,2,2",
            "--samples",
            "5000",
            "--seed",
            "3",
        ],
    ];
    for (i, args) in runs.iter().enumerate() {
        for format in ["json", "csv"] {
            let mut outputs = Vec::new();
            for threads in ["1", "3"] {
                let path = dir.path().join(format!("{i}-{format}-{threads}.out"));
                let path_str = path.to_string_lossy().into_owned();
                let mut full: Vec<&str> = args.to_vec();
                full.extend(["--format", format, "--threads", threads, "--out", &path_str]);
                let out = facedist(&full);
                assert!(
                    out.status.success(),
                    "{full:?}: {}",
                    String::from_utf8_lossy(&out.stderr)
                );
                assert!(out.stdout.is_empty());
                outputs.push(std::fs::read(&path).unwrap());
            }
            assert_eq!(outputs[0], outputs[1], "{args:?} {format}");
            assert!(!outputs[0].is_empty());
        }
    }
}

#[test]
fn csv_output_carries_the_run_header() {
    let out = facedist(&["enumerate", "--kn", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# tool: facedist"));
    assert!(text.contains("# command: enumerate"));
}
