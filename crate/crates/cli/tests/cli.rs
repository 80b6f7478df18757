use std::path::Path;
use std::process::{Command, Output};

use quiverfold::cartan::ValuedQuiverFile;
use quiverfold::enumerate::{KacReport, MainReport, SpeciesReport};
use quiverfold::io::{ClassifyReport, FoldReport, RootsReport};
use quiverfold::quiver::QuiverFile;
use quiverfold::roots::{RootKind, Verdict};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiverfold"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixtures() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["fixtures", "--out", "."]);
    assert_eq!(o.status.code(), Some(0));
    dir
}

#[test]
fn fold_prints_the_valued_edge() {
    let dir = fixtures();
    let o = run(dir.path(), &["fold", "a3-flip.json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("D = diag(2, 1)"), "{text}");
    assert!(text.contains("valuation (2,1)"), "{text}");
    let o = run(dir.path(), &["fold", "a3-flip.json", "--json"]);
    let r: FoldReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.c, vec![vec![2, -1], vec![-2, 2]]);
    assert_eq!(r.b, vec![vec![4, -2], vec![-2, 2]]);
}

#[test]
fn verify_main_passes_on_the_four_cycle() {
    let dir = fixtures();
    let args = ["verify", "main", "dtilde4-four-cycle.json", "--field", "3", "--max-height", "3", "--json"];
    let o = run(dir.path(), &args);
    assert_eq!(o.status.code(), Some(0));
    let r: MainReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.passed);
    assert!(r.entries.iter().any(|e| e.folded == vec![1, 2] && e.root == Some(RootKind::Imaginary)));
    assert_eq!(stdout(&run(dir.path(), &args)), stdout(&o));
}

#[test]
fn classify_the_41_fold() {
    let dir = fixtures();
    let o = run(dir.path(), &["classify", "edge-4-1.json", "--vector", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("imaginary"));
    let o = run(dir.path(), &["classify", "dtilde4-four-cycle.json", "--folded", "--vector", "1,2", "--json"]);
    let r: ClassifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(matches!(r.classification.verdict, Verdict::Imaginary { .. }));
}

#[test]
fn other_verifications_pass() {
    let dir = fixtures();
    let o = run(dir.path(), &["verify", "kac", "a3-flip.json", "--field", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(serde_json::from_str::<KacReport>(&stdout(&o)).unwrap().passed);
    let o = run(dir.path(), &["verify", "species", "edge-2-1.json", "--field", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(serde_json::from_str::<SpeciesReport>(&stdout(&o)).unwrap().passed);
}

#[test]
fn counts() {
    let dir = fixtures();
    let o = run(dir.path(), &["ii-indecs", "counterexample.json", "--field", "5", "--dim", "1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(imaginary): 1 ii-indecomposable"), "{}", stdout(&o));
    let o = run(dir.path(), &["species-count", "edge-2-1.json", "--field", "3", "--vector", "1,2"]);
    assert!(stdout(&o).starts_with("I([1, 2], 3) = 1"), "{}", stdout(&o));
    let o = run(dir.path(), &["indecs", "a3-flip.json", "--field", "2", "--dim", "1,1,1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["indecomposables"].as_array().unwrap().len(), 1);
}

#[test]
fn outputs_reparse() {
    let dir = fixtures();
    let o = run(dir.path(), &["unfold", "edge-2-1.json", "--json"]);
    let file: QuiverFile = serde_json::from_str(&stdout(&o)).unwrap();
    let (q, a) = file.build().unwrap();
    assert_eq!((q.vertex_count(), a.order()), (3, 2));
    let o = run(dir.path(), &["skew", "a3-flip.json", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let file: QuiverFile = serde_json::from_value(v["quiver"].clone()).unwrap();
    assert_eq!(file.build().unwrap().0.vertex_count(), 3);
    let o = run(dir.path(), &["roots", "edge-2-1.json", "--json"]);
    let r: RootsReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.roots.len(), 4);
    let o = run(dir.path(), &["fold", "counterexample.json", "--json"]);
    let r: FoldReport = serde_json::from_str(&stdout(&o)).unwrap();
    let vf: ValuedQuiverFile = serde_json::from_value(serde_json::to_value(&r.valued).unwrap()).unwrap();
    assert_eq!(vf.build().unwrap().d, vec![3, 2]);
}

#[test]
fn errors_exit_with_two() {
    let dir = fixtures();
    let cases: [&[&str]; 5] = [
        &["fold", "missing.json"],
        &["classify", "edge-4-1.json"],
        &["roots", "edge-4-1.json", "--max-height", "0"],
        &["indecs", "a3-flip.json", "--field", "6", "--dim", "1,1,1"],
        &["indecs", "a3-flip.json", "--field", "9", "--dim", "3,3,3", "--cap-states", "1000"],
    ];
    for args in cases {
        let o = run(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
    let o = run(dir.path(), &["indecs", "a3-flip.json", "--field", "9", "--dim", "3,3,3", "--cap-states", "1000"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("predicted"), "{err}");
}
