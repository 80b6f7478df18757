use serde_json::Value;

use quiverfold_web::{classify, example, example_names, fold, roots};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn examples_are_bundled() {
    let names = example_names();
    assert!(names.contains(&"a3-flip.json".to_string()));
    for n in &names {
        assert!(!example(n).is_empty(), "{n}");
    }
    assert!(example("nope.json").is_empty());
}

#[test]
fn fold_a3() {
    let r = parse(fold(&example("a3-flip.json")).unwrap());
    assert_eq!(r["orbits"], serde_json::json!(["{1,3}", "{2}"]));
    assert_eq!(r["edges"][0]["pair"], serde_json::json!([2, 1]));
}

#[test]
fn roots_of_the_21_edge() {
    let r = parse(roots(&example("edge-2-1.json"), false, 4).unwrap());
    let vs: Vec<&Value> = r["roots"].as_array().unwrap().iter().map(|e| &e["vector"]).collect();
    assert_eq!(vs, [&serde_json::json!([0, 1]), &serde_json::json!([1, 0]), &serde_json::json!([1, 1]), &serde_json::json!([1, 2])]);
    let folded = parse(roots(&example("dtilde4-four-cycle.json"), true, 3).unwrap());
    assert_eq!(folded["null_root"], serde_json::json!([1, 2]));
}

#[test]
fn classify_on_both_lattices() {
    let r = parse(classify(&example("edge-4-1.json"), false, "1,2").unwrap());
    assert_eq!(r["verdict"], "imaginary");
    assert_eq!(r["length"], "0");
    let r = parse(classify(&example("a3-flip.json"), false, "1,1,1").unwrap());
    assert_eq!(r["verdict"], "real");
}
