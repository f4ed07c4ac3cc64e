use std::process::{Command, Output};

use serde_json::Value;

fn relkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_relkl")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rpoly_latex_of_the_type_a_example() {
    let o = relkl(&["rpoly", "A:10:5", "-u", "3,2", "-v", "5,4,4,4,1", "--method", "closed", "--format", "latex"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(q-1)^2 q^{10} (1+q)");
}

#[test]
fn rpoly_both_reports_a_match() {
    let o = relkl(&["rpoly", "E6", "-u", "5,3", "-v", "5,3,3,4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("closed: q^7 - q^6"), "{out}");
    assert!(out.trim_end().ends_with("MATCH"));
}

#[test]
fn rpoly_json_is_canonical() {
    let o = relkl(&["rpoly", "E6", "-u", "5,1", "-v", "5,3,3,5", "--method", "oracle", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quotient"], "E6");
    assert_eq!(v["u"], "5,1");
    assert_eq!(v["method"], "oracle");
    let mut expected = vec![0; 11];
    expected[9] = -1;
    expected[10] = 1;
    assert_eq!(v["coeffs"], serde_json::json!(expected));
}

#[test]
fn equal_shapes_give_one() {
    let o = relkl(&["rpoly", "C:4", "-u", "3", "-v", "3", "--method", "closed"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = relkl(&["klpoly", "C:4", "-u", "3", "-v", "3"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn klpoly_of_covers_is_one() {
    for (u, v) in [("", "1"), ("5,3", "5,3,1"), ("5,2", "5,3")] {
        let o = relkl(&["klpoly", "E6", "-u", u, "-v", v]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), "1", "{u} {v}");
    }
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["rpoly", "Q:3", "-u", "1", "-v", "1"][..],
        &["rpoly", "A:3:2", "-u", "3", "-v", "3"],
        &["rpoly", "C:4", "-u", "2,2", "-v", "3"],
        &["verify"],
        &["frobnicate"],
    ] {
        let o = relkl(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_reports_zero_mismatches() {
    let o = relkl(&["verify", "B:6", "E6", "A:4:2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("B:6: 12 elements, 78 pairs, 0 mismatches"), "{out}");
    assert!(out.contains("E6: 27 elements"));
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn hasse_writes_dot() {
    let dir = std::env::temp_dir().join(format!("relkl-hasse-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (spec, nodes, edges) in [("B:3", 6, 5), ("A:2:1", 3, 2), ("E6", 27, 36)] {
        let path = dir.join(format!("{spec}.dot"));
        let o = relkl(&["hasse", spec, "--dot", path.to_str().unwrap()]);
        assert!(o.status.success());
        let dot = std::fs::read_to_string(&path).unwrap();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("[label=").count(), nodes, "{spec}");
        assert_eq!(dot.matches(" -> ").count(), edges, "{spec}");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn marks_grid_of_the_type_da_example() {
    let o = relkl(&["marks", "DA:8", "-u", "5,1", "-v", "7,6,5,4,3,1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let grid: String = out.split("\n\n").next().unwrap().into();
    assert_eq!(grid.matches('+').count(), 6);
    assert_eq!(grid.matches('-').count(), 4);
    assert_eq!(grid.matches('X').count(), 6);
    assert!(out.contains("plus 6, minus 4, k = 2"));
}

#[test]
fn marks_of_equal_shapes_are_empty() {
    let o = relkl(&["marks", "C:4", "-u", "3,1", "-v", "3,1"]);
    let out = stdout(&o);
    assert!(!out.contains('+') && !out.contains('-'));
    assert!(out.contains("plus 0, minus 0, k = 0"));
}

#[test]
fn invariance_json() {
    let o = relkl(&["invariance", "A:6:3", "DA:5", "C:5", "--max-length", "5", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["violations"], 0);
    assert_eq!(v["max_length"], 5);
    let covers = v["classes"].as_array().unwrap().iter().find(|c| c["length"] == 1).unwrap();
    assert_eq!(covers["r_polys"], serde_json::json!([[-1, 1]]));
}
