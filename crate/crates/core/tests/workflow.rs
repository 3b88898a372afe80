use cyclic_descents::cyclic::{build_extension, fiber_table_formula, validate_extension};
use cyclic_descents::verify::{run, Suite};
use cyclic_descents::{Error, SkewShape, SubsetOfN};

fn shape(s: &str) -> SkewShape {
    s.parse().unwrap()
}

#[test]
fn staircase_extension_json() {
    let ext = build_extension(&shape("3,2,1")).unwrap();
    validate_extension(&ext).unwrap();
    let json = ext.to_json();
    assert_eq!(json["n"], 6);
    assert_eq!(json["tableaux"].as_array().unwrap().len(), 16);
    let mut p: Vec<u64> = json["p"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    p.sort_unstable();
    assert_eq!(p, (1..=16).collect::<Vec<_>>());
    let mut orbits: Vec<u64> = json["orbit_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    orbits.sort_unstable();
    assert_eq!(orbits, vec![2, 2, 6, 6]);
    for t in json["tableaux"].as_array().unwrap() {
        let cdes = t["cdes"].as_array().unwrap();
        assert!(!cdes.is_empty() && cdes.len() < 6);
    }
}

#[test]
fn fibre_table_json_lists_nonzero_entries_in_order() {
    let table = fiber_table_formula(&shape("2,2")).unwrap();
    let json = table.to_json();
    assert_eq!(json["n"], 4);
    let entries = json["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["J"], serde_json::json!([1, 3]));
    assert_eq!(entries[1]["J"], serde_json::json!([2, 4]));
    assert_eq!(table.to_text(), "{1,3} 1\n{2,4} 1\n");
}

#[test]
fn skew_and_disconnected_shapes_extend() {
    for s in ["3,3/1", "4,3/1", "2+2", "1+1+1", "3,3,2/1,1", "2,2+1"] {
        let ext = build_extension(&shape(s)).unwrap();
        assert!(validate_extension(&ext).is_ok(), "{s}");
        let table = fiber_table_formula(&shape(s)).unwrap();
        assert_eq!(ext.fiber_table().unwrap(), table, "{s}");
        let n = shape(s).size();
        assert_eq!(table.get(&SubsetOfN::empty(n).unwrap()), 0);
        assert_eq!(table.get(&SubsetOfN::full(n).unwrap()), 0);
    }
}

#[test]
fn ribbons_are_refused() {
    for s in ["5", "1^4", "3,1", "3,3/2", "4,2,2/1,1"] {
        assert!(
            matches!(build_extension(&shape(s)), Err(Error::NotExtendable { .. })),
            "{s}"
        );
    }
}

#[test]
fn suites_pass_on_small_sizes() {
    for suite in Suite::CONCRETE {
        let report = run(suite, 5).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }
    let json = run(Suite::Gens, 4).unwrap().to_json();
    assert_eq!(json["passed"], true);
    assert!(json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["counterexample"].is_null()));
}
