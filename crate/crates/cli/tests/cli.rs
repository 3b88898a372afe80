use std::process::{Command, Output};

fn cdes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn staircase_fibres_on_both_routes() {
    let out = cdes(&["fibers", "3,2,1", "--route", "both", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 14);
    assert!(text.contains("{1,3,5} 2\n"));
    assert!(text.contains("{2,4,6} 2\n"));
    assert!(text.contains("{1,2,4} 1\n"));
}

#[test]
fn single_row_is_not_extendable() {
    let out = cdes(&["fibers", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("connected ribbon"));
    assert!(out.stdout.is_empty());
}

#[test]
fn square_fibres_as_json_and_csv() {
    let out = cdes(&["fibers", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["table"]["entries"],
        serde_json::json!([{ "J": [1, 3], "m": 1 }, { "J": [2, 4], "m": 1 }])
    );

    let out = cdes(&["fibers", "2,2", "--format", "csv", "--route", "inner"]);
    assert_eq!(stdout(&out), "J,m\n\"{1,3}\",1\n\"{2,4}\",1\n");
}

#[test]
fn staircase_extension() {
    let out = cdes(&["extend", "3,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let tableaux = v["tableaux"].as_array().unwrap();
    assert_eq!(tableaux.len(), 16);
    assert!(tableaux.iter().all(|t| t["cdes"].is_array() && t["des"].is_array()));
    assert_eq!(v["p"].as_array().unwrap().len(), 16);
}

#[test]
fn verify_suites_pass() {
    let out = cdes(&["verify", "theorem1", "--max-n", "7", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS")));

    let out = cdes(&["verify", "theorem2", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let out = cdes(&["verify", "exceptional", "--max-n", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("suite,check,cases,passed,counterexample\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["extend", "3,3/1"][..],
        &["verify", "gw", "--max-n", "4"],
        &["schur", "3,2/1"],
    ] {
        assert_eq!(cdes(args).stdout, cdes(args).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cdes(&["fibers", "3,x"]).status.code(), Some(2));
    assert_eq!(cdes(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(cdes(&["verify", "gw", "--max-n", "17"]).status.code(), Some(2));
    assert_eq!(cdes(&["perm", "123"]).status.code(), Some(0));
    assert_eq!(cdes(&["perm", "1,1,2"]).status.code(), Some(2));
    assert_eq!(
        cdes(&["fibers", "4,4,4,4", "--limit-syt", "1000"]).status.code(),
        Some(3)
    );
    assert_eq!(cdes(&["syt", "4,4,4", "--limit-syt", "10"]).status.code(), Some(3));
}

#[test]
fn helpers() {
    let out = cdes(&["perm", "2143", "--format", "text"]);
    assert_eq!(stdout(&out), "Des={1,3}\ncDes={1,3,4}\ncDes*={1,3}\n");

    let out = cdes(&["gw", "4", "{1,3}", "2,2", "--format", "text"]);
    assert_eq!(stdout(&out), "1\n");
    assert_eq!(cdes(&["gw", "4", "{1,3}", "3,1"]).status.code(), Some(2));

    let out = cdes(&["feasibility", "1+1+1+1"]);
    assert_eq!(json(&out)["feasible"], serde_json::json!([1]));

    let out = cdes(&["poly", "2,2", "--format", "text"]);
    assert_eq!(stdout(&out), "des: t + t^2\ncdes: 2*t^2\n");

    let out = cdes(&["syt", "2,2", "--format", "csv"]);
    assert_eq!(stdout(&out), "rows,des\n1 2 / 3 4,{2}\n1 3 / 2 4,\"{1,3}\"\n");

    let out = cdes(&["schur", "2,1/1", "--format", "text"]);
    assert_eq!(stdout(&out), "s(1,1) + s(2)\n");
}
