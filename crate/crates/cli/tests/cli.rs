use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn classify_worked_example() {
    let o = run(&["classify", "dicosm-axial", "--c", "28", "--p1", "0", "--p2", "2", "--p3", "0", "--q3", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = &json_lines(&o)[0];
    assert_eq!(v["flagOrbits"], 12);
    assert_eq!(v["params"]["encoded"]["P2"], 4);
    assert_eq!(v["params"]["display"]["p2"], "2");
}

#[test]
fn hexacosm_exits_with_2() {
    let o = run(&["classify", "hexacosm"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("no 6-fold twists"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn invalid_parameters_exit_with_2() {
    let o = run(&["classify", "dicosm-axial", "--c", "1", "--p1", "1/2", "--p2", "1", "--p3", "0", "--q3", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("P2 must be odd when P1=1"));
    let o = run(&["classify", "tetracosm", "--c", "1", "--p", "1/3", "--q", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["classify", "tetracosm", "--c", "1", "--p", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
}

#[test]
fn oracle_bound_exits_with_3() {
    let o = run(&["classify", "tetracosm", "--c", "3", "--p", "2", "--q", "3/2", "--with-oracle", "--max-flags", "100"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).is_empty());
}

#[test]
fn classify_with_oracle_and_cover() {
    let o = run(&["classify", "tetracosm", "--c", "1", "--p", "1/2", "--q", "1/2", "--with-oracle", "--with-cover"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v = &json_lines(&o)[0];
    assert_eq!(v["oracle"]["orbits"], 6);
    assert_eq!(v["oracle"]["pass"], true);
    assert_eq!(v["cover"]["class"], "3");
    assert_eq!(v["cover"]["flags"], 4 * 96);
}

#[test]
fn classify_formats() {
    let base = ["classify", "tricosm", "--m", "1", "--a", "2", "--b", "1"];
    let csv = run(&[&base[..], &["--format", "csv", "--with-cover"]].concat());
    let text = stdout(&csv);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("manifold,params,family"));
    assert!(lines.next().unwrap().starts_with("tricosm,M=1 a=2 b=1,tricosm:none,alpha,none,336,112"));
    let txt = run(&[&base[..], &["--format", "text"]].concat());
    assert!(stdout(&txt).contains("petrie.handedness: right"));
}

#[test]
fn json_round_trips_through_reclassification() {
    let o = run(&["classify", "dicosm-diagonal", "--n", "1", "--p1", "1/4", "--p2", "3/4", "--p3", "1/4", "--q3", "1/2"]);
    let line = stdout(&o);
    let v: Value = serde_json::from_str(line.trim()).unwrap();
    let rec = twistoid::OutputRecord::from_json(line.trim()).unwrap();
    let again = twistoid::OutputRecord::build(&rec.params().unwrap(), false, None).unwrap();
    assert_eq!(again.to_json(), line.trim());
    assert_eq!(v["flagOrbits"], 6);
}

#[test]
fn enumerate_family_counts() {
    for (args, n) in [
        (vec!["enumerate", "tricosm", "--max-m", "3", "--max-ab", "3", "--families-only"], 3),
        (vec!["enumerate", "tetracosm", "--max-c", "2", "--max-pq", "4", "--families-only"], 4),
        (vec!["enumerate", "dicosm-axial", "--max-p2", "42", "--max-q3", "10", "--families-only"], 18),
    ] {
        let o = run(&args);
        assert!(o.status.success());
        let lines = json_lines(&o);
        assert_eq!(lines.last().unwrap()["realizedFamilies"], n);
        assert_eq!(lines.len(), n + 1);
    }
}

#[test]
fn enumerate_is_sorted_and_deterministic() {
    let args = ["enumerate", "dicosm-diagonal", "--max-n", "2", "--max-p2", "8"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    assert!(a.lines().count() > 10);
}

#[test]
fn verify_table2_and_petrie() {
    let o = run(&["verify", "--only", "table2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("18/18 pass"));
    let o = run(&["verify", "--only", "petrie", "--max-m", "9"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("PASS")).count(), 9);
}

#[test]
fn verify_one_manifold() {
    let o = run(&["verify", "--max-flags", "768", "--only", "tetracosm"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 fail"));
}

#[test]
fn tables_match_golden_files() {
    for name in ["table1", "table2", "families"] {
        let o = run(&["table", name]);
        assert!(o.status.success());
        let golden = std::fs::read_to_string(format!("{}/tests/golden/{name}.csv", env!("CARGO_MANIFEST_DIR"))).unwrap();
        assert_eq!(stdout(&o), golden, "{name}");
    }
}

#[test]
fn table_shapes() {
    let t1 = stdout(&run(&["table", "table1"]));
    assert_eq!(t1.lines().count(), 12);
    let t2 = stdout(&run(&["table", "table2"]));
    assert_eq!(t2.matches("None").count(), 7);
    assert_eq!(t2.matches("p1=").count(), 18);
    let fam = stdout(&run(&["table", "families"]));
    assert_eq!(fam.lines().count(), 30);
}

#[test]
fn cover_subcommand() {
    let o = run(&["cover", "tetracosm", "--c", "1", "--p", "1", "--q", "0"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    assert_eq!(v["cover"]["t1"], serde_json::json!([0, 0, 4]));
    assert_eq!(v["cover"]["index"], 16);
    assert_eq!(v["cover"]["flags"], 768);
}
