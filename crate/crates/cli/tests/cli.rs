use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superelliptic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn list_genus_four_has_nine_rows() {
    let o = run(&["list", "--genus", "4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1 + 9);
    let blue: Vec<&str> = out.lines().skip(1).filter(|l| l.starts_with('*')).collect();
    assert_eq!(blue.len(), 3);
    assert!(out.contains("2^4, 4^2"));
}

#[test]
fn list_csv_genus_seven() {
    let o = run(&["list", "--genus", "7", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 28);
}

#[test]
fn list_json_is_an_array() {
    let o = run(&["list", "--genus", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn list_out_of_range_is_usage_error() {
    assert_eq!(code(&run(&["list", "--genus", "11"])), 2);
    assert_eq!(code(&run(&["list", "--genus", "2"])), 2);
    assert_eq!(code(&run(&["classify", "--genus", "11"])), 2);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&run(&["list"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn strict_verify_genus_nine_fails() {
    let o = run(&["verify", "--genus", "9", "--strict"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    for nr in [8, 9, 11, 12, 13] {
        let tag = format!("Nr. {nr} ");
        let line = out
            .lines()
            .find(|l| l.trim_start().starts_with(&tag) && l.contains("signature"));
        assert!(line.is_some_and(|l| l.contains("FAIL")), "Nr. {nr} missing:\n{out}");
    }
}

#[test]
fn verify_genus_five_reproduces_blue_set() {
    let o = run(&["verify", "--genus", "5", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let possibly_not = &v["classification"][0]["possibly_not"];
    assert_eq!(possibly_not, &serde_json::json!([1, 2, 6]));
}

#[test]
fn verify_genus_five_lists_erratum_as_warning() {
    let o = run(&["verify", "--genus", "5"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("warning"), "{out}");
    assert!(out.contains("Nr. 5   WARN signature"), "{out}");
}

// The printed tables contain rows whose equations and labels contradict
// their own genus or group order, so the unrestricted run reports failures.
#[test]
fn full_verify_reports_table_inconsistencies() {
    let o = run(&["verify"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("Nr. 11  FAIL signature"), "{out}");
    assert!(out.contains("Nr. 20  FAIL group order"), "{out}");
}

#[test]
#[ignore = "printed tables are not internally consistent; see full_verify_reports_table_inconsistencies"]
fn full_verify_default_mode_passes() {
    assert_eq!(code(&run(&["verify"])), 0);
}

#[test]
fn timestamps_only_behind_flag() {
    let a = run(&["verify", "--genus", "3"]);
    let b = run(&["verify", "--genus", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("started"));
    let t = stdout(&run(&["verify", "--genus", "3", "--timestamps"]));
    assert!(t.starts_with("started: "));
    assert!(t.contains("finished: "));
}

#[test]
fn classify_summaries() {
    let g6 = stdout(&run(&["classify", "--genus", "6"]));
    assert!(g6.contains("possibly not: 4"), "{g6}");
    for nr in [9, 10, 13, 15] {
        let line = g6.lines().find(|l| l.starts_with(&format!("Nr. {nr} "))).unwrap();
        assert!(line.contains("PossiblyNotDefinable"), "{line}");
    }
    let g10 = stdout(&run(&["classify", "--genus", "10"]));
    assert!(g10.trim_end().ends_with("definable: 48, possibly not: 7"), "{g10}");
    let g3 = stdout(&run(&["classify", "--genus", "3"]));
    let nr5 = g3.lines().find(|l| l.starts_with("Nr. 5 ")).unwrap();
    assert!(nr5.contains("Definable(UniqueSubgroupCriterion)"));
}

#[test]
fn classify_json() {
    let o = run(&["classify", "--genus", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["classification"]["verdict"], "possibly_not_definable");
}

fn level_rows(out: &str) -> Vec<(u32, u32, String)> {
    out.lines()
        .skip(1)
        .map(|l| {
            let mut parts = l.split_whitespace();
            let n = parts.next().unwrap().parse().unwrap();
            let b = parts.next().unwrap().parse().unwrap();
            (n, b, parts.collect::<Vec<_>>().join(" "))
        })
        .collect()
}

#[test]
fn levels_genus_two() {
    let o = run(&["levels", "--genus", "2"]);
    assert_eq!(code(&o), 0);
    let pairs: Vec<(u32, u32)> = level_rows(&stdout(&o)).into_iter().map(|(n, b, _)| (n, b)).collect();
    assert_eq!(pairs, vec![(2, 6), (3, 4), (5, 3)]);
    assert_eq!(code(&run(&["levels", "--genus", "1"])), 2);
}

#[test]
fn levels_genus_five_candidates() {
    let rows = level_rows(&stdout(&run(&["levels", "--genus", "5"])));
    let pairs: Vec<(u32, u32)> = rows.iter().map(|(n, b, _)| (*n, *b)).collect();
    assert_eq!(pairs, vec![(2, 12), (3, 7), (6, 4), (11, 3)]);
    // The genus-5 table only uses levels 2 and 11.
    let realized: Vec<u32> = rows.iter().filter(|r| r.2 != "-").map(|r| r.0).collect();
    assert_eq!(realized, vec![2, 11]);
}

#[test]
#[ignore = "the genus-5 table has no rows at levels 3 and 6"]
fn levels_genus_five_all_realized() {
    let rows = level_rows(&stdout(&run(&["levels", "--genus", "5"])));
    assert!(rows.iter().all(|r| r.2 != "-"));
}

#[test]
fn levels_genus_six_level_thirteen() {
    let rows = level_rows(&stdout(&run(&["levels", "--genus", "6"])));
    assert!(rows.contains(&(13, 3, "8".to_string())));
}

#[test]
fn row_detail_views() {
    let o = run(&["row", "--genus", "10", "--nr", "51"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("y^3 = f_1(x)"));
    assert!(out.contains("delta           1"));
    assert!(out.contains("Definable(UniqueSubgroupCriterion)"));
    assert!(out.contains("A_4 block"));

    let out = stdout(&run(&["row", "--genus", "5", "--nr", "5"]));
    assert!(out.contains("printed (2, 22^2) corrected to (2, 11, 22)"), "{out}");

    let out = stdout(&run(&["row", "--genus", "9", "--nr", "22"]));
    assert!(out.contains("signature       7^5"));
    assert!(out.contains("Definable(OddSignature)"));
}

#[test]
fn unknown_row_is_usage_error() {
    assert_eq!(code(&run(&["row", "--genus", "9", "--nr", "99"])), 2);
}

#[test]
fn export_round_trip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        assert_eq!(
            code(&run(&["export", "--out", p.to_str().unwrap(), "--format", "json"])),
            0
        );
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());

    // Loading the export back gives identical output.
    let direct = run(&["list", "--genus", "8"]);
    let loaded = run(&["--data", a.to_str().unwrap(), "list", "--genus", "8"]);
    assert_eq!(direct.stdout, loaded.stdout);
    let c = dir.path().join("c.json");
    run(&["--data", a.to_str().unwrap(), "export", "--out", c.to_str().unwrap()]);
    assert_eq!(bytes, std::fs::read(&c).unwrap());
}

#[test]
fn export_csv_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("all.csv");
    assert_eq!(
        code(&run(&["export", "--out", p.to_str().unwrap(), "--format", "csv"])),
        0
    );
    assert_eq!(std::fs::read_to_string(&p).unwrap().lines().count(), 225);
}

#[test]
fn io_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope").join("x.json");
    assert_eq!(code(&run(&["export", "--out", missing.to_str().unwrap()])), 3);
    assert_eq!(
        code(&run(&["--data", missing.to_str().unwrap(), "list", "--genus", "3"])),
        3
    );
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(
        code(&run(&["--data", bad.to_str().unwrap(), "list", "--genus", "3"])),
        2
    );
}
