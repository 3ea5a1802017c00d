use std::process::{Command, Output};

fn alhc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alhc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn theta_worked_example() {
    let o = alhc(&["bijection", "theta", "--k", "4", "--partition", "10,10,9,8,7,7,7,7,5,4,3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "6,12,13,11,12,14,4,3,2\n");
    let back = alhc(&["bijection", "theta-inv", "--k", "4", "--composition", "6,12,13,11,12,14,4,3,2"]);
    assert_eq!(stdout(&back), "10,10,9,8,7,7,7,7,5,4,3\n");
}

#[test]
fn trace_ends_with_image() {
    let o = alhc(&["bijection", "theta", "--k", "4", "--partition", "3,2,2", "--trace"]);
    let text = stdout(&o);
    assert!(text.starts_with("# # o\n-----\n# #\n-----\n# #\n"), "{text}");
    assert!(text.contains("combined:\n"), "{text}");
    let plain = stdout(&alhc(&["bijection", "theta", "--k", "4", "--partition", "3,2,2"]));
    assert_eq!(text.lines().last().unwrap(), plain.trim_end());
}

#[test]
fn count_empty_family() {
    let o = alhc(&["count", "F", "--k", "0", "--n", "5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1,0,0,0,0,0\n");
}

#[test]
fn count_csv_table() {
    let o = alhc(&["--format", "csv", "count", "Q", "--k", "2", "--n", "6"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,k,n,count"));
    let counts: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(counts, ["1", "0", "1", "1", "1", "1", "2"]);
}

#[test]
fn verify_main_passes() {
    let o = alhc(&["verify", "main", "--k", "4", "--order", "40"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o), "PASS main k=4 order=40\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "nope"][..],
        &["verify", "main"],
        &["verify", "main", "--k", "2"],
        &["frobnicate"],
        &["count", "F", "--n", "3"],
        &["count", "Z", "--n", "3"],
        &["count", "A", "--n", "100000"],
        &["bijection", "theta", "--k", "2", "--partition", "3,1"],
        &["bijection", "theta", "--k", "1", "--partition", "3"],
        &["bijection", "theta", "--k", "3", "--partition", "1,2"],
        &["bijection", "theta", "--k", "3", "--partition", "x"],
        &["bijection", "theta-inv", "--k", "3", "--composition", "1"],
        &["bijection", "theta-inv", "--k", "3"],
        &["decompose", "--composition", "1,3", "--k", "3"],
        &["decompose", "--composition", "9", "--k", "3"],
        &["decompose", "--composition", "2", "--k", "0"],
        &["series", "--identity", "conv", "--k", "2"],
        &["series", "F"],
    ] {
        let o = alhc(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"), "{args:?}");
    }
}

#[test]
fn json_lines_records_parse() {
    let runs: &[&[&str]] = &[
        &["count", "H", "--k", "5", "--n", "8"],
        &["series", "D", "--order", "10"],
        &["series", "--identity", "generr", "--k", "3", "--a", "2", "--order", "15"],
        &["verify", "rr2", "--order", "30"],
        &["bijection", "theta", "--k", "4", "--partition", "10,10,9,8,7,7,7,7,5,4,3", "--trace"],
        &["decompose", "--composition", "4,8,11,14,16,15,11,10,5,2", "--k", "3"],
        &["list"],
        &["verify-all"],
    ];
    for args in runs {
        let mut full = vec!["--format", "json-lines"];
        full.extend_from_slice(args);
        let o = alhc(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        let text = stdout(&o);
        assert!(!text.is_empty());
        for line in text.lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap_or_else(|e| panic!("{args:?}: {e}: {line}"));
        }
    }
}

#[test]
fn verify_all_is_ordered_and_complete() {
    let o = alhc(&["--format", "json-lines", "verify-all"]);
    let records: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let ids: Vec<&str> = records.iter().map(|r| r["id"].as_str().unwrap()).collect();
    let expected: Vec<&str> = alhc::identities::default_grid().iter().map(|(id, _, _)| *id).collect();
    assert_eq!(ids, expected);
    assert!(records.iter().all(|r| r["passed"] == true));
}

#[test]
fn decompose_reports_levels() {
    let o = alhc(&["--format", "json-lines", "decompose", "--composition", "4,8,11,14,16,15,11,10,5,2", "--k", "3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["ns"], serde_json::json!([8, 5]));
    assert_eq!(v["tail"], serde_json::json!([5, 2]));
    assert_eq!(v["s"][0], serde_json::json!([1, 1, 1, 1, 1, 2, 1, 1]));
}

#[test]
fn series_sides_and_families() {
    let o = alhc(&["series", "--identity", "rr1", "--side", "lhs", "--order", "12"]);
    assert_eq!(stdout(&o), "1,1,1,1,2,2,3,3,4,5,6,7,9\n");
    let both = stdout(&alhc(&["series", "--identity", "rr1", "--order", "4"]));
    assert_eq!(both, "lhs: 1,1,1,1,2\nrhs: 1,1,1,1,2\n");
    let o = alhc(&["series", "overpartitions", "--order", "7"]);
    assert_eq!(stdout(&o), "1,2,4,8,14,24,40,64\n");
}
