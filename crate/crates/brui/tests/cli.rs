mod common;

use std::fs;
use std::path::Path;

use common::*;

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Corpus, panel and a config for a small analysis, written under `root`.
fn small_setup(root: &Path, subperiods: &str) -> std::path::PathBuf {
    write_corpus(&root.join("corpus"), "2012-05", 60, 400, 3);
    write_panel(&root.join("panel.csv"), "2012-01", 70, 4);
    // inline assignments must precede the tables
    let (head, tail) = if subperiods.starts_with("subperiods =") {
        (subperiods, "")
    } else {
        ("", subperiods)
    };
    let cfg = format!(
        "corpus_dir = \"corpus\"\npanel_path = \"panel.csv\"\nvariable_order = [\"BRUI\", \"GDP\", \"CPI\"]\n\
         horizons = 6\n{head}[lag]\np_max = 3\n[bootstrap]\nreps = 49\nseed = 11\n{tail}"
    );
    let path = root.join("config.toml");
    fs::write(&path, cfg).unwrap();
    path
}

#[test]
fn build_index_three_months() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("c");
    write_corpus(&corpus, "2016-05", 3, 300, 1);
    let out = tmp.path().join("out");
    let o = run(&["build-index", "--quiet", "--corpus", s(&corpus), "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let (h, rows) = read_csv(&out.join("index.csv"));
    assert_eq!(h[0], "month");
    assert_eq!(rows.len(), 3);
    let brui = h.iter().position(|c| c == "brui").unwrap();
    let max = rows
        .iter()
        .map(|r| r[brui].parse::<f64>().unwrap())
        .fold(0.0, f64::max);
    assert_eq!(max, 100.0);
    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("index_summary.json")).unwrap()).unwrap();
    assert_eq!(summary["months"], 3);
    assert_eq!(summary["categories"].as_array().unwrap().len(), 3);
    assert!(summary["keywords"]
        .as_array()
        .unwrap()
        .iter()
        .any(|k| k["zero"] == true));
    assert!(out.join("index.json").exists());
}

#[test]
fn missing_corpus_dir_names_path() {
    let tmp = tempfile::tempdir().unwrap();
    let missing = tmp.path().join("nowhere");
    let o = run(&[
        "build-index",
        "--corpus",
        s(&missing),
        "--out",
        s(&tmp.path().join("o")),
    ]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: missing: "), "{err}");
    assert!(err.contains(s(&missing)), "{err}");
}

#[test]
fn cross_category_duplicate_lexicon() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("c");
    write_corpus(&corpus, "2016-05", 2, 100, 1);
    let lex = tmp.path().join("lex.toml");
    fs::write(&lex, "event_b = [\"covid\", \"single market\"]\n").unwrap();
    let o = run(&[
        "build-index",
        "--corpus",
        s(&corpus),
        "--lexicon",
        s(&lex),
        "--out",
        s(&tmp.path().join("o")),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("single market"), "{}", stderr(&o));
}

#[test]
fn bad_report_name_is_reported_with_path() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = tmp.path().join("c");
    write_corpus(&corpus, "2016-05", 2, 100, 1);
    fs::write(corpus.join("june.txt"), "brexit").unwrap();
    let o = run(&[
        "build-index",
        "--corpus",
        s(&corpus),
        "--out",
        s(&tmp.path().join("o")),
    ]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("june.txt"), "{}", stderr(&o));
}

#[test]
fn analyze_is_deterministic_and_fevd_starts_at_100() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small_setup(tmp.path(), "subperiods = []\n");
    let (a, b) = (tmp.path().join("a"), tmp.path().join("b"));
    for out in [&a, &b] {
        let o = run(&["analyze", "--quiet", "--config", s(&cfg), "--out", s(out)]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    assert_eq!(snapshot(&a), snapshot(&b));

    let (h, rows) = read_csv(&a.join("fevd/full/BRUI.csv"));
    assert_eq!(h, ["period", "BRUI", "GDP", "CPI"]);
    assert_eq!(rows[0], ["1", "100", "0", "0"]);
    assert_eq!(rows.len(), 6);

    let (h, rows) = read_csv(&a.join("irf_full.csv"));
    assert_eq!(h, ["horizon", "shock", "response", "point", "lower", "upper"]);
    assert_eq!(rows.len(), 7 * 9);

    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(a.join("report.json")).unwrap()).unwrap();
    assert_eq!(report["seed"], 11);
    let full = &report["samples"][0];
    assert_eq!(full["status"], "ok");
    assert_eq!(full["bootstrap_reps"], 49);
    assert!(full["lag_order"].as_u64().unwrap() >= 1);
    assert_eq!(full["criterion_values"].as_array().unwrap().len(), 3);
    assert_eq!(report["conventions"]["residual_covariance_divisor"], "T - p");
}

#[test]
fn failed_subperiod_does_not_stop_others() {
    let tmp = tempfile::tempdir().unwrap();
    let subs = "[[subperiods]]\nname = \"tiny\"\nstart = \"2013-01\"\nend = \"2013-04\"\n\
                [[subperiods]]\nname = \"late\"\nstart = \"2014-01\"\nend = \"2017-04\"\n\
                [[subperiods]]\nname = \"outside\"\nstart = \"2009-01\"\nend = \"2013-04\"\n";
    let cfg = small_setup(tmp.path(), subs);
    let out = tmp.path().join("o");
    let o = run(&["analyze", "--quiet", "--config", s(&cfg), "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    let status: Vec<&str> = report["samples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["status"].as_str().unwrap())
        .collect();
    assert_eq!(status, ["ok", "failed", "ok", "failed"]);
    assert!(report["samples"][1]["error"]
        .as_str()
        .unwrap()
        .contains("insufficient"));
    assert!(report["samples"][3]["error"]
        .as_str()
        .unwrap()
        .contains("outside"));
    assert!(out.join("irf_late.csv").exists());
    assert!(!out.join("irf_tiny.csv").exists());
}

#[test]
fn rerun_from_echoed_config_reproduces() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small_setup(tmp.path(), "subperiods = []\n");
    fs::write(&cfg, fs::read_to_string(&cfg).unwrap().replace("seed = 11\n", "")).unwrap();
    let (a, b, c) = (tmp.path().join("a"), tmp.path().join("b"), tmp.path().join("c"));
    let o = run(&["analyze", "--quiet", "--config", s(&cfg), "--out", s(&a)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&[
        "analyze",
        "--quiet",
        "--config",
        s(&a.join("report.json")),
        "--out",
        s(&b),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&[
        "analyze",
        "--quiet",
        "--config",
        s(&a.join("effective_config.toml")),
        "--out",
        s(&c),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let snap = snapshot(&a);
    assert_eq!(snap, snapshot(&b));
    assert_eq!(snap, snapshot(&c));
}

#[test]
fn full_sample_failure_exits_nonzero() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = small_setup(tmp.path(), "subperiods = []\n");
    let text = fs::read_to_string(&cfg)
        .unwrap()
        .replace("p_max = 3", "fixed = 40");
    fs::write(&cfg, text).unwrap();
    let out = tmp.path().join("o");
    let o = run(&["analyze", "--quiet", "--config", s(&cfg), "--out", s(&out)]);
    assert!(!o.status.success());
    assert!(
        stderr(&o).starts_with("error: analysis: full sample failed"),
        "{}",
        stderr(&o)
    );
    assert!(out.join("report.json").exists());
}

fn write_series(path: &Path, start: &str, n: usize, f: impl Fn(usize) -> f64) {
    let mut csv = String::from("month,value\n");
    for (i, m) in months(start, n).iter().enumerate() {
        csv.push_str(&format!("{m},{}\n", f(i)));
    }
    fs::write(path, csv).unwrap();
}

#[test]
fn compare_and_plot_data() {
    let tmp = tempfile::tempdir().unwrap();
    let root = tmp.path();
    let x = |i: usize| (i as f64 * 0.37).sin() * 10.0 + i as f64 * 0.1;
    write_series(&root.join("a.csv"), "2013-01", 120, x);
    write_series(&root.join("neg.csv"), "2013-01", 120, |i| -x(i));
    write_series(&root.join("long.csv"), "2012-01", 157, |i| x(i) + 1.0);
    let out = root.join("o");

    let o = run(&[
        "compare",
        "--quiet",
        s(&root.join("a.csv")),
        s(&root.join("a.csv")),
        "--out",
        s(&out),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rep: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("correlation.json")).unwrap()).unwrap();
    assert!((rep["r"].as_f64().unwrap() - 1.0).abs() <= 1e-12);

    let o = run(&[
        "compare",
        "--quiet",
        s(&root.join("a.csv")),
        s(&root.join("neg.csv")),
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let rep: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("correlation.json")).unwrap()).unwrap();
    assert!((rep["r"].as_f64().unwrap() + 1.0).abs() <= 1e-12);

    let o = run(&[
        "compare",
        "--quiet",
        s(&root.join("a.csv")),
        s(&root.join("long.csv")),
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let rep: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("correlation.json")).unwrap()).unwrap();
    assert_eq!(rep["overlap_start"], "2013-01");
    assert_eq!(rep["overlap_end"], "2022-12");
    assert_eq!(rep["n"], 120);
    let (h, rows) = read_csv(&out.join("comparison.csv"));
    assert_eq!(h, ["month", "a", "b"]);
    assert_eq!(rows.len(), 120);

    fs::write(
        root.join("flat.csv"),
        "month,value\n2013-01,1\n2013-02,1\n2013-03,1\n",
    )
    .unwrap();
    let o = run(&[
        "compare",
        s(&root.join("a.csv")),
        s(&root.join("flat.csv")),
        "--out",
        s(&out),
    ]);
    assert!(!o.status.success());
    write_series(&root.join("far.csv"), "2030-01", 5, x);
    let o = run(&[
        "compare",
        s(&root.join("a.csv")),
        s(&root.join("far.csv")),
        "--out",
        s(&out),
    ]);
    assert!(!o.status.success());

    // analysis outputs in the same directory, then the plot tables
    let cfg = small_setup(root, "subperiods = []\n");
    let o = run(&["analyze", "--quiet", "--config", s(&cfg), "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["plot-data", "--quiet", "--out", s(&out)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let plot = out.join("plot");
    for f in [
        "index_brui.csv",
        "index_crui.csv",
        "irf_grid_full.csv",
        "fevd_stacked_full.csv",
        "compare.csv",
    ] {
        assert!(plot.join(f).exists(), "{f}");
    }
    let (h, rows) = read_csv(&plot.join("irf_grid_full.csv"));
    assert_eq!(
        h,
        ["row", "col", "shock", "response", "horizon", "point", "lower", "upper"]
    );
    assert_eq!(rows.len(), 9 * 7);
    let (h, rows) = read_csv(&plot.join("index_brui.csv"));
    assert_eq!(h, ["month", "value"]);
    assert_eq!(rows.len(), 60);
    let (_, rows) = read_csv(&plot.join("fevd_stacked_full.csv"));
    assert_eq!(rows.len(), 3 * 6 * 3);

    fs::remove_file(out.join("irf_full.csv")).unwrap();
    let o = run(&["plot-data", "--quiet", "--out", s(&out)]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("irf_full.csv"));
    let o = run(&["plot-data", s(&root.join("empty")), "--out", s(&out)]);
    assert!(!o.status.success());
}
