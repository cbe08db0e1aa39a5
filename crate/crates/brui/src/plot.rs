//! Tidy per-figure CSVs derived from earlier outputs.

use std::fs;
use std::path::{Path, PathBuf};

use crate::index_io::write_file;
use crate::{Error, Result};

fn read_table(path: &Path) -> Result<(Vec<String>, Vec<Vec<String>>)> {
    if !path.exists() {
        return Err(Error::Missing(path.to_path_buf()));
    }
    let mut reader = csv::Reader::from_path(path).map_err(|e| Error::parse(path, e))?;
    let headers = reader
        .headers()
        .map_err(|e| Error::parse(path, e))?
        .iter()
        .map(String::from)
        .collect();
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| Error::parse(path, e))?;
        rows.push(rec.iter().map(String::from).collect());
    }
    Ok((headers, rows))
}

fn column(path: &Path, headers: &[String], name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| Error::parse(path, format!("no column '{name}'")))
}

fn index_series(input: &Path, out: &Path, written: &mut Vec<PathBuf>) -> Result<()> {
    let path = input.join("index.csv");
    let (headers, rows) = read_table(&path)?;
    let m = column(&path, &headers, "month")?;
    for series in ["brui", "crui"] {
        let c = column(&path, &headers, series)?;
        let mut s = String::from("month,value\n");
        for r in &rows {
            s.push_str(&format!("{},{}\n", r[m], r[c]));
        }
        let target = out.join(format!("index_{series}.csv"));
        write_file(&target, &s)?;
        written.push(target);
    }
    Ok(())
}

/// One row per (shock, response, horizon); `row`/`col` place the panel in
/// a k×k grid with responses down and shocks across.
fn irf_grid(path: &Path, target: &Path) -> Result<()> {
    let (headers, rows) = read_table(path)?;
    let idx: Vec<usize> = ["horizon", "shock", "response", "point", "lower", "upper"]
        .iter()
        .map(|n| column(path, &headers, n))
        .collect::<Result<_>>()?;
    let mut names: Vec<&str> = Vec::new();
    for r in &rows {
        if !names.contains(&r[idx[1]].as_str()) {
            names.push(&r[idx[1]]);
        }
    }
    let pos = |n: &str| names.iter().position(|x| *x == n).unwrap_or(0);
    let mut sorted: Vec<&Vec<String>> = rows.iter().collect();
    sorted.sort_by_key(|r| {
        let h: usize = r[idx[0]].parse().unwrap_or(0);
        (pos(&r[idx[2]]), pos(&r[idx[1]]), h)
    });
    let mut s = String::from("row,col,shock,response,horizon,point,lower,upper\n");
    for r in sorted {
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            pos(&r[idx[2]]),
            pos(&r[idx[1]]),
            r[idx[1]],
            r[idx[2]],
            r[idx[0]],
            r[idx[3]],
            r[idx[4]],
            r[idx[5]]
        ));
    }
    write_file(target, &s)
}

/// Long-form shares: (response, period, shock, share).
fn fevd_stacked(dir: &Path, responses: &[String], target: &Path) -> Result<()> {
    let mut s = String::from("response,period,shock,share\n");
    for response in responses {
        let path = dir.join(format!("{response}.csv"));
        let (headers, rows) = read_table(&path)?;
        for r in &rows {
            for (j, shock) in headers.iter().enumerate().skip(1) {
                s.push_str(&format!("{response},{},{shock},{}\n", r[0], r[j]));
            }
        }
    }
    write_file(target, &s)
}

/// Reads the outputs found in `input` and writes plot tables to `out`.
///
/// Index and comparison files are used when present. Every sample marked
/// successful in `report.json` must have its response and decomposition
/// files. Finding nothing at all is an error.
pub fn run_plot_data(input: &Path, out: &Path) -> Result<Vec<PathBuf>> {
    if !input.is_dir() {
        return Err(Error::Missing(input.to_path_buf()));
    }
    let mut written = Vec::new();
    if input.join("index.csv").exists() {
        index_series(input, out, &mut written)?;
    }
    let report_path = input.join("report.json");
    if report_path.exists() {
        let text = fs::read_to_string(&report_path).map_err(|e| Error::io(&report_path, e))?;
        let report: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::parse(&report_path, e))?;
        let variables: Vec<String> = report["variables"]
            .as_array()
            .map(|a| a.iter().filter_map(|v| v.as_str().map(String::from)).collect())
            .unwrap_or_default();
        for sample in report["samples"].as_array().into_iter().flatten() {
            if sample["status"] != "ok" {
                continue;
            }
            let name = sample["name"]
                .as_str()
                .ok_or_else(|| Error::parse(&report_path, "sample without a name"))?;
            let grid = out.join(format!("irf_grid_{name}.csv"));
            irf_grid(&input.join(format!("irf_{name}.csv")), &grid)?;
            written.push(grid);
            let stacked = out.join(format!("fevd_stacked_{name}.csv"));
            fevd_stacked(&input.join("fevd").join(name), &variables, &stacked)?;
            written.push(stacked);
        }
    }
    let cmp = input.join("comparison.csv");
    if cmp.exists() {
        let target = out.join("compare.csv");
        let text = fs::read_to_string(&cmp).map_err(|e| Error::io(&cmp, e))?;
        write_file(&target, &text)?;
        written.push(target);
    }
    if written.is_empty() {
        return Err(Error::Missing(input.join("index.csv")));
    }
    Ok(written)
}
