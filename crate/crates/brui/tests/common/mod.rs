#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use brui_core::lexicon::{DEFAULT_EVENT_A, DEFAULT_EVENT_B, DEFAULT_UNCERTAINTY};
use brui_core::Month;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub const MACRO_VARIABLES: [&str; 9] = ["GDP", "CPI", "PPI", "X", "M", "GBP_EUR", "GBP_USD", "EMP", "UEMP"];

const PROSE: &[&str] = &[
    "the",
    "economy",
    "grew",
    "by",
    "per",
    "cent",
    "in",
    "quarter",
    "while",
    "household",
    "spending",
    "remained",
    "firm",
    "and",
    "business",
    "investment",
    "picked",
    "up",
    "as",
    "exporters",
    "reported",
    "stronger",
    "orders",
    "bank",
    "of",
    "england",
    "held",
    "interest",
    "rates",
    "steady",
    "sterling",
    "against",
    "dollar",
    "labour",
    "market",
    "stayed",
    "tight",
    "with",
    "wage",
    "growth",
    "above",
    "inflation",
    "government",
    "announced",
    "fiscal",
    "measures",
    "to",
    "support",
    "manufacturing",
    "output",
    "services",
    "sector",
    "expanded",
    "modestly",
    "over",
    "month",
    "forecasts",
    "were",
    "revised",
    "slightly",
    "lower",
    "for",
    "next",
    "year",
    "housing",
    "prices",
    "edged",
];

pub fn brui_bin() -> &'static str {
    env!("CARGO_BIN_EXE_brui")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(brui_bin()).args(args).output().expect("binary runs")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// A report of about `words` tokens of economic prose. Event-A talk near an
/// uncertainty word is planted at least once, with a month-dependent
/// intensity; event-B talk likewise, at a lower rate.
pub fn report_text(rng: &mut ChaCha8Rng, words: usize, intensity: f64) -> String {
    let mut out: Vec<String> = Vec::with_capacity(words + 16);
    let pick = |rng: &mut ChaCha8Rng, list: &[&str]| list[rng.random_range(0..list.len())].to_string();
    out.push(pick(rng, &DEFAULT_UNCERTAINTY));
    out.push("about".into());
    out.push(pick(rng, &DEFAULT_EVENT_A));
    out.extend(PROSE[..12].iter().map(|w| w.to_string()));
    out.push(pick(rng, &DEFAULT_EVENT_B));
    out.push("remains".into());
    out.push(pick(rng, &DEFAULT_UNCERTAINTY));
    while out.len() < words {
        let u: f64 = rng.random();
        if u < 0.004 * intensity {
            out.push(pick(rng, &DEFAULT_UNCERTAINTY));
            out.push(pick(rng, PROSE));
            out.push(pick(rng, &DEFAULT_EVENT_A));
        } else if u < 0.004 * intensity + 0.002 {
            out.push(pick(rng, &DEFAULT_EVENT_B));
            out.push(pick(rng, PROSE));
            out.push(pick(rng, &DEFAULT_UNCERTAINTY));
        } else {
            let w = pick(rng, PROSE);
            out.push(if rng.random_range(0..12) == 0 {
                format!("{w}.")
            } else {
                w
            });
        }
    }
    out.join(" ")
}

pub fn months(start: &str, n: usize) -> Vec<Month> {
    let mut m: Month = start.parse().unwrap();
    (0..n)
        .map(|_| {
            let cur = m;
            m = m.succ();
            cur
        })
        .collect()
}

pub fn write_corpus(dir: &Path, start: &str, n: usize, words: usize, seed: u64) -> Vec<Month> {
    fs::create_dir_all(dir).unwrap();
    let ms = months(start, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, m) in ms.iter().enumerate() {
        let intensity = 1.0 + 2.0 * (i as f64 / 9.0).sin().abs();
        fs::write(
            dir.join(format!("{m}.txt")),
            report_text(&mut rng, words, intensity),
        )
        .unwrap();
    }
    ms
}

/// Positive level series for the macro variables: log random walks with
/// drift, plus a small feed from past shocks of the others.
pub fn write_panel(path: &Path, start: &str, n: usize, seed: u64) {
    let ms = months(start, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = MACRO_VARIABLES.len();
    let mut level = vec![0.0f64; k];
    let mut prev = vec![0.0f64; k];
    let mut csv = format!("month,{}\n", MACRO_VARIABLES.join(","));
    for m in &ms {
        let shocks: Vec<f64> = (0..k).map(|_| StandardNormal.sample(&mut rng)).collect();
        for j in 0..k {
            level[j] += 0.001 + 0.01 * shocks[j] + 0.003 * prev[(j + 1) % k];
        }
        prev = shocks;
        let row: Vec<String> = level.iter().map(|l| format!("{:.6}", 100.0 * l.exp())).collect();
        csv.push_str(&format!("{m},{}\n", row.join(",")));
    }
    fs::write(path, csv).unwrap();
}

/// Every file under `dir`, keyed by relative path.
pub fn snapshot(dir: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    fn walk(root: &Path, dir: &Path, out: &mut BTreeMap<PathBuf, Vec<u8>>) {
        for e in fs::read_dir(dir).unwrap() {
            let p = e.unwrap().path();
            if p.is_dir() {
                walk(root, &p, out);
            } else {
                out.insert(p.strip_prefix(root).unwrap().to_path_buf(), fs::read(&p).unwrap());
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(dir, dir, &mut out);
    out
}

pub fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let h = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|x| x.unwrap().iter().map(String::from).collect())
        .collect();
    (h, rows)
}
