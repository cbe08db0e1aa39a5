//! Test-only oracles and simulators, shared with the acceptance suite.
#![allow(dead_code, clippy::needless_range_loop)]

use brui_core::econ::{Matrix, VarModel};
use brui_core::lexicon::{
    DEFAULT_EVENT_A, DEFAULT_EVENT_B, DEFAULT_EXCLUSION_CONTEXT, DEFAULT_EXCLUSION_TRIGGER,
    DEFAULT_UNCERTAINTY,
};
use brui_core::stopwords::ENGLISH;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Word-at-a-time reference scanner over raw text: lowercases each char,
/// marks word characters, keeps hyphens/apostrophes flanked by word chars.
pub fn oracle_words(raw: &str) -> Vec<String> {
    let chars: Vec<char> = raw.chars().flat_map(char::to_lowercase).collect();
    let word = |i: usize| chars.get(i).is_some_and(|c| c.is_alphanumeric());
    let mut out = Vec::new();
    let mut cur = String::new();
    for i in 0..chars.len() {
        let c = chars[i];
        let joiner = matches!(c, '-' | '\'' | '\u{2019}') && i > 0 && word(i - 1) && word(i + 1);
        if word(i) || joiner {
            cur.push(if c == '\u{2019}' { '\'' } else { c });
        } else if !cur.is_empty() {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn strip(words: &[String]) -> Vec<String> {
    words
        .iter()
        .filter(|w| !ENGLISH.contains(&w.as_str()))
        .cloned()
        .collect()
}

fn phrase_forms(list: &[&str]) -> Vec<Vec<String>> {
    list.iter()
        .map(|p| {
            let w = oracle_words(p);
            let s = strip(&w);
            if s.is_empty() {
                w
            } else {
                s
            }
        })
        .collect()
}

fn occurs_at(stream: &[String], at: usize, phrase: &[String]) -> bool {
    at + phrase.len() <= stream.len() && stream[at..at + phrase.len()] == *phrase
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct OracleMonth {
    pub brukn: u64,
    pub crukn: u64,
    pub joint: u64,
    pub tbrukn: f64,
    pub tcrukn: f64,
    pub total_words: u64,
    pub brui_raw: f64,
    pub crui_raw: f64,
}

/// Enumerates every (uncertainty position, window slot, phrase) triple for
/// the bundled lexicon directly from raw text.
pub fn oracle_month(raw: &str, radius: usize) -> OracleMonth {
    let words = oracle_words(raw);
    let stream = strip(&words);
    let unc = phrase_forms(&DEFAULT_UNCERTAINTY);
    let ev_a = phrase_forms(&DEFAULT_EVENT_A);
    let ev_b = phrase_forms(&DEFAULT_EVENT_B);
    let ctx = phrase_forms(&DEFAULT_EXCLUSION_CONTEXT);
    let trigger = phrase_forms(&[DEFAULT_EXCLUSION_TRIGGER]).remove(0);
    let mut m = OracleMonth {
        total_words: words.len() as u64,
        ..Default::default()
    };
    for center in 0..stream.len() {
        if !unc.iter().any(|p| occurs_at(&stream, center, p)) {
            continue;
        }
        let lo = center.saturating_sub(radius);
        let hi = (center + radius).min(stream.len() - 1);
        let (mut a_hits, mut a_non_trigger, mut b_hit, mut ctx_hit) = (0, 0, false, false);
        for q in lo..=hi {
            for p in &ev_a {
                if occurs_at(&stream, q, p) {
                    a_hits += 1;
                    if *p != trigger {
                        a_non_trigger += 1;
                    }
                }
            }
            b_hit |= ev_b.iter().any(|p| occurs_at(&stream, q, p));
            ctx_hit |= ctx.iter().any(|p| occurs_at(&stream, q, p));
        }
        let excluded = a_hits > 0 && a_non_trigger == 0 && ctx_hit;
        match (a_hits > 0, b_hit) {
            _ if excluded => {}
            (true, true) => m.joint += 1,
            (true, false) => m.brukn += 1,
            (false, true) => m.crukn += 1,
            _ => {}
        }
    }
    let (b, c, j) = (m.brukn as f64, m.crukn as f64, m.joint as f64);
    if b + c == 0.0 {
        m.tbrukn = j / 2.0;
        m.tcrukn = j / 2.0;
    } else {
        m.tbrukn = b + j * (b / (b + c));
        m.tcrukn = c + j * (c / (b + c));
    }
    m.brui_raw = m.tbrukn / m.total_words as f64;
    m.crui_raw = m.tcrukn / m.total_words as f64;
    m
}

const FILLER: &[&str] = &[
    "economy",
    "growth",
    "the",
    "of",
    "a",
    "is",
    "from",
    "and",
    "market",
    "policy",
    "exit",
    "eu",
    "union",
    "trade",
    "deal",
    "uk",
    "scotland",
    "scottish",
    "government",
    "prices",
    "Inflation,",
    "outlook.",
    "(risk)",
    "50",
    "sterling's",
    "\u{2014}",
    "it's",
];

/// Random report text with planted lexicon phrases in random case.
pub fn random_report<R: Rng>(rng: &mut R, max_tokens: usize) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut n = 0;
    let target = rng.random_range(20..=max_tokens);
    while n < target {
        let pick = rng.random_range(0..10);
        let phrase: &str = match pick {
            0 | 1 => DEFAULT_UNCERTAINTY[rng.random_range(0..DEFAULT_UNCERTAINTY.len())],
            2 | 3 => DEFAULT_EVENT_A[rng.random_range(0..DEFAULT_EVENT_A.len())],
            4 => DEFAULT_EVENT_B[rng.random_range(0..DEFAULT_EVENT_B.len())],
            _ => FILLER[rng.random_range(0..FILLER.len())],
        };
        let words = phrase.split_whitespace().count();
        if n + words > max_tokens {
            break;
        }
        n += words;
        let cased = match rng.random_range(0..3) {
            0 => phrase.to_uppercase(),
            1 => phrase.to_lowercase(),
            _ => phrase.to_string(),
        };
        out.push(cased);
    }
    out.join(" ")
}

/// Random VAR(p) with Σ‖A_i‖_∞ ≤ 0.9 (hence stable) and a random SPD Σ.
pub fn random_stable_model<R: Rng>(rng: &mut R, k: usize, p: usize) -> VarModel {
    let mut coefficients: Vec<Matrix> = (0..p)
        .map(|_| {
            let rows: Vec<Vec<f64>> = (0..k)
                .map(|_| (0..k).map(|_| rng.random_range(-1.0..1.0)).collect())
                .collect();
            Matrix::from_rows(&rows)
        })
        .collect();
    let norm: f64 = coefficients
        .iter()
        .map(|a| {
            (0..k)
                .map(|r| a.row(r).iter().map(|v| v.abs()).sum::<f64>())
                .fold(0.0, f64::max)
        })
        .sum();
    let target = rng.random_range(0.1..0.9);
    for a in &mut coefficients {
        a.scale(target / norm);
    }
    let b = Matrix::from_rows(
        &(0..k)
            .map(|_| (0..k).map(|_| rng.random_range(-1.0..1.0)).collect())
            .collect::<Vec<_>>(),
    );
    let mut sigma = b.matmul(&b.transpose());
    for i in 0..k {
        sigma[(i, i)] += 0.05;
    }
    VarModel {
        lag_order: p,
        intercept: vec![0.0; k],
        coefficients,
        sigma,
        residuals: Matrix::zeros(1, k),
        n_obs: 1,
    }
}

/// Simulates `t` observations of y_t = c + Σ A_i y_{t−i} + L e_t after a burn-in.
pub fn simulate<R: Rng>(rng: &mut R, model: &VarModel, t: usize) -> Matrix {
    let k = model.k();
    let p = model.lag_order;
    let l = brui_core::econ::cholesky_factor(&model.sigma).unwrap();
    let burn = 200;
    let mut rows: Vec<Vec<f64>> = vec![vec![0.0; k]; p];
    for _ in 0..t + burn {
        let hist: Vec<&[f64]> = rows[rows.len() - p..].iter().map(|r| r.as_slice()).collect();
        let mut y = model.conditional_mean(&hist);
        let e: Vec<f64> = (0..k).map(|_| StandardNormal.sample(rng)).collect();
        for r in 0..k {
            y[r] += (0..=r).map(|c| l[(r, c)] * e[c]).sum::<f64>();
        }
        rows.push(y);
    }
    Matrix::from_rows(&rows[rows.len() - t..])
}

pub fn diag_var1(a: [f64; 2]) -> VarModel {
    VarModel {
        lag_order: 1,
        intercept: vec![0.0, 0.0],
        coefficients: vec![Matrix::from_rows(&[vec![a[0], 0.0], vec![0.0, a[1]]])],
        sigma: Matrix::identity(2),
        residuals: Matrix::zeros(1, 2),
        n_obs: 1,
    }
}
