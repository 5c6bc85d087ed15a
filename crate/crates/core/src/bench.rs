//! Timing harness for the two APM engines.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::corpus::{inject_edits, periodic_with_word, GenSpec};
use crate::error::{Error, Result};
use crate::kangaroo::last_row_thresholded;
use crate::wraparound::full_table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Kangaroo,
    Full,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Kangaroo => "kangaroo",
            Engine::Full => "full",
        })
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kangaroo" => Ok(Engine::Kangaroo),
            "full" => Ok(Engine::Full),
            _ => Err(Error::InvalidInput(format!("unknown engine {s:?}"))),
        }
    }
}

/// Last row of the wrap-around table cut at `k`, by either engine.
pub fn last_row(engine: Engine, s: &[u8], p_word: &[u8], k: usize) -> Result<Vec<Option<usize>>> {
    match engine {
        Engine::Kangaroo => Ok(last_row_thresholded(s, p_word, k)?.per_column),
        Engine::Full => {
            let table = full_table(s, p_word)?;
            Ok(table
                .last_row()
                .iter()
                .map(|&v| (v as usize <= k).then_some(v as usize))
                .collect())
        }
    }
}

/// Per-rotation distances `ED(S, (P[j..]·P[..j])^∞)` cut at `k`, read from
/// the last row built for the reversed words.
pub fn rotation_row(engine: Engine, s: &[u8], p_word: &[u8], k: usize) -> Result<Vec<Option<usize>>> {
    let s_rev: Vec<u8> = s.iter().rev().copied().collect();
    let p_rev: Vec<u8> = p_word.iter().rev().copied().collect();
    let row = last_row(engine, &s_rev, &p_rev, k)?;
    let p = p_word.len();
    Ok((0..p).map(|j| row[(p - j) % p]).collect())
}

/// Wall time of one engine run on a monotonic clock.
pub fn time_once(engine: Engine, s: &[u8], p_word: &[u8], k: usize) -> Result<Duration> {
    let start = Instant::now();
    black_box(last_row(engine, black_box(s), black_box(p_word), k)?);
    Ok(start.elapsed())
}

/// Median over `runs` (at least one) timings.
pub fn median_time(engine: Engine, s: &[u8], p_word: &[u8], k: usize, runs: usize) -> Result<Duration> {
    let mut times = (0..runs.max(1))
        .map(|_| time_once(engine, s, p_word, k))
        .collect::<Result<Vec<_>>>()?;
    times.sort();
    Ok(times[times.len() / 2])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub engine: Engine,
    pub n: usize,
    pub p: usize,
    pub k: usize,
    pub nanos: u128,
}

impl BenchRow {
    pub const HEADER: &'static str = "engine\tn\tp\tk\tnanoseconds";

    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}\t{}", self.engine, self.n, self.p, self.k, self.nanos)
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub p: usize,
    pub k: usize,
    pub sizes: Vec<usize>,
    pub engines: Vec<Engine>,
    pub seed: u64,
    pub edits: usize,
    pub alphabet_size: usize,
    pub runs: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            p: 64,
            k: 8,
            sizes: (16..=20).map(|e| 1usize << e).collect(),
            engines: vec![Engine::Kangaroo, Engine::Full],
            seed: 1,
            edits: 8,
            alphabet_size: 4,
            runs: 3,
        }
    }
}

/// Seeded corpus for one size: periodic text with edits, and its period.
pub fn bench_corpus(cfg: &BenchConfig, n: usize) -> Result<(Vec<u8>, Vec<u8>)> {
    let spec = GenSpec {
        p: cfg.p,
        n,
        edits: cfg.edits,
        alphabet_size: cfg.alphabet_size,
        seed: cfg.seed,
    };
    let (text, word) = periodic_with_word(&spec)?;
    let text = inject_edits(&text, cfg.edits, cfg.seed, &spec.alphabet())?;
    Ok((text, word))
}

/// One row per (size, engine), each the median of `cfg.runs` runs.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in &cfg.sizes {
        let (text, word) = bench_corpus(cfg, n)?;
        for &engine in &cfg.engines {
            let t = median_time(engine, &text, &word, cfg.k, cfg.runs)?;
            rows.push(BenchRow {
                engine,
                n,
                p: cfg.p,
                k: cfg.k,
                nanos: t.as_nanos(),
            });
        }
    }
    Ok(rows)
}
