//! Approximate period recovery.
//!
//! A primitive word `P` of length `p` is an approximate word-period of `S`
//! (`|S| = n`) when some prefix of `P^∞` lies at edit distance below
//! `τ_p = ⌊n / ((3.75 + ε)·p)⌋`.
//!
//! For each `p` with `τ_p ≥ 1` the pipeline proposes candidate rotation
//! classes and verifies every rotation of every class at once with
//! [`rotation_distances`] at threshold `k = τ_p - 1`.
//!
//! # Candidates
//!
//! `S` is cut into `t = τ_p` disjoint blocks of length `L = ⌊n / t⌋`. Because
//! `n / t ≥ (3.75 + ε)·p`, every block is longer than `2p`. An alignment of `S`
//! with a prefix of `P^∞` that costs at most `t - 1` edits leaves at least one
//! block untouched, and that block equals a subword of `P^∞` of length at least
//! `p`. Its first `p` symbols are therefore a rotation of `P`. Taking the
//! length-`p` prefix of each block and collapsing rotations gives at most `t`
//! classes, one of which contains `P`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::kangaroo::{rotation_distances, RotationDistances};

/// `ε = epsilon_num / epsilon_den`, kept exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecoveryParams {
    epsilon_num: u64,
    epsilon_den: u64,
}

impl RecoveryParams {
    pub fn new(epsilon_num: u64, epsilon_den: u64) -> Result<Self> {
        if epsilon_num == 0 || epsilon_den == 0 {
            return invalid(format!("epsilon must be a positive fraction, got {epsilon_num}/{epsilon_den}"));
        }
        if epsilon_num > u32::MAX as u64 || epsilon_den > u32::MAX as u64 {
            return invalid("epsilon numerator and denominator must fit in 32 bits");
        }
        Ok(Self {
            epsilon_num,
            epsilon_den,
        })
    }

    pub fn epsilon_num(&self) -> u64 {
        self.epsilon_num
    }

    pub fn epsilon_den(&self) -> u64 {
        self.epsilon_den
    }

    /// Numerator of `3.75 + ε`.
    pub fn factor_num(&self) -> u64 {
        15 * self.epsilon_den + 4 * self.epsilon_num
    }

    /// Denominator of `3.75 + ε`.
    pub fn factor_den(&self) -> u64 {
        4 * self.epsilon_den
    }
}

impl Default for RecoveryParams {
    /// `ε = 1/20`.
    fn default() -> Self {
        Self {
            epsilon_num: 1,
            epsilon_den: 20,
        }
    }
}

impl fmt::Display for RecoveryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.epsilon_num, self.epsilon_den)
    }
}

impl FromStr for RecoveryParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("bad epsilon {s:?}, expected NUM/DEN")))
        };
        match s.split_once('/') {
            Some((num, den)) => Self::new(parse(num)?, parse(den)?),
            None => Self::new(parse(s)?, 1),
        }
    }
}

/// `τ_p = ⌊n·factor_den / (factor_num·p)⌋`, in integers.
pub fn tau(n: usize, p: usize, params: RecoveryParams) -> u64 {
    if p == 0 {
        return 0;
    }
    let num = n as u128 * params.factor_den() as u128;
    let den = params.factor_num() as u128 * p as u128;
    (num / den) as u64
}

/// Failure function of `word`: `border[i]` is the longest proper border of
/// `word[..=i]`.
fn borders(word: &[u8]) -> Vec<usize> {
    let mut border = vec![0usize; word.len()];
    let mut b = 0;
    for i in 1..word.len() {
        while b > 0 && word[i] != word[b] {
            b = border[b - 1];
        }
        if word[i] == word[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// Whether `word` is not of the form `Q^k`, `k ≥ 2`.
pub fn primitive(word: &[u8]) -> Result<bool> {
    if word.is_empty() {
        return invalid("primitivity is undefined for the empty word");
    }
    let p = word.len();
    let q = p - borders(word)[p - 1];
    Ok(q == p || !p.is_multiple_of(q))
}

/// Start of the lexicographically least rotation, smallest offset on ties.
pub fn canonical_rotation(word: &[u8]) -> usize {
    let p = word.len();
    if p <= 1 {
        return 0;
    }
    // Two-candidate elimination: after a mismatch at depth `k`, the losing
    // start and the `k` starts after it cannot be least.
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < p && j < p && k < p {
        let a = word[(i + k) % p];
        let b = word[(j + k) % p];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// All rotations of one primitive word, held as the least of them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationClass {
    pub canonical: Vec<u8>,
    /// Index of the first block whose prefix fell in this class.
    pub block: usize,
    /// Offset of the canonical rotation inside that block's prefix.
    pub offset: usize,
}

impl RotationClass {
    pub fn p(&self) -> usize {
        self.canonical.len()
    }
}

/// Candidate rotation classes for period length `p`, ordered by canonical word.
pub fn candidate_rotation_classes(
    s: &[u8],
    p: usize,
    params: RecoveryParams,
) -> Result<Vec<RotationClass>> {
    let n = s.len();
    let t = tau(n, p, params) as usize;
    if t == 0 {
        return invalid(format!("threshold for p={p} at n={n} is zero"));
    }
    let block_len = n / t;
    debug_assert!(block_len >= p);
    let mut classes: BTreeMap<Vec<u8>, RotationClass> = BTreeMap::new();
    for block in 0..t {
        let source = &s[block * block_len..block * block_len + p];
        if !primitive(source)? {
            continue;
        }
        let offset = canonical_rotation(source);
        let canonical = RotationDistances::rotation(source, offset);
        classes.entry(canonical.clone()).or_insert(RotationClass {
            canonical,
            block,
            offset,
        });
    }
    Ok(classes.into_values().collect())
}

/// One recovered approximate word-period.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodReport {
    pub p: usize,
    pub word: Vec<u8>,
    /// `ED(S, word^∞)`.
    pub distance: usize,
    pub tau: u64,
    /// Block whose length-`p` prefix generated the class.
    pub block: usize,
    /// Rotation of that block prefix that yields `word`.
    pub offset: usize,
}

/// Period lengths with a positive threshold.
pub fn feasible_lengths(n: usize, params: RecoveryParams) -> impl Iterator<Item = usize> {
    (1..=n).take_while(move |&p| tau(n, p, params) >= 1)
}

fn verify_class(s: &[u8], class: &RotationClass, t: u64) -> Result<Vec<PeriodReport>> {
    let p = class.p();
    let dists = rotation_distances(s, &class.canonical, (t - 1) as usize)?;
    Ok(dists
        .per_rotation
        .iter()
        .enumerate()
        .filter_map(|(j, d)| {
            d.map(|distance| PeriodReport {
                p,
                word: RotationDistances::rotation(&class.canonical, j),
                distance,
                tau: t,
                block: class.block,
                offset: (class.offset + j) % p,
            })
        })
        .collect())
}

/// All approximate word-periods of `s`, sorted by `(p, word)`.
pub fn recover(s: &[u8], params: RecoveryParams) -> Vec<PeriodReport> {
    recover_with_jobs(s, params, 1)
}

/// [`recover`] with class verification spread over `jobs` threads. The output
/// does not depend on `jobs`.
pub fn recover_with_jobs(s: &[u8], params: RecoveryParams, jobs: usize) -> Vec<PeriodReport> {
    let n = s.len();
    let tasks: Vec<(RotationClass, u64)> = feasible_lengths(n, params)
        .flat_map(|p| {
            let t = tau(n, p, params);
            candidate_rotation_classes(s, p, params)
                .expect("threshold is positive")
                .into_iter()
                .map(move |c| (c, t))
        })
        .collect();

    let jobs = jobs.max(1).min(tasks.len().max(1));
    let found: Vec<PeriodReport> = if jobs == 1 {
        tasks
            .iter()
            .flat_map(|(c, t)| verify_class(s, c, *t).expect("canonical word is nonempty"))
            .collect()
    } else {
        let chunk = tasks.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = tasks
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        part.iter()
                            .flat_map(|(c, t)| {
                                verify_class(s, c, *t).expect("canonical word is nonempty")
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("verification thread panicked"))
                .collect()
        })
    };

    // Distinct classes never share a word; the set only fixes the order.
    let unique: BTreeSet<PeriodReport> = found.into_iter().collect();
    let mut out: Vec<PeriodReport> = Vec::with_capacity(unique.len());
    for r in unique {
        if out.last().is_none_or(|prev: &PeriodReport| (prev.p, &prev.word) != (r.p, &r.word)) {
            out.push(r);
        }
    }
    out
}

/// Renders a byte word as a string, one char per byte (Latin-1).
pub fn word_to_string(word: &[u8]) -> String {
    word.iter().map(|&b| b as char).collect()
}

#[derive(Serialize)]
struct JsonPeriod {
    word: String,
    p: usize,
    distance: usize,
    tau: u64,
}

#[derive(Serialize)]
struct JsonReport {
    n: usize,
    epsilon: String,
    periods: Vec<JsonPeriod>,
}

/// JSON report: `{"n", "epsilon", "periods": [{"word", "p", "distance", "tau"}]}`.
pub fn report_json(n: usize, params: RecoveryParams, periods: &[PeriodReport]) -> String {
    let report = JsonReport {
        n,
        epsilon: params.to_string(),
        periods: periods
            .iter()
            .map(|r| JsonPeriod {
                word: word_to_string(&r.word),
                p: r.p,
                distance: r.distance,
                tau: r.tau,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&report).expect("report serializes")
}

/// Escapes a word for a TSV cell: `\t`, `\n`, `\r`, `\\` and bytes outside
/// printable ASCII become backslash escapes.
pub fn tsv_escape(word: &[u8]) -> String {
    let mut out = String::with_capacity(word.len());
    for &b in word {
        match b {
            b'\t' => out.push_str("\\t"),
            b'\n' => out.push_str("\\n"),
            b'\r' => out.push_str("\\r"),
            b'\\' => out.push_str("\\\\"),
            0x20..=0x7e => out.push(b as char),
            _ => out.push_str(&format!("\\x{b:02x}")),
        }
    }
    out
}

/// TSV report: header `word\tp\tdistance\ttau`, then one row per period.
pub fn report_tsv(periods: &[PeriodReport]) -> String {
    let mut out = String::from("word\tp\tdistance\ttau\n");
    for r in periods {
        out.push_str(&format!("{}\t{}\t{}\t{}\n", tsv_escape(&r.word), r.p, r.distance, r.tau));
    }
    out
}
