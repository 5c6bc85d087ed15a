//! Brute-force ground truth. Nothing here is meant to be fast.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::recovery::{primitive, tau, RecoveryParams};

/// Classic `(|a| + 1) × (|b| + 1)` Levenshtein table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    cols: usize,
    cells: Vec<usize>,
}

impl DistanceMatrix {
    pub fn new(a: &[u8], b: &[u8]) -> Self {
        let cols = b.len() + 1;
        let mut cells = vec![0; (a.len() + 1) * cols];
        for j in 0..cols {
            cells[j] = j;
        }
        for i in 1..=a.len() {
            cells[i * cols] = i;
            for j in 1..cols {
                let sub = cells[(i - 1) * cols + j - 1] + usize::from(a[i - 1] != b[j - 1]);
                let del = cells[(i - 1) * cols + j] + 1;
                let ins = cells[i * cols + j - 1] + 1;
                cells[i * cols + j] = sub.min(del).min(ins);
            }
        }
        Self { cols, cells }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.cols + j]
    }

    pub fn rows(&self) -> usize {
        self.cells.len() / self.cols
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn distance(&self) -> usize {
        *self.cells.last().unwrap()
    }
}

pub fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    DistanceMatrix::new(a, b).distance()
}

/// `ED(s, u^∞)`: least edit distance between `s` and a prefix of `u^∞`.
///
/// Only prefixes up to `2|s|` are tried. The empty prefix costs `|s|`, and a
/// prefix longer than `2|s|` needs more than `|s|` insertions.
pub fn ed_to_prefix(s: &[u8], u: &[u8]) -> Result<usize> {
    if u.is_empty() {
        return invalid("periodic word must be nonempty");
    }
    let w: Vec<u8> = u.iter().cycle().take(2 * s.len()).copied().collect();
    // Last row of the DP of s against w gives every prefix length at once.
    let m = DistanceMatrix::new(s, &w);
    Ok((0..m.cols()).map(|j| m.get(s.len(), j)).min().unwrap())
}

/// Every approximate word-period of `s`, found by trying all distinct subwords.
/// Returns `word -> distance`.
pub fn brute_apr(s: &[u8], params: RecoveryParams) -> BTreeMap<Vec<u8>, usize> {
    let n = s.len();
    let mut out = BTreeMap::new();
    let mut seen = std::collections::HashSet::new();
    for p in 1..=n {
        let t = tau(n, p, params);
        if t == 0 {
            continue;
        }
        for start in 0..=n - p {
            let word = &s[start..start + p];
            if !seen.insert(word) || !primitive(word).unwrap_or(false) {
                continue;
            }
            let d = ed_to_prefix(s, word).expect("subword is nonempty");
            if (d as u64) < t {
                out.insert(word.to_vec(), d);
            }
        }
    }
    out
}
