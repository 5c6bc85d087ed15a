//! Thresholded last row of the wrap-around table in `O(n + kp)`.
//!
//! Values along a diagonal `T[i, j ⊕ i]` never decrease, so the cells within
//! cost `d` on diagonal `j` form a prefix of that diagonal. `D[d, j]` records
//! the deepest such row. Level `d + 1` follows from level `d` with one unit
//! step (substitution on the same diagonal, insertion from `j ⊖ 1`, deletion
//! from `j ⊕ 1`) and then a run of free matches, found in one lcp query
//! against `P^∞`. The first level at which diagonal `j` reaches row `n` is
//! `T[n, j ⊕ n]`.
//!
//! Reading the last row of the table built for the reversed words gives the
//! distance to each rotation's infinite power: `ED(S, (P[j..]·P[..j])^∞)` sits
//! at column `p ⊖ j` of the reversed table.

use crate::error::{invalid, Result};
use crate::lcp_index::LcpIndex;

/// One level `d` of the frontier: `entries[j] = D[d, j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierRow {
    pub d: usize,
    pub entries: Vec<usize>,
}

/// Last row of the wrap-around table, cut at `k`. `None` marks a column whose
/// value exceeds `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApmOutcome {
    pub k: usize,
    pub per_column: Vec<Option<usize>>,
}

/// `ED(S, U_j^∞)` for every rotation `U_j = P[j..]·P[..j]`, cut at `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationDistances {
    pub k: usize,
    pub per_rotation: Vec<Option<usize>>,
}

impl RotationDistances {
    /// The rotation `P[j..]·P[..j]`.
    pub fn rotation(p_word: &[u8], j: usize) -> Vec<u8> {
        let mut w = p_word[j..].to_vec();
        w.extend_from_slice(&p_word[..j]);
        w
    }
}

/// Full trace of one kangaroo run.
#[derive(Debug, Clone)]
pub struct ApmRun {
    pub outcome: ApmOutcome,
    /// Every level `0..=k`, kept only when requested.
    pub frontiers: Vec<FrontierRow>,
    pub lcp_queries: u64,
}

/// Runs the frontier computation over a prebuilt index for `S # P^r`.
pub fn run_on_index(idx: &LcpIndex, k: usize, keep_frontiers: bool) -> ApmRun {
    let n = idx.text().n();
    let p = idx.text().p();
    let mut per_column: Vec<Option<usize>> = vec![None; p];
    let mut frontiers = Vec::new();
    let mut lcp_queries = 0u64;

    let mut prev = vec![0usize; p];
    let mut cur = vec![0usize; p];
    for d in 0..=k {
        for j in 0..p {
            let i = if d == 0 {
                0
            } else {
                let left = prev[if j == 0 { p - 1 } else { j - 1 }];
                let right = prev[if j + 1 == p { 0 } else { j + 1 }];
                (prev[j] + 1).max(left).max(right + 1).min(n)
            };
            lcp_queries += 1;
            let reach = i + idx.periodic_lcp(i, (i + j) % p);
            cur[j] = reach;
            if reach == n {
                let col = (j + n) % p;
                if per_column[col].is_none() {
                    per_column[col] = Some(d);
                }
            }
        }
        debug_assert!(d == 0 || cur.iter().zip(&prev).all(|(c, q)| c >= q));
        if keep_frontiers {
            frontiers.push(FrontierRow {
                d,
                entries: cur.clone(),
            });
        }
        std::mem::swap(&mut prev, &mut cur);
    }

    ApmRun {
        outcome: ApmOutcome { k, per_column },
        frontiers,
        lcp_queries,
    }
}

/// Every `T[n, j] ≤ k`, with `None` for the rest.
pub fn last_row_thresholded(s: &[u8], p_word: &[u8], k: usize) -> Result<ApmOutcome> {
    Ok(last_row_run(s, p_word, k, false)?.outcome)
}

/// Like [`last_row_thresholded`], also returning the frontiers (if asked) and
/// the number of lcp queries issued.
pub fn last_row_run(s: &[u8], p_word: &[u8], k: usize, keep_frontiers: bool) -> Result<ApmRun> {
    if p_word.is_empty() {
        return invalid("periodic word must be nonempty");
    }
    let idx = LcpIndex::build(s, p_word)?;
    Ok(run_on_index(&idx, k, keep_frontiers))
}

/// Distance from `s` to every rotation's infinite power, cut at `k`.
pub fn rotation_distances(s: &[u8], p_word: &[u8], k: usize) -> Result<RotationDistances> {
    if p_word.is_empty() {
        return invalid("periodic word must be nonempty");
    }
    let s_rev: Vec<u8> = s.iter().rev().copied().collect();
    let p_rev: Vec<u8> = p_word.iter().rev().copied().collect();
    let reversed = last_row_thresholded(&s_rev, &p_rev, k)?;
    let p = p_word.len();
    let per_rotation = (0..p)
        .map(|j| reversed.per_column[(p - j) % p])
        .collect();
    Ok(RotationDistances { k, per_rotation })
}
