//! Full wrap-around edit-distance table.
//!
//! `T[i, j]` is the least edit distance between `S[0..i]` and any subword of
//! `P^∞` whose last symbol sits at period position `j - 1 (mod p)`. The table is
//! the set of shortest-path distances in a grid graph on vertices `(i, j)`,
//! `0 ≤ i ≤ n`, `j ∈ Z_p`, with arcs
//!
//! * `(i, j) → (i + 1, j)` of weight 1 (delete `S[i]`),
//! * `(i, j) → (i + 1, j ⊕ 1)` of weight `[S[i] ≠ P[j]]`,
//! * `(i, j) → (i, j ⊕ 1)` of weight 1 (insert `P[j]`),
//!
//! measured from the whole of row 0. The insertion arcs wrap around each row,
//! so the table is filled by a 0/1 breadth-first search over a double-ended
//! queue rather than by a plain row sweep.

use std::collections::VecDeque;

use crate::error::{invalid, Result};
use crate::naive::DistanceMatrix;

/// Dense `(n + 1) × p` table, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrapTable {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl WrapTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Length of the text the table was built for.
    pub fn n(&self) -> usize {
        self.rows - 1
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    pub fn last_row(&self) -> &[u32] {
        self.row(self.rows - 1)
    }

    /// `min_j T[n, j]`, which is the least `ED(S, U^∞)` over all rotations `U`
    /// of the periodic word.
    pub fn min_distance_any_rotation(&self) -> u32 {
        *self.last_row().iter().min().expect("table has at least one column")
    }

    /// Re-evaluates the defining recurrence on every cell and reports whether
    /// the table is a fixpoint of it.
    pub fn satisfies_recurrence(&self, s: &[u8], p_word: &[u8]) -> bool {
        let p = self.cols;
        if s.len() + 1 != self.rows || p_word.len() != p {
            return false;
        }
        if self.row(0).iter().any(|&v| v != 0) {
            return false;
        }
        for i in 0..s.len() {
            for j in 0..p {
                let next = (j + 1) % p;
                let expected = (self.get(i, next) + 1)
                    .min(self.get(i, j) + u32::from(s[i] != p_word[j]))
                    .min(self.get(i + 1, j) + 1);
                if self.get(i + 1, next) != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds the full table for `s` against `p_word^∞`.
pub fn full_table(s: &[u8], p_word: &[u8]) -> Result<WrapTable> {
    if p_word.is_empty() {
        return invalid("periodic word must be nonempty");
    }
    let n = s.len();
    let p = p_word.len();
    let rows = n + 1;
    let total = rows * p;
    if total > u32::MAX as usize {
        return invalid(format!("table of {rows}×{p} cells is too large"));
    }

    let mut dist = vec![u32::MAX; total];
    let mut settled = vec![false; total];
    let mut queue: VecDeque<u32> = VecDeque::with_capacity(2 * p);
    for (j, d) in dist[..p].iter_mut().enumerate() {
        *d = 0;
        queue.push_back(j as u32);
    }

    while let Some(v) = queue.pop_front() {
        let v = v as usize;
        if settled[v] {
            continue;
        }
        settled[v] = true;
        let (i, j) = (v / p, v % p);
        let here = dist[v];
        let next = if j + 1 == p { 0 } else { j + 1 };

        let mut relax = |to: usize, w: u32, queue: &mut VecDeque<u32>| {
            let cand = here + w;
            if cand < dist[to] {
                dist[to] = cand;
                if w == 0 {
                    queue.push_front(to as u32);
                } else {
                    queue.push_back(to as u32);
                }
            }
        };

        relax(i * p + next, 1, &mut queue);
        if i < n {
            relax((i + 1) * p + next, u32::from(s[i] != p_word[j]), &mut queue);
            relax((i + 1) * p + j, 1, &mut queue);
        }
    }

    Ok(WrapTable {
        rows,
        cols: p,
        cells: dist,
    })
}

/// Evaluates `T[i, j]` straight from its definition: the least edit distance
/// between `S[0..i]` and a window `P^∞[start..start + len]` ending at period
/// position `j - 1`.
///
/// Starts range over `[0, p)` and lengths over `[0, 2i]`. The empty window
/// already costs `i`, and any window longer than `2i` costs more than `i`, so
/// nothing outside the range can be optimal.
pub fn definition_check(s: &[u8], p_word: &[u8], i: usize, j: usize) -> Result<u32> {
    if p_word.is_empty() {
        return invalid("periodic word must be nonempty");
    }
    let p = p_word.len();
    if i > s.len() || j >= p {
        return invalid(format!("cell ({i}, {j}) outside table of {} rows and {p} columns", s.len() + 1));
    }
    let prefix = &s[..i];
    let mut best = u32::MAX;
    for start in 0..p {
        let window: Vec<u8> = (0..2 * i).map(|t| p_word[(start + t) % p]).collect();
        // Row `i` of the DP against the longest window holds the distance to
        // every shorter window with the same start.
        let dp = DistanceMatrix::new(prefix, &window);
        for len in 0..=2 * i {
            if (start + len) % p == j {
                best = best.min(dp.get(i, len) as u32);
            }
        }
    }
    Ok(best)
}
