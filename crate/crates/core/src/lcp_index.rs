//! Constant-time lcp queries between a text and a periodic word.
//!
//! The index is built over the composite word `S # P^r`, where `r` is the
//! smallest positive integer with `r·p ≥ n + p`. That length guarantees that
//! every suffix `P^∞[j..]`, `j < p`, has a representative `P^r[j..]` at least
//! `n` symbols long, which is all an lcp against a suffix of `S` can consume.
//!
//! The separator is not a byte value. Position `n` is compared as a symbol
//! strictly below every byte, so the full 8-bit alphabet stays available.
//!
//! Construction: suffix array by induced sorting (SA-IS), Kasai's algorithm
//! for the adjacent lcp array, and a sparse table for range minima. A prefix
//! doubling sorter is kept as a second, independent construction.

use crate::error::{invalid, Result};

/// The word `S # P^r` with the separator held by position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeText {
    /// `S`, a placeholder byte at `sentinel_pos`, then `P^r`. The placeholder
    /// is never read as a symbol; use [`CompositeText::symbol`].
    body: Vec<u8>,
    n: usize,
    p: usize,
    r: usize,
}

impl CompositeText {
    pub fn new(s: &[u8], p_word: &[u8]) -> Result<Self> {
        if p_word.is_empty() {
            return invalid("periodic word must be nonempty");
        }
        let n = s.len();
        let p = p_word.len();
        let r = (n + p).div_ceil(p).max(1);
        let mut body = Vec::with_capacity(n + 1 + r * p);
        body.extend_from_slice(s);
        body.push(0);
        for _ in 0..r {
            body.extend_from_slice(p_word);
        }
        Ok(Self { body, n, p, r })
    }

    /// Symbol at `pos`: `0` for the separator, `byte + 1` elsewhere.
    #[inline]
    pub fn symbol(&self, pos: usize) -> u16 {
        if pos == self.n {
            0
        } else {
            self.body[pos] as u16 + 1
        }
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        self.body.is_empty()
    }

    /// Length of `S`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Length of `P`.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of copies of `P` after the separator.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn sentinel_pos(&self) -> usize {
        self.n
    }

    /// Raw bytes; the byte at [`Self::sentinel_pos`] is meaningless.
    pub fn raw(&self) -> &[u8] {
        &self.body
    }
}

/// Sparse table over a `u32` array: `O(m log m)` words, `O(1)` queries.
#[derive(Debug, Clone)]
pub struct RangeMin {
    levels: Vec<Vec<u32>>,
}

impl RangeMin {
    pub fn new(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|t| prev[t].min(prev[t + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    /// Minimum of `values[lo..hi]`; `lo < hi` is required.
    #[inline]
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo < hi);
        let level = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        let row = &self.levels[level];
        row[lo].min(row[hi - (1 << level)])
    }
}

/// Suffix array, inverse, adjacent lcp array and range-minimum structure over a
/// [`CompositeText`]. Immutable after construction.
#[derive(Debug, Clone)]
pub struct LcpIndex {
    text: CompositeText,
    suffix_order: Vec<u32>,
    rank: Vec<u32>,
    adjacent_lcp: Vec<u32>,
    range_min: RangeMin,
}

impl LcpIndex {
    pub fn build(s: &[u8], p_word: &[u8]) -> Result<Self> {
        let text = CompositeText::new(s, p_word)?;
        let suffix_order = suffix_array_sais(&text);
        let mut rank = vec![0u32; suffix_order.len()];
        for (t, &pos) in suffix_order.iter().enumerate() {
            rank[pos as usize] = t as u32;
        }
        let adjacent_lcp = kasai(&text, &suffix_order, &rank);
        let range_min = RangeMin::new(&adjacent_lcp);
        Ok(Self {
            text,
            suffix_order,
            rank,
            adjacent_lcp,
            range_min,
        })
    }

    pub fn text(&self) -> &CompositeText {
        &self.text
    }

    pub fn suffix_order(&self) -> &[u32] {
        &self.suffix_order
    }

    pub fn rank(&self) -> &[u32] {
        &self.rank
    }

    pub fn adjacent_lcp(&self) -> &[u32] {
        &self.adjacent_lcp
    }

    pub fn range_min(&self) -> &RangeMin {
        &self.range_min
    }

    /// Longest common prefix of `body[a..]` and `body[b..]`. Positions may equal
    /// the body length (the empty suffix).
    pub fn lcp_suffixes(&self, a: usize, b: usize) -> Result<usize> {
        let m = self.text.len();
        if a > m || b > m {
            return invalid(format!("suffix position out of range: ({a}, {b}) for length {m}"));
        }
        Ok(self.lcp_unchecked(a, b))
    }

    #[inline]
    fn lcp_unchecked(&self, a: usize, b: usize) -> usize {
        let m = self.text.len();
        if a == b {
            return m - a;
        }
        if a == m || b == m {
            return 0;
        }
        let (ra, rb) = (self.rank[a] as usize, self.rank[b] as usize);
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.range_min.min(lo, hi) as usize
    }

    /// `min(n - i, lcp(S[i..], P^∞[j..]))` for `i ≤ n`, `j < p`.
    pub fn lcp_text_vs_periodic(&self, i: usize, j: usize) -> Result<usize> {
        if i > self.text.n || j >= self.text.p {
            return invalid(format!(
                "periodic lcp query out of range: i={i} (n={}), j={j} (p={})",
                self.text.n, self.text.p
            ));
        }
        Ok(self.periodic_lcp(i, j))
    }

    /// Unchecked form of [`Self::lcp_text_vs_periodic`].
    #[inline]
    pub(crate) fn periodic_lcp(&self, i: usize, j: usize) -> usize {
        let n = self.text.n;
        if i == n {
            return 0;
        }
        // The separator caps the match at n - i already.
        self.lcp_unchecked(i, n + 1 + j).min(n - i)
    }
}

/// Suffix array of the composite text by induced sorting, `O(m)`.
pub fn suffix_array_sais(text: &CompositeText) -> Vec<u32> {
    let symbols: Vec<u32> = (0..text.len()).map(|i| text.symbol(i) as u32).collect();
    sais(&symbols, 256)
}

const EMPTY: u32 = u32::MAX;

/// SA-IS over `s` with symbols in `0..=upper`. No terminator is required: the
/// end of the string compares below every symbol.
fn sais(s: &[u32], upper: usize) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }

    // is_s[i]: suffix i is smaller than suffix i + 1.
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] { is_s[i + 1] } else { s[i] < s[i + 1] };
    }

    // Bucket boundaries: sum_l[c] is where L-suffixes starting with c begin,
    // sum_s[c] where S-suffixes starting with c begin.
    let mut sum_l = vec![0u32; upper + 2];
    let mut sum_s = vec![0u32; upper + 2];
    for i in 0..n {
        if is_s[i] {
            sum_l[s[i] as usize + 1] += 1;
        } else {
            sum_s[s[i] as usize] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        if c < upper {
            sum_l[c + 1] += sum_s[c];
        }
    }

    let mut sa = vec![EMPTY; n];
    let induce = |sa: &mut Vec<u32>, lms: &[u32]| {
        sa.iter_mut().for_each(|v| *v = EMPTY);
        let mut buf = sum_s.clone();
        for &d in lms {
            let c = s[d as usize] as usize;
            sa[buf[c] as usize] = d;
            buf[c] += 1;
        }
        buf.copy_from_slice(&sum_l);
        let c = s[n - 1] as usize;
        sa[buf[c] as usize] = (n - 1) as u32;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != EMPTY && v >= 1 && !is_s[v as usize - 1] {
                let c = s[v as usize - 1] as usize;
                sa[buf[c] as usize] = v - 1;
                buf[c] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != EMPTY && v >= 1 && is_s[v as usize - 1] {
                let c = s[v as usize - 1] as usize + 1;
                buf[c] -= 1;
                sa[buf[c] as usize] = v - 1;
            }
        }
    };

    let mut lms_map = vec![EMPTY; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !is_s[i - 1] && is_s[i] {
            lms_map[i] = lms.len() as u32;
            lms.push(i as u32);
        }
    }
    induce(&mut sa, &lms);

    let m = lms.len();
    if m > 0 {
        let mut sorted_lms: Vec<u32> = sa
            .iter()
            .copied()
            .filter(|&v| lms_map[v as usize] != EMPTY)
            .collect();
        // Name LMS substrings; equal names mean equal substrings.
        let mut reduced = vec![0u32; m];
        let mut names = 0usize;
        reduced[lms_map[sorted_lms[0] as usize] as usize] = 0;
        let end_of = |v: usize| -> usize {
            let t = lms_map[v] as usize;
            if t + 1 < m {
                lms[t + 1] as usize
            } else {
                n
            }
        };
        for w in 1..m {
            let (mut l, mut r) = (sorted_lms[w - 1] as usize, sorted_lms[w] as usize);
            let (end_l, end_r) = (end_of(l), end_of(r));
            let mut same = end_l - l == end_r - r;
            if same {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                names += 1;
            }
            reduced[lms_map[sorted_lms[w] as usize] as usize] = names as u32;
        }
        let reduced_sa = sais(&reduced, names);
        for (slot, &t) in sorted_lms.iter_mut().zip(&reduced_sa) {
            *slot = lms[t as usize];
        }
        induce(&mut sa, &sorted_lms);
    }
    sa
}

/// Suffix array by prefix doubling, `O(m log m)`. After the round with offset
/// `k`, `rank` orders suffixes by their first `2k` symbols.
pub fn suffix_array_doubling(text: &CompositeText) -> Vec<u32> {
    let m = text.len();
    if m == 0 {
        return Vec::new();
    }

    // Round zero: bucket by single symbol (alphabet of 257 including separator).
    let mut rank: Vec<u32> = (0..m).map(|i| text.symbol(i) as u32).collect();
    let mut sa = vec![0u32; m];
    let mut count = vec![0usize; 258.max(m + 1)];
    for &c in &rank {
        count[c as usize + 1] += 1;
    }
    for c in 1..count.len() {
        count[c] += count[c - 1];
    }
    for i in 0..m {
        let c = rank[i] as usize;
        sa[count[c]] = i as u32;
        count[c] += 1;
    }
    let mut next_rank = vec![0u32; m];
    let mut classes = relabel(&sa, &mut next_rank, |a, b| rank[a] == rank[b]);
    std::mem::swap(&mut rank, &mut next_rank);

    let mut by_second = vec![0u32; m];
    let mut k = 1;
    while classes < m {
        // Order by second key: suffixes whose second half is empty come first.
        let mut t = 0;
        for i in m.saturating_sub(k)..m {
            by_second[t] = i as u32;
            t += 1;
        }
        for &pos in &sa {
            if pos as usize >= k {
                by_second[t] = pos - k as u32;
                t += 1;
            }
        }

        // Stable counting sort by first key.
        count[..=classes].iter_mut().for_each(|c| *c = 0);
        for &r in &rank {
            count[r as usize + 1] += 1;
        }
        for c in 1..=classes {
            count[c] += count[c - 1];
        }
        for &pos in &by_second {
            let c = rank[pos as usize] as usize;
            sa[count[c]] = pos;
            count[c] += 1;
        }

        let second = |i: usize| -> i64 {
            if i + k < m {
                rank[i + k] as i64
            } else {
                -1
            }
        };
        classes = relabel(&sa, &mut next_rank, |a, b| {
            rank[a] == rank[b] && second(a) == second(b)
        });
        std::mem::swap(&mut rank, &mut next_rank);
        k *= 2;
    }
    sa
}

/// Assigns dense ranks along `sa`, starting a new class wherever `same` fails.
/// Returns the number of classes.
fn relabel(sa: &[u32], out: &mut [u32], same: impl Fn(usize, usize) -> bool) -> usize {
    let mut class = 0u32;
    out[sa[0] as usize] = 0;
    for w in sa.windows(2) {
        let (prev, cur) = (w[0] as usize, w[1] as usize);
        if !same(prev, cur) {
            class += 1;
        }
        out[cur] = class;
    }
    class as usize + 1
}

fn kasai(text: &CompositeText, sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let m = sa.len();
    let mut lcp = vec![0u32; m.saturating_sub(1)];
    let mut h = 0usize;
    for i in 0..m {
        let r = rank[i] as usize;
        if r + 1 == m {
            h = 0;
            continue;
        }
        let j = sa[r + 1] as usize;
        while i + h < m && j + h < m && text.symbol(i + h) == text.symbol(j + h) {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
