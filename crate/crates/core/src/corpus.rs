//! Seeded corpora: a random primitive period repeated to length `n`, then a
//! number of random edits.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`. The period is drawn from stream 0 and the edits from
//! stream 1, so the same seed gives the same bytes on every platform.
//!
//! Alphabets of up to 26 symbols use `A`, `B`, ...; larger ones use the byte
//! values `0..alphabet_size`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::recovery::primitive;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub p: usize,
    pub n: usize,
    pub edits: usize,
    pub alphabet_size: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if self.p == 0 {
            return bad("period length must be at least 1".into());
        }
        if self.n < self.p {
            return bad(format!("length {} is shorter than the period {}", self.n, self.p));
        }
        if !(1..=256).contains(&self.alphabet_size) {
            return bad(format!("alphabet size {} not in 1..=256", self.alphabet_size));
        }
        if self.alphabet_size == 1 && self.p > 1 {
            return bad("no primitive word of length > 1 over a unary alphabet".into());
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Vec<u8> {
        alphabet(self.alphabet_size)
    }
}

pub fn alphabet(size: usize) -> Vec<u8> {
    if size <= 26 {
        (0..size as u8).map(|c| b'A' + c).collect()
    } else {
        (0..size).map(|c| c as u8).collect()
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Length-`n` prefix of `P^∞` for a random primitive `P` of length `p`.
pub fn gen_periodic(spec: &GenSpec) -> Result<Vec<u8>> {
    Ok(periodic_with_word(spec)?.0)
}

/// Like [`gen_periodic`], also returning the period.
pub fn periodic_with_word(spec: &GenSpec) -> Result<(Vec<u8>, Vec<u8>)> {
    spec.validate()?;
    let symbols = spec.alphabet();
    let mut rng = rng(spec.seed, 0);
    let word = loop {
        let w: Vec<u8> = (0..spec.p)
            .map(|_| symbols[rng.random_range(0..symbols.len())])
            .collect();
        if primitive(&w)? {
            break w;
        }
    };
    let text = word.iter().cycle().take(spec.n).copied().collect();
    Ok((text, word))
}

/// Applies `edits` random insertions, deletions and substitutions in turn.
/// Deletions and substitutions drawn against an empty string are redrawn.
pub fn inject_edits(s: &[u8], edits: usize, seed: u64, symbols: &[u8]) -> Result<Vec<u8>> {
    if symbols.is_empty() {
        return Err(Error::InvalidSpec("empty alphabet".into()));
    }
    let mut rng = rng(seed, 1);
    let mut out = s.to_vec();
    let mut applied = 0;
    while applied < edits {
        let op = rng.random_range(0..3u8);
        if op != 0 && out.is_empty() {
            continue;
        }
        match op {
            0 => {
                let at = rng.random_range(0..=out.len());
                let c = symbols[rng.random_range(0..symbols.len())];
                out.insert(at, c);
            }
            1 => {
                let at = rng.random_range(0..out.len());
                out.remove(at);
            }
            _ => {
                let at = rng.random_range(0..out.len());
                out[at] = symbols[rng.random_range(0..symbols.len())];
            }
        }
        applied += 1;
    }
    Ok(out)
}

/// Periodic text with `spec.edits` edits injected.
pub fn generate(spec: &GenSpec) -> Result<Vec<u8>> {
    let base = gen_periodic(spec)?;
    inject_edits(&base, spec.edits, spec.seed, &spec.alphabet())
}
