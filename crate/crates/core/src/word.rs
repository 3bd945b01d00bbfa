//! Braid word problem via handle reduction.
//!
//! A handle is a subword `sigma_i^e v sigma_i^-e` whose interior `v` uses
//! only generators of index strictly greater than `i`. Reducing it deletes
//! the two boundary letters and rewrites each interior `sigma_(i+1)^d` as
//! `sigma_(i+1)^-e sigma_i^d sigma_(i+1)^e`; interior letters of higher index
//! pass through unchanged. Repeated reduction terminates, and a fully
//! reduced nonempty word is never trivial: all surviving letters of the
//! lowest occurring index share one sign, which pins the element strictly to
//! one side of the identity. Emptiness after reduction therefore decides
//! triviality.

use crate::braid::{free_reduce_vec, BraidWord};
use thiserror::Error;

/// Cap on handle reductions per call. Handle reduction always terminates,
/// but intermediate words can balloon; the limit turns pathological inputs
/// into an error instead of an apparent hang.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("handle reduction exceeded {limit} steps")]
    StepLimitExceeded { limit: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
}

/// Position span of the first handle: the earliest right end wins, so
/// low-index handles are found before anything that could enclose them.
fn find_handle(letters: &[i32], strands: usize) -> Option<(usize, usize)> {
    // last[i] = latest occurrence of sigma_i^e with no letter of index <= i
    // after it, as (position, e).
    let mut last: Vec<Option<(usize, i32)>> = vec![None; strands];
    for (x, &l) in letters.iter().enumerate() {
        let i = l.unsigned_abs() as usize;
        let e = l.signum();
        for slot in last.iter_mut().skip(i + 1) {
            *slot = None;
        }
        match last[i] {
            Some((y, f)) if f == -e => return Some((y, x)),
            _ => last[i] = Some((x, e)),
        }
    }
    None
}

fn reduce_handle(letters: &[i32], y: usize, x: usize) -> Vec<i32> {
    let i = letters[y].unsigned_abs() as i32;
    let e = letters[y].signum();
    let mut out = Vec::with_capacity(letters.len() + 2 * (x - y));
    out.extend_from_slice(&letters[..y]);
    for &m in &letters[y + 1..x] {
        if m.unsigned_abs() as i32 == i + 1 {
            out.push(-e * (i + 1));
            out.push(m.signum() * i);
            out.push(e * (i + 1));
        } else {
            out.push(m);
        }
    }
    out.extend_from_slice(&letters[x + 1..]);
    out
}

pub fn handle_reduce(word: &BraidWord) -> Result<BraidWord, WordError> {
    handle_reduce_with_limit(word, DEFAULT_STEP_LIMIT)
}

pub fn handle_reduce_with_limit(
    word: &BraidWord,
    limit: usize,
) -> Result<BraidWord, WordError> {
    let mut letters = word.letters().to_vec();
    free_reduce_vec(&mut letters);
    let mut steps = 0usize;
    while let Some((y, x)) = find_handle(&letters, word.strands()) {
        steps += 1;
        if steps > limit {
            return Err(WordError::StepLimitExceeded { limit });
        }
        letters = reduce_handle(&letters, y, x);
        free_reduce_vec(&mut letters);
    }
    Ok(BraidWord::new(word.strands(), letters).expect("reduction preserves letter range"))
}

/// Whether the word represents the identity braid.
pub fn is_trivial(word: &BraidWord) -> Result<bool, WordError> {
    Ok(handle_reduce(word)?.is_empty())
}

/// Whether two words represent the same braid group element.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, WordError> {
    braids_equal_with_limit(a, b, DEFAULT_STEP_LIMIT)
}

pub fn braids_equal_with_limit(
    a: &BraidWord,
    b: &BraidWord,
    limit: usize,
) -> Result<bool, WordError> {
    if a.strands() != b.strands() {
        return Err(WordError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    let diff = a.concat(&b.inverse()).expect("strand counts match");
    Ok(handle_reduce_with_limit(&diff, limit)?.is_empty())
}

/// The two sides of a telescoping identity on `2n + 2` strands: for every
/// `k` in `0..=2n-1`,
///
/// ```text
/// (sigma_2n^-1 .. sigma_1^-1)^(2n+1) (sigma_1 .. sigma_2n+1)^(2n)
///   = (sigma_2n^-1 .. sigma_1^-1)^(2n-k)
///     (sigma_2n+1 sigma_2n .. sigma_2n+1-k)
///     (sigma_1 .. sigma_2n+1)^(2n-k-1)
/// ```
///
/// Pushing `k` to `2n - 1` trades almost all torus passes for one descending
/// run, which is the word-level engine behind the widest unlink family.
pub fn reduction_identity_pair(
    n: usize,
    k: usize,
) -> Result<(BraidWord, BraidWord), WordError> {
    if n < 1 {
        return Err(WordError::ParameterOutOfRange(
            "identity needs n >= 1".into(),
        ));
    }
    if k > 2 * n - 1 {
        return Err(WordError::ParameterOutOfRange(format!(
            "k = {k} exceeds 2n - 1 = {}",
            2 * n - 1
        )));
    }
    let strands = 2 * n + 2;
    let top = (2 * n + 1) as i32;
    let desc: Vec<i32> = (1..top).rev().map(|i| -i).collect();
    let asc: Vec<i32> = (1..=top).collect();
    let repeat = |block: &[i32], times: usize| -> Vec<i32> {
        let mut out = Vec::with_capacity(block.len() * times);
        for _ in 0..times {
            out.extend_from_slice(block);
        }
        out
    };

    let mut lhs = repeat(&desc, 2 * n + 1);
    lhs.extend(repeat(&asc, 2 * n));

    let mut rhs = repeat(&desc, 2 * n - k);
    rhs.extend((0..=k as i32).map(|j| top - j));
    rhs.extend(repeat(&asc, 2 * n - k - 1));

    Ok((
        BraidWord::new(strands, lhs).expect("letters below strand count"),
        BraidWord::new(strands, rhs).expect("letters below strand count"),
    ))
}

/// Checks the identity above for every admissible `k` at a given `n`.
pub fn verify_reduction_identity(n: usize) -> Result<bool, WordError> {
    for k in 0..=(2 * n - 1) {
        let (lhs, rhs) = reduction_identity_pair(n, k)?;
        if !braids_equal(&lhs, &rhs)? {
            return Ok(false);
        }
    }
    Ok(true)
}
