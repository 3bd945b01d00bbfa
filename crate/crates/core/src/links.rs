//! Braid presentations of torus links and twisted torus links.
//!
//! `T(p,q,r,s)` is the `(p,q)` torus link with `s` extra full twists on `r`
//! adjacent strands. For `r <= p` it closes the `p`-strand braid
//!
//! ```text
//! (sigma_1 ... sigma_p-1)^q  (sigma_1 ... sigma_r-1)^(s r)
//! ```
//!
//! (negative powers use the inverse letters in reverse order). The twist
//! block is allowed to be wider than the torus braid, up to `r = p + q`; see
//! [`twisted_torus_braid`] for the braid used in that range.

use crate::braid::BraidWord;
use num_integer::Integer;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("p must be at least 2, got {p}")]
    PTooSmall { p: i64 },
    #[error("q must be at least 1, got {q}")]
    QTooSmall { q: i64 },
    #[error("twist block needs at least 2 strands, got r = {r}")]
    BlockTooNarrow { r: i64 },
    #[error("twist block of width {r} does not fit on {max} strands")]
    BlockTooWide { r: i64, max: i64 },
    #[error("s = 0 adds no twists; use a plain torus link instead")]
    ZeroTwist,
    #[error("twist block of width {r} leaves the torus braid ({p} strands)")]
    BlockBeyondTorus { r: i64, p: i64 },
    #[error("malformed parameters: {0}")]
    Parse(String),
}

/// Parameters `(p, q, r, s)` with `p >= 2`, `q >= 1`, `2 <= r <= p + q` and
/// `s != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistedTorusParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl TwistedTorusParams {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self, LinkError> {
        if p < 2 {
            return Err(LinkError::PTooSmall { p });
        }
        if q < 1 {
            return Err(LinkError::QTooSmall { q });
        }
        if r < 2 {
            return Err(LinkError::BlockTooNarrow { r });
        }
        if r > p + q {
            return Err(LinkError::BlockTooWide { r, max: p + q });
        }
        if s == 0 {
            return Err(LinkError::ZeroTwist);
        }
        Ok(TwistedTorusParams { p, q, r, s })
    }

    /// Number of link components: `gcd(p, q)`.
    pub fn gcd(&self) -> i64 {
        self.p.gcd(&self.q)
    }

    /// Strand count of [`twisted_torus_braid`]: `p` while the twist block
    /// fits inside the torus braid, `p + q` once it is wider.
    pub fn strands(&self) -> usize {
        if self.r <= self.p {
            self.p as usize
        } else {
            (self.p + self.q) as usize
        }
    }

    /// The same link with the roles of `p` and `q` exchanged. Fails when
    /// `q = 1`, because `(1, p, r, s)` falls outside the parameter domain.
    pub fn swap_pq(&self) -> Result<Self, LinkError> {
        TwistedTorusParams::new(self.q, self.p, self.r, self.s)
    }

    /// Swaps `p` and `q` when that puts them in weakly decreasing order;
    /// otherwise returns `self`. Always succeeds, since the swap only
    /// happens when `q > p >= 2`.
    pub fn normalized(&self) -> Self {
        if self.q > self.p {
            TwistedTorusParams {
                p: self.q,
                q: self.p,
                r: self.r,
                s: self.s,
            }
        } else {
            *self
        }
    }
}

impl fmt::Display for TwistedTorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{},{})", self.p, self.q, self.r, self.s)
    }
}

/// Comma-separated `p,q,r,s`, e.g. `4,2,2,-1`.
impl FromStr for TwistedTorusParams {
    type Err = LinkError;

    fn from_str(text: &str) -> Result<Self, LinkError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(LinkError::Parse(format!(
                "expected p,q,r,s but got {text:?}"
            )));
        }
        let mut nums = [0i64; 4];
        for (slot, part) in nums.iter_mut().zip(&parts) {
            *slot = part
                .parse()
                .map_err(|_| LinkError::Parse(format!("bad integer {part:?}")))?;
        }
        TwistedTorusParams::new(nums[0], nums[1], nums[2], nums[3])
    }
}

/// The `(p,q)` torus braid `(sigma_1 ... sigma_p-1)^q` on `p` strands.
/// Negative `q` gives the mirror word (inverse letters, reversed), `q = 0`
/// the empty word.
pub fn torus_braid(p: i64, q: i64) -> BraidWord {
    assert!(p >= 1, "torus braid needs at least one strand");
    let reps = q.unsigned_abs() as usize;
    let mut letters = Vec::with_capacity(reps * (p as usize - 1));
    for _ in 0..reps {
        if q > 0 {
            letters.extend((1..p).map(|i| i as i32));
        } else {
            letters.extend((1..p).rev().map(|i| -(i as i32)));
        }
    }
    BraidWord::new(p as usize, letters).expect("letters stay below p")
}

/// `s` full twists on the leftmost `r` strands of an `n`-strand braid:
/// the letters of the `(r, s r)` torus braid, read on `n` strands. Widths
/// below 2 twist nothing and give the empty word.
pub fn twist_braid(n: i64, r: i64, s: i64) -> Result<BraidWord, LinkError> {
    if r > n {
        return Err(LinkError::BlockTooWide { r, max: n });
    }
    if r < 2 || s == 0 {
        return Ok(BraidWord::identity(n as usize));
    }
    Ok(embed(&torus_braid(r, s * r), n as usize))
}

/// Reads the letters of `word` on a larger strand count.
fn embed(word: &BraidWord, strands: usize) -> BraidWord {
    BraidWord::new(strands, word.letters().to_vec()).expect("embedding only adds strands")
}

/// The `(p,q)` torus link on `p + q` strands, braided so that the first `q`
/// strands cross over the last `p` in one block. Row `k` is the ascending run
/// `sigma_(q-k) .. sigma_(q-k+p-1)`, which carries the strand starting at
/// position `q - 1 - k` rightward past the whole `p`-block; strand `i` ends
/// at position `i + p` mod `p + q`.
///
/// With `q = 1` this is literally the `(p+1, 1)` torus word. The general
/// identification with `torus_braid(p, q)` is pinned by the Jones checks in
/// the tests.
fn block_transposition_braid(p: i64, q: i64) -> BraidWord {
    assert!(p >= 1 && q >= 1, "block transposition needs two blocks");
    let mut letters = Vec::with_capacity((p * q) as usize);
    for k in 0..q {
        letters.extend((0..p).map(|i| (q - k + i) as i32));
    }
    BraidWord::new((p + q) as usize, letters).expect("letters stay below p + q")
}

/// The braid whose closure is `T(p,q,r,s)`.
///
/// For `r <= p` this is the torus braid followed by the twist block. A wider
/// block no longer fits on `p` strands, so for `p < r <= p + q` the link is
/// presented on `p + q` strands instead: the curve the twist region follows
/// crosses the torus link in `p + q` coherently oriented points and serves
/// as a braid axis for it, with [`block_transposition_braid`] the braid
/// around that axis. The `s` full twists then land on the first `r` strand
/// positions. The tests pin this against component counts, `p`/`q` symmetry,
/// the width-`q` torus collapse and Jones evaluations.
pub fn twisted_torus_braid(params: &TwistedTorusParams) -> BraidWord {
    let TwistedTorusParams { p, q, r, s } = *params;
    if r <= p {
        let torus = torus_braid(p, q);
        let twist = twist_braid(p, r, s).expect("block fits: r <= p");
        torus.concat(&twist).expect("same strand count")
    } else {
        let base = block_transposition_braid(p, q);
        let twist = twist_braid(p + q, r, s).expect("block fits: r <= p + q");
        base.concat(&twist).expect("same strand count")
    }
}

/// One closure component of a twisted torus link, described by the same
/// four-parameter scheme. `r` may drop below 2 here: a component can meet
/// the twist block in one strand or none, in which case it is a plain
/// `(p,q)` torus knot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentTuple {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
}

impl fmt::Display for ComponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{},{})", self.p, self.q, self.r, self.s)
    }
}

/// Splits `T(p,q,r,s)` into its `gcd(p,q)` components. Component `i` is the
/// twisted torus knot on `p/d` strands whose block width counts the strands
/// of component `i` among the leftmost `r`; the twist parameter `s` is
/// inherited, because deleting strands from a full twist leaves a full twist
/// on the survivors.
///
/// Only supported while the block stays inside the torus braid (`r <= p`).
pub fn component_parameters(
    params: &TwistedTorusParams,
) -> Result<Vec<ComponentTuple>, LinkError> {
    if params.r > params.p {
        return Err(LinkError::BlockBeyondTorus {
            r: params.r,
            p: params.p,
        });
    }
    let d = params.gcd();
    let labeling = twisted_torus_braid(params).closure_components();
    debug_assert_eq!(labeling.count() as i64, d);
    let mut tuples = Vec::with_capacity(d as usize);
    for i in 0..d as usize {
        let in_block = labeling.label()[..params.r as usize]
            .iter()
            .filter(|&&c| c == i)
            .count() as i64;
        tuples.push(ComponentTuple {
            p: params.p / d,
            q: params.q / d,
            r: in_block,
            s: params.s,
        });
    }
    Ok(tuples)
}
