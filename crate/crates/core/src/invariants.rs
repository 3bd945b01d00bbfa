//! Link invariants computed from braid closures: Kauffman bracket, Jones
//! polynomial, and pairwise linking numbers.
//!
//! Everything is normalized for the closure of the braid, not the braid
//! itself. The Jones polynomial is in the variable `A` with `t = A^-4`; an
//! unknot evaluates to `1` and a split `c`-component unlink to
//! `(-A^2 - A^-2)^(c-1)`.

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly;
use crate::links::TwistedTorusParams;
use crate::tl::TlElement;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use thiserror::Error;

/// Default cap on strand count for bracket evaluation. The working basis has
/// Catalan(n) diagrams, so cost climbs steeply past ten strands; callers who
/// know what they are paying for can pass a bigger limit explicitly.
pub const DEFAULT_STRAND_LIMIT: usize = 10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("braid has {strands} strands, over the evaluation limit {limit}")]
    StrandLimitExceeded { strands: usize, limit: usize },
    #[error("odd crossing tally between components {first} and {second}; the diagram is not a closed link")]
    OddCrossingParity { first: usize, second: usize },
    #[error("link has {components} components, linking prediction needs exactly 2")]
    NotTwoComponents { components: usize },
    #[error("twist block of width {r} leaves the torus braid ({p} strands)")]
    BlockBeyondTorus { r: i64, p: i64 },
}

/// Kauffman bracket of the closure, with the default strand limit.
pub fn kauffman_bracket(word: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    kauffman_bracket_with_limit(word, DEFAULT_STRAND_LIMIT)
}

pub fn kauffman_bracket_with_limit(
    word: &BraidWord,
    limit: usize,
) -> Result<LaurentPoly, InvariantError> {
    if word.strands() > limit {
        return Err(InvariantError::StrandLimitExceeded {
            strands: word.strands(),
            limit,
        });
    }
    let mut acc = TlElement::one(word.strands());
    for &l in word.letters() {
        acc.apply_letter(l)
            .expect("braid letters are validated on construction");
    }
    Ok(acc.closure_value())
}

/// Jones polynomial of the closure: `(-A)^(-3w)` times the bracket, `w` the
/// writhe.
pub fn jones_polynomial(word: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    jones_polynomial_with_limit(word, DEFAULT_STRAND_LIMIT)
}

pub fn jones_polynomial_with_limit(
    word: &BraidWord,
    limit: usize,
) -> Result<LaurentPoly, InvariantError> {
    let w = word.writhe();
    let mut v = kauffman_bracket_with_limit(word, limit)?;
    v.shift(-3 * w);
    if w % 2 != 0 {
        v.neg_assign();
    }
    Ok(v)
}

/// Jones polynomial of the split unlink with `components` components,
/// computed through the same evaluation pipeline rather than hard-coded.
pub fn unlink_jones(components: usize) -> LaurentPoly {
    assert!(components >= 1, "a link has at least one component");
    let id = BraidWord::identity(components);
    kauffman_bracket_with_limit(&id, components).expect("limit matches strand count")
}

/// Symmetric matrix of pairwise linking numbers between closure components,
/// zero on the diagonal. Component indices follow
/// [`BraidWord::closure_components`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn components(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// True when every pairwise linking number vanishes.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(|&x| x == 0))
    }
}

impl Serialize for LinkingMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

/// Computes all pairwise linking numbers by tallying signed crossings
/// between distinct components; each pair of strands meets an even number of
/// times, and the linking number is half the signed tally.
pub fn linking_matrix(word: &BraidWord) -> Result<LinkingMatrix, InvariantError> {
    let labeling = word.closure_components();
    let label = labeling.label();
    let d = labeling.count();
    let mut tally = vec![vec![0i64; d]; d];
    let mut at: Vec<usize> = (0..word.strands()).collect();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize;
        let (ca, cb) = (label[at[i - 1]], label[at[i]]);
        if ca != cb {
            let s = l.signum() as i64;
            tally[ca][cb] += s;
            tally[cb][ca] += s;
        }
        at.swap(i - 1, i);
    }
    let mut entries = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in i + 1..d {
            if tally[i][j] % 2 != 0 {
                return Err(InvariantError::OddCrossingParity {
                    first: i,
                    second: j,
                });
            }
            entries[i][j] = tally[i][j] / 2;
            entries[j][i] = entries[i][j];
        }
    }
    Ok(LinkingMatrix { entries })
}

/// Closed-form linking number of the two components of `T(p,q,r,s)` when
/// `gcd(p,q) = 2` and the twist block stays inside the torus braid.
///
/// The torus part contributes `pq/4`; the `s` full twists contribute
/// `s * a * b` where `a + b = r` splits the block strands by component, and
/// the block labels alternate, so `a = ceil(r/2)`, `b = floor(r/2)`.
pub fn predicted_two_component_linking(
    params: &TwistedTorusParams,
) -> Result<i64, InvariantError> {
    let d = params.gcd();
    if d != 2 {
        return Err(InvariantError::NotTwoComponents {
            components: d as usize,
        });
    }
    if params.r > params.p {
        return Err(InvariantError::BlockBeyondTorus {
            r: params.r,
            p: params.p,
        });
    }
    let (p, q, r, s) = (params.p, params.q, params.r, params.s);
    Ok(p * q / 4 + s * (r / 2) * ((r + 1) / 2))
}

/// Whether the Jones polynomial matched the split unlink with the same
/// component count, or was skipped because the braid is too wide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JonesStatus {
    UnlinkMatch,
    Mismatch,
    Skipped,
}

/// Invariant-side evidence about whether a closure could be an unlink. This
/// can refute unlinking (nonzero linking number or wrong Jones polynomial)
/// but never certifies it.
#[derive(Clone, Debug, PartialEq)]
pub struct ConsistencyReport {
    pub components: usize,
    pub linking: LinkingMatrix,
    pub linking_zero: bool,
    pub jones: JonesStatus,
    pub consistent: bool,
}

impl Serialize for ConsistencyReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ConsistencyReport", 4)?;
        st.serialize_field("components", &self.components)?;
        st.serialize_field("linking", &self.linking)?;
        match self.jones {
            JonesStatus::UnlinkMatch => st.serialize_field("jones_unlink", &true)?,
            JonesStatus::Mismatch => st.serialize_field("jones_unlink", &false)?,
            JonesStatus::Skipped => st.serialize_field("jones_unlink", "skipped")?,
        }
        st.serialize_field("consistent", &self.consistent)?;
        st.end()
    }
}

/// Runs every unlink obstruction we can afford on the closure of `word`.
/// Jones comparison is skipped (not failed) when the braid is wider than
/// `jones_limit`.
pub fn unlink_consistent(
    word: &BraidWord,
    jones_limit: usize,
) -> Result<ConsistencyReport, InvariantError> {
    let components = word.closure_components().count();
    let linking = linking_matrix(word)?;
    let linking_zero = linking.is_zero();
    let jones = if word.strands() <= jones_limit {
        let v = jones_polynomial_with_limit(word, jones_limit)?;
        if v == unlink_jones(components) {
            JonesStatus::UnlinkMatch
        } else {
            JonesStatus::Mismatch
        }
    } else {
        JonesStatus::Skipped
    };
    let consistent = linking_zero && jones != JonesStatus::Mismatch;
    Ok(ConsistencyReport {
        components,
        linking,
        linking_zero,
        jones,
        consistent,
    })
}
