//! Braid words on a fixed number of strands.
//!
//! A braid on `n` strands is a word in the Artin generators. Letters are
//! nonzero `i32`s: `i` (with `1 <= i < n`) crosses the strands in positions
//! `i-1` and `i` with the left strand passing over, `-i` is the inverse
//! crossing. Positions and strands are both 0-indexed internally; only the
//! generator letters are 1-indexed, matching the usual sigma notation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braid must have at least one strand")]
    ZeroStrands,
    #[error("letter 0 is not a braid generator")]
    ZeroLetter,
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("component {component} does not exist ({count} components)")]
    UnknownComponent { component: usize, count: usize },
    #[error("cannot delete every component")]
    EmptyKeep,
    #[error("malformed braid word: {0}")]
    Parse(String),
}

/// A word in the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Removes adjacent inverse pairs until none remain.
pub(crate) fn free_reduce_vec(letters: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *letters = out;
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(BraidError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The empty word on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// The group inverse: reversed word with all signs flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `c * self * c^-1`.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<BraidWord, BraidError> {
        c.concat(self)?.concat(&c.inverse())
    }

    /// Cancels adjacent `sigma_i sigma_i^-1` pairs; the result represents the
    /// same group element.
    pub fn free_reduced(&self) -> BraidWord {
        let mut letters = self.letters.clone();
        free_reduce_vec(&mut letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The underlying permutation: strand starting at bottom position `j`
    /// ends at top position `permutation()[j]`.
    pub fn permutation(&self) -> Permutation {
        // at[pos] = strand currently occupying position pos, scanning upward.
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut image = vec![0usize; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos;
        }
        Permutation { image }
    }

    /// Components of the closure link. Strands `j` and `permutation()[j]` get
    /// joined by the closure arcs, so components are the cycles of the
    /// permutation; they are numbered in order of their smallest strand.
    pub fn closure_components(&self) -> ComponentLabeling {
        let perm = self.permutation();
        let mut label = vec![usize::MAX; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if label[start] != usize::MAX {
                continue;
            }
            let mut j = start;
            while label[j] == usize::MAX {
                label[j] = count;
                j = perm.image[j];
            }
            count += 1;
        }
        ComponentLabeling { label, count }
    }

    /// The sublink of the closure spanned by the components in `keep`: every
    /// strand on a dropped component is erased and the surviving strands are
    /// renumbered left to right.
    pub fn delete_components(&self, keep: &BTreeSet<usize>) -> Result<BraidWord, BraidError> {
        let labeling = self.closure_components();
        if keep.is_empty() {
            return Err(BraidError::EmptyKeep);
        }
        for &c in keep {
            if c >= labeling.count {
                return Err(BraidError::UnknownComponent {
                    component: c,
                    count: labeling.count,
                });
            }
        }
        let kept = |strand: usize| keep.contains(&labeling.label[strand]);
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut letters = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            if kept(at[i - 1]) && kept(at[i]) {
                // Index of the crossing inside the subdiagram: count the kept
                // strands strictly left of the crossing site.
                let left = at[..i - 1].iter().filter(|&&s| kept(s)).count();
                letters.push(l.signum() * (left as i32 + 1));
            }
            at.swap(i - 1, i);
        }
        let strands = (0..self.strands).filter(|&s| kept(s)).count();
        Ok(BraidWord { strands, letters })
    }
}

/// A permutation of `0..n`, produced by [`BraidWord::permutation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, j: usize) -> usize {
        self.image[j]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(j, &k)| j == k)
    }

    /// Cycles sorted by smallest member, each listed starting at it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.image[j];
            }
            cycles.push(cycle);
        }
        cycles
    }
}

/// Which closure component each strand belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    label: Vec<usize>,
    count: usize,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.count
    }

    /// `label()[j]` is the component id of strand `j`. Components are
    /// numbered in order of their smallest strand index.
    pub fn label(&self) -> &[usize] {
        &self.label
    }

    pub fn strands_of(&self, component: usize) -> Vec<usize> {
        (0..self.label.len())
            .filter(|&j| self.label[j] == component)
            .collect()
    }
}

/// Format: `strands: letter letter ...`, e.g. `3: 1 2 -1`. The empty word on
/// `n` strands prints as `n:`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, BraidError> {
        let (head, tail) = s
            .split_once(':')
            .ok_or_else(|| BraidError::Parse(format!("missing ':' in {s:?}")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad strand count {:?}", head.trim())))?;
        let mut letters = Vec::new();
        for tok in tail.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            letters.push(l);
        }
        BraidWord::new(strands, letters)
    }
}
