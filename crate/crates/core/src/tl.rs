//! Temperley-Lieb diagram algebra, the evaluation target for the Kauffman
//! bracket.
//!
//! A basis diagram on `n` strands is a planar perfect matching of `2n`
//! boundary points: `0..n` along the bottom, `n..2n` along the top (point
//! `n+j` sits above point `j`). Stacking two diagrams concatenates them and
//! may close loops in the middle; each loop contributes a factor of
//! `delta = -A^2 - A^-2`.
//!
//! Elements are formal Laurent-polynomial combinations of basis diagrams.
//! A braid letter maps in via the bracket skein relation
//!
//! ```text
//! sigma_i   ->  A * 1 + A^-1 * e_i
//! sigma_i^-1 -> A^-1 * 1 + A * e_i
//! ```
//!
//! where `e_i` is the cup-cap diagram joining positions `i-1` and `i`.

use crate::laurent::LaurentPoly;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TlError {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("letter 0 is not a braid generator")]
    ZeroLetter,
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
}

/// A planar pairing of the `2n` boundary points. `pair[x]` is the partner of
/// point `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TlDiagram {
    pair: Vec<u16>,
}

impl TlDiagram {
    pub fn identity(n: usize) -> Self {
        let mut pair = vec![0u16; 2 * n];
        for j in 0..n {
            pair[j] = (n + j) as u16;
            pair[n + j] = j as u16;
        }
        TlDiagram { pair }
    }

    /// The generator `e_i` (`1 <= i < n`): bottom points `i-1, i` joined by a
    /// cup, top points `i-1, i` by a cap, everything else straight through.
    pub fn cup_cap(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "cup_cap index out of range");
        let mut d = TlDiagram::identity(n);
        let (a, b) = (i - 1, i);
        d.pair[a] = b as u16;
        d.pair[b] = a as u16;
        d.pair[n + a] = (n + b) as u16;
        d.pair[n + b] = (n + a) as u16;
        d
    }

    pub fn n(&self) -> usize {
        self.pair.len() / 2
    }

    pub fn partner(&self, x: usize) -> usize {
        self.pair[x] as usize
    }

    /// Whether the pairing can be drawn without crossings. Walking the
    /// boundary circle (bottom left-to-right, then top right-to-left), arcs
    /// must close in last-opened-first-closed order.
    pub fn is_planar(&self) -> bool {
        let m = self.pair.len();
        let n = m / 2;
        let circ = |x: usize| if x < n { x } else { 3 * n - 1 - x };
        let mut stack = Vec::new();
        for c in 0..m {
            let x = if c < n { c } else { 3 * n - 1 - c };
            let y = self.pair[x] as usize;
            if circ(y) > c {
                stack.push(x);
            } else if stack.pop() != Some(y) {
                return false;
            }
        }
        stack.is_empty()
    }

    /// Stacks `upper` on top of `self`, returning the composite diagram and
    /// the number of loops closed in the middle.
    pub fn compose(&self, upper: &TlDiagram) -> Result<(TlDiagram, usize), TlError> {
        let n = self.n();
        if upper.n() != n {
            return Err(TlError::StrandMismatch {
                left: n,
                right: upper.n(),
            });
        }
        const UNSET: u16 = u16::MAX;
        let mut pair = vec![UNSET; 2 * n];
        // Junction j is self's top point n+j glued to upper's bottom point j.
        let mut junction_seen = vec![false; n];

        // Follow the strand entering at a composite boundary point until it
        // exits at another one.
        let walk = |start: usize, junction_seen: &mut [bool]| -> usize {
            // (true, x) = point x of the lower diagram, (false, x) = upper.
            let (mut in_lower, mut x) = if start < n {
                (true, start)
            } else {
                (false, start)
            };
            loop {
                if in_lower {
                    let q = self.pair[x] as usize;
                    if q < n {
                        return q;
                    }
                    junction_seen[q - n] = true;
                    in_lower = false;
                    x = q - n;
                } else {
                    let q = upper.pair[x] as usize;
                    if q >= n {
                        return q;
                    }
                    junction_seen[q] = true;
                    in_lower = true;
                    x = n + q;
                }
            }
        };

        for start in 0..2 * n {
            if pair[start] != UNSET {
                continue;
            }
            let end = walk(start, &mut junction_seen);
            pair[start] = end as u16;
            pair[end] = start as u16;
        }

        // Remaining junctions lie on closed middle loops.
        let mut loops = 0;
        for j0 in 0..n {
            if junction_seen[j0] {
                continue;
            }
            let mut j = j0;
            loop {
                junction_seen[j] = true;
                // Cross the upper diagram, then come back down through the
                // lower one; both hops must stay in the middle.
                let via_upper = upper.pair[j] as usize;
                debug_assert!(via_upper < n);
                junction_seen[via_upper] = true;
                let via_lower = self.pair[n + via_upper] as usize;
                debug_assert!(via_lower >= n);
                j = via_lower - n;
                if j == j0 {
                    break;
                }
            }
            loops += 1;
        }

        Ok((TlDiagram { pair }, loops))
    }

    /// Composite with `e_i` stacked on top (`a = i-1` is the 0-indexed
    /// position). Equivalent to `compose(&cup_cap(n, a+1))` but O(1) surgery.
    pub(crate) fn cap_top(&self, a: usize) -> (TlDiagram, usize) {
        let n = self.n();
        let ta = n + a;
        let tb = n + a + 1;
        let x = self.pair[ta] as usize;
        if x == tb {
            return (self.clone(), 1);
        }
        let y = self.pair[tb] as usize;
        let mut pair = self.pair.clone();
        pair[x] = y as u16;
        pair[y] = x as u16;
        pair[ta] = tb as u16;
        pair[tb] = ta as u16;
        (TlDiagram { pair }, 0)
    }

    /// Loops formed by the plat-style closure joining each bottom point `j`
    /// to the top point `n+j`.
    pub fn closure_loops(&self) -> usize {
        let m = self.pair.len();
        let n = m / 2;
        let mut seen = vec![false; m];
        let mut loops = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                let y = self.pair[x] as usize;
                seen[y] = true;
                x = if y < n { y + n } else { y - n };
            }
            loops += 1;
        }
        loops
    }
}

/// A Laurent-polynomial combination of basis diagrams on `n` strands.
#[derive(Clone, Debug, PartialEq)]
pub struct TlElement {
    n: usize,
    terms: HashMap<TlDiagram, LaurentPoly>,
}

impl TlElement {
    pub fn zero(n: usize) -> Self {
        TlElement {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut terms = HashMap::new();
        terms.insert(TlDiagram::identity(n), LaurentPoly::one());
        TlElement { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &HashMap<TlDiagram, LaurentPoly> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The image of a single braid letter under the skein map.
    pub fn of_letter(n: usize, letter: i32) -> Result<Self, TlError> {
        let mut out = TlElement::one(n);
        out.apply_letter(letter)?;
        Ok(out)
    }

    /// Right-multiplies by the image of `letter`, i.e. stacks one more
    /// crossing on top. Both smoothings are cheap: the identity smoothing
    /// keeps each diagram, the cup-cap smoothing is local surgery.
    pub fn apply_letter(&mut self, letter: i32) -> Result<(), TlError> {
        if letter == 0 {
            return Err(TlError::ZeroLetter);
        }
        let i = letter.unsigned_abs() as usize;
        if i >= self.n {
            return Err(TlError::LetterOutOfRange {
                letter,
                strands: self.n,
            });
        }
        let (id_exp, e_exp) = if letter > 0 { (1, -1) } else { (-1, 1) };
        let mut next: HashMap<TlDiagram, LaurentPoly> =
            HashMap::with_capacity(self.terms.len() * 2);
        for (d, c) in &self.terms {
            let mut straight = c.clone();
            straight.shift(id_exp);
            next.entry(d.clone())
                .or_insert_with(LaurentPoly::zero)
                .add_assign_ref(&straight);

            let (capped, loops) = d.cap_top(i - 1);
            let mut bent = c.clone();
            bent.shift(e_exp);
            if loops == 1 {
                bent.mul_delta_assign();
            }
            next.entry(capped)
                .or_insert_with(LaurentPoly::zero)
                .add_assign_ref(&bent);
        }
        next.retain(|_, c| !c.is_zero());
        self.terms = next;
        Ok(())
    }

    /// Full algebra product, mostly useful for cross-checking. The letter
    /// application path above is what evaluation uses.
    pub fn multiply(&self, rhs: &TlElement) -> Result<TlElement, TlError> {
        if self.n != rhs.n {
            return Err(TlError::StrandMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let mut out = TlElement::zero(self.n);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let (d, loops) = d1.compose(d2)?;
                let mut c = c1 * c2;
                for _ in 0..loops {
                    c.mul_delta_assign();
                }
                out.terms
                    .entry(d)
                    .or_insert_with(LaurentPoly::zero)
                    .add_assign_ref(&c);
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Markov-style closure: each diagram evaluates to `delta^(loops-1)`.
    pub fn closure_value(&self) -> LaurentPoly {
        let mut total = LaurentPoly::zero();
        for (d, c) in &self.terms {
            let mut v = c.clone();
            for _ in 1..d.closure_loops() {
                v.mul_delta_assign();
            }
            total.add_assign_ref(&v);
        }
        total
    }
}
