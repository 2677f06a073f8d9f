//! Braid diagrams as words in `σ_p^{±1}` and `v_p`, and the map `o` taking a
//! pure diagram to a word in the generators `a_{ij}`.
//!
//! Crossing convention: in `σ_p` the strand entering at position `p` passes
//! over the strand entering at `p + 1`; in `σ_p^{-1}` it passes under. Strands
//! carry the global label of their endpoint. Reading top to bottom, a crossing
//! whose under strand comes from the top-right emits `a_{over,under}`, and one
//! whose under strand comes from the top-left emits `a_{over,under}^{-1}`, so
//!
//! ```text
//! σ_p      ->  a_{L,R}
//! σ_p^{-1} ->  a_{R,L}^{-1}
//! ```
//!
//! where `L` and `R` are the strands at positions `p` and `p + 1`. Virtual
//! crossings emit nothing. The opposite chirality flips every exponent, which
//! is an automorphism of all three groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{check_strand_count, BraidWord, Exponent, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DiagramLetter {
    /// `σ_p^{±1}`, a classical crossing of positions `p` and `p + 1`.
    Classical { position: u8, exponent: Exponent },
    /// `v_p`, a virtual crossing.
    Virtual { position: u8 },
}

impl DiagramLetter {
    pub fn sigma(position: usize) -> Self {
        DiagramLetter::Classical {
            position: position as u8,
            exponent: Exponent::Pos,
        }
    }

    pub fn sigma_inv(position: usize) -> Self {
        DiagramLetter::Classical {
            position: position as u8,
            exponent: Exponent::Neg,
        }
    }

    pub fn virt(position: usize) -> Self {
        DiagramLetter::Virtual {
            position: position as u8,
        }
    }

    pub fn position(self) -> usize {
        match self {
            DiagramLetter::Classical { position, .. } | DiagramLetter::Virtual { position } => {
                position as usize
            }
        }
    }

    pub fn is_virtual(self) -> bool {
        matches!(self, DiagramLetter::Virtual { .. })
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        match self {
            DiagramLetter::Classical { position, exponent } => DiagramLetter::Classical {
                position,
                exponent: exponent.flip(),
            },
            v => v,
        }
    }
}

impl fmt::Display for DiagramLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DiagramLetter::Classical { position, exponent } => {
                write!(f, "s{position}")?;
                if exponent == Exponent::Neg {
                    f.write_str("^-1")?;
                }
                Ok(())
            }
            DiagramLetter::Virtual { position } => write!(f, "v{position}"),
        }
    }
}

/// Serializes as its text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DiagramWord {
    n: usize,
    letters: Vec<DiagramLetter>,
}

impl DiagramWord {
    pub fn new(n: usize, letters: Vec<DiagramLetter>) -> Result<Self> {
        check_strand_count(n)?;
        for l in &letters {
            let p = l.position();
            if p == 0 || p >= n {
                return Err(Error::PositionOutOfRange {
                    position: p,
                    max: n - 1,
                });
            }
        }
        Ok(DiagramWord { n, letters })
    }

    pub(crate) fn from_parts_unchecked(n: usize, letters: Vec<DiagramLetter>) -> Self {
        DiagramWord { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[DiagramLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.letters.iter().all(|l| !l.is_virtual())
    }

    pub fn classical_count(&self) -> usize {
        self.letters.iter().filter(|l| !l.is_virtual()).count()
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        DiagramWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &DiagramWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(DiagramWord { n: self.n, letters })
    }

    pub fn is_pure(&self) -> bool {
        let perm = end_permutation(self);
        perm.iter().enumerate().all(|(k, &s)| s == k + 1)
    }
}

impl fmt::Display for DiagramWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Strand occupying each bottom position, strands labelled by top position.
/// The identity (`[1, 2, ..., n]`) exactly when the diagram is pure.
pub fn end_permutation(diagram: &DiagramWord) -> Vec<usize> {
    let mut occupant: Vec<usize> = (1..=diagram.n).collect();
    for l in &diagram.letters {
        let p = l.position();
        occupant.swap(p - 1, p);
    }
    occupant
}

/// The letter each classical crossing emits, without the purity check.
/// Strands are labelled by their top position.
pub fn crossing_letters(diagram: &DiagramWord) -> Vec<Letter> {
    let mut occupant: Vec<usize> = (1..=diagram.n).collect();
    let mut out = Vec::with_capacity(diagram.classical_count());
    for l in &diagram.letters {
        let p = l.position();
        if let DiagramLetter::Classical { exponent, .. } = *l {
            let (left, right) = (occupant[p - 1], occupant[p]);
            out.push(match exponent {
                Exponent::Pos => Letter::pos(left, right),
                Exponent::Neg => Letter::neg(right, left),
            });
        }
        occupant.swap(p - 1, p);
    }
    out
}

/// The map `o`: one generator per classical crossing, read top to bottom.
pub fn o_map(diagram: &DiagramWord) -> Result<BraidWord> {
    let perm = end_permutation(diagram);
    if perm.iter().enumerate().any(|(k, &s)| s != k + 1) {
        return Err(Error::NotPure(perm));
    }
    Ok(BraidWord::from_parts_unchecked(
        diagram.n,
        crossing_letters(diagram),
    ))
}
