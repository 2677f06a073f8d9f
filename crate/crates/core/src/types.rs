//! Letters, words and group modes shared by every other module.
//!
//! Strand indices are 1-based at every public boundary. A word always carries
//! its strand count, and operations combining two words refuse mismatched
//! counts instead of silently widening one of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest strand count supported. Sign sets pack their upper triangle into a
/// `u128`, which holds the 120 pairs of 16 strands.
pub const MAX_STRANDS: usize = 16;

pub(crate) fn check_strand_count(n: usize) -> Result<()> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(Error::StrandCount(n));
    }
    Ok(())
}

pub(crate) fn check_index(index: usize, n: usize) -> Result<()> {
    if index == 0 || index > n {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// Exponent of a letter. It doubles as the writhe of the crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Exponent {
    #[serde(rename = "+1")]
    Pos,
    #[serde(rename = "-1")]
    Neg,
}

impl Exponent {
    pub fn from_i32(value: i32) -> Option<Self> {
        match value {
            1 => Some(Exponent::Pos),
            -1 => Some(Exponent::Neg),
            _ => None,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Exponent::Pos => 1,
            Exponent::Neg => -1,
        }
    }

    #[must_use]
    pub fn flip(self) -> Self {
        match self {
            Exponent::Pos => Exponent::Neg,
            Exponent::Neg => Exponent::Pos,
        }
    }
}

/// One generator `a_{ij}^{±1}`: strand `over` crosses over strand `under`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    over: u8,
    under: u8,
    exponent: Exponent,
}

impl Letter {
    /// Builds `a_{over,under}^{exponent}`. Indices must be distinct and at
    /// least 1; range against a strand count is checked by [`BraidWord::new`].
    pub fn new(over: usize, under: usize, exponent: Exponent) -> Result<Self> {
        if over == under {
            return Err(Error::RepeatedIndex(over));
        }
        for index in [over, under] {
            if index == 0 || index > MAX_STRANDS {
                return Err(Error::IndexOutOfRange { index, n: MAX_STRANDS });
            }
        }
        Ok(Letter {
            over: over as u8,
            under: under as u8,
            exponent,
        })
    }

    /// `a_{ij}`. Panics on invalid indices; meant for literals.
    pub fn pos(over: usize, under: usize) -> Self {
        Letter::new(over, under, Exponent::Pos).expect("invalid letter literal")
    }

    /// `a_{ij}^{-1}`. Panics on invalid indices; meant for literals.
    pub fn neg(over: usize, under: usize) -> Self {
        Letter::new(over, under, Exponent::Neg).expect("invalid letter literal")
    }

    pub fn over(self) -> usize {
        self.over as usize
    }

    pub fn under(self) -> usize {
        self.under as usize
    }

    pub fn exponent(self) -> Exponent {
        self.exponent
    }

    /// The unordered index pair as `(min, max)`.
    pub fn pair(self) -> (usize, usize) {
        let (a, b) = (self.over(), self.under());
        (a.min(b), a.max(b))
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Letter {
            exponent: self.exponent.flip(),
            ..self
        }
    }

    /// `a_{ij} -> a_{ji}`, keeping the exponent.
    #[must_use]
    pub fn virtualized(self) -> Self {
        Letter {
            over: self.under,
            under: self.over,
            exponent: self.exponent,
        }
    }

    pub fn is_disjoint_from(self, other: Letter) -> bool {
        let (a, b) = (self.over, self.under);
        a != other.over && a != other.under && b != other.over && b != other.under
    }

    pub fn same_pair(self, other: Letter) -> bool {
        self.pair() == other.pair()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.over, self.under)?;
        if self.exponent == Exponent::Neg {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the generators `a_{ij}^{±1}` on a fixed number of strands.
/// Serializes as its text form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        check_strand_count(n)?;
        for letter in &letters {
            check_index(letter.over(), n)?;
            check_index(letter.under(), n)?;
        }
        Ok(BraidWord { n, letters })
    }

    /// The empty word on `n` strands.
    pub fn identity(n: usize) -> Result<Self> {
        BraidWord::new(n, Vec::new())
    }

    /// Caller guarantees the letters fit `n`.
    pub(crate) fn from_parts_unchecked(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.over() <= n && l.under() <= n));
        BraidWord { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: letters reversed, exponents negated.
    #[must_use]
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        self.same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Sum of exponents.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.exponent().as_i32() as i64).sum()
    }

    pub(crate) fn same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for letter in &self.letters {
            write!(f, " {letter}")?;
        }
        Ok(())
    }
}

/// Which group presentation a word is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupMode {
    /// Pure virtual braid group: R3 and far commutativity.
    #[serde(rename = "PBn")]
    PureVirtual,
    /// Quotient by virtualization `a_{ij} = a_{ji}`.
    #[serde(rename = "TildePBn")]
    Virtualized,
    /// Quotient by `a_{ij}^2 = 1`.
    #[serde(rename = "Gn2")]
    Involutive,
}

impl GroupMode {
    pub const ALL: [GroupMode; 3] = [
        GroupMode::PureVirtual,
        GroupMode::Virtualized,
        GroupMode::Involutive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupMode::PureVirtual => "PBn",
            GroupMode::Virtualized => "TildePBn",
            GroupMode::Involutive => "Gn2",
        }
    }

    pub fn allows_virtualization(self) -> bool {
        self == GroupMode::Virtualized
    }

    pub fn allows_squares(self) -> bool {
        self == GroupMode::Involutive
    }
}

impl fmt::Display for GroupMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GroupMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pbn" | "pb" | "pure" => Ok(GroupMode::PureVirtual),
            "tildepbn" | "tilde" | "virtualized" => Ok(GroupMode::Virtualized),
            "gn2" | "g2" | "involutive" => Ok(GroupMode::Involutive),
            _ => Err(Error::UnknownMode(s.to_owned())),
        }
    }
}

/// `a_{13} a_{24} a_{14} a_{14}^{-1} a_{24}^{-1} a_{13}^{-1}` on four strands:
/// a trivial braid on which one pass of bad-letter deletion is not idempotent.
pub fn six_letter_example() -> BraidWord {
    BraidWord::from_parts_unchecked(
        4,
        vec![
            Letter::pos(1, 3),
            Letter::pos(2, 4),
            Letter::pos(1, 4),
            Letter::neg(1, 4),
            Letter::neg(2, 4),
            Letter::neg(1, 3),
        ],
    )
}
