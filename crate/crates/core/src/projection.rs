//! Deletion of bad letters, its iteration to a fixpoint, and reconstruction of
//! a classical diagram from an all-good word.

use serde::Serialize;

use crate::classify::classify;
use crate::diagram::{crossing_letters, end_permutation, DiagramLetter, DiagramWord};
use crate::error::{Error, Result};
use crate::sign::{act, is_realizable, SignSet};
use crate::types::{BraidWord, Exponent, Letter};

/// The map `d`: keeps exactly the good letters.
pub fn delete_bad(word: &BraidWord) -> BraidWord {
    let annotated = classify(word);
    let letters = word
        .letters()
        .iter()
        .zip(annotated.flags())
        .filter(|(_, &good)| good)
        .map(|(l, _)| *l)
        .collect();
    BraidWord::from_parts_unchecked(word.strands(), letters)
}

/// `d` iterated until the word stops changing. Every letter of the result is
/// good.
pub fn d_stab(word: &BraidWord) -> BraidWord {
    d_stab_iterates(word)
        .pop()
        .expect("iterates always contain the input")
}

/// `[w, d(w), d²(w), ...]` up to and including the fixpoint. The last two
/// entries coincide unless the input is already fixed.
pub fn d_stab_iterates(word: &BraidWord) -> Vec<BraidWord> {
    let mut out = vec![word.clone()];
    loop {
        let current = out.last().unwrap();
        let next = delete_bad(current);
        if next.len() == current.len() {
            // Same length means nothing was deleted.
            break;
        }
        out.push(next);
    }
    out
}

/// How one input letter was realised in the reconstructed diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    /// The letter of the input word.
    pub input: Letter,
    /// The letter the reconstructed crossing emits under `o`.
    pub emitted: Letter,
    /// `emitted` is the virtualization `a_{ji}` of `input = a_{ij}`.
    pub virtualized: bool,
}

/// A classical diagram whose `o`-image matches the input word up to
/// per-letter virtualization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalReconstruction {
    pub sigma_word: DiagramWord,
    pub witness: Vec<WitnessEntry>,
}

impl ClassicalReconstruction {
    pub fn virtualization_count(&self) -> usize {
        self.witness.iter().filter(|e| e.virtualized).count()
    }
}

/// Builds a classical diagram step by step from an all-good word acting
/// trivially on the canonical sign set.
///
/// Before letter `k` on strands `{i, j}` the prefix state is realised as a
/// line order in which `i` and `j` sit at consecutive positions `p, p + 1`;
/// the crossing `σ_p^e` is appended, `e` being the letter's exponent.
/// Realizability of every prefix state is checked rather than assumed.
pub fn reconstruct_classical(word: &BraidWord) -> Result<ClassicalReconstruction> {
    let n = word.strands();
    let annotated = classify(word);
    if let Some(k) = annotated.flags().iter().position(|&g| !g) {
        return Err(Error::BadLetter { position: k + 1 });
    }
    let start = SignSet::canonical(n)?;
    if act(word, start)? != start {
        return Err(Error::NontrivialAction);
    }

    let mut sigma = Vec::with_capacity(word.len());
    let mut witness = Vec::with_capacity(word.len());
    for (k, (&letter, &state)) in word.letters().iter().zip(annotated.states()).enumerate() {
        let realization = is_realizable(state).ok_or(Error::Unrealizable { position: k + 1 })?;
        let a = realization.position(letter.over()).unwrap();
        let b = realization.position(letter.under()).unwrap();
        if a.abs_diff(b) != 1 {
            return Err(Error::Inconsistent {
                position: k + 1,
                message: format!(
                    "good letter {letter} on non-consecutive positions {a} and {b}"
                ),
            });
        }
        let p = a.min(b);
        let (left, right) = (realization.order()[p - 1], realization.order()[p]);
        let emitted = match letter.exponent() {
            Exponent::Pos => Letter::pos(left, right),
            Exponent::Neg => Letter::neg(right, left),
        };
        sigma.push(DiagramLetter::Classical {
            position: p as u8,
            exponent: letter.exponent(),
        });
        witness.push(WitnessEntry {
            input: letter,
            emitted,
            virtualized: emitted != letter,
        });
    }

    let sigma_word = DiagramWord::from_parts_unchecked(n, sigma);
    let perm = end_permutation(&sigma_word);
    if perm.iter().enumerate().any(|(k, &s)| s != k + 1) {
        return Err(Error::Inconsistent {
            position: word.len(),
            message: format!("reconstructed diagram ends in order {perm:?}"),
        });
    }
    debug_assert_eq!(
        crossing_letters(&sigma_word),
        witness.iter().map(|e| e.emitted).collect::<Vec<_>>()
    );
    Ok(ClassicalReconstruction {
        sigma_word,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::o_map;
    use crate::types::six_letter_example;

    #[test]
    fn six_letter_projection() {
        let w = six_letter_example();
        let d1 = delete_bad(&w);
        assert_eq!(d1.letters(), &[Letter::pos(1, 4), Letter::neg(1, 4)]);
        let d2 = delete_bad(&d1);
        assert!(d2.is_empty());
        // d is not idempotent here
        assert_ne!(d1, d2);
        assert!(d_stab(&w).is_empty());
        assert_eq!(d_stab_iterates(&w).len(), 3);
    }

    #[test]
    fn empty_word() {
        let e = BraidWord::identity(3).unwrap();
        assert_eq!(delete_bad(&e), e);
        assert_eq!(d_stab(&e), e);
        let r = reconstruct_classical(&e).unwrap();
        assert!(r.sigma_word.is_empty());
        assert!(r.witness.is_empty());
    }

    #[test]
    fn two_strand_fixpoint() {
        let w = BraidWord::new(2, vec![Letter::pos(1, 2), Letter::pos(2, 1)]).unwrap();
        assert_eq!(d_stab(&w), w);
        assert_eq!(d_stab_iterates(&w).len(), 1);
    }

    #[test]
    fn reconstruct_plain_full_twist() {
        let w = BraidWord::new(2, vec![Letter::pos(1, 2), Letter::pos(2, 1)]).unwrap();
        let r = reconstruct_classical(&w).unwrap();
        assert_eq!(r.sigma_word.to_string(), "n=2 s1 s1");
        assert_eq!(r.virtualization_count(), 0);
        assert_eq!(o_map(&r.sigma_word).unwrap(), w);
    }

    #[test]
    fn reconstruct_forces_one_virtualization() {
        let w = BraidWord::new(2, vec![Letter::pos(1, 2), Letter::pos(1, 2)]).unwrap();
        let r = reconstruct_classical(&w).unwrap();
        assert_eq!(r.sigma_word.to_string(), "n=2 s1 s1");
        assert_eq!(
            r.witness.iter().map(|e| e.virtualized).collect::<Vec<_>>(),
            vec![false, true]
        );
        assert_eq!(r.witness[1].emitted, Letter::pos(2, 1));
    }

    #[test]
    fn reconstruct_rejects() {
        assert!(matches!(
            reconstruct_classical(&six_letter_example()),
            Err(Error::BadLetter { position: 1 })
        ));
        let w = BraidWord::new(2, vec![Letter::pos(1, 2)]).unwrap();
        assert!(matches!(
            reconstruct_classical(&w),
            Err(Error::NontrivialAction)
        ));
    }
}
