//! Good/bad classification of the letters of a word.
//!
//! A letter is good when its two strands are adjacent in the sign set reached
//! by the prefix before it, starting from the canonical set.

use serde::Serialize;

use crate::error::Result;
use crate::sign::{adjacent_unchecked, prefix_states, SignSet};
use crate::types::BraidWord;

/// A word together with its prefix states and per-letter flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnnotatedWord {
    word: BraidWord,
    /// `true` marks a good letter.
    flags: Vec<bool>,
    states: Vec<SignSet>,
}

impl AnnotatedWord {
    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    /// Prefix states; `states()[k]` precedes letter `k`.
    pub fn states(&self) -> &[SignSet] {
        &self.states
    }

    pub fn is_good(&self, position: usize) -> bool {
        self.flags[position]
    }

    pub fn all_good(&self) -> bool {
        self.flags.iter().all(|&g| g)
    }

    pub fn good_count(&self) -> usize {
        self.flags.iter().filter(|&&g| g).count()
    }

    /// `G`/`B` marks separated by spaces.
    pub fn marks(&self) -> String {
        self.flags
            .iter()
            .map(|&g| if g { "G" } else { "B" })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Classifies every letter relative to the canonical sign set.
pub fn classify(word: &BraidWord) -> AnnotatedWord {
    let start = SignSet::canonical(word.strands()).expect("word has a valid strand count");
    classify_from(word, start).expect("canonical set matches the word")
}

/// Classifies relative to an arbitrary initial state.
pub fn classify_from(word: &BraidWord, start: SignSet) -> Result<AnnotatedWord> {
    let states = prefix_states(word, start)?;
    let flags = word
        .letters()
        .iter()
        .zip(&states)
        .map(|(l, s)| adjacent_unchecked(*s, l.over(), l.under()))
        .collect();
    Ok(AnnotatedWord {
        word: word.clone(),
        flags,
        states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{six_letter_example, Letter};

    #[test]
    fn six_letter_flags() {
        let a = classify(&six_letter_example());
        assert_eq!(a.flags(), &[false, false, true, true, false, false]);
        assert_eq!(a.marks(), "B B G G B B");
        assert_eq!(a.states().len(), 7);
        assert_eq!(a.good_count(), 2);
    }

    #[test]
    fn empty_word() {
        let a = classify(&BraidWord::identity(3).unwrap());
        assert!(a.flags().is_empty());
        assert_eq!(a.states().len(), 1);
        assert!(a.all_good());
    }

    #[test]
    fn two_strands_always_good() {
        let w = BraidWord::new(2, vec![Letter::pos(1, 2), Letter::neg(2, 1), Letter::pos(2, 1)])
            .unwrap();
        assert!(classify(&w).all_good());
    }

    #[test]
    fn first_two_good_forces_third() {
        // a12 a13 a23 from B on three strands: a12 good; after it 1 sits right of 2,
        // so 1 and 3 become neighbours, and then 2 and 3.
        let w = BraidWord::new(3, vec![Letter::pos(1, 2), Letter::pos(1, 3), Letter::pos(2, 3)])
            .unwrap();
        let a = classify(&w);
        assert!(a.is_good(0) && a.is_good(1));
        assert!(a.is_good(2));
    }

    #[test]
    fn start_state_mismatch() {
        let w = BraidWord::identity(3).unwrap();
        assert!(classify_from(&w, SignSet::canonical(4).unwrap()).is_err());
    }
}
