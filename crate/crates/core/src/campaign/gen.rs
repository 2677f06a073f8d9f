//! Seeded random generators for words and diagrams.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{end_permutation, o_map, DiagramLetter, DiagramWord};
use crate::rewrite::alphabet;
use crate::types::{BraidWord, Exponent, Letter};

pub type CampaignRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CampaignRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut impl Rng, n: usize) -> Letter {
    *alphabet(n).choose(rng).unwrap()
}

/// Uniform letters, `len` of them.
pub fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> BraidWord {
    let alpha = alphabet(n);
    let letters = (0..len).map(|_| *alpha.choose(rng).unwrap()).collect();
    BraidWord::from_parts_unchecked(n, letters)
}

fn random_exponent(rng: &mut impl Rng) -> Exponent {
    if rng.gen_bool(0.5) {
        Exponent::Pos
    } else {
        Exponent::Neg
    }
}

/// A pure classical diagram of at most `max_len` crossings: a random prefix
/// followed by a bubble sort of its strands, each sorting crossing with a
/// random sign. Needs `max_len >= n(n-1)/2`.
pub fn random_pure_classical(rng: &mut impl Rng, n: usize, max_len: usize) -> DiagramWord {
    let sort_budget = n * (n - 1) / 2;
    assert!(max_len >= sort_budget, "length budget below n(n-1)/2");
    let prefix_len = rng.gen_range(0..=max_len - sort_budget);
    let mut letters: Vec<DiagramLetter> = (0..prefix_len)
        .map(|_| DiagramLetter::Classical {
            position: rng.gen_range(1..n) as u8,
            exponent: random_exponent(rng),
        })
        .collect();
    let mut occupant = end_permutation(&DiagramWord::from_parts_unchecked(n, letters.clone()));
    while let Some(p) = (0..n - 1).find(|&p| occupant[p] > occupant[p + 1]) {
        occupant.swap(p, p + 1);
        letters.push(DiagramLetter::Classical {
            position: (p + 1) as u8,
            exponent: random_exponent(rng),
        });
    }
    DiagramWord::from_parts_unchecked(n, letters)
}

/// A pure diagram mixing classical and virtual crossings.
pub fn random_pure_virtual(rng: &mut impl Rng, n: usize, max_len: usize) -> DiagramWord {
    let classical = random_pure_classical(rng, n, max_len);
    let letters = classical
        .letters()
        .iter()
        .map(|&l| {
            if rng.gen_bool(0.25) {
                DiagramLetter::virt(l.position())
            } else {
                l
            }
        })
        .collect();
    DiagramWord::from_parts_unchecked(n, letters)
}

/// Words with a realistic share of good letters: half the time uniform
/// letters, otherwise the image of a random pure diagram (classical or not)
/// with a few letters spliced in.
pub fn random_mixed_word(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    if max_len < n * (n - 1) / 2 + 1 || rng.gen_bool(0.5) {
        let len = rng.gen_range(0..=max_len);
        return random_word(rng, n, len);
    }
    let diagram = if rng.gen_bool(0.5) {
        random_pure_classical(rng, n, max_len)
    } else {
        random_pure_virtual(rng, n, max_len)
    };
    let mut letters = o_map(&diagram)
        .expect("generated diagrams are pure")
        .into_letters();
    let extra = rng.gen_range(0..=2usize);
    for _ in 0..extra {
        if letters.len() >= max_len {
            break;
        }
        let at = rng.gen_range(0..=letters.len());
        letters.insert(at, random_letter(rng, n));
    }
    letters.truncate(max_len);
    BraidWord::from_parts_unchecked(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_classical_is_pure() {
        let mut r = rng(7);
        for _ in 0..200 {
            let n = r.gen_range(2..=5);
            let d = random_pure_classical(&mut r, n, 40);
            assert!(d.is_pure());
            assert!(d.is_classical());
            assert!(d.len() <= 40);
        }
    }

    #[test]
    fn pure_virtual_is_pure() {
        let mut r = rng(8);
        for _ in 0..200 {
            let d = random_pure_virtual(&mut r, 4, 20);
            assert!(d.is_pure());
        }
    }

    #[test]
    fn seeded_generators_repeat() {
        let a = random_mixed_word(&mut rng(3), 4, 12);
        let b = random_mixed_word(&mut rng(3), 4, 12);
        assert_eq!(a, b);
        assert!(a.len() <= 12);
    }
}
