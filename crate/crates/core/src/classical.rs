//! The classical braid group on `σ`-words: a bounded equivalence search over
//! Artin's relations, and Artin's faithful action on the free group, which
//! certifies inequality.

use serde::Serialize;

use crate::diagram::{DiagramLetter, DiagramWord};
use crate::error::{Error, Result};
use crate::search::{bidirectional_search, RewriteSystem, SearchStats};
use crate::types::Exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalRule {
    /// `σ_p^e σ_{p±1}^e σ_p^e <-> σ_{p±1}^e σ_p^e σ_{p±1}^e`
    Braid,
    /// Commute crossings at positions at least two apart.
    FarComm,
    FreeInsert,
    FreeReduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassicalMove {
    pub rule: ClassicalRule,
    /// 1-based letter index.
    pub position: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub letter: Option<DiagramLetter>,
}

fn classical_parts(l: DiagramLetter) -> Option<(usize, Exponent)> {
    match l {
        DiagramLetter::Classical { position, exponent } => Some((position as usize, exponent)),
        DiagramLetter::Virtual { .. } => None,
    }
}

pub fn apply_classical_move(word: &DiagramWord, mv: &ClassicalMove) -> Option<DiagramWord> {
    let letters = word.letters();
    let len = letters.len();
    if mv.position == 0 {
        return None;
    }
    let p = mv.position - 1;
    let mut out = letters.to_vec();
    match (mv.rule, mv.letter) {
        (ClassicalRule::FreeInsert, Some(x)) => {
            if p > len || x.is_virtual() || x.position() >= word.strands() {
                return None;
            }
            out.splice(p..p, [x, x.inverse()]);
        }
        (ClassicalRule::FreeReduce, None) => {
            if p + 1 >= len || letters[p].is_virtual() || letters[p + 1] != letters[p].inverse() {
                return None;
            }
            out.drain(p..p + 2);
        }
        (ClassicalRule::FarComm, None) => {
            if p + 1 >= len {
                return None;
            }
            let (a, _) = classical_parts(letters[p])?;
            let (b, _) = classical_parts(letters[p + 1])?;
            if a.abs_diff(b) < 2 {
                return None;
            }
            out.swap(p, p + 1);
        }
        (ClassicalRule::Braid, None) => {
            if p + 2 >= len {
                return None;
            }
            let (a, ea) = classical_parts(letters[p])?;
            let (b, eb) = classical_parts(letters[p + 1])?;
            let (c, ec) = classical_parts(letters[p + 2])?;
            if a != c || a.abs_diff(b) != 1 || ea != eb || eb != ec {
                return None;
            }
            out[p] = letters[p + 1];
            out[p + 1] = letters[p];
            out[p + 2] = letters[p + 1];
        }
        _ => return None,
    }
    Some(DiagramWord::from_parts_unchecked(word.strands(), out))
}

/// Artin's relations on classical diagram words of bounded length.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalRewriting {
    pub max_len: usize,
}

impl RewriteSystem for ClassicalRewriting {
    type State = DiagramWord;
    type Move = ClassicalMove;

    fn successors(&self, state: &DiagramWord, out: &mut Vec<(ClassicalMove, DiagramWord)>) {
        let len = state.len();
        let mut push = |mv: ClassicalMove| {
            if let Some(w) = apply_classical_move(state, &mv) {
                out.push((mv, w));
            }
        };
        for p in 1..=len.saturating_sub(2) {
            push(ClassicalMove {
                rule: ClassicalRule::Braid,
                position: p,
                letter: None,
            });
        }
        for p in 1..len {
            push(ClassicalMove {
                rule: ClassicalRule::FarComm,
                position: p,
                letter: None,
            });
        }
        if len + 2 <= self.max_len {
            for p in 1..=len + 1 {
                for q in 1..state.strands() {
                    for x in [DiagramLetter::sigma(q), DiagramLetter::sigma_inv(q)] {
                        push(ClassicalMove {
                            rule: ClassicalRule::FreeInsert,
                            position: p,
                            letter: Some(x),
                        });
                    }
                }
            }
        }
        for p in 1..len {
            push(ClassicalMove {
                rule: ClassicalRule::FreeReduce,
                position: p,
                letter: None,
            });
        }
    }

    fn reverse(&self, from: &DiagramWord, mv: &ClassicalMove, _to: &DiagramWord) -> ClassicalMove {
        match mv.rule {
            ClassicalRule::FreeInsert => ClassicalMove {
                rule: ClassicalRule::FreeReduce,
                position: mv.position,
                letter: None,
            },
            ClassicalRule::FreeReduce => ClassicalMove {
                rule: ClassicalRule::FreeInsert,
                position: mv.position,
                letter: Some(from.letters()[mv.position - 1]),
            },
            _ => *mv,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalVerdict {
    pub equal: bool,
    pub trace: Vec<ClassicalMove>,
    pub stats: SearchStats,
}

/// Bounded search for a sequence of Artin relations between two classical
/// diagram words.
pub fn classical_equivalent(
    a: &DiagramWord,
    b: &DiagramWord,
    max_len: usize,
    max_states: usize,
) -> Result<ClassicalVerdict> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    if !a.is_classical() || !b.is_classical() {
        return Err(Error::Inconsistent {
            position: 0,
            message: "classical search needs words without virtual crossings".into(),
        });
    }
    let r = bidirectional_search(&ClassicalRewriting { max_len }, a, b, max_states);
    Ok(ClassicalVerdict {
        equal: r.path.is_some(),
        trace: r.path.unwrap_or_default(),
        stats: r.stats,
    })
}

/// A reduced word in the free group on `x_1..x_n`; `k` is `x_k`, `-k` its
/// inverse.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, g: i32) {
    if out.last() == Some(&-g) {
        out.pop();
    } else {
        out.push(g);
    }
}

fn substitute(word: &[i32], images: &[FreeWord]) -> FreeWord {
    let mut out = Vec::new();
    for &g in word {
        let img = &images[g.unsigned_abs() as usize - 1];
        if g > 0 {
            for &h in img {
                push_reduced(&mut out, h);
            }
        } else {
            for &h in img.iter().rev() {
                push_reduced(&mut out, -h);
            }
        }
    }
    out
}

/// Images of the free generators under Artin's representation of a
/// classical diagram word. Two classical braids are equal exactly when their
/// images agree. Virtual letters are rejected.
pub fn artin_images(word: &DiagramWord) -> Result<Vec<FreeWord>> {
    let n = word.strands();
    let mut images: Vec<FreeWord> = (1..=n as i32).map(|k| vec![k]).collect();
    for (k, &l) in word.letters().iter().enumerate() {
        let (p, e) = classical_parts(l).ok_or(Error::Inconsistent {
            position: k + 1,
            message: "virtual crossing in a classical word".into(),
        })?;
        let (i, j) = (p as i32, p as i32 + 1);
        // σ_p: x_p -> x_p x_{p+1} x_p^-1, x_{p+1} -> x_p
        // σ_p^-1: x_p -> x_{p+1}, x_{p+1} -> x_{p+1}^-1 x_p x_{p+1}
        let mut gen: Vec<FreeWord> = (1..=n as i32).map(|m| vec![m]).collect();
        match e {
            Exponent::Pos => {
                gen[p - 1] = vec![i, j, -i];
                gen[p] = vec![i];
            }
            Exponent::Neg => {
                gen[p - 1] = vec![j];
                gen[p] = vec![-j, i, j];
            }
        }
        images = images.iter().map(|w| substitute(w, &gen)).collect();
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use DiagramLetter as D;

    fn dw(n: usize, letters: Vec<DiagramLetter>) -> DiagramWord {
        DiagramWord::new(n, letters).unwrap()
    }

    #[test]
    fn braid_relation_and_artin_agree() {
        let lhs = dw(3, vec![D::sigma(1), D::sigma(2), D::sigma(1)]);
        let rhs = dw(3, vec![D::sigma(2), D::sigma(1), D::sigma(2)]);
        assert_eq!(artin_images(&lhs).unwrap(), artin_images(&rhs).unwrap());
        let v = classical_equivalent(&lhs, &rhs, 5, 10_000).unwrap();
        assert!(v.equal);
        assert_eq!(v.trace.len(), 1);
    }

    #[test]
    fn artin_separates_non_commuting() {
        let a = dw(3, vec![D::sigma(1), D::sigma(1), D::sigma(2), D::sigma(2)]);
        let b = dw(3, vec![D::sigma(2), D::sigma(2), D::sigma(1), D::sigma(1)]);
        assert_ne!(artin_images(&a).unwrap(), artin_images(&b).unwrap());
    }

    #[test]
    fn artin_inverse_is_identity() {
        let a = dw(4, vec![D::sigma(1), D::sigma_inv(3), D::sigma(2), D::sigma(2)]);
        let both = a.concat(&a.inverse()).unwrap();
        let id: Vec<FreeWord> = (1..=4).map(|k| vec![k]).collect();
        assert_eq!(artin_images(&both).unwrap(), id);
    }

    #[test]
    fn free_cancellation_found() {
        let a = dw(3, vec![D::sigma(1), D::sigma_inv(1)]);
        let e = dw(3, vec![]);
        let v = classical_equivalent(&a, &e, 4, 1000).unwrap();
        assert!(v.equal);
    }

    #[test]
    fn virtual_rejected() {
        let a = dw(2, vec![D::virt(1)]);
        assert!(artin_images(&a).is_err());
        assert!(classical_equivalent(&a, &a, 3, 10).is_err());
    }
}
