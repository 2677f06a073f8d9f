//! Sign sets and the right action of braid words on them.
//!
//! A sign set assigns `s(i,j) = ±1` to each ordered pair of distinct strands
//! with `s(i,j) = -s(j,i)`. Only the strict upper triangle is stored, so the
//! antisymmetry cannot be broken. The generator `a_{ij}^{±1}` negates
//! `s(i,j)` (and hence `s(j,i)`) and leaves every other sign alone; the
//! exponent plays no part.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::types::{check_index, check_strand_count, BraidWord, Letter};

/// Antisymmetric ±1 assignment on ordered pairs of `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignSet {
    n: u8,
    /// Bit `pair_bit(i, j)` is set when `s(i,j) = -1` for `i < j`.
    negative: u128,
}

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j <= n);
    // Row-major offset of (i, j) in the strict upper triangle, 0-based rows.
    let row = i - 1;
    (row * n - row * (row + 1) / 2 + (j - i - 1)) as u32
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

impl SignSet {
    /// The canonical set `B`: `s(i,j) = +1` exactly when `j > i`.
    pub fn canonical(n: usize) -> Result<Self> {
        check_strand_count(n)?;
        Ok(SignSet {
            n: n as u8,
            negative: 0,
        })
    }

    /// Builds a sign set from its upper-triangle bit pattern. Bit `k` set
    /// means the `k`-th pair `(i<j)` in row-major order has sign `-1`.
    pub fn from_bits(n: usize, bits: u128) -> Result<Self> {
        check_strand_count(n)?;
        let pairs = pair_count(n);
        let mask = if pairs == 128 { u128::MAX } else { (1u128 << pairs) - 1 };
        Ok(SignSet {
            n: n as u8,
            negative: bits & mask,
        })
    }

    /// Every sign set on `n` strands, in bit-pattern order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = SignSet>> {
        check_strand_count(n)?;
        let pairs = pair_count(n);
        if pairs >= 40 {
            // 2^40 states is far beyond anything enumerable here.
            return Err(Error::StrandCount(n));
        }
        Ok((0u128..(1u128 << pairs)).map(move |bits| SignSet {
            n: n as u8,
            negative: bits,
        }))
    }

    pub fn strands(self) -> usize {
        self.n as usize
    }

    pub fn bits(self) -> u128 {
        self.negative
    }

    /// `s(i,j)` as `+1` or `-1`.
    pub fn sign(self, i: usize, j: usize) -> Result<i8> {
        let n = self.strands();
        check_index(i, n)?;
        check_index(j, n)?;
        if i == j {
            return Err(Error::RepeatedIndex(i));
        }
        Ok(self.sign_unchecked(i, j))
    }

    #[inline]
    pub(crate) fn sign_unchecked(self, i: usize, j: usize) -> i8 {
        let (lo, hi, flip) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let bit = (self.negative >> pair_bit(self.strands(), lo, hi)) & 1;
        if bit == 0 {
            flip
        } else {
            -flip
        }
    }

    /// Negates `s(i,j)` and `s(j,i)`.
    #[must_use]
    pub(crate) fn toggled(self, i: usize, j: usize) -> Self {
        let (lo, hi) = (i.min(j), i.max(j));
        SignSet {
            n: self.n,
            negative: self.negative ^ (1u128 << pair_bit(self.strands(), lo, hi)),
        }
    }

    pub fn is_canonical(self) -> bool {
        self.negative == 0
    }

    /// Upper-triangle signs in row-major order: `s(1,2), s(1,3), ..., s(n-1,n)`.
    pub fn upper_triangle(self) -> Vec<((usize, usize), i8)> {
        let n = self.strands();
        let mut out = Vec::with_capacity(pair_count(n));
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(((i, j), self.sign_unchecked(i, j)));
            }
        }
        out
    }
}

impl fmt::Display for SignSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), s) in self.upper_triangle() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "s{i},{j}={}", if s > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl Serialize for SignSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let entries = self.upper_triangle();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for ((i, j), s) in entries {
            map.serialize_entry(&format!("{i},{j}"), &s)?;
        }
        map.end()
    }
}

/// A linear order of the strands reproducing a sign set:
/// `s(i,j) = sign(N_j - N_i)` where `N_i` is the rank of strand `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Realization {
    /// Strands listed left to right.
    order: Vec<usize>,
}

impl Realization {
    /// Strands listed left to right (smallest rank first).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based position of `strand` in the order.
    pub fn position(&self, strand: usize) -> Option<usize> {
        self.order.iter().position(|&s| s == strand).map(|p| p + 1)
    }

    /// Ranks `N_1..N_n`, i.e. the position of each strand.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.order.len()];
        for (pos, &strand) in self.order.iter().enumerate() {
            ranks[strand - 1] = pos + 1;
        }
        ranks
    }

    /// The sign set this order induces.
    pub fn signs(&self) -> SignSet {
        let n = self.order.len();
        let ranks = self.ranks();
        let mut set = SignSet {
            n: n as u8,
            negative: 0,
        };
        for i in 1..=n {
            for j in i + 1..=n {
                if ranks[j - 1] < ranks[i - 1] {
                    set = set.toggled(i, j);
                }
            }
        }
        set
    }

    pub(crate) fn from_order_unchecked(order: Vec<usize>) -> Self {
        Realization { order }
    }
}

/// Applies one letter: negates the sign of the letter's pair.
pub fn apply_letter(set: SignSet, letter: Letter) -> Result<SignSet> {
    let n = set.strands();
    check_index(letter.over(), n)?;
    check_index(letter.under(), n)?;
    Ok(set.toggled(letter.over(), letter.under()))
}

/// Right action of a word: `apply_letter` folded over the letters in order.
pub fn act(word: &BraidWord, set: SignSet) -> Result<SignSet> {
    check_same(word, set)?;
    Ok(word
        .letters()
        .iter()
        .fold(set, |s, l| s.toggled(l.over(), l.under())))
}

/// States before each letter and after the last one; element `k` is the
/// state after the first `k` letters, so the result has `len + 1` entries.
pub fn prefix_states(word: &BraidWord, start: SignSet) -> Result<Vec<SignSet>> {
    check_same(word, start)?;
    let mut states = Vec::with_capacity(word.len() + 1);
    let mut current = start;
    states.push(current);
    for l in word.letters() {
        current = current.toggled(l.over(), l.under());
        states.push(current);
    }
    Ok(states)
}

fn check_same(word: &BraidWord, set: SignSet) -> Result<()> {
    if word.strands() != set.strands() {
        return Err(Error::StrandMismatch {
            left: word.strands(),
            right: set.strands(),
        });
    }
    Ok(())
}

/// Returns the unique realizing order when "i before j iff s(i,j) = +1" is a
/// strict total order, and `None` otherwise.
///
/// The relation is a tournament, which is a total order exactly when it is
/// transitive. In that case the number of strands to the right of `i`
/// (the out-degree) is distinct for every `i` and sorts the strands.
pub fn is_realizable(set: SignSet) -> Option<Realization> {
    let n = set.strands();
    for i in 1..=n {
        for j in 1..=n {
            if j == i || set.sign_unchecked(i, j) < 0 {
                continue;
            }
            for k in 1..=n {
                if k == i || k == j {
                    continue;
                }
                if set.sign_unchecked(j, k) > 0 && set.sign_unchecked(i, k) < 0 {
                    return None;
                }
            }
        }
    }
    let mut order: Vec<(usize, usize)> = (1..=n)
        .map(|i| {
            let right = (1..=n)
                .filter(|&j| j != i && set.sign_unchecked(i, j) > 0)
                .count();
            (right, i)
        })
        .collect();
    order.sort_by_key(|&(d, _)| std::cmp::Reverse(d));
    Some(Realization {
        order: order.into_iter().map(|(_, i)| i).collect(),
    })
}

/// `i` and `j` are adjacent when `s(i,k) = s(j,k)` for every other `k`.
pub fn adjacent(set: SignSet, i: usize, j: usize) -> Result<bool> {
    let n = set.strands();
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return Err(Error::RepeatedIndex(i));
    }
    Ok(adjacent_unchecked(set, i, j))
}

#[inline]
pub(crate) fn adjacent_unchecked(set: SignSet, i: usize, j: usize) -> bool {
    (1..=set.strands())
        .filter(|&k| k != i && k != j)
        .all(|k| set.sign_unchecked(i, k) == set.sign_unchecked(j, k))
}
