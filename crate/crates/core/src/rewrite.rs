//! Defining relations of `PB_n`, its virtualization quotient and `G_n^2` as
//! oriented one-step moves, and a bounded equivalence oracle built on them.
//!
//! The move alphabet:
//!
//! | rule          | effect                                                       | modes      |
//! |---------------|--------------------------------------------------------------|------------|
//! | `far_comm`    | swap adjacent letters on disjoint pairs, any exponents        | all        |
//! | `free_insert` | insert `x x^{-1}`                                             | all        |
//! | `free_reduce` | delete `x x^{-1}`                                             | all        |
//! | `involutive`  | delete `x x`, or insert `x x` when a letter is given          | `Gn2`      |
//! | `r3`          | reverse a window `(i,j)(i,k)(j,k)` or `(j,k)(i,k)(i,j)` of one exponent | all |
//! | `virtualize`  | `a_{ij}^e -> a_{ji}^e`                                         | `TildePBn` |
//!
//! `r3` with both window shapes and both exponents is exactly the relation
//! `a_{ij}a_{ik}a_{jk} = a_{jk}a_{ik}a_{ij}` read in both directions, together
//! with its formal inverse. Positions are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::search::{bidirectional_search, RewriteSystem, SearchStats};
use crate::types::{BraidWord, Exponent, GroupMode, Letter};

/// Rule names, declared in lexicographic order so that derived `Ord` matches
/// the expansion order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    FarComm,
    FreeInsert,
    FreeReduce,
    Involutive,
    R3,
    Virtualize,
}

impl Rule {
    pub const ALL: [Rule; 6] = [
        Rule::FarComm,
        Rule::FreeInsert,
        Rule::FreeReduce,
        Rule::Involutive,
        Rule::R3,
        Rule::Virtualize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::FarComm => "far_comm",
            Rule::FreeInsert => "free_insert",
            Rule::FreeReduce => "free_reduce",
            Rule::Involutive => "involutive",
            Rule::R3 => "r3",
            Rule::Virtualize => "virtualize",
        }
    }

    pub fn allowed_in(self, mode: GroupMode) -> bool {
        match self {
            Rule::Virtualize => mode.allows_virtualization(),
            Rule::Involutive => mode.allows_squares(),
            _ => true,
        }
    }

    /// Whether the rule leaves every pair's exponent sum unchanged.
    pub fn preserves_exponent_sums(self) -> bool {
        self != Rule::Involutive
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One rule application. `letter` names the inserted letter for insertions
/// (`x x^{-1}` for `free_insert`, `x x` for `involutive`) and is `None`
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Move {
    pub rule: Rule,
    pub position: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub letter: Option<Letter>,
}

impl Move {
    pub fn new(rule: Rule, position: usize) -> Self {
        Move {
            rule,
            position,
            letter: None,
        }
    }

    pub fn insert(rule: Rule, position: usize, letter: Letter) -> Self {
        Move {
            rule,
            position,
            letter: Some(letter),
        }
    }

    /// 0-based indices of the letters the move rewrites, in the old word.
    pub fn window(&self) -> std::ops::Range<usize> {
        let p = self.position - 1;
        match (self.rule, self.letter) {
            (_, Some(_)) => p..p,
            (Rule::FreeReduce | Rule::Involutive | Rule::FarComm, None) => p..p + 2,
            (Rule::R3, None) => p..p + 3,
            (Rule::Virtualize, None) => p..p + 1,
            (Rule::FreeInsert, None) => p..p,
        }
    }

    /// Where each old letter outside the window lands in the new word
    /// (0-based); `None` for the rewritten letters.
    pub fn position_map(&self, old_len: usize) -> Vec<Option<usize>> {
        let window = self.window();
        let shift: isize = match (self.rule, self.letter) {
            (_, Some(_)) => 2,
            (Rule::FreeReduce | Rule::Involutive, None) => -2,
            _ => 0,
        };
        (0..old_len)
            .map(|k| {
                if window.contains(&k) {
                    None
                } else if k < window.start {
                    Some(k)
                } else {
                    Some((k as isize + shift) as usize)
                }
            })
            .collect()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @{}", self.rule, self.position)?;
        if let Some(l) = self.letter {
            write!(f, " [{l}]")?;
        }
        Ok(())
    }
}

/// The `r3` window test: one exponent throughout and index pattern
/// `(i,j)(i,k)(j,k)` or `(j,k)(i,k)(i,j)`. Distinctness of `i, j, k` follows
/// from each letter having distinct indices.
pub fn r3_matches(a: Letter, b: Letter, c: Letter) -> bool {
    if a.exponent() != b.exponent() || b.exponent() != c.exponent() {
        return false;
    }
    let forward = a.over() == b.over() && a.under() == c.over() && b.under() == c.under();
    let backward = a.under() == b.under() && b.over() == c.over() && c.under() == a.over();
    forward || backward
}

/// Applies `mv` to `word`, or returns `None` when the move's pattern does
/// not match at its position. Mode restrictions are not checked here.
pub fn apply_move(word: &BraidWord, mv: &Move) -> Option<BraidWord> {
    let letters = word.letters();
    let len = letters.len();
    if mv.position == 0 {
        return None;
    }
    let p = mv.position - 1;
    let mut out = letters.to_vec();
    match (mv.rule, mv.letter) {
        (Rule::FreeInsert, Some(x)) | (Rule::Involutive, Some(x)) => {
            if p > len || x.over() > word.strands() || x.under() > word.strands() {
                return None;
            }
            let second = if mv.rule == Rule::FreeInsert { x.inverse() } else { x };
            out.splice(p..p, [x, second]);
        }
        (Rule::FreeReduce, None) => {
            if p + 1 >= len || letters[p + 1] != letters[p].inverse() {
                return None;
            }
            out.drain(p..p + 2);
        }
        (Rule::Involutive, None) => {
            if p + 1 >= len || letters[p + 1] != letters[p] {
                return None;
            }
            out.drain(p..p + 2);
        }
        (Rule::FarComm, None) => {
            if p + 1 >= len || !letters[p].is_disjoint_from(letters[p + 1]) {
                return None;
            }
            out.swap(p, p + 1);
        }
        (Rule::R3, None) => {
            if p + 2 >= len || !r3_matches(letters[p], letters[p + 1], letters[p + 2]) {
                return None;
            }
            out[p..p + 3].reverse();
        }
        (Rule::Virtualize, None) => {
            if p >= len {
                return None;
            }
            out[p] = letters[p].virtualized();
        }
        _ => return None,
    }
    Some(BraidWord::from_parts_unchecked(word.strands(), out))
}

/// Given `from --mv--> to`, the move taking `to` back to `from`.
pub fn reverse_move(from: &BraidWord, mv: &Move) -> Move {
    match (mv.rule, mv.letter) {
        (Rule::FreeInsert, Some(_)) => Move::new(Rule::FreeReduce, mv.position),
        (Rule::Involutive, Some(_)) => Move::new(Rule::Involutive, mv.position),
        (Rule::FreeReduce, None) => Move::insert(
            Rule::FreeInsert,
            mv.position,
            from.letters()[mv.position - 1],
        ),
        (Rule::Involutive, None) => Move::insert(
            Rule::Involutive,
            mv.position,
            from.letters()[mv.position - 1],
        ),
        // far_comm, r3 and virtualize are involutions at a fixed position.
        _ => *mv,
    }
}

/// All letters on `n` strands in ascending order.
pub fn alphabet(n: usize) -> Vec<Letter> {
    let mut out = Vec::with_capacity(2 * n * (n - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                for e in [Exponent::Pos, Exponent::Neg] {
                    out.push(Letter::new(i, j, e).unwrap());
                }
            }
        }
    }
    out.sort();
    out
}

/// A word reachable in one move, with the move that reaches it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Neighbor {
    pub word: BraidWord,
    #[serde(flatten)]
    pub mv: Move,
}

/// Every word one move away, ordered by (rule name, position, letter).
/// Insertions appear only with `allow_growth`.
pub fn neighbors(word: &BraidWord, mode: GroupMode, allow_growth: bool) -> Vec<Neighbor> {
    let mut out = Vec::new();
    for_each_neighbor(word, mode, allow_growth, usize::MAX, |mv, w| {
        out.push(Neighbor { word: w, mv })
    });
    out
}

fn for_each_neighbor(
    word: &BraidWord,
    mode: GroupMode,
    allow_growth: bool,
    max_len: usize,
    mut emit: impl FnMut(Move, BraidWord),
) {
    let letters = word.letters();
    let len = letters.len();
    let n = word.strands();
    let mut with = |mv: Move| {
        let w = apply_move(word, &mv).expect("generated move applies");
        emit(mv, w);
    };

    for p in 0..len.saturating_sub(1) {
        if letters[p].is_disjoint_from(letters[p + 1]) {
            with(Move::new(Rule::FarComm, p + 1));
        }
    }
    if allow_growth && len + 2 <= max_len {
        let alpha = alphabet(n);
        for p in 0..=len {
            for &x in &alpha {
                with(Move::insert(Rule::FreeInsert, p + 1, x));
            }
        }
    }
    for p in 0..len.saturating_sub(1) {
        if letters[p + 1] == letters[p].inverse() {
            with(Move::new(Rule::FreeReduce, p + 1));
        }
    }
    if mode.allows_squares() {
        let grow = allow_growth && len + 2 <= max_len;
        let alpha = if grow { alphabet(n) } else { Vec::new() };
        for p in 0..=len {
            if p + 1 < len && letters[p + 1] == letters[p] {
                with(Move::new(Rule::Involutive, p + 1));
            }
            for &x in &alpha {
                with(Move::insert(Rule::Involutive, p + 1, x));
            }
        }
    }
    for p in 0..len.saturating_sub(2) {
        if r3_matches(letters[p], letters[p + 1], letters[p + 2]) {
            with(Move::new(Rule::R3, p + 1));
        }
    }
    if mode.allows_virtualization() {
        for p in 0..len {
            with(Move::new(Rule::Virtualize, p + 1));
        }
    }
}

/// Exponent sum per unordered pair `(i, j)`, `i < j`, with every pair listed.
/// Invariant under every rule except `involutive`.
pub fn pair_exponent_sums(word: &BraidWord) -> BTreeMap<(usize, usize), i64> {
    let n = word.strands();
    let mut sums = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            sums.insert((i, j), 0);
        }
    }
    for l in word.letters() {
        *sums.get_mut(&l.pair()).unwrap() += l.exponent().as_i32() as i64;
    }
    sums
}

/// `true` when the pair exponent sums prove the words unequal in `mode`.
/// In `Gn2` only their parities are invariant.
pub fn sums_certify_distinct(w1: &BraidWord, w2: &BraidWord, mode: GroupMode) -> bool {
    if w1.strands() != w2.strands() {
        return true;
    }
    let (a, b) = (pair_exponent_sums(w1), pair_exponent_sums(w2));
    match mode {
        GroupMode::Involutive => a
            .values()
            .zip(b.values())
            .any(|(x, y)| (x - y).rem_euclid(2) != 0),
        _ => a != b,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Longest word the search may visit; `None` means
    /// `max(|w1|, |w2|) + 4`.
    pub max_len: Option<usize>,
    pub max_states: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_len: None,
            max_states: 1_000_000,
        }
    }
}

impl SearchBounds {
    pub fn new(max_len: usize, max_states: usize) -> Self {
        SearchBounds {
            max_len: Some(max_len),
            max_states,
        }
    }

    pub fn resolve_len(&self, w1: &BraidWord, w2: &BraidWord) -> usize {
        self.max_len.unwrap_or(w1.len().max(w2.len()) + 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Equal,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub mv: Move,
    /// The word after this step.
    pub word: BraidWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub status: Status,
    pub mode: GroupMode,
    pub trace: Vec<TraceStep>,
    pub stats: SearchStats,
    pub max_len: usize,
    /// The pair exponent sums differ, so the words are certainly unequal and
    /// no search was run. The status stays `unknown`.
    pub distinct_by_invariant: bool,
}

impl EquivalenceVerdict {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }

    /// Replays the trace from `source`, checking each move's pattern, mode
    /// and recorded word. Returns the final word.
    pub fn replay(&self, source: &BraidWord) -> Option<BraidWord> {
        replay_trace(source, &self.trace, self.mode)
    }
}

pub fn replay_trace(source: &BraidWord, trace: &[TraceStep], mode: GroupMode) -> Option<BraidWord> {
    let mut current = source.clone();
    for step in trace {
        if !step.mv.rule.allowed_in(mode) {
            return None;
        }
        current = apply_move(&current, &step.mv)?;
        if current != step.word {
            return None;
        }
    }
    Some(current)
}

/// The relations of one group mode as a search space, words capped in length.
#[derive(Debug, Clone, Copy)]
pub struct BraidRewriting {
    pub mode: GroupMode,
    pub max_len: usize,
}

impl RewriteSystem for BraidRewriting {
    type State = BraidWord;
    type Move = Move;

    fn successors(&self, state: &BraidWord, out: &mut Vec<(Move, BraidWord)>) {
        for_each_neighbor(state, self.mode, true, self.max_len, |mv, w| out.push((mv, w)));
    }

    fn reverse(&self, from: &BraidWord, mv: &Move, _to: &BraidWord) -> Move {
        reverse_move(from, mv)
    }
}

/// Bounded search for a sequence of relations turning `w1` into `w2`.
///
/// `Equal` always carries a trace that replays; `Unknown` means no path was
/// found within the bounds, which is not a proof of inequality unless
/// `distinct_by_invariant` is set.
pub fn equivalent(
    w1: &BraidWord,
    w2: &BraidWord,
    mode: GroupMode,
    bounds: SearchBounds,
) -> Result<EquivalenceVerdict> {
    w1.same_strands(w2)?;
    let max_len = bounds.resolve_len(w1, w2);
    if sums_certify_distinct(w1, w2, mode) {
        return Ok(EquivalenceVerdict {
            status: Status::Unknown,
            mode,
            trace: Vec::new(),
            stats: SearchStats::default(),
            max_len,
            distinct_by_invariant: true,
        });
    }
    let system = BraidRewriting { mode, max_len };
    let result = bidirectional_search(&system, w1, w2, bounds.max_states);
    let (status, trace) = match result.path {
        Some(moves) => {
            let mut current = w1.clone();
            let mut trace = Vec::with_capacity(moves.len());
            for mv in moves {
                current = apply_move(&current, &mv).expect("search paths replay");
                trace.push(TraceStep {
                    mv,
                    word: current.clone(),
                });
            }
            debug_assert_eq!(&current, w2);
            (Status::Equal, trace)
        }
        None => (Status::Unknown, Vec::new()),
    };
    Ok(EquivalenceVerdict {
        status,
        mode,
        trace,
        stats: result.stats,
        max_len,
        distinct_by_invariant: false,
    })
}
