//! ASCII pictures: diagrams row by row, and the sign-set evolution of a word.
//!
//! In a diagram every row is one letter, with strand columns four characters
//! apart. A crossing between positions `p` and `p + 1` draws `\` in column
//! `p`, `/` in column `p + 1` and a mark halfway between them:
//!
//! ```text
//! \ \ /    σ_p       strand from the left passes over
//! \ / /    σ_p^-1    strand from the right passes over
//! \ o /    v_p       virtual crossing
//! ```

use std::fmt::Write;

use crate::classify::classify;
use crate::diagram::{DiagramLetter, DiagramWord};
use crate::sign::is_realizable;
use crate::types::{BraidWord, Exponent, Letter};

const GAP: usize = 4;

fn label_row(labels: &[usize]) -> String {
    let mut row = String::new();
    for (k, l) in labels.iter().enumerate() {
        let cell = l.to_string();
        if k > 0 {
            let pad = GAP.saturating_sub(cell.len()).max(1);
            row.push_str(&" ".repeat(pad));
        }
        row.push_str(&cell);
    }
    row
}

/// One row per letter; the top and bottom rows label strands by their top
/// position. Classical rows are annotated with the generator they emit.
pub fn render_diagram(diagram: &DiagramWord) -> String {
    let n = diagram.strands();
    let width = GAP * (n - 1) + 1;
    let mut occupant: Vec<usize> = (1..=n).collect();
    let mut out = String::new();
    let _ = writeln!(out, "{}", label_row(&occupant));
    for l in diagram.letters() {
        let p = l.position();
        let mut row: Vec<char> = vec![' '; width];
        for k in 0..n {
            row[GAP * k] = '|';
        }
        let left = GAP * (p - 1);
        row[left] = '\\';
        row[left + GAP] = '/';
        row[left + GAP / 2] = match l {
            DiagramLetter::Classical {
                exponent: Exponent::Pos,
                ..
            } => '\\',
            DiagramLetter::Classical {
                exponent: Exponent::Neg,
                ..
            } => '/',
            DiagramLetter::Virtual { .. } => 'o',
        };
        let row: String = row.into_iter().collect();
        let (a, b) = (occupant[p - 1], occupant[p]);
        let note = match l {
            DiagramLetter::Classical {
                exponent: Exponent::Pos,
                ..
            } => format!("{:<7} {}", l.to_string(), Letter::pos(a, b)),
            DiagramLetter::Classical {
                exponent: Exponent::Neg,
                ..
            } => format!("{:<7} {}", l.to_string(), Letter::neg(b, a)),
            DiagramLetter::Virtual { .. } => l.to_string(),
        };
        let _ = writeln!(out, "{row}   {}", note.trim_end());
        occupant.swap(p - 1, p);
    }
    let _ = writeln!(out, "{}", label_row(&occupant));
    out
}

/// A table of the prefix states: each letter with its good/bad mark, the
/// state before it and that state's line order when it has one.
pub fn render_evolution(word: &BraidWord) -> String {
    let annotated = classify(word);
    let mut out = String::new();
    let order = |s| match is_realizable(s) {
        Some(r) => r
            .order()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join("<"),
        None => "unrealizable".to_string(),
    };
    let letter_width = word
        .letters()
        .iter()
        .map(|l| l.to_string().len())
        .max()
        .unwrap_or(0)
        .max(6);
    for (k, l) in word.letters().iter().enumerate() {
        let state = annotated.states()[k];
        let _ = writeln!(
            out,
            "{:>3}  {:<w$}  {}  {}  [{}]",
            k + 1,
            l.to_string(),
            if annotated.is_good(k) { "G" } else { "B" },
            state,
            order(state),
            w = letter_width
        );
    }
    let last = *annotated.states().last().unwrap();
    let _ = writeln!(
        out,
        "{:>3}  {:<w$}     {}  [{}]",
        "end",
        "",
        last,
        order(last),
        w = letter_width
    );
    out
}
