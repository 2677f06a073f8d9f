//! The classical-inclusion check at desk scale: pure classical diagrams whose
//! images are equal in `TildePBn` must be equal as classical braids.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use super::{timed, CampaignReport};
use crate::classical::{artin_images, classical_equivalent, FreeWord};
use crate::diagram::{o_map, DiagramLetter, DiagramWord};
use crate::rewrite::{equivalent, SearchBounds};
use crate::types::{BraidWord, GroupMode};

/// Search bounds for both oracles: words may grow `slack` letters past the
/// longer input, and each search stores at most `max_states` states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremBounds {
    pub slack: usize,
    pub max_states: usize,
}

impl Default for TheoremBounds {
    fn default() -> Self {
        TheoremBounds {
            slack: 4,
            max_states: 100_000,
        }
    }
}

/// What one side established about a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Bounded search found a path.
    Equal,
    /// An invariant separates the words.
    Distinct,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub virtual_side: Side,
    pub classical_side: Side,
    /// Artin's representation agrees; this decides classical equality.
    pub artin_equal: bool,
}

impl PairOutcome {
    /// Equal as virtual braids (modulo virtualization) but distinct as
    /// classical braids.
    pub fn is_counterexample(&self) -> bool {
        self.virtual_side == Side::Equal && !self.artin_equal
    }

    /// Distinct in the quotient while equal classically would mean `o` is not
    /// even well defined.
    pub fn is_inconsistent(&self) -> bool {
        self.virtual_side == Side::Distinct && self.artin_equal
    }
}

fn virtual_side(a: &BraidWord, b: &BraidWord, bounds: TheoremBounds) -> Side {
    let sb = SearchBounds::new(a.len().max(b.len()) + bounds.slack, bounds.max_states);
    let v = equivalent(a, b, GroupMode::Virtualized, sb).expect("same strand count");
    if v.is_equal() {
        Side::Equal
    } else if v.distinct_by_invariant {
        Side::Distinct
    } else {
        Side::Unknown
    }
}

fn classical_side(a: &DiagramWord, b: &DiagramWord, artin_equal: bool, bounds: TheoremBounds) -> Side {
    if !artin_equal {
        return Side::Distinct;
    }
    let max_len = a.len().max(b.len()) + bounds.slack;
    match classical_equivalent(a, b, max_len, bounds.max_states) {
        Ok(v) if v.equal => Side::Equal,
        _ => Side::Unknown,
    }
}

/// Compares two pure classical diagrams on both sides.
pub fn compare_pair(a: &DiagramWord, b: &DiagramWord, bounds: TheoremBounds) -> crate::Result<PairOutcome> {
    let (oa, ob) = (o_map(a)?, o_map(b)?);
    let artin_equal = artin_images(a)? == artin_images(b)?;
    Ok(PairOutcome {
        virtual_side: virtual_side(&oa, &ob, bounds),
        classical_side: classical_side(a, b, artin_equal, bounds),
        artin_equal,
    })
}

/// All pure classical diagram words on `n` strands with at most `len_cap`
/// crossings, in length-then-lexicographic order.
pub fn pure_classical_words(n: usize, len_cap: usize) -> Vec<DiagramWord> {
    let alphabet: Vec<DiagramLetter> = (1..n)
        .flat_map(|p| [DiagramLetter::sigma(p), DiagramLetter::sigma_inv(p)])
        .collect();
    let mut layer: Vec<Vec<DiagramLetter>> = vec![Vec::new()];
    let mut out = Vec::new();
    for len in 0..=len_cap {
        for letters in &layer {
            let d = DiagramWord::from_parts_unchecked(n, letters.clone());
            if d.is_pure() {
                out.push(d);
            }
        }
        if len == len_cap {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&x| {
                    let mut w = w.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every pair of pure classical diagrams up to `len_cap` crossings is
/// compared in `TildePBn` (bounded search on the images, pair exponent sums
/// as the separating invariant) and classically (bounded search on
/// `σ`-words, Artin's representation as the separating invariant).
///
/// Equality is transitive, so searches run against one representative per
/// Artin class: each word against its representative on both sides, and each
/// pair of representatives in `TildePBn`. Pair counts are then derived.
/// A violation is a pair found equal virtually but classically distinct, or
/// certified distinct virtually but classically equal.
pub fn run_theorem_desk(n: usize, len_cap: usize, bounds: TheoremBounds) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("theorem");
        report
            .param("n", n)
            .param("len_cap", len_cap)
            .param("slack", bounds.slack)
            .param("max_states", bounds.max_states);

        let words = pure_classical_words(n, len_cap);
        let images: Vec<BraidWord> = words.iter().map(|d| o_map(d).unwrap()).collect();
        let mut classes: BTreeMap<Vec<FreeWord>, Vec<usize>> = BTreeMap::new();
        for (k, d) in words.iter().enumerate() {
            classes.entry(artin_images(d).unwrap()).or_default().push(k);
        }
        let class_list: Vec<Vec<usize>> = {
            let mut v: Vec<Vec<usize>> = classes.into_values().collect();
            v.sort();
            v
        };
        report.add("words", words.len() as u64);
        report.add("classes", class_list.len() as u64);

        // Member-to-representative links on both sides.
        let mut virt_link = vec![Side::Equal; words.len()];
        let mut class_link = vec![Side::Equal; words.len()];
        for members in &class_list {
            let rep = members[0];
            for &m in &members[1..] {
                virt_link[m] = virtual_side(&images[m], &images[rep], bounds);
                class_link[m] = classical_side(&words[m], &words[rep], true, bounds);
                if virt_link[m] == Side::Distinct {
                    report.violation(
                        "classically equal but separated by pair exponent sums",
                        format!("{} vs {}", words[m], words[rep]),
                    );
                }
            }
        }

        // Pairs inside one class.
        for members in &class_list {
            for (x, &a) in members.iter().enumerate() {
                for &b in &members[x + 1..] {
                    report.cases += 1;
                    let joined = |l: &[Side]| {
                        let ends = [l[a], l[b]];
                        if ends.iter().all(|&s| s == Side::Equal) {
                            Side::Equal
                        } else {
                            Side::Unknown
                        }
                    };
                    let (v, c) = (joined(&virt_link), joined(&class_link));
                    report.bump(if v == Side::Equal { "same_class_virtual_equal" } else { "same_class_virtual_unknown" });
                    report.bump(if c == Side::Equal { "same_class_classical_equal" } else { "same_class_classical_unknown" });
                    if v != Side::Equal || c != Side::Equal {
                        report.unknowns += 1;
                    }
                }
            }
        }

        // Pairs across classes, decided at the representatives.
        for (x, ca) in class_list.iter().enumerate() {
            for cb in &class_list[x + 1..] {
                let (ra, rb) = (ca[0], cb[0]);
                let v = virtual_side(&images[ra], &images[rb], bounds);
                let pairs = (ca.len() * cb.len()) as u64;
                report.cases += pairs;
                match v {
                    Side::Distinct => report.add("cross_class_virtual_distinct", pairs),
                    Side::Unknown => {
                        report.add("cross_class_virtual_unknown", pairs);
                        report.unknowns += pairs;
                        report.details.push(json!({
                            "a": words[ra].to_string(),
                            "b": words[rb].to_string(),
                            "o_a": images[ra].to_string(),
                            "o_b": images[rb].to_string(),
                            "virtual": "unknown",
                            "classical": "distinct",
                        }));
                    }
                    Side::Equal => {
                        report.add("cross_class_virtual_equal", pairs);
                        report.violation(
                            "equal in TildePBn but distinct classically",
                            format!("{} vs {}", words[ra], words[rb]),
                        );
                    }
                }
            }
        }
        report
    })
}
