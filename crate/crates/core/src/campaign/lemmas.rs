use std::collections::HashMap;

use rand::Rng;
use serde_json::json;

use super::gen::{random_letter, random_mixed_word, random_pure_classical, rng};
use super::{shrink, timed, CampaignReport};
use crate::classify::{classify, classify_from};
use crate::diagram::{o_map, DiagramLetter, DiagramWord};
use crate::projection::{d_stab, delete_bad, reconstruct_classical};
use crate::rewrite::{
    alphabet, apply_move, equivalent, neighbors, replay_trace, Move, SearchBounds,
    TraceStep,
};
use crate::sign::{act, adjacent, is_realizable, Realization, SignSet};
use crate::types::{BraidWord, Exponent, GroupMode, Letter};

fn word(n: usize, letters: Vec<Letter>) -> BraidWord {
    BraidWord::from_parts_unchecked(n, letters)
}

/// Every instance of every defining relation on `n` strands, as
/// `(relation name, lhs, rhs)`.
fn relation_instances(n: usize) -> Vec<(&'static str, BraidWord, BraidWord)> {
    let mut out = Vec::new();
    let alpha = alphabet(n);
    let empty = word(n, vec![]);
    for &x in &alpha {
        out.push(("free", word(n, vec![x, x.inverse()]), empty.clone()));
        out.push(("virtualize", word(n, vec![x]), word(n, vec![x.virtualized()])));
        out.push(("involutive", word(n, vec![x, x]), empty.clone()));
        for &y in &alpha {
            if x.is_disjoint_from(y) {
                out.push(("far_comm", word(n, vec![x, y]), word(n, vec![y, x])));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                for e in [Exponent::Pos, Exponent::Neg] {
                    let l = |a, b| Letter::new(a, b, e).unwrap();
                    let lhs = vec![l(i, j), l(i, k), l(j, k)];
                    let mut rhs = lhs.clone();
                    rhs.reverse();
                    out.push(("r3", word(n, lhs), word(n, rhs)));
                }
            }
        }
    }
    out
}

/// Both sides of every relation of every mode act identically on every sign
/// set, for each `n` in `ns`.
pub fn run_action_wellformed(ns: Vec<usize>) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("action");
        report.param("n", json!(ns));
        for &n in &ns {
            let relations = relation_instances(n);
            let states: Vec<SignSet> = SignSet::all(n).expect("n is enumerable").collect();
            for (name, lhs, rhs) in &relations {
                for &s in &states {
                    report.cases += 1;
                    report.bump(name);
                    if act(lhs, s).unwrap() != act(rhs, s).unwrap() {
                        report.violation(
                            format!("{name}: sides act differently on {s}"),
                            format!("{lhs} = {rhs}"),
                        );
                    }
                }
            }
        }
        report
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `is_realizable` against brute force over all `n!` orders: exhaustive for
/// `2 <= n <= n_max`, plus `samples` random sign sets on six strands. Also
/// checks that adjacency in a realizable set means consecutive positions.
pub fn run_realizability(n_max: usize, samples: u64, seed: u64) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("realizability");
        report
            .param("n_max_exhaustive", n_max)
            .param("samples_n6", samples)
            .param("seed", seed);

        let check = |report: &mut CampaignReport, s: SignSet, brute: &HashMap<u128, Vec<usize>>| {
            report.cases += 1;
            let fast = is_realizable(s);
            let slow = brute.get(&s.bits());
            match (&fast, slow) {
                (Some(r), Some(order)) if r.order() == order.as_slice() => {
                    report.bump("realizable");
                }
                (None, None) => report.bump("unrealizable"),
                _ => report.violation(
                    format!("oracle disagreement: fast {:?}, brute {:?}", fast.as_ref().map(|r| r.order().to_vec()), slow),
                    s.to_string(),
                ),
            }
            if let Some(r) = fast {
                let n = s.strands();
                for i in 1..=n {
                    for j in i + 1..=n {
                        let consecutive = r.position(i).unwrap().abs_diff(r.position(j).unwrap()) == 1;
                        if adjacent(s, i, j).unwrap() != consecutive {
                            report.violation(
                                format!("adjacency of {i},{j} disagrees with consecutiveness"),
                                s.to_string(),
                            );
                        }
                    }
                }
            }
        };

        let brute_table = |n: usize| -> HashMap<u128, Vec<usize>> {
            permutations(n)
                .into_iter()
                .map(|order| {
                    let bits = Realization::from_order_unchecked(order.clone()).signs().bits();
                    (bits, order)
                })
                .collect()
        };

        for n in 2..=n_max {
            let brute = brute_table(n);
            for s in SignSet::all(n).unwrap() {
                check(&mut report, s, &brute);
            }
        }
        if samples > 0 {
            let brute = brute_table(6);
            let mut r = rng(seed);
            let realizable: Vec<u128> = {
                let mut v: Vec<u128> = brute.keys().copied().collect();
                v.sort();
                v
            };
            for k in 0..samples {
                // Every fourth sample is drawn from the realizable sets so both
                // outcomes are exercised.
                let bits = if k % 4 == 0 {
                    realizable[r.gen_range(0..realizable.len())]
                } else {
                    r.gen_range(0..1u128 << 15)
                };
                check(&mut report, SignSet::from_bits(6, bits).unwrap(), &brute);
            }
        }
        report
    })
}

fn flags_from(start: SignSet, letters: &[Letter]) -> Vec<bool> {
    let w = word(start.strands(), letters.to_vec());
    classify_from(&w, start).unwrap().flags().to_vec()
}

/// A letter followed by its inverse gets equal flags: exhaustively over all
/// prefix states on `n` strands, and for `trials` random words.
pub fn run_lemma2(n: usize, trials: u64, seed: u64) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("lemma2");
        report.param("n", n).param("trials", trials).param("seed", seed);
        for s in SignSet::all(n).unwrap() {
            for x in alphabet(n) {
                report.cases += 1;
                report.bump("exhaustive");
                let f = flags_from(s, &[x, x.inverse()]);
                if f[0] != f[1] {
                    report.violation("flags differ", format!("state {s}; {x} {}", x.inverse()));
                }
            }
        }
        let mut r = rng(seed);
        let b = SignSet::canonical(n).unwrap();
        for _ in 0..trials {
            report.cases += 1;
            report.bump("random");
            let prefix = random_mixed_word(&mut r, n, 12).into_letters();
            let x = random_letter(&mut r, n);
            let suffix_len = r.gen_range(0..=4);
            let suffix = super::gen::random_word(&mut r, n, suffix_len).into_letters();
            let fails = |pre: &[Letter]| {
                let mut letters = pre.to_vec();
                letters.extend([x, x.inverse()]);
                letters.extend_from_slice(&suffix);
                let f = flags_from(b, &letters);
                f[pre.len()] != f[pre.len() + 1]
            };
            if fails(&prefix) {
                let small = shrink(&prefix, fails);
                report.violation(
                    "flags differ",
                    format!("{} | {x} {}", word(n, small), x.inverse()),
                );
            } else if flags_from(b, &[prefix.as_slice(), &[x]].concat())[prefix.len()] {
                report.bump("good_pairs");
            }
        }
        report
    })
}

/// For every sign set, ordered triple and exponent on `3..=n_max` strands,
/// and both window shapes: the `r3` rewrite keeps the flag of each letter,
/// and the number of good letters in the window is 0, 1 or 3.
pub fn run_lemma3(n_max: usize) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("lemma3");
        report.param("n_max", n_max);
        for n in 3..=n_max {
            let states: Vec<SignSet> = SignSet::all(n).unwrap().collect();
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        for e in [Exponent::Pos, Exponent::Neg] {
                            let l = |a, b| Letter::new(a, b, e).unwrap();
                            let forward = [l(i, j), l(i, k), l(j, k)];
                            let backward = [l(j, k), l(i, k), l(i, j)];
                            for window in [forward, backward] {
                                let mut rewritten = window;
                                rewritten.reverse();
                                for &s in &states {
                                    lemma3_case(&mut report, s, &window, &rewritten);
                                }
                            }
                        }
                    }
                }
            }
        }
        report
    })
}

fn lemma3_case(report: &mut CampaignReport, s: SignSet, window: &[Letter; 3], rewritten: &[Letter; 3]) {
    report.cases += 1;
    let before = flags_from(s, window);
    let after = flags_from(s, rewritten);
    let witness = || {
        format!(
            "state {s}; {} -> {}",
            word(s.strands(), window.to_vec()),
            word(s.strands(), rewritten.to_vec())
        )
    };
    for t in 0..3 {
        if before[t] != after[2 - t] {
            report.violation(format!("flag of window letter {} changed", t + 1), witness());
        }
    }
    let good = before.iter().filter(|&&g| g).count();
    report.bump(&format!("good_count_{good}"));
    if good == 2 {
        report.violation("exactly two good letters in an r3 window", witness());
    }
    if before[0] && before[1] && !before[2] {
        report.violation("first two letters good but third bad", witness());
    }
}

/// Flags of letters outside a move's window survive the move, under the
/// move's position map. Random words on `3..=n_max` strands, random modes,
/// random moves (insertions included).
pub fn run_lemma4(n_max: usize, trials: u64, seed: u64) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("lemma4");
        report.param("n_max", n_max).param("trials", trials).param("seed", seed);
        let mut r = rng(seed);
        let mut case = 0;
        while case < trials {
            let n = r.gen_range(3..=n_max);
            let mode = GroupMode::ALL[r.gen_range(0..3)];
            let w = random_mixed_word(&mut r, n, 12);
            let nbs = neighbors(&w, mode, true);
            // Favour length-preserving and shrinking moves: insertions
            // outnumber them by far.
            let keep: Vec<_> = if r.gen_bool(0.7) {
                nbs.iter().filter(|nb| nb.mv.letter.is_none()).collect()
            } else {
                nbs.iter().collect()
            };
            let Some(nb) = keep.get(r.gen_range(0..keep.len().max(1))) else {
                continue;
            };
            case += 1;
            report.cases += 1;
            report.bump(nb.mv.rule.name());
            if lemma4_fails(&w, &nb.mv) {
                let (small, mv) = shrink_lemma4(&w, nb.mv);
                report.violation(
                    format!("flag outside the window changed under {}", nb.mv.rule),
                    format!("{small} via {mv}"),
                );
            }
        }
        report
    })
}

fn lemma4_fails(w: &BraidWord, mv: &Move) -> bool {
    let Some(after) = apply_move(w, mv) else {
        return false;
    };
    let f = classify(w);
    let g = classify(&after);
    mv.position_map(w.len())
        .iter()
        .enumerate()
        .any(|(old, new)| matches!(new, Some(k) if f.flags()[old] != g.flags()[*k]))
}

fn shrink_lemma4(w: &BraidWord, mv: Move) -> (BraidWord, Move) {
    let mut letters = w.letters().to_vec();
    let mut mv = mv;
    let mut k = 0;
    while k < letters.len() {
        if mv.window().contains(&k) {
            k += 1;
            continue;
        }
        let mut candidate = letters.clone();
        candidate.remove(k);
        let mut cmv = mv;
        if k < mv.position - 1 {
            cmv.position -= 1;
        }
        if lemma4_fails(&word(w.strands(), candidate.clone()), &cmv) {
            letters = candidate;
            mv = cmv;
        } else {
            k += 1;
        }
    }
    (word(w.strands(), letters), mv)
}

/// `d(w)` and `d(w')` coincide or differ by one relation whenever `w'` is one
/// relation away from `w`, in `PBn` and `TildePBn`. The one-step claim is
/// checked directly; the bounded oracle (`max_len = |w| + 4`) must also find
/// the two projections equal, and its unknowns are counted.
pub fn run_d_respects(n: usize, trials: u64, seed: u64) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("d-respects");
        report.param("n", n).param("trials_per_mode", trials).param("seed", seed);
        let mut r = rng(seed);
        for mode in [GroupMode::PureVirtual, GroupMode::Virtualized] {
            for _ in 0..trials {
                report.cases += 1;
                let len = r.gen_range(2..=10);
                let w = random_mixed_word(&mut r, n, len);
                let nbs = neighbors(&w, mode, true);
                let growth = r.gen_bool(0.3);
                let pool: Vec<_> = nbs
                    .iter()
                    .filter(|nb| growth || nb.mv.letter.is_none())
                    .collect();
                let nb = if pool.is_empty() {
                    &nbs[r.gen_range(0..nbs.len())]
                } else {
                    pool[r.gen_range(0..pool.len())]
                };
                let (dw, dw2) = (delete_bad(&w), delete_bad(&nb.word));
                let one_step = dw == dw2
                    || neighbors(&dw, mode, true).iter().any(|m| m.word == dw2);
                if dw == dw2 {
                    report.bump("identical");
                } else {
                    report.bump("one_relation");
                }
                if !one_step {
                    report.violation(
                        format!("{mode}: projections more than one relation apart after {}", nb.mv),
                        format!("{w} -> {}", nb.word),
                    );
                }
                let verdict = equivalent(&dw, &dw2, mode, SearchBounds::new(w.len() + 4, 1_000_000))
                    .expect("same strand count");
                if verdict.is_equal() {
                    if verdict.replay(&dw).as_ref() != Some(&dw2) {
                        report.violation("oracle trace does not replay", format!("{dw} ~ {dw2}"));
                    }
                } else {
                    report.unknowns += 1;
                    report.details.push(json!({
                        "mode": mode.name(),
                        "word": w.to_string(),
                        "neighbor": nb.word.to_string(),
                        "d_word": dw.to_string(),
                        "d_neighbor": dw2.to_string(),
                    }));
                }
            }
        }
        report
    })
}

/// Along random walks of up to `steps` `TildePBn` relations, consecutive
/// `d_stab` images coincide or are one relation apart; the resulting chain
/// is assembled into a trace and replayed end to end.
pub fn run_dstab_invariance(n: usize, walks: u64, steps: usize, seed: u64) -> CampaignReport {
    timed(|| {
        let mode = GroupMode::Virtualized;
        let mut report = CampaignReport::new("dstab");
        report.param("n", n).param("walks", walks).param("steps", steps).param("seed", seed);
        let mut r = rng(seed);
        for _ in 0..walks {
            report.cases += 1;
            // Start from a classical image so the stabilized words stay rich.
            let start = o_map(&random_pure_classical(&mut r, n, 12)).unwrap();
            let mut current = start.clone();
            let mut projected = d_stab(&current);
            let first = projected.clone();
            let mut trace: Vec<TraceStep> = Vec::new();
            for _ in 0..r.gen_range(1..=steps) {
                let nbs: Vec<_> = neighbors(&current, mode, current.len() < 14)
                    .into_iter()
                    .collect();
                if nbs.is_empty() {
                    break;
                }
                let nb = nbs[r.gen_range(0..nbs.len())].clone();
                let next_projected = d_stab(&nb.word);
                if next_projected != projected {
                    let step = neighbors(&projected, mode, true)
                        .into_iter()
                        .find(|m| m.word == next_projected);
                    match step {
                        Some(m) => trace.push(TraceStep {
                            mv: m.mv,
                            word: m.word,
                        }),
                        None => {
                            report.violation(
                                format!("d_stab images more than one relation apart after {}", nb.mv),
                                format!("{current} -> {}", nb.word),
                            );
                            break;
                        }
                    }
                    report.bump("moved");
                } else {
                    report.bump("fixed");
                }
                current = nb.word;
                projected = next_projected;
            }
            if replay_trace(&first, &trace, mode).as_ref() != Some(&projected) {
                report.violation("assembled trace does not replay", start.to_string());
            }
            let annotated = classify(&projected);
            if !annotated.all_good() {
                report.violation("d_stab output has a bad letter", projected.to_string());
            }
            match reconstruct_classical(&projected) {
                Ok(_) => report.bump("reconstructed"),
                Err(e) => report.violation(format!("reconstruction failed: {e}"), projected.to_string()),
            }
        }
        report
    })
}

fn fixpoint_failure(d: &DiagramWord) -> Option<String> {
    if !d.is_pure() {
        return None;
    }
    let b = o_map(d).ok()?;
    let n = b.strands();
    let annotated = classify(&b);
    if let Some(k) = annotated.flags().iter().position(|&g| !g) {
        return Some(format!("letter {} is bad", k + 1));
    }
    if act(&b, SignSet::canonical(n).unwrap()).unwrap() != SignSet::canonical(n).unwrap() {
        return Some("acts nontrivially".into());
    }
    if delete_bad(&b) != b {
        return Some("d changes the word".into());
    }
    let rec = match reconstruct_classical(&b) {
        Ok(rec) => rec,
        Err(e) => return Some(format!("reconstruction failed: {e}")),
    };
    let image = match o_map(&rec.sigma_word) {
        Ok(image) => image,
        Err(e) => return Some(format!("reconstruction is not pure: {e}")),
    };
    if image.len() != b.len() {
        return Some("reconstruction has the wrong length".into());
    }
    for (k, ((orig, got), entry)) in b
        .letters()
        .iter()
        .zip(image.letters())
        .zip(&rec.witness)
        .enumerate()
    {
        let expected = if entry.virtualized { orig.virtualized() } else { *orig };
        if entry.input != *orig || entry.emitted != *got || *got != expected {
            return Some(format!("witness mismatch at letter {}", k + 1));
        }
    }
    None
}

/// Images of random pure classical diagrams are all good, act trivially, are
/// fixed by `d`, and reconstruct to a diagram whose image matches letter by
/// letter up to the recorded virtualizations.
pub fn run_classical_fixpoints(n_max: usize, max_len: usize, trials: u64, seed: u64) -> CampaignReport {
    timed(|| {
        let mut report = CampaignReport::new("fixpoints");
        report
            .param("n_max", n_max)
            .param("max_len", max_len)
            .param("trials", trials)
            .param("seed", seed);
        let mut r = rng(seed);
        for _ in 0..trials {
            report.cases += 1;
            let n = r.gen_range(2..=n_max);
            let d = random_pure_classical(&mut r, n, max_len);
            if let Some(reason) = fixpoint_failure(&d) {
                let small: Vec<DiagramLetter> =
                    shrink(d.letters(), |ls| {
                        fixpoint_failure(&DiagramWord::from_parts_unchecked(n, ls.to_vec())).is_some()
                    });
                report.violation(reason, DiagramWord::from_parts_unchecked(n, small).to_string());
            } else {
                let virtualized = reconstruct_classical(&o_map(&d).unwrap())
                    .unwrap()
                    .virtualization_count();
                report.add("letters", d.len() as u64);
                report.add("virtualized_letters", virtualized as u64);
            }
        }
        report
    })
}
