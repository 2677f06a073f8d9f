//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test --test acceptance -- --nocapture`.
//! Independent oracles below use a dense sign matrix and brute force over
//! orders; they share no code with the library beyond the public types.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vbraid::campaign::{
    run_action_wellformed, run_classical_fixpoints, run_d_respects, run_lemma2, run_lemma3, run_lemma4,
    run_realizability, run_theorem_desk, CampaignReport, TheoremBounds,
};
use vbraid::rewrite::Status;
use vbraid::{
    act, adjacent, classify, d_stab, delete_bad, equivalent, is_realizable, o_map, reconstruct_classical,
    BraidWord, DiagramLetter, DiagramWord, Exponent, GroupMode, Letter, SearchBounds, SignSet,
};

fn criterion(id: u32, title: &str, limit: Duration, body: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(detail) if elapsed <= limit => Ok(detail),
        Ok(detail) => Err(format!("{detail}; took {elapsed:?}, limit {limit:?}")),
        Err(e) => Err(e),
    };
    match &outcome {
        Ok(detail) => println!("criterion {id} PASS {title}: {detail} ({elapsed:.2?})"),
        Err(e) => println!("criterion {id} FAIL {title}: {e} ({elapsed:.2?})"),
    }
    if let Err(e) = outcome {
        panic!("criterion {id}: {e}");
    }
}

fn clean(report: &CampaignReport) -> Result<(), String> {
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!(
            "{} violations, first: {} [{}]",
            report.violations.len(),
            v.description,
            v.witness
        )),
    }
}

/// Dense sign matrix, `m[i][j]` for 1-based strands; antisymmetric.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Matrix(Vec<Vec<i8>>);

impl Matrix {
    fn from_set(s: SignSet) -> Self {
        let n = s.strands();
        Matrix(
            (0..=n)
                .map(|i| {
                    (0..=n)
                        .map(|j| if i == 0 || j == 0 || i == j { 0 } else { s.sign(i, j).unwrap() })
                        .collect()
                })
                .collect(),
        )
    }

    fn n(&self) -> usize {
        self.0.len() - 1
    }

    fn apply(&mut self, l: Letter) {
        let (i, j) = (l.over(), l.under());
        self.0[i][j] = -self.0[i][j];
        self.0[j][i] = -self.0[j][i];
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        (1..=self.n()).filter(|&k| k != i && k != j).all(|k| self.0[i][k] == self.0[j][k])
    }

    /// Realizing order by trying every permutation.
    fn brute_order(&self) -> Option<Vec<usize>> {
        permutations(self.n()).into_iter().find(|order| {
            let mut pos = vec![0usize; self.n() + 1];
            for (p, &s) in order.iter().enumerate() {
                pos[s] = p;
            }
            (1..=self.n()).all(|i| {
                (1..=self.n())
                    .filter(|&j| j != i)
                    .all(|j| self.0[i][j] == if pos[j] > pos[i] { 1 } else { -1 })
            })
        })
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n);
            out.push(q);
        }
    }
    out
}

fn word(n: usize, letters: Vec<Letter>) -> BraidWord {
    BraidWord::new(n, letters).unwrap()
}

#[test]
fn criterion_1_worked_example() {
    criterion(1, "worked example", Duration::from_secs(1), || {
        let (a13, a24, a14) = (Letter::pos(1, 3), Letter::pos(2, 4), Letter::pos(1, 4));
        let beta = word(4, vec![a13, a24, a14, a14.inverse(), a24.inverse(), a13.inverse()]);
        let flags = classify(&beta).flags().to_vec();
        if flags != [false, false, true, true, false, false] {
            return Err(format!("flags {flags:?}"));
        }
        let d1 = delete_bad(&beta);
        if d1 != word(4, vec![a14, a14.inverse()]) {
            return Err(format!("d = {d1}"));
        }
        let d2 = delete_bad(&d1);
        if !d2.is_empty() {
            return Err(format!("d^2 = {d2}"));
        }
        if !d_stab(&beta).is_empty() {
            return Err("d^stab nonempty".into());
        }
        let eps = BraidWord::identity(4).unwrap();
        let v = equivalent(&beta, &eps, GroupMode::PureVirtual, SearchBounds::default()).unwrap();
        if v.status != Status::Equal {
            return Err(format!("equiv status {:?}", v.status));
        }
        if v.replay(&beta).as_ref() != Some(&eps) {
            return Err("trace does not replay to the empty word".into());
        }
        Ok(format!("flags B B G G B B, d^2 = e, trace of {} steps", v.trace.len()))
    });
}

/// Defining relations as (lhs, rhs) letter lists, independently enumerated.
fn relations(n: usize) -> Vec<(&'static str, Vec<Letter>, Vec<Letter>)> {
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    for &(i, j) in &pairs {
        for e in [Exponent::Pos, Exponent::Neg] {
            let x = Letter::new(i, j, e).unwrap();
            out.push(("free", vec![x, x.inverse()], vec![]));
            out.push(("virtualize", vec![x], vec![Letter::new(j, i, e).unwrap()]));
            out.push(("involutive", vec![x, x], vec![]));
        }
        for &(k, l) in &pairs {
            if ![k, l].contains(&i) && ![k, l].contains(&j) {
                out.push(("far_comm", vec![Letter::pos(i, j), Letter::pos(k, l)], vec![Letter::pos(k, l), Letter::pos(i, j)]));
            }
        }
        for k in 1..=n {
            if k != i && k != j {
                for e in [Exponent::Pos, Exponent::Neg] {
                    let (x, y, z) = (
                        Letter::new(i, j, e).unwrap(),
                        Letter::new(i, k, e).unwrap(),
                        Letter::new(j, k, e).unwrap(),
                    );
                    out.push(("r3", vec![x, y, z], vec![z, y, x]));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_2_action_well_defined() {
    criterion(2, "action well-definedness", Duration::from_secs(10), || {
        let report = run_action_wellformed(vec![3, 4]);
        clean(&report)?;
        let mut checked = 0u64;
        for n in [3, 4] {
            let sets: Vec<SignSet> = SignSet::all(n).unwrap().collect();
            if sets.len() != 1 << (n * (n - 1) / 2) {
                return Err(format!("{} sign sets at n={n}", sets.len()));
            }
            for (name, lhs, rhs) in relations(n) {
                let (l, r) = (word(n, lhs.clone()), word(n, rhs.clone()));
                for &s in &sets {
                    let (mut ml, mut mr) = (Matrix::from_set(s), Matrix::from_set(s));
                    lhs.iter().for_each(|&x| ml.apply(x));
                    rhs.iter().for_each(|&x| mr.apply(x));
                    let (al, ar) = (act(&l, s).unwrap(), act(&r, s).unwrap());
                    if ml != mr || al != ar || Matrix::from_set(al) != ml {
                        return Err(format!("{name}: {l} vs {r} on {s}"));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{} campaign cases, {checked} oracle cases, 0 violations", report.cases))
    });
}

#[test]
fn criterion_3_realizability() {
    criterion(3, "realizability oracle", Duration::from_secs(30), || {
        let report = run_realizability(5, 10_000, 0);
        clean(&report)?;
        let mut checked = 0u64;
        let mut compare = |s: SignSet| -> Result<(), String> {
            let m = Matrix::from_set(s);
            let fast = is_realizable(s).map(|r| r.order().to_vec());
            let slow = m.brute_order();
            if fast != slow {
                return Err(format!("{s}: fast {fast:?}, brute {slow:?}"));
            }
            if let Some(order) = slow {
                for i in 1..=m.n() {
                    for j in i + 1..=m.n() {
                        let pi = order.iter().position(|&x| x == i).unwrap();
                        let pj = order.iter().position(|&x| x == j).unwrap();
                        if adjacent(s, i, j).unwrap() != (pi.abs_diff(pj) == 1) || m.adjacent(i, j) != (pi.abs_diff(pj) == 1) {
                            return Err(format!("{s}: adjacency of {i},{j}"));
                        }
                    }
                }
            }
            checked += 1;
            Ok(())
        };
        for n in 2..=5 {
            for s in SignSet::all(n).unwrap() {
                compare(s)?;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10_000 {
            compare(SignSet::from_bits(6, rng.gen_range(0..1u128 << 15)).unwrap())?;
        }
        Ok(format!("{} campaign cases, {checked} oracle cases, 0 disagreements", report.cases))
    });
}

#[test]
fn criterion_4_lemma2() {
    criterion(4, "corresponding crossings share flags", Duration::from_secs(30), || {
        let report = run_lemma2(4, 10_000, 0);
        clean(&report)?;
        if report.count("random") != 10_000 || report.count("exhaustive") == 0 {
            return Err(format!("coverage {:?}", report.counts));
        }
        // a14 a14^-1 after a13 a24: both good.
        let w = word(4, vec![Letter::pos(1, 3), Letter::pos(2, 4), Letter::pos(1, 4), Letter::neg(1, 4)]);
        let f = classify(&w);
        if !(f.is_good(2) && f.is_good(3)) {
            return Err("a14 a14^-1 not both good".into());
        }
        Ok(format!(
            "{} random + {} exhaustive contexts, 0 mismatches",
            report.count("random"),
            report.count("exhaustive")
        ))
    });
}

#[test]
fn criterion_5_lemma3() {
    criterion(5, "triangle moves preserve flags", Duration::from_secs(120), || {
        let report = run_lemma3(5);
        clean(&report)?;
        let support: BTreeSet<usize> = (0..=3)
            .filter(|k| report.count(&format!("good_count_{k}")) > 0)
            .collect();
        if support != BTreeSet::from([0, 1, 3]) {
            return Err(format!("good-count support {support:?}"));
        }
        // Independent count law at n = 4 on the dense matrix.
        let mut oracle_support = BTreeSet::new();
        for s in SignSet::all(4).unwrap() {
            for (i, j, k) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (2, 1, 4), (3, 1, 2), (4, 2, 3)] {
                for window in [[(i, j), (i, k), (j, k)], [(j, k), (i, k), (i, j)]] {
                    let mut m = Matrix::from_set(s);
                    let mut good = Vec::new();
                    for (a, b) in window {
                        good.push(m.adjacent(a, b));
                        m.apply(Letter::pos(a, b));
                    }
                    let reversed: Vec<_> = window.iter().rev().copied().collect();
                    let mut m2 = Matrix::from_set(s);
                    let mut good2 = Vec::new();
                    for (a, b) in reversed {
                        good2.push(m2.adjacent(a, b));
                        m2.apply(Letter::pos(a, b));
                    }
                    good2.reverse();
                    if good != good2 || m != m2 {
                        return Err(format!("oracle: flags move on {s}"));
                    }
                    oracle_support.insert(good.iter().filter(|&&g| g).count());
                }
            }
        }
        if oracle_support != BTreeSet::from([0, 1, 3]) {
            return Err(format!("oracle support {oracle_support:?}"));
        }
        Ok(format!(
            "{} cases, histogram 0:{} 1:{} 3:{}",
            report.cases,
            report.count("good_count_0"),
            report.count("good_count_1"),
            report.count("good_count_3")
        ))
    });
}

#[test]
fn criterion_6_lemma4() {
    criterion(6, "untouched letters keep flags", Duration::from_secs(60), || {
        let report = run_lemma4(5, 10_000, 0);
        clean(&report)?;
        if report.cases != 10_000 {
            return Err(format!("{} cases", report.cases));
        }
        for rule in ["far_comm", "free_insert", "free_reduce", "involutive", "r3", "virtualize"] {
            if report.count(rule) == 0 {
                return Err(format!("rule {rule} never sampled"));
            }
        }
        Ok(format!("{} (word, move) pairs over 6 rules, 0 violations", report.cases))
    });
}

#[test]
fn criterion_7_d_respects_relations() {
    criterion(7, "d respects relations", Duration::from_secs(300), || {
        let report = run_d_respects(4, 1_000, 0);
        clean(&report)?;
        if report.cases != 2_000 {
            return Err(format!("{} cases", report.cases));
        }
        let share = report.unknowns as f64 / report.cases as f64;
        if share >= 0.01 {
            return Err(format!("unknown share {share:.4}"));
        }
        Ok(format!(
            "{} cases in PBn and TildePBn, 0 refutations, {} unknown",
            report.cases, report.unknowns
        ))
    });
}

/// Independent image: σ_p^+ gives a[L,R], σ_p^- gives a[R,L]^-1, v_p swaps.
fn image(d: &DiagramWord) -> BraidWord {
    let n = d.strands();
    let mut at: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for l in d.letters() {
        let p = l.position() - 1;
        let (left, right) = (at[p], at[p + 1]);
        match l {
            DiagramLetter::Classical { exponent: Exponent::Pos, .. } => out.push(Letter::pos(left, right)),
            DiagramLetter::Classical { exponent: Exponent::Neg, .. } => out.push(Letter::neg(right, left)),
            DiagramLetter::Virtual { .. } => {}
        }
        at.swap(p, p + 1);
    }
    word(n, out)
}

fn random_pure_classical(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> DiagramWord {
    let budget = n * (n - 1) / 2;
    let prefix = rng.gen_range(0..=max_len - budget);
    let sigma = |rng: &mut ChaCha8Rng, p: usize| {
        if rng.gen_bool(0.5) {
            DiagramLetter::sigma(p)
        } else {
            DiagramLetter::sigma_inv(p)
        }
    };
    let mut letters = Vec::new();
    let mut at: Vec<usize> = (1..=n).collect();
    for _ in 0..prefix {
        let p = rng.gen_range(1..n);
        letters.push(sigma(rng, p));
        at.swap(p - 1, p);
    }
    while let Some(p) = (0..n - 1).find(|&p| at[p] > at[p + 1]) {
        letters.push(sigma(rng, p + 1));
        at.swap(p, p + 1);
    }
    DiagramWord::new(n, letters).unwrap()
}

#[test]
fn criterion_8_classical_fixpoints() {
    criterion(8, "classical images are fixed points", Duration::from_secs(120), || {
        let report = run_classical_fixpoints(5, 40, 1_000, 0);
        clean(&report)?;
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1_000 {
            let n = rng.gen_range(2..=5);
            let d = random_pure_classical(&mut rng, n, 40);
            let o = o_map(&d).map_err(|e| e.to_string())?;
            if o != image(&d) {
                return Err(format!("image of {d}"));
            }
            let mut m = Matrix::from_set(SignSet::canonical(n).unwrap());
            for &l in o.letters() {
                if !m.adjacent(l.over(), l.under()) {
                    return Err(format!("bad letter in image of {d}"));
                }
                m.apply(l);
            }
            if m != Matrix::from_set(SignSet::canonical(n).unwrap()) || delete_bad(&o) != o {
                return Err(format!("{d} not a fixed point"));
            }
            let r = reconstruct_classical(&o).map_err(|e| e.to_string())?;
            let back = o_map(&r.sigma_word).map_err(|e| e.to_string())?;
            for ((x, y), w) in o.letters().iter().zip(back.letters()).zip(&r.witness) {
                let expected = if w.virtualized { x.virtualized() } else { *x };
                if *y != expected {
                    return Err(format!("round trip of {d}"));
                }
            }
            if back.len() != o.len() {
                return Err(format!("round trip length of {d}"));
            }
        }
        Ok(format!("{} campaign + 1000 oracle diagrams, 0 violations", report.cases))
    });
}

#[test]
fn criterion_9_theorem_desk() {
    criterion(9, "classical inclusion at desk scale", Duration::from_secs(600), || {
        let report = run_theorem_desk(3, 4, TheoremBounds::default());
        clean(&report)?;
        Ok(format!(
            "{} pairs over {} words, 0 counterexamples, {} unknown",
            report.cases,
            report.count("words"),
            report.unknowns
        ))
    });
}
