//! Command-line front end.
//!
//! Exit statuses: 0 success (or `equal`), 1 usage or parse error, 2 violated
//! precondition, 3 `unknown` verdict, 4 campaign found violations.

use std::io::{Read, Write};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::campaign::{self, CAMPAIGNS};
use crate::classify::classify;
use crate::diagram::o_map;
use crate::error::Error;
use crate::projection::{d_stab_iterates, delete_bad, reconstruct_classical};
use crate::render::{render_diagram, render_evolution};
use crate::rewrite::{equivalent, SearchBounds, Status};
use crate::sign::{act, is_realizable, SignSet};
use crate::text::{parse_any, parse_diagram, parse_sign_set, parse_word, Parsed};
use crate::types::{BraidWord, GroupMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;
pub const EXIT_VIOLATIONS: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "vbraid", version, about = "Sign-set projection of pure virtual braids")]
struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mark each letter good (G) or bad (B).
    Classify {
        /// Also print the prefix sign sets.
        #[arg(long)]
        states: bool,
        input: Vec<String>,
    },
    /// Delete bad letters once.
    Project { input: Vec<String> },
    /// Delete bad letters until nothing changes.
    Stab { input: Vec<String> },
    /// Redraw an all-good, trivially acting word as a classical diagram.
    Reconstruct { input: Vec<String> },
    /// Act on the canonical sign set.
    Act { input: Vec<String> },
    /// Decide realizability of a sign set, or of the state a word reaches.
    Realizable { input: Vec<String> },
    /// Map a pure diagram to its word in the a[i,j] generators.
    Omap { input: Vec<String> },
    /// Bounded search for a chain of relations between two words.
    Equiv {
        left: String,
        right: String,
        #[arg(long, default_value = "PBn")]
        mode: GroupMode,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
    },
    /// Run a verification campaign.
    Campaign {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(CAMPAIGNS))]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        /// Trial count (for `theorem`: the length cap).
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = campaign::DEFAULT_SEED)]
        seed: u64,
    },
    /// ASCII picture of a diagram, or the sign-set evolution of a word.
    Render { input: Vec<String> },
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn read_input(args: &[String], stdin: &mut dyn Read) -> Result<String, Error> {
    if !args.is_empty() {
        return Ok(args.join(" "));
    }
    let mut buf = String::new();
    stdin.read_to_string(&mut buf).map_err(|e| Error::Parse {
        token: 0,
        message: format!("reading standard input: {e}"),
    })?;
    Ok(buf)
}

fn word_json(w: &BraidWord) -> Value {
    json!(w.to_string())
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Output, Error> {
    Ok(match command {
        Command::Classify { states, input } => {
            let w = parse_word(&read_input(&input, stdin)?)?;
            let a = classify(&w);
            let mut text = format!("{w}\n{}\n", a.marks());
            if states {
                text.push_str(&render_evolution(&w));
            }
            let mut doc = json!({
                "word": word_json(&w),
                "marks": a.marks().split_whitespace().collect::<Vec<_>>(),
                "good": a.flags(),
            });
            if states {
                doc["states"] = json!(a.states());
            }
            Output::ok(text, doc)
        }
        Command::Project { input } => {
            let w = parse_word(&read_input(&input, stdin)?)?;
            let d = delete_bad(&w);
            Output::ok(
                format!("{d}\n"),
                json!({"input": word_json(&w), "output": word_json(&d)}),
            )
        }
        Command::Stab { input } => {
            let w = parse_word(&read_input(&input, stdin)?)?;
            let iterates = d_stab_iterates(&w);
            let last = iterates.last().unwrap();
            Output::ok(
                format!("{last}\n"),
                json!({
                    "input": word_json(&w),
                    "output": word_json(last),
                    "iterates": iterates.iter().map(word_json).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Reconstruct { input } => {
            let w = parse_word(&read_input(&input, stdin)?)?;
            let r = reconstruct_classical(&w)?;
            let marks: Vec<&str> = r
                .witness
                .iter()
                .map(|e| if e.virtualized { "V" } else { "=" })
                .collect();
            Output::ok(
                format!("{}\n{}\n", r.sigma_word, marks.join(" ")),
                json!({
                    "input": word_json(&w),
                    "sigma_word": r.sigma_word.to_string(),
                    "witness": r.witness.iter().map(|e| json!({
                        "input": e.input.to_string(),
                        "emitted": e.emitted.to_string(),
                        "virtualized": e.virtualized,
                    })).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Act { input } => {
            let w = parse_word(&read_input(&input, stdin)?)?;
            let s = act(&w, SignSet::canonical(w.strands())?)?;
            Output::ok(
                format!("{s}\ntrivial: {}\n", if s.is_canonical() { "yes" } else { "no" }),
                json!({"word": word_json(&w), "state": s, "trivial": s.is_canonical()}),
            )
        }
        Command::Realizable { input } => {
            let text = read_input(&input, stdin)?;
            let s = match parse_sign_set(&text) {
                Ok(s) => s,
                Err(_) => {
                    let w = parse_word(&text)?;
                    act(&w, SignSet::canonical(w.strands())?)?
                }
            };
            match is_realizable(s) {
                Some(r) => {
                    let order: Vec<String> = r.order().iter().map(|x| x.to_string()).collect();
                    Output::ok(
                        format!("{s}\nrealizable: {}\n", order.join(" < ")),
                        json!({"state": s, "realizable": true, "order": r.order()}),
                    )
                }
                None => Output::ok(
                    format!("{s}\nnot realizable\n"),
                    json!({"state": s, "realizable": false, "order": Value::Null}),
                ),
            }
        }
        Command::Omap { input } => {
            let d = parse_diagram(&read_input(&input, stdin)?)?;
            let w = o_map(&d)?;
            Output::ok(
                format!("{w}\n"),
                json!({"diagram": d.to_string(), "word": word_json(&w)}),
            )
        }
        Command::Equiv {
            left,
            right,
            mode,
            max_len,
            max_states,
        } => {
            let (a, b) = (parse_word(&left)?, parse_word(&right)?);
            let v = equivalent(&a, &b, mode, SearchBounds { max_len, max_states })?;
            let mut text = match v.status {
                Status::Equal => format!("equal in {mode} ({} steps)\n", v.trace.len()),
                Status::Unknown if v.distinct_by_invariant => {
                    format!("unknown in {mode}: pair exponent sums differ, so the words are distinct\n")
                }
                Status::Unknown => format!(
                    "unknown in {mode} (max_len {}, {} states{})\n",
                    v.max_len,
                    v.stats.states,
                    if v.stats.exhausted { ", exhausted" } else { "" }
                ),
            };
            for step in &v.trace {
                text.push_str(&format!("  {:<22} {}\n", step.mv.to_string(), step.word));
            }
            let code = if v.is_equal() { EXIT_OK } else { EXIT_UNKNOWN };
            Output {
                text,
                json: json!({
                    "left": word_json(&a),
                    "right": word_json(&b),
                    "verdict": v,
                }),
                code,
            }
        }
        Command::Campaign {
            name,
            n,
            trials,
            seed,
        } => {
            let report = campaign::run_named(&name, n, trials, seed).expect("name validated by clap");
            let mut text = format!("{}\n", report.summary());
            for (k, v) in &report.counts {
                text.push_str(&format!("  {k}: {v}\n"));
            }
            for v in &report.violations {
                text.push_str(&format!("  VIOLATION case {}: {} [{}]\n", v.case, v.description, v.witness));
            }
            let code = if report.passed() { EXIT_OK } else { EXIT_VIOLATIONS };
            Output {
                text,
                json: serde_json::to_value(&report).unwrap(),
                code,
            }
        }
        Command::Render { input } => match parse_any(&read_input(&input, stdin)?)? {
            Parsed::Diagram(d) => {
                let pic = render_diagram(&d);
                Output::ok(pic.clone(), json!({"diagram": d.to_string(), "picture": pic}))
            }
            Parsed::Word(w) => {
                let table = render_evolution(&w);
                Output::ok(table.clone(), json!({"word": word_json(&w), "evolution": table}))
            }
        },
    })
}

/// Runs the command line with explicit streams and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                let _ = write!(stdout, "{}", out.text);
            }
            out.code
        }
        Err(e) => {
            let code = if e.is_precondition() {
                EXIT_PRECONDITION
            } else {
                EXIT_USAGE
            };
            if cli.json {
                let _ = writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&json!({"error": e.to_string(), "exit": code})).unwrap()
                );
            }
            let _ = writeln!(stderr, "error: {e}");
            code
        }
    }
}
