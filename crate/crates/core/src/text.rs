//! Text formats.
//!
//! Words: a header `n=<int>` followed by whitespace-separated `a[i,j]` and
//! `a[i,j]^-1`. Diagrams: the same header followed by `s<p>`, `s<p>^-1` and
//! `v<p>`. A header with no tokens is the empty word. Rendering is the
//! `Display` impl of [`BraidWord`] and [`DiagramWord`], and the two round-trip.

use crate::diagram::{DiagramLetter, DiagramWord};
use crate::error::{Error, Result};
use crate::sign::SignSet;
use crate::types::{BraidWord, Exponent, Letter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Word(BraidWord),
    Diagram(DiagramWord),
}

fn err(token: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        token,
        message: message.into(),
    }
}

fn header(text: &str) -> Result<(usize, Vec<&str>)> {
    let mut tokens = text.split_whitespace();
    let head = tokens.next().ok_or_else(|| err(0, "missing `n=<int>` header"))?;
    let n = head
        .strip_prefix("n=")
        .ok_or_else(|| err(0, format!("expected `n=<int>`, found `{head}`")))?
        .parse::<usize>()
        .map_err(|e| err(0, format!("bad strand count: {e}")))?;
    Ok((n, tokens.collect()))
}

fn split_exponent(token: &str, index: usize) -> Result<(&str, Exponent)> {
    match token.split_once('^') {
        None => Ok((token, Exponent::Pos)),
        Some((body, "-1")) => Ok((body, Exponent::Neg)),
        Some((body, "1" | "+1")) => Ok((body, Exponent::Pos)),
        Some((_, other)) => Err(err(index, format!("exponent must be -1 or 1, found `{other}`"))),
    }
}

fn parse_letter(token: &str, index: usize) -> Result<Letter> {
    let (body, exponent) = split_exponent(token, index)?;
    let inner = body
        .strip_prefix("a[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err(index, format!("expected `a[i,j]`, found `{token}`")))?;
    let (i, j) = inner
        .split_once(',')
        .ok_or_else(|| err(index, format!("expected two indices in `{token}`")))?;
    let i = i.parse().map_err(|_| err(index, format!("bad index `{i}`")))?;
    let j = j.parse().map_err(|_| err(index, format!("bad index `{j}`")))?;
    Letter::new(i, j, exponent).map_err(|e| err(index, e.to_string()))
}

fn parse_diagram_letter(token: &str, index: usize) -> Result<DiagramLetter> {
    let (body, exponent) = split_exponent(token, index)?;
    let (virt, digits) = if let Some(d) = body.strip_prefix('s') {
        (false, d)
    } else if let Some(d) = body.strip_prefix('v') {
        if token.contains('^') {
            return Err(err(index, "virtual crossings carry no exponent"));
        }
        (true, d)
    } else {
        return Err(err(index, format!("expected `s<p>` or `v<p>`, found `{token}`")));
    };
    let position: usize = digits
        .parse()
        .map_err(|_| err(index, format!("bad position in `{token}`")))?;
    if position == 0 || position > u8::MAX as usize {
        return Err(err(index, format!("position {position} out of range")));
    }
    Ok(if virt {
        DiagramLetter::virt(position)
    } else {
        DiagramLetter::Classical {
            position: position as u8,
            exponent,
        }
    })
}

pub fn parse_word(text: &str) -> Result<BraidWord> {
    let (n, tokens) = header(text)?;
    let letters = tokens
        .iter()
        .enumerate()
        .map(|(k, t)| parse_letter(t, k + 1))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(n, letters).map_err(|e| err(0, e.to_string()))
}

pub fn parse_diagram(text: &str) -> Result<DiagramWord> {
    let (n, tokens) = header(text)?;
    let letters = tokens
        .iter()
        .enumerate()
        .map(|(k, t)| parse_diagram_letter(t, k + 1))
        .collect::<Result<Vec<_>>>()?;
    DiagramWord::new(n, letters).map_err(|e| err(0, e.to_string()))
}

/// Parses a sign set: the header followed by the upper triangle in
/// row-major order, each entry either `+`/`-` or `s<i>,<j>=+`/`s<i>,<j>=-`
/// as printed by the `Display` impl of [`SignSet`].
pub fn parse_sign_set(text: &str) -> Result<SignSet> {
    let (n, tokens) = header(text)?;
    let start = SignSet::canonical(n).map_err(|e| err(0, e.to_string()))?;
    let pairs: Vec<(usize, usize)> = start.upper_triangle().into_iter().map(|(p, _)| p).collect();
    if tokens.len() != pairs.len() {
        return Err(err(
            tokens.len().min(pairs.len()) + 1,
            format!("expected {} signs, found {}", pairs.len(), tokens.len()),
        ));
    }
    let mut set = start;
    for (k, (token, &(i, j))) in tokens.iter().zip(&pairs).enumerate() {
        let sign = match token.split_once('=') {
            Some((label, sign)) => {
                if *label != format!("s{i},{j}") {
                    return Err(err(k + 1, format!("expected s{i},{j}, found `{label}`")));
                }
                sign
            }
            None => token,
        };
        match sign {
            "+" | "+1" => {}
            "-" | "-1" => set = set.toggled(i, j),
            other => return Err(err(k + 1, format!("expected + or -, found `{other}`"))),
        }
    }
    Ok(set)
}

/// Parses either format, deciding by the first token after the header.
/// A bare header parses as the empty word.
pub fn parse_any(text: &str) -> Result<Parsed> {
    let (_, tokens) = header(text)?;
    match tokens.first() {
        Some(t) if t.starts_with('s') || t.starts_with('v') => {
            parse_diagram(text).map(Parsed::Diagram)
        }
        _ => parse_word(text).map(Parsed::Word),
    }
}

impl From<BraidWord> for String {
    fn from(w: BraidWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for BraidWord {
    type Error = Error;
    fn try_from(text: String) -> Result<Self> {
        parse_word(&text)
    }
}

impl From<DiagramWord> for String {
    fn from(d: DiagramWord) -> String {
        d.to_string()
    }
}

impl TryFrom<String> for DiagramWord {
    type Error = Error;
    fn try_from(text: String) -> Result<Self> {
        parse_diagram(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::six_letter_example;

    #[test]
    fn six_letter_text() {
        let text = "n=4 a[1,3] a[2,4] a[1,4] a[1,4]^-1 a[2,4]^-1 a[1,3]^-1";
        let w = parse_word(text).unwrap();
        assert_eq!(w, six_letter_example());
        assert_eq!(w.to_string(), text);
    }

    #[test]
    fn serde_uses_text() {
        let w = six_letter_example();
        let j = serde_json::to_string(&w).unwrap();
        assert_eq!(j, format!("\"{w}\""));
        assert_eq!(serde_json::from_str::<BraidWord>(&j).unwrap(), w);
        assert!(serde_json::from_str::<BraidWord>("\"n=2 a[1,3]\"").is_err());
    }

    #[test]
    fn header_only_is_empty() {
        let w = parse_word("n=3").unwrap();
        assert!(w.is_empty());
        assert_eq!(w.to_string(), "n=3");
        assert_eq!(parse_any("  n=3 \n").unwrap(), Parsed::Word(w));
    }

    #[test]
    fn two_digit_indices() {
        let w = parse_word("n=13 a[1,13] a[11,3]^-1").unwrap();
        assert_eq!(w.letters()[0], Letter::pos(1, 13));
        assert_eq!(w.letters()[1], Letter::neg(11, 3));
    }

    #[test]
    fn diagram_text() {
        let text = "n=3 s1 s2^-1 v1";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.to_string(), text);
        assert!(matches!(parse_any(text).unwrap(), Parsed::Diagram(_)));
    }

    #[test]
    fn sign_set_text() {
        let s = parse_sign_set("n=3 + - +").unwrap();
        assert_eq!(s.to_string(), "s1,2=+ s1,3=- s2,3=+");
        assert_eq!(parse_sign_set(&format!("n=3 {s}")).unwrap(), s);
        assert!(parse_sign_set("n=3 + -").is_err());
        assert!(parse_sign_set("n=3 + - x").is_err());
        assert!(parse_sign_set("n=3 s1,3=+ s1,2=+ s2,3=+").is_err());
    }

    #[test]
    fn parse_errors() {
        let cases = [
            ("", 0),
            ("a[1,2]", 0),
            ("n=x", 0),
            ("n=3 a[1,2", 1),
            ("n=3 a[1,2] a[1,1]", 2),
            ("n=3 a[1,2]^2", 1),
            ("n=3 a[1,4]", 0),
            ("n=1", 0),
            ("n=3 b[1,2]", 1),
        ];
        for (text, token) in cases {
            match parse_word(text) {
                Err(Error::Parse { token: t, .. }) => assert_eq!(t, token, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(parse_diagram("n=3 s3").is_err());
        assert!(parse_diagram("n=3 v1^-1").is_err());
        assert!(parse_diagram("n=3 x1").is_err());
    }
}
