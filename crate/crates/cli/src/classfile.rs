//! Text format for hypothesis classes.
//!
//! ```text
//! # comments run to end of line
//! ground 6
//! kind explicit
//! 010101
//! 000000
//! ```
//!
//! or `kind family <name> [key=value ...]` with the keys `support`, `blocks`
//! and `pivot` for `cylinder`, `partition` and `halfpivot`.

use std::fmt;

use falsilab::{BitString, ClassBody, FamilyDescriptor, FamilyKind, GroundSet, HypothesisClass};

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    column: usize,
    text: &'a str,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token { column: line[..s].chars().count() + 1, text: &line[s..i] });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token { column: line[..s].chars().count() + 1, text: &line[s..] });
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(body, _)| body)
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn parse_list(line: usize, tok: &Token<'_>, value: &str) -> Result<Vec<usize>, ParseError> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value
        .split(',')
        .map(|v| v.parse().map_err(|_| err(line, tok.column, format!("expected a non-negative integer, got {v:?}"))))
        .collect()
}

fn family_kind(line: usize, name: &Token<'_>, params: &[Token<'_>]) -> Result<FamilyKind, ParseError> {
    let mut support = None;
    let mut blocks = None;
    let mut pivot = None;
    for tok in params {
        let (key, value) = tok
            .text
            .split_once('=')
            .ok_or_else(|| err(line, tok.column, format!("expected key=value, got {:?}", tok.text)))?;
        let slot = match key {
            "support" => &mut support,
            "blocks" => &mut blocks,
            "pivot" => &mut pivot,
            _ => return Err(err(line, tok.column, format!("unknown family key {key:?}"))),
        };
        if slot.is_some() {
            return Err(err(line, tok.column, format!("key {key:?} given twice")));
        }
        *slot = Some((parse_list(line, tok, value)?, tok.column));
    }
    let required = |slot: Option<(Vec<usize>, usize)>, key: &str| {
        slot.map(|(v, _)| v)
            .ok_or_else(|| err(line, name.column, format!("family {:?} requires {key}=...", name.text)))
    };
    let kind = match name.text {
        "threshold" => FamilyKind::Threshold,
        "interval" => FamilyKind::Interval,
        "evenzero" => FamilyKind::EvenZero,
        "allheads" => FamilyKind::AllHeads,
        "full" => FamilyKind::Full,
        "empty" => FamilyKind::Empty,
        "cylinder" => FamilyKind::Cylinder { support: required(support.take(), "support")? },
        "partition" => FamilyKind::PartitionUnion { block_sizes: required(blocks.take(), "blocks")? },
        "halfpivot" => {
            let column = pivot.as_ref().map_or(name.column, |(_, c)| *c);
            let values = required(pivot.take(), "pivot")?;
            match values[..] {
                [p] => FamilyKind::CoordinateHalf { pivot: p },
                _ => return Err(err(line, column, "pivot takes exactly one index")),
            }
        }
        other => return Err(err(line, name.column, format!("unknown family {other:?}"))),
    };
    if let Some((_, column)) = support.or(blocks).or(pivot) {
        return Err(err(line, column, format!("family {:?} does not take this key", name.text)));
    }
    Ok(kind)
}

/// Parses class-file text.
pub fn parse(text: &str) -> Result<HypothesisClass, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(strip_comment(l))))
        .filter(|(_, t)| !t.is_empty());

    let (ln, toks) = lines.next().ok_or_else(|| err(1, 1, "empty class file; expected `ground <n>`"))?;
    if toks[0].text != "ground" || toks.len() != 2 {
        return Err(err(ln, toks[0].column, "expected `ground <n>`"));
    }
    let size: usize = toks[1]
        .text
        .parse()
        .map_err(|_| err(ln, toks[1].column, format!("ground size must be an integer, got {:?}", toks[1].text)))?;
    let ground = GroundSet::new(size).map_err(|e| err(ln, toks[1].column, e.to_string()))?;

    let (ln, toks) = lines.next().ok_or_else(|| err(ln + 1, 1, "missing `kind` line"))?;
    if toks[0].text != "kind" || toks.len() < 2 {
        return Err(err(ln, toks[0].column, "expected `kind explicit` or `kind family <name>`"));
    }
    match toks[1].text {
        "explicit" => {
            if let Some(extra) = toks.get(2) {
                return Err(err(ln, extra.column, "`kind explicit` takes no parameters"));
            }
            let mut bits = Vec::new();
            for (ln, toks) in lines {
                if let Some(extra) = toks.get(1) {
                    return Err(err(ln, extra.column, "expected one bit-string per line"));
                }
                let tok = &toks[0];
                if let Some((i, c)) = tok.text.chars().enumerate().find(|(_, c)| *c != '0' && *c != '1') {
                    return Err(err(ln, tok.column + i, format!("unexpected character {c:?} in bit-string")));
                }
                let width = tok.text.len();
                if width != size {
                    return Err(err(ln, tok.column, format!("bit-string has width {width}, ground size is {size}")));
                }
                let trace: BitString = tok.text.parse().map_err(|e: falsilab::Error| err(ln, tok.column, e.to_string()))?;
                if bits.contains(&trace.bits()) {
                    return Err(err(ln, tok.column, format!("duplicate trace {}", tok.text)));
                }
                bits.push(trace.bits());
            }
            HypothesisClass::from_bits(ground, bits).map_err(|e| err(ln, 1, e.to_string()))
        }
        "family" => {
            let name = toks.get(2).ok_or_else(|| err(ln, toks[1].column, "missing family name"))?;
            let kind = family_kind(ln, name, &toks[3..])?;
            let desc = FamilyDescriptor::new(kind, ground).map_err(|e| err(ln, name.column, e.to_string()))?;
            if let Some((ln, toks)) = lines.next() {
                return Err(err(ln, toks[0].column, "unexpected content after family line"));
            }
            Ok(falsilab::make_family(desc))
        }
        other => Err(err(ln, toks[1].column, format!("unknown kind {other:?}"))),
    }
}

/// Renders a class in class-file syntax. Explicit traces are written in ascending packed order.
pub fn write(class: &HypothesisClass) -> String {
    let n = class.ground_size();
    let mut out = format!("ground {n}\n");
    match class.body() {
        ClassBody::Explicit(bits) => {
            out.push_str("kind explicit\n");
            for &b in bits {
                out.push_str(&BitString::new(b, n).expect("trace fits the ground").to_string());
                out.push('\n');
            }
        }
        ClassBody::Family(desc) => {
            out.push_str(&format!("kind family {}\n", desc.kind()));
        }
    }
    out
}
