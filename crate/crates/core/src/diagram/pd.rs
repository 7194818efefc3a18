use super::{Crossing, Diagram};
use crate::algebra::io::strip_comment;
use crate::error::{Error, Result};

/// Parses a PD code: an optional `pd` header, then `X(a,b,c,d)` terms
/// (`X[a,b,c,d]` and a surrounding `PD[...]` are accepted too).
///
/// Edges are labelled `1..2m` along the orientation. The over-strand runs
/// `b -> d` when `d = b + 1`, `d -> b` when `b = d + 1`, and otherwise from
/// the larger label to the smaller one (the wrap-around edge of a component).
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let mut quads: Vec<([usize; 4], usize)> = Vec::new();
    let mut seen_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut rest = strip_comment(raw).trim();
        if rest.is_empty() {
            continue;
        }
        if !seen_header && quads.is_empty() && (rest == "pd" || rest.starts_with("pd ")) {
            seen_header = true;
            rest = rest[2..].trim();
        }
        let mut s = rest;
        if let Some(inner) = s.strip_prefix("PD[") {
            s = inner;
        }
        loop {
            s = s.trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ']');
            if s.is_empty() {
                break;
            }
            let Some(body) = s.strip_prefix('X') else {
                return Err(Error::parse(line_no, format!("expected `X(`, found `{}`", head(s))));
            };
            let close = match body.chars().next() {
                Some('(') => ')',
                Some('[') => ']',
                _ => return Err(Error::parse(line_no, "expected `(` after `X`")),
            };
            let Some(end) = body.find(close) else {
                return Err(Error::parse(line_no, format!("missing `{close}`")));
            };
            let nums: Vec<&str> =
                body[1..end].split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
            if nums.len() != 4 {
                return Err(Error::parse(line_no, format!("crossing needs 4 labels, got {}", nums.len())));
            }
            let mut q = [0usize; 4];
            for (slot, t) in q.iter_mut().zip(&nums) {
                *slot = t
                    .parse()
                    .ok()
                    .filter(|&v: &usize| v >= 1)
                    .ok_or_else(|| Error::parse(line_no, format!("bad edge label `{t}`")))?;
            }
            quads.push((q, line_no));
            s = &body[end + 1..];
        }
    }
    build(&quads)
}

fn head(s: &str) -> String {
    s.chars().take(12).collect()
}

fn build(quads: &[([usize; 4], usize)]) -> Result<Diagram> {
    if quads.is_empty() {
        return Ok(Diagram::unknot());
    }
    let m = quads.len();
    let mut count = vec![0usize; 2 * m + 1];
    for (c, (q, line)) in quads.iter().enumerate() {
        for &l in q {
            if l > 2 * m {
                return Err(Error::Diagram(format!(
                    "crossing {} (line {line}): label {l} exceeds 2m = {}",
                    c + 1,
                    2 * m
                )));
            }
            count[l] += 1;
        }
    }
    for l in 1..=2 * m {
        match count[l] {
            2 => {}
            0 => return Err(Error::Diagram(format!("label gap: edge {l} never appears"))),
            k => return Err(Error::Diagram(format!("edge {l} appears {k} times, expected exactly twice"))),
        }
    }
    let crossings = quads
        .iter()
        .map(|&(q, _)| {
            let (b, d) = (q[1], q[3]);
            let b_to_d = if d == b + 1 {
                true
            } else if b == d + 1 {
                false
            } else {
                b > d
            };
            Crossing { ends: q.map(|l| l - 1), over_in: if b_to_d { 1 } else { 3 } }
        })
        .collect();
    Diagram::from_crossings(crossings)
}
