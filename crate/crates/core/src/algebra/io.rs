//! Text formats for operation tables and built-in quandle names.
//!
//! Table files start with `rack <n>` followed by `n` rows of `n` integers,
//! row `a` listing `a*0 ... a*(n-1)`. `#` starts a comment.

use super::alexander::make_alexander;
use super::group::{cyclic_group, make_conjugation, symmetric_group};
use super::rack::{make_dihedral, make_trivial, RackTable};
use crate::error::{Error, Result};

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

/// Parses the table text format. Entries out of range produce a malformed-table
/// error; tables that fail the axioms parse fine and carry their classification.
pub fn parse_table(text: &str) -> Result<RackTable> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l))).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(0, "empty table file"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("rack") {
        return Err(Error::parse(hline, "expected header `rack <n>`"));
    }
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::parse(hline, "header needs a positive order"))?;
    if words.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens after header"));
    }
    let mut rows = Vec::with_capacity(n);
    for (lno, line) in lines {
        if rows.len() == n {
            return Err(Error::parse(lno, "more rows than the declared order"));
        }
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|w| w.parse::<usize>().map_err(|_| Error::parse(lno, format!("bad entry `{w}`"))))
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(Error::parse(lno, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::parse(0, format!("found {} rows, expected {n}", rows.len())));
    }
    RackTable::from_rows(&rows)
}

/// Renders a table in the file format accepted by [`parse_table`].
pub fn format_table(x: &RackTable) -> String {
    let mut s = format!("rack {}\n", x.size());
    for row in x.rows() {
        let r: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        s.push_str(&r.join(" "));
        s.push('\n');
    }
    s
}

fn parse_poly(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|c| c.trim().parse::<i64>().map_err(|_| Error::parse(0, format!("bad coefficient `{c}`"))))
        .collect()
}

fn parse_count(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::parse(0, format!("bad {what} `{s}`")))
}

/// Built-in quandles: `trivial:<n>`, `dihedral:<n>`,
/// `alexander:<m>:<quotient>:<t>` (comma-separated coefficients, constant
/// term first), and conjugation quandles `conj:s<k>[:<e>]`, `conj:z<n>[:<e>]`.
pub fn builtin(spec: &str) -> Result<RackTable> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["trivial", n] => make_trivial(parse_count(n, "order")?),
        ["dihedral", n] => make_dihedral(parse_count(n, "order")?),
        ["alexander", m, q, t] => {
            let m: u64 = m.parse().map_err(|_| Error::parse(0, format!("bad modulus `{m}`")))?;
            make_alexander(m, &parse_poly(q)?, &parse_poly(t)?)
        }
        ["conj", g, rest @ ..] if rest.len() <= 1 => {
            let e: i64 = match rest.first() {
                Some(e) => e.parse().map_err(|_| Error::parse(0, format!("bad exponent `{e}`")))?,
                None => 1,
            };
            let group = if let Some(k) = g.strip_prefix(['s', 'S']) {
                let k = parse_count(k, "symmetric degree")?;
                if !(1..=5).contains(&k) {
                    return Err(Error::InvalidArgument("symmetric groups S1..S5 only".into()));
                }
                symmetric_group(k)
            } else if let Some(n) = g.strip_prefix(['z', 'Z']) {
                let n = parse_count(n, "cyclic order")?;
                if n == 0 {
                    return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
                }
                cyclic_group(n)
            } else {
                return Err(Error::parse(0, format!("unknown group `{g}`")));
            };
            Ok(make_conjugation(&group, e)?.with_name(spec))
        }
        _ => Err(Error::parse(0, format!("unknown built-in quandle `{spec}`"))),
    }
}
