use crate::algebra::io::strip_comment;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriplePoint {
    pub lower: usize,
    pub middle: usize,
    pub upper: usize,
    pub sign: i32,
}

/// Declarative knotted-surface diagram data. Sheets are `0..sheets`;
/// a double curve `(i, j, k)` reads `x_j = x_i * x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceDiagramData {
    pub sheets: usize,
    pub double_curves: Vec<(usize, usize, usize)>,
    pub triple_points: Vec<TriplePoint>,
}

impl SurfaceDiagramData {
    pub fn new(
        sheets: usize,
        double_curves: Vec<(usize, usize, usize)>,
        triple_points: Vec<TriplePoint>,
    ) -> Result<Self> {
        let bad = |s: usize| s >= sheets;
        if let Some(dc) = double_curves.iter().find(|&&(i, j, k)| bad(i) || bad(j) || bad(k)) {
            return Err(Error::Diagram(format!("double curve {dc:?} references an undeclared sheet")));
        }
        if let Some(tp) = triple_points.iter().find(|t| bad(t.lower) || bad(t.middle) || bad(t.upper)) {
            return Err(Error::Diagram(format!("triple point {tp:?} references an undeclared sheet")));
        }
        Ok(SurfaceDiagramData { sheets, double_curves, triple_points })
    }
}

/// Parses the surface format: `surface`, `sheets <n>`, then `dc <i> <j> <k>`
/// and `tp <lower> <middle> <upper> <+|->` lines with 1-based sheet ids.
pub fn parse_surface(text: &str) -> Result<SurfaceDiagramData> {
    let mut header = false;
    let mut sheets: Option<usize> = None;
    let mut dcs = Vec::new();
    let mut tps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        let Some(&kw) = toks.first() else { continue };
        if !header {
            if kw != "surface" || toks.len() != 1 {
                return Err(Error::parse(line, "expected `surface` header"));
            }
            header = true;
            continue;
        }
        let sheet = |t: &str| -> Result<usize> {
            let n = sheets.ok_or_else(|| Error::parse(line, "`sheets` must come before relations"))?;
            match t.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                Ok(v) => Err(Error::Diagram(format!("line {line}: sheet {v} is not declared ({n} sheets)"))),
                Err(_) => Err(Error::parse(line, format!("bad sheet id `{t}`"))),
            }
        };
        match (kw, toks.len()) {
            ("sheets", 2) if sheets.is_none() => {
                sheets = Some(toks[1].parse().map_err(|_| Error::parse(line, "bad sheet count"))?);
            }
            ("dc", 4) => dcs.push((sheet(toks[1])?, sheet(toks[2])?, sheet(toks[3])?)),
            ("tp", 5) => {
                let sign = match toks[4] {
                    "+" | "+1" => 1,
                    "-" | "-1" => -1,
                    s => return Err(Error::parse(line, format!("triple point sign must be + or -, got `{s}`"))),
                };
                tps.push(TriplePoint { lower: sheet(toks[1])?, middle: sheet(toks[2])?, upper: sheet(toks[3])?, sign });
            }
            ("tp", _) => return Err(Error::parse(line, "malformed triple point, expected `tp i j k +|-`")),
            _ => return Err(Error::parse(line, format!("unexpected `{}`", toks.join(" ")))),
        }
    }
    if !header {
        return Err(Error::parse(1, "expected `surface` header"));
    }
    let sheets = sheets.ok_or_else(|| Error::parse(0, "missing `sheets` line"))?;
    SurfaceDiagramData::new(sheets, dcs, tps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere() {
        let sd = parse_surface("surface\nsheets 1\n").unwrap();
        assert_eq!(sd.sheets, 1);
        assert!(sd.double_curves.is_empty() && sd.triple_points.is_empty());
    }

    #[test]
    fn relation_and_triple_point() {
        let sd = parse_surface("surface\nsheets 3\ndc 1 3 2\ntp 1 2 3 -\n").unwrap();
        assert_eq!(sd.double_curves, vec![(0, 2, 1)]);
        assert_eq!(sd.triple_points[0], TriplePoint { lower: 0, middle: 1, upper: 2, sign: -1 });
    }

    #[test]
    fn undeclared_sheet() {
        assert!(matches!(parse_surface("surface\nsheets 3\ntp 1 2 9 +\n"), Err(Error::Diagram(_))));
        assert!(matches!(parse_surface("surface\nsheets 3\ntp 1 2 3\n"), Err(Error::Parse { line: 3, .. })));
    }
}
