use std::fmt;

use super::{Crossing, Diagram, End};
use crate::error::{Error, Result};

/// A braid on `strands` strands; letter `(i, +1)` is the positive
/// crossing of strands `i` and `i + 1` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<(usize, i32)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i32)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        for &(g, e) in &letters {
            if g == 0 || g >= strands || (e != 1 && e != -1) {
                return Err(Error::InvalidArgument(format!(
                    "braid letter {} out of range for {strands} strands",
                    g as i64 * e as i64
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}", self.strands)?;
        for &(g, e) in &self.letters {
            write!(f, " {}", g as i64 * e as i64)?;
        }
        Ok(())
    }
}

/// Parses `braid <strands> <letters>` or the short form `<strands>: <letters>`,
/// letters being signed generator indices such as `1 -2 1`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let body: String = text.lines().map(crate::algebra::io::strip_comment).collect::<Vec<_>>().join(" ");
    let body = body.trim();
    let body = body.strip_prefix("braid").unwrap_or(body).replace(':', " ");
    let mut toks = body.split_whitespace();
    let strands: usize =
        toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| Error::parse(1, "braid needs a strand count"))?;
    let mut letters = Vec::new();
    for t in toks {
        let v: i64 = t.parse().map_err(|_| Error::parse(1, format!("bad braid letter `{t}`")))?;
        if v == 0 {
            return Err(Error::parse(1, "braid letter 0"));
        }
        letters.push((v.unsigned_abs() as usize, v.signum() as i32));
    }
    BraidWord::new(strands, letters).map_err(|e| Error::parse(1, e.to_string()))
}

/// Closure of a braid drawn bottom to top, closing strands around the side.
///
/// Every strand must take part in some crossing (a free strand would give a
/// split diagram), except for the one-strand empty braid, which is the unknot.
pub fn braid_closure(b: &BraidWord) -> Result<Diagram> {
    if b.letters.is_empty() {
        if b.strands == 1 {
            return Ok(Diagram::unknot());
        }
        return Err(Error::Diagram("closure of an empty braid on several strands is split".into()));
    }
    let s = b.strands;
    let mut first_in: Vec<Option<End>> = vec![None; s];
    let mut last_out: Vec<Option<End>> = vec![None; s];
    let mut links: Vec<(End, End)> = Vec::new();
    let n = b.letters.len();
    for (c, &(g, e)) in b.letters.iter().enumerate() {
        let (l, r) = (g - 1, g);
        // positions of the bottom-left, bottom-right, top-left, top-right rays
        let (bl, br, tl, tr) = if e > 0 { (3, 0, 2, 1) } else { (0, 1, 3, 2) };
        for (strand, pos) in [(l, bl), (r, br)] {
            match last_out[strand] {
                Some(t) => links.push((t, (c, pos))),
                None => first_in[strand] = Some((c, pos)),
            }
        }
        last_out[l] = Some((c, tl));
        last_out[r] = Some((c, tr));
    }
    for strand in 0..s {
        match (last_out[strand], first_in[strand]) {
            (Some(t), Some(h)) => links.push((t, h)),
            _ => {
                return Err(Error::Diagram(format!(
                    "strand {} takes part in no crossing; closure would be split",
                    strand + 1
                )))
            }
        }
    }
    let mut ends = vec![[usize::MAX; 4]; n];
    for (e, &((tc, tp), (hc, hp))) in links.iter().enumerate() {
        ends[tc][tp] = e;
        ends[hc][hp] = e;
    }
    let crossings = b
        .letters
        .iter()
        .zip(ends)
        .map(|(&(_, e), ends)| Crossing { ends, over_in: if e > 0 { 3 } else { 1 } })
        .collect();
    Diagram::from_crossings(crossings)
}

/// `T(p, q)` for `p` in {2, 3}: the closure of `s1^q` or `(s1 s2)^q`.
pub fn torus_diagram(p: usize, q: i64) -> Result<Diagram> {
    if q == 0 {
        return Err(Error::InvalidArgument("torus diagram needs q != 0".into()));
    }
    let e = q.signum() as i32;
    let k = q.unsigned_abs() as usize;
    let letters = match p {
        2 => vec![(1, e); k],
        3 => [(1, e), (2, e)].repeat(k),
        _ => return Err(Error::InvalidArgument(format!("torus diagram needs p in {{2, 3}}, got {p}"))),
    };
    braid_closure(&BraidWord::new(p, letters)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_shapes() {
        let t23 = torus_diagram(2, 3).unwrap();
        assert_eq!((t23.crossing_count(), t23.arc_count(), t23.region_count()), (3, 3, 5));
        assert_eq!(t23.writhe(), 3);
        assert_eq!(torus_diagram(2, -3).unwrap().writhe(), -3);
        assert_eq!(torus_diagram(2, 4).unwrap().component_count(), 2);
        assert_eq!(torus_diagram(3, 6).unwrap().component_count(), 3);
        assert_eq!(torus_diagram(3, 4).unwrap().component_count(), 1);
        assert!(torus_diagram(4, 3).is_err());
    }

    #[test]
    fn single_crossing_closure() {
        let d = braid_closure(&BraidWord::new(2, vec![(1, 1)]).unwrap()).unwrap();
        assert_eq!((d.component_count(), d.region_count()), (1, 3));
    }

    #[test]
    fn parse_forms() {
        let a = parse_braid("braid 3 1 -2 1").unwrap();
        assert_eq!(a.letters, vec![(1, 1), (2, -1), (1, 1)]);
        assert_eq!(parse_braid("2: 1 1 1").unwrap(), BraidWord::new(2, vec![(1, 1); 3]).unwrap());
        assert!(parse_braid("braid 2 2").is_err());
        assert_eq!(a.to_string(), "braid 3 1 -2 1");
    }

    #[test]
    fn split_closure_rejected() {
        assert!(braid_closure(&BraidWord::new(3, vec![(1, 1)]).unwrap()).is_err());
    }
}
