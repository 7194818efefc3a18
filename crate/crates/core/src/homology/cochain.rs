//! Cochains with values in `Z_d`, written additively.
//!
//! File format: a header `cochain <degree> <modulus>` followed by lines
//! `<x1> ... <xn> <value>`; tuples not listed are zero and `#` starts a comment.

use std::fmt;

use super::chain::{boundary_terms, index_tuple, is_degenerate, tuple_count, tuple_index, Theory};
use crate::algebra::{Element, RackTable};
use crate::error::{Error, Result};

/// A map from `n`-tuples of elements of a rack of order `order` to `Z_modulus`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    order: usize,
    degree: usize,
    modulus: u64,
    values: Vec<u64>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain(deg {}, mod {}, support ", self.degree, self.modulus)?;
        f.debug_list().entries(self.support()).finish()?;
        write!(f, ")")
    }
}

/// Why a cochain failed the cocycle test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleFailure {
    /// Quandle theory: nonzero value on a degenerate tuple.
    DegenerateValue { tuple: Vec<Element>, value: u64 },
    /// `phi(d(tuple))` is nonzero.
    Coboundary { tuple: Vec<Element>, value: u64 },
}

impl fmt::Display for CocycleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleFailure::DegenerateValue { tuple, value } => {
                write!(f, "value {value} on degenerate tuple {tuple:?}")
            }
            CocycleFailure::Coboundary { tuple, value } => {
                write!(f, "coboundary is {value} at {tuple:?}")
            }
        }
    }
}

impl Cochain {
    pub fn zero(order: usize, degree: usize, modulus: u64) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        Cochain { order, degree, modulus, values: vec![0; tuple_count(order, degree)] }
    }

    /// Sum of characteristic functions `chi_t` over the given tuples (with repetition).
    pub fn from_characteristic(order: usize, degree: usize, modulus: u64, tuples: &[&[Element]]) -> Self {
        let mut c = Cochain::zero(order, degree, modulus);
        for t in tuples {
            let v = c.get(t);
            c.set(t, v + 1);
        }
        c
    }

    pub fn from_values(order: usize, degree: usize, modulus: u64, values: Vec<u64>) -> Self {
        assert_eq!(values.len(), tuple_count(order, degree), "cochain length");
        let values = values.into_iter().map(|v| v % modulus).collect();
        Cochain { order, degree, modulus, values }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, tuple: &[Element]) -> u64 {
        self.values[tuple_index(self.order, tuple)]
    }

    #[inline]
    pub fn get_index(&self, idx: usize) -> u64 {
        self.values[idx]
    }

    pub fn set(&mut self, tuple: &[Element], value: u64) {
        let i = tuple_index(self.order, tuple);
        self.values[i] = value % self.modulus;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn support(&self) -> impl Iterator<Item = (Vec<Element>, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (index_tuple(self.order, self.degree, i), v))
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(
            (self.order, self.degree, self.modulus),
            (other.order, other.degree, other.modulus),
            "incompatible cochains"
        );
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % self.modulus).collect();
        Cochain { values, ..self.clone() }
    }

    pub fn scale(&self, k: u64) -> Cochain {
        let m = self.modulus;
        Cochain { values: self.values.iter().map(|v| v * (k % m) % m).collect(), ..self.clone() }
    }

    pub fn vanishes_on_degenerate(&self) -> bool {
        self.support().all(|(t, _)| !is_degenerate(&t))
    }

    /// `phi(c)` for a chain given as `(tuple index, coefficient)` terms.
    pub fn evaluate_chain(&self, terms: &[(usize, i128)]) -> u64 {
        let m = self.modulus as i128;
        let s: i128 = terms.iter().map(|&(i, c)| c * self.values[i] as i128).sum();
        s.rem_euclid(m) as u64
    }

    fn check_rack(&self, x: &RackTable) -> Result<()> {
        x.require_rack()?;
        if x.size() != self.order {
            return Err(Error::InvalidArgument(format!(
                "cochain is over {} elements but the rack has {}",
                self.order,
                x.size()
            )));
        }
        Ok(())
    }
}

/// Tests `phi o d_{n+1} = 0`; in the quandle theory also requires `phi` to
/// vanish on degenerate tuples. Reports the first failure in lexicographic order.
pub fn cocycle_failure(x: &RackTable, phi: &Cochain, theory: Theory) -> Result<Option<CocycleFailure>> {
    phi.check_rack(x)?;
    match theory {
        Theory::Rack => {}
        Theory::Quandle => {
            x.require_quandle()?;
            if let Some((tuple, value)) = phi.support().find(|(t, _)| is_degenerate(t)) {
                return Ok(Some(CocycleFailure::DegenerateValue { tuple, value }));
            }
        }
        Theory::Degenerate => {
            return Err(Error::InvalidArgument("cocycle tests are defined for the rack and quandle theories".into()))
        }
    }
    let n = phi.degree + 1;
    for idx in 0..tuple_count(x.size(), n) {
        let tuple = index_tuple(x.size(), n, idx);
        if theory == Theory::Quandle && is_degenerate(&tuple) {
            continue;
        }
        let value = phi.evaluate_chain(&boundary_terms(x, &tuple));
        if value != 0 {
            return Ok(Some(CocycleFailure::Coboundary { tuple, value }));
        }
    }
    Ok(None)
}

pub fn is_cocycle(x: &RackTable, phi: &Cochain, theory: Theory) -> Result<bool> {
    Ok(cocycle_failure(x, phi, theory)?.is_none())
}

/// `(delta mu)(sigma) = mu(d sigma)` on all `(n+1)`-tuples; in the quandle
/// theory values on degenerate tuples are set to zero.
pub fn coboundary(x: &RackTable, mu: &Cochain, theory: Theory) -> Result<Cochain> {
    mu.check_rack(x)?;
    if theory == Theory::Quandle {
        x.require_quandle()?;
    }
    let n = mu.degree + 1;
    let mut out = Cochain::zero(x.size(), n, mu.modulus);
    for idx in 0..tuple_count(x.size(), n) {
        let tuple = index_tuple(x.size(), n, idx);
        if theory == Theory::Quandle && is_degenerate(&tuple) {
            continue;
        }
        out.values[idx] = mu.evaluate_chain(&boundary_terms(x, &tuple));
    }
    Ok(out)
}

pub fn parse_cochain(text: &str) -> Result<Cochain> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, crate::algebra::io::strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(0, "empty cochain file"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let (degree, modulus) = match h.as_slice() {
        ["cochain", n, d] => (
            n.parse::<usize>().map_err(|_| Error::parse(hl, "bad degree"))?,
            d.parse::<u64>().ok().filter(|&d| d >= 1).ok_or_else(|| Error::parse(hl, "bad modulus"))?,
        ),
        _ => return Err(Error::parse(hl, "expected header `cochain <degree> <modulus>`")),
    };
    let mut entries: Vec<(usize, Vec<usize>, i64)> = Vec::new();
    for (lno, line) in lines {
        let nums: Vec<i64> = line
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|_| Error::parse(lno, format!("bad number `{w}`"))))
            .collect::<Result<_>>()?;
        if nums.len() != degree + 1 {
            return Err(Error::parse(lno, format!("expected {} numbers, found {}", degree + 1, nums.len())));
        }
        if nums[..degree].iter().any(|&x| x < 0) {
            return Err(Error::parse(lno, "negative element index"));
        }
        entries.push((lno, nums[..degree].iter().map(|&x| x as usize).collect(), nums[degree]));
    }
    let order = entries.iter().flat_map(|(_, t, _)| t.iter()).max().map_or(1, |&m| m + 1);
    let mut c = Cochain::zero(order, degree, modulus);
    for (_, t, v) in &entries {
        let cur = c.get(t) as i64;
        c.set(t, (cur + v).rem_euclid(modulus as i64) as u64);
    }
    Ok(c)
}

/// Parses a cochain for a rack of known order (the file alone only bounds it from below).
pub fn parse_cochain_for(text: &str, order: usize) -> Result<Cochain> {
    let c = parse_cochain(text)?;
    if c.order > order {
        return Err(Error::InvalidArgument(format!(
            "cochain mentions element {} but the rack has order {order}",
            c.order - 1
        )));
    }
    let mut out = Cochain::zero(order, c.degree, c.modulus);
    for (t, v) in c.support() {
        out.set(&t, v);
    }
    Ok(out)
}

pub fn format_cochain(c: &Cochain) -> String {
    let mut s = format!("cochain {} {}\n", c.degree, c.modulus);
    for (t, v) in c.support() {
        for x in t {
            s.push_str(&x.to_string());
            s.push(' ');
        }
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}
