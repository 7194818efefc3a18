//! Chain groups `C_n^R`, `C_n^D`, `C_n^Q` of a finite rack and their boundary maps.
//!
//! An `n`-tuple `(x_1, ..., x_n)` is indexed by its base-`|X|` value with
//! `x_1` most significant, so index order is lexicographic order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::snf::IntMatrix;
use crate::algebra::{Element, RackTable};
use crate::error::{Error, Result};

/// Default cap on the number of basis elements a single computation may touch.
pub const DEFAULT_BASIS_BUDGET: usize = 20_000;

/// Environment variable overriding [`DEFAULT_BASIS_BUDGET`].
pub const BUDGET_ENV: &str = "QUANDLE_BASIS_BUDGET";

pub fn basis_budget() -> usize {
    std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_BASIS_BUDGET)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Rack chains: all tuples.
    Rack,
    /// Degenerate chains: tuples with some `x_i = x_{i+1}`.
    Degenerate,
    /// Quandle chains: the quotient `C^R / C^D`, on the non-degenerate tuples.
    Quandle,
}

impl Theory {
    pub fn letter(self) -> &'static str {
        match self {
            Theory::Rack => "R",
            Theory::Degenerate => "D",
            Theory::Quandle => "Q",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for Theory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "rack" => Ok(Theory::Rack),
            "D" | "d" | "degenerate" => Ok(Theory::Degenerate),
            "Q" | "q" | "quandle" => Ok(Theory::Quandle),
            _ => Err(Error::parse(0, format!("unknown theory `{s}` (expected R, D or Q)"))),
        }
    }
}

pub fn tuple_count(order: usize, n: usize) -> usize {
    order.pow(n as u32)
}

pub fn tuple_index(order: usize, tuple: &[Element]) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * order + x)
}

pub fn index_tuple(order: usize, n: usize, mut idx: usize) -> Vec<Element> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = idx % order;
        idx /= order;
    }
    t
}

pub fn is_degenerate(tuple: &[Element]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

/// Boundary of a single generator as `(tuple index, coefficient)` terms, not collected.
///
/// `d(x_1..x_n) = sum_i (-1)^i [ (x_1..^x_i..x_n) - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n) ]`
/// for `n >= 2`, and zero for `n <= 1`.
pub fn boundary_terms(x: &RackTable, tuple: &[Element]) -> Vec<(usize, i128)> {
    let n = tuple.len();
    let q = x.size();
    let mut out = Vec::with_capacity(2 * n);
    if n <= 1 {
        return out;
    }
    let mut buf = Vec::with_capacity(n - 1);
    for i in 0..n {
        let sign: i128 = if (i + 1) % 2 == 0 { 1 } else { -1 };
        let xi = tuple[i];
        buf.clear();
        buf.extend(tuple[..i].iter().copied());
        buf.extend(tuple[i + 1..].iter().copied());
        let plain = tuple_index(q, &buf);
        for (slot, &y) in buf.iter_mut().zip(&tuple[..i]) {
            *slot = x.op(y, xi);
        }
        let acted = tuple_index(q, &buf);
        if plain != acted {
            out.push((plain, sign));
            out.push((acted, -sign));
        }
    }
    out
}

/// Basis of `C_n^W` in lexicographic order.
#[derive(Debug, Clone)]
pub struct ChainBasis {
    pub degree: usize,
    pub theory: Theory,
    pub order: usize,
    /// Indices (in the full tuple numbering) of the basis tuples.
    pub tuples: Vec<usize>,
    position: Vec<usize>,
}

impl ChainBasis {
    pub fn new(x: &RackTable, degree: usize, theory: Theory) -> Result<Self> {
        let order = x.size();
        if theory != Theory::Rack {
            x.require_quandle()?;
        }
        let total = if degree == 0 { 0 } else { tuple_count(order, degree) };
        let budget = basis_budget();
        if total > budget {
            return Err(Error::Budget { needed: total, budget });
        }
        let mut tuples = Vec::new();
        let mut position = vec![usize::MAX; total];
        for idx in 0..total {
            let keep = match theory {
                Theory::Rack => true,
                Theory::Degenerate => degree >= 2 && is_degenerate(&index_tuple(order, degree, idx)),
                Theory::Quandle => !is_degenerate(&index_tuple(order, degree, idx)),
            };
            if keep {
                position[idx] = tuples.len();
                tuples.push(idx);
            }
        }
        Ok(ChainBasis { degree, theory, order, tuples, position })
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Position of a full tuple index in this basis, if it belongs to it.
    pub fn position(&self, idx: usize) -> Option<usize> {
        self.position.get(idx).copied().filter(|&p| p != usize::MAX)
    }

    pub fn tuple(&self, pos: usize) -> Vec<Element> {
        index_tuple(self.order, self.degree, self.tuples[pos])
    }
}

/// Matrix of `d_n : C_n^W -> C_{n-1}^W`, rows indexed by the degree `n-1`
/// basis and columns by the degree `n` basis.
///
/// For the quandle theory, terms on degenerate tuples are projected out. For
/// the degenerate theory, a term landing outside the subcomplex is an error
/// (it cannot happen for a quandle).
pub fn boundary_matrix(x: &RackTable, n: usize, theory: Theory) -> Result<IntMatrix> {
    let (_, _, m) = boundary_with_bases(x, n, theory)?;
    Ok(m)
}

pub(crate) fn boundary_with_bases(
    x: &RackTable,
    n: usize,
    theory: Theory,
) -> Result<(ChainBasis, ChainBasis, IntMatrix)> {
    x.require_rack()?;
    let src = ChainBasis::new(x, n, theory)?;
    let dst = ChainBasis::new(x, n.saturating_sub(1), theory)?;
    let budget = basis_budget();
    if src.len() + dst.len() > budget {
        return Err(Error::Budget { needed: src.len() + dst.len(), budget });
    }
    let mut m = IntMatrix::zeros(dst.len(), src.len());
    if n >= 2 {
        for (col, _) in src.tuples.iter().enumerate() {
            let tuple = src.tuple(col);
            let mut outside: BTreeMap<usize, i128> = BTreeMap::new();
            for (idx, coeff) in boundary_terms(x, &tuple) {
                match dst.position(idx) {
                    Some(row) => m[(row, col)] += coeff,
                    None => *outside.entry(idx).or_default() += coeff,
                }
            }
            // single terms may leave the subcomplex as long as they cancel
            if theory == Theory::Degenerate && outside.values().any(|&c| c != 0) {
                return Err(Error::Structure(format!(
                    "boundary of degenerate tuple {tuple:?} leaves the degenerate subcomplex"
                )));
            }
        }
    }
    Ok((src, dst, m))
}
