use super::rack::RackTable;
use crate::error::{Error, Result};

/// A finite group given by its multiplication table, `mul[a][b] = ab`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has {} entries", r.len())));
            }
            if let Some(&x) = r.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {x} out of range in row {i}")));
            }
        }
        let mul = rows.concat();
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::InvalidGroup(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, mul, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inverse(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }
}

/// The `exponent`-fold conjugation quandle, `a*b = b^{-e} a b^{e}`.
pub fn make_conjugation(group: &FiniteGroup, exponent: i64) -> Result<RackTable> {
    let powers: Vec<usize> = (0..group.order()).map(|b| group.pow(b, exponent)).collect();
    Ok(RackTable::from_fn(group.order(), |a, b| {
        let be = powers[b];
        group.mul(group.mul(group.inverse(be), a), be)
    })?
    .with_name(format!("conj^{exponent}")))
}

/// Multiplication table of the symmetric group on `k` letters, permutations in
/// lexicographic order, composition `(pq)(i) = q(p(i))` (apply `p` first).
pub fn symmetric_group(k: usize) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&p.iter().map(|&i| q[i]).collect::<Vec<_>>())).collect())
        .collect();
    FiniteGroup::from_table(&rows).expect("symmetric group table is a group")
}

/// Multiplication table of `Z_n`.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(&rows).expect("cyclic group table is a group")
}
