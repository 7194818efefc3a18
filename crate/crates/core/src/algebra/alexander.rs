//! Alexander quandles `Z_m[T]/(f)` with `a*b = Ta + (1-T)b`.

use super::rack::RackTable;
use crate::error::{Error, Result};

/// Arithmetic in `Z_m[T]/(f)`; elements are coefficient vectors, constant term first.
#[derive(Debug, Clone)]
struct QuotientRing {
    modulus: u64,
    // monic reduction polynomial without its leading term, scaled so f is monic
    reducer: Vec<u64>,
    degree: usize,
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m as i128) as u64)
}

impl QuotientRing {
    fn new(modulus: u64, quotient: &[i64]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidArgument("Alexander modulus must be at least 2".into()));
        }
        let mut f: Vec<u64> = quotient.iter().map(|&c| c.rem_euclid(modulus as i64) as u64).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::InvalidArgument("quotient polynomial must have positive degree mod the modulus".into()));
        }
        let lead = *f.last().unwrap();
        let lead_inv = inv_mod(lead, modulus)
            .ok_or_else(|| Error::InvalidArgument("leading coefficient of the quotient must be a unit".into()))?;
        let degree = f.len() - 1;
        let reducer = f[..degree].iter().map(|&c| c * lead_inv % modulus).collect();
        Ok(QuotientRing { modulus, reducer, degree })
    }

    fn order(&self) -> usize {
        (self.modulus as usize).pow(self.degree as u32)
    }

    fn reduce(&self, poly: &[i64]) -> Vec<u64> {
        let m = self.modulus;
        let mut p: Vec<u64> = poly.iter().map(|&c| c.rem_euclid(m as i64) as u64).collect();
        // T^d = -(reducer) in the quotient
        for top in (self.degree..p.len()).rev() {
            let c = p[top];
            if c == 0 {
                continue;
            }
            p[top] = 0;
            for (i, &r) in self.reducer.iter().enumerate() {
                let k = top - self.degree + i;
                p[k] = (p[k] + m - (c * r) % m) % m;
            }
        }
        p.resize(self.degree, 0);
        p
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        let mut prod = vec![0i64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x * y % m) % m) as i64;
            }
        }
        self.reduce(&prod)
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.modulus).collect()
    }

    /// Lexicographic index of a coefficient vector (constant term most significant).
    fn index(&self, v: &[u64]) -> usize {
        v.iter().fold(0usize, |acc, &c| acc * self.modulus as usize + c as usize)
    }

    fn element(&self, mut idx: usize) -> Vec<u64> {
        let m = self.modulus as usize;
        let mut v = vec![0u64; self.degree];
        for slot in v.iter_mut().rev() {
            *slot = (idx % m) as u64;
            idx /= m;
        }
        v
    }
}

/// The Alexander quandle on `Z_modulus[T]/(quotient_poly)` with `T` acting as `t_poly`.
///
/// Polynomials are coefficient lists with the constant term first. Elements
/// are numbered by lexicographic order of their coefficient vectors
/// `(c_0, c_1, ..., c_{d-1})`.
pub fn make_alexander(modulus: u64, quotient_poly: &[i64], t_poly: &[i64]) -> Result<RackTable> {
    let ring = QuotientRing::new(modulus, quotient_poly)?;
    let t = ring.reduce(t_poly);
    let mut one_minus_t: Vec<i64> = t.iter().map(|&c| -(c as i64)).collect();
    one_minus_t[0] += 1;
    let one_minus_t = ring.reduce(&one_minus_t);

    let n = ring.order();
    let elems: Vec<Vec<u64>> = (0..n).map(|i| ring.element(i)).collect();
    let t_times: Vec<Vec<u64>> = elems.iter().map(|a| ring.mul(&t, a)).collect();

    let mut hit = vec![false; n];
    for v in &t_times {
        let i = ring.index(v);
        if hit[i] {
            return Err(Error::NotUnit);
        }
        hit[i] = true;
    }

    let s_times: Vec<Vec<u64>> = elems.iter().map(|b| ring.mul(&one_minus_t, b)).collect();
    let fmt_poly = |p: &[i64]| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
    let name = format!("alexander:{modulus}:{}:{}", fmt_poly(quotient_poly), fmt_poly(t_poly));
    Ok(RackTable::from_fn(n, |a, b| ring.index(&ring.add(&t_times[a], &s_times[b])))?.with_name(name))
}
