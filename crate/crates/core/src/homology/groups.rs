use std::collections::BTreeMap;
use std::fmt;

use super::chain::{boundary_with_bases, Theory};
use super::cochain::Cochain;
use super::modp::{echelon_of, is_prime};
use super::snf::{smith, smith_with_cols, IntMatrix};
use crate::algebra::RackTable;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^rank + Z_{d_1} + ... + Z_{d_k}` with
/// `1 < d_1 | d_2 | ... | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    /// Normalizes arbitrary cyclic orders into invariant-factor form.
    pub fn new(rank: usize, cyclic: impl IntoIterator<Item = u64>) -> Self {
        let mut g = HomologyGroup { rank, torsion: Vec::new() };
        let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for c in cyclic {
            assert!(c != 0, "use the rank for free summands");
            for (p, e) in factorize(c) {
                primary.entry(p).or_default().push(e);
            }
        }
        let len = primary.values().map(|v| v.len()).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for (p, mut exps) in primary {
            exps.sort_unstable_by(|a, b| b.cmp(a));
            // largest powers go to the last invariant factors
            for (i, e) in exps.into_iter().enumerate() {
                factors[len - 1 - i] *= p.pow(e);
            }
        }
        g.torsion = factors;
        g
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Prime-power cyclic summands, sorted.
    pub fn elementary_divisors(&self) -> Vec<u64> {
        let mut out: Vec<u64> =
            self.torsion.iter().flat_map(|&d| factorize(d).into_iter().map(|(p, e)| p.pow(e))).collect();
        out.sort_unstable();
        out
    }

    pub fn direct_sum(&self, other: &HomologyGroup) -> HomologyGroup {
        HomologyGroup::new(self.rank + other.rank, self.torsion.iter().chain(&other.torsion).copied())
    }

    /// Number of invariant factors divisible by `p`.
    pub fn p_torsion_count(&self, p: u64) -> usize {
        self.torsion.iter().filter(|&&d| d % p == 0).count()
    }

    /// `H (x) Z_d` and `Tor(H, Z_d)` orders combined as in the universal
    /// coefficient theorem: `H_n(C; Z_d) = H_n (x) Z_d + Tor(H_{n-1}, Z_d)`.
    pub fn with_coefficients(hn: &HomologyGroup, hn_minus_1: &HomologyGroup, d: u64) -> HomologyGroup {
        let gcd = |a: u64, b: u64| {
            let (mut a, mut b) = (a, b);
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        let cyclic = std::iter::repeat_n(d, hn.rank)
            .chain(hn.torsion.iter().map(|&t| gcd(t, d)))
            .chain(hn_minus_1.torsion.iter().map(|&t| gcd(t, d)))
            .filter(|&c| c > 1);
        HomologyGroup::new(0, cyclic)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let k = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if k == 1 { format!("Z_{d}") } else { format!("(Z_{d})^{k}") });
            i += k;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn to_u64(v: i128) -> u64 {
    u64::try_from(v).expect("invariant factor exceeds u64")
}

/// Integral homology `H_n^W(X)`.
pub fn homology(x: &RackTable, n: usize, theory: Theory) -> Result<HomologyGroup> {
    let (src, _, dn) = boundary_with_bases(x, n, theory)?;
    let (_, _, dn1) = boundary_with_bases(x, n + 1, theory)?;
    let rank_n = smith(&dn).rank();
    let s = smith(&dn1);
    let free = src.len() - rank_n - s.rank();
    Ok(HomologyGroup::new(free, s.factors.iter().filter(|&&f| f > 1).map(|&f| to_u64(f))))
}

/// `H_n^W(X; Z_d)` from the universal coefficient theorem.
pub fn homology_with_coefficients(x: &RackTable, n: usize, theory: Theory, d: u64) -> Result<HomologyGroup> {
    if d < 2 {
        return Err(Error::InvalidArgument("coefficient modulus must be at least 2".into()));
    }
    let hn = homology(x, n, theory)?;
    let hm = if n == 0 { HomologyGroup::default() } else { homology(x, n - 1, theory)? };
    Ok(HomologyGroup::with_coefficients(&hn, &hm, d))
}

/// `dim_{Z_p} H_n(C^W (x) Z_p)` computed directly from ranks mod `p`.
pub fn homology_dim_mod_p(x: &RackTable, n: usize, theory: Theory, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let (src, _, dn) = boundary_with_bases(x, n, theory)?;
    let (_, _, dn1) = boundary_with_bases(x, n + 1, theory)?;
    Ok(src.len() - echelon_of(&dn, p).rank() - echelon_of(&dn1, p).rank())
}

/// Cocycles, coboundaries and cohomology of `Hom(C^W_*(X), Z_d)` in degree `n`.
#[derive(Debug, Clone)]
pub struct Cohomology {
    pub degree: usize,
    pub theory: Theory,
    pub modulus: u64,
    /// `Z^n` as a finite abelian group (cyclic orders in invariant-factor form).
    pub cocycles: HomologyGroup,
    pub coboundaries: HomologyGroup,
    pub cohomology: HomologyGroup,
    /// Bases as cochains on all tuples; present for prime moduli only.
    pub cocycle_basis: Option<Vec<Cochain>>,
    pub coboundary_basis: Option<Vec<Cochain>>,
}

impl Cohomology {
    /// Dimension over `Z_p` of the cocycle space (prime modulus).
    pub fn cocycle_dim(&self) -> Option<usize> {
        self.cocycle_basis.as_ref().map(|b| b.len())
    }

    pub fn coboundary_dim(&self) -> Option<usize> {
        self.coboundary_basis.as_ref().map(|b| b.len())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn cohomology(x: &RackTable, n: usize, theory: Theory, d: u64) -> Result<Cohomology> {
    if d < 2 {
        return Err(Error::InvalidArgument("coefficient modulus must be at least 2".into()));
    }
    let (src_n, _, dn) = boundary_with_bases(x, n, theory)?;
    let (_, _, dn1) = boundary_with_bases(x, n + 1, theory)?;

    // phi in Z^n  <=>  phi * d_{n+1} = 0 (phi a row vector over C_n)
    let s1 = smith(&dn1);
    let cocycles = HomologyGroup::new(
        0,
        std::iter::repeat_n(d, src_n.len() - s1.rank())
            .chain(s1.factors.iter().map(|&f| gcd(to_u64(f) % d, d)))
            .filter(|&c| c > 1),
    );
    // B^n = image of mu -> mu * d_n
    let s0 = smith(&dn);
    let coboundaries = HomologyGroup::new(0, s0.factors.iter().map(|&f| d / gcd(d, to_u64(f))).filter(|&c| c > 1));

    let hn = homology(x, n, theory)?;
    let hm = if n <= 1 { HomologyGroup::default() } else { homology(x, n - 1, theory)? };
    // Hom(H_n, Z_d) + Ext(H_{n-1}, Z_d)
    let cohomology = HomologyGroup::new(
        0,
        std::iter::repeat_n(d, hn.rank)
            .chain(hn.torsion.iter().map(|&t| gcd(t, d)))
            .chain(hm.torsion.iter().map(|&t| gcd(t, d)))
            .filter(|&c| c > 1),
    );

    let (cocycle_basis, coboundary_basis) = if is_prime(d) {
        let embed = |basis: &super::chain::ChainBasis, v: &[u64]| {
            let mut c = Cochain::zero(x.size(), basis.degree, d);
            for (pos, &val) in v.iter().enumerate() {
                if val != 0 {
                    c.set(&basis.tuple(pos), val);
                }
            }
            c
        };
        let z: Vec<Cochain> = echelon_of(&dn1.transpose(), d).kernel_basis().iter().map(|v| embed(&src_n, v)).collect();
        let b: Vec<Cochain> = echelon_of(&dn, d).rows.iter().map(|v| embed(&src_n, v)).collect();
        (Some(z), Some(b))
    } else {
        (None, None)
    };

    Ok(Cohomology {
        degree: n,
        theory,
        modulus: d,
        cocycles,
        coboundaries,
        cohomology,
        cocycle_basis,
        coboundary_basis,
    })
}

/// Whether `phi = mu o d_n` for some `(n-1)`-cochain `mu` with values in `Z_d`.
///
/// Solved with the Smith form `P D Q = S` of the boundary matrix: the
/// equation `mu D = phi` has a solution iff `(phi Q)_i` is divisible by
/// `gcd(s_i, d)` for `i < rank` and vanishes mod `d` beyond the rank.
pub fn is_coboundary(x: &RackTable, phi: &Cochain, theory: Theory) -> Result<bool> {
    let n = phi.degree();
    let d = phi.modulus();
    let (src, _, dn) = boundary_with_bases(x, n, theory)?;
    if theory == Theory::Quandle && !phi.vanishes_on_degenerate() {
        return Ok(false);
    }
    let row: Vec<i128> = src.tuples.iter().map(|&idx| phi.get_index(idx) as i128).collect();
    let s = smith_with_cols(&dn, d as i128);
    let q = s.col_transform.expect("requested transform");
    let phi_q = IntMatrix::from_rows(&[row]).mul(&q);
    for c in 0..src.len() {
        let v = phi_q[(0, c)].rem_euclid(d as i128) as u64;
        let ok = match s.factors.get(c) {
            Some(&f) => v.is_multiple_of(gcd(to_u64(f), d)),
            None => v == 0,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One line of a [`StructureReport`].
#[derive(Debug, Clone)]
pub struct StructureCheck {
    pub label: String,
    pub expected: HomologyGroup,
    pub actual: HomologyGroup,
}

impl StructureCheck {
    pub fn holds(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone)]
pub struct StructureReport {
    pub orbits: usize,
    /// `(n, H_n^R, H_n^D, H_n^Q)` for `n = 1..=n_max`.
    pub groups: Vec<(usize, HomologyGroup, HomologyGroup, HomologyGroup)>,
    pub checks: Vec<StructureCheck>,
}

impl StructureReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds())
    }
}

/// Homology in the three theories for `n <= n_max` together with the orbit
/// formulas and the splitting `H_n^R = H_n^D + H_n^Q`.
pub fn structure_report(x: &RackTable, n_max: usize) -> Result<StructureReport> {
    x.require_quandle()?;
    let o = x.orbits().len();
    let mut groups = Vec::new();
    for n in 1..=n_max {
        groups.push((
            n,
            homology(x, n, Theory::Rack)?,
            homology(x, n, Theory::Degenerate)?,
            homology(x, n, Theory::Quandle)?,
        ));
    }
    let get = |n: usize| &groups[n - 1];
    let mut checks = Vec::new();
    let mut push = |label: String, expected: HomologyGroup, actual: HomologyGroup| {
        checks.push(StructureCheck { label, expected, actual });
    };
    for (n, r, dg, q) in &groups {
        push(format!("H{n}R = H{n}D + H{n}Q"), dg.direct_sum(q), r.clone());
    }
    if n_max >= 1 {
        let (_, r1, d1, q1) = get(1);
        push("H1D = 0".into(), HomologyGroup::default(), d1.clone());
        push("H1R = Z^o".into(), HomologyGroup::free(o), r1.clone());
        push("H1Q = Z^o".into(), HomologyGroup::free(o), q1.clone());
    }
    if n_max >= 2 {
        let (_, r2, d2, q2) = get(2);
        push("H2D = Z^o".into(), HomologyGroup::free(o), d2.clone());
        push("H2R = H2Q + Z^o".into(), q2.direct_sum(&HomologyGroup::free(o)), r2.clone());
    }
    if n_max >= 3 {
        let (_, r3, _, q3) = get(3);
        let q2 = &get(2).3;
        push("H3R = H3Q + H2Q + Z^(o^2)".into(), q3.direct_sum(q2).direct_sum(&HomologyGroup::free(o * o)), r3.clone());
    }
    Ok(StructureReport { orbits: o, groups, checks })
}
