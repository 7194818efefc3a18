//! Linear algebra over the prime field `Z_p`.

use super::snf::IntMatrix;

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn inv(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A matrix over `Z_p` in reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub p: u64,
    pub cols: usize,
    /// Nonzero rows of the reduced form.
    pub rows: Vec<Vec<u64>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of `{v : M v = 0}` for the reduced matrix `M`.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = (p - row[f]) % p;
                }
                v
            })
            .collect()
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|x| x % p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let k = v[pc];
            if k != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + p - k * r % p) % p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

/// Row-reduces a matrix given by rows over `Z_p`.
pub fn echelon(rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Echelon {
    let mut m: Vec<Vec<u64>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % p).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let s = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - k * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon { p, cols, rows: m, pivots }
}

/// Echelon form of an integer matrix reduced mod `p`.
pub fn echelon_of(a: &IntMatrix, p: u64) -> Echelon {
    let rows = (0..a.rows()).map(|r| a.row(r).iter().map(|&x| x.rem_euclid(p as i128) as u64).collect()).collect();
    echelon(rows, a.cols(), p)
}

pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    echelon_of(a, p).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(9));
    }

    #[test]
    fn rank_and_kernel() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 0], vec![2, 4, 0], vec![0, 0, 3]]);
        assert_eq!(rank_mod_p(&a, 5), 2);
        assert_eq!(rank_mod_p(&a, 3), 1);
        let e = echelon_of(&a, 5);
        for v in e.kernel_basis() {
            for r in 0..3 {
                let s: i128 = a.row(r).iter().zip(&v).map(|(&x, &y)| x * y as i128).sum();
                assert_eq!(s.rem_euclid(5), 0);
            }
        }
        assert!(e.contains(&[3, 1, 0]));
        assert!(!e.contains(&[0, 1, 0]));
    }
}
