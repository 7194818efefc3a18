//! Dense integer matrices and Smith normal form.

use std::fmt;

/// Row-major dense integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, r: usize) -> &[i128] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    // row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i128, from_col: usize) {
        for c in from_col..self.cols {
            let v = self.data[src * self.cols + c];
            if v != 0 {
                self.data[dst * self.cols + c] += k * v;
            }
        }
    }

    // col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i128, from_row: usize) {
        for r in from_row..self.rows {
            let v = self.data[r * self.cols + src];
            if v != 0 {
                self.data[r * self.cols + dst] += k * v;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (r, c): (usize, usize)) -> &i128 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i128 {
        &mut self.data[r * self.cols + c]
    }
}

/// Result of a Smith normal form reduction `P A Q = diag(s_1, ..., s_r, 0, ...)`.
#[derive(Debug, Clone)]
pub struct Smith {
    /// Nonzero invariant factors, positive, with `s_i | s_{i+1}`.
    pub factors: Vec<i128>,
    /// Column transform `Q` when requested, reduced modulo `col_modulus` if set.
    pub col_transform: Option<IntMatrix>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smith normal form of `a` (invariant factors only).
pub fn smith(a: &IntMatrix) -> Smith {
    smith_impl(a.clone(), None)
}

/// Smith normal form tracking the column transform `Q` modulo `modulus`
/// (pass 0 to keep exact integers).
pub fn smith_with_cols(a: &IntMatrix, modulus: i128) -> Smith {
    smith_impl(a.clone(), Some(modulus))
}

fn smith_impl(mut a: IntMatrix, track: Option<i128>) -> Smith {
    let (rows, cols) = (a.rows, a.cols);
    let mut q = track.map(|_| IntMatrix::identity(cols));
    let reduce_q = |q: &mut IntMatrix, col: usize| {
        if let Some(m) = track.filter(|&m| m > 0) {
            for r in 0..q.rows {
                let v = &mut q.data[r * q.cols + col];
                *v = v.rem_euclid(m);
            }
        }
    };
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // global minimal nonzero pivot in the trailing block
        let mut best: Option<(i128, usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                let v = a[(r, c)].abs();
                if v != 0 && best.is_none_or(|(b, _, _)| v < b) {
                    best = Some((v, r, c));
                    if v == 1 {
                        break;
                    }
                }
            }
            if best.is_some_and(|(b, _, _)| b == 1) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);
        if let Some(q) = q.as_mut() {
            q.swap_cols(t, pc);
        }

        loop {
            let p = a[(t, t)];
            let mut clean = true;
            for r in t + 1..rows {
                let v = a[(r, t)];
                if v != 0 {
                    a.add_row(r, t, -(v.div_euclid(p)), t);
                    if a[(r, t)] != 0 {
                        clean = false;
                    }
                }
            }
            for c in t + 1..cols {
                let v = a[(t, c)];
                if v != 0 {
                    let k = -(v.div_euclid(p));
                    a.add_col(c, t, k, t);
                    if let Some(q) = q.as_mut() {
                        q.add_col(c, t, k, 0);
                        reduce_q(q, c);
                    }
                    if a[(t, c)] != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                // divisibility: every remaining entry must be a multiple of the pivot
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| a[(r, c)] % p != 0));
                match bad {
                    None => break,
                    Some(r) => {
                        a.add_row(t, r, 1, t);
                        continue;
                    }
                }
            }
            // move the smallest remainder in row/column t to the pivot
            let mut best = (a[(t, t)].abs(), t, t);
            for r in t + 1..rows {
                let v = a[(r, t)].abs();
                if v != 0 && v < best.0 {
                    best = (v, r, t);
                }
            }
            for c in t + 1..cols {
                let v = a[(t, c)].abs();
                if v != 0 && v < best.0 {
                    best = (v, t, c);
                }
            }
            a.swap_rows(t, best.1);
            a.swap_cols(t, best.2);
            if let Some(q) = q.as_mut() {
                q.swap_cols(t, best.2);
            }
        }
        if a[(t, t)] < 0 {
            for c in t..cols {
                a[(t, c)] = -a[(t, c)];
            }
        }
        factors.push(a[(t, t)]);
        t += 1;
    }
    Smith { factors, col_transform: q }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith(&a).factors, vec![2, 6, 12]);
        let z = IntMatrix::zeros(3, 2);
        assert_eq!(smith(&z).rank(), 0);
        let b = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith(&b).factors, vec![1, 6]);
    }

    #[test]
    fn column_transform_kills_trailing_columns() {
        let a = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let s = smith_with_cols(&a, 0);
        assert_eq!(s.factors, vec![1, 1]);
        // P A Q = S means the columns of A Q past the rank vanish
        let aq = a.mul(&s.col_transform.unwrap());
        assert!((0..3).all(|r| aq[(r, 2)] == 0));
        let det: i128 =
            smith(&IntMatrix::from_rows(&[vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]])).factors.iter().product();
        assert_eq!(det, 90);
    }
}
