use std::fmt;

/// An element `sum_k c_k t^k` of `Z[Z_d]`, `t^d = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    modulus: u64,
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(modulus: u64) -> Self {
        assert!(modulus >= 1, "group ring needs d >= 1");
        GroupRingElement { modulus, coeffs: vec![0; modulus as usize] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "group ring needs d >= 1");
        GroupRingElement { modulus: coeffs.len() as u64, coeffs }
    }

    pub fn monomial(modulus: u64, k: u64) -> Self {
        let mut e = Self::zero(modulus);
        e.add_monomial(k, 1);
        e
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: u64) -> i64 {
        self.coeffs[(k % self.modulus) as usize]
    }

    pub fn add_monomial(&mut self, k: u64, c: i64) {
        self.coeffs[(k % self.modulus) as usize] += c;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "group ring modulus mismatch");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        GroupRingElement { modulus: self.modulus, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus, other.modulus, "group ring modulus mismatch");
        let d = self.modulus as usize;
        let mut coeffs = vec![0; d];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[(i + j) % d] += a * b;
            }
        }
        GroupRingElement { modulus: self.modulus, coeffs }
    }

    /// Coefficient sum.
    pub fn augmentation(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `t -> t^-1`.
    pub fn conjugate(&self) -> Self {
        let d = self.coeffs.len();
        let coeffs = (0..d).map(|k| self.coeffs[(d - k) % d]).collect();
        GroupRingElement { modulus: self.modulus, coeffs }
    }

    /// `invariant <d> <c0> ... <c{d-1}>`.
    pub fn data_line(&self) -> String {
        let mut s = format!("invariant {}", self.modulus);
        for c in &self.coeffs {
            s.push_str(&format!(" {c}"));
        }
        s
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
