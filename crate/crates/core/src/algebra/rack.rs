use std::fmt;

use crate::error::{Error, Result};

/// Elements of a finite rack are the integers `0..n`.
pub type Element = usize;

/// Strongest structure an operation table satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RackClass {
    NotARack,
    Rack,
    Quandle,
    Kei,
}

impl RackClass {
    pub fn name(self) -> &'static str {
        match self {
            RackClass::NotARack => "not-a-rack",
            RackClass::Rack => "rack",
            RackClass::Quandle => "quandle",
            RackClass::Kei => "kei",
        }
    }
}

impl fmt::Display for RackClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// R1: every right translation is a bijection.
    RightInvertible,
    /// R2: `(a*b)*c = (a*c)*(b*c)`.
    SelfDistributive,
    /// Q1: `a*a = a`.
    Idempotent,
    /// K2: `(a*b)*b = a`.
    Involutory,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::RightInvertible => "R1",
            Axiom::SelfDistributive => "R2",
            Axiom::Idempotent => "Q1",
            Axiom::Involutory => "K2",
        }
    }
}

/// First violated axiom together with the elements exhibiting the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<Element>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|x| x.to_string()).collect();
        write!(f, "axiom {} fails at ({}): {}", self.axiom.label(), w.join(","), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub class: RackClass,
    /// The first axiom (in R1, R2, Q1, K2 order) that fails, if any.
    pub violation: Option<Violation>,
}

/// Classifies an `n x n` table given in row-major order, `table[a*n + b] = a*b`.
///
/// Axioms are checked in the order R1, R2, Q1, K2 and the scan stops at the
/// first failure.
pub fn check_axioms(n: usize, table: &[Element]) -> Result<Classification> {
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    if table.len() != n * n {
        return Err(Error::MalformedTable(format!("expected {} entries, found {}", n * n, table.len())));
    }
    if let Some(pos) = table.iter().position(|&x| x >= n) {
        return Err(Error::MalformedTable(format!(
            "entry {}*{} = {} out of range 0..{}",
            pos / n,
            pos % n,
            table[pos],
            n
        )));
    }
    let op = |a: usize, b: usize| table[a * n + b];

    let mut seen = vec![usize::MAX; n];
    for b in 0..n {
        for a in 0..n {
            let c = op(a, b);
            if seen[c] != usize::MAX && seen[c] != b * n + a {
                let first = seen[c] % n;
                return Ok(Classification {
                    class: RackClass::NotARack,
                    violation: Some(Violation {
                        axiom: Axiom::RightInvertible,
                        witness: vec![first, a, b],
                        detail: format!("{first}*{b} = {a}*{b} = {c}"),
                    }),
                });
            }
            seen[c] = b * n + a;
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
    }

    for a in 0..n {
        for b in 0..n {
            let ab = op(a, b);
            for c in 0..n {
                let lhs = op(ab, c);
                let rhs = op(op(a, c), op(b, c));
                if lhs != rhs {
                    return Ok(Classification {
                        class: RackClass::NotARack,
                        violation: Some(Violation {
                            axiom: Axiom::SelfDistributive,
                            witness: vec![a, b, c],
                            detail: format!("(a*b)*c = {lhs} but (a*c)*(b*c) = {rhs}"),
                        }),
                    });
                }
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| op(a, a) != a) {
        return Ok(Classification {
            class: RackClass::Rack,
            violation: Some(Violation {
                axiom: Axiom::Idempotent,
                witness: vec![a],
                detail: format!("{a}*{a} = {}", op(a, a)),
            }),
        });
    }

    for a in 0..n {
        for b in 0..n {
            if op(op(a, b), b) != a {
                return Ok(Classification {
                    class: RackClass::Quandle,
                    violation: Some(Violation {
                        axiom: Axiom::Involutory,
                        witness: vec![a, b],
                        detail: format!("({a}*{b})*{b} = {}", op(op(a, b), b)),
                    }),
                });
            }
        }
    }

    Ok(Classification { class: RackClass::Kei, violation: None })
}

/// A finite binary operation table with its classification cached.
///
/// Tables that fail the rack axioms can still be represented (abelian
/// extensions by non-cocycles produce them); operations that need right
/// division check [`RackTable::is_rack`] first.
#[derive(Clone, PartialEq, Eq)]
pub struct RackTable {
    n: usize,
    table: Vec<Element>,
    // right division: div[a*n + b] = c with c*b = a
    div: Vec<Element>,
    classification: Classification,
    name: Option<String>,
}

impl fmt::Debug for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RackTable")
            .field("n", &self.n)
            .field("class", &self.classification.class)
            .field("name", &self.name)
            .finish()
    }
}

impl RackTable {
    /// Builds a table from row-major entries `a*b = table[a*n + b]`.
    pub fn from_flat(n: usize, table: Vec<Element>) -> Result<Self> {
        let classification = check_axioms(n, &table)?;
        let mut div = vec![0; n * n];
        if classification.class >= RackClass::Rack {
            for a in 0..n {
                for b in 0..n {
                    div[table[a * n + b] * n + b] = a;
                }
            }
        }
        Ok(RackTable { n, table, div, classification, name: None })
    }

    pub fn from_rows(rows: &[Vec<Element>]) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {n}", r.len())));
        }
        Self::from_flat(n, rows.concat())
    }

    /// Builds a table from an operation closure.
    pub fn from_fn(n: usize, op: impl Fn(Element, Element) -> Element) -> Result<Self> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b));
            }
        }
        Self::from_flat(n, table)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn op(&self, a: Element, b: Element) -> Element {
        self.table[a * self.n + b]
    }

    /// The unique `c` with `c*b = a`.
    ///
    /// Panics if the table is not a rack.
    #[inline]
    pub fn op_inv(&self, a: Element, b: Element) -> Element {
        assert!(self.is_rack(), "right division on a table that is not a rack");
        self.div[a * self.n + b]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.table.chunks(self.n)
    }

    pub fn as_flat(&self) -> &[Element] {
        &self.table
    }

    pub fn class(&self) -> RackClass {
        self.classification.class
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn is_rack(&self) -> bool {
        self.class() >= RackClass::Rack
    }

    pub fn is_quandle(&self) -> bool {
        self.class() >= RackClass::Quandle
    }

    pub fn is_kei(&self) -> bool {
        self.class() == RackClass::Kei
    }

    pub(crate) fn require_rack(&self) -> Result<()> {
        if self.is_rack() {
            Ok(())
        } else {
            Err(Error::Structure(format!("table is {}, a rack is required", self.class())))
        }
    }

    pub(crate) fn require_quandle(&self) -> Result<()> {
        if self.is_quandle() {
            Ok(())
        } else {
            Err(Error::Structure(format!("table is {}, a quandle is required", self.class())))
        }
    }

    /// Orbits under the right translations, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<Element>> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in 0..n {
            for b in 0..n {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, self.op(a, b)));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: Vec<Vec<Element>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for a in 0..n {
            let r = find(&mut parent, a);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(a);
        }
        groups
    }

    /// Orbit index of every element, consistent with [`RackTable::orbits`].
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (i, orbit) in self.orbits().iter().enumerate() {
            for &a in orbit {
                idx[a] = i;
            }
        }
        idx
    }
}

/// The trivial kei `a*b = a` on `n` elements.
pub fn make_trivial(n: usize) -> Result<RackTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("trivial quandle needs n >= 1".into()));
    }
    Ok(RackTable::from_fn(n, |a, _| a)?.with_name(format!("trivial:{n}")))
}

/// The dihedral kei `R_n`, `i*j = 2j - i mod n`.
pub fn make_dihedral(n: usize) -> Result<RackTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("dihedral quandle needs n >= 1".into()));
    }
    Ok(RackTable::from_fn(n, |i, j| (2 * j + n - i) % n)?.with_name(format!("dihedral:{n}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_examples() {
        let t3 = make_trivial(3).unwrap();
        assert_eq!(t3.op(1, 2), 1);
        let t1 = make_trivial(1).unwrap();
        assert_eq!(t1.op(0, 0), 0);
        assert_eq!(make_trivial(4).unwrap().class(), RackClass::Kei);
        assert!(make_trivial(0).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let r3 = make_dihedral(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        assert_eq!(r3.op(2, 2), 2);
        assert_eq!(r3.class(), RackClass::Kei);
        let r4 = make_dihedral(4).unwrap();
        assert_eq!(r4.op(1, 3), 1);
        assert!(make_dihedral(0).is_err());
    }

    #[test]
    fn repeated_column_entry_is_not_a_rack() {
        let c = check_axioms(2, &[0, 0, 0, 1]).unwrap();
        assert_eq!(c.class, RackClass::NotARack);
        let v = c.violation.unwrap();
        assert_eq!(v.axiom, Axiom::RightInvertible);
        assert_eq!(v.witness, vec![0, 1, 0]);
    }

    #[test]
    fn out_of_range_entry_is_malformed() {
        assert!(matches!(check_axioms(2, &[0, 0, 2, 1]), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn non_idempotent_rack() {
        // a*b = a+1 mod 3 is a rack but not a quandle
        let t = RackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap();
        assert_eq!(t.class(), RackClass::Rack);
        assert_eq!(t.classification().violation.as_ref().unwrap().axiom, Axiom::Idempotent);
    }

    #[test]
    fn self_distributivity_failure() {
        // a*b = a+b mod 3 has bijective columns but is not distributive
        let t = RackTable::from_fn(3, |a, b| (a + b) % 3).unwrap();
        assert_eq!(t.class(), RackClass::NotARack);
        assert_eq!(t.classification().violation.as_ref().unwrap().axiom, Axiom::SelfDistributive);
    }

    #[test]
    fn op_inv_examples() {
        let r3 = make_dihedral(3).unwrap();
        assert_eq!(r3.op_inv(0, 1), 2);
        let r5 = make_dihedral(5).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(r5.op_inv(a, b), r5.op(a, b));
            }
        }
        let t = make_trivial(4).unwrap();
        assert_eq!(t.op_inv(3, 1), 3);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(make_dihedral(3).unwrap().orbits(), vec![vec![0, 1, 2]]);
        assert_eq!(make_trivial(3).unwrap().orbits().len(), 3);
        assert_eq!(make_dihedral(4).unwrap().orbits(), vec![vec![0, 2], vec![1, 3]]);
    }
}
