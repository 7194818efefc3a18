//! Words in the right translations and their normal forms.
//!
//! `u^W` for `W = x_1^{e_1} ... x_k^{e_k}` is `u` acted on from the right by
//! `S_{x_1}^{e_1}`, then `S_{x_2}^{e_2}`, and so on.

use std::fmt;

use super::rack::{Element, RackTable};

/// Exponent of a letter in a rack word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A base symbol followed by signed letters. Symbols are either elements of a
/// rack or generator indices, depending on context.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RackWord {
    pub base: usize,
    pub letters: Vec<(usize, Sign)>,
}

impl RackWord {
    pub fn new(base: usize) -> Self {
        RackWord { base, letters: Vec::new() }
    }

    pub fn with_letters(base: usize, letters: Vec<(usize, Sign)>) -> Self {
        RackWord { base, letters }
    }

    /// Evaluates the word with every symbol mapped through `assignment`.
    pub fn evaluate(&self, x: &RackTable, assignment: &[Element]) -> Element {
        let letters: Vec<(Element, Sign)> = self.letters.iter().map(|&(s, e)| (assignment[s], e)).collect();
        evaluate_word(x, assignment[self.base], &letters)
    }
}

impl fmt::Display for RackWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        if !self.letters.is_empty() {
            f.write_str("^{")?;
            for (i, &(s, e)) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
                if e == Sign::Neg {
                    f.write_str("^-1")?;
                }
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// `u^W`: applies `S_x^{+-1}` for each letter from left to right.
pub fn evaluate_word(x: &RackTable, u: Element, letters: &[(Element, Sign)]) -> Element {
    letters.iter().fold(u, |acc, &(b, e)| match e {
        Sign::Pos => x.op(acc, b),
        Sign::Neg => x.op_inv(acc, b),
    })
}

/// A bracketed expression in the `*` operation over generator symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WordTree {
    Leaf(usize),
    Op(Box<WordTree>, Box<WordTree>),
}

impl WordTree {
    pub fn leaf(s: usize) -> Self {
        WordTree::Leaf(s)
    }

    pub fn op(left: WordTree, right: WordTree) -> Self {
        WordTree::Op(Box::new(left), Box::new(right))
    }

    pub fn evaluate(&self, x: &RackTable, assignment: &[Element]) -> Element {
        match self {
            WordTree::Leaf(s) => assignment[*s],
            WordTree::Op(l, r) => x.op(l.evaluate(x, assignment), r.evaluate(x, assignment)),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            WordTree::Leaf(_) => 0,
            WordTree::Op(l, r) => 1 + l.depth().max(r.depth()),
        }
    }
}

fn free_reduce(
    letters: Vec<(usize, Sign)>,
    cancels: impl Fn((usize, Sign), (usize, Sign)) -> bool,
) -> Vec<(usize, Sign)> {
    let mut out: Vec<(usize, Sign)> = Vec::with_capacity(letters.len());
    for l in letters {
        match out.last() {
            Some(&top) if cancels(top, l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Rack normal form `u^W` of an expression, valid in every rack.
///
/// Recurses on the tree: if `L = a^U` and `R = b^V` then
/// `L * R = a^{U V^{-1} b V}`, followed by free reduction of `x x^{-1}`.
/// Each recursive call is on a strict subtree, so the recursion terminates
/// after one visit per node.
pub fn rack_normalize(w: &WordTree) -> RackWord {
    match w {
        WordTree::Leaf(s) => RackWord::new(*s),
        WordTree::Op(l, r) => {
            let left = rack_normalize(l);
            let right = rack_normalize(r);
            let mut letters = left.letters;
            letters.extend(right.letters.iter().rev().map(|&(s, e)| (s, e.flip())));
            letters.push((right.base, Sign::Pos));
            letters.extend(right.letters.iter().copied());
            let letters = free_reduce(letters, |a, b| a.0 == b.0 && a.1 != b.1);
            RackWord::with_letters(left.base, letters)
        }
    }
}

/// Left-normal form `x_1 x_2 ... x_m = (..((x_1*x_2)*x_3)..)*x_m` in a kei.
///
/// Uses `x*(y*z) = ((x*z)*y)*z` repeatedly; since right translations are
/// involutions all exponents are positive and adjacent repeated letters cancel.
pub fn kei_normalize(w: &WordTree) -> RackWord {
    match w {
        WordTree::Leaf(s) => RackWord::new(*s),
        WordTree::Op(l, r) => {
            let left = kei_normalize(l);
            let right = kei_normalize(r);
            let mut letters = left.letters;
            letters.extend(right.letters.iter().rev().copied());
            letters.push((right.base, Sign::Pos));
            letters.extend(right.letters.iter().copied());
            let letters = free_reduce(letters, |a, b| a.0 == b.0);
            RackWord::with_letters(left.base, letters)
        }
    }
}
