use std::fmt;

use super::rack::RackTable;
use super::word::Sign;
use crate::error::{Error, Result};

/// A finitely presented group; relators are words in generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, Sign)>>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<(usize, Sign)>>) -> Result<Self> {
        for (i, r) in relators.iter().enumerate() {
            if let Some(&(g, _)) = r.iter().find(|&&(g, _)| g >= generators.len()) {
                return Err(Error::InvalidArgument(format!("relator {i} uses undeclared generator {g}")));
            }
        }
        Ok(GroupPresentation { generators, relators })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(g, e)| match e {
                        Sign::Pos => self.generators[g].clone(),
                        Sign::Neg => format!("{}^-1", self.generators[g]),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{} >", rels.join(", "))
    }
}

/// Presentation of `As(X)`: one generator per element and, for every ordered
/// pair `(x, y)`, the relator `(x*y) (y^{-1} x y)^{-1} = (x*y) y^{-1} x^{-1} y`.
/// No simplification is attempted.
pub fn associated_group_presentation(x: &RackTable) -> Result<GroupPresentation> {
    x.require_rack()?;
    let n = x.size();
    let generators = (0..n).map(|a| format!("x{a}")).collect();
    let mut relators = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            relators.push(vec![(x.op(a, b), Sign::Pos), (b, Sign::Neg), (a, Sign::Neg), (b, Sign::Pos)]);
        }
    }
    GroupPresentation::new(generators, relators)
}
