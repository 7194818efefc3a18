use super::rack::{Element, RackTable};
use crate::error::{Error, Result};
use crate::homology::Cochain;

/// Element `(g, x)` of an abelian extension `Z_d x X`, numbered `x * d + g`.
pub fn extension_element(d: u64, g: u64, x: Element) -> Element {
    x * d as usize + g as usize
}

/// Splits an extension element into `(g, x)`.
pub fn extension_parts(d: u64, e: Element) -> (u64, Element) {
    ((e % d as usize) as u64, e / d as usize)
}

/// `E(X, Z_d, phi)`: the set `Z_d x X` with `(g1, x1)*(g2, x2) = (g1 + phi(x1, x2), x1*x2)`.
///
/// No cocycle condition is imposed here; the classification of the result
/// reports whichever axiom fails when `phi` is not a 2-cocycle.
pub fn abelian_extension(x: &RackTable, d: u64, phi: &Cochain) -> Result<RackTable> {
    if phi.degree() != 2 || phi.order() != x.size() || phi.modulus() != d {
        return Err(Error::InvalidArgument(format!(
            "extension needs a degree-2 cochain mod {d} over {} elements",
            x.size()
        )));
    }
    let n = x.size() * d as usize;
    RackTable::from_fn(n, |a, b| {
        let (g1, x1) = extension_parts(d, a);
        let (_, x2) = extension_parts(d, b);
        let g = (g1 + phi.get(&[x1, x2])) % d;
        extension_element(d, g, x.op(x1, x2))
    })
}
