//! Cocycle state-sum invariants with values in the group ring `Z[Z_d]`.

mod ring;

use crate::algebra::RackTable;
use crate::coloring::{
    enumerate_colorings_with, enumerate_shadow_colorings_with, enumerate_surface_colorings, Coloring, ShadowColoring,
    SurfaceColoring,
};
use crate::diagram::{Diagram, SurfaceDiagramData};
use crate::error::{Error, Result};
use crate::homology::{cocycle_failure, Cochain, Theory};

pub use ring::GroupRingElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateSumOptions {
    /// Refuse cochains that are not quandle cocycles. Without the check the
    /// result need not be a knot invariant.
    pub check_cocycle: bool,
    pub jobs: usize,
}

impl Default for StateSumOptions {
    fn default() -> Self {
        StateSumOptions { check_cocycle: true, jobs: 1 }
    }
}

fn check(x: &RackTable, c: &Cochain, degree: usize, opts: StateSumOptions) -> Result<()> {
    x.require_quandle()?;
    if c.degree() != degree || c.order() != x.size() {
        return Err(Error::InvalidArgument(format!(
            "expected a degree-{degree} cochain on {} elements, got degree {} on {}",
            x.size(),
            c.degree(),
            c.order()
        )));
    }
    if opts.check_cocycle {
        if let Some(fail) = cocycle_failure(x, c, Theory::Quandle)? {
            return Err(Error::NotCocycle(fail.to_string()));
        }
    }
    Ok(())
}

fn signed(value: u64, sign: i32, m: u64) -> u64 {
    if sign > 0 {
        value % m
    } else {
        (m - value % m) % m
    }
}

/// `sum_tau eps_tau phi(rho(x_i), rho(x_k))` in `Z_m`.
pub fn coloring_weight(d: &Diagram, rho: &Coloring, phi: &Cochain) -> u64 {
    let m = phi.modulus();
    d.crossing_relations().iter().fold(0, |acc, r| {
        let v = phi.get(&[rho.arcs[r.from_under], rho.arcs[r.over]]);
        (acc + signed(v, r.sign, m)) % m
    })
}

/// `sum_tau eps_tau theta(y, rho(x_i), rho(x_k))` with `y` the source region.
pub fn shadow_weight(d: &Diagram, s: &ShadowColoring, theta: &Cochain) -> u64 {
    let m = theta.modulus();
    (0..d.crossing_count()).fold(0, |acc, c| {
        let r = d.crossing_relation(c);
        let y = s.regions[d.source_region(c)];
        let v = theta.get(&[y, s.coloring.arcs[r.from_under], s.coloring.arcs[r.over]]);
        (acc + signed(v, r.sign, m)) % m
    })
}

/// `sum_tau eps_tau theta(lower, middle, upper)` over triple points.
pub fn surface_weight(sd: &SurfaceDiagramData, rho: &SurfaceColoring, theta: &Cochain) -> u64 {
    let m = theta.modulus();
    sd.triple_points.iter().fold(0, |acc, tp| {
        let v = theta.get(&[rho.sheets[tp.lower], rho.sheets[tp.middle], rho.sheets[tp.upper]]);
        (acc + signed(v, tp.sign, m)) % m
    })
}

/// `Phi_phi(D)`: the sum over colorings of `t^(weight)`.
pub fn state_sum_2(d: &Diagram, x: &RackTable, phi: &Cochain) -> Result<GroupRingElement> {
    state_sum_2_with(d, x, phi, StateSumOptions::default())
}

pub fn state_sum_2_with(d: &Diagram, x: &RackTable, phi: &Cochain, opts: StateSumOptions) -> Result<GroupRingElement> {
    check(x, phi, 2, opts)?;
    let mut out = GroupRingElement::zero(phi.modulus());
    for rho in enumerate_colorings_with(d, x, opts.jobs)? {
        out.add_monomial(coloring_weight(d, &rho, phi), 1);
    }
    Ok(out)
}

/// `Psi_theta(D)`: the sum over shadow colorings of `t^(weight)`.
pub fn state_sum_shadow(d: &Diagram, x: &RackTable, theta: &Cochain) -> Result<GroupRingElement> {
    state_sum_shadow_with(d, x, theta, StateSumOptions::default())
}

pub fn state_sum_shadow_with(
    d: &Diagram,
    x: &RackTable,
    theta: &Cochain,
    opts: StateSumOptions,
) -> Result<GroupRingElement> {
    check(x, theta, 3, opts)?;
    let mut out = GroupRingElement::zero(theta.modulus());
    for s in enumerate_shadow_colorings_with(d, x, opts.jobs)? {
        out.add_monomial(shadow_weight(d, &s, theta), 1);
    }
    Ok(out)
}

/// `Phi_theta` of knotted-surface data: the sum over sheet colorings.
pub fn state_sum_surface(sd: &SurfaceDiagramData, x: &RackTable, theta: &Cochain) -> Result<GroupRingElement> {
    state_sum_surface_with(sd, x, theta, StateSumOptions::default())
}

pub fn state_sum_surface_with(
    sd: &SurfaceDiagramData,
    x: &RackTable,
    theta: &Cochain,
    opts: StateSumOptions,
) -> Result<GroupRingElement> {
    check(x, theta, 3, opts)?;
    let mut out = GroupRingElement::zero(theta.modulus());
    for rho in enumerate_surface_colorings(sd, x)? {
        out.add_monomial(surface_weight(sd, &rho, theta), 1);
    }
    Ok(out)
}
