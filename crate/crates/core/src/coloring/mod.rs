//! Colorings of diagrams, shadow colorings, surface colorings and lifts to
//! abelian extensions.

mod solver;

use std::collections::VecDeque;

use crate::algebra::{abelian_extension, extension_element, Element, RackTable};
use crate::diagram::{Diagram, SurfaceDiagramData};
use crate::error::{Error, Result};
use crate::homology::{cocycle_failure, Cochain, Theory};

pub use solver::RelationSystem;

/// Arc colors, indexed by arc id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub arcs: Vec<Element>,
}

impl Coloring {
    pub fn is_trivial(&self) -> bool {
        self.arcs.windows(2).all(|w| w[0] == w[1])
    }

    /// Every element of `X` used.
    pub fn is_surjective(&self, order: usize) -> bool {
        let mut used = vec![false; order];
        for &a in &self.arcs {
            used[a] = true;
        }
        used.iter().all(|&u| u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShadowColoring {
    pub coloring: Coloring,
    /// Region colors, indexed by region id.
    pub regions: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceColoring {
    pub sheets: Vec<Element>,
}

/// Colorings by a rack that is not a quandle are invariants of framed
/// diagrams only.
pub fn framed_only(x: &RackTable) -> bool {
    x.is_rack() && !x.is_quandle()
}

pub fn diagram_system(d: &Diagram) -> RelationSystem {
    RelationSystem {
        vars: d.arc_count(),
        relations: d.crossing_relations().iter().map(|r| (r.from_under, r.to_under, r.over)).collect(),
    }
}

pub fn surface_system(sd: &SurfaceDiagramData) -> RelationSystem {
    RelationSystem { vars: sd.sheets, relations: sd.double_curves.clone() }
}

/// All colorings of `d` by the rack `x`, in lexicographic order.
pub fn enumerate_colorings(d: &Diagram, x: &RackTable) -> Result<Vec<Coloring>> {
    enumerate_colorings_with(d, x, 1)
}

pub fn enumerate_colorings_with(d: &Diagram, x: &RackTable, jobs: usize) -> Result<Vec<Coloring>> {
    x.require_rack()?;
    Ok(solver::solve(x, &diagram_system(d), None, jobs).into_iter().map(|arcs| Coloring { arcs }).collect())
}

pub fn count_colorings(d: &Diagram, x: &RackTable) -> Result<usize> {
    count_colorings_with(d, x, 1)
}

pub fn count_colorings_with(d: &Diagram, x: &RackTable, jobs: usize) -> Result<usize> {
    x.require_rack()?;
    Ok(solver::count(x, &diagram_system(d), jobs))
}

/// Region colorings extending `rho`: region 0 is seeded with each element
/// and the face condition is propagated across edges.
pub fn shadows_of(d: &Diagram, x: &RackTable, rho: &Coloring) -> Vec<ShadowColoring> {
    let faces = d.face_relations();
    let n = d.region_count();
    let mut adjacent: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for f in &faces {
        let c = rho.arcs[f.arc];
        adjacent[f.from].push((f.to, c, true));
        adjacent[f.to].push((f.from, c, false));
    }
    let mut out = Vec::new();
    'seed: for seed in 0..x.size() {
        let mut colors = vec![usize::MAX; n];
        colors[0] = seed;
        let mut queue = VecDeque::from([0]);
        while let Some(r) = queue.pop_front() {
            for &(s, c, forward) in &adjacent[r] {
                let want = if forward { x.op(colors[r], c) } else { x.op_inv(colors[r], c) };
                if colors[s] == usize::MAX {
                    colors[s] = want;
                    queue.push_back(s);
                } else if colors[s] != want {
                    continue 'seed;
                }
            }
        }
        out.push(ShadowColoring { coloring: rho.clone(), regions: colors });
    }
    out
}

pub fn enumerate_shadow_colorings(d: &Diagram, x: &RackTable) -> Result<Vec<ShadowColoring>> {
    enumerate_shadow_colorings_with(d, x, 1)
}

pub fn enumerate_shadow_colorings_with(d: &Diagram, x: &RackTable, jobs: usize) -> Result<Vec<ShadowColoring>> {
    x.require_quandle()?;
    let mut out: Vec<ShadowColoring> =
        enumerate_colorings_with(d, x, jobs)?.iter().flat_map(|rho| shadows_of(d, x, rho)).collect();
    out.sort();
    Ok(out)
}

pub fn count_shadow_colorings(d: &Diagram, x: &RackTable) -> Result<usize> {
    Ok(enumerate_shadow_colorings(d, x)?.len())
}

pub fn enumerate_surface_colorings(sd: &SurfaceDiagramData, x: &RackTable) -> Result<Vec<SurfaceColoring>> {
    x.require_quandle()?;
    Ok(solver::solve(x, &surface_system(sd), None, 1).into_iter().map(|sheets| SurfaceColoring { sheets }).collect())
}

/// Colorings of `d` by `E(X, Z_m, phi)` that project to `rho`.
pub fn lift_coloring(d: &Diagram, x: &RackTable, rho: &Coloring, m: u64, phi: &Cochain) -> Result<Vec<Coloring>> {
    if phi.degree() != 2 || phi.modulus() != m {
        return Err(Error::InvalidArgument(format!("lifting needs a 2-cochain mod {m}")));
    }
    if let Some(fail) = cocycle_failure(x, phi, Theory::Quandle)? {
        return Err(Error::NotCocycle(fail.to_string()));
    }
    if rho.arcs.len() != d.arc_count() {
        return Err(Error::InvalidArgument("coloring does not match the diagram".into()));
    }
    let e = abelian_extension(x, m, phi)?;
    let domains: Vec<Vec<Element>> =
        rho.arcs.iter().map(|&a| (0..m).map(|g| extension_element(m, g, a)).collect()).collect();
    Ok(solver::solve(&e, &diagram_system(d), Some(&domains), 1).into_iter().map(|arcs| Coloring { arcs }).collect())
}
