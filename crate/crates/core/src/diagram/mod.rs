//! Oriented knot and link diagrams, their arcs, crossing relations and regions.
//!
//! A crossing stores the edges at its four ends in counterclockwise order,
//! starting with the incoming under-edge (position 0). The under-strand runs
//! from position 0 to position 2; the over-strand enters at position 1 or 3.
//! A crossing whose over-strand enters at position 3 is positive.

mod braid;
mod pd;
mod surface;

use std::fmt;

use crate::error::{Error, Result};

pub use braid::{braid_closure, parse_braid, torus_diagram, BraidWord};
pub use pd::parse_pd;
pub use surface::{parse_surface, SurfaceDiagramData, TriplePoint};

/// Co-orientation sense: the normal of an arc is its direction turned
/// counterclockwise when `true`, clockwise when `false`.
///
/// Fixed so that the shadow state sum of the positive trefoil `T(2,3)` with
/// the dihedral 3-cocycle comes out as `9 + 18t`.
pub const NORMAL_LEFT: bool = true;

/// A crossing end: `(crossing, position)`.
pub type End = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// Edge ids at positions 0..4, counterclockwise from the incoming under-edge.
    pub ends: [usize; 4],
    /// Position (1 or 3) at which the over-strand enters.
    pub over_in: usize,
}

impl Crossing {
    pub fn sign(&self) -> i32 {
        if self.over_in == 3 {
            1
        } else {
            -1
        }
    }

    fn is_incoming(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in
    }
}

/// `to_under = from_under * over` at one crossing (arc ids).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingRelation {
    pub over: usize,
    pub from_under: usize,
    pub to_under: usize,
    pub sign: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Kei,
    Quandle,
    Rack,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kei" => Ok(Flavor::Kei),
            "quandle" => Ok(Flavor::Quandle),
            "rack" => Ok(Flavor::Rack),
            _ => Err(Error::parse(0, format!("unknown flavor `{s}`"))),
        }
    }
}

/// Generators are the arcs `0..generators`; one relation per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub flavor: Flavor,
    pub generators: usize,
    pub relations: Vec<CrossingRelation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for g in 0..self.generators {
            write!(f, "{}x{}", if g == 0 { "" } else { "," }, g + 1)?;
        }
        write!(f, " |")?;
        for (i, r) in self.relations.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}x{} = x{}*x{}", r.to_under + 1, r.from_under + 1, r.over + 1)?;
        }
        write!(f, ">")
    }
}

/// An edge bordering a region. `inward` is true when the edge's
/// co-orientation points into the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub edge: usize,
    pub arc: usize,
    pub inward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// Crossing corners `(crossing, quadrant)` in boundary order; quadrant `q`
    /// lies between positions `q` and `q + 1`.
    pub corners: Vec<(usize, usize)>,
    pub incidences: Vec<Incidence>,
}

/// Two regions separated by an edge: `to = from * arc` for a shadow coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceRelation {
    pub from: usize,
    pub to: usize,
    pub arc: usize,
}

#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    edges: usize,
    tails: Vec<Option<End>>,
    heads: Vec<Option<End>>,
    edge_arc: Vec<usize>,
    arcs: usize,
    edge_component: Vec<usize>,
    components: usize,
    regions: Vec<Region>,
    corner_region: Vec<usize>,
    /// `(left, right)` region of each edge with respect to its orientation.
    edge_sides: Vec<(usize, usize)>,
}

impl Diagram {
    /// The crossingless unknot: one edge, one arc, two regions.
    pub fn unknot() -> Self {
        Diagram {
            crossings: Vec::new(),
            edges: 1,
            tails: vec![None],
            heads: vec![None],
            edge_arc: vec![0],
            arcs: 1,
            edge_component: vec![0],
            components: 1,
            regions: vec![
                Region { corners: vec![], incidences: vec![Incidence { edge: 0, arc: 0, inward: NORMAL_LEFT }] },
                Region { corners: vec![], incidences: vec![Incidence { edge: 0, arc: 0, inward: !NORMAL_LEFT }] },
            ],
            corner_region: Vec::new(),
            edge_sides: vec![(0, 1)],
        }
    }

    /// Builds a diagram from crossings whose ends reference edges `0..2m`.
    ///
    /// Checks that every edge has one outgoing and one incoming end and
    /// that face tracing yields a sphere.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self> {
        if crossings.is_empty() {
            return Ok(Diagram::unknot());
        }
        let edges = 2 * crossings.len();
        let mut tails: Vec<Option<End>> = vec![None; edges];
        let mut heads: Vec<Option<End>> = vec![None; edges];
        for (c, x) in crossings.iter().enumerate() {
            if x.over_in != 1 && x.over_in != 3 {
                return Err(Error::Diagram(format!("crossing {}: over-strand must enter at position 1 or 3", c + 1)));
            }
            for (p, &e) in x.ends.iter().enumerate() {
                if e >= edges {
                    return Err(Error::Diagram(format!("crossing {}: edge {} out of range", c + 1, e + 1)));
                }
                let slot = if x.is_incoming(p) { &mut heads[e] } else { &mut tails[e] };
                if slot.is_some() {
                    let what = if x.is_incoming(p) { "enters" } else { "leaves" };
                    return Err(Error::Diagram(format!(
                        "edge {} {what} a crossing twice (second time at crossing {})",
                        e + 1,
                        c + 1
                    )));
                }
                *slot = Some((c, p));
            }
        }
        // every edge appears exactly twice, so the counts above force one head and one tail
        debug_assert!(tails.iter().chain(&heads).all(Option::is_some));

        let mut arc_uf = UnionFind::new(edges);
        let mut comp_uf = UnionFind::new(edges);
        for x in &crossings {
            arc_uf.union(x.ends[x.over_in], x.ends[(x.over_in + 2) % 4]);
            comp_uf.union(x.ends[x.over_in], x.ends[(x.over_in + 2) % 4]);
            comp_uf.union(x.ends[0], x.ends[2]);
        }
        let (edge_arc, arcs) = arc_uf.labels();
        let (edge_component, components) = comp_uf.labels();

        let mut d = Diagram {
            crossings,
            edges,
            tails,
            heads,
            edge_arc,
            arcs,
            edge_component,
            components,
            regions: Vec::new(),
            corner_region: Vec::new(),
            edge_sides: Vec::new(),
        };
        d.trace_faces()?;
        Ok(d)
    }

    fn other_end(&self, (c, p): End) -> End {
        let e = self.crossings[c].ends[p];
        let (t, h) = (self.tails[e].unwrap(), self.heads[e].unwrap());
        if t == (c, p) {
            h
        } else {
            t
        }
    }

    // corner (c, q) is followed by the corner at the far end of the edge on ray q + 1
    fn trace_faces(&mut self) -> Result<()> {
        let n = self.crossings.len();
        let mut corner_region = vec![usize::MAX; 4 * n];
        let mut regions = Vec::new();
        for start in 0..4 * n {
            if corner_region[start] != usize::MAX {
                continue;
            }
            let id = regions.len();
            let mut region = Region { corners: Vec::new(), incidences: Vec::new() };
            let mut cur = start;
            loop {
                if corner_region[cur] != usize::MAX {
                    return Err(Error::NonPlanar(format!(
                        "face trace from corner {} of crossing {} does not close",
                        start % 4,
                        start / 4 + 1
                    )));
                }
                corner_region[cur] = id;
                let (c, q) = (cur / 4, cur % 4);
                region.corners.push((c, q));
                let ray = (c, (q + 1) % 4);
                let e = self.crossings[c].ends[ray.1];
                // leaving along a tail end keeps the region on the right
                let on_left = self.tails[e] != Some(ray);
                region.incidences.push(Incidence { edge: e, arc: self.edge_arc[e], inward: on_left == NORMAL_LEFT });
                let (c2, p2) = self.other_end(ray);
                cur = 4 * c2 + p2;
                if cur == start {
                    break;
                }
            }
            regions.push(region);
        }
        let expected = 2 + self.edges - n;
        if regions.len() != expected {
            return Err(Error::NonPlanar(format!(
                "face tracing found {} regions, Euler's formula needs {expected} (diagram non-planar or split)",
                regions.len()
            )));
        }
        self.edge_sides = (0..self.edges)
            .map(|e| {
                let (c, p) = self.tails[e].unwrap();
                (corner_region[4 * c + p], corner_region[4 * c + (p + 3) % 4])
            })
            .collect();
        self.regions = regions;
        self.corner_region = corner_region;
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn edge_arc(&self, e: usize) -> usize {
        self.edge_arc[e]
    }

    pub fn edge_component(&self, e: usize) -> usize {
        self.edge_component[e]
    }

    /// Component of each arc.
    pub fn arc_components(&self) -> Vec<usize> {
        let mut out = vec![0; self.arcs];
        for e in 0..self.edges {
            out[self.edge_arc[e]] = self.edge_component[e];
        }
        out
    }

    pub fn sign(&self, c: usize) -> i32 {
        self.crossings[c].sign()
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    // positions toward which the normals of the under- and over-strand point
    fn normals(x: &Crossing) -> (usize, usize) {
        let turn = if NORMAL_LEFT { 3 } else { 1 };
        (turn % 4, (x.over_in + turn) % 4)
    }

    pub fn crossing_relation(&self, c: usize) -> CrossingRelation {
        let x = &self.crossings[c];
        let (_, n_over) = Self::normals(x);
        CrossingRelation {
            over: self.edge_arc[x.ends[x.over_in]],
            from_under: self.edge_arc[x.ends[(n_over + 2) % 4]],
            to_under: self.edge_arc[x.ends[n_over]],
            sign: x.sign(),
        }
    }

    pub fn crossing_relations(&self) -> Vec<CrossingRelation> {
        (0..self.crossings.len()).map(|c| self.crossing_relation(c)).collect()
    }

    pub fn presentation(&self, flavor: Flavor) -> Presentation {
        Presentation { flavor, generators: self.arcs, relations: self.crossing_relations() }
    }

    /// The region at crossing `c` from which the normals of both the
    /// source under-arc and the over-arc point away.
    pub fn source_region(&self, c: usize) -> usize {
        let x = &self.crossings[c];
        let (n_under, n_over) = Self::normals(x);
        let (s, t) = ((n_over + 2) % 4, (n_under + 2) % 4);
        let q = if (s + 1) % 4 == t { s } else { t };
        self.corner_region[4 * c + q]
    }

    /// One relation per edge, oriented along the co-orientation.
    pub fn face_relations(&self) -> Vec<FaceRelation> {
        self.edge_sides
            .iter()
            .enumerate()
            .map(|(e, &(left, right))| {
                let (from, to) = if NORMAL_LEFT { (right, left) } else { (left, right) };
                FaceRelation { from, to, arc: self.edge_arc[e] }
            })
            .collect()
    }

    /// Over and under exchanged at every crossing.
    pub fn mirror(&self) -> Diagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let o = x.over_in;
                Crossing { ends: std::array::from_fn(|k| x.ends[(o + k) % 4]), over_in: 4 - o }
            })
            .collect();
        Diagram::from_crossings(crossings).expect("mirror of a valid diagram")
    }

    /// Every edge orientation reversed.
    pub fn reverse(&self) -> Diagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing { ends: std::array::from_fn(|k| x.ends[(k + 2) % 4]), over_in: x.over_in })
            .collect();
        Diagram::from_crossings(crossings).expect("reverse of a valid diagram")
    }

    /// PD code with edges renumbered consecutively along each component.
    pub fn to_pd(&self) -> String {
        let mut label = vec![0usize; self.edges];
        let mut next = 1;
        for start in 0..self.edges {
            if label[start] != 0 {
                continue;
            }
            let mut e = start;
            while label[e] == 0 {
                label[e] = next;
                next += 1;
                let (c, p) = self.heads[e].unwrap();
                e = self.crossings[c].ends[(p + 2) % 4];
            }
        }
        let mut out = String::from("pd\n");
        for x in &self.crossings {
            let l: Vec<String> = x.ends.iter().map(|&e| label[e].to_string()).collect();
            out.push_str(&format!("X({})\n", l.join(",")));
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    // classes numbered in order of their least member
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut id = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut count = 0;
        for a in 0..n {
            let r = self.find(a);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out[a] = id[r];
        }
        (out, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    #[test]
    fn trefoil_counts() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!((d.crossing_count(), d.arc_count(), d.region_count()), (3, 3, 5));
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.presentation(Flavor::Quandle).relations.len(), 3);
    }

    #[test]
    fn figure_eight_counts() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        assert_eq!((d.crossing_count(), d.arc_count(), d.region_count()), (4, 4, 6));
        assert_eq!(d.writhe(), 0);
    }

    #[test]
    fn unknot_shape() {
        let d = Diagram::unknot();
        assert_eq!((d.arc_count(), d.region_count()), (1, 2));
        assert!(d.presentation(Flavor::Kei).relations.is_empty());
        assert_eq!(d.face_relations().len(), 1);
    }

    #[test]
    fn mirror_and_reverse_signs() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let m = d.mirror();
        let r = d.reverse();
        for c in 0..4 {
            assert_eq!(m.sign(c), -d.sign(c));
            assert_eq!(r.sign(c), d.sign(c));
        }
        let mm = m.mirror();
        assert_eq!(mm.crossings(), d.crossings());
    }

    #[test]
    fn each_region_touches_its_corners() {
        let d = parse_pd(TREFOIL).unwrap();
        let corners: usize = d.regions().iter().map(|r| r.corners.len()).sum();
        assert_eq!(corners, 4 * d.crossing_count());
        // each edge borders two distinct regions, once from each side
        for (e, &(l, r)) in d.edge_sides.iter().enumerate() {
            assert_ne!(l, r, "edge {e}");
        }
    }

    #[test]
    fn source_region_is_adjacent_to_relation_arcs() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        for c in 0..d.crossing_count() {
            let rel = d.crossing_relation(c);
            let y = d.source_region(c);
            let arcs: Vec<usize> = d.regions()[y].incidences.iter().map(|i| i.arc).collect();
            assert!(arcs.contains(&rel.over) && arcs.contains(&rel.from_under));
        }
    }

    #[test]
    fn pd_round_trip() {
        let d = parse_pd(FIGURE_EIGHT).unwrap();
        let again = parse_pd(&d.to_pd()).unwrap();
        assert_eq!(again.crossing_count(), 4);
        assert_eq!(again.writhe(), d.writhe());
    }
}
