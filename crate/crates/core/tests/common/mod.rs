#![allow(dead_code)]

use quandle::algebra::{builtin, RackTable};
use quandle::cli::bundled;
use quandle::coloring::Coloring;
use quandle::diagram::{
    braid_closure, parse_braid, parse_pd, parse_surface, torus_diagram, Diagram, SurfaceDiagramData,
};
use quandle::homology::{parse_cochain, Cochain};

pub fn theta() -> Cochain {
    parse_cochain(bundled("theta_R3.cochain").unwrap()).unwrap()
}

pub fn r3() -> RackTable {
    builtin("dihedral:3").unwrap()
}

pub fn pd(name: &str) -> Diagram {
    parse_pd(bundled(name).unwrap()).unwrap()
}

pub fn braid(w: &str) -> Diagram {
    braid_closure(&parse_braid(w).unwrap()).unwrap()
}

pub fn surface(name: &str) -> SurfaceDiagramData {
    parse_surface(bundled(name).unwrap()).unwrap()
}

/// Named diagrams used throughout the tests.
pub fn corpus() -> Vec<(String, Diagram)> {
    let mut v: Vec<(String, Diagram)> = vec![
        ("unknot".into(), Diagram::unknot()),
        ("3_1".into(), pd("trefoil.pd")),
        ("3_1 mirror pd".into(), parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap()),
        ("4_1".into(), pd("4_1.pd")),
        ("6_1".into(), pd("6_1.pd")),
        ("7_4".into(), pd("7_4.pd")),
        ("7_7".into(), pd("7_7.pd")),
        ("hopf".into(), parse_pd("X(4,1,3,2) X(2,3,1,4)").unwrap()),
        ("braid 3: 1 -2 1 -2".into(), braid("3: 1 -2 1 -2")),
        ("braid 3: 1 1 2 -1 2".into(), braid("3: 1 1 2 -1 2")),
    ];
    for n in [1, 2, 3, 4, 5, 6, -3, -4] {
        v.push((format!("T(2,{n})"), torus_diagram(2, n).unwrap()));
    }
    for n in [2, 4, -2] {
        v.push((format!("T(3,{n})"), torus_diagram(3, n).unwrap()));
    }
    v
}

pub fn small_corpus() -> Vec<(String, Diagram)> {
    corpus().into_iter().filter(|(_, d)| d.crossing_count() <= 6).collect()
}

pub fn small_racks() -> Vec<RackTable> {
    let mut v: Vec<RackTable> =
        ["trivial:1", "trivial:2", "trivial:3", "trivial:4", "dihedral:3", "dihedral:4", "alexander:2:1,0,1:0,1"]
            .iter()
            .map(|s| builtin(s).unwrap())
            .collect();
    v.push(RackTable::from_fn(3, |a, _| (a + 1) % 3).unwrap().with_name("shift:3"));
    v.push(RackTable::from_fn(4, |a, b| if b < 2 { a ^ 1 } else { a }).unwrap().with_name("swap:4"));
    v
}

/// Every assignment of colors to arcs, filtered by the crossing relations.
pub fn brute_force_colorings(d: &Diagram, x: &RackTable) -> Vec<Coloring> {
    let n = x.size();
    let arcs = d.arc_count();
    let rels = d.crossing_relations();
    let total = n.pow(arcs as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut col = vec![0; arcs];
        for slot in col.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        if rels.iter().all(|r| col[r.to_under] == x.op(col[r.from_under], col[r.over])) {
            out.push(Coloring { arcs: col });
        }
    }
    out
}

pub fn all_surfaces() -> Vec<(String, SurfaceDiagramData)> {
    vec![
        ("sphere".into(), surface("sphere.surf")),
        ("synthetic".into(), surface("synthetic.surf")),
        ("two sheets".into(), parse_surface("surface\nsheets 3\ndc 1 3 2\n").unwrap()),
    ]
}
