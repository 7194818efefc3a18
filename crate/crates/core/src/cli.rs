//! Command-line front end. [`run`] parses arguments and returns the text
//! and exit code; `main` only prints them.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{builtin, parse_table, RackTable};
use crate::coloring::{
    count_colorings_with, enumerate_colorings_with, enumerate_shadow_colorings_with, enumerate_surface_colorings,
    framed_only, Coloring,
};
use crate::diagram::{
    braid_closure, parse_braid, parse_pd, parse_surface, torus_diagram, Diagram, Flavor, SurfaceDiagramData,
};
use crate::error::{Error, Result};
use crate::homology::{
    cocycle_failure, cohomology, homology, homology_with_coefficients, is_coboundary, parse_cochain_for, Cochain,
    Theory,
};
use crate::invariant::{state_sum_2_with, state_sum_shadow_with, state_sum_surface_with, StateSumOptions};

const BUNDLED: &[(&str, &str)] = &[
    ("theta_R3.cochain", include_str!("../data/theta_R3.cochain")),
    ("trefoil.pd", include_str!("../data/trefoil.pd")),
    ("3_1.pd", include_str!("../data/trefoil.pd")),
    ("4_1.pd", include_str!("../data/4_1.pd")),
    ("6_1.pd", include_str!("../data/6_1.pd")),
    ("7_4.pd", include_str!("../data/7_4.pd")),
    ("7_7.pd", include_str!("../data/7_7.pd")),
    ("unknot.pd", include_str!("../data/unknot.pd")),
    ("sphere.surf", include_str!("../data/sphere.surf")),
    ("synthetic.surf", include_str!("../data/synthetic.surf")),
    ("badtable.txt", include_str!("../data/badtable.txt")),
];

/// Contents of a data file shipped with the crate, looked up by file name.
pub fn bundled(name: &str) -> Option<&'static str> {
    let base = Path::new(name).file_name()?.to_str()?;
    BUNDLED.iter().find(|(n, _)| *n == base).map(|(_, text)| *text)
}

#[derive(Parser, Debug)]
#[command(
    name = "quandle",
    version,
    about = "Finite quandles, knot colorings, quandle homology and cocycle invariants"
)]
struct Cli {
    /// Treat every spec as a file path (no built-in names, no bundled data).
    #[arg(long, global = true)]
    file: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classify an operation table as kei, quandle, rack or not-a-rack.
    Check { quandle: String },
    /// Count or list colorings of a diagram (PD, braid, torus:p:q or surface data).
    Color(ColorArgs),
    /// Cocycle state-sum invariant.
    Invariant(InvariantArgs),
    /// Integral homology, or homology with Z_d coefficients.
    Homology {
        quandle: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value = "R")]
        theory: String,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Cocycle and coboundary groups, or verification of a cochain file.
    Cocycles {
        quandle: String,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long = "mod")]
        modulus: Option<u64>,
        #[arg(long, default_value = "Q")]
        theory: String,
        #[arg(long)]
        verify: Option<String>,
    },
    /// Crossings, arcs, regions and presentation of a diagram.
    Diagram {
        #[arg(required_unless_present = "braid")]
        diagram: Option<String>,
        #[arg(long)]
        braid: Option<String>,
        #[arg(long, value_enum, default_value = "quandle")]
        flavor: FlavorArg,
    },
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// `[DIAGRAM] QUANDLE`; the diagram is omitted when `--braid` is given.
    #[arg(num_args = 1..=2, required = true)]
    specs: Vec<String>,
    #[arg(long)]
    braid: Option<String>,
    #[arg(long)]
    count: bool,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    shadow: bool,
    /// Keep only colorings using every element.
    #[arg(long)]
    surjective: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    /// `[DIAGRAM] QUANDLE COCHAIN`; the diagram is omitted when `--braid` is given.
    #[arg(num_args = 2..=3, required = true)]
    specs: Vec<String>,
    #[arg(long)]
    braid: Option<String>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Skip the cocycle test; the result is then not a knot invariant in general.
    #[arg(long)]
    unsafe_no_cocycle_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    #[value(name = "2")]
    Two,
    Shadow,
    Surface,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Kei,
    Quandle,
    Rack,
}

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let mut out = String::new();
    match dispatch(&cli, &mut out) {
        Ok(code) => Outcome { stdout: out, stderr: String::new(), code },
        Err(e) => Outcome { stdout: out, stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

fn read_spec(spec: &str, force_file: bool) -> Result<String> {
    match std::fs::read_to_string(spec) {
        Ok(text) => Ok(text),
        Err(e) if force_file => Err(Error::parse(0, format!("cannot read `{spec}`: {e}"))),
        Err(e) => bundled(spec).map(str::to_owned).ok_or_else(|| Error::parse(0, format!("cannot read `{spec}`: {e}"))),
    }
}

fn load_quandle(spec: &str, force_file: bool) -> Result<RackTable> {
    if !force_file && spec.contains(':') && !Path::new(spec).exists() {
        return builtin(spec);
    }
    let x = parse_table(&read_spec(spec, force_file)?)?;
    let name = Path::new(spec).file_name().and_then(|n| n.to_str()).unwrap_or(spec).to_owned();
    Ok(x.with_name(name))
}

enum Input {
    Knot(Diagram),
    Surface(SurfaceDiagramData),
}

fn load_input(spec: Option<&str>, braid: Option<&str>, force_file: bool) -> Result<Input> {
    if let Some(w) = braid {
        return Ok(Input::Knot(braid_closure(&parse_braid(w)?)?));
    }
    let spec = spec.ok_or_else(|| Error::parse(0, "missing diagram"))?;
    if !force_file && !Path::new(spec).exists() {
        if let Some(rest) = spec.strip_prefix("torus:") {
            let (p, q) = rest.split_once(':').ok_or_else(|| Error::parse(0, "expected torus:<p>:<q>"))?;
            let p = p.parse().map_err(|_| Error::parse(0, format!("bad torus p `{p}`")))?;
            let q = q.parse().map_err(|_| Error::parse(0, format!("bad torus q `{q}`")))?;
            return Ok(Input::Knot(torus_diagram(p, q)?));
        }
    }
    let text = read_spec(spec, force_file)?;
    let first = text.lines().map(|l| crate::algebra::io::strip_comment(l).trim()).find(|l| !l.is_empty()).unwrap_or("");
    if first == "surface" {
        Ok(Input::Surface(parse_surface(&text)?))
    } else if first.starts_with("braid") {
        Ok(Input::Knot(braid_closure(&parse_braid(&text)?)?))
    } else {
        Ok(Input::Knot(parse_pd(&text)?))
    }
}

fn split_diagram<'a>(
    specs: &'a [String],
    braid: &Option<String>,
    rest: usize,
) -> Result<(Option<&'a str>, &'a [String])> {
    let want = rest + usize::from(braid.is_none());
    if specs.len() != want {
        let what = if braid.is_some() { "with --braid, omit the diagram argument" } else { "missing argument" };
        return Err(Error::parse(0, format!("expected {want} positional arguments ({what})")));
    }
    if braid.is_some() {
        Ok((None, specs))
    } else {
        Ok((Some(specs[0].as_str()), &specs[1..]))
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32> {
    let ff = cli.file;
    match &cli.cmd {
        Cmd::Check { quandle } => cmd_check(&load_quandle(quandle, ff)?, out),
        Cmd::Color(a) => cmd_color(a, ff, out),
        Cmd::Invariant(a) => cmd_invariant(a, ff, out),
        Cmd::Homology { quandle, degree, theory, modulus } => {
            let x = load_quandle(quandle, ff)?;
            let theory: Theory = theory.parse()?;
            let g = match modulus {
                Some(d) => homology_with_coefficients(&x, *degree, theory, *d)?,
                None => homology(&x, *degree, theory)?,
            };
            writeln!(out, "{g}").unwrap();
            let torsion: Vec<String> = g.torsion.iter().map(u64::to_string).collect();
            writeln!(
                out,
                "#data homology degree={degree} theory={theory} coefficients={} rank={} torsion={}",
                modulus.map_or("Z".to_string(), |d| format!("Z_{d}")),
                g.rank,
                torsion.join(",")
            )
            .unwrap();
            Ok(0)
        }
        Cmd::Cocycles { quandle, degree, modulus, theory, verify } => {
            let x = load_quandle(quandle, ff)?;
            let theory: Theory = theory.parse()?;
            match verify {
                Some(file) => cmd_verify(&x, file, *degree, *modulus, theory, ff, out),
                None => {
                    let n = degree.ok_or_else(|| Error::parse(0, "--degree is required without --verify"))?;
                    let d = modulus.ok_or_else(|| Error::parse(0, "--mod is required without --verify"))?;
                    let c = cohomology(&x, n, theory, d)?;
                    writeln!(out, "cocycles: {}", c.cocycles).unwrap();
                    writeln!(out, "coboundaries: {}", c.coboundaries).unwrap();
                    writeln!(out, "cohomology: {}", c.cohomology).unwrap();
                    let dim = |g: Option<usize>| g.map_or("-".to_string(), |v| v.to_string());
                    writeln!(
                        out,
                        "#data cocycles degree={n} theory={theory} mod={d} cocycle_dim={} coboundary_dim={} cohomology_order={}",
                        dim(c.cocycle_dim()),
                        dim(c.coboundary_dim()),
                        c.cohomology.torsion.iter().product::<u64>()
                    )
                    .unwrap();
                    Ok(0)
                }
            }
        }
        Cmd::Diagram { diagram, braid, flavor } => {
            let flavor = match flavor {
                FlavorArg::Kei => Flavor::Kei,
                FlavorArg::Quandle => Flavor::Quandle,
                FlavorArg::Rack => Flavor::Rack,
            };
            match load_input(diagram.as_deref(), braid.as_deref(), ff)? {
                Input::Knot(d) => {
                    writeln!(
                        out,
                        "crossings: {}\narcs: {}\nregions: {}\ncomponents: {}\nwrithe: {}",
                        d.crossing_count(),
                        d.arc_count(),
                        d.region_count(),
                        d.component_count(),
                        d.writhe()
                    )
                    .unwrap();
                    writeln!(out, "presentation: {}", d.presentation(flavor)).unwrap();
                    writeln!(
                        out,
                        "#data diagram crossings={} arcs={} regions={} components={} writhe={}",
                        d.crossing_count(),
                        d.arc_count(),
                        d.region_count(),
                        d.component_count(),
                        d.writhe()
                    )
                    .unwrap();
                }
                Input::Surface(sd) => {
                    writeln!(
                        out,
                        "sheets: {}\ndouble curves: {}\ntriple points: {}",
                        sd.sheets,
                        sd.double_curves.len(),
                        sd.triple_points.len()
                    )
                    .unwrap();
                    writeln!(
                        out,
                        "#data surface sheets={} double_curves={} triple_points={}",
                        sd.sheets,
                        sd.double_curves.len(),
                        sd.triple_points.len()
                    )
                    .unwrap();
                }
            }
            Ok(0)
        }
    }
}

fn cmd_check(x: &RackTable, out: &mut String) -> Result<i32> {
    let class = x.class();
    if let Some(v) = &x.classification().violation {
        if !x.is_rack() {
            writeln!(out, "{class}: {v}").unwrap();
            writeln!(out, "#data check class={class} order={} axiom={}", x.size(), v.axiom.label()).unwrap();
            return Ok(1);
        }
    }
    let orbits = x.orbits().len();
    writeln!(out, "{class} (order {}, orbits {orbits})", x.size()).unwrap();
    if let Some(v) = &x.classification().violation {
        writeln!(out, "not a {}: {v}", if x.is_quandle() { "kei" } else { "quandle" }).unwrap();
    }
    writeln!(out, "#data check class={class} order={} orbits={orbits}", x.size()).unwrap();
    Ok(0)
}

fn cmd_color(a: &ColorArgs, ff: bool, out: &mut String) -> Result<i32> {
    let (dspec, rest) = split_diagram(&a.specs, &a.braid, 1)?;
    let x = load_quandle(&rest[0], ff)?;
    let input = load_input(dspec, a.braid.as_deref(), ff)?;
    if framed_only(&x) {
        writeln!(out, "note: {} is a rack, not a quandle; counts are framed-diagram data only", x.class()).unwrap();
    }
    let n = x.size();
    let list = a.list && !a.count;
    match input {
        Input::Surface(sd) => {
            if a.shadow {
                return Err(Error::InvalidArgument("shadow colorings are defined for classical diagrams".into()));
            }
            let cols: Vec<_> = enumerate_surface_colorings(&sd, &x)?
                .into_iter()
                .filter(|c| !a.surjective || Coloring { arcs: c.sheets.clone() }.is_surjective(n))
                .collect();
            if list {
                for c in &cols {
                    writeln!(out, "{}", join(&c.sheets)).unwrap();
                }
            }
            writeln!(out, "colorings: {}", cols.len()).unwrap();
            writeln!(out, "#data colorings={}", cols.len()).unwrap();
        }
        Input::Knot(d) if a.shadow => {
            let sh: Vec<_> = enumerate_shadow_colorings_with(&d, &x, a.jobs)?
                .into_iter()
                .filter(|s| !a.surjective || s.coloring.is_surjective(n))
                .collect();
            if list {
                for s in &sh {
                    writeln!(out, "arcs {} | regions {}", join(&s.coloring.arcs), join(&s.regions)).unwrap();
                }
            }
            writeln!(out, "shadow-colorings: {}", sh.len()).unwrap();
            writeln!(out, "#data shadow-colorings={}", sh.len()).unwrap();
        }
        Input::Knot(d) => {
            let (total, constant) = if list || a.surjective {
                let cols: Vec<_> = enumerate_colorings_with(&d, &x, a.jobs)?
                    .into_iter()
                    .filter(|c| !a.surjective || c.is_surjective(n))
                    .collect();
                if list {
                    for c in &cols {
                        writeln!(out, "{}", join(&c.arcs)).unwrap();
                    }
                }
                (cols.len(), cols.iter().filter(|c| c.is_trivial()).count())
            } else {
                // constant colorings are the idempotents a*a = a (all of X for a quandle)
                let constant = (0..n).filter(|&e| x.op(e, e) == e).count();
                (count_colorings_with(&d, &x, a.jobs)?, constant)
            };
            writeln!(out, "colorings: {total}").unwrap();
            writeln!(out, "constant: {constant}").unwrap();
            writeln!(out, "#data colorings={total} constant={constant}").unwrap();
        }
    }
    Ok(0)
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_invariant(a: &InvariantArgs, ff: bool, out: &mut String) -> Result<i32> {
    let (dspec, rest) = split_diagram(&a.specs, &a.braid, 2)?;
    let x = load_quandle(&rest[0], ff)?;
    let cochain = parse_cochain_for(&read_spec(&rest[1], ff)?, x.size())?;
    let input = load_input(dspec, a.braid.as_deref(), ff)?;
    let opts = StateSumOptions { check_cocycle: !a.unsafe_no_cocycle_check, jobs: a.jobs };
    let mode = a.mode.unwrap_or(match (&input, cochain.degree()) {
        (Input::Surface(_), _) => Mode::Surface,
        (_, 2) => Mode::Two,
        _ => Mode::Shadow,
    });
    let value = match (mode, &input) {
        (Mode::Two, Input::Knot(d)) => state_sum_2_with(d, &x, &cochain, opts)?,
        (Mode::Shadow, Input::Knot(d)) => state_sum_shadow_with(d, &x, &cochain, opts)?,
        (Mode::Surface, Input::Surface(sd)) => state_sum_surface_with(sd, &x, &cochain, opts)?,
        (Mode::Surface, Input::Knot(_)) => {
            return Err(Error::InvalidArgument("--mode surface needs surface diagram data".into()))
        }
        (_, Input::Surface(_)) => {
            return Err(Error::InvalidArgument("surface data only supports --mode surface".into()))
        }
    };
    if a.unsafe_no_cocycle_check {
        writeln!(out, "{value} (cocycle condition not checked; not necessarily invariant)").unwrap();
    } else {
        writeln!(out, "{value}").unwrap();
    }
    writeln!(out, "#data {}", value.data_line()).unwrap();
    Ok(0)
}

fn cmd_verify(
    x: &RackTable,
    file: &str,
    degree: Option<usize>,
    modulus: Option<u64>,
    theory: Theory,
    ff: bool,
    out: &mut String,
) -> Result<i32> {
    let phi: Cochain = parse_cochain_for(&read_spec(file, ff)?, x.size())?;
    if degree.is_some_and(|n| n != phi.degree()) || modulus.is_some_and(|d| d != phi.modulus()) {
        return Err(Error::InvalidArgument(format!(
            "cochain file has degree {} mod {}, which does not match the requested --degree/--mod",
            phi.degree(),
            phi.modulus()
        )));
    }
    match cocycle_failure(x, &phi, theory)? {
        Some(fail) => {
            writeln!(out, "cocycle: no ({fail})").unwrap();
            writeln!(out, "#data verify cocycle=no").unwrap();
            Ok(1)
        }
        None => {
            let cob = is_coboundary(x, &phi, theory)?;
            writeln!(out, "cocycle: yes; coboundary: {}", if cob { "yes" } else { "no" }).unwrap();
            writeln!(out, "#data verify cocycle=yes coboundary={}", if cob { "yes" } else { "no" }).unwrap();
            Ok(0)
        }
    }
}
