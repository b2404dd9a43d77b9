//! The `knotinv` command line: argument definitions and dispatch.

pub mod report;
pub mod table;

use std::io::Read;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use knotinv_core::diagram::{braid_closure, parse_pd, pretzel, torus2, turks_head, LinkDiagram};
use knotinv_core::formats::{parse_graph, BraidWord};
use knotinv_core::goeritz::{generalized_goeritz, goeritz_data, link_determinant, signature_and_nullity, CrossingType};
use knotinv_core::graph::{diagram_from_graph, kirchhoff, spanning_tree_count, tait_graph};
use knotinv_core::laurent::Var;
use knotinv_core::lattice::{planar_reduce, LatticeWord, Move};
use knotinv_core::poly::{circle_count, kauffman_bracket, potential_bundle, turaev_genus_diagram, StateTag};
use knotinv_core::qa::{abs_det, qa_certify, QaCertificate, QaStatus};
use knotinv_core::seifert::{seifert_data, seifert_matrix};
use knotinv_core::signature::{classical_signature, signature_function, tl_signature, JumpValue, UnitDirection};
use knotinv_core::{catalog, laurent::LaurentPoly};
use serde::Serialize;

use report::*;

#[derive(Parser, Debug)]
#[command(name = "knotinv", version, about = "Exact classical invariants of link diagrams")]
pub struct Cli {
    /// Print an aligned key/value table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pd,
    Braid,
    Graph,
    Lattice,
}

#[derive(Args, Debug)]
pub struct Input {
    /// Input text; read from stdin when absent or `-`.
    pub input: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Determinant, signature, polynomials and diagram statistics.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Largest crossing count for which the bracket state sum runs.
        #[arg(long, default_value_t = 14)]
        bracket_cap: usize,
    },
    /// Goeritz matrix for a checkerboard coloring.
    Goeritz {
        #[command(flatten)]
        input: Input,
        /// Face treated as unbounded (white).
        #[arg(long)]
        unbounded: Option<usize>,
    },
    /// Seifert circles, Seifert matrix and the polynomials it determines.
    Seifert {
        #[command(flatten)]
        input: Input,
    },
    /// Kauffman bracket by state sum.
    Bracket {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// Tristram-Levine signatures at rational unit directions.
    Signature {
        #[command(flatten)]
        input: Input,
        /// Direction `a,b` standing for (a + bi)/|a + bi|; repeatable.
        #[arg(long, value_parser = parse_direction, allow_hyphen_values = true)]
        psi: Vec<UnitDirection>,
        /// Also compute the full signature function (knots only).
        #[arg(long)]
        function: bool,
    },
    /// Search for a quasi-alternating certificate.
    Qa {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 20_000)]
        nodes: usize,
    },
    /// Kirchhoff data and medial diagram of a graph, or the Tait graph of a diagram.
    Graph {
        #[command(flatten)]
        input: Input,
    },
    /// Print the PD code of a family member or catalog entry.
    Construct {
        /// torus2 K | pretzel C1 C2 .. | braid N L1 L2 .. | turkshead N | a catalog name.
        family: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<i64>,
    },
    /// Lattice knot words.
    Lattice {
        #[arg(value_enum)]
        action: LatticeAction,
        /// Word such as `x y X Y`; read from stdin when absent or `-`.
        word: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeAction {
    /// Check closedness and simplicity, with statistics.
    Validate,
    /// Reduce a planar word to the unit square.
    Reduce,
    /// Print the PD code of the projection.
    Project,
}

fn parse_direction(s: &str) -> Result<UnitDirection, String> {
    let (a, b) = s.split_once(',').ok_or("expected `a,b`")?;
    let a: i64 = a.trim().parse().map_err(|_| "`a` must be an integer")?;
    let b: i64 = b.trim().parse().map_err(|_| "`b` must be an integer")?;
    UnitDirection::new(a, b).map_err(|e| e.to_string())
}

fn read_text(arg: &Option<String>, stdin: &mut dyn Read) -> Result<String> {
    match arg.as_deref() {
        Some(t) if t != "-" => Ok(t.to_string()),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Pd => "pd",
        Format::Braid => "braid",
        Format::Graph => "graph",
        Format::Lattice => "lattice",
    }
}

fn parse_diagram(text: &str, format: Format) -> Result<LinkDiagram> {
    Ok(match format {
        Format::Pd => parse_pd(text).map_err(|e| anyhow!("PD: {}", e))?,
        Format::Braid => {
            let b = BraidWord::parse(text).map_err(|e| anyhow!("braid: {}", e))?;
            braid_closure(b.strands, &b.word).map_err(|e| anyhow!("braid: {}", e))?
        }
        Format::Graph => {
            let g = parse_graph(text).map_err(|e| anyhow!("graph: {}", e))?;
            diagram_from_graph(&g).map_err(|e| anyhow!("graph: {}", e))?
        }
        Format::Lattice => {
            let w = LatticeWord::parse(text).map_err(|e| anyhow!("lattice: {}", e))?;
            w.to_diagram().map_err(|e| anyhow!("lattice: {}", e))?
        }
    })
}

fn load(input: &Input, default: Format, stdin: &mut dyn Read) -> Result<(LinkDiagram, InputEcho)> {
    let text = read_text(&input.input, stdin)?;
    let format = input.format.unwrap_or(default);
    let d = parse_diagram(&text, format)?;
    let echo = InputEcho { format: format_name(format).into(), text: text.trim().to_string(), pd: d.to_pd_string() };
    Ok((d, echo))
}

/// Conway polynomial and Alexander polynomial in `t^(1/2)`, both from a
/// Seifert matrix; split diagrams have both equal to zero.
fn polynomials(d: &LinkDiagram) -> Result<(LaurentPoly, LaurentPoly)> {
    if !d.is_connected_projection() {
        return Ok((LaurentPoly::new(), LaurentPoly::new()));
    }
    let v = seifert_matrix(d).map_err(|e| anyhow!("{}", e))?.v;
    let pb = potential_bundle(&v).map_err(|e| anyhow!("{}", e))?;
    Ok((pb.conway.poly, pb.alexander.poly))
}

pub fn invariants(d: &LinkDiagram, input: InputEcho, bracket_cap: usize) -> Result<InvariantReport> {
    let det = link_determinant(d);
    let sn = signature_and_nullity(d);
    let bracket = if d.crossing_count() <= bracket_cap {
        Some(Poly::new(&kauffman_bracket(d, bracket_cap).map_err(|e| anyhow!("{}", e))?, Var::A))
    } else {
        None
    };
    let connected = d.is_connected_projection();
    let (conway, alexander) = polynomials(d)?;
    let sd = if connected { Some(seifert_data(d).map_err(|e| anyhow!("{}", e))?) } else { None };
    Ok(InvariantReport {
        schema: SCHEMA,
        input,
        crossings: d.crossing_count(),
        components: d.component_count(),
        writhe: d.writhe(),
        det_abs: Int(det.axis_abs().expect("determinants lie on an axis")),
        determinant: Gauss::from(&det),
        signature: sn.sigma,
        nullity: sn.nullity,
        conway: Poly::new(&conway, Var::Z),
        alexander: Poly::new(&alexander, Var::THalf),
        bracket,
        genus_diagram: sd.as_ref().map(|s| s.genus),
        seifert_circle_count: sd.as_ref().map(|s| s.s),
        alternating: d.is_alternating(),
        turaev_genus_diagram: if connected { turaev_genus_diagram(d).ok() } else { None },
    })
}

fn goeritz(d: &LinkDiagram, input: InputEcho, unbounded: Option<usize>) -> Result<GoeritzReport> {
    let (fs, col) = d.faces_and_coloring(unbounded).map_err(|e| anyhow!("{}", e))?;
    let gd = goeritz_data(d, &fs, &col).map_err(|e| anyhow!("{}", e))?;
    let sn = signature_and_nullity(d);
    Ok(GoeritzReport {
        schema: SCHEMA,
        input,
        unbounded_face: unbounded.unwrap_or(0),
        white_faces: gd.white_faces.clone(),
        goeritz: matrix(&gd.g),
        goeritz_unreduced: matrix(&gd.g_unreduced),
        crossing_types: gd.ctype.iter().map(|t| if *t == CrossingType::I { "I" } else { "II" }.to_string()).collect(),
        eta: gd.eta.clone(),
        mu: gd.mu,
        beta: gd.beta,
        generalized: matrix(&generalized_goeritz(&gd).h),
        signature: sn.sigma,
        nullity: sn.nullity,
        determinant: Gauss::from(&link_determinant(d)),
    })
}

fn seifert(d: &LinkDiagram, input: InputEcho) -> Result<SeifertReport> {
    let sd = seifert_data(d).map_err(|e| anyhow!("{}", e))?;
    let sm = seifert_matrix(d).map_err(|e| anyhow!("{}", e))?;
    let pb = potential_bundle(&sm.v).map_err(|e| anyhow!("{}", e))?;
    Ok(SeifertReport {
        schema: SCHEMA,
        input,
        circles: sd.circles,
        genus_diagram: sd.genus,
        matrix: matrix(&sm.v),
        basis: sm.basis,
        potential: Poly::new(&pb.omega.poly, Var::X),
        conway: Poly::new(&pb.conway.poly, Var::Z),
        alexander: Poly::new(&pb.alexander.poly, Var::THalf),
        signature: classical_signature(&sm.v),
    })
}

fn bracket(d: &LinkDiagram, input: InputEcho, cap: usize) -> Result<BracketReport> {
    let b = kauffman_bracket(d, cap).map_err(|e| anyhow!("{}", e))?;
    let det = knotinv_core::poly::bracket_determinant(&b, d.writhe()).map_err(|e| anyhow!("{}", e))?;
    Ok(BracketReport {
        schema: SCHEMA,
        input,
        writhe: d.writhe(),
        bracket: Poly::new(&b, Var::A),
        determinant: Gauss::from(&det),
        all_a_circles: circle_count(d, StateTag::AllA),
        all_b_circles: circle_count(d, StateTag::AllB),
    })
}

fn signature(d: &LinkDiagram, input: InputEcho, psi: &[UnitDirection], function: bool) -> Result<SignatureReport> {
    let sn = signature_and_nullity(d);
    let needs_v = !psi.is_empty() || function;
    if needs_v && !d.is_connected_projection() {
        bail!("Tristram-Levine signatures need a connected projection");
    }
    let v = if needs_v { Some(seifert_matrix(d).map_err(|e| anyhow!("{}", e))?.v) } else { None };
    let directions = psi
        .iter()
        .map(|&p| {
            let s = tl_signature(v.as_ref().unwrap(), p);
            DirectionValue { a: p.a, b: p.b, signature: s.sigma, nullity: s.nullity }
        })
        .collect();
    let function = match (&v, function) {
        (Some(v), true) => {
            let f = signature_function(v).map_err(|e| anyhow!("{}", e))?;
            let jumps = f
                .jumps
                .iter()
                .zip(&f.jump_values)
                .map(|(j, val)| JumpReport {
                    re_lo: j.re_lo.to_string(),
                    re_hi: j.re_hi.to_string(),
                    multiplicity: j.multiplicity,
                    value: match val {
                        JumpValue::Exact(x) => vec![*x],
                        JumpValue::Between { min, max } => vec![*min, *max],
                    },
                })
                .collect();
            Some(SignatureFunctionReport { jumps, interval_values: f.interval_values })
        }
        _ => None,
    };
    Ok(SignatureReport { schema: SCHEMA, input, signature: sn.sigma, nullity: sn.nullity, directions, function })
}

fn certificate_node(c: &QaCertificate) -> CertificateNode {
    match c {
        QaCertificate::Leaf { pd } => CertificateNode { pd: pd.clone(), crossing: None, dets: None, children: Vec::new() },
        QaCertificate::Node { pd, crossing, dets, zero, infinity } => CertificateNode {
            pd: pd.clone(),
            crossing: Some(*crossing),
            dets: Some([Int::from(&dets.whole), Int::from(&dets.zero), Int::from(&dets.infinity)]),
            children: vec![certificate_node(zero), certificate_node(infinity)],
        },
    }
}

fn qa(d: &LinkDiagram, input: InputEcho, depth: usize, nodes: usize) -> Result<QaReportJson> {
    let r = qa_certify(d, depth, nodes).map_err(|e| anyhow!("{}", e))?;
    Ok(QaReportJson {
        schema: SCHEMA,
        input,
        status: if r.status == QaStatus::Certified { "certified" } else { "unknown" }.into(),
        det_abs: Int(r.det),
        qacti_lower: r.qacti_lower,
        qacti_upper: r.qacti_upper,
        det_bound_upper: Int(r.det_bound_upper),
        nodes_explored: r.nodes_explored,
        budget_exhausted: r.budget_exhausted,
        certificate: r.certificate.as_ref().map(certificate_node),
    })
}

fn graph(text: &str, format: Format) -> Result<GraphReport> {
    let g = if format == Format::Graph {
        parse_graph(text).map_err(|e| anyhow!("graph: {}", e))?
    } else {
        let d = parse_diagram(text, format)?;
        let (fs, col) = d.faces_and_coloring(None).map_err(|e| anyhow!("{}", e))?;
        tait_graph(&d, &fs, &col)
    };
    let medial_pd = if g.rotation.is_some() { diagram_from_graph(&g).ok().map(|d| d.to_pd_string()) } else { None };
    Ok(GraphReport {
        schema: SCHEMA,
        vertices: g.vertex_count,
        edges: g.edges.clone(),
        rotation: g.rotation.clone(),
        kirchhoff: matrix(&kirchhoff(&g).kirchhoff),
        spanning_trees: Int(spanning_tree_count(&g)),
        medial_pd,
    })
}

pub fn construct(family: &str, params: &[i64]) -> Result<LinkDiagram> {
    let one = |what: &str| -> Result<i64> {
        match params {
            [k] => Ok(*k),
            _ => bail!("{} takes exactly one parameter", what),
        }
    };
    let err = |e: knotinv_core::diagram::DiagramError| anyhow!("{}", e);
    Ok(match family {
        "torus2" => torus2(one("torus2")?),
        "turkshead" => {
            let n = one("turkshead")?;
            if n < 1 {
                bail!("turkshead needs n >= 1");
            }
            turks_head(n as usize)
        }
        "pretzel" => pretzel(params).map_err(err)?,
        "braid" => {
            let (&n, word) = params.split_first().ok_or_else(|| anyhow!("braid takes a strand count and letters"))?;
            if n < 1 {
                bail!("strand count must be positive");
            }
            braid_closure(n as usize, word).map_err(err)?
        }
        name => {
            if !params.is_empty() {
                bail!("catalog entries take no parameters");
            }
            catalog::named(name).ok_or_else(|| anyhow!("unknown family or catalog name `{}`", name))?
        }
    })
}

fn lattice_validate(w: &LatticeWord) -> Result<LatticeReport> {
    let d = w.to_diagram().map_err(|e| anyhow!("{}", e))?;
    let st = w.axis_stats();
    let planar = w.plane().is_some();
    Ok(LatticeReport {
        schema: SCHEMA,
        ok: true,
        word: w.to_text(),
        edges: w.len(),
        right_angles: w.right_angles(),
        plane_changes: w.plane_changes(),
        axis_steps: [0, 1, 2].map(|i| (st[i].positive, st[i].negative)),
        planar,
        area: if planar { w.area().ok() } else { None },
        pd: d.to_pd_string(),
        det_abs: Int(abs_det(&d)),
    })
}

fn move_text(mv: Move) -> String {
    match mv {
        Move::Dh1 { corner } => format!("DH1 corner {}", corner),
        Move::Dh2 { edge, normal } => format!("DH2 edge {} normal {}", edge, normal.letter()),
        Move::Dh2Inv { edge } => format!("DH2^-1 edge {}", edge),
    }
}

fn emit<T: Serialize>(value: &T, table: bool) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(if table { table::render(&v) } else { serde_json::to_string_pretty(&v)? + "\n" })
}

/// Runs one parsed command and returns what it prints.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let t = cli.table;
    match &cli.command {
        Command::Invariants { input, bracket_cap } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&invariants(&d, echo, *bracket_cap)?, t)
        }
        Command::Goeritz { input, unbounded } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&goeritz(&d, echo, *unbounded)?, t)
        }
        Command::Seifert { input } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&seifert(&d, echo)?, t)
        }
        Command::Bracket { input, cap } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&bracket(&d, echo, *cap)?, t)
        }
        Command::Signature { input, psi, function } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&signature(&d, echo, psi, *function)?, t)
        }
        Command::Qa { input, depth, nodes } => {
            let (d, echo) = load(input, Format::Pd, stdin)?;
            emit(&qa(&d, echo, *depth, *nodes)?, t)
        }
        Command::Graph { input } => {
            let text = read_text(&input.input, stdin)?;
            let g = graph(&text, input.format.unwrap_or(Format::Graph))?;
            emit(&g, t)
        }
        Command::Construct { family, params } => Ok(construct(family, params)?.to_pd_string() + "\n"),
        Command::Lattice { action, word } => {
            let text = read_text(word, stdin)?;
            let w = LatticeWord::parse(&text).map_err(|e| anyhow!("lattice: {}", e))?;
            match action {
                LatticeAction::Validate => emit(&lattice_validate(&w)?, t),
                LatticeAction::Project => Ok(w.to_diagram().map_err(|e| anyhow!("{}", e))?.to_pd_string() + "\n"),
                LatticeAction::Reduce => {
                    let steps = planar_reduce(&w).map_err(|e| anyhow!("lattice: {}", e))?;
                    let report = ReductionReport {
                        schema: SCHEMA,
                        word: w.to_text(),
                        area: w.area().map_err(|e| anyhow!("{}", e))?,
                        steps: steps
                            .iter()
                            .map(|s| ReductionEntry { mv: move_text(s.mv), word: s.word.to_text(), area: s.area })
                            .collect(),
                    };
                    emit(&report, t)
                }
            }
        }
    }
}
