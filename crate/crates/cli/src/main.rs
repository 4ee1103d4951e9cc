//! `signhom`: command-line front end.
//!
//! Structured output is canonical JSON on stdout, diagnostics go to stderr.
//! Exit status 0 means success or "yes", 1 a "no" answer, 2 a usage or
//! data error.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use signhom::claims::{run_claims, ClaimStatus};
use signhom::constructions::{
    check_forcing, double_identify, edge_replace, indicator_apply_full, path_replace, rho, Indicator,
};
use signhom::embedding::certify_embedding;
use signhom::families;
use signhom::hom::{self, SearchConfig, CORE_BOUND};
use signhom::io;
use signhom::reductions::{self, GadgetKind};
use signhom::{Error, Graph, SwitchSet};

#[derive(Parser)]
#[command(name = "signhom", version, about = "Signed graph homomorphisms, gadgets and reductions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family.
    Gen(GenArgs),
    /// Decide (or enumerate) homomorphisms or s-homomorphisms G -> H.
    Solve(SolveArgs),
    /// Core of a graph.
    Core(CoreArgs),
    /// s-core of a signed graph.
    Score(CoreArgs),
    /// Isomorphism G -> H.
    Iso { g: PathBuf, h: PathBuf },
    /// Switching graph rho(H).
    Rho { h: PathBuf },
    /// Apply the indicator (I, A, B) to H.
    Indicator {
        h: PathBuf,
        indicator: PathBuf,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Replace every edge of G by the indicator (I, A, B).
    EdgeReplace {
        g: PathBuf,
        indicator: PathBuf,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Replace the edges between two vertices by a path.
    PathReplace {
        h: PathBuf,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        len: usize,
    },
    /// Two copies of J glued at A of one and B of the other, and vice versa.
    Double {
        j: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Image tuples of the given vertices over all homomorphisms G -> H.
    CheckForcing {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Emit a gadget with its ports.
    Gadget(GadgetArgs),
    /// Run a reduction on a planar instance.
    Reduce(ReduceArgs),
    /// Re-check the claims registry.
    Verify {
        pattern: Option<String>,
        /// Per-claim budget in seconds.
        #[arg(long, default_value_t = 600.0)]
        budget: f64,
        /// Also write the report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Girth, bipartiteness, maximum degree and component count.
    Stats { g: PathBuf },
    /// Switch G at a set of vertices.
    Switch {
        g: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether G is balanced.
    Balanced { g: PathBuf },
    /// A switching set turning G1 into G2.
    EquivSwitch { g1: PathBuf, g2: PathBuf },
    /// Check the rotation stored with G against Euler's formula.
    CertifyEmbedding { g: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Uc,
    CycleSquare,
    CircularClique,
    Complete,
    Path,
    Random,
}

#[derive(Args)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge signs for `cycle`, e.g. `+,+,-` or `1,1,-1`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    signs: Option<Vec<String>>,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Mode {
    Hom,
    Shom,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value = "hom")]
    mode: Mode,
    g: PathBuf,
    h: PathBuf,
    /// List up to N witnesses instead of one.
    #[arg(long)]
    enumerate: Option<usize>,
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
struct CoreArgs {
    g: PathBuf,
    #[arg(long, default_value_t = CORE_BOUND)]
    bound: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Copy,
    Split,
    Crossing,
    Vertex,
    Degree,
}

#[derive(Args)]
struct GadgetArgs {
    kind: Kind,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct OutArgs {
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Sidecar certificate path; defaults to `<output>.cert.json`.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    #[value(name = "3col-to-uc4")]
    ThreeColToUc4,
    CycleSquare,
}

#[derive(Args)]
struct ReduceArgs {
    reduction: Reduction,
    g: PathBuf,
    #[arg(long)]
    t: Option<usize>,
    #[command(flatten)]
    out: OutArgs,
}

/// Outcome of a subcommand that ran to completion.
enum Answer {
    Yes,
    No,
}

type Run = std::result::Result<Answer, Error>;

fn read_graph(path: &Path) -> signhom::Result<Graph> {
    let s = fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    io::graph_from_json(&s)
}

fn write_atomic(path: &Path, body: &str) -> signhom::Result<()> {
    let tmp = path.with_extension("tmp~");
    fs::write(&tmp, body)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display())))
}

/// Writes one line to stdout; a closed pipe is not an error.
fn out_line(s: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{s}");
}

fn emit(value: &Value) {
    out_line(&value.to_string());
}

fn emit_graph(g: &Graph, output: Option<&Path>) -> signhom::Result<()> {
    let s = io::graph_to_json(g);
    match output {
        Some(p) => write_atomic(p, &s),
        None => {
            out_line(&s);
            Ok(())
        }
    }
}

fn cert_path(out: &OutArgs) -> Option<PathBuf> {
    out.cert.clone().or_else(|| {
        out.output
            .as_ref()
            .map(|p| p.with_extension("").with_extension("cert.json"))
    })
}

fn emit_with_cert(g: &Graph, cert: Value, out: &OutArgs) -> signhom::Result<()> {
    emit_graph(g, out.output.as_deref())?;
    if let Some(p) = cert_path(out) {
        write_atomic(&p, &cert.to_string())?;
    }
    Ok(())
}

fn need(name: &str, v: Option<usize>) -> signhom::Result<usize> {
    v.ok_or_else(|| Error::BadParameter(format!("--{name} is required here")))
}

fn parse_sign(s: &str) -> signhom::Result<i32> {
    match s.trim() {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        other => Err(Error::BadParameter(format!("sign `{other}` is not +1/-1"))),
    }
}

fn gen(a: &GenArgs) -> Run {
    let g = match a.family {
        Family::Cycle => {
            let signs = a
                .signs
                .as_ref()
                .map(|s| s.iter().map(|x| parse_sign(x)).collect::<signhom::Result<Vec<_>>>())
                .transpose()?;
            families::gen_cycle(need("t", a.t)?, signs.as_deref())?
        }
        Family::Uc => families::gen_uc(2 * need("k", a.k)?)?,
        Family::CycleSquare => families::gen_cycle_square(need("t", a.t)?)?,
        Family::CircularClique => families::gen_circular_clique(need("p", a.p)?, need("q", a.q)?)?,
        Family::Complete => families::gen_complete(need("n", a.n)?)?,
        Family::Path => families::gen_path(need("n", a.n)?)?,
        Family::Random => families::gen_random_signed(need("n", a.n)?, a.density, a.seed)?,
    };
    emit_graph(&g, a.output.as_deref())?;
    Ok(Answer::Yes)
}

fn solve(a: &SolveArgs) -> Run {
    let g = read_graph(&a.g)?;
    let h = read_graph(&a.h)?;
    let mut cfg = if a.deterministic {
        SearchConfig::deterministic()
    } else {
        SearchConfig::default()
    };
    let target = match a.mode {
        Mode::Hom => h.clone(),
        Mode::Shom => {
            g.require_signed()?;
            rho(&h)?
        }
    };
    let witness = |f: &hom::Homomorphism| -> Value {
        match a.mode {
            Mode::Hom => io::hom_witness(&g, &h, f),
            Mode::Shom => {
                let mask: Vec<bool> = f.assignment.iter().map(|&t| t % 2 == 1).collect();
                let w = hom::SHomWitness {
                    switch_set: SwitchSet::from_mask(&g, &mask),
                    hom: hom::Homomorphism::new(f.assignment.iter().map(|&t| t / 2).collect()),
                };
                io::shom_witness(&g, &h, &w)
            }
        }
    };
    if let Some(n) = a.enumerate {
        cfg.limit = Some(n);
        let (homs, complete) = hom::enumerate_homs_bounded(&g, &target, &cfg)?;
        let list: Vec<Value> = homs.iter().map(witness).collect();
        emit(&json!({ "complete": complete, "count": list.len(), "witnesses": list }));
        return Ok(if homs.is_empty() { Answer::No } else { Answer::Yes });
    }
    match hom::find_hom(&g, &target, &cfg)? {
        Some(f) => {
            emit(&witness(&f));
            Ok(Answer::Yes)
        }
        None => Ok(Answer::No),
    }
}

fn indicator(path: &Path, i: &str, j: &str) -> signhom::Result<Indicator> {
    Indicator::new(read_graph(path)?, i, j)
}

fn gadget(a: &GadgetArgs) -> Run {
    let kind = match a.kind {
        Kind::Copy => GadgetKind::Copy,
        Kind::Split => GadgetKind::Split,
        Kind::Crossing => GadgetKind::Crossing,
        Kind::Vertex => GadgetKind::Vertex(need("d", a.d)?),
        Kind::Degree => GadgetKind::Degree {
            k: need("k", a.k)?,
            m: need("m", a.m)?,
        },
    };
    let gd = reductions::gadget(kind)?;
    let ports: serde_json::Map<String, Value> = gd.ports.iter().map(|(r, v)| (r.clone(), json!(v))).collect();
    let cert = json!({
        "ports": ports,
        "rotation": gd.graph.rotation().map(|r| io::rotation_to_value(&gd.graph, r)),
        "zeros": gd.zeros,
    });
    emit_with_cert(&gd.graph, cert, &a.out)?;
    Ok(Answer::Yes)
}

fn reduce(a: &ReduceArgs) -> Run {
    let g = read_graph(&a.g)?;
    let (out, cert) = match a.reduction {
        Reduction::ThreeColToUc4 => {
            let rot = g.rotation().ok_or(Error::MissingEmbedding)?.clone();
            reductions::reduce_3col_to_uc4(&g, &rot)?
        }
        Reduction::CycleSquare => {
            let rot = g.rotation().cloned();
            reductions::reduce_to_cycle_square(&g, need("t", a.t)?, rot.as_ref())?
        }
    };
    emit_with_cert(&out, io::certificate_to_value(&out, &cert), &a.out)?;
    Ok(Answer::Yes)
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::Gen(a) => gen(&a),
        Command::Solve(a) => solve(&a),
        Command::Core(a) => {
            let c = hom::core_of_bounded(&read_graph(&a.g)?, a.bound)?;
            emit_graph(&c, a.output.as_deref())?;
            Ok(Answer::Yes)
        }
        Command::Score(a) => {
            let c = hom::score_of_bounded(&read_graph(&a.g)?, a.bound)?;
            emit_graph(&c, a.output.as_deref())?;
            Ok(Answer::Yes)
        }
        Command::Iso { g, h } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            match hom::find_iso(&g, &h)? {
                Some(f) => {
                    emit(&io::hom_witness(&g, &h, &f));
                    Ok(Answer::Yes)
                }
                None => Ok(Answer::No),
            }
        }
        Command::Rho { h } => {
            emit_graph(&rho(&read_graph(&h)?)?, None)?;
            Ok(Answer::Yes)
        }
        Command::Indicator { h, indicator: ip, i, j } => {
            let out = indicator_apply_full(&read_graph(&h)?, &indicator(&ip, &i, &j)?)?;
            if !out.dropped_loops.is_empty() {
                eprintln!(
                    "warning: {} pinned maps with i and j on one vertex were dropped: {}",
                    out.dropped_loops.len(),
                    out.dropped_loops.join(", ")
                );
            }
            emit_graph(&out.graph, None)?;
            Ok(Answer::Yes)
        }
        Command::EdgeReplace { g, indicator: ip, i, j } => {
            let g = read_graph(&g)?;
            let out = edge_replace(&g, &indicator(&ip, &i, &j)?, g.rotation())?;
            emit_graph(&out, None)?;
            Ok(Answer::Yes)
        }
        Command::PathReplace { h, x, y, len } => {
            emit_graph(&path_replace(&read_graph(&h)?, &x, &y, len)?, None)?;
            Ok(Answer::Yes)
        }
        Command::Double { j, a, b } => {
            emit_graph(&double_identify(&read_graph(&j)?, &a, &b)?, None)?;
            Ok(Answer::Yes)
        }
        Command::CheckForcing { g, h, vertices, limit } => {
            let rep = check_forcing(&read_graph(&g)?, &vertices, &read_graph(&h)?, limit)?;
            emit(&json!({
                "forced": rep.forced,
                "hom_exists": rep.hom_exists,
                "tuples": rep.tuples,
                "vertices": rep.vertices,
            }));
            Ok(if rep.forced && rep.hom_exists { Answer::Yes } else { Answer::No })
        }
        Command::Gadget(a) => gadget(&a),
        Command::Reduce(a) => reduce(&a),
        Command::Verify { pattern, budget, json: out } => {
            if !(budget.is_finite() && budget >= 0.0) {
                return Err(Error::BadParameter(format!("budget {budget} must be a non-negative number")));
            }
            let reports = run_claims(pattern.as_deref(), Duration::from_secs_f64(budget))?;
            let body = serde_json::to_value(&reports).map_err(|e| Error::Format(e.to_string()))?;
            for r in &reports {
                eprintln!("{:<22} {:?} {:.2}s", r.id, r.status, r.runtime_s);
            }
            if let Some(p) = out {
                write_atomic(&p, &body.to_string())?;
            }
            emit(&body);
            Ok(if reports.iter().any(|r| r.status == ClaimStatus::Refuted) {
                Answer::No
            } else {
                Answer::Yes
            })
        }
        Command::Stats { g } => {
            let s = read_graph(&g)?.stats();
            emit(&json!({
                "bipartite": s.bipartite,
                "connected_components": s.connected_components,
                "girth": s.girth,
                "max_degree": s.max_degree,
            }));
            Ok(Answer::Yes)
        }
        Command::Switch { g, set, output } => {
            let g = read_graph(&g)?;
            let s = SwitchSet::new(set.into_iter().filter(|x| !x.is_empty()).collect::<BTreeSet<_>>());
            emit_graph(&g.switch(&s)?, output.as_deref())?;
            Ok(Answer::Yes)
        }
        Command::Balanced { g } => {
            let b = read_graph(&g)?.is_balanced()?;
            emit(&json!({ "balanced": b }));
            Ok(if b { Answer::Yes } else { Answer::No })
        }
        Command::EquivSwitch { g1, g2 } => match read_graph(&g1)?.switching_equivalent(&read_graph(&g2)?)? {
            Some(s) => {
                emit(&json!({ "switch_set": s.members() }));
                Ok(Answer::Yes)
            }
            None => Ok(Answer::No),
        },
        Command::CertifyEmbedding { g } => {
            let g = read_graph(&g)?;
            let r = g.rotation().ok_or(Error::MissingEmbedding)?;
            match certify_embedding(&g, r) {
                Ok(rep) => {
                    let faces: Vec<Vec<&str>> = rep
                        .faces
                        .iter()
                        .map(|f| f.vertices.iter().map(|&v| g.vertex_name(v)).collect())
                        .collect();
                    emit(&json!({ "certified": true, "components": rep.components.len(), "faces": faces }));
                    Ok(Answer::Yes)
                }
                Err(Error::EulerViolation { component, characteristic }) => {
                    emit(&json!({ "certified": false, "component": component, "characteristic": characteristic }));
                    Ok(Answer::No)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
