//! Instance transformations: 3-colouring to `rho(UC_4)`, the three
//! cycle-square reductions, and the indicators used to build targets.

pub mod gadgets;

use std::collections::BTreeMap;

pub use gadgets::{
    copy_gadget, crossing_gadget, degree_gadget, gadget, split_gadget, vertex_gadget, GadgetGraph,
    GadgetKind,
};

use crate::constructions::Indicator;
use crate::embedding::{
    assemble, certify_embedding, replace_edges, trace_faces, Cut, Merge, Piece, Replacement,
    RotationSystem,
};
use crate::error::{Error, Result};
use crate::families::{cycle_square_rotation, gen_cycle, gen_cycle_square};
use crate::graph::{Edge, Graph, GraphBuilder, NEGATIVE, POSITIVE};
use crate::hom::Homomorphism;

/// Where each input vertex, edge or face ended up in the output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionCertificate {
    pub ports: BTreeMap<String, BTreeMap<String, String>>,
    pub rotation: Option<RotationSystem>,
}

fn require_plain(g: &Graph) -> Result<()> {
    match g.edges().iter().find(|e| e.colour != POSITIVE) {
        Some(e) => Err(Error::BadParameter(format!(
            "input must be 1-edge-coloured (+1), found colour {}",
            e.colour
        ))),
        None => Ok(()),
    }
}

fn certified(g: &Graph, r: &RotationSystem) -> Result<()> {
    certify_embedding(g, r)
        .map(|_| ())
        .map_err(|e| Error::UncertifiedEmbedding(e.to_string()))
}

fn edge_label(g: &Graph, e: &Edge) -> String {
    format!("{}-{}", g.vertex_name(e.u), g.vertex_name(e.v))
}

fn alternating_path() -> Graph {
    Graph::new(vec!["s", "z", "t"], vec![("s", "z", NEGATIVE), ("z", "t", POSITIVE)])
        .unwrap()
        .with_rotation(RotationSystem::new(vec![vec![0], vec![0, 1], vec![1]]))
        .unwrap()
}

/// Planar 3-colouring to `rho(UC_4)`-colouring.
///
/// Each vertex of degree `d` becomes a vertex gadget with ports
/// `v_0 .. v_{2d-1}`; its `p`-th edge in rotation order uses the pair
/// `(v_{2p}, v_{2p+1})`. An edge `ab` adds a crossing gadget with
/// `x1 = a_{2p}`, `y1 = a_{2p+1}`, `x2 = b_{2q}` and a path
/// `y2 -(-)- z -(+)- b_{2q+1}`.
pub fn reduce_3col_to_uc4(g: &Graph, rot: &RotationSystem) -> Result<(Graph, ReductionCertificate)> {
    require_plain(g)?;
    certified(g, rot)?;
    build_3col(g, rot).map_err(|e| match e {
        Error::EulerViolation { .. } => Error::UncertifiedEmbedding(e.to_string()),
        e => e,
    })
}

fn build_3col(g: &Graph, rot: &RotationSystem) -> Result<(Graph, ReductionCertificate)> {
    let inc = g.incidence();
    let mut vgadgets: BTreeMap<usize, GadgetGraph> = BTreeMap::new();
    for l in &inc {
        if !l.is_empty() && !vgadgets.contains_key(&l.len()) {
            vgadgets.insert(l.len(), vertex_gadget(l.len())?);
        }
    }
    let crossing = crossing_gadget()?;
    let path = alternating_path();

    let mut pieces: Vec<Piece> = Vec::new();
    let mut vpiece = vec![usize::MAX; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if let Some(gd) = vgadgets.get(&inc[v].len()) {
            vpiece[v] = pieces.len();
            pieces.push(Piece {
                graph: &gd.graph,
                prefix: format!("V[{}]", g.vertex_name(v)),
            });
        }
    }
    let mut epiece = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        let label = edge_label(g, e);
        epiece.push((pieces.len(), pieces.len() + 1));
        pieces.push(Piece {
            graph: &crossing.graph,
            prefix: format!("E[{label}]"),
        });
        pieces.push(Piece {
            graph: &path,
            prefix: format!("P[{label}]"),
        });
    }

    let mut cert = ReductionCertificate::default();
    let mut merges = Vec::new();
    let vport = |v: usize, i: usize| -> Result<(usize, usize, Cut, String)> {
        let gd = &vgadgets[&inc[v].len()];
        let role = format!("v_{i}");
        let x = gd.port(&role)?;
        Ok((
            vpiece[v],
            x,
            gd.boundary_cut(x)?,
            format!("V[{}].{role}", g.vertex_name(v)),
        ))
    };
    let cport = |p: usize, role: &str| -> Result<(usize, usize, Cut)> {
        let x = crossing.port(role)?;
        Ok((p, x, crossing.boundary_cut(x)?))
    };
    for v in 0..g.vertex_count() {
        if vpiece[v] == usize::MAX {
            continue;
        }
        let ports = (0..2 * inc[v].len())
            .map(|i| (format!("v_{i}"), format!("V[{}].v_{i}", g.vertex_name(v))))
            .collect();
        cert.ports.insert(format!("vertex:{}", g.vertex_name(v)), ports);
    }
    for (ei, e) in g.edges().iter().enumerate() {
        let p = rot.at(e.u).iter().position(|&x| x == ei).unwrap();
        let q = rot.at(e.v).iter().position(|&x| x == ei).unwrap();
        let (cp, pp) = epiece[ei];
        let label = edge_label(g, e);
        let a0 = vport(e.u, 2 * p)?;
        let a1 = vport(e.u, 2 * p + 1)?;
        let b0 = vport(e.v, 2 * q)?;
        let b1 = vport(e.v, 2 * q + 1)?;
        let y2 = format!("E[{label}].y2");
        let mut ports = BTreeMap::new();
        ports.insert("x1".to_string(), a0.3.clone());
        ports.insert("y1".to_string(), a1.3.clone());
        ports.insert("x2".to_string(), b0.3.clone());
        ports.insert("y2".to_string(), y2.clone());
        ports.insert("z".to_string(), format!("P[{label}].z"));
        ports.insert("w".to_string(), b1.3.clone());
        cert.ports.insert(format!("edge:{label}"), ports);
        merges.push(Merge {
            name: a0.3,
            members: vec![(a0.0, a0.1, a0.2), cport(cp, "x1")?],
        });
        merges.push(Merge {
            name: a1.3,
            members: vec![(a1.0, a1.1, a1.2), cport(cp, "y1")?],
        });
        merges.push(Merge {
            name: b0.3,
            members: vec![(b0.0, b0.1, b0.2), cport(cp, "x2")?],
        });
        merges.push(Merge {
            name: y2,
            members: vec![cport(cp, "y2")?, (pp, 0, 0)],
        });
        merges.push(Merge {
            name: b1.3,
            members: vec![(b1.0, b1.1, b1.2), (pp, 2, 0)],
        });
    }
    let out = assemble(&pieces, &merges)?;
    let r = out.rotation().unwrap().clone();
    certify_embedding(&out, &r)?;
    cert.rotation = Some(r);
    let out = match g.name() {
        Some(n) => out.with_name(format!("3col-to-uc4({n})")),
        None => out.with_name("3col-to-uc4"),
    };
    Ok((out, cert))
}

/// `graph` without the listed edges; the rotation, if any, follows.
fn without_edges(graph: &Graph, drop: &[usize]) -> Result<Graph> {
    let mut new_index = vec![usize::MAX; graph.edge_count()];
    let mut edges = Vec::new();
    for (i, e) in graph.edges().iter().enumerate() {
        if !drop.contains(&i) {
            new_index[i] = edges.len();
            edges.push(*e);
        }
    }
    let mut out = Graph::from_indexed(graph.vertices().to_vec(), edges)?;
    if let Some(r) = graph.rotation() {
        let order = r
            .order()
            .iter()
            .map(|l| l.iter().filter(|&&e| new_index[e] != usize::MAX).map(|&e| new_index[e]).collect())
            .collect();
        out = out.with_rotation(RotationSystem::new(order))?;
    }
    if let Some(n) = graph.name() {
        out = out.with_name(n);
    }
    Ok(out)
}

fn square_edge(t: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i % t, j % t);
    if (i + 1) % t == j {
        2 * i
    } else if (j + 1) % t == i {
        2 * j
    } else if (i + 2) % t == j {
        2 * i + 1
    } else {
        2 * j + 1
    }
}

/// `C_t^2` minus `v_0 v_2` for odd `t`, with a planar rotation.
///
/// Around `v_i` for `i >= 3` the neighbours by offset run `-2, -1, +1, +2`
/// at odd `i` and `-2, +2, +1, -1` at even `i`; `v_0` has `-2, -1, +1`,
/// `v_1` has `-2, +1, +2, -1`, `v_2` has `-1, +2, +1`.
pub fn odd_cycle_square_gadget(t: usize) -> Result<Graph> {
    if t < 7 || t % 2 == 0 {
        return Err(Error::BadParameter(format!("odd gadget needs odd t >= 7, got {t}")));
    }
    let sq = gen_cycle_square(t)?;
    let dropped = square_edge(t, 0, 2);
    let base = without_edges(&sq, &[dropped])?;
    let mut keep_index = vec![0usize; sq.edge_count()];
    let mut k = 0;
    for (i, slot) in keep_index.iter_mut().enumerate() {
        if i != dropped {
            *slot = k;
            k += 1;
        }
    }
    let offsets = |i: usize| -> Vec<i64> {
        match i {
            0 => vec![-2, -1, 1],
            1 => vec![-2, 1, 2, -1],
            2 => vec![-1, 2, 1],
            _ if i % 2 == 1 => vec![-2, -1, 1, 2],
            _ => vec![-2, 2, 1, -1],
        }
    };
    let ti = t as i64;
    let order = (0..t)
        .map(|i| {
            offsets(i)
                .into_iter()
                .map(|o| {
                    let j = ((i as i64 + o).rem_euclid(ti)) as usize;
                    keep_index[square_edge(t, i, j)]
                })
                .collect()
        })
        .collect();
    base.with_rotation(RotationSystem::new(order))
        .map(|g| g.with_name(format!("C_{t}^2-v0v2")))
}

/// `C_{4k}^2` minus `v_{2k-1} v_{2k}` and `v_{2k} v_{2k+2}`, with the
/// inherited planar rotation.
pub fn face_cycle_square_gadget(t: usize) -> Result<Graph> {
    if t < 8 || t % 4 != 0 {
        return Err(Error::BadParameter(format!("face gadget needs t = 4k >= 8, got {t}")));
    }
    let h = t / 2;
    let sq = gen_cycle_square(t)?.with_rotation(cycle_square_rotation(t))?;
    let drop = [square_edge(t, h - 1, h), square_edge(t, h, h + 2)];
    Ok(without_edges(&sq, &drop)?.with_name(format!("C_{t}^2-face")))
}

/// Planar `C_{t/2}`-, `C_t`- or 3-colouring to `C_t^2`-colouring, by `t`
/// modulo 4. A rotation is required when `4 | t`; otherwise an optional
/// one makes the output carry a certified rotation.
///
/// `t` divisible by 3 is rejected except for `t = 2 mod 4`, where the
/// gluing is still an exact equivalence with `C_{t/2}`-colouring.
pub fn reduce_to_cycle_square(
    g: &Graph,
    t: usize,
    rot: Option<&RotationSystem>,
) -> Result<(Graph, ReductionCertificate)> {
    if t < 6 {
        return Err(Error::BadParameter(format!(
            "t = {t}: C_t^2 is K_4 or K_5 for t = 4, 5; need t >= 6"
        )));
    }
    if t % 3 == 0 && t % 4 != 2 {
        return Err(Error::BadParameter(format!(
            "t = {t} is divisible by 3: the core of C_t^2 is K_3, reduce from 3-colouring directly"
        )));
    }
    require_plain(g)?;
    if let Some(r) = rot {
        certified(g, r)?;
    }
    let host = match rot {
        Some(r) => g.clone().with_rotation(r.clone())?,
        None => g.clone().without_rotation(),
    };
    let mut cert = ReductionCertificate::default();
    let out = match t % 4 {
        2 => {
            let sq = gen_cycle_square(t)?;
            let gadget = if rot.is_some() { sq } else { sq.without_rotation() };
            glue_on_edges(&host, &gadget, 0, 2, &mut cert)?
        }
        0 => {
            let r = rot.ok_or(Error::MissingEmbedding)?;
            face_construction(g, r, t, &mut cert)?
        }
        _ => {
            let h = odd_cycle_square_gadget(t)?;
            let gadget = if rot.is_some() { h } else { h.without_rotation() };
            glue_on_edges(&host, &gadget, 0, 1, &mut cert)?
        }
    };
    if let Some(r) = out.rotation() {
        certified(&out, r)?;
        cert.rotation = Some(r.clone());
    }
    let name = format!("cycle-square-{t}({})", g.name().unwrap_or("G"));
    Ok((out.with_name(name), cert))
}

fn glue_on_edges(
    host: &Graph,
    gadget: &Graph,
    i: usize,
    j: usize,
    cert: &mut ReductionCertificate,
) -> Result<Graph> {
    for (k, e) in host.edges().iter().enumerate() {
        let mut m = BTreeMap::new();
        m.insert("copy".to_string(), format!("e{k}"));
        cert.ports.insert(format!("edge:{}", edge_label(host, e)), m);
    }
    replace_edges(host, |k| {
        Some(Replacement {
            gadget,
            i,
            j,
            prefix: format!("e{k}"),
        })
    })
}

/// A vertex `f{n}` inside every face, joined to each vertex on the face by
/// a copy of the face gadget (`v_0` on the face vertex side `f{n}`,
/// `v_{2k}` on the old vertex).
fn face_construction(
    g: &Graph,
    rot: &RotationSystem,
    t: usize,
    cert: &mut ReductionCertificate,
) -> Result<Graph> {
    let gadget = face_cycle_square_gadget(t)?;
    let report = trace_faces(g, rot)?;
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(v.clone())?;
    }
    for e in g.edges() {
        b.add_edge(e.u, e.v, e.colour);
    }
    // star edges to insert in front of a given edge in a vertex's rotation
    let mut before: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut star_rot: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut stars = Vec::new();
    for (fi, face) in report.faces.iter().enumerate() {
        let uf = b.add_vertex(format!("f{fi}"))?;
        let mut ports = BTreeMap::new();
        ports.insert("u_f".to_string(), format!("f{fi}"));
        let mut seen = Vec::new();
        let mut around = Vec::new();
        for (k, &w) in face.vertices.iter().enumerate() {
            if seen.contains(&w) {
                continue;
            }
            seen.push(w);
            let se = b.add_edge(uf, w, POSITIVE);
            stars.push(se);
            around.push(se);
            let leaving = face.darts[k] / 2;
            before.entry((w, leaving)).or_default().push(se);
            ports.insert(g.vertex_name(w).to_string(), format!("f{fi}.{}", g.vertex_name(w)));
        }
        around.reverse();
        star_rot.push((uf, around));
        cert.ports.insert(format!("face:{fi}"), ports);
    }
    let mut star_host = b.build();
    let mut order = vec![Vec::new(); star_host.vertex_count()];
    for v in 0..g.vertex_count() {
        for &e in rot.at(v) {
            if let Some(s) = before.get(&(v, e)) {
                order[v].extend(s.iter().copied());
            }
            order[v].push(e);
        }
        if rot.at(v).is_empty() {
            if let Some(s) = before.get(&(v, usize::MAX)) {
                order[v].extend(s.iter().copied());
            }
        }
    }
    for (uf, around) in star_rot {
        order[uf] = around;
    }
    star_host = star_host.with_rotation(RotationSystem::new(order))?;
    certified(&star_host, star_host.rotation().unwrap())?;
    let h = t / 2;
    let names: Vec<String> = star_host.vertices().to_vec();
    replace_edges(&star_host, |k| {
        stars.contains(&k).then(|| {
            let e = star_host.edges()[k];
            Replacement {
                gadget: &gadget,
                i: 0,
                j: h,
                prefix: format!("{}.{}", names[e.u], names[e.v]),
            }
        })
    })
}

/// `(C_{2t+1}, x_0, x_2)`.
pub fn cc_indicator(t: usize) -> Result<Indicator> {
    if t < 2 {
        return Err(Error::BadParameter(format!("cc_indicator needs t >= 2, got {t}")));
    }
    Indicator::new(gen_cycle(2 * t + 1, None)?, "x_0", "x_2")
}

/// The signed 4-cycle `i -(+)- x -(-)- j -(+)- y -(-)- i`.
pub fn uc_indicator() -> Indicator {
    let g = Graph::new(
        vec!["i", "x", "j", "y"],
        vec![("i", "x", POSITIVE), ("x", "j", NEGATIVE), ("j", "y", POSITIVE), ("y", "i", NEGATIVE)],
    )
    .unwrap()
    .with_rotation(RotationSystem::new(vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]]))
    .unwrap()
    .with_name("I");
    Indicator::new(g, "i", "j").expect("uc indicator is symmetric")
}

/// For odd `k`: the cycle `c_0 .. c_{k-1}` in `rho(UC_2k)*` (canonical
/// labels), with `c_{2s} = u_{4s}` and `c_{2s+1} = u_{4s+2k+2}`.
pub fn case1_cycle(k: usize) -> Result<Vec<usize>> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::BadParameter(format!("case 1 needs odd k >= 3, got {k}")));
    }
    let n = 4 * k;
    Ok((0..k)
        .map(|i| {
            let s = i / 2;
            if i % 2 == 0 {
                (4 * s) % n
            } else {
                (4 * s + 2 * k + 2) % n
            }
        })
        .collect())
}

/// For odd `k`: the retraction `u_i -> u_{4 floor(i/4)}` of `rho(UC_2k)*`
/// onto the cycle from [`case1_cycle`], as a map on canonical labels.
pub fn case1_retraction(k: usize) -> Result<Homomorphism> {
    case1_cycle(k)?;
    Ok(Homomorphism::new((0..4 * k).map(|i| 4 * (i / 4)).collect()))
}
