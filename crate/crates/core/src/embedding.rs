//! Rotation systems and face tracing.
//!
//! Darts are numbered `2 * edge + dir`, where `dir == 0` runs from `edge.u`
//! to `edge.v`. The face successor of a dart `d` is the rotation successor of
//! its reverse at the head of `d`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Colour, Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(order: Vec<Vec<usize>>) -> Self {
        RotationSystem { order }
    }

    pub fn order(&self) -> &[Vec<usize>] {
        &self.order
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// Every vertex cycles through exactly its incident edges, once each.
    pub fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.vertex_count() {
            return Err(Error::IncompleteRotation(format!(
                "{} cycles for {} vertices",
                self.order.len(),
                g.vertex_count()
            )));
        }
        let inc = g.incidence();
        for (v, cycle) in self.order.iter().enumerate() {
            let mut want: Vec<usize> = inc[v].iter().map(|&(_, e)| e).collect();
            let mut got = cycle.clone();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(Error::IncompleteRotation(format!(
                    "vertex `{}` lists edges {:?}, incident edges are {:?}",
                    g.vertex_name(v),
                    cycle,
                    want
                )));
            }
        }
        Ok(())
    }

    /// Mirror image: every cyclic order reversed.
    pub fn reversed(&self) -> RotationSystem {
        RotationSystem {
            order: self
                .order
                .iter()
                .map(|c| c.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Rotation of a straight-line drawing: incident edges sorted
    /// counter-clockwise by direction.
    pub fn from_coordinates(g: &Graph, coords: &[(f64, f64)]) -> RotationSystem {
        let inc = g.incidence();
        let order = inc
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut l: Vec<(f64, usize)> = list
                    .iter()
                    .map(|&(w, e)| (angle(coords[v], coords[w]), e))
                    .collect();
                l.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
                l.into_iter().map(|(_, e)| e).collect()
            })
            .collect();
        RotationSystem { order }
    }
}

fn angle(from: (f64, f64), to: (f64, f64)) -> f64 {
    let a = (to.1 - from.1).atan2(to.0 - from.0);
    if a < 0.0 {
        a + std::f64::consts::TAU
    } else {
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub component: usize,
    pub darts: Vec<usize>,
    /// Tail vertex of each dart, in walk order.
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d / 2)
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentEuler {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl ComponentEuler {
    pub fn characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceReport {
    pub faces: Vec<Face>,
    pub components: Vec<ComponentEuler>,
}

impl FaceReport {
    pub fn is_planar(&self) -> bool {
        self.components.iter().all(|c| c.characteristic() == 2)
    }

    /// First face visiting all of `vertices`.
    pub fn face_containing(&self, vertices: &[usize]) -> Option<&Face> {
        self.faces
            .iter()
            .find(|f| vertices.iter().all(|v| f.vertices.contains(v)))
    }
}

pub(crate) fn dart_tail(g: &Graph, d: usize) -> usize {
    let e = g.edges()[d / 2];
    if d % 2 == 0 {
        e.u
    } else {
        e.v
    }
}

fn leaving_dart(g: &Graph, edge: usize, at: usize) -> usize {
    if g.edges()[edge].u == at {
        2 * edge
    } else {
        2 * edge + 1
    }
}

/// Traces every face of `g` under `r`, without judging planarity.
pub fn trace_faces(g: &Graph, r: &RotationSystem) -> Result<FaceReport> {
    r.check_covers(g)?;
    let m = g.edge_count();
    // position of each dart in its tail's rotation
    let mut pos = vec![0usize; 2 * m];
    for (v, cycle) in r.order.iter().enumerate() {
        for (k, &e) in cycle.iter().enumerate() {
            pos[leaving_dart(g, e, v)] = k;
        }
    }
    let next = |d: usize| -> usize {
        let back = d ^ 1;
        let at = dart_tail(g, back);
        let cycle = &r.order[at];
        let e = cycle[(pos[back] + 1) % cycle.len()];
        leaving_dart(g, e, at)
    };
    let (comp, ncomp) = g.components();
    let mut seen = vec![false; 2 * m];
    let mut faces = Vec::new();
    for start in 0..2 * m {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            darts.push(d);
            d = next(d);
        }
        let vertices = darts.iter().map(|&d| dart_tail(g, d)).collect();
        faces.push(Face {
            component: comp[dart_tail(g, start)],
            darts,
            vertices,
        });
    }
    let mut components = vec![
        ComponentEuler {
            vertices: 0,
            edges: 0,
            faces: 0
        };
        ncomp
    ];
    for &c in &comp {
        components[c].vertices += 1;
    }
    for e in g.edges() {
        components[comp[e.u]].edges += 1;
    }
    for f in &faces {
        components[f.component].faces += 1;
    }
    for c in &mut components {
        if c.edges == 0 {
            c.faces = 1;
        }
    }
    Ok(FaceReport { faces, components })
}

/// Succeeds iff every component satisfies `V - E + F = 2`.
pub fn certify_embedding(g: &Graph, r: &RotationSystem) -> Result<FaceReport> {
    let report = trace_faces(g, r)?;
    if let Some((i, c)) = report
        .components
        .iter()
        .enumerate()
        .find(|(_, c)| c.characteristic() != 2)
    {
        return Err(Error::EulerViolation {
            component: i,
            characteristic: c.characteristic(),
        });
    }
    Ok(report)
}

/// Certifies the rotation carried by `g` itself.
pub fn certify_own(g: &Graph) -> Result<FaceReport> {
    let r = g.rotation().ok_or(Error::MissingEmbedding)?;
    certify_embedding(g, r)
}

/// Exhaustive search for a planar rotation, trying at most `limit`
/// candidates in a fixed order. Meant for small graphs.
pub fn search_planar_rotation(g: &Graph, limit: usize) -> Option<RotationSystem> {
    let inc = g.incidence();
    let per_vertex: Vec<Vec<Vec<usize>>> = inc
        .iter()
        .map(|l| cyclic_orders(&l.iter().map(|&(_, e)| e).collect::<Vec<_>>()))
        .collect();
    let mut choice = vec![0usize; per_vertex.len()];
    let mut tried = 0;
    loop {
        let r = RotationSystem::new(
            choice
                .iter()
                .enumerate()
                .map(|(v, &c)| per_vertex[v][c].clone())
                .collect(),
        );
        if certify_embedding(g, &r).is_ok() {
            return Some(r);
        }
        tried += 1;
        if tried >= limit {
            return None;
        }
        // odometer
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < per_vertex[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All cyclic orders of `items`, each starting with `items[0]`.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permutations(&mut rest, 0, &mut |p| {
        let mut c = vec![items[0]];
        c.extend_from_slice(p);
        out.push(c);
    });
    out
}

fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Where to cut the rotation at a vertex when it is glued into something
/// larger: the block starts at position `start` of the vertex's cycle.
pub type Cut = usize;

/// Cut at the corner where `face` passes through `v` (first visit).
pub fn cut_on_face(r: &RotationSystem, face: &Face, v: usize) -> Option<Cut> {
    if r.at(v).is_empty() {
        return Some(0);
    }
    let k = face.vertices.iter().position(|&x| x == v)?;
    let leaving = face.darts[k];
    r.at(v).iter().position(|&e| e == leaving / 2)
}

/// Cut at the angular wedge of `v` containing direction `theta` (degrees,
/// counter-clockwise from east) in a straight-line drawing.
pub fn cut_by_angle(g: &Graph, r: &RotationSystem, coords: &[(f64, f64)], v: usize, theta: f64) -> Cut {
    let cycle = r.at(v);
    if cycle.is_empty() {
        return 0;
    }
    let theta = theta.to_radians().rem_euclid(std::f64::consts::TAU);
    let angles: Vec<f64> = cycle
        .iter()
        .map(|&e| angle(coords[v], coords[g.edges()[e].other(v)]))
        .collect();
    // first edge counter-clockwise after theta
    let mut best = 0;
    let mut best_gap = f64::MAX;
    for (k, &a) in angles.iter().enumerate() {
        let gap = (a - theta).rem_euclid(std::f64::consts::TAU);
        if gap < best_gap {
            best_gap = gap;
            best = k;
        }
    }
    best
}

fn block(r: &RotationSystem, v: usize, cut: Cut) -> Vec<usize> {
    let cycle = r.at(v);
    let n = cycle.len();
    (0..n).map(|k| cycle[(cut + k) % n]).collect()
}

/// A piece of a planar assembly: a graph with rotation, namespaced by a
/// prefix.
#[derive(Debug, Clone)]
pub struct Piece<'a> {
    pub graph: &'a Graph,
    pub prefix: String,
}

/// A set of piece vertices identified into a single vertex named `name`.
/// Members are listed in rotation order around the merged vertex.
#[derive(Debug, Clone)]
pub struct Merge {
    pub name: String,
    pub members: Vec<(usize, usize, Cut)>,
}

/// Glues pieces by vertex identification. The merged vertex's rotation is
/// the concatenation of each member's cut block. Non-merged vertices are
/// named `prefix.name`. The result carries a rotation but is not certified.
pub fn assemble(pieces: &[Piece<'_>], merges: &[Merge]) -> Result<Graph> {
    let mut target: HashMap<(usize, usize), usize> = HashMap::new();
    let mut b = GraphBuilder::new();
    for m in merges {
        let id = b.add_vertex(m.name.clone())?;
        for &(p, v, _) in &m.members {
            if target.insert((p, v), id).is_some() {
                return Err(Error::BadVertices(format!(
                    "`{}` merged twice",
                    pieces[p].graph.vertex_name(v)
                )));
            }
        }
    }
    for (p, piece) in pieces.iter().enumerate() {
        for v in 0..piece.graph.vertex_count() {
            if !target.contains_key(&(p, v)) {
                let id = b.add_vertex(format!("{}.{}", piece.prefix, piece.graph.vertex_name(v)))?;
                target.insert((p, v), id);
            }
        }
    }
    let mut edge_map: Vec<Vec<usize>> = Vec::with_capacity(pieces.len());
    for (p, piece) in pieces.iter().enumerate() {
        let mut map = Vec::with_capacity(piece.graph.edge_count());
        for e in piece.graph.edges() {
            let before = b.edge_count();
            let idx = b.add_edge(target[&(p, e.u)], target[&(p, e.v)], e.colour);
            if idx != before {
                return Err(Error::BadVertices(format!(
                    "identification creates a parallel {}-edge in piece `{}`",
                    e.colour, piece.prefix
                )));
            }
            map.push(idx);
        }
        edge_map.push(map);
    }
    let mut order = vec![Vec::new(); b.vertex_count()];
    for (p, piece) in pieces.iter().enumerate() {
        let r = piece
            .graph
            .rotation()
            .ok_or(Error::MissingEmbedding)?;
        for v in 0..piece.graph.vertex_count() {
            order[target[&(p, v)]].push((p, v, r.at(v).to_vec()));
        }
    }
    // merged vertices get the member blocks in the declared order
    for m in merges {
        let id = target[&(m.members[0].0, m.members[0].1)];
        order[id] = m
            .members
            .iter()
            .map(|&(p, v, cut)| {
                let r = pieces[p].graph.rotation().unwrap();
                (p, v, block(r, v, cut))
            })
            .collect();
    }
    let rotation = RotationSystem::new(
        order
            .into_iter()
            .map(|parts| {
                parts
                    .into_iter()
                    .flat_map(|(p, _, es)| es.into_iter().map(|e| edge_map[p][e]).collect::<Vec<_>>())
                    .collect()
            })
            .collect(),
    );
    b.build().with_rotation(rotation)
}

/// How a single edge of the host is rendered by [`replace_edges`].
pub struct Replacement<'a> {
    pub gadget: &'a Graph,
    /// Gadget vertex glued to the edge's `u` endpoint.
    pub i: usize,
    /// Gadget vertex glued to the edge's `v` endpoint.
    pub j: usize,
    pub prefix: String,
}

/// Replaces host edges by two-terminal gadgets. Edges for which `pick`
/// returns `None` are kept. When the host and every gadget carry rotations,
/// the output carries the glued rotation (cut at the first face containing
/// both terminals) so that it can be certified.
pub fn replace_edges<'a>(
    host: &Graph,
    mut pick: impl FnMut(usize) -> Option<Replacement<'a>>,
) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for v in host.vertices() {
        b.add_vertex(v.clone())?;
    }
    let reps: Vec<Option<Replacement<'a>>> = (0..host.edge_count()).map(&mut pick).collect();
    let mut kept_index = vec![usize::MAX; host.edge_count()];
    for (ei, e) in host.edges().iter().enumerate() {
        if reps[ei].is_none() {
            kept_index[ei] = push_new_edge(&mut b, e.u, e.v, e.colour)?;
        }
    }
    struct Copy {
        vmap: Vec<usize>,
        emap: Vec<usize>,
        cuts: Option<(Cut, Cut)>,
    }
    let mut copies: Vec<Option<Copy>> = Vec::with_capacity(host.edge_count());
    for (ei, rep) in reps.iter().enumerate() {
        let Some(rep) = rep else {
            copies.push(None);
            continue;
        };
        let e = host.edges()[ei];
        let gd = rep.gadget;
        if rep.i == rep.j {
            return Err(Error::InvalidIndicator("terminals coincide".into()));
        }
        let mut vmap = vec![0usize; gd.vertex_count()];
        for v in 0..gd.vertex_count() {
            vmap[v] = if v == rep.i {
                e.u
            } else if v == rep.j {
                e.v
            } else {
                b.add_vertex(format!("{}.{}", rep.prefix, gd.vertex_name(v)))?
            };
        }
        let mut emap = Vec::with_capacity(gd.edge_count());
        for ge in gd.edges() {
            emap.push(push_new_edge(&mut b, vmap[ge.u], vmap[ge.v], ge.colour)?);
        }
        let cuts = match gd.rotation() {
            Some(r) => {
                let faces = trace_faces(gd, r)?;
                let face = faces.face_containing(&[rep.i, rep.j]).ok_or_else(|| {
                    Error::UncertifiedEmbedding("gadget terminals share no face".into())
                })?;
                Some((
                    cut_on_face(r, face, rep.i).unwrap(),
                    cut_on_face(r, face, rep.j).unwrap(),
                ))
            }
            None => None,
        };
        copies.push(Some(Copy { vmap, emap, cuts }));
    }
    let mut graph = b.build();
    let Some(hr) = host.rotation() else {
        return Ok(graph);
    };
    if copies
        .iter()
        .flatten()
        .any(|c| c.cuts.is_none())
    {
        return Ok(graph);
    }
    let mut order = vec![Vec::new(); graph.vertex_count()];
    for v in 0..host.vertex_count() {
        for &ei in hr.at(v) {
            match (&copies[ei], &reps[ei]) {
                (Some(c), Some(rep)) => {
                    let gr = rep.gadget.rotation().unwrap();
                    let (ci, cj) = c.cuts.unwrap();
                    let e = host.edges()[ei];
                    // a host edge u-v: the endpoint we stand at decides the terminal
                    let (t, cut) = if e.u == v { (rep.i, ci) } else { (rep.j, cj) };
                    order[v].extend(block(gr, t, cut).into_iter().map(|ge| c.emap[ge]));
                }
                _ => order[v].push(kept_index[ei]),
            }
        }
    }
    for (ei, c) in copies.iter().enumerate() {
        let (Some(c), Some(rep)) = (c, &reps[ei]) else {
            continue;
        };
        let gr = rep.gadget.rotation().unwrap();
        for v in 0..rep.gadget.vertex_count() {
            if v != rep.i && v != rep.j {
                order[c.vmap[v]] = gr.at(v).iter().map(|&ge| c.emap[ge]).collect();
            }
        }
    }
    graph = graph.with_rotation(RotationSystem::new(order))?;
    Ok(graph)
}

fn push_new_edge(b: &mut GraphBuilder, u: usize, v: usize, colour: Colour) -> Result<usize> {
    let before = b.edge_count();
    let idx = b.add_edge(u, v, colour);
    if idx != before {
        return Err(Error::BadVertices(
            "edge replacement produced a duplicate edge".into(),
        ));
    }
    Ok(idx)
}
