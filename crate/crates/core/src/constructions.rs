//! Graph transformers: the switching graph, indicators, edge replacement,
//! path replacement and doubling, and the forcing checker.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::embedding::{certify_embedding, RotationSystem};
use crate::error::{Error, Result};
use crate::families::gen_path;
use crate::graph::{Edge, Graph, GraphBuilder, POSITIVE};
use crate::hom::{find_hom_pinned, find_iso_pinned, SearchConfig, Solver};

/// The switching graph: `u.0` and `u.1` per vertex `u` (at indices `2u`
/// and `2u + 1`). Copies with equal index inherit the sign of `uv`, copies
/// with different index get the opposite sign.
pub fn rho(h: &Graph) -> Result<Graph> {
    h.require_signed()?;
    let vertices = h
        .vertices()
        .iter()
        .flat_map(|v| [format!("{v}.0"), format!("{v}.1")])
        .collect();
    let mut edges = Vec::with_capacity(4 * h.edge_count());
    for e in h.edges() {
        for (a, b) in [(0, 0), (1, 1), (0, 1), (1, 0)] {
            edges.push(Edge {
                u: 2 * e.u + a,
                v: 2 * e.v + b,
                colour: if a == b { e.colour } else { -e.colour },
            });
        }
    }
    let g = Graph::from_indexed(vertices, edges)?;
    Ok(match h.name() {
        Some(n) => g.with_name(format!("rho({n})")),
        None => g,
    })
}

/// Index of the other copy of a vertex of `rho(h)`.
pub fn antitwin(v: usize) -> usize {
    v ^ 1
}

/// Walks the positive Hamiltonian cycle of a switching graph from vertex 0,
/// leaving each vertex toward the unvisited positive neighbour with the
/// smallest index. Returns the walk: entry `i` is the vertex labelled `u_i`.
pub fn circulant_labelling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut pos: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in g.edges().iter().filter(|e| e.colour == POSITIVE) {
        pos[e.u].push(e.v);
        pos[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut walk = vec![0];
    seen[0] = true;
    while walk.len() < n {
        let cur = *walk.last().unwrap();
        let next = pos[cur].iter().copied().filter(|&w| !seen[w]).min().ok_or_else(|| {
            Error::BadParameter("positive edges do not form a Hamiltonian cycle".into())
        })?;
        seen[next] = true;
        walk.push(next);
    }
    if !pos[walk[n - 1]].contains(&walk[0]) {
        return Err(Error::BadParameter("positive walk does not close".into()));
    }
    Ok(walk)
}

/// Renames vertex `order[i]` to `names[i]`, keeping edges and their order.
pub fn relabel(g: &Graph, order: &[usize], names: &[String]) -> Result<Graph> {
    if order.len() != g.vertex_count() || names.len() != order.len() {
        return Err(Error::BadVertices("relabelling is not a bijection".into()));
    }
    let mut new_index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in order.iter().enumerate() {
        if new_index[v] != usize::MAX {
            return Err(Error::BadVertices("relabelling is not a bijection".into()));
        }
        new_index[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .map(|e| Edge {
            u: new_index[e.u],
            v: new_index[e.v],
            colour: e.colour,
        })
        .collect();
    let out = Graph::from_indexed(names.to_vec(), edges)?;
    Ok(match g.name() {
        Some(n) => out.with_name(n),
        None => out,
    })
}

/// `rho(UC_n)` in circulant form: vertex `u_i` is `x_{i mod n}.(i div n)`.
/// Positive edges join `u_i u_{i+1}`, negative edges `u_i u_{i+n-1}`.
pub fn rho_uc_canonical(n: usize) -> Result<Graph> {
    let r = rho(&crate::families::gen_uc(n)?)?;
    let walk = circulant_labelling(&r)?;
    let names: Vec<String> = (0..2 * n).map(|i| format!("u_{i}")).collect();
    relabel(&r, &walk, &names)
}

/// A signed graph with two pins exchanged by an automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indicator {
    graph: Graph,
    i: usize,
    j: usize,
}

impl Indicator {
    pub fn new(graph: Graph, i: &str, j: &str) -> Result<Self> {
        let (iv, jv) = (graph.require_vertex(i)?, graph.require_vertex(j)?);
        if iv == jv {
            return Err(Error::InvalidIndicator("pins coincide".into()));
        }
        if find_iso_pinned(&graph, &graph, &[(iv, jv), (jv, iv)])?.is_none() {
            return Err(Error::InvalidIndicator(format!(
                "no automorphism exchanges `{i}` and `{j}`"
            )));
        }
        Ok(Indicator { graph, i: iv, j: jv })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn i_name(&self) -> &str {
        self.graph.vertex_name(self.i)
    }

    pub fn j_name(&self) -> &str {
        self.graph.vertex_name(self.j)
    }

    /// Planar with both pins on one face of its own certified rotation.
    pub fn preserves_planarity(&self) -> bool {
        let Some(r) = self.graph.rotation() else {
            return false;
        };
        match certify_embedding(&self.graph, r) {
            Ok(rep) => rep.face_containing(&[self.i, self.j]).is_some(),
            Err(_) => false,
        }
    }
}

/// `H*` together with the vertices where a pinned homomorphism sent both
/// pins to the same vertex (such loops are dropped).
#[derive(Debug, Clone)]
pub struct IndicatorOutcome {
    pub graph: Graph,
    pub dropped_loops: Vec<String>,
}

pub fn indicator_apply(h: &Graph, ind: &Indicator) -> Result<Graph> {
    Ok(indicator_apply_full(h, ind)?.graph)
}

pub fn indicator_apply_full(h: &Graph, ind: &Indicator) -> Result<IndicatorOutcome> {
    let n = h.vertex_count();
    let cfg = SearchConfig::default();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let found: Vec<bool> = pairs
        .par_iter()
        .map(|&(u, v)| {
            find_hom_pinned(ind.graph(), h, &[(ind.i, u), (ind.j, v)], &cfg).map(|f| f.is_some())
        })
        .collect::<Result<_>>()?;
    let at = |u: usize, v: usize| found[u * n + v];
    let mut edges = Vec::new();
    let mut dropped_loops = Vec::new();
    for u in 0..n {
        if at(u, u) {
            dropped_loops.push(h.vertex_name(u).to_string());
        }
        for v in u + 1..n {
            if at(u, v) != at(v, u) {
                return Err(Error::InvalidIndicator(format!(
                    "result is not symmetric on ({}, {})",
                    h.vertex_name(u),
                    h.vertex_name(v)
                )));
            }
            if at(u, v) {
                edges.push(Edge { u, v, colour: POSITIVE });
            }
        }
    }
    let mut graph = Graph::from_indexed(h.vertices().to_vec(), edges)?;
    if let Some(name) = h.name() {
        graph = graph.with_name(format!("{name}*"));
    }
    Ok(IndicatorOutcome {
        graph,
        dropped_loops,
    })
}

/// Replaces every edge `uv` of `g` by a copy of the indicator with `i` glued
/// to `u` and `j` to `v`. Copy `k` names its inner vertices `e{k}.<name>`.
/// With a host rotation and a planarity-preserving indicator the output
/// carries a certified rotation.
pub fn edge_replace(g: &Graph, ind: &Indicator, rot: Option<&RotationSystem>) -> Result<Graph> {
    let mut host = g.clone().without_rotation();
    let planar = rot.is_some() && ind.preserves_planarity();
    if planar {
        host = host.with_rotation(rot.unwrap().clone())?;
    }
    let plain;
    let gadget = if planar {
        ind.graph()
    } else {
        plain = ind.graph().clone().without_rotation();
        &plain
    };
    let out = crate::embedding::replace_edges(&host, |e| {
        Some(crate::embedding::Replacement {
            gadget,
            i: ind.i,
            j: ind.j,
            prefix: format!("e{e}"),
        })
    })?;
    if let Some(r) = out.rotation() {
        certify_embedding(&out, r).map_err(|e| Error::UncertifiedEmbedding(e.to_string()))?;
    }
    Ok(out)
}

/// Replaces the positive edge `xy` by a positive path of odd length `len`.
/// Inner path vertices are named `{x}-{y}.p_1 .. p_{len-1}`.
pub fn path_replace(h: &Graph, x: &str, y: &str, len: usize) -> Result<Graph> {
    if len < 3 || len % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "path length must be odd and >= 3, got {len}"
        )));
    }
    let (xv, yv) = (h.require_vertex(x)?, h.require_vertex(y)?);
    let target = h.find_edge(xv, yv, POSITIVE).ok_or_else(|| Error::NoSuchEdge {
        u: x.to_string(),
        v: y.to_string(),
    })?;
    let path = gen_path(len + 1)?;
    if h.rotation().is_none() {
        let path = path.without_rotation();
        return path_replace_with(h, target, xv, &path, x, y, len);
    }
    path_replace_with(h, target, xv, &path, x, y, len)
}

fn path_replace_with(
    h: &Graph,
    target: usize,
    xv: usize,
    path: &Graph,
    x: &str,
    y: &str,
    len: usize,
) -> Result<Graph> {
    let e = h.edges()[target];
    // terminal glued to the edge's stored `u` end
    let (i, j) = if e.u == xv { (0, len) } else { (len, 0) };
    let out = crate::embedding::replace_edges(h, |k| {
        (k == target).then(|| crate::embedding::Replacement {
            gadget: path,
            i,
            j,
            prefix: format!("{x}-{y}"),
        })
    })?;
    Ok(match h.name() {
        Some(n) => out.with_name(format!("{n}[{x}-{y}:{len}]")),
        None => out,
    })
}

/// Two copies of `j` glued at `a` and at `b`. Other vertices are named
/// `J1.<v>` and `J2.<v>`; edges that coincide after gluing merge.
pub fn double_identify(j: &Graph, a: &str, b: &str) -> Result<Graph> {
    let av = j
        .index_of(a)
        .ok_or_else(|| Error::BadVertices(format!("`{a}` is not a vertex")))?;
    let bv = j
        .index_of(b)
        .ok_or_else(|| Error::BadVertices(format!("`{b}` is not a vertex")))?;
    if av == bv {
        return Err(Error::BadVertices("identified vertices must differ".into()));
    }
    let mut builder = GraphBuilder::new();
    let mut maps = [vec![0usize; j.vertex_count()], vec![0usize; j.vertex_count()]];
    for (c, map) in maps.iter_mut().enumerate() {
        for v in 0..j.vertex_count() {
            map[v] = if v == av || v == bv {
                builder.vertex(j.vertex_name(v))
            } else {
                builder.add_vertex(format!("J{}.{}", c + 1, j.vertex_name(v)))?
            };
        }
    }
    for map in &maps {
        for e in j.edges() {
            builder.add_edge(map[e.u], map[e.v], e.colour);
        }
    }
    let out = builder.build();
    Ok(match j.name() {
        Some(n) => out.with_name(format!("{n}'")),
        None => out,
    })
}

/// Outcome of [`check_forcing`]: the realized tuples of images of the
/// watched vertices over all homomorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingReport {
    pub vertices: Vec<String>,
    pub forced: bool,
    pub hom_exists: bool,
    pub tuples: BTreeSet<Vec<String>>,
}

/// Whether every homomorphism `g -> h` maps all of `vs` to one vertex.
///
/// The image tuples are enumerated by extending partial pinnings one watched
/// vertex at a time and keeping those that still extend to a full
/// homomorphism, so the hom space itself is never listed. `limit` bounds the
/// number of tuples.
pub fn check_forcing(g: &Graph, vs: &[String], h: &Graph, limit: Option<usize>) -> Result<ForcingReport> {
    let watched: Vec<usize> = vs
        .iter()
        .map(|v| g.require_vertex(v))
        .collect::<Result<_>>()?;
    let cfg = SearchConfig::default();
    let mut tuples: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    let extends = |pins: &[usize]| -> Result<bool> {
        let mut s = Solver::new(g, h, &cfg)?;
        for (k, &t) in pins.iter().enumerate() {
            s.pin(watched[k], t);
        }
        Ok(s.find()?.is_some())
    };
    let hom_exists = extends(&[])?;
    if hom_exists {
        while let Some(partial) = stack.pop() {
            if partial.len() == watched.len() {
                tuples.insert(partial);
                if limit.is_some_and(|l| tuples.len() > l) {
                    return Err(Error::LimitExceeded { found: tuples.len() - 1 });
                }
                continue;
            }
            for t in (0..h.vertex_count()).rev() {
                let mut next = partial.clone();
                next.push(t);
                if extends(&next)? {
                    stack.push(next);
                }
            }
        }
    }
    let forced = tuples.iter().all(|t| t.windows(2).all(|w| w[0] == w[1]));
    Ok(ForcingReport {
        vertices: vs.to_vec(),
        forced,
        hom_exists,
        tuples: tuples
            .into_iter()
            .map(|t| t.into_iter().map(|x| h.vertex_name(x).to_string()).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete, gen_cycle, gen_uc};
    use crate::graph::NEGATIVE;
    use crate::hom::{find_hom, is_isomorphic};

    #[test]
    fn rho_counts_and_edge() {
        let edge = Graph::new(vec!["a", "b"], vec![("a", "b", 1)]).unwrap();
        let r = rho(&edge).unwrap();
        assert_eq!((r.vertex_count(), r.edge_count()), (4, 4));
        assert!(r.has_edge(0, 2, POSITIVE) && r.has_edge(1, 3, POSITIVE));
        assert!(r.has_edge(0, 3, NEGATIVE) && r.has_edge(1, 2, NEGATIVE));
        assert!(matches!(rho(&Graph::new(vec!["a", "b"], vec![("a", "b", 2)]).unwrap()), Err(Error::NotSigned { .. })));
    }

    #[test]
    fn canonical_labelling_matches_circulant() {
        for n in [4, 6, 8, 10] {
            let c = rho_uc_canonical(n).unwrap();
            let m = 2 * n;
            for i in 0..m {
                assert!(c.has_edge(i, (i + 1) % m, POSITIVE));
                assert!(c.has_edge(i, (i + n - 1) % m, NEGATIVE));
            }
            assert_eq!(c.edge_count(), 2 * m);
            let walk = circulant_labelling(&rho(&gen_uc(n).unwrap()).unwrap()).unwrap();
            let expect: Vec<usize> = (0..m).map(|i| 2 * (i % n) + i / n).collect();
            assert_eq!(walk, expect);
            assert!(is_isomorphic(&c, &rho(&gen_uc(n).unwrap()).unwrap()).unwrap());
        }
    }

    #[test]
    fn rho_antitwin_is_automorphism() {
        let r = rho(&gen_uc(6).unwrap()).unwrap();
        let pins: Vec<_> = (0..r.vertex_count()).map(|v| (v, antitwin(v))).collect();
        assert!(find_iso_pinned(&r, &r, &pins).unwrap().is_some());
    }

    fn uc_ind() -> Indicator {
        let g = Graph::new(
            vec!["i", "x", "j", "y"],
            vec![("i", "x", 1), ("x", "j", -1), ("j", "y", 1), ("y", "i", -1)],
        )
        .unwrap();
        Indicator::new(g, "i", "j").unwrap()
    }

    #[test]
    fn indicator_validation() {
        let p = Graph::new(vec!["a", "b", "c"], vec![("a", "b", 1), ("b", "c", -1)]).unwrap();
        assert!(matches!(Indicator::new(p, "a", "c"), Err(Error::InvalidIndicator(_))));
    }

    #[test]
    fn uc4_star_is_two_k4() {
        let star = indicator_apply(&rho(&gen_uc(4).unwrap()).unwrap(), &uc_ind()).unwrap();
        let k4 = gen_complete(4).unwrap();
        let two = k4.prefixed("a").disjoint_union(&k4.prefixed("b")).unwrap();
        assert!(is_isomorphic(&star, &two).unwrap());
    }

    #[test]
    fn edge_replace_single_edge_and_triangle() {
        let c5 = gen_cycle(5, None).unwrap();
        let ind = Indicator::new(c5.clone(), "x_0", "x_2").unwrap();
        let k2 = gen_complete(2).unwrap();
        let out = edge_replace(&k2, &ind, None).unwrap();
        assert!(is_isomorphic(&out, &c5).unwrap());
        let k3 = gen_complete(3).unwrap();
        let out = edge_replace(&k3, &ind, k3.rotation()).unwrap();
        assert_eq!(out.vertex_count(), 12);
        assert_eq!(out.stats().girth, Some(5));
        assert!(out.rotation().is_some());
    }

    #[test]
    fn edge_replace_transfers_homs() {
        let h = rho(&gen_uc(4).unwrap()).unwrap();
        let ind = uc_ind();
        let star = indicator_apply(&h, &ind).unwrap();
        let cfg = SearchConfig::default();
        for g in [gen_complete(3).unwrap(), gen_complete(4).unwrap(), gen_cycle(4, None).unwrap()] {
            let lhs = find_hom(&g, &star, &cfg).unwrap().is_some();
            let rhs = find_hom(&edge_replace(&g, &ind, None).unwrap(), &h, &cfg).unwrap().is_some();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn path_replace_examples() {
        let uc4 = gen_uc(4).unwrap();
        let j = path_replace(&uc4, "x_0", "x_1", 3).unwrap();
        assert_eq!(j.vertex_count(), 6);
        assert_eq!(j.stats().girth, Some(6));
        assert!(matches!(path_replace(&uc4, "x_0", "x_2", 3), Err(Error::NoSuchEdge { .. })));
        assert!(matches!(path_replace(&uc4, "x_0", "x_1", 2), Err(Error::BadParameter(_))));
        // the negative edge is not eligible
        assert!(matches!(path_replace(&uc4, "x_0", "x_3", 3), Err(Error::NoSuchEdge { .. })));
    }

    #[test]
    fn doubling() {
        let k2 = gen_complete(2).unwrap();
        let d = double_identify(&k2, "k_0", "k_1").unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (2, 1));
        let c6 = gen_cycle(6, None).unwrap();
        let d = double_identify(&c6, "x_0", "x_1").unwrap();
        assert_eq!(d.vertex_count(), 10);
        assert!(matches!(double_identify(&c6, "x_0", "x_0"), Err(Error::BadVertices(_))));
        assert!(matches!(double_identify(&c6, "x_0", "zz"), Err(Error::BadVertices(_))));
    }

    #[test]
    fn forcing_examples() {
        let k3 = gen_complete(3).unwrap();
        let c4 = gen_cycle(4, None).unwrap();
        let r = check_forcing(&c4, &["x_0".into()], &k3, None).unwrap();
        assert!(r.forced);
        let r = check_forcing(&c4, &["x_0".into(), "x_2".into()], &k3, None).unwrap();
        assert!(!r.forced);
        assert_eq!(r.tuples.len(), 9);
        // opposite corners of a diamond are forced together in K_3
        let diamond = Graph::new(
            vec!["a", "b", "c", "d"],
            vec![("a", "b", 1), ("a", "c", 1), ("b", "c", 1), ("b", "d", 1), ("c", "d", 1)],
        )
        .unwrap();
        let r = check_forcing(&diamond, &["a".into(), "d".into()], &k3, None).unwrap();
        assert!(r.forced && r.tuples.len() == 3);
    }
}
