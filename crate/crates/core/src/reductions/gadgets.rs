//! Gadgets with named ports and planar rotations.
//!
//! Copy and split gadgets are transcribed from straight-line drawings on
//! the integer grid; the coordinates double as the source of their
//! rotation systems. Crossing and vertex gadgets are glued from those by
//! vertex identification at outer-face corners.

use crate::embedding::{assemble, certify_embedding, Cut, Merge, Piece, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, NEGATIVE, POSITIVE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Copy,
    Split,
    Crossing,
    Vertex(usize),
    Degree { k: usize, m: usize },
}

/// A signed graph with a rotation and named boundary vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    /// Role name to vertex id, in port order.
    pub ports: Vec<(String, String)>,
    /// Vertices labelled 0 in degree gadgets; empty otherwise.
    pub zeros: Vec<String>,
}

impl GadgetGraph {
    pub fn port(&self, role: &str) -> Result<usize> {
        let (_, v) = self
            .ports
            .iter()
            .find(|(r, _)| r == role)
            .ok_or_else(|| Error::BadVertices(format!("no port `{role}`")))?;
        self.graph.require_vertex(v)
    }

    pub fn port_indices(&self) -> Vec<usize> {
        self.ports
            .iter()
            .map(|(_, v)| self.graph.index_of(v).unwrap())
            .collect()
    }

    pub fn zero_indices(&self) -> Vec<usize> {
        self.zeros.iter().map(|v| self.graph.index_of(v).unwrap()).collect()
    }

    /// Cut at the corner of the face that carries every port.
    pub(crate) fn boundary_cut(&self, v: usize) -> Result<Cut> {
        Ok(self.boundary_cuts(v)?[0])
    }

    /// Every corner of `v` on the port face, in walk order.
    pub(crate) fn boundary_cuts(&self, v: usize) -> Result<Vec<Cut>> {
        let r = self.graph.rotation().ok_or(Error::MissingEmbedding)?;
        if r.at(v).is_empty() {
            return Ok(vec![0]);
        }
        let rep = certify_embedding(&self.graph, r)?;
        let face = rep
            .face_containing(&self.port_indices())
            .ok_or_else(|| Error::UncertifiedEmbedding("ports share no face".into()))?;
        let cuts: Vec<Cut> = face
            .vertices
            .iter()
            .zip(&face.darts)
            .filter(|&(&x, _)| x == v)
            .map(|(_, &d)| r.at(v).iter().position(|&e| e == d / 2).unwrap())
            .collect();
        if cuts.is_empty() {
            return Err(Error::UncertifiedEmbedding("port off the boundary face".into()));
        }
        Ok(cuts)
    }
}

pub fn gadget(kind: GadgetKind) -> Result<GadgetGraph> {
    match kind {
        GadgetKind::Copy => Ok(copy_gadget()),
        GadgetKind::Split => Ok(split_gadget()),
        GadgetKind::Crossing => crossing_gadget(),
        GadgetKind::Vertex(d) => vertex_gadget(d),
        GadgetKind::Degree { k, m } => degree_gadget(k, m),
    }
}

fn drawn(nodes: &[(&str, (f64, f64))], pos: &[(&str, &str)], neg: &[(&str, &str)]) -> Graph {
    let mut b = GraphBuilder::new();
    for (name, _) in nodes {
        b.add_vertex(*name).unwrap();
    }
    for &(u, v) in pos {
        b.add_named_edge(u, v, POSITIVE);
    }
    for &(u, v) in neg {
        b.add_named_edge(u, v, NEGATIVE);
    }
    let g = b.build();
    let coords: Vec<(f64, f64)> = nodes.iter().map(|&(_, c)| c).collect();
    let r = RotationSystem::from_coordinates(&g, &coords);
    g.with_rotation(r).unwrap()
}

fn ports(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|&(r, v)| (r.to_string(), v.to_string())).collect()
}

/// Three unbalanced 4-cycles on the 3x3 grid minus a corner.
///
/// x1 (0,1), a (0,2), y2 (1,0), c (1,1), y1 (1,2), b (2,0), x2 (2,1), d (2,2).
pub fn copy_gadget() -> GadgetGraph {
    let g = drawn(
        &[
            ("x1", (0.0, 1.0)),
            ("a", (0.0, 2.0)),
            ("y2", (1.0, 0.0)),
            ("c", (1.0, 1.0)),
            ("y1", (1.0, 2.0)),
            ("b", (2.0, 0.0)),
            ("x2", (2.0, 1.0)),
            ("d", (2.0, 2.0)),
        ],
        &[
            ("x1", "a"),
            ("a", "y1"),
            ("y1", "d"),
            ("d", "x2"),
            ("x2", "b"),
            ("b", "y2"),
            ("y2", "c"),
            ("c", "y1"),
        ],
        &[("x1", "c"), ("c", "x2")],
    )
    .with_name("copy");
    GadgetGraph {
        graph: g,
        ports: ports(&[("x1", "x1"), ("x2", "x2"), ("y1", "y1"), ("y2", "y2")]),
        zeros: Vec::new(),
    }
}

/// x1 (0,0), x2 (0,-2), y2 (2,0), g1 (-2,0), g2 (1,-3), g3 (3,-1),
/// a (1,-1), b (0,-1), c (1,0), d (2,-1), e (3,0), f (0,-3), h (1,-2),
/// k (-1,0).
pub fn split_gadget() -> GadgetGraph {
    let g = drawn(
        &[
            ("x1", (0.0, 0.0)),
            ("x2", (0.0, -2.0)),
            ("y2", (2.0, 0.0)),
            ("g1", (-2.0, 0.0)),
            ("g2", (1.0, -3.0)),
            ("g3", (3.0, -1.0)),
            ("a", (1.0, -1.0)),
            ("b", (0.0, -1.0)),
            ("c", (1.0, 0.0)),
            ("d", (2.0, -1.0)),
            ("e", (3.0, 0.0)),
            ("f", (0.0, -3.0)),
            ("h", (1.0, -2.0)),
            ("k", (-1.0, 0.0)),
        ],
        &[
            ("k", "x1"),
            ("x1", "b"),
            ("b", "x2"),
            ("x2", "f"),
            ("f", "g2"),
            ("x2", "h"),
            ("e", "y2"),
            ("y2", "d"),
            ("d", "g3"),
            ("x1", "c"),
            ("c", "y2"),
            ("b", "a"),
        ],
        &[("h", "g2"), ("e", "g3"), ("c", "a"), ("g1", "k")],
    )
    .with_name("split");
    GadgetGraph {
        graph: g,
        ports: ports(&[
            ("x1", "x1"),
            ("x2", "x2"),
            ("y2", "y2"),
            ("g1", "g1"),
            ("g2", "g2"),
            ("g3", "g3"),
        ]),
        zeros: Vec::new(),
    }
}

/// Two split gadgets (`U` upright, `L` turned half a turn) and two copy
/// gadgets (`CL` left, `CR` right). The grounds of both splits and the inner
/// ends of both copies meet in the centre vertex `c`.
pub fn crossing_gadget() -> Result<GadgetGraph> {
    let split = split_gadget();
    let copy = copy_gadget();
    let pieces = [
        Piece { graph: &split.graph, prefix: "U".into() },
        Piece { graph: &split.graph, prefix: "L".into() },
        Piece { graph: &copy.graph, prefix: "CL".into() },
        Piece { graph: &copy.graph, prefix: "CR".into() },
    ];
    const U: usize = 0;
    const L: usize = 1;
    const CL: usize = 2;
    const CR: usize = 3;
    let at = |p: usize, role: &str| -> Result<(usize, usize, Cut)> {
        let gd = if p <= L { &split } else { &copy };
        let v = gd.port(role)?;
        let cuts = gd.boundary_cuts(v)?;
        // y2 of a split is a cut vertex; the copy attaches on the far side
        let cut = if p <= L && role == "y2" {
            *cuts.last().unwrap()
        } else {
            cuts[0]
        };
        Ok((p, v, cut))
    };
    let merge = |name: &str, members: Vec<(usize, usize, Cut)>| Merge {
        name: name.to_string(),
        members,
    };
    let merges = vec![
        merge("x1", vec![at(U, "x1")?]),
        merge("x2", vec![at(L, "x1")?]),
        merge("y1", vec![at(U, "g1")?, at(CL, "x1")?]),
        merge("y2", vec![at(L, "g1")?, at(CR, "x2")?]),
        // counter-clockwise around the centre
        merge(
            "c",
            vec![
                at(CR, "x1")?,
                at(U, "g3")?,
                at(U, "g2")?,
                at(CL, "x2")?,
                at(L, "g3")?,
                at(L, "g2")?,
            ],
        ),
        merge("U.x2", vec![at(U, "x2")?, at(CL, "y1")?]),
        merge("U.y2", vec![at(U, "y2")?, at(CR, "y1")?]),
        merge("L.y2", vec![at(L, "y2")?, at(CL, "y2")?]),
        merge("L.x2", vec![at(L, "x2")?, at(CR, "y2")?]),
    ];
    let g = assemble(&pieces, &merges)?.with_name("crossing");
    certify_embedding(&g, g.rotation().unwrap())?;
    Ok(GadgetGraph {
        graph: g,
        ports: ports(&[("x1", "x1"), ("y2", "y2"), ("x2", "x2"), ("y1", "y1")]),
        zeros: Vec::new(),
    })
}

/// `d - 1` crossing gadgets `C0 .. C{d-2}` in a chain; consecutive ones share
/// `C{i-1}.y2 = C{i}.x1` and `C{i}.y1 = C{i-1}.x2`. Ports `v_0 .. v_{2d-1}`
/// run around the boundary face.
pub fn vertex_gadget(d: usize) -> Result<GadgetGraph> {
    if d == 0 {
        return Err(Error::BadParameter("vertex gadget needs d >= 1".into()));
    }
    let port_names: Vec<String> = (0..2 * d).map(|i| format!("v_{i}")).collect();
    let port_table = port_names.iter().map(|v| (v.clone(), v.clone())).collect();
    if d == 1 {
        let g = Graph::from_indexed(port_names.clone(), Vec::new())?
            .with_rotation(RotationSystem::new(vec![Vec::new(), Vec::new()]))?
            .with_name("vertex(1)");
        return Ok(GadgetGraph {
            graph: g,
            ports: port_table,
            zeros: Vec::new(),
        });
    }
    let cross = crossing_gadget()?;
    let pieces: Vec<Piece> = (0..d - 1)
        .map(|i| Piece {
            graph: &cross.graph,
            prefix: format!("C{i}"),
        })
        .collect();
    let at = |p: usize, role: &str| -> Result<(usize, usize, Cut)> {
        let v = cross.port(role)?;
        Ok((p, v, cross.boundary_cut(v)?))
    };
    let last = d - 2;
    let mut merges = Vec::with_capacity(2 * d);
    let mut push = |i: usize, members: Vec<(usize, usize, Cut)>| {
        merges.push(Merge {
            name: port_names[i].clone(),
            members,
        })
    };
    push(0, vec![at(0, "x1")?]);
    for i in 1..=last {
        push(i, vec![at(i - 1, "y2")?, at(i, "x1")?]);
    }
    push(d - 1, vec![at(last, "y2")?]);
    push(d, vec![at(last, "x2")?]);
    for j in 1..=last {
        push(d + j, vec![at(d - 1 - j, "y1")?, at(d - 2 - j, "x2")?]);
    }
    push(2 * d - 1, vec![at(0, "y1")?]);
    let g = assemble(&pieces, &merges)?.with_name(format!("vertex({d})"));
    certify_embedding(&g, g.rotation().unwrap())?;
    Ok(GadgetGraph {
        graph: g,
        ports: port_table,
        zeros: Vec::new(),
    })
}

/// `2m` glued unbalanced cycles of length `2k`, forcing a common image on the
/// zero-labelled vertices.
///
/// For `k = 2`: a ladder with bottom row `b_i` (negative path), top row
/// `t_i` (positive path) and positive rungs, `i = 0 .. 2m`; zeros are
/// `b_i` for even `i`.
///
/// For `k >= 3`: cells `m_i`, `t_i` for `i = 0 .. 2m` joined by a positive
/// edge, zeros `z_0 .. z_{2m-1}` with `z_{i-1}` and `z_i` adjacent to `m_i`
/// (positive for even `i`, negative for odd `i`), and a positive path of
/// `2k - 4` edges from `t_i` to `t_{i+1}` (inner vertices `t_i.j`).
pub fn degree_gadget(k: usize, m: usize) -> Result<GadgetGraph> {
    if k < 2 || m < 1 {
        return Err(Error::BadParameter(format!(
            "degree gadget needs k >= 2 and m >= 1, got k={k}, m={m}"
        )));
    }
    let mut nodes: Vec<(String, (f64, f64))> = Vec::new();
    let mut pos: Vec<(String, String)> = Vec::new();
    let mut neg: Vec<(String, String)> = Vec::new();
    let mut zeros = Vec::new();
    let cols = 2 * m;
    if k == 2 {
        for i in 0..=cols {
            nodes.push((format!("b_{i}"), (i as f64, 0.0)));
            nodes.push((format!("t_{i}"), (i as f64, 1.0)));
            pos.push((format!("b_{i}"), format!("t_{i}")));
            if i > 0 {
                neg.push((format!("b_{}", i - 1), format!("b_{i}")));
                pos.push((format!("t_{}", i - 1), format!("t_{i}")));
            }
            if i % 2 == 0 {
                zeros.push(format!("b_{i}"));
            }
        }
    } else {
        for i in 0..=cols {
            let x = i as f64;
            nodes.push((format!("m_{i}"), (x, 0.0)));
            nodes.push((format!("t_{i}"), (x, 1.0)));
            pos.push((format!("m_{i}"), format!("t_{i}")));
            if i < cols {
                nodes.push((format!("z_{i}"), (x + 0.5, -0.5)));
                zeros.push(format!("z_{i}"));
                let inner = 2 * k - 5;
                let mut prev = format!("t_{i}");
                for j in 1..=inner {
                    let name = format!("t_{i}.{j}");
                    let frac = j as f64 / (inner + 1) as f64;
                    nodes.push((name.clone(), (x + frac, 1.0)));
                    pos.push((prev, name.clone()));
                    prev = name;
                }
                pos.push((prev, format!("t_{}", i + 1)));
            }
            let sign_list = if i % 2 == 0 { &mut pos } else { &mut neg };
            if i > 0 {
                sign_list.push((format!("z_{}", i - 1), format!("m_{i}")));
            }
            if i < cols {
                sign_list.push((format!("z_{i}"), format!("m_{i}")));
            }
        }
    }
    let node_refs: Vec<(&str, (f64, f64))> = nodes.iter().map(|(n, c)| (n.as_str(), *c)).collect();
    let pos_refs: Vec<(&str, &str)> = pos.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let neg_refs: Vec<(&str, &str)> = neg.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let g = drawn(&node_refs, &pos_refs, &neg_refs).with_name(format!("degree({k},{m})"));
    Ok(GadgetGraph {
        graph: g,
        ports: zeros.iter().enumerate().map(|(i, z)| (format!("zero_{i}"), z.clone())).collect(),
        zeros,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::certify_own;

    fn signs(g: &Graph) -> (usize, usize) {
        let p = g.edges().iter().filter(|e| e.colour == POSITIVE).count();
        (p, g.edge_count() - p)
    }

    #[test]
    fn copy_shape() {
        let c = copy_gadget();
        assert_eq!(c.graph.vertex_count(), 8);
        assert_eq!(signs(&c.graph), (8, 2));
        assert_eq!(certify_own(&c.graph).unwrap().faces.len(), 4);
        assert!(c.graph.stats().bipartite);
    }

    #[test]
    fn split_shape() {
        let s = split_gadget();
        assert_eq!((s.graph.vertex_count(), s.graph.edge_count()), (14, 16));
        assert_eq!(signs(&s.graph), (12, 4));
        certify_own(&s.graph).unwrap();
        assert!(s.graph.stats().bipartite);
    }

    fn same_side(g: &Graph, vs: &[usize]) -> bool {
        // 2-colour the underlying graph and compare parities
        let (comp, _) = g.components();
        let adj = g.simple_adjacency();
        let mut side = vec![usize::MAX; g.vertex_count()];
        for s in 0..g.vertex_count() {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if side[y] == usize::MAX {
                        side[y] = 1 - side[x];
                        stack.push(y);
                    }
                }
            }
        }
        vs.windows(2)
            .all(|w| comp[w[0]] != comp[w[1]] || side[w[0]] == side[w[1]])
    }

    #[test]
    fn crossing_shape() {
        let c = crossing_gadget().unwrap();
        assert_eq!(c.graph.vertex_count(), 33);
        let rep = certify_own(&c.graph).unwrap();
        let ports = c.port_indices();
        let face = rep.face_containing(&ports).expect("ports on one face");
        // cyclic order x1, y2, x2, y1 along the face (in one direction)
        let order: Vec<usize> = face
            .vertices
            .iter()
            .copied()
            .filter(|v| ports.contains(v))
            .collect();
        assert_eq!(order.len(), 4);
        let start = order.iter().position(|&v| v == ports[0]).unwrap();
        let rotated: Vec<usize> = (0..4).map(|k| order[(start + k) % 4]).collect();
        let mut reversed = rotated.clone();
        reversed[1..].reverse();
        assert!(rotated == ports || reversed == ports, "{rotated:?} vs {ports:?}");
        assert!(c.graph.stats().bipartite);
        assert!(same_side(&c.graph, &ports));
    }

    #[test]
    fn vertex_gadgets_have_ports_on_one_face() {
        for d in 1..=5 {
            let v = vertex_gadget(d).unwrap();
            let rep = certify_own(&v.graph).unwrap();
            let ports = v.port_indices();
            assert_eq!(ports.len(), 2 * d);
            if d == 1 {
                continue;
            }
            assert_eq!(v.graph.vertex_count(), 33 * (d - 1) - 2 * (d - 2));
            let face = rep.face_containing(&ports).expect("ports on one face");
            let mut seen: Vec<usize> = Vec::new();
            for &x in &face.vertices {
                if ports.contains(&x) && !seen.contains(&x) {
                    seen.push(x);
                }
            }
            let start = seen.iter().position(|&x| x == ports[0]).unwrap();
            let rotated: Vec<usize> = (0..seen.len()).map(|k| seen[(start + k) % seen.len()]).collect();
            let mut reversed = rotated.clone();
            reversed[1..].reverse();
            assert!(rotated == ports || reversed == ports, "d={d}");
            assert!(same_side(&v.graph, &ports));
        }
        assert!(vertex_gadget(0).is_err());
    }

    #[test]
    fn degree_gadget_shapes() {
        for (k, m, deg) in [(2, 1, 3), (2, 2, 4), (3, 1, 3), (3, 2, 3), (4, 1, 3)] {
            let gd = degree_gadget(k, m).unwrap();
            let g = &gd.graph;
            certify_own(g).unwrap();
            let st = g.stats();
            assert_eq!(st.girth, Some(2 * k), "k={k} m={m}");
            // zeros carry one external edge in a reduction
            let adj = g.simple_adjacency();
            let zeros = gd.zero_indices();
            let max = (0..g.vertex_count())
                .map(|v| adj[v].len() + usize::from(zeros.contains(&v)))
                .max()
                .unwrap();
            assert_eq!(max, deg, "k={k} m={m}");
            // every face cycle but the outer one is a UC_2k
            assert!(!g.is_balanced().unwrap());
        }
        assert!(degree_gadget(1, 1).is_err());
        assert!(degree_gadget(2, 0).is_err());
    }
}
