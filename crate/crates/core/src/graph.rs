//! Edge-coloured graphs, signed graphs and the switching calculus.
//!
//! A graph is an ordered list of string-labelled vertices and a list of
//! coloured undirected edges. Signed graphs are the special case where every
//! colour is `+1` or `-1`. Parallel edges are allowed only when their colours
//! differ; loops are rejected.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::embedding::RotationSystem;
use crate::error::{Error, Result};

pub type Colour = i32;

pub const POSITIVE: Colour = 1;
pub const NEGATIVE: Colour = -1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: Colour,
}

impl Edge {
    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    fn key(&self) -> (usize, usize, Colour) {
        (self.u.min(self.v), self.u.max(self.v), self.colour)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Graph {
    name: Option<String>,
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    rotation: Option<RotationSystem>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.rotation == other.rotation
    }
}

impl Eq for Graph {}

/// Checks the three structural invariants on raw vertex/edge lists.
pub fn validate_graph<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, Colour)]) -> Result<()> {
    let mut index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.as_ref(), i).is_some() {
            return Err(Error::DuplicateVertex(v.as_ref().to_string()));
        }
    }
    let mut seen = BTreeSet::new();
    for (e, (u, v, c)) in edges.iter().enumerate() {
        let (u, v) = (u.as_ref(), v.as_ref());
        for x in [u, v] {
            if !index.contains_key(x) {
                return Err(Error::UnknownEndpoint {
                    edge: e,
                    vertex: x.to_string(),
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge {
                edge: e,
                vertex: u.to_string(),
            });
        }
        let (a, b) = (index[u], index[v]);
        if !seen.insert((a.min(b), a.max(b), *c)) {
            return Err(Error::DuplicateColouredEdge {
                edge: e,
                u: u.to_string(),
                v: v.to_string(),
                colour: *c,
            });
        }
    }
    Ok(())
}

impl Graph {
    pub fn new<S: Into<String> + AsRef<str> + Clone>(
        vertices: Vec<S>,
        edges: Vec<(S, S, Colour)>,
    ) -> Result<Self> {
        validate_graph(&vertices, &edges)?;
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index: HashMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let edges = edges
            .into_iter()
            .map(|(u, v, colour)| Edge {
                u: index[u.as_ref()],
                v: index[v.as_ref()],
                colour,
            })
            .collect();
        Ok(Graph {
            name: None,
            vertices,
            index,
            edges,
            rotation: None,
        })
    }

    /// Builds from index-based edges; used internally by constructions.
    pub fn from_indexed(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v)?;
        }
        for (i, e) in edges.iter().enumerate() {
            if e.u >= b.vertices.len() || e.v >= b.vertices.len() {
                return Err(Error::UnknownEndpoint {
                    edge: i,
                    vertex: format!("#{}", e.u.max(e.v)),
                });
            }
            b.try_add_edge(e.u, e.v, e.colour, i)?;
        }
        Ok(b.build())
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    /// Attaches a rotation system after checking it covers every incidence.
    pub fn with_rotation(mut self, rotation: RotationSystem) -> Result<Self> {
        rotation.check_covers(&self)?;
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rotation(&self) -> Option<&RotationSystem> {
        self.rotation.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn colours(&self) -> BTreeSet<Colour> {
        self.edges.iter().map(|e| e.colour).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize, colour: Colour) -> bool {
        self.find_edge(u, v, colour).is_some()
    }

    pub fn find_edge(&self, u: usize, v: usize, colour: Colour) -> Option<usize> {
        let key = (u.min(v), u.max(v), colour);
        self.edges.iter().position(|e| e.key() == key)
    }

    /// Incident (neighbour, edge index) pairs per vertex, in edge-list order.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.u].push((e.v, i));
            inc[e.v].push((e.u, i));
        }
        inc
    }

    /// Distinct neighbours per vertex, colour-blind and sorted.
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn is_signed(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.colour == POSITIVE || e.colour == NEGATIVE)
    }

    pub fn require_signed(&self) -> Result<()> {
        match self
            .edges
            .iter()
            .find(|e| e.colour != POSITIVE && e.colour != NEGATIVE)
        {
            Some(e) => Err(Error::NotSigned { colour: e.colour }),
            None => Ok(()),
        }
    }

    /// Connected component id per vertex plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.simple_adjacency();
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut count = 0;
        for s in 0..self.vertices.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Subgraph induced by `keep`, vertices in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut map = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| Edge {
                u: map[e.u],
                v: map[e.v],
                colour: e.colour,
            })
            .collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        Graph::from_indexed(vertices, edges).expect("induced subgraph of a valid graph")
    }

    /// The same graph with every vertex id prefixed by `prefix.`.
    pub fn prefixed(&self, prefix: &str) -> Graph {
        let mut g = self.clone();
        g.vertices = self
            .vertices
            .iter()
            .map(|v| format!("{prefix}.{v}"))
            .collect();
        g.index = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        g.name = None;
        g
    }

    /// Disjoint union; vertex ids must not collide.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut b = GraphBuilder::new();
        for v in self.vertices.iter().chain(other.vertices.iter()) {
            b.add_vertex(v.clone())?;
        }
        let n = self.vertices.len();
        for e in &self.edges {
            b.add_edge(e.u, e.v, e.colour);
        }
        for e in &other.edges {
            b.add_edge(e.u + n, e.v + n, e.colour);
        }
        Ok(b.build())
    }

    /// Complement of the underlying simple graph, single colour `+1`.
    pub fn complement(&self) -> Graph {
        let adj = self.simple_adjacency();
        let n = self.vertices.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adj[u].binary_search(&v).is_err() {
                    edges.push(Edge {
                        u,
                        v,
                        colour: POSITIVE,
                    });
                }
            }
        }
        Graph::from_indexed(self.vertices.clone(), edges).expect("complement is simple")
    }

    /// Switches at every vertex of `s`.
    pub fn switch(&self, s: &SwitchSet) -> Result<Graph> {
        self.require_signed()?;
        let mask = s.mask(self)?;
        Ok(self.switch_mask(&mask))
    }

    pub(crate) fn switch_mask(&self, mask: &[bool]) -> Graph {
        let mut g = self.clone();
        for e in &mut g.edges {
            if mask[e.u] != mask[e.v] {
                e.colour = -e.colour;
            }
        }
        g
    }

    /// True iff the signed graph is switching-equivalent to its all-positive
    /// version. Propagates a switching potential along a spanning forest and
    /// checks every remaining edge.
    pub fn is_balanced(&self) -> Result<bool> {
        self.require_signed()?;
        Ok(self.balancing_potential().is_some())
    }

    /// A switch mask making every edge positive, if one exists.
    pub(crate) fn balancing_potential(&self) -> Option<Vec<bool>> {
        let inc = self.incidence();
        let n = self.vertices.len();
        let mut pot: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if pot[root].is_some() {
                continue;
            }
            pot[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let px = pot[x].unwrap();
                for &(y, ei) in &inc[x] {
                    let want = px ^ (self.edges[ei].colour == NEGATIVE);
                    match pot[y] {
                        None => {
                            pot[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(py) if py != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(pot.into_iter().map(Option::unwrap).collect())
    }

    /// Finds `s` with `switch(self, s) == other`, if any. Both graphs must be
    /// signed, share their labelled vertex set and have identical underlying
    /// multigraphs.
    pub fn switching_equivalent(&self, other: &Graph) -> Result<Option<SwitchSet>> {
        self.require_signed()?;
        other.require_signed()?;
        if self.vertices.len() != other.vertices.len()
            || self.vertices.iter().any(|v| other.index_of(v).is_none())
        {
            return Err(Error::VertexSetMismatch);
        }
        let n = self.vertices.len();
        // pair -> colours present, per graph, in self's indexing
        let mut pairs: HashMap<(usize, usize), (Vec<Colour>, Vec<Colour>)> = HashMap::new();
        for e in &self.edges {
            let k = (e.u.min(e.v), e.u.max(e.v));
            pairs.entry(k).or_default().0.push(e.colour);
        }
        for e in &other.edges {
            let (a, b) = (
                self.index[&other.vertices[e.u]],
                self.index[&other.vertices[e.v]],
            );
            pairs.entry((a.min(b), a.max(b))).or_default().1.push(e.colour);
        }
        // parity constraints: s[u] xor s[v] == flip
        let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
        for (&(a, b), (c1, c2)) in &pairs {
            if c1.len() != c2.len() {
                return Ok(None);
            }
            if c1.len() == 1 {
                let flip = c1[0] != c2[0];
                constraints[a].push((b, flip));
                constraints[b].push((a, flip));
            }
        }
        let mut s: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if s[root].is_some() {
                continue;
            }
            s[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let sx = s[x].unwrap();
                for &(y, flip) in &constraints[x] {
                    let want = sx ^ flip;
                    match s[y] {
                        None => {
                            s[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(sy) if sy != want => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        let members = (0..n)
            .filter(|&i| s[i] == Some(true))
            .map(|i| self.vertices[i].clone())
            .collect();
        Ok(Some(SwitchSet::new(members)))
    }

    pub fn stats(&self) -> StructuralStats {
        let adj = self.simple_adjacency();
        let n = adj.len();
        let (_, components) = self.components();
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        let mut girth: Option<usize> = None;
        let mut bipartite = true;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        if dist[x] == dist[y] {
                            bipartite = false;
                        }
                        let len = dist[x] + dist[y] + 1;
                        girth = Some(girth.map_or(len, |g| g.min(len)));
                    }
                }
            }
        }
        StructuralStats {
            girth,
            bipartite,
            max_degree,
            connected_components: components,
        }
    }
}

/// Incremental builder; `add_edge` silently merges duplicates of the same
/// pair and colour, which is what vertex identification needs.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    keys: std::collections::HashSet<(usize, usize, Colour)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        let i = self.vertices.len();
        self.index.insert(name.clone(), i);
        self.vertices.push(name);
        Ok(i)
    }

    /// Returns the existing index or creates the vertex.
    pub fn vertex(&mut self, name: &str) -> usize {
        match self.index.get(name) {
            Some(&i) => i,
            None => self.add_vertex(name).unwrap(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Adds the edge unless an identical pair-colour edge exists; returns the
    /// edge index either way. Panics on loops.
    pub fn add_edge(&mut self, u: usize, v: usize, colour: Colour) -> usize {
        assert_ne!(u, v, "loop edge in construction");
        let key = (u.min(v), u.max(v), colour);
        if self.keys.insert(key) {
            self.edges.push(Edge { u, v, colour });
            self.edges.len() - 1
        } else {
            self.edges.iter().position(|e| e.key() == key).unwrap()
        }
    }

    pub fn add_named_edge(&mut self, u: &str, v: &str, colour: Colour) -> usize {
        let (a, b) = (self.vertex(u), self.vertex(v));
        self.add_edge(a, b, colour)
    }

    fn try_add_edge(&mut self, u: usize, v: usize, colour: Colour, pos: usize) -> Result<()> {
        if u == v {
            return Err(Error::LoopEdge {
                edge: pos,
                vertex: self.vertices[u].clone(),
            });
        }
        let key = (u.min(v), u.max(v), colour);
        if !self.keys.insert(key) {
            return Err(Error::DuplicateColouredEdge {
                edge: pos,
                u: self.vertices[u].clone(),
                v: self.vertices[v].clone(),
                colour,
            });
        }
        self.edges.push(Edge { u, v, colour });
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn build(self) -> Graph {
        Graph {
            name: None,
            vertices: self.vertices,
            index: self.index,
            edges: self.edges,
            rotation: None,
        }
    }
}

/// A set of vertex ids at which to switch.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchSet(BTreeSet<String>);

impl SwitchSet {
    pub fn new(members: BTreeSet<String>) -> Self {
        SwitchSet(members)
    }

    pub fn members(&self) -> &BTreeSet<String> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn mask(&self, g: &Graph) -> Result<Vec<bool>> {
        let mut mask = vec![false; g.vertex_count()];
        for m in &self.0 {
            mask[g.require_vertex(m)?] = true;
        }
        Ok(mask)
    }

    pub fn from_mask(g: &Graph, mask: &[bool]) -> Self {
        SwitchSet(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| g.vertex_name(i).to_string())
                .collect(),
        )
    }
}

impl<S: Into<String>> FromIterator<S> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        SwitchSet(iter.into_iter().map(Into::into).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralStats {
    /// `None` means infinite girth (a forest).
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub max_degree: usize,
    pub connected_components: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uc4() -> Graph {
        Graph::new(
            vec!["x_0", "x_1", "x_2", "x_3"],
            vec![
                ("x_0", "x_1", 1),
                ("x_1", "x_2", 1),
                ("x_2", "x_3", 1),
                ("x_3", "x_0", -1),
            ],
        )
        .unwrap()
    }

    fn negative_pairs(g: &Graph) -> BTreeSet<(String, String)> {
        g.edges()
            .iter()
            .filter(|e| e.colour == NEGATIVE)
            .map(|e| {
                let (a, b) = (g.vertex_name(e.u), g.vertex_name(e.v));
                (a.min(b).to_string(), a.max(b).to_string())
            })
            .collect()
    }

    #[test]
    fn validation_errors_name_the_edge() {
        assert!(validate_graph(&["a", "b"], &[("a", "b", 1), ("a", "b", -1)]).is_ok());
        assert_eq!(
            validate_graph(&["a"], &[("a", "a", 1)]),
            Err(Error::LoopEdge {
                edge: 0,
                vertex: "a".into()
            })
        );
        assert!(matches!(
            validate_graph(&["a", "b"], &[("a", "b", 1), ("b", "a", 1)]),
            Err(Error::DuplicateColouredEdge { edge: 1, .. })
        ));
        assert!(matches!(
            validate_graph(&["a"], &[("a", "z", 1)]),
            Err(Error::UnknownEndpoint { edge: 0, .. })
        ));
    }

    #[test]
    fn switching_examples() {
        let g = uc4();
        let all: SwitchSet = g.vertices().iter().cloned().collect();
        assert_eq!(g.switch(&all).unwrap(), g);
        let x0: SwitchSet = ["x_0"].into_iter().collect();
        assert_eq!(g.switch(&x0).unwrap().switch(&x0).unwrap(), g);
        let once = g.switch(&x0).unwrap();
        assert_eq!(
            negative_pairs(&once),
            BTreeSet::from([("x_0".to_string(), "x_1".to_string())])
        );
    }

    #[test]
    fn switch_rejects_unsigned() {
        let g = Graph::new(vec!["a", "b"], vec![("a", "b", 3)]).unwrap();
        assert_eq!(
            g.switch(&SwitchSet::default()),
            Err(Error::NotSigned { colour: 3 })
        );
    }

    #[test]
    fn balance_examples() {
        let c4 = Graph::new(
            vec!["a", "b", "c", "d"],
            vec![("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)],
        )
        .unwrap();
        assert!(c4.is_balanced().unwrap());
        assert!(!uc4().is_balanced().unwrap());
        let digon = Graph::new(vec!["a", "b"], vec![("a", "b", 1), ("a", "b", -1)]).unwrap();
        assert!(!digon.is_balanced().unwrap());
    }

    #[test]
    fn switching_equivalence_examples() {
        let g = uc4();
        let x0: SwitchSet = ["x_0"].into_iter().collect();
        let s = g.switching_equivalent(&g.switch(&x0).unwrap()).unwrap().unwrap();
        assert_eq!(g.switch(&s).unwrap(), g.switch(&x0).unwrap());
        assert_eq!(g.switching_equivalent(&g).unwrap(), Some(SwitchSet::default()));
        let c4 = Graph::new(
            vec!["x_0", "x_1", "x_2", "x_3"],
            vec![
                ("x_0", "x_1", 1),
                ("x_1", "x_2", 1),
                ("x_2", "x_3", 1),
                ("x_3", "x_0", 1),
            ],
        )
        .unwrap();
        assert_eq!(g.switching_equivalent(&c4).unwrap(), None);
        let other = Graph::new(vec!["p", "q", "r", "s"], Vec::<(&str, &str, i32)>::new()).unwrap();
        assert_eq!(g.switching_equivalent(&other), Err(Error::VertexSetMismatch));
    }

    #[test]
    fn stats_examples() {
        let s = Graph::new(vec!["a", "b", "c"], Vec::<(&str, &str, i32)>::new())
            .unwrap()
            .stats();
        assert_eq!(
            s,
            StructuralStats {
                girth: None,
                bipartite: true,
                max_degree: 0,
                connected_components: 3
            }
        );
        let s = uc4().stats();
        assert_eq!(s.girth, Some(4));
        assert!(s.bipartite);
        let tri = Graph::new(
            vec!["a", "b", "c"],
            vec![("a", "b", 1), ("b", "c", 1), ("c", "a", 1)],
        )
        .unwrap();
        assert_eq!(tri.stats().girth, Some(3));
        assert!(!tri.stats().bipartite);
    }

    #[test]
    fn builder_merges_same_colour_duplicates() {
        let mut b = GraphBuilder::new();
        let a = b.add_vertex("a").unwrap();
        let c = b.add_vertex("c").unwrap();
        assert_eq!(b.add_edge(a, c, 1), 0);
        assert_eq!(b.add_edge(c, a, 1), 0);
        assert_eq!(b.add_edge(c, a, -1), 1);
        assert_eq!(b.build().edge_count(), 2);
    }
}
