//! Exact homomorphism, s-homomorphism, isomorphism and core computations.

mod solver;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::ops::ControlFlow;

pub use solver::{SearchConfig, Solver, VariableOrder};

use crate::constructions::rho;
use crate::error::{Error, Result};
use crate::graph::{Colour, Graph, SwitchSet};

/// Default vertex bound for core and s-core computation.
pub const CORE_BOUND: usize = 24;

/// A vertex map from a source graph to a target graph, by vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    pub assignment: Vec<usize>,
}

impl Homomorphism {
    pub fn new(assignment: Vec<usize>) -> Self {
        Homomorphism { assignment }
    }

    pub fn image(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn to_names(&self, g: &Graph, h: &Graph) -> BTreeMap<String, String> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, &t)| (g.vertex_name(v).to_string(), h.vertex_name(t).to_string()))
            .collect()
    }

    pub fn from_names(g: &Graph, h: &Graph, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut assignment = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let t = map
                .get(v)
                .ok_or_else(|| Error::PartialAssignment(v.clone()))?;
            assignment.push(h.require_vertex(t)?);
        }
        Ok(Homomorphism { assignment })
    }

    /// `other` after `self`.
    pub fn then(&self, other: &Homomorphism) -> Homomorphism {
        Homomorphism {
            assignment: self.assignment.iter().map(|&t| other.assignment[t]).collect(),
        }
    }
}

/// Switching on the source followed by a homomorphism of the switched graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SHomWitness {
    pub switch_set: SwitchSet,
    pub hom: Homomorphism,
}

/// Edge-by-edge check of the homomorphism condition.
pub fn is_hom(g: &Graph, h: &Graph, f: &[usize]) -> bool {
    f.len() == g.vertex_count()
        && f.iter().all(|&t| t < h.vertex_count())
        && g.edges()
            .iter()
            .all(|e| f[e.u] != f[e.v] && h.has_edge(f[e.u], f[e.v], e.colour))
}

/// Named variant of [`is_hom`]; a map missing a source vertex is an error.
pub fn check_hom(g: &Graph, h: &Graph, f: &BTreeMap<String, String>) -> Result<bool> {
    let hom = Homomorphism::from_names(g, h, f)?;
    Ok(is_hom(g, h, &hom.assignment))
}

pub fn find_hom(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<Option<Homomorphism>> {
    Ok(Solver::new(g, h, cfg)?.find()?.map(Homomorphism::new))
}

/// Like [`find_hom`] with some source vertices pinned to target vertices.
pub fn find_hom_pinned(
    g: &Graph,
    h: &Graph,
    pins: &[(usize, usize)],
    cfg: &SearchConfig,
) -> Result<Option<Homomorphism>> {
    let mut s = Solver::new(g, h, cfg)?;
    for &(x, t) in pins {
        s.pin(x, t);
    }
    Ok(s.find()?.map(Homomorphism::new))
}

/// All homomorphisms, in search order. Fails with `LimitExceeded` when more
/// than `cfg.limit` exist.
pub fn enumerate_homs(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<Vec<Homomorphism>> {
    let (homs, complete) = enumerate_homs_bounded(g, h, cfg)?;
    if complete {
        Ok(homs)
    } else {
        Err(Error::LimitExceeded { found: homs.len() })
    }
}

/// Up to `cfg.limit` homomorphisms, and whether the list is complete.
pub fn enumerate_homs_bounded(
    g: &Graph,
    h: &Graph,
    cfg: &SearchConfig,
) -> Result<(Vec<Homomorphism>, bool)> {
    let mut s = Solver::new(g, h, cfg)?;
    enumerate_with(&mut s, cfg.limit)
}

pub(crate) fn enumerate_with(s: &mut Solver, limit: Option<usize>) -> Result<(Vec<Homomorphism>, bool)> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut overflow = false;
    s.for_each(|a| {
        if limit.is_some_and(|l| out.len() >= l) {
            overflow = true;
            return ControlFlow::Break(());
        }
        if seen.insert(a.to_vec()) {
            out.push(Homomorphism::new(a.to_vec()));
        }
        ControlFlow::Continue(())
    })?;
    Ok((out, !overflow))
}

/// Counts homomorphisms without storing them.
pub fn count_homs(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<u64> {
    let mut n = 0u64;
    Solver::new(g, h, cfg)?.for_each(|_| {
        n += 1;
        ControlFlow::Continue(())
    })?;
    Ok(n)
}

/// Decodes a homomorphism into the switching graph: image `w.b` of `v`
/// means `v` maps to `w` after switching at `v` iff `b == 1`.
fn fold_switching(g: &Graph, f: &Homomorphism) -> SHomWitness {
    let mask: Vec<bool> = f.assignment.iter().map(|&t| t % 2 == 1).collect();
    SHomWitness {
        switch_set: SwitchSet::from_mask(g, &mask),
        hom: Homomorphism::new(f.assignment.iter().map(|&t| t / 2).collect()),
    }
}

/// An s-homomorphism of `g` to `h`, computed as a homomorphism to `rho(h)`.
pub fn find_shom(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<Option<SHomWitness>> {
    g.require_signed()?;
    let rh = rho(h)?;
    Ok(find_hom(g, &rh, cfg)?.map(|f| fold_switching(g, &f)))
}

/// Checks an s-homomorphism witness directly.
pub fn is_shom_witness(g: &Graph, h: &Graph, w: &SHomWitness) -> Result<bool> {
    let switched = g.switch(&w.switch_set)?;
    Ok(is_hom(&switched, h, &w.hom.assignment))
}

fn colour_signature(g: &Graph) -> Vec<BTreeMap<Colour, usize>> {
    let mut sig = vec![BTreeMap::new(); g.vertex_count()];
    for e in g.edges() {
        *sig[e.u].entry(e.colour).or_insert(0) += 1;
        *sig[e.v].entry(e.colour).or_insert(0) += 1;
    }
    sig
}

/// A colour-preserving isomorphism, if one exists.
pub fn find_iso(g: &Graph, h: &Graph) -> Result<Option<Homomorphism>> {
    find_iso_pinned(g, h, &[])
}

/// Isomorphism search with some vertices pinned.
pub fn find_iso_pinned(g: &Graph, h: &Graph, pins: &[(usize, usize)]) -> Result<Option<Homomorphism>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let count = |x: &Graph| {
        let mut m: BTreeMap<Colour, usize> = BTreeMap::new();
        for e in x.edges() {
            *m.entry(e.colour).or_insert(0) += 1;
        }
        m
    };
    if count(g) != count(h) {
        return Ok(None);
    }
    let (sg, sh) = (colour_signature(g), colour_signature(h));
    let mut s = Solver::new(g, h, &SearchConfig::default())?;
    s.injective(true);
    for v in 0..g.vertex_count() {
        let mask = (0..h.vertex_count())
            .filter(|&w| sg[v] == sh[w])
            .fold(0u64, |m, w| m | (1 << w));
        s.restrict(v, mask);
    }
    for &(x, t) in pins {
        s.pin(x, t);
    }
    let found = s.find()?.map(Homomorphism::new);
    debug_assert!(found.as_ref().is_none_or(|f| is_hom(g, h, &f.assignment)));
    Ok(found)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_iso(g, h)?.is_some())
}

/// The core: repeatedly retract onto the image of an endomorphism that
/// avoids some vertex, until none exists.
pub fn core_of(g: &Graph) -> Result<Graph> {
    core_of_bounded(g, CORE_BOUND)
}

pub fn core_of_bounded(g: &Graph, bound: usize) -> Result<Graph> {
    if g.vertex_count() > bound {
        return Err(Error::BoundExceeded {
            vertices: g.vertex_count(),
            bound,
        });
    }
    let mut cur = g.clone().without_rotation();
    'shrink: loop {
        for v in 0..cur.vertex_count() {
            let mut s = Solver::new(&cur, &cur, &SearchConfig::deterministic())?;
            let avoid = !(1u64 << v);
            for x in 0..cur.vertex_count() {
                s.restrict(x, avoid);
            }
            if let Some(f) = s.find()? {
                let image: Vec<usize> = f.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
                cur = cur.induced_subgraph(&image);
                continue 'shrink;
            }
        }
        return Ok(cur);
    }
}

/// The s-core: the same retraction loop, with s-homomorphisms into induced
/// signed subgraphs carrying their inherited signs.
pub fn score_of(g: &Graph) -> Result<Graph> {
    score_of_bounded(g, CORE_BOUND)
}

pub fn score_of_bounded(g: &Graph, bound: usize) -> Result<Graph> {
    g.require_signed()?;
    if g.vertex_count() > bound {
        return Err(Error::BoundExceeded {
            vertices: g.vertex_count(),
            bound,
        });
    }
    let mut cur = g.clone().without_rotation();
    'shrink: loop {
        for v in 0..cur.vertex_count() {
            let keep: Vec<usize> = (0..cur.vertex_count()).filter(|&x| x != v).collect();
            let sub = cur.induced_subgraph(&keep);
            if let Some(w) = find_shom(&cur, &sub, &SearchConfig::deterministic())? {
                let image: BTreeSet<usize> = w.hom.assignment.iter().map(|&t| keep[t]).collect();
                cur = cur.induced_subgraph(&image.into_iter().collect::<Vec<_>>());
                continue 'shrink;
            }
        }
        return Ok(cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete, gen_cycle, gen_cycle_square, gen_uc};

    fn k(n: usize) -> Graph {
        gen_complete(n).unwrap()
    }

    /// Brute force over all |V(H)|^|V(G)| maps.
    fn brute_force_exists(g: &Graph, h: &Graph) -> bool {
        let (n, m) = (g.vertex_count(), h.vertex_count());
        if n == 0 {
            return true;
        }
        if m == 0 {
            return false;
        }
        let mut f = vec![0usize; n];
        loop {
            if is_hom(g, h, &f) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                f[i] += 1;
                if f[i] < m {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn check_hom_examples() {
        let k3 = k(3);
        let id: BTreeMap<String, String> =
            k3.vertices().iter().map(|v| (v.clone(), v.clone())).collect();
        assert!(check_hom(&k3, &k3, &id).unwrap());
        let c4 = gen_cycle(4, None).unwrap();
        let k2 = k(2);
        assert!(!is_hom(&c4, &k2, &[0, 0, 0, 0]));
        // closed 5-walk 0,1,2,0,2 in K_3
        let c5 = gen_cycle(5, None).unwrap();
        assert!(is_hom(&c5, &k3, &[0, 1, 2, 0, 2]));
        let mut partial = id.clone();
        partial.remove("k_0");
        assert!(matches!(check_hom(&k3, &k3, &partial), Err(Error::PartialAssignment(_))));
    }

    #[test]
    fn find_hom_examples() {
        let cfg = SearchConfig::default();
        assert!(find_hom(&k(3), &k(3), &cfg).unwrap().is_some());
        let c3 = gen_cycle(3, None).unwrap();
        let c5 = gen_cycle(5, None).unwrap();
        assert!(find_hom(&c3, &c5, &cfg).unwrap().is_none());
        let c6 = gen_cycle(6, None).unwrap();
        let f = find_hom(&c6, &k(2), &cfg).unwrap().unwrap();
        assert!(is_hom(&c6, &k(2), &f.assignment));
    }

    #[test]
    fn deterministic_witness_is_lexicographically_least() {
        let c6 = gen_cycle(6, None).unwrap();
        let f = find_hom(&c6, &k(3), &SearchConfig::deterministic()).unwrap().unwrap();
        let all = enumerate_homs(&c6, &k(3), &SearchConfig::deterministic()).unwrap();
        assert_eq!(&f, all.iter().min().unwrap());
        assert_eq!(f.assignment, vec![0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn enumeration_examples() {
        let cfg = SearchConfig::default();
        assert_eq!(enumerate_homs(&k(2), &k(2), &cfg).unwrap().len(), 2);
        assert_eq!(enumerate_homs(&k(1), &k(3), &cfg).unwrap().len(), 3);
        assert_eq!(
            enumerate_homs(&k(1), &k(3), &cfg.clone().with_limit(2)),
            Err(Error::LimitExceeded { found: 2 })
        );
        let uc4 = gen_uc(4).unwrap();
        let r = rho(&uc4).unwrap();
        let homs = enumerate_homs(&uc4, &r, &cfg).unwrap();
        assert!(!homs.is_empty());
        for f in &homs {
            let distinct: BTreeSet<_> = f.assignment.iter().collect();
            assert_eq!(distinct.len(), 4);
        }
    }

    #[test]
    fn shom_examples() {
        let cfg = SearchConfig::default();
        let c6 = gen_cycle(6, Some(&[1, -1, -1, 1, 1, 1])).unwrap();
        let k2 = k(2);
        let w = find_shom(&c6, &k2, &cfg).unwrap().unwrap();
        assert!(is_shom_witness(&c6, &k2, &w).unwrap());
        let uc4 = gen_uc(4).unwrap();
        let w = find_shom(&uc4, &uc4, &SearchConfig::deterministic()).unwrap().unwrap();
        assert!(is_shom_witness(&uc4, &uc4, &w).unwrap());
        let c4 = gen_cycle(4, None).unwrap();
        assert!(find_shom(&uc4, &c4, &cfg).unwrap().is_none());
    }

    #[test]
    fn iso_examples() {
        let c7sq = gen_cycle_square(7).unwrap();
        let c7 = gen_cycle(7, None).unwrap();
        assert!(find_iso(&c7sq, &c7.complement()).unwrap().is_some());
        assert!(find_iso(&k(3), &k(3)).unwrap().is_some());
        let c4 = gen_cycle(4, None).unwrap();
        assert!(find_iso(&c4, &k(4)).unwrap().is_none());
    }

    #[test]
    fn core_examples() {
        let core = core_of(&gen_cycle_square(6).unwrap()).unwrap();
        assert!(is_isomorphic(&core, &k(3)).unwrap());
        let c8 = gen_cycle(8, None).unwrap();
        assert!(is_isomorphic(&core_of(&c8).unwrap(), &k(2)).unwrap());
        assert_eq!(core_of(&k(4)).unwrap().vertex_count(), 4);
        let big = gen_cycle(25, None).unwrap();
        assert!(matches!(core_of(&big), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn score_examples() {
        let c6 = gen_cycle(6, Some(&[1, -1, -1, 1, 1, 1])).unwrap();
        let s = score_of(&c6).unwrap();
        assert_eq!((s.vertex_count(), s.edge_count()), (2, 1));
        let uc4 = gen_uc(4).unwrap();
        assert_eq!(score_of(&uc4).unwrap(), uc4.clone().without_rotation());
        let edge = Graph::new(vec!["a", "b"], vec![("a", "b", 1)]).unwrap();
        assert_eq!(score_of(&edge).unwrap(), edge);
    }

    #[test]
    fn solver_matches_brute_force_on_small_signed_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let (n, m) = (rng.gen_range(1..=5), rng.gen_range(1..=4));
            let g = random_signed(&mut rng, n, 0.5);
            let h = random_signed(&mut rng, m, 0.6);
            let fast = find_hom(&g, &h, &SearchConfig::default()).unwrap().is_some();
            assert_eq!(fast, brute_force_exists(&g, &h), "{g:?} -> {h:?}");
        }
    }

    pub(crate) fn random_signed(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                for c in [1, -1] {
                    if rng.gen_bool(p / 2.0) {
                        edges.push(crate::graph::Edge { u, v, colour: c });
                    }
                }
            }
        }
        Graph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
    }
}
