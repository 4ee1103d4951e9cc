//! Generators for the named graph families, with canonical labels.
//!
//! Cycles use `x_i`, squares of cycles `v_i`, circular and complete
//! cliques `k_i`, paths `p_i`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{search_planar_rotation, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Colour, Edge, Graph, NEGATIVE, POSITIVE};

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}_{i}")).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rotation for a graph whose vertices have degree at most two.
fn trivial_rotation(g: &Graph) -> RotationSystem {
    RotationSystem::new(
        g.incidence()
            .into_iter()
            .map(|l| l.into_iter().map(|(_, e)| e).collect())
            .collect(),
    )
}

/// The cycle `x_0 .. x_{t-1}`; edge `i` joins `x_i` and `x_{i+1}` with `signs[i]`.
pub fn gen_cycle(t: usize, signs: Option<&[Colour]>) -> Result<Graph> {
    if t < 3 {
        return Err(Error::BadParameter(format!("cycle length {t} < 3")));
    }
    let signs: Vec<Colour> = match signs {
        Some(s) if s.len() != t => {
            return Err(Error::BadParameter(format!(
                "{} signs given for a cycle of length {t}",
                s.len()
            )))
        }
        Some(s) => {
            if let Some(&c) = s.iter().find(|&&c| c != POSITIVE && c != NEGATIVE) {
                return Err(Error::BadParameter(format!("sign {c} is not +1/-1")));
            }
            s.to_vec()
        }
        None => vec![POSITIVE; t],
    };
    let edges = (0..t)
        .map(|i| Edge {
            u: i,
            v: (i + 1) % t,
            colour: signs[i],
        })
        .collect();
    let g = Graph::from_indexed(names("x", t), edges)?;
    let r = trivial_rotation(&g);
    let name = if signs.iter().all(|&c| c == POSITIVE) {
        format!("C_{t}")
    } else {
        format!("C_{t}[signed]")
    };
    Ok(g.with_rotation(r)?.with_name(name))
}

/// `UC_n`: the cycle of even length `n` whose only negative edge is `x_{n-1} x_0`.
pub fn gen_uc(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::BadParameter(format!(
            "unbalanced cycle length must be even and >= 4, got {n}"
        )));
    }
    let mut signs = vec![POSITIVE; n];
    signs[n - 1] = NEGATIVE;
    Ok(gen_cycle(n, Some(&signs))?.with_name(format!("UC_{n}")))
}

/// Edges of `C_t^2` in generator order: `2i` is `v_i v_{i+1}`, `2i+1` is `v_i v_{i+2}`.
pub fn gen_cycle_square(t: usize) -> Result<Graph> {
    if t < 5 {
        return Err(Error::BadParameter(format!("cycle square needs t >= 5, got {t}")));
    }
    let mut edges = Vec::with_capacity(2 * t);
    for i in 0..t {
        for step in [1, 2] {
            edges.push(Edge {
                u: i,
                v: (i + step) % t,
                colour: POSITIVE,
            });
        }
    }
    let g = Graph::from_indexed(names("v", t), edges)?.with_name(format!("C_{t}^2"));
    if t % 2 == 0 {
        let r = cycle_square_rotation(t);
        return g.with_rotation(r);
    }
    Ok(g)
}

/// Antiprism rotation of `C_t^2`, planar for even `t`: even vertices form
/// the inner ring, odd ones the outer ring. Around even `v_i` the order is
/// `v_{i-2}, v_{i-1}, v_{i+1}, v_{i+2}`; odd vertices use the reverse.
pub fn cycle_square_rotation(t: usize) -> RotationSystem {
    let e = |i: usize, step: usize| 2 * (i % t) + (step - 1);
    RotationSystem::new(
        (0..t)
            .map(|i| {
                let back2 = (i + t - 2) % t;
                let back1 = (i + t - 1) % t;
                let mut around = vec![e(back2, 2), e(back1, 1), e(i, 1), e(i, 2)];
                if i % 2 == 1 {
                    around.reverse();
                }
                around
            })
            .collect(),
    )
}

/// `K_{p/q}`: `k_i ~ k_j` iff `q <= (i - j) mod p <= p - q`.
pub fn gen_circular_clique(p: usize, q: usize) -> Result<Graph> {
    if q == 0 || p < 2 * q || gcd(p, q) != 1 {
        return Err(Error::BadParameter(format!(
            "circular clique needs p >= 2q >= 2 and gcd(p, q) = 1, got {p}/{q}"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..p {
        for j in i + 1..p {
            let d = (j - i) % p;
            if q <= d && d <= p - q {
                edges.push(Edge {
                    u: i,
                    v: j,
                    colour: POSITIVE,
                });
            }
        }
    }
    Ok(Graph::from_indexed(names("k", p), edges)?.with_name(format!("K_{p}/{q}")))
}

/// `K_n`; carries a planar rotation for `n <= 4`.
pub fn gen_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push(Edge {
                u: i,
                v: j,
                colour: POSITIVE,
            });
        }
    }
    let g = Graph::from_indexed(names("k", n), edges)?.with_name(format!("K_{n}"));
    if n <= 4 {
        let r = search_planar_rotation(&g, 10_000).expect("K_n is planar for n <= 4");
        return g.with_rotation(r);
    }
    Ok(g)
}

/// The path `p_0 .. p_{n-1}` with `n - 1` positive edges.
pub fn gen_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("path needs at least one vertex".into()));
    }
    let edges = (1..n)
        .map(|i| Edge {
            u: i - 1,
            v: i,
            colour: POSITIVE,
        })
        .collect();
    let g = Graph::from_indexed(names("p", n), edges)?;
    let r = trivial_rotation(&g);
    Ok(g.with_rotation(r)?.with_name(format!("P_{n}")))
}

/// A random signed graph on `v0 .. v{n-1}`: each vertex pair gets a
/// positive and a negative edge independently with probability `p / 2`.
/// The same seed always yields the same graph.
pub fn gen_random_signed(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for colour in [POSITIVE, NEGATIVE] {
                if rng.gen_bool(p / 2.0) {
                    edges.push(Edge { u, v, colour });
                }
            }
        }
    }
    Graph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::certify_own;
    use crate::hom::{core_of, find_iso, is_isomorphic};

    #[test]
    fn cycles() {
        let c4 = gen_cycle(4, None).unwrap();
        assert!(c4.is_balanced().unwrap());
        assert_eq!(certify_own(&c4).unwrap().faces.len(), 2);
        let uc4 = gen_cycle(4, Some(&[1, 1, 1, -1])).unwrap();
        assert!(!uc4.is_balanced().unwrap());
        assert_eq!(uc4.edges(), gen_uc(4).unwrap().edges());
        assert!(matches!(gen_cycle(2, None), Err(Error::BadParameter(_))));
        assert!(matches!(gen_cycle(4, Some(&[1, 1])), Err(Error::BadParameter(_))));
    }

    #[test]
    fn unbalanced_cycles() {
        for n in [4, 6, 8, 10] {
            let g = gen_uc(n).unwrap();
            assert!(!g.is_balanced().unwrap());
            let s = g.stats();
            assert_eq!(s.girth, Some(n));
            assert!(s.bipartite);
            assert_eq!(g.edges().iter().filter(|e| e.colour == NEGATIVE).count(), 1);
        }
        assert!(gen_uc(5).is_err());
        assert!(gen_uc(2).is_err());
    }

    #[test]
    fn cycle_squares() {
        let c6 = gen_cycle_square(6).unwrap();
        assert_eq!((c6.vertex_count(), c6.edge_count()), (6, 12));
        assert_eq!(c6.stats().max_degree, 4);
        assert_eq!(gen_cycle_square(7).unwrap().stats().girth, Some(3));
        let k72 = gen_circular_clique(7, 2).unwrap();
        assert!(is_isomorphic(&gen_cycle_square(7).unwrap(), &k72).unwrap());
        assert!(is_isomorphic(&gen_cycle_square(5).unwrap(), &gen_complete(5).unwrap()).unwrap());
        assert!(gen_cycle_square(4).is_err());
        for t in (6..=20).step_by(2) {
            let g = gen_cycle_square(t).unwrap();
            certify_own(&g).unwrap();
        }
        assert!(gen_cycle_square(9).unwrap().rotation().is_none());
    }

    #[test]
    fn cycle_square_cores() {
        for t in [6, 9] {
            let core = core_of(&gen_cycle_square(t).unwrap()).unwrap();
            assert!(is_isomorphic(&core, &gen_complete(3).unwrap()).unwrap());
        }
    }

    #[test]
    fn circular_cliques() {
        let w = gen_circular_clique(8, 3).unwrap();
        for i in 0..8 {
            let mut nbrs: Vec<usize> = w.simple_adjacency()[i].clone();
            nbrs.sort();
            let mut expect: Vec<usize> = [3, 4, 5].iter().map(|d| (i + d) % 8).collect();
            expect.sort();
            assert_eq!(nbrs, expect);
        }
        assert!(is_isomorphic(&gen_circular_clique(5, 1).unwrap(), &gen_complete(5).unwrap()).unwrap());
        assert!(is_isomorphic(&gen_circular_clique(5, 2).unwrap(), &gen_cycle(5, None).unwrap()).unwrap());
        assert!(gen_circular_clique(8, 2).is_err());
        assert!(gen_circular_clique(5, 3).is_err());
    }

    #[test]
    fn circular_cliques_are_cubic_and_rotation_invariant() {
        for t in [2, 3] {
            let g = gen_circular_clique(4 * t, 2 * t - 1).unwrap();
            assert!(g.simple_adjacency().iter().all(|a| a.len() == 3));
            let n = g.vertex_count();
            let shift: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let f = find_iso_pinned_all(&g, &shift);
            assert!(f);
        }
    }

    fn find_iso_pinned_all(g: &Graph, pins: &[(usize, usize)]) -> bool {
        crate::hom::find_iso_pinned(g, g, pins).unwrap().is_some()
    }

    #[test]
    fn complete_graphs() {
        let k3 = gen_complete(3).unwrap();
        assert_eq!(k3.stats().girth, Some(3));
        let k4 = gen_complete(4).unwrap();
        assert_eq!(certify_own(&k4).unwrap().faces.len(), 4);
        let k1 = gen_complete(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert!(gen_complete(5).unwrap().rotation().is_none());
        assert!(find_iso(&k4, &k4).unwrap().is_some());
    }

    #[test]
    fn random_signed_is_seeded() {
        let a = gen_random_signed(7, 0.5, 3).unwrap();
        assert_eq!(a, gen_random_signed(7, 0.5, 3).unwrap());
        assert_eq!(gen_random_signed(5, 0.0, 1).unwrap().edge_count(), 0);
        assert!(gen_random_signed(3, 1.5, 1).is_err());
    }

    #[test]
    fn deterministic_output() {
        assert_eq!(gen_cycle_square(10).unwrap(), gen_cycle_square(10).unwrap());
        assert_eq!(gen_complete(4).unwrap().rotation(), gen_complete(4).unwrap().rotation());
    }
}
