use proptest::prelude::*;

use signhom::constructions::{antitwin, rho};
use signhom::hom::{core_of, find_hom, find_shom, is_hom, is_isomorphic, is_shom_witness, SearchConfig};
use signhom::io::{graph_from_json, graph_to_json};
use signhom::{Edge, Graph, SwitchSet, NEGATIVE, POSITIVE};

/// A signed graph on `1..=max_n` vertices; each pair is absent, positive,
/// negative or both.
fn signed(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(0u8..4, pairs).prop_map(move |states| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if states[k] & 1 == 1 {
                        edges.push(Edge { u, v, colour: POSITIVE });
                    }
                    if states[k] & 2 == 2 {
                        edges.push(Edge { u, v, colour: NEGATIVE });
                    }
                    k += 1;
                }
            }
            Graph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
        })
    })
}

fn with_mask(max_n: usize) -> impl Strategy<Value = (Graph, Vec<bool>)> {
    signed(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(any::<bool>(), n))
    })
}

fn brute_hom(g: &Graph, h: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    (0..m.pow(n as u32)).any(|code| {
        let f: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        is_hom(g, h, &f)
    })
}

fn edge_multiset(g: &Graph) -> Vec<(usize, usize, i32)> {
    let mut es: Vec<_> = g.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v), e.colour)).collect();
    es.sort();
    es
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn switching_twice_is_identity((g, mask) in with_mask(7)) {
        let s = SwitchSet::from_mask(&g, &mask);
        let back = g.switch(&s).unwrap().switch(&s).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn balance_survives_switching((g, mask) in with_mask(7)) {
        let sw = g.switch(&SwitchSet::from_mask(&g, &mask)).unwrap();
        prop_assert_eq!(g.is_balanced().unwrap(), sw.is_balanced().unwrap());
    }

    #[test]
    fn switching_equivalence_witness_is_correct((g, mask) in with_mask(7)) {
        let sw = g.switch(&SwitchSet::from_mask(&g, &mask)).unwrap();
        let s = g.switching_equivalent(&sw).unwrap();
        prop_assert!(s.is_some());
        let again = g.switch(&s.unwrap()).unwrap();
        prop_assert_eq!(edge_multiset(&again), edge_multiset(&sw));
    }

    #[test]
    fn solver_matches_brute_force(g in signed(5), h in signed(3)) {
        let fast = find_hom(&g, &h, &cfg()).unwrap();
        if let Some(f) = &fast {
            prop_assert!(is_hom(&g, &h, &f.assignment));
        }
        prop_assert_eq!(fast.is_some(), brute_hom(&g, &h));
    }

    #[test]
    fn homomorphisms_compose(g in signed(5), h in signed(4), k in signed(3)) {
        if let (Some(f), Some(e)) = (find_hom(&g, &h, &cfg()).unwrap(), find_hom(&h, &k, &cfg()).unwrap()) {
            prop_assert!(is_hom(&g, &k, &f.then(&e).assignment));
        }
    }

    #[test]
    fn shom_iff_hom_to_switching_graph(g in signed(5), h in signed(3)) {
        let w = find_shom(&g, &h, &cfg()).unwrap();
        if let Some(w) = &w {
            prop_assert!(is_shom_witness(&g, &h, w).unwrap());
        }
        let direct = find_hom(&g, &rho(&h).unwrap(), &cfg()).unwrap();
        prop_assert_eq!(w.is_some(), direct.is_some());
    }

    #[test]
    fn antitwins_swap_edge_signs(h in signed(4)) {
        let r = rho(&h).unwrap();
        for e in r.edges() {
            prop_assert!(r.has_edge(antitwin(e.u), e.v, -e.colour));
            prop_assert!(r.has_edge(antitwin(e.u), antitwin(e.v), e.colour));
        }
    }

    #[test]
    fn core_is_idempotent_and_equivalent(g in signed(6)) {
        let c = core_of(&g).unwrap();
        prop_assert!(c.vertex_count() <= g.vertex_count());
        prop_assert!(find_hom(&g, &c, &cfg()).unwrap().is_some());
        prop_assert!(find_hom(&c, &g, &cfg()).unwrap().is_some());
        prop_assert!(is_isomorphic(&core_of(&c).unwrap(), &c).unwrap());
    }

    #[test]
    fn json_round_trip(g in signed(7)) {
        let s = graph_to_json(&g);
        let back = graph_from_json(&s).unwrap();
        prop_assert_eq!(graph_to_json(&back), s);
        prop_assert_eq!(back, g);
    }
}
