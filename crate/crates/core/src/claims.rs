//! Registry of checkable statements about the gadgets, indicators and
//! reductions, each re-derived by exhaustive search.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{check_forcing, indicator_apply, rho, rho_uc_canonical};
use crate::embedding::{certify_embedding, search_planar_rotation};
use crate::error::{Error, Result};
use crate::families::{
    gen_circular_clique, gen_complete, gen_cycle, gen_cycle_square, gen_random_signed, gen_uc,
};
use crate::graph::{Edge, Graph, POSITIVE};
use crate::hom::{core_of, find_hom, find_hom_pinned, find_shom, is_isomorphic, is_shom_witness, SearchConfig, Solver};
use crate::reductions::{
    case1_cycle, case1_retraction, cc_indicator, copy_gadget, crossing_gadget, degree_gadget,
    reduce_3col_to_uc4, reduce_to_cycle_square, split_gadget, uc_indicator, GadgetGraph,
};

/// Default per-claim time budget.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(600);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Verified,
    Refuted,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: ClaimStatus,
    pub evidence: Value,
    pub runtime_s: f64,
}

pub struct Claim {
    pub id: &'static str,
    /// What is being checked, in a sentence.
    pub anchor: &'static str,
    check: fn(&Ctx) -> Result<Outcome>,
}

/// Per-claim context: the deadline every search runs against.
pub struct Ctx {
    deadline: Option<Instant>,
}

impl Ctx {
    fn cfg(&self) -> SearchConfig {
        SearchConfig::default().with_deadline(self.deadline)
    }

    fn tick(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Interrupted),
            _ => Ok(()),
        }
    }
}

struct Outcome {
    holds: bool,
    evidence: Value,
}

fn verified(evidence: Value) -> Result<Outcome> {
    Ok(Outcome { holds: true, evidence })
}

fn refuted(evidence: Value) -> Result<Outcome> {
    Ok(Outcome { holds: false, evidence })
}

pub fn registry() -> Vec<Claim> {
    let mut v = vec![
        Claim {
            id: "lemma8.forward",
            anchor: "every map of the copy gadget to rho(UC_4) copies x1 to x2 and y1 to y2, with y1 two steps from x1",
            check: lemma8_forward,
        },
        Claim {
            id: "lemma8.converse",
            anchor: "each admissible boundary pattern of the copy gadget extends to a map into rho(UC_4)",
            check: lemma8_converse,
        },
        Claim {
            id: "lemma9.forward",
            anchor: "with equal grounds the split gadget sends x2, y2 two steps from the ground, and x1 opposite the ground exactly when x2 and y2 differ",
            check: lemma9_forward,
        },
        Claim {
            id: "lemma9.converse",
            anchor: "each admissible boundary pattern of the split gadget with equal grounds extends",
            check: lemma9_converse,
        },
        Claim {
            id: "lemma10.forward",
            anchor: "every map of the crossing gadget copies x1 to x2 and y1 to y2, with y1 two or four steps from x1",
            check: lemma10_forward,
        },
        Claim {
            id: "lemma10.converse",
            anchor: "each admissible boundary pattern of the crossing gadget extends",
            check: lemma10_converse,
        },
        Claim {
            id: "fig1.rho-uc4-star",
            anchor: "the signed 4-cycle indicator applied to rho(UC_4) gives two disjoint K_4",
            check: fig1_rho_uc4_star,
        },
        Claim {
            id: "fig2.uc6-core",
            anchor: "each component of rho(UC_6)* has a triangle as core",
            check: |c| star_components_core(c, 6, &gen_cycle(3, None)?),
        },
        Claim {
            id: "fig2.uc8-core",
            anchor: "each component of rho(UC_8)* is the Wagner graph K_8/3 and is a core",
            check: |c| star_components_core(c, 8, &gen_circular_clique(8, 3)?),
        },
        Claim {
            id: "thm4.core-t-mod3",
            anchor: "the squares of C_6 and C_9 have K_3 as core",
            check: thm4_core_mod3,
        },
        Claim {
            id: "thm4.case-t2mod4",
            anchor: "gluing C_6^2 along v0v2 on every edge: G maps to C_3 iff the result maps to C_6^2",
            check: |c| thm4_case(c, 6),
        },
        Claim {
            id: "thm4.case-t-odd",
            anchor: "gluing C_7^2 minus v0v2 along v0v1 on every edge: G maps to C_7 iff the result maps to C_7^2",
            check: |c| thm4_case(c, 7),
        },
        Claim {
            id: "thm4.case-t0mod4",
            anchor: "face vertices joined by copies of C_8^2 minus two edges: G is 3-colourable iff the result maps to C_8^2",
            check: |c| thm4_case(c, 8),
        },
        Claim {
            id: "thm5.iso",
            anchor: "the odd cycle indicator applied to K_4t/(2t-1) gives C_4t^2, for t = 2, 3",
            check: thm5_iso,
        },
        Claim {
            id: "thm6.case1",
            anchor: "for odd k, components of rho(UC_2k)* retract onto C_k and have it as core, k = 3, 5",
            check: thm6_case1,
        },
        Claim {
            id: "thm6.case2",
            anchor: "for k = 4, components of rho(UC_2k)* are K_8/3",
            check: thm6_case2,
        },
        Claim {
            id: "thm6.neighbour-set",
            anchor: "a map of the indicator sending i to u_a sends j to u_(a+2k-2), u_(a+2k) or u_(a+2k+2), k = 2, 3",
            check: thm6_neighbour_set,
        },
        Claim {
            id: "prop1.equiv",
            anchor: "s-homomorphism to H agrees with homomorphism to rho(H), cross-checked against all switchings",
            check: prop1_equiv,
        },
        Claim {
            id: "thm7.endtoend",
            anchor: "on connected planar graphs with at most 4 vertices, 3-colourability matches rho(UC_4)-colourability of the reduced instance",
            check: thm7_endtoend,
        },
        Claim {
            id: "thm12.forcing",
            anchor: "degree gadgets force one image on all zero-labelled vertices in rho(UC_2k)",
            check: thm12_forcing,
        },
        Claim {
            id: "thm12.shape",
            anchor: "degree gadgets have girth 2k and maximum degree 4 (k = 2) or 3 (k >= 3) with the external edges",
            check: thm12_shape,
        },
        Claim {
            id: "sec8.k72",
            anchor: "C_7^2 is isomorphic to the complement of C_7",
            check: sec8_k72,
        },
    ];
    v.sort_by_key(|c| c.id);
    v
}

/// Runs every claim whose id matches the glob `pattern` (all when `None`),
/// in parallel, reporting in id order.
pub fn run_claims(pattern: Option<&str>, budget: Duration) -> Result<Vec<ClaimReport>> {
    let pat = pattern
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| Error::BadParameter(format!("bad claim pattern: {e}")))?;
    let claims: Vec<Claim> = registry()
        .into_iter()
        .filter(|c| pat.as_ref().is_none_or(|p| p.matches(c.id)))
        .collect();
    Ok(claims.par_iter().map(|c| run_one(c, budget)).collect())
}

fn run_one(c: &Claim, budget: Duration) -> ClaimReport {
    let start = Instant::now();
    let ctx = Ctx {
        deadline: start.checked_add(budget),
    };
    let (status, evidence) = match (c.check)(&ctx) {
        Ok(o) if o.holds => (ClaimStatus::Verified, o.evidence),
        Ok(o) => (ClaimStatus::Refuted, o.evidence),
        Err(Error::Interrupted) => (
            ClaimStatus::Skipped,
            json!({ "reason": format!("budget of {}s exhausted", budget.as_secs_f64()) }),
        ),
        Err(e) => (ClaimStatus::Refuted, json!({ "counterexample": { "error": e.to_string() } })),
    };
    ClaimReport {
        id: c.id.to_string(),
        status,
        evidence,
        runtime_s: start.elapsed().as_secs_f64(),
    }
}

/// Index of `u_i` in the canonical `rho(UC_n)`.
fn diff(a: usize, b: usize, m: usize) -> usize {
    (b + m - a) % m
}

fn uc4() -> Result<Graph> {
    rho_uc_canonical(4)
}

fn names_of(gd: &GadgetGraph, roles: &[&str]) -> Result<Vec<usize>> {
    roles.iter().map(|r| gd.port(r)).collect()
}

fn pattern_json(t: &Graph, roles: &[&str], images: &[usize]) -> Value {
    roles
        .iter()
        .zip(images)
        .map(|(r, &x)| (r.to_string(), Value::from(t.vertex_name(x))))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

/// Every boundary tuple that extends, for the listed ports.
fn realised(ctx: &Ctx, gd: &GadgetGraph, roles: &[&str], t: &Graph) -> Result<Vec<Vec<usize>>> {
    ctx.tick()?;
    let names: Vec<String> = names_of(gd, roles)?
        .into_iter()
        .map(|v| gd.graph.vertex_name(v).to_string())
        .collect();
    let rep = check_forcing(&gd.graph, &names, t, None)?;
    ctx.tick()?;
    Ok(rep
        .tuples
        .iter()
        .map(|tu| tu.iter().map(|x| t.index_of(x).unwrap()).collect())
        .collect())
}

/// Pins each pattern and checks it extends.
fn all_extend(ctx: &Ctx, gd: &GadgetGraph, roles: &[&str], t: &Graph, patterns: &[Vec<usize>]) -> Result<Outcome> {
    let ports = names_of(gd, roles)?;
    for p in patterns {
        let pins: Vec<(usize, usize)> = ports.iter().copied().zip(p.iter().copied()).collect();
        if find_hom_pinned(&gd.graph, t, &pins, &ctx.cfg())?.is_none() {
            return refuted(json!({ "counterexample": pattern_json(t, roles, p) }));
        }
    }
    verified(json!({ "patterns": patterns.len() }))
}

fn lemma8_forward(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let gd = copy_gadget();
    let p = names_of(&gd, &["x1", "x2", "y1", "y2"])?;
    let mut s = Solver::new(&gd.graph, &t, &ctx.cfg())?;
    let (homs, _) = crate::hom::enumerate_with(&mut s, None)?;
    for h in &homs {
        let a = &h.assignment;
        let ok = a[p[0]] == a[p[1]] && a[p[2]] == a[p[3]] && [2, 6].contains(&diff(a[p[0]], a[p[2]], 8));
        if !ok {
            return refuted(json!({ "counterexample": h.to_names(&gd.graph, &t) }));
        }
    }
    verified(json!({ "homs": homs.len() }))
}

fn lemma8_converse(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let mut patterns = Vec::new();
    for x in [0, 2, 4, 6] {
        for d in [2, 6] {
            let y = (x + d) % 8;
            patterns.push(vec![x, x, y, y]);
        }
    }
    all_extend(ctx, &copy_gadget(), &["x1", "x2", "y1", "y2"], &t, &patterns)
}

const SPLIT_ROLES: [&str; 6] = ["g1", "g2", "g3", "x1", "x2", "y2"];

fn split_ok(v: &[usize]) -> bool {
    let g = v[0];
    let (dx1, dx2, dy2) = (diff(g, v[3], 8), diff(g, v[4], 8), diff(g, v[5], 8));
    [2, 6].contains(&dx2)
        && [2, 6].contains(&dy2)
        && ((dx1 == 4) == (v[4] != v[5]))
        && ([2, 6].contains(&dx1) == (v[4] == v[5] && v[5] == v[3]))
        && dx1 != 0
}

fn lemma9_forward(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let tuples = realised(ctx, &split_gadget(), &SPLIT_ROLES, &t)?;
    let mut grounded = 0;
    for v in &tuples {
        if v[0] == v[1] && v[1] == v[2] {
            grounded += 1;
            if !split_ok(v) {
                return refuted(json!({ "counterexample": pattern_json(&t, &SPLIT_ROLES, v) }));
            }
        }
    }
    verified(json!({ "boundary_tuples": tuples.len(), "equal_ground_tuples": grounded }))
}

fn lemma9_converse(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let mut patterns = Vec::new();
    for g in [0, 2, 4, 6] {
        let (lo, hi, opp) = ((g + 6) % 8, (g + 2) % 8, (g + 4) % 8);
        patterns.push(vec![g, g, g, opp, lo, hi]);
        patterns.push(vec![g, g, g, opp, hi, lo]);
        patterns.push(vec![g, g, g, lo, lo, lo]);
        patterns.push(vec![g, g, g, hi, hi, hi]);
    }
    all_extend(ctx, &split_gadget(), &SPLIT_ROLES, &t, &patterns)
}

const CROSS_ROLES: [&str; 4] = ["x1", "x2", "y1", "y2"];

fn lemma10_forward(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let tuples = realised(ctx, &crossing_gadget()?, &CROSS_ROLES, &t)?;
    for v in &tuples {
        let ok = v[0] == v[1] && v[2] == v[3] && [2, 4, 6].contains(&diff(v[0], v[2], 8));
        if !ok {
            return refuted(json!({ "counterexample": pattern_json(&t, &CROSS_ROLES, v) }));
        }
    }
    verified(json!({ "boundary_tuples": tuples.len() }))
}

fn lemma10_converse(ctx: &Ctx) -> Result<Outcome> {
    let t = uc4()?;
    let mut patterns = Vec::new();
    for x in [0, 2, 4, 6] {
        for d in [2, 4, 6] {
            let y = (x + d) % 8;
            patterns.push(vec![x, x, y, y]);
        }
    }
    all_extend(ctx, &crossing_gadget()?, &CROSS_ROLES, &t, &patterns)
}

fn components(g: &Graph) -> Vec<Graph> {
    let (comp, n) = g.components();
    (0..n)
        .map(|c| {
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| comp[v] == c).collect();
            g.induced_subgraph(&keep)
        })
        .collect()
}

fn uc_star(n: usize) -> Result<Graph> {
    indicator_apply(&rho_uc_canonical(n)?, &uc_indicator())
}

fn fig1_rho_uc4_star(ctx: &Ctx) -> Result<Outcome> {
    let star = indicator_apply(&rho(&gen_uc(4)?)?, &uc_indicator())?;
    ctx.tick()?;
    let k4 = gen_complete(4)?;
    let two = k4.prefixed("a").disjoint_union(&k4.prefixed("b"))?;
    let iso = is_isomorphic(&star, &two)?;
    let ev = json!({ "vertices": star.vertex_count(), "edges": star.edge_count(), "isomorphic_to_2K4": iso });
    if iso {
        verified(ev)
    } else {
        refuted(json!({ "counterexample": ev }))
    }
}

fn star_components_core(ctx: &Ctx, n: usize, expect: &Graph) -> Result<Outcome> {
    let star = uc_star(n)?;
    let comps = components(&star);
    let mut sizes = Vec::new();
    for c in &comps {
        ctx.tick()?;
        let core = core_of(c)?;
        sizes.push(core.vertex_count());
        if !is_isomorphic(&core, expect)? {
            return refuted(json!({ "counterexample": { "component_vertices": c.vertices(), "core_vertices": core.vertices() } }));
        }
    }
    verified(json!({ "components": comps.len(), "core_sizes": sizes }))
}

fn thm4_core_mod3(ctx: &Ctx) -> Result<Outcome> {
    let k3 = gen_complete(3)?;
    for t in [6, 9] {
        ctx.tick()?;
        let core = core_of(&gen_cycle_square(t)?)?;
        if !is_isomorphic(&core, &k3)? {
            return refuted(json!({ "counterexample": { "t": t, "core_vertices": core.vertices() } }));
        }
    }
    verified(json!({ "t": [6, 9] }))
}

/// Connected graphs on one to four vertices, each with a planar rotation.
pub fn small_connected_graphs() -> Vec<Graph> {
    let spec: [(&str, usize, &[(usize, usize)]); 10] = [
        ("K_1", 1, &[]),
        ("K_2", 2, &[(0, 1)]),
        ("P_3", 3, &[(0, 1), (1, 2)]),
        ("K_3", 3, &[(0, 1), (1, 2), (0, 2)]),
        ("P_4", 4, &[(0, 1), (1, 2), (2, 3)]),
        ("K_1,3", 4, &[(0, 1), (0, 2), (0, 3)]),
        ("C_4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
        ("paw", 4, &[(0, 1), (1, 2), (0, 2), (2, 3)]),
        ("diamond", 4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
        ("K_4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    ];
    spec.iter()
        .map(|&(name, n, es)| {
            let g = Graph::from_indexed(
                (0..n).map(|i| format!("a{i}")).collect(),
                es.iter().map(|&(u, v)| Edge { u, v, colour: POSITIVE }).collect(),
            )
            .unwrap();
            let r = search_planar_rotation(&g, 100_000).unwrap();
            g.with_rotation(r).unwrap().with_name(name)
        })
        .collect()
}

fn three_colourable(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..3usize.pow(n as u32)).any(|code| {
        let col: Vec<usize> = (0..n).map(|i| code / 3usize.pow(i as u32) % 3).collect();
        g.edges().iter().all(|e| col[e.u] != col[e.v])
    })
}

fn thm4_case(ctx: &Ctx, t: usize) -> Result<Outcome> {
    let cfg = ctx.cfg();
    let target = gen_cycle_square(t)?;
    let mut rows = Vec::new();
    for g in small_connected_graphs() {
        let source = match t % 4 {
            2 => find_hom(&g, &gen_cycle(t / 2, None)?, &cfg)?.is_some(),
            0 => three_colourable(&g),
            _ => find_hom(&g, &gen_cycle(t, None)?, &cfg)?.is_some(),
        };
        let (out, cert) = reduce_to_cycle_square(&g, t, g.rotation())?;
        if let Some(r) = &cert.rotation {
            certify_embedding(&out, r)?;
        }
        let reduced = find_hom(&out, &target, &cfg)?.is_some();
        let row = json!({ "graph": g.name(), "source": source, "reduced": reduced, "vertices": out.vertex_count() });
        if source != reduced {
            return refuted(json!({ "counterexample": row }));
        }
        rows.push(row);
    }
    verified(json!({ "instances": rows }))
}

fn thm5_iso(ctx: &Ctx) -> Result<Outcome> {
    for t in [2, 3] {
        ctx.tick()?;
        let star = indicator_apply(&gen_circular_clique(4 * t, 2 * t - 1)?, &cc_indicator(t)?)?;
        if !is_isomorphic(&star, &gen_cycle_square(4 * t)?)? {
            return refuted(json!({ "counterexample": { "t": t } }));
        }
    }
    verified(json!({ "t": [2, 3] }))
}

fn thm6_case1(ctx: &Ctx) -> Result<Outcome> {
    let mut ev = Vec::new();
    for k in [3, 5] {
        ctx.tick()?;
        let star = uc_star(2 * k)?;
        let f = case1_retraction(k)?;
        let cyc = case1_cycle(k)?;
        let is_retraction = crate::hom::is_hom(&star, &star, &f.assignment) && cyc.iter().all(|&c| f.assignment[c] == c);
        let ck = gen_cycle(k, None)?;
        let onto_cycle = is_isomorphic(&star.induced_subgraph(&cyc), &ck)?;
        let mut cores = true;
        for c in components(&star) {
            ctx.tick()?;
            cores &= is_isomorphic(&core_of(&c)?, &ck)?;
        }
        let row = json!({ "k": k, "retraction": is_retraction, "image_is_cycle": onto_cycle, "component_cores_are_cycle": cores });
        if !(is_retraction && onto_cycle && cores) {
            return refuted(json!({ "counterexample": row }));
        }
        ev.push(row);
    }
    verified(Value::from(ev))
}

fn thm6_case2(ctx: &Ctx) -> Result<Outcome> {
    let star = uc_star(8)?;
    let wagner = gen_circular_clique(8, 3)?;
    let comps = components(&star);
    for c in &comps {
        ctx.tick()?;
        if !is_isomorphic(c, &wagner)? {
            return refuted(json!({ "counterexample": { "component_vertices": c.vertices() } }));
        }
    }
    verified(json!({ "components": comps.len() }))
}

fn thm6_neighbour_set(ctx: &Ctx) -> Result<Outcome> {
    let ind = uc_indicator();
    let mut counts = Vec::new();
    for k in [2, 3] {
        let t = rho_uc_canonical(2 * k)?;
        let m = 4 * k;
        let mut s = Solver::new(ind.graph(), &t, &ctx.cfg())?;
        let (homs, _) = crate::hom::enumerate_with(&mut s, None)?;
        for h in &homs {
            let d = diff(h.image(ind.i()), h.image(ind.j()), m);
            if ![2 * k - 2, 2 * k, 2 * k + 2].contains(&d) {
                return refuted(json!({ "counterexample": { "k": k, "hom": h.to_names(ind.graph(), &t) } }));
            }
        }
        counts.push(json!({ "k": k, "homs": homs.len() }));
    }
    verified(Value::from(counts))
}

/// Number of random pairs in the s-homomorphism cross-check.
pub const PROP1_PAIRS: u64 = 200;

fn prop1_equiv(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.cfg();
    let mut yes = 0;
    for seed in 0..PROP1_PAIRS {
        ctx.tick()?;
        let n = 1 + (seed % 8) as usize;
        let m = 1 + (seed % 5) as usize;
        let g = gen_random_signed(n, 0.5, 2 * seed)?;
        let h = gen_random_signed(m, 0.6, 2 * seed + 1)?;
        let fast = find_shom(&g, &h, &cfg)?;
        let brute = (0..1u32 << n).any(|mask| {
            let bits: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            let sw = g.switch(&crate::graph::SwitchSet::from_mask(&g, &bits)).unwrap();
            find_hom(&sw, &h, &cfg).unwrap().is_some()
        });
        let witness_ok = match &fast {
            Some(w) => is_shom_witness(&g, &h, w)?,
            None => true,
        };
        if fast.is_some() != brute || !witness_ok {
            return refuted(json!({ "counterexample": { "seed": seed, "n": n, "m": m, "solver": fast.is_some(), "brute_force": brute } }));
        }
        yes += usize::from(brute);
    }
    verified(json!({ "pairs": PROP1_PAIRS, "yes": yes }))
}

fn thm7_endtoend(ctx: &Ctx) -> Result<Outcome> {
    let cfg = ctx.cfg();
    let target = uc4()?;
    let mut rows = Vec::new();
    for g in small_connected_graphs() {
        ctx.tick()?;
        let col = three_colourable(&g);
        let (h, cert) = reduce_3col_to_uc4(&g, g.rotation().unwrap())?;
        certify_embedding(&h, cert.rotation.as_ref().unwrap())?;
        let bip = h.stats().bipartite;
        let maps = find_hom(&h, &target, &cfg)?.is_some();
        let row = json!({ "graph": g.name(), "three_colourable": col, "maps": maps, "bipartite": bip, "vertices": h.vertex_count() });
        if col != maps || !bip {
            return refuted(json!({ "counterexample": row }));
        }
        rows.push(row);
    }
    verified(json!({ "instances": rows }))
}

const DEGREE_CASES: [(usize, usize); 4] = [(2, 1), (2, 2), (3, 1), (3, 2)];

fn thm12_forcing(ctx: &Ctx) -> Result<Outcome> {
    let mut rows = Vec::new();
    for (k, m) in DEGREE_CASES {
        ctx.tick()?;
        let gd = degree_gadget(k, m)?;
        let rep = check_forcing(&gd.graph, &gd.zeros, &rho_uc_canonical(2 * k)?, None)?;
        let row = json!({ "k": k, "m": m, "zeros": rep.vertices, "forced": rep.forced, "hom_exists": rep.hom_exists, "tuples": rep.tuples });
        if !rep.forced || !rep.hom_exists {
            return refuted(json!({ "counterexample": row }));
        }
        rows.push(row);
    }
    verified(Value::from(rows))
}

fn thm12_shape(_: &Ctx) -> Result<Outcome> {
    let mut rows = Vec::new();
    for (k, m) in DEGREE_CASES {
        let gd = degree_gadget(k, m)?;
        let g = &gd.graph;
        let zeros = gd.zero_indices();
        let adj = g.simple_adjacency();
        let max = (0..g.vertex_count())
            .map(|v| adj[v].len() + usize::from(zeros.contains(&v)))
            .max()
            .unwrap_or(0);
        let girth = g.stats().girth;
        let planar = certify_embedding(g, g.rotation().unwrap()).is_ok();
        let bound = if k == 2 { 4 } else { 3 };
        let row = json!({ "k": k, "m": m, "max_degree": max, "girth": girth, "planar": planar });
        if max > bound || girth != Some(2 * k) || !planar {
            return refuted(json!({ "counterexample": row }));
        }
        rows.push(row);
    }
    verified(Value::from(rows))
}

fn sec8_k72(_: &Ctx) -> Result<Outcome> {
    let iso = is_isomorphic(&gen_cycle_square(7)?, &gen_cycle(7, None)?.complement())?;
    if iso {
        verified(json!({ "isomorphic": true }))
    } else {
        refuted(json!({ "counterexample": { "isomorphic": false } }))
    }
}
