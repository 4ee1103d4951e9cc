//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use signhom::claims::{run_claims, small_connected_graphs, ClaimStatus};
use signhom::constructions::{indicator_apply, rho, rho_uc_canonical};
use signhom::embedding::certify_embedding;
use signhom::families::{
    gen_circular_clique, gen_complete, gen_cycle, gen_cycle_square, gen_path, gen_uc,
};
use signhom::hom::{core_of, find_hom, is_hom, is_isomorphic, SearchConfig};
use signhom::reductions::{
    cc_indicator, copy_gadget, crossing_gadget, degree_gadget, face_cycle_square_gadget,
    odd_cycle_square_gadget, reduce_3col_to_uc4, reduce_to_cycle_square, split_gadget,
    uc_indicator, vertex_gadget,
};
use signhom::{Edge, Graph, Result, NEGATIVE, POSITIVE};

type Check = fn() -> Result<Vec<String>>;

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

/// Runs the claims matching `pattern`; every one must verify within `each`.
fn claims(pattern: &str, each: Duration) -> Result<Vec<String>> {
    let reports = run_claims(Some(pattern), each)?;
    if reports.is_empty() {
        return Ok(vec![format!("no claims match {pattern}")]);
    }
    Ok(reports
        .iter()
        .filter(|r| r.status != ClaimStatus::Verified || r.runtime_s > each.as_secs_f64())
        .map(|r| format!("{} {:?} in {:.1}s", r.id, r.status, r.runtime_s))
        .collect())
}

fn timed(label: &str, bound: Duration, f: impl FnOnce() -> Result<bool>) -> Result<Option<String>> {
    let start = Instant::now();
    let ok = f()?;
    let took = start.elapsed();
    Ok(if !ok {
        Some(format!("{label}: wrong answer"))
    } else if took > bound {
        Some(format!("{label}: {:.1}s over {:.0}s", took.as_secs_f64(), bound.as_secs_f64()))
    } else {
        None
    })
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

fn c1_copy() -> Result<Vec<String>> {
    claims("lemma8.*", Duration::from_secs(10))
}

fn c2_split_crossing() -> Result<Vec<String>> {
    let mut bad = claims("lemma9.*", Duration::from_secs(60))?;
    bad.extend(claims("lemma10.*", Duration::from_secs(60))?);
    Ok(bad)
}

fn c3_isomorphisms() -> Result<Vec<String>> {
    let bound = Duration::from_secs(30);
    let mut bad = Vec::new();
    bad.extend(timed("rho(UC_4)* = 2K_4", bound, || {
        let k4 = gen_complete(4)?;
        let two = k4.prefixed("a").disjoint_union(&k4.prefixed("b"))?;
        is_isomorphic(&indicator_apply(&rho(&gen_uc(4)?)?, &uc_indicator())?, &two)
    })?);
    bad.extend(timed("rho(UC_8)* components = K_8/3", bound, || {
        let wagner = gen_circular_clique(8, 3)?;
        let comps = components(&indicator_apply(&rho(&gen_uc(8)?)?, &uc_indicator())?);
        let mut ok = !comps.is_empty();
        for c in &comps {
            ok &= is_isomorphic(c, &wagner)?;
        }
        Ok(ok)
    })?);
    bad.extend(timed("K_8/3 with the 5-cycle indicator = C_8^2", bound, || {
        is_isomorphic(
            &indicator_apply(&gen_circular_clique(8, 3)?, &cc_indicator(2)?)?,
            &gen_cycle_square(8)?,
        )
    })?);
    bad.extend(timed("C_7^2 = complement of C_7", bound, || {
        is_isomorphic(&gen_cycle_square(7)?, &gen_cycle(7, None)?.complement())
    })?);
    Ok(bad)
}

fn c4_cores() -> Result<Vec<String>> {
    let bound = minutes(5);
    let mut bad = Vec::new();
    for t in [6, 9] {
        bad.extend(timed(&format!("core(C_{t}^2) = K_3"), bound, || {
            is_isomorphic(&core_of(&gen_cycle_square(t)?)?, &gen_complete(3)?)
        })?);
    }
    for (n, expect) in [
        (6, gen_cycle(3, None)?),
        (10, gen_cycle(5, None)?),
        (8, gen_circular_clique(8, 3)?),
    ] {
        bad.extend(timed(&format!("component cores of rho(UC_{n})*"), bound, || {
            let comps = components(&uc_star(n)?);
            let mut ok = !comps.is_empty();
            for c in &comps {
                ok &= is_isomorphic(&core_of(c)?, &expect)?;
            }
            Ok(ok)
        })?);
    }
    Ok(bad)
}

fn c5_switching() -> Result<Vec<String>> {
    claims("prop1.equiv", minutes(5))
}

/// Every signed graph on vertices `0..n`: each pair is absent, positive,
/// negative or both.
fn all_signed(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..4usize.pow(pairs.len() as u32))
        .map(|code| {
            let mut edges = Vec::new();
            for (k, &(u, v)) in pairs.iter().enumerate() {
                let s = code / 4usize.pow(k as u32) % 4;
                if s & 1 == 1 {
                    edges.push(Edge { u, v, colour: POSITIVE });
                }
                if s & 2 == 2 {
                    edges.push(Edge { u, v, colour: NEGATIVE });
                }
            }
            Graph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
        })
        .collect()
}

fn brute_hom(g: &Graph, h: &Graph) -> bool {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    if n == 0 {
        return true;
    }
    if m == 0 {
        return false;
    }
    (0..m.pow(n as u32)).any(|code| {
        let f: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        is_hom(g, h, &f)
    })
}

fn c6_solver_oracle() -> Result<Vec<String>> {
    let start = Instant::now();
    let sources: Vec<Graph> = (1..=4).flat_map(all_signed).collect();
    let targets: Vec<Graph> = (1..=3).flat_map(all_signed).collect();
    let cfg = SearchConfig::default();
    let mut bad = Vec::new();
    let mut checked = 0usize;
    for g in &sources {
        for h in &targets {
            let fast = find_hom(g, h, &cfg)?;
            if let Some(f) = &fast {
                if !is_hom(g, h, &f.assignment) {
                    bad.push(format!("invalid witness {} -> {}", signhom::io::graph_to_json(g), signhom::io::graph_to_json(h)));
                }
            }
            if fast.is_some() != brute_hom(g, h) {
                bad.push(format!("disagree {} -> {}", signhom::io::graph_to_json(g), signhom::io::graph_to_json(h)));
            }
            checked += 1;
        }
        if bad.len() > 5 {
            break;
        }
    }
    if start.elapsed() > minutes(5) {
        bad.push(format!("{checked} pairs took {:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(bad)
}

fn c7_end_to_end() -> Result<Vec<String>> {
    let target = rho(&gen_uc(4)?)?;
    let cfg = SearchConfig::default();
    let mut bad = Vec::new();
    for (n, bound, expect) in [(3, minutes(5), true), (4, minutes(30), false)] {
        let g = gen_complete(n)?;
        let (h, _) = reduce_3col_to_uc4(&g, g.rotation().unwrap())?;
        bad.extend(timed(&format!("K_{n}"), bound, || Ok(find_hom(&h, &target, &cfg)?.is_some() == expect))?);
    }
    Ok(bad)
}

fn c8_cycle_square() -> Result<Vec<String>> {
    let start = Instant::now();
    let mut bad = claims("thm4.case-*", minutes(15))?;
    if start.elapsed() > minutes(15) {
        bad.push(format!("took {:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(bad)
}

fn c9_degree_gadgets() -> Result<Vec<String>> {
    let start = Instant::now();
    let mut bad = claims("thm12.*", minutes(10))?;
    let reports = run_claims(Some("thm12.forcing"), minutes(10))?;
    let archived = reports
        .first()
        .and_then(|r| r.evidence.as_array())
        .is_some_and(|rows| rows.len() == 4 && rows.iter().all(|r| r["tuples"].as_array().is_some_and(|t| !t.is_empty())));
    if !archived {
        bad.push("forcing report lacks image tuples".into());
    }
    if start.elapsed() > minutes(10) {
        bad.push(format!("took {:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(bad)
}

fn c10_planarity() -> Result<Vec<String>> {
    let start = Instant::now();
    let mut corpus: Vec<Graph> = Vec::new();
    for t in 3..=12 {
        corpus.push(gen_cycle(t, None)?);
    }
    for t in 5..=12 {
        corpus.push(gen_cycle_square(t)?);
    }
    for n in 1..=4 {
        corpus.push(gen_complete(n)?);
    }
    for n in 1..=6 {
        corpus.push(gen_path(n)?);
    }
    for k in 2..=5 {
        corpus.push(gen_uc(2 * k)?);
    }
    corpus.push(copy_gadget().graph);
    corpus.push(split_gadget().graph);
    corpus.push(crossing_gadget()?.graph);
    for d in 1..=4 {
        corpus.push(vertex_gadget(d)?.graph);
    }
    for (k, m) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        corpus.push(degree_gadget(k, m)?.graph);
    }
    for t in [7, 9, 11, 13] {
        corpus.push(odd_cycle_square_gadget(t)?);
    }
    for t in [8, 16] {
        corpus.push(face_cycle_square_gadget(t)?);
    }
    corpus.push(uc_indicator().graph().clone());
    corpus.push(cc_indicator(2)?.graph().clone());
    let mut bad = Vec::new();
    let mut certified = 0;
    for g in small_connected_graphs() {
        let (h, cert) = reduce_3col_to_uc4(&g, g.rotation().unwrap())?;
        match cert.rotation {
            Some(r) => corpus.push(h.with_rotation(r)?),
            None => bad.push(format!("3col reduction of {} has no rotation", g.name().unwrap_or(""))),
        }
        for t in [6, 7, 8, 16] {
            let (h, cert) = reduce_to_cycle_square(&g, t, g.rotation())?;
            if let Some(r) = cert.rotation {
                corpus.push(h.with_rotation(r)?);
            }
        }
    }
    for g in &corpus {
        match g.rotation() {
            Some(r) => match certify_embedding(g, r) {
                Ok(_) => certified += 1,
                Err(e) => bad.push(format!("{}: {e}", g.name().unwrap_or("?"))),
            },
            None => {}
        }
    }
    if certified == 0 {
        bad.push("nothing certified".into());
    }
    if start.elapsed() > minutes(1) {
        bad.push(format!("took {:.0}s", start.elapsed().as_secs_f64()));
    }
    Ok(bad)
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let criteria: [(&str, Check); 10] = [
        ("copy gadget homs and boundary patterns", c1_copy),
        ("split and crossing gadgets", c2_split_crossing),
        ("indicator isomorphisms", c3_isomorphisms),
        ("cores", c4_cores),
        ("s-hom vs switching brute force", c5_switching),
        ("solver vs exhaustive maps", c6_solver_oracle),
        ("3-colouring reduction on K_3 and K_4", c7_end_to_end),
        ("cycle-square reductions", c8_cycle_square),
        ("degree gadgets", c9_degree_gadgets),
        ("rotation certificates", c10_planarity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let problems = check().unwrap_or_else(|e| vec![format!("error: {e}")]);
        let secs = start.elapsed().as_secs_f64();
        if problems.is_empty() {
            println!("criterion {:>2} PASS {name} ({secs:.1}s)", i + 1);
        } else {
            failed += 1;
            println!("criterion {:>2} FAIL {name} ({secs:.1}s): {}", i + 1, problems.join("; "));
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
