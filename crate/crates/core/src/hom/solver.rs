//! Backtracking search with arc consistency over bitset domains.
//!
//! Variables are source vertices, values are target vertices (at most 64).
//! Every source vertex pair joined by edges becomes one binary constraint
//! whose support table is the intersection of the target's per-colour
//! adjacency masks.

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Colour, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariableOrder {
    Lexicographic,
    MinimumRemainingValues,
    /// Smallest domain relative to the conflict weight of its constraints;
    /// a constraint gains weight each time it wipes out a domain.
    #[default]
    DomOverWeightedDegree,
}

#[derive(Debug, Clone, Default)]
pub struct SearchConfig {
    pub order: VariableOrder,
    /// Maximum number of homomorphisms an enumeration may return.
    pub limit: Option<usize>,
    /// Forces lexicographic variable order so witnesses are reproducible.
    pub deterministic: bool,
    pub deadline: Option<Instant>,
}

impl SearchConfig {
    pub fn deterministic() -> Self {
        SearchConfig {
            deterministic: true,
            ..Default::default()
        }
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    fn effective_order(&self) -> VariableOrder {
        if self.deterministic {
            VariableOrder::Lexicographic
        } else {
            self.order
        }
    }
}

struct Arc {
    /// Variable whose domain is revised.
    x: usize,
    /// Variable providing support.
    y: usize,
    table: usize,
}

pub struct Solver {
    n: usize,
    arcs: Vec<Arc>,
    /// Arcs `(z, x)` to re-check when the domain of `x` shrinks.
    watchers: Vec<Vec<usize>>,
    tables: Vec<Vec<u64>>,
    domains: Vec<u64>,
    injective: bool,
    order: VariableOrder,
    deadline: Option<Instant>,
    nodes: u64,
    /// Conflict weight per constraint; arcs `2c` and `2c + 1` form constraint `c`.
    weights: Vec<u64>,
}

#[derive(Clone)]
struct State {
    domains: Vec<u64>,
    broadcast: Vec<bool>,
}

impl Solver {
    pub fn new(g: &Graph, h: &Graph, cfg: &SearchConfig) -> Result<Self> {
        let m = h.vertex_count();
        if m > 64 {
            return Err(Error::TargetTooLarge { vertices: m });
        }
        let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let mut adj: HashMap<Colour, Vec<u64>> = HashMap::new();
        for e in h.edges() {
            let a = adj.entry(e.colour).or_insert_with(|| vec![0; m]);
            a[e.u] |= 1 << e.v;
            a[e.v] |= 1 << e.u;
        }
        let mut pair_colours: HashMap<(usize, usize), Vec<Colour>> = HashMap::new();
        for e in g.edges() {
            pair_colours
                .entry((e.u.min(e.v), e.u.max(e.v)))
                .or_default()
                .push(e.colour);
        }
        let mut pairs: Vec<_> = pair_colours.into_iter().collect();
        pairs.sort();
        let mut table_ids: HashMap<Vec<Colour>, usize> = HashMap::new();
        let mut tables = Vec::new();
        let mut arcs = Vec::new();
        let n = g.vertex_count();
        let mut watchers = vec![Vec::new(); n];
        for ((a, b), mut cs) in pairs {
            cs.sort_unstable();
            let t = *table_ids.entry(cs.clone()).or_insert_with(|| {
                let table = (0..m)
                    .map(|v| {
                        cs.iter().fold(full, |acc, c| {
                            acc & adj.get(c).map_or(0, |row| row[v])
                        })
                    })
                    .collect();
                tables.push(table);
                tables.len() - 1
            });
            for (x, y) in [(a, b), (b, a)] {
                watchers[y].push(arcs.len());
                arcs.push(Arc { x, y, table: t });
            }
        }
        let arcs_len = arcs.len();
        Ok(Solver {
            n,
            arcs,
            watchers,
            tables,
            domains: vec![full; n],
            injective: false,
            order: cfg.effective_order(),
            deadline: cfg.deadline,
            nodes: 0,
            weights: vec![1; arcs_len / 2],
        })
    }

    /// Restricts the candidate images of source vertex `x` to `mask`.
    pub fn restrict(&mut self, x: usize, mask: u64) {
        self.domains[x] &= mask;
    }

    pub fn pin(&mut self, x: usize, value: usize) {
        self.domains[x] &= 1 << value;
    }

    /// Requires the map to be injective.
    pub fn injective(&mut self, on: bool) {
        self.injective = on;
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn revise(&self, dom: &mut [u64], arc: &Arc) -> bool {
        let table = &self.tables[arc.table];
        let dy = dom[arc.y];
        let mut dx = dom[arc.x];
        let mut bits = dx;
        while bits != 0 {
            let a = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if table[a] & dy == 0 {
                dx &= !(1 << a);
            }
        }
        if dx != dom[arc.x] {
            dom[arc.x] = dx;
            true
        } else {
            false
        }
    }

    /// Runs propagation to a fixpoint starting from the changed variables.
    /// Returns false on a wipe-out.
    fn propagate(&mut self, st: &mut State, changed: &[usize]) -> bool {
        match self.propagate_inner(st, changed) {
            Ok(()) => true,
            Err(Some(arc)) => {
                self.weights[arc / 2] += 1;
                false
            }
            Err(None) => false,
        }
    }

    /// `Err(Some(arc))` names the arc that wiped a domain out.
    fn propagate_inner(&self, st: &mut State, changed: &[usize]) -> std::result::Result<(), Option<usize>> {
        let mut queue: VecDeque<usize> = VecDeque::new();
        let mut queued = vec![false; self.arcs.len()];
        let push = |queue: &mut VecDeque<usize>, queued: &mut Vec<bool>, v: usize| {
            for &a in &self.watchers[v] {
                if !queued[a] {
                    queued[a] = true;
                    queue.push_back(a);
                }
            }
        };
        for &v in changed {
            push(&mut queue, &mut queued, v);
        }
        loop {
            while let Some(a) = queue.pop_front() {
                queued[a] = false;
                let arc = &self.arcs[a];
                if self.revise(&mut st.domains, arc) {
                    if st.domains[arc.x] == 0 {
                        return Err(Some(a));
                    }
                    push(&mut queue, &mut queued, arc.x);
                }
            }
            if !self.injective {
                return Ok(());
            }
            // all-different: a fixed value leaves every other domain
            let mut progress = false;
            for x in 0..self.n {
                let d = st.domains[x];
                if !st.broadcast[x] && d.count_ones() == 1 {
                    st.broadcast[x] = true;
                    progress = true;
                    for z in 0..self.n {
                        if z != x && st.domains[z] & d != 0 {
                            st.domains[z] &= !d;
                            if st.domains[z] == 0 {
                                return Err(None);
                            }
                            push(&mut queue, &mut queued, z);
                        }
                    }
                }
            }
            if !progress {
                return Ok(());
            }
        }
    }

    fn choose(&self, dom: &[u64]) -> Option<usize> {
        match self.order {
            VariableOrder::Lexicographic => (0..self.n).find(|&x| dom[x].count_ones() > 1),
            VariableOrder::MinimumRemainingValues => (0..self.n)
                .filter(|&x| dom[x].count_ones() > 1)
                .min_by_key(|&x| (dom[x].count_ones(), x)),
            VariableOrder::DomOverWeightedDegree => {
                let mut best: Option<(u64, u64, usize)> = None;
                for x in (0..self.n).filter(|&x| dom[x].count_ones() > 1) {
                    let wdeg: u64 = self.watchers[x]
                        .iter()
                        .filter(|&&a| dom[self.arcs[a].x].count_ones() > 1)
                        .map(|&a| self.weights[a / 2])
                        .sum::<u64>()
                        .max(1);
                    let d = u64::from(dom[x].count_ones());
                    // d / wdeg < bd / bw, compared without division
                    let better = match best {
                        None => true,
                        Some((bd, bw, _)) => d * bw < bd * wdeg,
                    };
                    if better {
                        best = Some((d, wdeg, x));
                    }
                }
                best.map(|(_, _, x)| x)
            }
        }
    }

    /// Visits every homomorphism in search order until `f` breaks.
    /// Returns `Ok(true)` if the search space was exhausted.
    pub fn for_each(&mut self, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) -> Result<bool> {
        if self.domains.iter().any(|&d| d == 0) {
            return Ok(true);
        }
        let mut st = State {
            domains: self.domains.clone(),
            broadcast: vec![false; self.n],
        };
        let all: Vec<usize> = (0..self.n).collect();
        if !self.propagate(&mut st, &all) {
            return Ok(true);
        }
        let mut assignment = vec![0usize; self.n];
        match self.dfs(st, &mut assignment, &mut f)? {
            ControlFlow::Break(()) => Ok(false),
            ControlFlow::Continue(()) => Ok(true),
        }
    }

    fn dfs(
        &mut self,
        st: State,
        assignment: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::Interrupted);
                }
            }
        }
        let Some(x) = self.choose(&st.domains) else {
            for (v, slot) in assignment.iter_mut().enumerate() {
                *slot = st.domains[v].trailing_zeros() as usize;
            }
            return Ok(f(assignment));
        };
        let mut bits = st.domains[x];
        while bits != 0 {
            let a = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut child = st.clone();
            child.domains[x] = 1 << a;
            if self.propagate(&mut child, &[x]) {
                if let ControlFlow::Break(()) = self.dfs(child, assignment, f)? {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    pub fn find(&mut self) -> Result<Option<Vec<usize>>> {
        let mut found = None;
        self.for_each(|a| {
            found = Some(a.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }
}
