//! Independent brute-force computation of extremal and anti-Ramsey
//! quantities on tiny instances. Everything here recomputes from first
//! principles; nothing consults the closed-form module.

use crate::detect::{contains_clique, find_fan, find_rainbow_fan, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{FanSpec, Graph};
use std::time::{Duration, Instant};

/// Node cap and soft wall-clock hint for exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_hint: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_nodes: 200_000_000, time_hint: Duration::from_secs(300) }
    }
}

impl SearchBudget {
    pub fn with_nodes(max_nodes: u64) -> Self {
        SearchBudget { max_nodes, ..Default::default() }
    }
}

/// Result of an exhaustive search: the value, an attaining witness, and how
/// much work it took.
#[derive(Debug, Clone)]
pub struct OracleOutcome<W> {
    pub value: usize,
    pub witness: W,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// What to exclude in a Turán-number search.
#[derive(Debug, Clone, Copy)]
pub enum Forbidden {
    Clique(usize),
    Fan(FanSpec),
}

impl Forbidden {
    /// Does the graph contain the forbidden subgraph through the edge just
    /// added? The caller guarantees the graph was free before the addition,
    /// so a full-graph check is exact.
    fn created_by(&self, g: &Graph, u: usize, v: usize) -> bool {
        match *self {
            Forbidden::Clique(2) => true,
            Forbidden::Clique(r) => {
                let common: crate::graph::VertexSet = (0..g.n())
                    .filter(|&w| g.has_edge(u, w) && g.has_edge(v, w))
                    .collect();
                let (h, _) = g.induced(&common);
                contains_clique(&h, r - 2).is_some()
            }
            Forbidden::Fan(spec) => find_fan(g, spec).is_some(),
        }
    }
}

/// Exact ex(n, forbidden) by branch-and-bound over the edges of K_n in
/// lexicographic order, pruning on a detector hit and on the edges-remaining
/// bound. Restricted to n <= 9.
pub fn brute_force_ex(
    n: usize,
    forbidden: Forbidden,
    budget: &SearchBudget,
) -> Result<OracleOutcome<Graph>> {
    if n > 9 {
        return Err(Error::InvalidArgument("brute_force_ex limited to n <= 9".into()));
    }
    if let Forbidden::Clique(r) = forbidden {
        if r < 2 {
            return Err(Error::InvalidArgument("forbidden clique needs r >= 2".into()));
        }
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut state = ExSearch {
        forbidden,
        pairs,
        g: Graph::empty(n)?,
        best: 0,
        witness: Graph::empty(n)?,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    let start = Instant::now();
    state.rec(0, 0)?;
    Ok(OracleOutcome {
        value: state.best,
        witness: state.witness,
        nodes: state.nodes,
        elapsed: start.elapsed(),
    })
}

struct ExSearch {
    forbidden: Forbidden,
    pairs: Vec<(usize, usize)>,
    g: Graph,
    best: usize,
    witness: Graph,
    nodes: u64,
    max_nodes: u64,
}

impl ExSearch {
    fn rec(&mut self, i: usize, cur: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        if cur > self.best {
            self.best = cur;
            self.witness = self.g.clone();
        }
        if i == self.pairs.len() || cur + (self.pairs.len() - i) <= self.best {
            return Ok(());
        }
        let (u, v) = self.pairs[i];
        self.g.add_edge(u, v);
        if !self.forbidden.created_by(&self.g, u, v) {
            self.rec(i + 1, cur + 1)?;
        }
        self.g.remove_edge(u, v);
        self.rec(i + 1, cur)
    }
}

/// Exact f(nu, delta) by exhaustive search over matched cores with attached
/// outside vertices. Restricted to nu, delta <= 3; the same engine serves the
/// bounded-max construction at slightly larger parameters.
pub fn brute_force_f(
    nu: usize,
    delta: usize,
    budget: &SearchBudget,
) -> Result<OracleOutcome<Graph>> {
    if nu > 3 || delta > 3 {
        return Err(Error::InvalidArgument("brute_force_f limited to nu, delta <= 3".into()));
    }
    if nu < 1 || delta < 1 {
        return Err(Error::InvalidArgument("bounds must be at least 1".into()));
    }
    bounded_degree_matching_search(nu, delta, None, budget)
}

/// Search space: every graph with nu(G) <= nu and no isolated vertices is a
/// core on the 2*nu(G) vertices of a maximum matching (which is a perfect
/// matching of the core, canonically {0,1},{2,3},...) plus independent
/// outside vertices whose neighborhoods lie inside the core. Outside
/// vertices are enumerated as nondecreasing neighborhood masks; the matching
/// number is monotone under additions, so a violating branch is dead.
///
/// With `target` set the search stops at the first graph reaching that edge
/// count; otherwise it maximizes.
pub(crate) fn bounded_degree_matching_search(
    nu: usize,
    delta: usize,
    target: Option<usize>,
    budget: &SearchBudget,
) -> Result<OracleOutcome<Graph>> {
    let start = Instant::now();
    let mut best_e = 0;
    let mut best_g = Graph::empty(0)?;
    let mut nodes = 0u64;
    'cores: for c in (0..=2 * nu).step_by(2) {
        let mut st = CoreSearch {
            c,
            nu,
            delta,
            target,
            max_nodes: budget.max_nodes,
            core_adj: vec![0u16; c],
            core_edges: 0,
            outside: Vec::new(),
            best_e: &mut best_e,
            best_g: &mut best_g,
            nodes: &mut nodes,
        };
        // perfect matching of the core is fixed
        for i in (0..c).step_by(2) {
            st.core_adj[i] |= 1 << (i + 1);
            st.core_adj[i + 1] |= 1 << i;
            st.core_edges += 1;
        }
        let free_pairs: Vec<(usize, usize)> = (0..c)
            .flat_map(|i| (i + 1..c).map(move |j| (i, j)))
            .filter(|&(i, j)| !(i % 2 == 0 && j == i + 1))
            .collect();
        if st.core_rec(&free_pairs, 0)? {
            break 'cores;
        }
    }
    Ok(OracleOutcome { value: best_e, witness: best_g, nodes, elapsed: start.elapsed() })
}

struct CoreSearch<'a> {
    c: usize,
    nu: usize,
    delta: usize,
    target: Option<usize>,
    max_nodes: u64,
    core_adj: Vec<u16>,
    core_edges: usize,
    outside: Vec<u16>,
    best_e: &'a mut usize,
    best_g: &'a mut Graph,
    nodes: &'a mut u64,
}

impl CoreSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        *self.nodes += 1;
        if *self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted { nodes: *self.nodes });
        }
        Ok(())
    }

    fn core_degree(&self, v: usize) -> usize {
        self.core_adj[v].count_ones() as usize
            + self.outside.iter().filter(|&&m| m >> v & 1 == 1).count()
    }

    fn assemble(&self) -> Graph {
        let n = self.c + self.outside.len();
        let mut g = Graph::empty(n).expect("small");
        for i in 0..self.c {
            for j in i + 1..self.c {
                if self.core_adj[i] >> j & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        for (o, &mask) in self.outside.iter().enumerate() {
            for v in 0..self.c {
                if mask >> v & 1 == 1 {
                    g.add_edge(self.c + o, v);
                }
            }
        }
        g
    }

    /// Returns true when the target was reached and the search should stop.
    fn core_rec(&mut self, free_pairs: &[(usize, usize)], i: usize) -> Result<bool> {
        self.tick()?;
        if i == free_pairs.len() {
            return self.outside_rec(1);
        }
        let (u, v) = free_pairs[i];
        if self.core_degree(u) < self.delta && self.core_degree(v) < self.delta {
            self.core_adj[u] |= 1 << v;
            self.core_adj[v] |= 1 << u;
            self.core_edges += 1;
            let stop = self.core_rec(free_pairs, i + 1)?;
            self.core_adj[u] &= !(1 << v);
            self.core_adj[v] &= !(1 << u);
            self.core_edges -= 1;
            if stop {
                return Ok(true);
            }
        }
        self.core_rec(free_pairs, i + 1)
    }

    fn outside_rec(&mut self, min_mask: u16) -> Result<bool> {
        self.tick()?;
        let e = self.core_edges + self.outside.iter().map(|m| m.count_ones() as usize).sum::<usize>();
        let g = self.assemble();
        if g.matching_number() > self.nu {
            return Ok(false);
        }
        if e > *self.best_e || (self.best_g.n() == 0 && self.best_e == &0) {
            *self.best_e = e;
            *self.best_g = g;
        }
        if self.target.is_some_and(|t| *self.best_e >= t) {
            return Ok(true);
        }
        // remaining degree capacity bounds every reachable edge count
        let residual: usize = (0..self.c).map(|v| self.delta - self.core_degree(v)).sum();
        let enough = match self.target {
            Some(t) => e + residual >= t,
            None => e + residual > *self.best_e,
        };
        if !enough || self.c == 0 {
            return Ok(false);
        }
        for mask in min_mask..(1u16 << self.c) {
            if mask.count_ones() as usize > self.delta {
                continue;
            }
            if (0..self.c).any(|v| mask >> v & 1 == 1 && self.core_degree(v) >= self.delta) {
                continue;
            }
            self.outside.push(mask);
            let stop = self.outside_rec(mask)?;
            self.outside.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact anti-Ramsey number ar(n, F_spec): enumerates edge-set partitions of
/// K_n (colorings up to color renaming) as restricted growth strings,
/// pruning any prefix that already shows a rainbow fan and any branch that
/// cannot beat the best class count. Returns max rainbow-free class count
/// plus one; the witness is a maximum rainbow-free exact coloring (None when
/// even one color forces a rainbow copy). Restricted to n <= 6.
pub fn brute_force_ar(
    n: usize,
    spec: FanSpec,
    budget: &SearchBudget,
) -> Result<OracleOutcome<Option<EdgeColoring>>> {
    if n > 6 {
        return Err(Error::InvalidArgument("brute_force_ar limited to n <= 6".into()));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("brute_force_ar needs n >= 2".into()));
    }
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    let mut st = ArSearch {
        spec,
        pairs,
        host: Graph::empty(n)?,
        col: EdgeColoring::raw(n, 0, vec![u32::MAX; m]),
        best: 0,
        witness: None,
        nodes: 0,
        max_nodes: budget.max_nodes,
    };
    let start = Instant::now();
    st.rec(0, 0)?;
    Ok(OracleOutcome {
        value: st.best as usize + 1,
        witness: st.witness,
        nodes: st.nodes,
        elapsed: start.elapsed(),
    })
}

struct ArSearch {
    spec: FanSpec,
    pairs: Vec<(usize, usize)>,
    host: Graph,
    col: EdgeColoring,
    best: u32,
    witness: Option<EdgeColoring>,
    nodes: u64,
    max_nodes: u64,
}

impl ArSearch {
    fn rec(&mut self, i: usize, classes: u32) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted { nodes: self.nodes });
        }
        if i == self.pairs.len() {
            // complete, exact by construction, rainbow-free by the prefix checks
            if classes > self.best {
                self.best = classes;
                let mut w = self.col.clone();
                w.set_num_colors(classes);
                self.witness = Some(w);
            }
            return Ok(());
        }
        if classes + (self.pairs.len() - i) as u32 <= self.best {
            return Ok(());
        }
        let (u, v) = self.pairs[i];
        self.host.add_edge(u, v);
        for color in 0..=classes {
            self.col.set_color(u, v, color);
            self.col.set_num_colors(classes + u32::from(color == classes));
            // a rainbow fan inside the colored prefix survives any extension
            let hit = find_rainbow_fan(&self.col, Some(&self.host), self.spec)?.is_some();
            if !hit {
                self.rec(i + 1, classes + u32::from(color == classes))?;
            }
        }
        self.col.set_color(u, v, u32::MAX);
        self.host.remove_edge(u, v);
        Ok(())
    }
}

/// Witness side of [`brute_force_ar`]: a maximum-color exact coloring of K_n
/// with no rainbow F_spec.
pub fn max_rainbow_free_coloring(
    n: usize,
    spec: FanSpec,
    budget: &SearchBudget,
) -> Result<EdgeColoring> {
    let outcome = brute_force_ar(n, spec, budget)?;
    outcome.witness.ok_or_else(|| {
        Error::InvalidArgument("every coloring contains a rainbow copy".into())
    })
}

/// Number of set partitions of m items, counted by running the restricted
/// growth string enumerator. Self-test hook for the partition generator.
pub fn count_set_partitions(m: usize) -> u64 {
    fn rec(i: usize, m: usize, classes: u64) -> u64 {
        if i == m {
            return 1;
        }
        (0..=classes)
            .map(|c| rec(i + 1, m, classes + u64::from(c == classes)))
            .sum()
    }
    rec(0, m, 0)
}
