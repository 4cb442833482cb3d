//! Exact detectors and witness extractors for cliques, fans, and rainbow
//! fans in (edge-colored) graphs.
//!
//! All searches are canonical: centers are tried in ascending order and
//! cliques are chosen in lexicographic order, so the returned witness is the
//! least one and golden-file tests stay stable.

use crate::error::{Error, Result};
use crate::graph::{FanSpec, Graph, VertexSet};
use itertools::Itertools;

/// Total edge coloring of K_n: every unordered pair gets one color id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    num_colors: u32,
    colors: Vec<u32>,
}

/// Lexicographic index of the pair (u, v), u < v, among all pairs of 0..n.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl EdgeColoring {
    pub fn new(n: usize, num_colors: u32, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidArgument(format!(
                "expected {} colors for K_{n}, got {}",
                n * n.saturating_sub(1) / 2,
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(Error::InvalidArgument(format!(
                "color {c} out of range 0..{num_colors}"
            )));
        }
        Ok(EdgeColoring { n, num_colors, colors })
    }

    /// Every pair colored `color`; declares `color + 1` colors.
    pub fn constant(n: usize, color: u32) -> Self {
        let m = n * n.saturating_sub(1) / 2;
        EdgeColoring { n, num_colors: color + 1, colors: vec![color; m] }
    }

    /// The rainbow coloring: every pair gets its own color.
    pub fn all_distinct(n: usize) -> Self {
        let m = n * n.saturating_sub(1) / 2;
        EdgeColoring { n, num_colors: m as u32, colors: (0..m as u32).collect() }
    }

    /// Internal constructor for search code that fills colors incrementally.
    pub(crate) fn raw(n: usize, num_colors: u32, colors: Vec<u32>) -> Self {
        EdgeColoring { n, num_colors, colors }
    }

    pub(crate) fn set_color(&mut self, u: usize, v: usize, c: u32) {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, u, v)] = c;
    }

    pub(crate) fn set_num_colors(&mut self, c: u32) {
        self.num_colors = c;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn color(&self, u: usize, v: usize) -> u32 {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, u, v)]
    }

    /// True when every declared color id is used at least once.
    pub fn is_exact(&self) -> bool {
        self.missing_color().is_none()
    }

    pub(crate) fn missing_color(&self) -> Option<u32> {
        let mut seen = vec![false; self.num_colors as usize];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().position(|&s| !s).map(|c| c as u32)
    }
}

/// Certificate for a (rainbow) copy of F_{k,r}: a center plus k cliques.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FanWitness {
    pub center: usize,
    pub cliques: Vec<VertexSet>,
    /// Edge colors of the fan (present for rainbow witnesses).
    pub colors: Option<Vec<u32>>,
}

impl FanWitness {
    /// Checks the structural invariants: each clique has size r, contains the
    /// center, induces a complete subgraph of `g`, and pairwise intersections
    /// equal exactly the center.
    pub fn verify(&self, g: &Graph, spec: FanSpec) -> Result<()> {
        if self.cliques.len() != spec.k {
            return Err(Error::InvalidArgument(format!(
                "expected {} cliques, witness has {}",
                spec.k,
                self.cliques.len()
            )));
        }
        for c in &self.cliques {
            if c.len() != spec.r {
                return Err(Error::InvalidArgument(format!(
                    "clique {:?} does not have size {}",
                    c.as_slice(),
                    spec.r
                )));
            }
            if !c.contains(self.center) {
                return Err(Error::InvalidArgument("clique misses the center".into()));
            }
            let vs = c.as_slice();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    if !g.has_edge(u, v) {
                        return Err(Error::InvalidArgument(format!(
                            "pair ({u},{v}) is not an edge"
                        )));
                    }
                }
            }
        }
        for (i, a) in self.cliques.iter().enumerate() {
            for b in &self.cliques[i + 1..] {
                let inter = a.intersection(b);
                if inter.as_slice() != [self.center] {
                    return Err(Error::InvalidArgument(
                        "cliques intersect beyond the center".into(),
                    ));
                }
            }
        }
        if let Some(colors) = &self.colors {
            let distinct: std::collections::HashSet<u32> = colors.iter().copied().collect();
            if distinct.len() != colors.len() {
                return Err(Error::InvalidArgument("witness colors repeat".into()));
            }
            if colors.len() != spec.edge_count() {
                return Err(Error::InvalidArgument("wrong number of witness colors".into()));
            }
        }
        Ok(())
    }

    /// Additionally checks the recorded colors against `col`.
    pub fn verify_rainbow(&self, g: &Graph, spec: FanSpec, col: &EdgeColoring) -> Result<()> {
        self.verify(g, spec)?;
        let mut expected = Vec::new();
        for c in &self.cliques {
            let vs = c.as_slice();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    expected.push(col.color(u, v));
                }
            }
        }
        expected.sort_unstable();
        let mut got = self.colors.clone().ok_or_else(|| {
            Error::InvalidArgument("rainbow witness carries no colors".into())
        })?;
        got.sort_unstable();
        if expected != got {
            return Err(Error::InvalidArgument("witness colors disagree with coloring".into()));
        }
        Ok(())
    }
}

/// Least size-r clique of `g` in lexicographic order, if any.
pub fn contains_clique(g: &Graph, r: usize) -> Option<VertexSet> {
    assert!(r >= 1, "clique size must be at least 1");
    let mut cur = Vec::with_capacity(r);
    if extend_clique(g, &mut cur, 0, r) {
        Some(VertexSet::new(cur))
    } else {
        None
    }
}

fn extend_clique(g: &Graph, cur: &mut Vec<usize>, start: usize, r: usize) -> bool {
    if cur.len() == r {
        return true;
    }
    for v in start..g.n() {
        if cur.iter().all(|&u| g.has_edge(u, v)) {
            cur.push(v);
            if extend_clique(g, cur, v + 1, r) {
                return true;
            }
            cur.pop();
        }
    }
    false
}

/// Exact search for a copy of F_{k,r} in `g`. For each candidate center v in
/// ascending order, backtracks over k vertex-disjoint (r-1)-cliques inside
/// G[N(v)]. No false negatives.
pub fn find_fan(g: &Graph, spec: FanSpec) -> Option<FanWitness> {
    for center in 0..g.n() {
        let (h, map) = g.neighborhood_subgraph(center);
        if h.n() < spec.k * (spec.r - 1) {
            continue;
        }
        let mut acc: Vec<Vec<usize>> = Vec::with_capacity(spec.k);
        let mut used = vec![false; h.n()];
        let mut cur = Vec::with_capacity(spec.r - 1);
        if disjoint_cliques(&h, spec.r - 1, spec.k, &mut used, &mut acc, &mut cur, 0) {
            let cliques = acc
                .iter()
                .map(|c| {
                    std::iter::once(center)
                        .chain(c.iter().map(|&v| map[v]))
                        .collect()
                })
                .collect();
            return Some(FanWitness { center, cliques, colors: None });
        }
    }
    None
}

/// Backtracking packer: k vertex-disjoint `size`-cliques in `h`, cliques
/// ordered by their least vertex so the first solution found is canonical.
fn disjoint_cliques(
    h: &Graph,
    size: usize,
    k: usize,
    used: &mut [bool],
    acc: &mut Vec<Vec<usize>>,
    cur: &mut Vec<usize>,
    start: usize,
) -> bool {
    if cur.len() == size {
        acc.push(cur.clone());
        if acc.len() == k {
            return true;
        }
        let next_start = acc.last().unwrap()[0] + 1;
        let mut next_cur = Vec::with_capacity(size);
        if disjoint_cliques(h, size, k, used, acc, &mut next_cur, next_start) {
            return true;
        }
        acc.pop();
        return false;
    }
    let from = cur.last().map_or(start, |&v| v + 1);
    for v in from..h.n() {
        if used[v] || !cur.iter().all(|&u| h.has_edge(u, v)) {
            continue;
        }
        cur.push(v);
        used[v] = true;
        if disjoint_cliques(h, size, k, used, acc, cur, start) {
            return true;
        }
        used[v] = false;
        cur.pop();
    }
    false
}

/// Exact search for a rainbow F_{k,r} under `col`. When `host` is given the
/// fan must use host edges only; otherwise all of K_n is searched.
pub fn find_rainbow_fan(
    col: &EdgeColoring,
    host: Option<&Graph>,
    spec: FanSpec,
) -> Result<Option<FanWitness>> {
    if let Some(h) = host {
        if h.n() != col.n() {
            return Err(Error::SizeMismatch { expected: col.n(), got: h.n() });
        }
    }
    let mut search = RainbowSearch {
        col,
        host,
        spec,
        used_colors: vec![false; col.num_colors() as usize],
        used_count: 0,
        edges_placed: 0,
    };
    Ok(search.run())
}

struct RainbowSearch<'a> {
    col: &'a EdgeColoring,
    host: Option<&'a Graph>,
    spec: FanSpec,
    used_colors: Vec<bool>,
    used_count: usize,
    edges_placed: usize,
}

impl RainbowSearch<'_> {
    fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.host.is_none_or(|h| h.has_edge(u, v))
    }

    fn run(&mut self) -> Option<FanWitness> {
        let n = self.col.n();
        if n < self.spec.vertex_count() {
            return None;
        }
        for center in 0..n {
            let mut used_v = vec![false; n];
            used_v[center] = true;
            let mut acc = Vec::with_capacity(self.spec.k);
            let mut cur = Vec::new();
            if self.pack(center, &mut used_v, &mut acc, &mut cur, 0) {
                let colors = fan_colors(self.col, center, &acc);
                let cliques = acc
                    .iter()
                    .map(|c| std::iter::once(center).chain(c.iter().copied()).collect())
                    .collect();
                return Some(FanWitness { center, cliques, colors: Some(colors) });
            }
        }
        None
    }

    /// Marks the colors of the edges joining `v` to `center` and `cur`.
    /// Returns the marked colors for rollback, or None on any clash.
    fn try_place(&mut self, center: usize, cur: &[usize], v: usize) -> Option<Vec<u32>> {
        let mut marked = Vec::with_capacity(cur.len() + 1);
        for &u in std::iter::once(&center).chain(cur.iter()) {
            if !self.has_edge(u, v) {
                self.unplace(&marked);
                return None;
            }
            let c = self.col.color(u, v) as usize;
            if self.used_colors[c] {
                self.unplace(&marked);
                return None;
            }
            self.used_colors[c] = true;
            self.used_count += 1;
            self.edges_placed += 1;
            marked.push(c as u32);
        }
        Some(marked)
    }

    fn unplace(&mut self, marked: &[u32]) {
        for &c in marked {
            self.used_colors[c as usize] = false;
            self.used_count -= 1;
            self.edges_placed -= 1;
        }
    }

    fn pack(
        &mut self,
        center: usize,
        used_v: &mut [bool],
        acc: &mut Vec<Vec<usize>>,
        cur: &mut Vec<usize>,
        start: usize,
    ) -> bool {
        // Each remaining fan edge needs a fresh color.
        let remaining = self.spec.edge_count() - self.edges_placed;
        if (self.col.num_colors() as usize - self.used_count) < remaining {
            return false;
        }
        let size = self.spec.r - 1;
        if cur.len() == size {
            acc.push(cur.clone());
            if acc.len() == self.spec.k {
                return true;
            }
            let next_start = acc.last().unwrap()[0] + 1;
            let mut next_cur = Vec::with_capacity(size);
            if self.pack(center, used_v, acc, &mut next_cur, next_start) {
                return true;
            }
            acc.pop();
            return false;
        }
        let from = cur.last().map_or(start, |&v| v + 1);
        for v in from..self.col.n() {
            if used_v[v] {
                continue;
            }
            if let Some(marked) = self.try_place(center, cur, v) {
                cur.push(v);
                used_v[v] = true;
                if self.pack(center, used_v, acc, cur, start) {
                    return true;
                }
                used_v[v] = false;
                cur.pop();
                self.unplace(&marked);
            }
        }
        false
    }
}

fn fan_colors(col: &EdgeColoring, center: usize, cliques: &[Vec<usize>]) -> Vec<u32> {
    let mut out = Vec::new();
    for c in cliques {
        let full: Vec<usize> = std::iter::once(center).chain(c.iter().copied()).collect();
        for (i, &u) in full.iter().enumerate() {
            for &v in &full[i + 1..] {
                out.push(col.color(u, v));
            }
        }
    }
    out
}

/// Spanning subgraph of K_n keeping the lexicographically least edge of every
/// color class. The coloring must be exact; the result is rainbow with
/// exactly `num_colors` edges.
pub fn representative_subgraph(col: &EdgeColoring) -> Result<Graph> {
    if let Some(missing) = col.missing_color() {
        return Err(Error::NonExactColoring { missing });
    }
    let n = col.n();
    let mut rep: Vec<Option<(usize, usize)>> = vec![None; col.num_colors() as usize];
    for u in 0..n {
        for v in u + 1..n {
            let c = col.color(u, v) as usize;
            if rep[c].is_none() {
                rep[c] = Some((u, v));
            }
        }
    }
    let edges: Vec<(usize, usize)> = rep.into_iter().flatten().collect();
    Graph::from_edges(n, &edges)
}

/// Exhaustive fan check over all vertex subsets and center/blade partitions.
/// Test oracle for [`find_fan`]; restricted to n <= 10.
pub fn naive_fan_check(g: &Graph, spec: FanSpec) -> Result<bool> {
    if g.n() > 10 {
        return Err(Error::InvalidArgument(format!(
            "naive check limited to 10 vertices, got {}",
            g.n()
        )));
    }
    let order = spec.vertex_count();
    if order > g.n() {
        return Ok(false);
    }
    for subset in (0..g.n()).combinations(order) {
        for &center in &subset {
            let rest: Vec<usize> = subset.iter().copied().filter(|&v| v != center).collect();
            if partitions_into_blades(g, center, &rest, spec.r - 1) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Can `rest` be split into groups of `size` so every group plus the center
/// is a clique? Canonical recursion: the least remaining vertex anchors the
/// next group.
fn partitions_into_blades(g: &Graph, center: usize, rest: &[usize], size: usize) -> bool {
    if rest.is_empty() {
        return true;
    }
    let anchor = rest[0];
    if !g.has_edge(center, anchor) {
        return false;
    }
    for mates in rest[1..].iter().copied().combinations(size - 1) {
        let group: Vec<usize> = std::iter::once(anchor).chain(mates.iter().copied()).collect();
        let ok = group.iter().enumerate().all(|(i, &u)| {
            g.has_edge(center, u) && group[i + 1..].iter().all(|&v| g.has_edge(u, v))
        });
        if !ok {
            continue;
        }
        let remaining: Vec<usize> = rest[1..]
            .iter()
            .copied()
            .filter(|v| !mates.contains(v))
            .collect();
        if partitions_into_blades(g, center, &remaining, size) {
            return true;
        }
    }
    false
}
