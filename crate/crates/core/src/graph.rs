//! Dense undirected simple graphs on vertex indices `0..n`, the graph
//! families used throughout the crate, and exact elementary queries.
//!
//! Graph values are immutable once handed out; every operation here is a
//! pure function over its inputs.

use crate::error::{Error, Result};

/// Hard cap on vertex count for the dense representation.
pub const MAX_VERTICES: usize = 256;

const NONE: usize = usize::MAX;

/// Parameters (k, r) of a fan graph: k cliques of size r sharing one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct FanSpec {
    pub k: usize,
    pub r: usize,
}

impl FanSpec {
    pub fn new(k: usize, r: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument("fan requires k >= 1".into()));
        }
        if r < 2 {
            return Err(Error::InvalidArgument("fan requires r >= 2".into()));
        }
        Ok(FanSpec { k, r })
    }

    /// Number of vertices of the fan: k(r-1)+1.
    pub fn vertex_count(&self) -> usize {
        self.k * (self.r - 1) + 1
    }

    /// Number of edges of the fan: k * r(r-1)/2.
    pub fn edge_count(&self) -> usize {
        self.k * self.r * (self.r - 1) / 2
    }
}

/// A sorted, duplicate-free subset of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Validates that every member lies in `0..n`.
    pub fn bounded(members: Vec<usize>, n: usize) -> Result<Self> {
        let set = Self::new(members);
        if let Some(&v) = set.members.last() {
            if v >= n {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} out of range 0..{n}"
                )));
            }
        }
        Ok(set)
    }

    pub fn range(r: std::ops::Range<usize>) -> Self {
        VertexSet { members: r.collect() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self.iter().filter(|&v| other.contains(v)).collect(),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Immutable dense simple graph; adjacency kept as one bitset row per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { n, max: MAX_VERTICES });
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph { n, words, adj: vec![0; n * words], m: 0 })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] |= 1 << (v % 64);
            self.adj[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
            self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
            self.m -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.adj[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    /// All edges (u, v) with u < v in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let vs = set.as_slice();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The Turán graph T_{n,p}: complete p-partite, balanced part sizes,
    /// parts laid out as contiguous index ranges with the larger parts first.
    pub fn turan(n: usize, p: usize) -> Result<Self> {
        let parts = turan_parts(n, p)?;
        let mut g = Self::empty(n)?;
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                for u in a.clone() {
                    for v in b.clone() {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        Ok(g)
    }

    /// The fan F_{k,r}: k cliques of size r sharing vertex 0.
    pub fn fan(spec: FanSpec) -> Result<Self> {
        let mut g = Self::empty(spec.vertex_count())?;
        for i in 0..spec.k {
            let lo = 1 + i * (spec.r - 1);
            let blade: Vec<usize> =
                std::iter::once(0).chain(lo..lo + spec.r - 1).collect();
            for (a, &u) in blade.iter().enumerate() {
                for &v in &blade[a + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Places `pattern`'s edges on the first `pattern.n()` vertices of `part`
    /// (ascending index order). `part` must be independent in the host.
    pub fn embed_in_part(&self, part: &VertexSet, pattern: &Graph) -> Result<Self> {
        if pattern.n() > part.len() {
            return Err(Error::PatternTooLarge { pattern: pattern.n(), part: part.len() });
        }
        if !self.is_independent(part) {
            return Err(Error::PartNotIndependent);
        }
        let slots = part.as_slice();
        let mut g = self.clone();
        for (u, v) in pattern.edges() {
            g.add_edge(slots[u], slots[v]);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n).expect("same capacity");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let mut g = Self::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// The join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Self> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `set`, plus the map from new indices back to
    /// original ones.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = set.iter().collect();
        let mut g = Self::empty(map.len()).expect("subset of capacity");
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Induced subgraph on the neighborhood of `v`.
    pub fn neighborhood_subgraph(&self, v: usize) -> (Graph, Vec<usize>) {
        self.induced(&self.neighbors(v).collect())
    }

    /// Exact matching number via augmenting paths with blossom contraction.
    pub fn matching_number(&self) -> usize {
        let n = self.n;
        let mut mate = vec![NONE; n];
        for v in 0..n {
            if mate[v] != NONE {
                continue;
            }
            if let Some(u) = self.neighbors(v).find(|&u| mate[u] == NONE) {
                mate[v] = u;
                mate[u] = v;
            }
        }
        for root in 0..n {
            if mate[root] == NONE {
                self.augment_from(root, &mut mate);
            }
        }
        mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    fn augment_from(&self, root: usize, mate: &mut [usize]) {
        let n = self.n;
        let mut parent = vec![NONE; n];
        let mut base: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        let mut finish = NONE;

        'bfs: while let Some(v) = queue.pop_front() {
            for to in self.neighbors(v) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    // Odd cycle: contract the blossom to its base.
                    let curbase = lca(v, to, &base, &parent, mate);
                    let mut blossom = vec![false; n];
                    mark_path(v, curbase, to, &mut blossom, &base, &mut parent, mate);
                    mark_path(to, curbase, v, &mut blossom, &base, &mut parent, mate);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = curbase;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        finish = to;
                        break 'bfs;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }

        if finish != NONE {
            let mut v = finish;
            while v != NONE {
                let pv = parent[v];
                let ppv = mate[pv];
                mate[v] = pv;
                mate[pv] = v;
                v = ppv;
            }
        }
    }

    /// Matching number by exhaustive branching. Test oracle for
    /// [`Graph::matching_number`]; exponential, keep n small.
    pub fn matching_number_naive(&self) -> usize {
        fn rec(g: &Graph, alive: &mut [bool]) -> usize {
            let v = match (0..g.n())
                .find(|&v| alive[v] && g.neighbors(v).any(|u| alive[u]))
            {
                Some(v) => v,
                None => return 0,
            };
            alive[v] = false;
            // v stays unmatched
            let mut best = rec(g, alive);
            // or v matches one of its neighbors
            let nbrs: Vec<usize> = g.neighbors(v).filter(|&u| alive[u]).collect();
            for u in nbrs {
                alive[u] = false;
                best = best.max(1 + rec(g, alive));
                alive[u] = true;
            }
            alive[v] = true;
            best
        }
        let mut alive = vec![true; self.n];
        rec(self, &mut alive)
    }
}

/// Part index ranges of T_{n,p}: the first `n mod p` parts get the extra
/// vertex, parts are contiguous.
pub fn turan_parts(n: usize, p: usize) -> Result<Vec<std::ops::Range<usize>>> {
    if p < 1 {
        return Err(Error::InvalidArgument("turan requires p >= 1".into()));
    }
    let (q, rem) = (n / p, n % p);
    let mut parts = Vec::with_capacity(p);
    let mut lo = 0;
    for i in 0..p {
        let size = q + usize::from(i < rem);
        parts.push(lo..lo + size);
        lo += size;
    }
    Ok(parts)
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

fn lca(v: usize, to: usize, base: &[usize], parent: &[usize], mate: &[usize]) -> usize {
    let mut on_path = vec![false; base.len()];
    let mut a = base[v];
    loop {
        on_path[a] = true;
        if mate[a] == NONE {
            break;
        }
        a = base[parent[mate[a]]];
    }
    let mut b = base[to];
    loop {
        if on_path[b] {
            return b;
        }
        b = base[parent[mate[b]]];
    }
}

fn mark_path(
    mut v: usize,
    curbase: usize,
    mut child: usize,
    blossom: &mut [bool],
    base: &[usize],
    parent: &mut [usize],
    mate: &[usize],
) {
    while base[v] != curbase {
        blossom[base[v]] = true;
        blossom[base[mate[v]]] = true;
        parent[v] = child;
        child = mate[v];
        v = parent[mate[v]];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_edge_counts() {
        assert_eq!(Graph::complete(0).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(5).unwrap().edge_count(), 10);
        assert_eq!(Graph::complete(8).unwrap().edge_count(), 28);
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            Graph::complete(MAX_VERTICES + 1),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn turan_layout_and_counts() {
        let g = Graph::turan(5, 2).unwrap();
        assert_eq!(g.edge_count(), 6); // K_{3,2}
        assert_eq!(Graph::turan(9, 2).unwrap().edge_count(), 20);
        assert_eq!(Graph::turan(7, 1).unwrap().edge_count(), 0);
        // n < p degenerates to the complete graph
        assert_eq!(Graph::turan(3, 5).unwrap().edge_count(), 3);
        assert!(Graph::turan(3, 0).is_err());
    }

    #[test]
    fn fan_constructor() {
        let bowtie = Graph::fan(FanSpec::new(2, 3).unwrap()).unwrap();
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degree(0), 4);

        let k4 = Graph::fan(FanSpec::new(1, 4).unwrap()).unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());

        let f34 = Graph::fan(FanSpec::new(3, 4).unwrap()).unwrap();
        assert_eq!(f34.n(), 10);
        assert_eq!(f34.edge_count(), 18);
    }

    #[test]
    fn embed_in_part_places_pattern() {
        let host = Graph::turan(9, 2).unwrap();
        let part = VertexSet::range(0..5);
        let empty = Graph::empty(0).unwrap();
        assert_eq!(host.embed_in_part(&part, &empty).unwrap(), host);

        let one_edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = host.embed_in_part(&part, &one_edge).unwrap();
        assert_eq!(g.edge_count(), 21);
        assert!(g.has_edge(0, 1));

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let g = host.embed_in_part(&part, &two_k2).unwrap();
        assert_eq!(g.edge_count(), 22);

        // part not independent
        let bad = VertexSet::range(3..7);
        assert!(matches!(
            host.embed_in_part(&bad, &one_edge),
            Err(Error::PartNotIndependent)
        ));
    }

    #[test]
    fn matching_small_cases() {
        assert_eq!(Graph::complete(4).unwrap().matching_number(), 2);
        assert_eq!(Graph::empty(6).unwrap().matching_number(), 0);
        let bowtie = Graph::fan(FanSpec::new(2, 3).unwrap()).unwrap();
        assert_eq!(bowtie.matching_number(), 2);
        assert_eq!(bowtie.matching_number_naive(), 2);
        // odd cycle exercises blossom contraction
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.matching_number(), 2);
        // two triangles joined by a path: forces a non-greedy augment
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)],
        )
        .unwrap();
        assert_eq!(g.matching_number(), g.matching_number_naive());
    }

    #[test]
    fn neighborhood_subgraph_cases() {
        let k5 = Graph::complete(5).unwrap();
        let (h, map) = k5.neighborhood_subgraph(2);
        assert_eq!(h, Graph::complete(4).unwrap());
        assert_eq!(map, vec![0, 1, 3, 4]);

        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (h, _) = star.neighborhood_subgraph(0);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.n(), 4);

        let bowtie = Graph::fan(FanSpec::new(2, 3).unwrap()).unwrap();
        let (h, _) = bowtie.neighborhood_subgraph(0);
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.max_degree(), 1); // 2K_2
    }

    #[test]
    fn join_and_union() {
        let a = Graph::complete(3).unwrap();
        let b = Graph::empty(2).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.n(), 5);
        assert_eq!(u.edge_count(), 3);
        let j = a.join(&b).unwrap();
        assert_eq!(j.edge_count(), 3 + 6);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for (n, p) in [(9, 2), (10, 3), (13, 4)] {
            let g = Graph::turan(n, p).unwrap();
            let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }
}
