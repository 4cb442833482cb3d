//! Deficiency-domination predicates, the greedy clique-extension procedures,
//! the inner/cross edge deficit, the partition-property checker, and the
//! degenerate peeling loop.

use crate::error::{Error, Result};
use crate::formulas::{f_bounded, BoundedPair};
use crate::graph::{Graph, VertexSet};

/// Ordered list of disjoint vertex classes covering V(G). Class order is
/// significant: class 0 plays the V_0 role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionClasses {
    classes: Vec<VertexSet>,
}

impl PartitionClasses {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Result<Self> {
        let mut seen = vec![false; n];
        for class in &classes {
            for v in class.iter() {
                if v >= n {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} out of range 0..{n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidArgument(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not covered by any class"
            )));
        }
        Ok(PartitionClasses { classes })
    }

    /// The contiguous part layout of T_{n,p} as a partition.
    pub fn turan_layout(n: usize, p: usize) -> Result<Self> {
        let classes = crate::graph::turan_parts(n, p)?
            .into_iter()
            .map(VertexSet::range)
            .collect();
        Self::new(n, classes)
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Does every vertex of `x` have at least |y| - b neighbors in `y`?
pub fn dominates_with_deficiency(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    b: usize,
) -> Result<bool> {
    if !x.is_disjoint(y) {
        return Err(Error::OverlappingSets);
    }
    Ok(x.iter().all(|u| {
        let d = y.iter().filter(|&v| g.has_edge(u, v)).count();
        d + b >= y.len()
    }))
}

/// Pairwise domination in both directions across all classes.
pub fn is_deficiency_complete(g: &Graph, parts: &PartitionClasses, b: usize) -> bool {
    classes_deficiency_complete(g, parts.classes(), b)
}

fn classes_deficiency_complete(g: &Graph, classes: &[VertexSet], b: usize) -> bool {
    for (i, x) in classes.iter().enumerate() {
        for y in &classes[i + 1..] {
            let fwd = dominates_with_deficiency(g, x, y, b).unwrap_or(false);
            let bwd = dominates_with_deficiency(g, y, x, b).unwrap_or(false);
            if !fwd || !bwd {
                return false;
            }
        }
    }
    true
}

/// Greedy clique extension: each seed clique grows
/// to a clique meeting every partition class, the added vertices disjoint
/// across seeds. For each seed and each unrepresented class the least vertex
/// adjacent to all current members and unreserved is taken.
pub fn extend_cliques(
    g: &Graph,
    parts: &PartitionClasses,
    seeds: &[VertexSet],
    b: usize,
) -> Result<Vec<VertexSet>> {
    let m = parts.len();
    let t = seeds.len();
    for class in parts.classes() {
        if class.len() < m * b + 2 * t {
            return Err(Error::PreconditionViolated(format!(
                "class of size {} below the m*b + 2t = {} requirement",
                class.len(),
                m * b + 2 * t
            )));
        }
    }
    if !is_deficiency_complete(g, parts, b) {
        return Err(Error::PreconditionViolated(
            "partition is not b-deficiency complete".into(),
        ));
    }
    for seed in seeds {
        let mut twos = 0;
        for class in parts.classes() {
            let inter = seed.intersection(class).len();
            if inter > 2 {
                return Err(Error::PreconditionViolated(
                    "seed meets a class in more than two vertices".into(),
                ));
            }
            twos += usize::from(inter == 2);
        }
        if twos > 1 {
            return Err(Error::PreconditionViolated(
                "seed meets two classes in two vertices".into(),
            ));
        }
    }

    let mut reserved = vec![false; g.n()];
    for seed in seeds {
        for v in seed.iter() {
            reserved[v] = true;
        }
    }
    let mut out = Vec::with_capacity(t);
    for seed in seeds {
        let mut clique: Vec<usize> = seed.iter().collect();
        for class in parts.classes() {
            if seed.intersection(class).len() >= 1 {
                continue;
            }
            let pick = class
                .iter()
                .find(|&v| !reserved[v] && clique.iter().all(|&u| g.has_edge(u, v)));
            match pick {
                Some(v) => {
                    reserved[v] = true;
                    clique.push(v);
                }
                None => {
                    return Err(Error::ExtensionFailed(format!(
                        "no extension vertex for seed {:?} in class {:?}",
                        seed.as_slice(),
                        class.as_slice()
                    )))
                }
            }
        }
        out.push(VertexSet::new(clique));
    }
    Ok(out)
}

/// Greedy construction of k vertex-disjoint
/// transversal cliques over the classes. `classes[0]` plays Y_0: it is
/// always a domination partner, and its vertices join the cliques only when
/// `with_y0` is set (sizes m+1 instead of m). Greedy order is clique by
/// clique, class by class (Y_1..Y_m then Y_0), least feasible vertex.
pub fn build_disjoint_cliques(
    g: &Graph,
    classes: &[VertexSet],
    b: usize,
    k: usize,
    with_y0: bool,
) -> Result<Vec<VertexSet>> {
    if classes.is_empty() {
        return Err(Error::PreconditionViolated("need Y_0 plus at least one class".into()));
    }
    let m = classes.len() - 1;
    for (i, class) in classes.iter().enumerate().skip(1) {
        if class.len() < (i - 1) * b + k {
            return Err(Error::PreconditionViolated(format!(
                "|Y_{i}| = {} below (i-1)b + k = {}",
                class.len(),
                (i - 1) * b + k
            )));
        }
    }
    if with_y0 && classes[0].len() < m * b + k {
        return Err(Error::PreconditionViolated(format!(
            "|Y_0| = {} below m*b + k = {}",
            classes[0].len(),
            m * b + k
        )));
    }

    let mut reserved = vec![false; g.n()];
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let mut clique: Vec<usize> = Vec::with_capacity(m + usize::from(with_y0));
        let order = (1..=m).chain(with_y0.then_some(0));
        for j in order {
            let pick = classes[j]
                .iter()
                .find(|&v| !reserved[v] && clique.iter().all(|&u| g.has_edge(u, v)));
            match pick {
                Some(v) => {
                    reserved[v] = true;
                    clique.push(v);
                }
                None => {
                    return Err(Error::ExtensionFailed(format!(
                        "clique {i} found no vertex in class {j}"
                    )))
                }
            }
        }
        out.push(VertexSet::new(clique));
    }
    Ok(out)
}

/// The inner-versus-cross edge balance of a partitioned graph, compared
/// against the f(k,k) bound. `deficit` may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct DeficitReport {
    /// Sum of edge counts inside the classes.
    pub inner_edges: usize,
    /// Number of missing cross edges: sum |V_i||V_j| minus cross edge count.
    pub cross_missing: usize,
    /// inner_edges - cross_missing.
    pub deficit: i64,
    /// f(k,k).
    pub bound: usize,
}

pub fn edgelow_deficit(g: &Graph, parts: &PartitionClasses, k: usize) -> DeficitReport {
    let mut inner_edges = 0usize;
    for class in parts.classes() {
        let (h, _) = g.induced(class);
        inner_edges += h.edge_count();
    }
    let mut full_cross = 0usize;
    for (i, a) in parts.classes().iter().enumerate() {
        for b in &parts.classes()[i + 1..] {
            full_cross += a.len() * b.len();
        }
    }
    let cross_edges = g.edge_count() - inner_edges;
    let cross_missing = full_cross - cross_edges;
    DeficitReport {
        inner_edges,
        cross_missing,
        deficit: inner_edges as i64 - cross_missing as i64,
        bound: f_bounded(BoundedPair { nu: k.max(1), delta: k.max(1) }),
    }
}

/// The three partition conclusions checked exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PartitionProperties {
    /// (i): every |V_i| >= n/(r-1) - (k+1)(2r-3), compared exactly by
    /// cross-multiplication.
    pub class_sizes: bool,
    /// (ii): for every i, sum of nu(G[V_j]) over j != i is <= k and the
    /// maximum degree inside V_i is <= k.
    pub inner_bounds: bool,
    /// (iii): for every i and x in V_i, the inner degree of x plus the sum of
    /// nu(G[N(x) cap V_j]) over j != i is <= k.
    pub local_bounds: bool,
}

impl PartitionProperties {
    pub fn all(&self) -> bool {
        self.class_sizes && self.inner_bounds && self.local_bounds
    }
}

pub fn verify_partition_properties(
    g: &Graph,
    parts: &PartitionClasses,
    k: usize,
) -> PartitionProperties {
    let n = g.n();
    let rm1 = parts.len(); // r - 1 classes
    let classes = parts.classes();

    // (i) with the exact rational threshold: (r-1)|V_i| >= n - (r-1)(k+1)(2r-3)
    let class_sizes = classes.iter().all(|class| {
        let lhs = (rm1 * class.len()) as i64;
        let rhs = n as i64 - (rm1 * (k + 1) * (2 * rm1 - 1)) as i64;
        lhs >= rhs
    });

    let inner: Vec<(Graph, Vec<usize>)> = classes.iter().map(|c| g.induced(c)).collect();
    let nus: Vec<usize> = inner.iter().map(|(h, _)| h.matching_number()).collect();
    let nu_total: usize = nus.iter().sum();

    let inner_bounds = (0..rm1).all(|i| {
        nu_total - nus[i] <= k && inner[i].0.max_degree() <= k
    });

    let local_bounds = (0..rm1).all(|i| {
        classes[i].iter().all(|x| {
            let inner_deg = classes[i].iter().filter(|&v| g.has_edge(x, v)).count();
            let sum: usize = (0..rm1)
                .filter(|&j| j != i)
                .map(|j| {
                    let nbrs: VertexSet =
                        classes[j].iter().filter(|&v| g.has_edge(x, v)).collect();
                    g.induced(&nbrs).0.matching_number()
                })
                .sum();
            inner_deg + sum <= k
        })
    });

    PartitionProperties { class_sizes, inner_bounds, local_bounds }
}

/// Result of the degenerate peeling loop.
#[derive(Debug, Clone)]
pub struct PeelOutcome {
    /// Induced subgraph on the surviving vertices.
    pub graph: Graph,
    /// Original indices of the peeled vertices, in removal order.
    pub removed: Vec<usize>,
    /// Original indices of the survivors, ascending.
    pub survivors: Vec<usize>,
}

/// Repeatedly removes a minimum-degree vertex (least index on ties) while
/// the minimum degree is at most ((r-2)/(r-1))(n-t) - (k+1), compared
/// exactly: (r-1) * delta <= (r-2)(n-t) - (k+1)(r-1).
pub fn degenerate_peel(g: &Graph, k: usize, r: usize) -> PeelOutcome {
    assert!(r >= 3, "peeling requires r >= 3");
    let mut alive: Vec<usize> = (0..g.n()).collect();
    let mut removed = Vec::new();
    loop {
        let remaining = alive.len();
        if remaining == 0 {
            break;
        }
        let deg = |v: usize| alive.iter().filter(|&&u| g.has_edge(v, u)).count();
        let (&victim, d) = alive
            .iter()
            .map(|v| (v, deg(*v)))
            .min_by_key(|&(v, d)| (d, *v))
            .expect("nonempty");
        let lhs = ((r - 1) * d) as i64;
        let rhs = ((r - 2) * remaining) as i64 - ((k + 1) * (r - 1)) as i64;
        if lhs > rhs {
            break;
        }
        alive.retain(|&v| v != victim);
        removed.push(victim);
    }
    let set: VertexSet = alive.iter().copied().collect();
    let (graph, survivors) = g.induced(&set);
    PeelOutcome { graph, removed, survivors }
}

/// Plumbing only: a local-search guess at an (r-1)-partition with small
/// inner degrees. No correctness claim; useful as a starting point when a
/// graph arrives without its defining partition.
pub fn find_partition_heuristic(g: &Graph, num_classes: usize) -> PartitionClasses {
    assert!(num_classes >= 1);
    let n = g.n();
    let mut assign: Vec<usize> = (0..n).map(|v| v % num_classes).collect();
    let inner_deg = |assign: &[usize], v: usize| {
        g.neighbors(v).filter(|&u| assign[u] == assign[v]).count()
    };
    for _pass in 0..20 {
        let mut moved = false;
        for v in 0..n {
            let cur = inner_deg(&assign, v);
            let best = (0..num_classes)
                .map(|c| (g.neighbors(v).filter(|&u| assign[u] == c).count(), c))
                .min()
                .expect("nonempty");
            if best.0 < cur {
                assign[v] = best.1;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let classes = (0..num_classes)
        .map(|c| (0..n).filter(|&v| assign[v] == c).collect())
        .collect();
    PartitionClasses::new(n, classes).expect("assignment is a partition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::construct_extremal_fan_free;
    use crate::graph::FanSpec;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::new(vs.to_vec())
    }

    #[test]
    fn domination_basics() {
        let g = Graph::turan(6, 2).unwrap();
        let x = set(&[0, 1, 2]);
        let y = set(&[3, 4, 5]);
        assert!(dominates_with_deficiency(&g, &x, &y, 0).unwrap());

        let mut h = g.clone();
        h.remove_edge(0, 3);
        assert!(!dominates_with_deficiency(&h, &x, &y, 0).unwrap());
        assert!(dominates_with_deficiency(&h, &x, &y, 1).unwrap());

        assert!(matches!(
            dominates_with_deficiency(&g, &x, &set(&[2, 3]), 0),
            Err(Error::OverlappingSets)
        ));
    }

    #[test]
    fn deficiency_complete_cases() {
        let g = Graph::turan(9, 3).unwrap();
        let parts = PartitionClasses::turan_layout(9, 3).unwrap();
        assert!(is_deficiency_complete(&g, &parts, 0));

        let mut h = g.clone();
        h.remove_edge(0, 3);
        assert!(!is_deficiency_complete(&h, &parts, 0));
        assert!(is_deficiency_complete(&h, &parts, 1));
    }

    #[test]
    fn extend_single_seed_in_turan() {
        let g = Graph::turan(9, 3).unwrap();
        let parts = PartitionClasses::turan_layout(9, 3).unwrap();
        let out = extend_cliques(&g, &parts, &[set(&[0])], 0).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].len(), 3);
        assert!(out[0].contains(0));
        // transversal triangle
        let vs: Vec<usize> = out[0].iter().collect();
        assert!(g.has_edge(vs[0], vs[1]) && g.has_edge(vs[0], vs[2]) && g.has_edge(vs[1], vs[2]));
    }

    #[test]
    fn extend_two_empty_seeds() {
        let g = Graph::turan(12, 3).unwrap();
        let parts = PartitionClasses::turan_layout(12, 3).unwrap();
        let out = extend_cliques(&g, &parts, &[set(&[]), set(&[])], 0).unwrap();
        assert_eq!(out.len(), 2);
        assert!(out[0].is_disjoint(&out[1]));
        for c in &out {
            assert_eq!(c.len(), 3);
        }
    }

    #[test]
    fn extend_transversal_seed_unchanged() {
        let g = Graph::turan(9, 3).unwrap();
        let parts = PartitionClasses::turan_layout(9, 3).unwrap();
        let seed = set(&[0, 3, 6]);
        let out = extend_cliques(&g, &parts, &[seed.clone()], 0).unwrap();
        assert_eq!(out[0], seed);
    }

    #[test]
    fn disjoint_cliques_in_turan() {
        // Y_0 empty, classes of T_{9,3}; k = 3 transversal triangles
        let g = Graph::turan(9, 3).unwrap();
        let mut classes = vec![set(&[])];
        classes.extend(PartitionClasses::turan_layout(9, 3).unwrap().classes().to_vec());
        let out = build_disjoint_cliques(&g, &classes, 0, 3, false).unwrap();
        assert_eq!(out.len(), 3);
        for (i, a) in out.iter().enumerate() {
            assert_eq!(a.len(), 3);
            for b in &out[i + 1..] {
                assert!(a.is_disjoint(b));
            }
        }
    }

    #[test]
    fn disjoint_cliques_with_y0() {
        let g = Graph::turan(8, 4).unwrap();
        let parts = PartitionClasses::turan_layout(8, 4).unwrap();
        let classes = parts.classes().to_vec();
        let out = build_disjoint_cliques(&g, &classes, 0, 2, true).unwrap();
        assert_eq!(out.len(), 2);
        for c in &out {
            assert_eq!(c.len(), 4); // K_4 transversal including Y_0
            let vs: Vec<usize> = c.iter().collect();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn deficit_examples() {
        let spec = FanSpec::new(2, 3).unwrap();
        let g = construct_extremal_fan_free(9, spec).unwrap();
        let parts = PartitionClasses::turan_layout(9, 2).unwrap();
        let rep = edgelow_deficit(&g, &parts, 2);
        assert_eq!(rep.inner_edges, 1);
        assert_eq!(rep.cross_missing, 0);
        assert_eq!(rep.deficit, 1);
        assert_eq!(rep.bound, 6);

        let t = Graph::turan(9, 3).unwrap();
        let parts = PartitionClasses::turan_layout(9, 3).unwrap();
        assert_eq!(edgelow_deficit(&t, &parts, 1).deficit, 0);

        let mut t2 = t.clone();
        t2.remove_edge(0, 3);
        assert_eq!(edgelow_deficit(&t2, &parts, 1).deficit, -1);
    }

    #[test]
    fn partition_properties_cases() {
        let spec = FanSpec::new(2, 3).unwrap();
        let g = construct_extremal_fan_free(9, spec).unwrap();
        let parts = PartitionClasses::turan_layout(9, 2).unwrap();
        let p = verify_partition_properties(&g, &parts, 2);
        assert!(p.all());

        let k9 = Graph::complete(9).unwrap();
        let p = verify_partition_properties(&k9, &parts, 1);
        assert!(!p.inner_bounds);

        let t = Graph::turan(9, 3).unwrap();
        let parts3 = PartitionClasses::turan_layout(9, 3).unwrap();
        for k in 0..3 {
            let p = verify_partition_properties(&t, &parts3, k);
            assert!(p.inner_bounds && p.local_bounds, "k = {k}");
        }
    }

    #[test]
    fn peel_cases() {
        let t = Graph::turan(9, 3).unwrap();
        let out = degenerate_peel(&t, 1, 3);
        assert!(out.removed.is_empty());
        assert_eq!(out.graph.n(), 9);

        // empty graph peels while (r-2)(n-t) >= (k+1)(r-1), then stops
        let e6 = Graph::empty(6).unwrap();
        let out = degenerate_peel(&e6, 1, 3);
        assert_eq!(out.removed, vec![0, 1, 2]);
        assert_eq!(out.graph.n(), 3);

        // star: the least-index leaf goes first
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let out = degenerate_peel(&star, 1, 3);
        assert_eq!(out.removed.first(), Some(&1));
    }

    #[test]
    fn heuristic_partition_is_a_partition() {
        let g = Graph::turan(10, 3).unwrap();
        let parts = find_partition_heuristic(&g, 3);
        assert_eq!(parts.len(), 3);
        let total: usize = parts.classes().iter().map(|c| c.len()).sum();
        assert_eq!(total, 10);
        // on a Turán graph the local search should reach zero inner edges
        assert_eq!(edgelow_deficit(&g, &parts, 1).inner_edges, 0);
    }
}
