//! Finite simple graphs on at most 64 labeled vertices.
//!
//! Neighbor sets are packed into `u64` words, so intersections, closed
//! neighborhoods and induced-subgraph filters are single bit operations.
//! Everything is immutable after construction and safe to share across
//! threads.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard limit imposed by the packed-word neighbor sets.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("cycle graphs need at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("graphs are limited to {MAX_VERTICES} vertices, got {0}")]
    TooManyVertices(usize),
    #[error("edge endpoints must be distinct, got vertex {0} twice")]
    LoopEdge(usize),
    #[error("invalid graph data: {0}")]
    Invalid(String),
}

/// An unordered pair of distinct vertex indices, stored smaller-first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Endpoints, smaller index first.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint other than `w`; `w` must be an endpoint.
    pub fn other(&self, w: usize) -> usize {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn mask(&self) -> u64 {
        (1 << self.u) | (1 << self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u + 1, self.v + 1)
    }
}

/// A finite simple graph. Vertices are `0..n`; labels default to `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

/// Result of an induced-subgraph operation: the relabeled graph plus the
/// new-index -> old-index map, so constructions downstream can keep speaking
/// in the original vertex labels.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `kept[new] = old` vertex index in the parent graph.
    pub kept: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices with default labels.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            labels: (1..=n).map(|i| format!("x{i}")).collect(),
            adj: vec![0; n],
        })
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(labels.len()));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(GraphError::Invalid(format!("duplicate label {a:?}")));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for w in [a, b] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { index: w, n });
            }
        }
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        Ok(())
    }

    /// The cycle graph on `n >= 3` vertices `x1..xn`, edges `{xi, xi+1}` mod n.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let mut g = Graph::new(n)?;
        for i in 0..n {
            g.add_edge(i, (i + 1) % n)?;
        }
        Ok(g)
    }

    /// The whiskered cycle on `2n` vertices: cycle vertices `x1..xn`, whisker
    /// `x{n+i}` attached to `x{i}`.
    pub fn whiskered_cycle(n: usize) -> Result<Self, GraphError> {
        Graph::cycle(n)?.whisker_all()
    }

    /// Attach a pendant vertex to every vertex: vertex `i` gains the new
    /// neighbor `n + i`, labeled `x{n+i+1}` when that name is free.
    pub fn whisker_all(&self) -> Result<Self, GraphError> {
        let n = self.vertex_count();
        if 2 * n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(2 * n));
        }
        let mut labels = self.labels.clone();
        for i in 0..n {
            let mut name = format!("x{}", n + i + 1);
            while labels.contains(&name) {
                name.push('\'');
            }
            labels.push(name);
        }
        let mut g = Graph::with_labels(labels)?;
        for e in self.edges() {
            let (u, v) = e.endpoints();
            g.add_edge(u, v)?;
        }
        for i in 0..n {
            g.add_edge(i, n + i)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && b < self.vertex_count() && self.adj[a] >> b & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}` as a bitmask.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.vertex_count() == 64 {
            u64::MAX
        } else {
            (1 << self.vertex_count()) - 1
        }
    }

    /// All edges, sorted lexicographically by endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..n {
            let above = u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
            let mut m = self.adj[u] & above;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Induced subgraph on `keep` (deduplicated, sorted ascending); labels are
    /// carried over from the parent.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let n = self.vertex_count();
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&bad) = kept.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { index: bad, n });
        }
        Ok(self.induced_by_mask(kept.iter().fold(0u64, |m, &v| m | 1 << v)))
    }

    /// Induced subgraph on the vertices of `mask`.
    pub fn induced_by_mask(&self, mask: u64) -> InducedSubgraph {
        let mask = mask & self.vertex_mask();
        let kept: Vec<usize> = (0..self.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in kept.iter().enumerate() {
            new_index[old] = new;
        }
        let labels = kept.iter().map(|&v| self.labels[v].clone()).collect();
        let mut adj = vec![0u64; kept.len()];
        for (new, &old) in kept.iter().enumerate() {
            let mut m = self.adj[old] & mask;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[new] |= 1 << new_index[w];
            }
        }
        InducedSubgraph {
            graph: Graph { labels, adj },
            kept,
        }
    }

    /// Same vertex set, one edge removed.
    pub fn remove_edge(&self, e: Edge) -> Result<Self, GraphError> {
        let (u, v) = e.endpoints();
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        Ok(g)
    }

    /// Induced subgraph on `V ∖ (N[u] ∪ N[v])` for the edge `e = {u, v}`.
    pub fn without_edge_neighborhood(&self, e: Edge) -> Result<InducedSubgraph, GraphError> {
        let (u, v) = e.endpoints();
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let cut = self.closed_neighborhood(u) | self.closed_neighborhood(v);
        Ok(self.induced_by_mask(self.vertex_mask() & !cut))
    }

    /// Induced subgraph on `V ∖ N[v]`.
    pub fn without_closed_neighborhood(&self, v: usize) -> Result<InducedSubgraph, GraphError> {
        let n = self.vertex_count();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { index: v, n });
        }
        Ok(self.induced_by_mask(self.vertex_mask() & !self.closed_neighborhood(v)))
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let n = self.vertex_count();
        let full = self.vertex_mask();
        let adj = (0..n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Chordality test: maximum cardinality search followed by the standard
    /// perfect-elimination-ordering check. True iff no induced cycle of
    /// length >= 4 exists.
    pub fn is_chordal(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut order = Vec::with_capacity(n);
        let mut placed = 0u64;
        let mut weight = vec![0usize; n];
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| (weight[v], n - v))
                .expect("an unplaced vertex remains");
            placed |= 1 << v;
            order.push(v);
            let mut m = self.adj[v] & !placed;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                weight[w] += 1;
            }
        }
        // position in the search order
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (i, &v) in order.iter().enumerate() {
            // earlier neighbors must form a clique through the latest of them
            let earlier: Vec<usize> = (0..i).map(|j| order[j]).filter(|&w| self.has_edge(v, w)).collect();
            if let Some(&u) = earlier.iter().max_by_key(|&&w| pos[w]) {
                for &w in &earlier {
                    if w != u && !self.has_edge(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact induced matching number: the largest edge set pairwise at
    /// distance >= 2 (no shared vertices, no edge of the graph between two
    /// matched edges). Exhaustive branch-and-bound over edges.
    pub fn induced_matching_number(&self) -> usize {
        let edges = self.edges();
        let mut best = 0;
        self.indmatch_branch(&edges, 0, self.vertex_mask(), 0, &mut best);
        best
    }

    fn indmatch_branch(&self, edges: &[Edge], start: usize, allowed: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        if size + (allowed.count_ones() as usize) / 2 <= *best {
            return;
        }
        for i in start..edges.len() {
            let e = edges[i];
            if allowed & e.mask() != e.mask() {
                continue;
            }
            let (u, v) = e.endpoints();
            let forbidden = self.closed_neighborhood(u) | self.closed_neighborhood(v);
            self.indmatch_branch(edges, i + 1, allowed & !forbidden, size + 1, best);
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        let edges = self
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                (u + 1, v + 1)
            })
            .collect();
        GraphJson {
            n: self.vertex_count(),
            labels: self.labels.clone(),
            edges,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = GraphJson::deserialize(deserializer)?;
        let mut g = if raw.labels.is_empty() && raw.n > 0 {
            Graph::new(raw.n)
        } else if raw.labels.len() == raw.n {
            Graph::with_labels(raw.labels)
        } else {
            Err(GraphError::Invalid(format!(
                "{} labels for {} vertices",
                raw.labels.len(),
                raw.n
            )))
        }
        .map_err(serde::de::Error::custom)?;
        for (u, v) in raw.edges {
            if u == 0 || v == 0 {
                return Err(serde::de::Error::custom("vertex indices are 1-based"));
            }
            g.add_edge(u - 1, v - 1).map_err(serde::de::Error::custom)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn wc(n: usize) -> Graph {
        Graph::cycle(n).unwrap().whisker_all().unwrap()
    }

    #[test]
    fn cycle_basics() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(
            c3.edges(),
            vec![Edge::new(0, 1).unwrap(), Edge::new(0, 2).unwrap(), Edge::new(1, 2).unwrap()]
        );

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        assert_eq!(Graph::cycle(2), Err(GraphError::CycleTooSmall(2)));
    }

    #[test]
    fn whiskering() {
        let w3 = wc(3);
        assert_eq!(w3.vertex_count(), 6);
        assert_eq!(w3.edge_count(), 6);

        let w5 = wc(5);
        assert_eq!(w5.vertex_count(), 10);
        assert_eq!(w5.edge_count(), 10);
        let degs: Vec<usize> = (0..10).map(|v| w5.degree(v)).collect();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 1, 1, 1, 1, 1]);
        assert_eq!(w5.label(7), "x8");
        assert!(w5.has_edge(2, 7));

        // whiskering a single edge gives a path on 4 vertices
        let p = Graph::from_edges(2, &[(0, 1)]).unwrap().whisker_all().unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 3);
        assert!(p.has_edge(0, 2) && p.has_edge(0, 1) && p.has_edge(1, 3));
    }

    #[test]
    fn whisker_degree_property() {
        for g in [Graph::cycle(6).unwrap(), Graph::from_edges(3, &[(0, 1)]).unwrap()] {
            let n = g.vertex_count();
            let w = g.whisker_all().unwrap();
            for v in 0..n {
                assert_eq!(w.degree(v), g.degree(v) + 1);
                assert_eq!(w.degree(n + v), 1);
            }
        }
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph.edge_count(), 2);
        assert!(sub.graph.has_edge(0, 1) && sub.graph.has_edge(1, 2));
        assert_eq!(sub.kept, vec![0, 1, 2]);
        assert_eq!(sub.graph.label(2), "x3");

        let all = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(all.graph, c5);

        let empty = c5.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.vertex_count(), 0);

        assert!(c5.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn edge_removal() {
        let c3 = Graph::cycle(3).unwrap();
        let e = Edge::new(0, 1).unwrap();
        let g = c3.remove_edge(e).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.remove_edge(e), Err(GraphError::NotAnEdge(0, 1)));
    }

    #[test]
    fn edge_neighborhood_deletion() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.without_edge_neighborhood(Edge::new(0, 1).unwrap()).unwrap();
        assert_eq!(sub.kept, vec![3]);
        assert_eq!(sub.graph.edge_count(), 0);

        let c3 = Graph::cycle(3).unwrap();
        let sub = c3.without_edge_neighborhood(Edge::new(0, 1).unwrap()).unwrap();
        assert_eq!(sub.graph.vertex_count(), 0);

        // derived case on the whiskered 5-cycle
        let w5 = wc(5);
        let sub = w5.without_edge_neighborhood(Edge::new(0, 1).unwrap()).unwrap();
        assert_eq!(sub.kept, vec![3, 7, 8, 9]);
        assert_eq!(sub.graph.edge_count(), 1);
        assert!(sub.graph.has_edge(0, 2)); // x4 - x9 in original labels
        assert_eq!(sub.graph.label(0), "x4");
        assert_eq!(sub.graph.label(2), "x9");
    }

    #[test]
    fn closed_neighborhood_deletion() {
        let c4 = Graph::cycle(4).unwrap();
        let sub = c4.without_closed_neighborhood(0).unwrap();
        assert_eq!(sub.kept, vec![2]);

        // star: deleting the center's neighborhood leaves nothing
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.without_closed_neighborhood(0).unwrap().graph.vertex_count(), 0);

        // isolated vertex: N[v] = {v}
        let mut g = Graph::new(3).unwrap();
        g.add_edge(0, 1).unwrap();
        let sub = g.without_closed_neighborhood(2).unwrap();
        assert_eq!(sub.kept, vec![0, 1]);
        assert_eq!(sub.graph.edge_count(), 1);

        assert!(g.without_closed_neighborhood(5).is_err());
    }

    /// Brute-force induced matching number: try every edge subset.
    fn indmatch_brute(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for pick in 0u32..1 << edges.len() {
            let chosen: Vec<Edge> = (0..edges.len()).filter(|&i| pick >> i & 1 == 1).map(|i| edges[i]).collect();
            let ok = chosen.iter().enumerate().all(|(i, e)| {
                chosen[..i].iter().all(|f| {
                    let (a, b) = e.endpoints();
                    let (c, d) = f.endpoints();
                    [a, b].iter().all(|&x| [c, d].iter().all(|&y| x != y && !g.has_edge(x, y)))
                })
            });
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn induced_matching_numbers() {
        for n in 3..=6 {
            assert_eq!(wc(n).induced_matching_number(), (n - 1).div_ceil(2), "W(C_{n})");
        }
        assert_eq!(Graph::from_edges(2, &[(0, 1)]).unwrap().induced_matching_number(), 1);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(indmatch_brute(&c5), 1);
        assert_eq!(c5.induced_matching_number(), 1);
    }

    #[test]
    fn chordality() {
        let w3c = wc(3).complement();
        assert!(w3c.is_chordal());
        assert!(!Graph::cycle(4).unwrap().is_chordal());
        // a tree
        let t = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert!(t.is_chordal());
    }

    #[test]
    fn complement_small_cases() {
        let k3 = Graph::cycle(3).unwrap();
        assert_eq!(k3.complement().edge_count(), 0);

        // the complement of C_5 is again a 5-cycle
        let c5c = Graph::cycle(5).unwrap().complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));
        assert!(c5c.is_connected());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |bits| {
                let chosen: Vec<(usize, usize)> =
                    pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
                Graph::from_edges(n, &chosen).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn indmatch_monotone_under_induced(g in arb_graph(7), mask in any::<u64>()) {
            let sub = g.induced_by_mask(mask & g.vertex_mask());
            prop_assert!(sub.graph.induced_matching_number() <= g.induced_matching_number());
        }

        #[test]
        fn indmatch_matches_brute_force(g in arb_graph(6)) {
            prop_assert_eq!(g.induced_matching_number(), indmatch_brute(&g));
        }

        #[test]
        fn chordal_matches_brute_force(g in arb_graph(7)) {
            // no induced cycle of length >= 4: check every subset
            let n = g.vertex_count();
            let mut brute = true;
            for mask in 0u64..1 << n {
                if (mask.count_ones() as usize) < 4 {
                    continue;
                }
                let sub = g.induced_by_mask(mask).graph;
                let m = sub.vertex_count();
                if sub.is_connected() && (0..m).all(|v| sub.degree(v) == 2) {
                    brute = false;
                    break;
                }
            }
            prop_assert_eq!(g.is_chordal(), brute);
        }

        #[test]
        fn edge_neighborhood_matches_direct(g in arb_graph(8)) {
            for e in g.edges() {
                let (u, v) = e.endpoints();
                let direct = g.without_edge_neighborhood(e).unwrap();
                let nbhd = g.closed_neighborhood(u) | g.closed_neighborhood(v);
                let keep: Vec<usize> = (0..g.vertex_count()).filter(|&w| nbhd >> w & 1 == 0).collect();
                let via_induced = g.induced_subgraph(&keep).unwrap();
                prop_assert_eq!(direct.graph, via_induced.graph);
                prop_assert_eq!(direct.kept, via_induced.kept);
            }
        }

        #[test]
        fn json_round_trip(g in arb_graph(8)) {
            let s = serde_json::to_string(&g).unwrap();
            let back: Graph = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
