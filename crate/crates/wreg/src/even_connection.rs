//! Even-connected walks between vertices with respect to an s-fold edge
//! product, and the degree-two description of colon ideals of edge-ideal
//! powers built from them.
//!
//! Two vertices u, v (possibly equal) are even-connected with respect to the
//! factorization e_1...e_s when a walk u = p_0, p_1, ..., p_{2l+1} = v with
//! l >= 1 exists whose odd-position edges {p_{2k+1}, p_{2k+2}} are drawn from
//! the factorization multiset, each edge used at most its multiplicity.
//! Walks may repeat vertices; only odd positions consume edge budget.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph};
use crate::monomial::{edge_factorizations, EdgeFactorization, Monomial};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvenConnectionError {
    #[error("factorization edge {0} is not an edge of the graph")]
    ForeignEdge(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("{0} is not an s-fold product of edges of the graph")]
    NotFactorable(String),
}

/// A witness walk: the vertex sequence plus, for each odd-position edge, the
/// index of the factorization edge it uses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessPath {
    pub path: Vec<usize>,
    pub assignment: Vec<usize>,
}

impl WitnessPath {
    /// Number of factor steps (the `l` of the walk `p_0..p_{2l+1}`).
    pub fn factor_steps(&self) -> usize {
        self.assignment.len()
    }

    /// Re-validate all three conditions independently of the search.
    pub fn validate(&self, g: &Graph, f: &EdgeFactorization, u: usize, v: usize) -> bool {
        let p = &self.path;
        if p.len() < 4 || p.len() % 2 != 0 {
            return false;
        }
        let l = (p.len() - 2) / 2;
        if p[0] != u || p[p.len() - 1] != v || self.assignment.len() != l {
            return false;
        }
        // a walk in the graph
        if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        // odd positions match their assigned factorization edges
        for k in 0..l {
            let Some(&idx) = self.assignment.get(k) else {
                return false;
            };
            let Some(e) = f.edges.get(idx) else {
                return false;
            };
            match Edge::new(p[2 * k + 1], p[2 * k + 2]) {
                Ok(step) if step == *e => {}
                _ => return false,
            }
        }
        // each factorization index used at most once = multiplicities respected
        let mut used = self.assignment.clone();
        used.sort_unstable();
        used.windows(2).all(|w| w[0] != w[1])
    }

    /// Render as `x5 -x1= x2 -x3`: `-` before a free step's target, `=` after
    /// the source of a factor step.
    pub fn render(&self, g: &Graph) -> String {
        let mut out = String::new();
        for (i, &p) in self.path.iter().enumerate() {
            if i > 0 {
                if i % 2 == 1 {
                    out.push_str(" -");
                } else {
                    out.push_str(" ");
                }
            }
            out.push_str(g.label(p));
            if i % 2 == 1 && i + 1 < self.path.len() {
                out.push('=');
            }
        }
        out
    }
}

/// Search state: current vertex, parity of steps taken, remaining budget per
/// distinct factorization edge.
#[derive(Clone, PartialEq, Eq, Hash)]
struct State {
    vertex: usize,
    parity: u8,
    budget: Vec<u8>,
}

/// Breadth-first search for a shortest even-connected walk from `u` to `v`
/// with respect to `f`. Free steps use any graph edge; factor steps consume
/// one unit of a distinct factorization edge's budget. A walk is accepted at
/// `v` after an odd number of steps with at least one factor step taken.
pub fn even_connection_witness(
    g: &Graph,
    f: &EdgeFactorization,
    u: usize,
    v: usize,
) -> Result<Option<WitnessPath>, EvenConnectionError> {
    let n = g.vertex_count();
    for w in [u, v] {
        if w >= n {
            return Err(EvenConnectionError::VertexOutOfRange(w));
        }
    }
    // distinct edges with multiplicities, in sorted order
    let mut distinct: Vec<(Edge, u8)> = Vec::new();
    for e in &f.edges {
        let (a, b) = e.endpoints();
        if !g.has_edge(a, b) {
            return Err(EvenConnectionError::ForeignEdge(e.to_string()));
        }
        match distinct.iter_mut().find(|(d, _)| d == e) {
            Some((_, c)) => *c += 1,
            None => distinct.push((*e, 1)),
        }
    }
    distinct.sort_by_key(|(e, _)| *e);
    let full: Vec<u8> = distinct.iter().map(|&(_, c)| c).collect();

    let start = State {
        vertex: u,
        parity: 0,
        budget: full.clone(),
    };
    // predecessor map: state -> (previous state, factor edge index into `distinct` if any)
    let mut prev: HashMap<State, (State, Option<usize>)> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start.clone());
    let mut seen = HashMap::new();
    seen.insert(start, ());
    while let Some(state) = queue.pop_front() {
        if state.vertex == v && state.parity == 1 && state.budget != full {
            return Ok(Some(reconstruct(&state, &prev, &distinct, f)));
        }
        if state.parity == 0 {
            // free step along any incident edge
            let mut m = g.neighbors(state.vertex);
            while m != 0 {
                let z = m.trailing_zeros() as usize;
                m &= m - 1;
                let next = State {
                    vertex: z,
                    parity: 1,
                    budget: state.budget.clone(),
                };
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    prev.insert(next.clone(), (state.clone(), None));
                    queue.push_back(next);
                }
            }
        } else {
            // factor step: spend budget on a distinct edge at this vertex
            for (i, &(e, _)) in distinct.iter().enumerate() {
                if state.budget[i] > 0 && e.contains(state.vertex) {
                    let mut budget = state.budget.clone();
                    budget[i] -= 1;
                    let next = State {
                        vertex: e.other(state.vertex),
                        parity: 0,
                        budget,
                    };
                    if !seen.contains_key(&next) {
                        seen.insert(next.clone(), ());
                        prev.insert(next.clone(), (state.clone(), Some(i)));
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(None)
}

fn reconstruct(
    accept: &State,
    prev: &HashMap<State, (State, Option<usize>)>,
    distinct: &[(Edge, u8)],
    f: &EdgeFactorization,
) -> WitnessPath {
    let mut vertices = vec![accept.vertex];
    let mut factor_edges = Vec::new();
    let mut cur = accept.clone();
    while let Some((p, used)) = prev.get(&cur) {
        vertices.push(p.vertex);
        if let Some(i) = used {
            factor_edges.push(distinct[*i].0);
        }
        cur = p.clone();
    }
    vertices.reverse();
    factor_edges.reverse();
    // map the k-th use of each distinct edge to the k-th matching index in f
    let mut assignment = Vec::with_capacity(factor_edges.len());
    let mut used_count: HashMap<Edge, usize> = HashMap::new();
    for e in factor_edges {
        let skip = *used_count.get(&e).unwrap_or(&0);
        let idx = f
            .edges
            .iter()
            .enumerate()
            .filter(|(_, fe)| **fe == e)
            .map(|(i, _)| i)
            .nth(skip)
            .expect("budget bounds uses by multiplicity");
        used_count.insert(e, skip + 1);
        assignment.push(idx);
    }
    WitnessPath {
        path: vertices,
        assignment,
    }
}

/// The colon graph of a single factorization: the input graph's edges plus
/// one edge per even-connected pair `u != v`, together with the set of
/// vertices even-connected to themselves. These describe every degree-two
/// generator of `(I^{s+1} : M)` contributed by this factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColonGraph {
    pub graph: Graph,
    /// Vertices `u` with `u^2` among the colon generators, sorted.
    pub squared: Vec<usize>,
}

impl ColonGraph {
    /// The degree-two monomials this description stands for: one `x_u x_v`
    /// per edge and one `x_u^2` per squared vertex.
    pub fn quadratic_generators(&self, ambient: &std::sync::Arc<crate::monomial::Ambient>) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .graph
            .edges()
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                Monomial::variable(ambient, u).mul(&Monomial::variable(ambient, v))
            })
            .collect();
        for &u in &self.squared {
            let x = Monomial::variable(ambient, u);
            out.push(x.mul(&x));
        }
        out.sort();
        out
    }
}

pub fn colon_graph(g: &Graph, f: &EdgeFactorization) -> Result<ColonGraph, EvenConnectionError> {
    let n = g.vertex_count();
    let mut out = g.clone();
    let mut squared = Vec::new();
    for u in 0..n {
        for v in u..n {
            if even_connection_witness(g, f, u, v)?.is_some() {
                if u == v {
                    squared.push(u);
                } else {
                    out.add_edge(u, v).expect("indices in range");
                }
            }
        }
    }
    Ok(ColonGraph {
        graph: out,
        squared,
    })
}

/// Union of the per-factorization colon graphs over every factorization of
/// `m` into `s` edges. The colon ideal depends only on `m`, so the union is
/// the object compared against it.
pub fn colon_graph_all_factorizations(
    g: &Graph,
    m: &Monomial,
    s: u32,
) -> Result<ColonGraph, EvenConnectionError> {
    let facs = edge_factorizations(m, g, s);
    if facs.is_empty() {
        return Err(EvenConnectionError::NotFactorable(m.to_string()));
    }
    let mut union: Option<ColonGraph> = None;
    for f in &facs {
        let cg = colon_graph(g, f)?;
        union = Some(match union {
            None => cg,
            Some(mut acc) => {
                for e in cg.graph.edges() {
                    let (u, v) = e.endpoints();
                    acc.graph.add_edge(u, v).expect("indices in range");
                }
                for u in cg.squared {
                    if !acc.squared.contains(&u) {
                        acc.squared.push(u);
                    }
                }
                acc.squared.sort_unstable();
                acc
            }
        });
    }
    Ok(union.expect("at least one factorization"))
}
