//! Exact monomial and monomial-ideal arithmetic: edge ideals, minimal
//! generating sets of powers, colon ideals, membership, polarization, and
//! factorization of power generators into edge multisets.
//!
//! Everything is purely combinatorial; there is no Groebner machinery
//! anywhere. Ideals are kept in canonical form: the unique minimal generating
//! set, sorted by (total degree, lexicographic exponent vector), so output is
//! deterministic across runs.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("empty variable name")]
    EmptyVariable,
    #[error("duplicate variable {0:?}")]
    DuplicateVariable(String),
    #[error("malformed monomial {input:?}: {reason}")]
    MalformedMonomial { input: String, reason: String },
    #[error("exponent vector has length {got}, ambient has {want} variables")]
    ExponentLength { got: usize, want: usize },
}

/// An ordered list of variable names shared by monomials and ideals.
#[derive(Debug, PartialEq, Eq)]
pub struct Ambient {
    vars: Vec<String>,
}

impl Ambient {
    pub fn new(vars: Vec<String>) -> Result<Arc<Self>, AlgebraError> {
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(AlgebraError::EmptyVariable);
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ambient { vars }))
    }

    /// Variables `x1..xn`.
    pub fn standard(n: usize) -> Arc<Self> {
        Ambient::new((1..=n).map(|i| format!("x{i}")).collect()).expect("standard names are distinct")
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn same_ambient(a: &Arc<Ambient>, b: &Arc<Ambient>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A monomial: one exponent per ambient variable.
#[derive(Debug, Clone)]
pub struct Monomial {
    ambient: Arc<Ambient>,
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(ambient: &Arc<Ambient>) -> Self {
        Monomial {
            ambient: ambient.clone(),
            exps: vec![0; ambient.len()],
        }
    }

    pub fn variable(ambient: &Arc<Ambient>, k: usize) -> Self {
        let mut m = Monomial::one(ambient);
        m.exps[k] = 1;
        m
    }

    pub fn from_exps(ambient: &Arc<Ambient>, exps: Vec<u32>) -> Result<Self, AlgebraError> {
        if exps.len() != ambient.len() {
            return Err(AlgebraError::ExponentLength {
                got: exps.len(),
                want: ambient.len(),
            });
        }
        Ok(Monomial {
            ambient: ambient.clone(),
            exps,
        })
    }

    /// Parse the `x1^2*x3*y2_1` syntax against a fixed ambient.
    pub fn parse(ambient: &Arc<Ambient>, input: &str) -> Result<Self, AlgebraError> {
        let trimmed = input.trim();
        if trimmed == "1" {
            return Ok(Monomial::one(ambient));
        }
        let mut m = Monomial::one(ambient);
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u32),
                Some((name, e)) => {
                    let exp = e.trim().parse::<u32>().map_err(|_| AlgebraError::MalformedMonomial {
                        input: input.to_string(),
                        reason: format!("bad exponent {e:?}"),
                    })?;
                    (name.trim(), exp)
                }
            };
            let k = ambient
                .index_of(name)
                .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
            m.exps[k] += exp;
        }
        Ok(m)
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, k: usize) -> u32 {
        self.exps[k]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&k| self.exps[k] > 0).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert!(same_ambient(&self.ambient, &other.ambient), "ambient mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial {
            ambient: self.ambient.clone(),
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert!(same_ambient(&self.ambient, &other.ambient), "ambient mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            ambient: self.ambient.clone(),
            exps,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert!(same_ambient(&self.ambient, &other.ambient), "ambient mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial {
            ambient: self.ambient.clone(),
            exps,
        }
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.ambient, &other.ambient) && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Canonical order: total degree, then lexicographic with earlier
    /// variables weighing more, so `x1*x2` sorts before `x2*x3`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", self.ambient.vars()[k])?;
            } else {
                write!(f, "{}^{}", self.ambient.vars()[k], e)?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal in canonical form: the unique minimal generating set,
/// sorted. The zero ideal has no generators; the unit ideal's generator is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ambient: Arc<Ambient>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ambient: &Arc<Ambient>, gens: Vec<Monomial>) -> Self {
        for g in &gens {
            assert!(same_ambient(&g.ambient, ambient), "ambient mismatch");
        }
        MonomialIdeal {
            ambient: ambient.clone(),
            gens: minimalize(gens),
        }
    }

    pub fn zero(ambient: &Arc<Ambient>) -> Self {
        MonomialIdeal {
            ambient: ambient.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: &Arc<Ambient>) -> Self {
        MonomialIdeal {
            ambient: ambient.clone(),
            gens: vec![Monomial::one(ambient)],
        }
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// True iff some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert!(same_ambient(&self.ambient, &m.ambient), "ambient mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Minimal generators of `I^s`; `s = 0` gives the unit ideal.
    pub fn power(&self, s: u32) -> MonomialIdeal {
        if s == 0 {
            return MonomialIdeal::unit(&self.ambient);
        }
        if self.is_zero() {
            return MonomialIdeal::zero(&self.ambient);
        }
        let mut products = Vec::new();
        let mut stack: Vec<usize> = Vec::with_capacity(s as usize);
        self.power_rec(s as usize, 0, &Monomial::one(&self.ambient), &mut stack, &mut products);
        MonomialIdeal::new(&self.ambient, products)
    }

    fn power_rec(&self, s: usize, from: usize, acc: &Monomial, stack: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if stack.len() == s {
            out.push(acc.clone());
            return;
        }
        for i in from..self.gens.len() {
            stack.push(i);
            self.power_rec(s, i, &acc.mul(&self.gens[i]), stack, out);
            stack.pop();
        }
    }

    /// The colon ideal `(I : m)`, computed as the minimalization of
    /// `{ g / gcd(g, m) }` over the generators.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        assert!(same_ambient(&self.ambient, &m.ambient), "ambient mismatch");
        let quotients = self
            .gens
            .iter()
            .map(|g| g.try_div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal {
            ambient: self.ambient.clone(),
            gens: minimalize(quotients),
        }
    }

    /// Standard polarization: the occurrence `x_k^a` in a generator becomes
    /// `x_k * y<k>_1 * ... * y<k>_(a-1)`. The result is squarefree on an
    /// enlarged ambient; new variables are appended in order of first need
    /// while scanning the canonical generators.
    pub fn polarize(&self) -> MonomialIdeal {
        let n = self.ambient.len();
        let mut names: Vec<String> = self.ambient.vars().to_vec();
        // position of y<k>_t, keyed by (variable, copy) with copy >= 1
        let mut extra: Vec<Vec<usize>> = vec![Vec::new(); n];
        for g in &self.gens {
            for k in 0..n {
                for t in extra[k].len() as u32 + 1..g.exps[k] {
                    extra[k].push(names.len());
                    names.push(format!("y{}_{}", k + 1, t));
                }
            }
        }
        let polarized = Ambient::new(names).expect("polarization names are fresh");
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; polarized.len()];
                for k in 0..n {
                    if g.exps[k] > 0 {
                        exps[k] = 1;
                        for t in 0..(g.exps[k] - 1) as usize {
                            exps[extra[k][t]] = 1;
                        }
                    }
                }
                Monomial {
                    ambient: polarized.clone(),
                    exps,
                }
            })
            .collect();
        MonomialIdeal {
            ambient: polarized,
            gens: minimalize(gens),
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    vars: Vec<String>,
    gens: Vec<String>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        IdealJson {
            vars: self.ambient.vars().to_vec(),
            gens: self.gens.iter().map(|g| g.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = IdealJson::deserialize(deserializer)?;
        let ambient = Ambient::new(raw.vars).map_err(serde::de::Error::custom)?;
        let gens = raw
            .gens
            .iter()
            .map(|s| Monomial::parse(&ambient, s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Ok(MonomialIdeal::new(&ambient, gens))
    }
}

/// The edge ideal: one squarefree degree-two generator per edge, over an
/// ambient built from the graph's vertex labels.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let ambient = Ambient::new(g.labels().to_vec()).expect("graph labels are distinct");
    let gens = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            Monomial::variable(&ambient, u).mul(&Monomial::variable(&ambient, v))
        })
        .collect();
    MonomialIdeal::new(&ambient, gens)
}

/// Reduce a generating set to the unique minimal one, canonically sorted.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // kept generators have degree <= deg(g), so divisibility only needs
        // checking against what is already kept
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// A multiset of edges whose monomial product, times the residual, equals a
/// factored monomial. Factoring a full generator of `I^s` into exactly `s`
/// edges leaves residual 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFactorization {
    pub edges: Vec<Edge>,
    pub residual: Monomial,
}

impl EdgeFactorization {
    pub fn product(&self, ambient: &Arc<Ambient>) -> Monomial {
        let mut m = self.residual.clone();
        for e in &self.edges {
            let (u, v) = e.endpoints();
            m = m.mul(&Monomial::variable(ambient, u)).mul(&Monomial::variable(ambient, v));
        }
        m
    }
}

/// All multisets of `s` edges of `g` whose product equals `m`, deduplicated
/// as multisets. Returns an empty list when `m` is not an `s`-fold edge
/// product (a violated precondition, signalled rather than panicking).
pub fn edge_factorizations(m: &Monomial, g: &Graph, s: u32) -> Vec<EdgeFactorization> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut chosen: Vec<Edge> = Vec::with_capacity(s as usize);
    let mut remaining = m.exps().to_vec();
    factorize_rec(&edges, s as usize, 0, &mut remaining, &mut chosen, m, &mut out);
    out
}

fn factorize_rec(
    edges: &[Edge],
    s: usize,
    from: usize,
    remaining: &mut [u32],
    chosen: &mut Vec<Edge>,
    m: &Monomial,
    out: &mut Vec<EdgeFactorization>,
) {
    if chosen.len() == s {
        if remaining.iter().all(|&e| e == 0) {
            out.push(EdgeFactorization {
                edges: chosen.clone(),
                residual: Monomial::one(m.ambient()),
            });
        }
        return;
    }
    for i in from..edges.len() {
        let (u, v) = edges[i].endpoints();
        if remaining[u] >= 1 && remaining[v] >= 1 {
            remaining[u] -= 1;
            remaining[v] -= 1;
            chosen.push(edges[i]);
            factorize_rec(edges, s, i, remaining, chosen, m, out);
            chosen.pop();
            remaining[u] += 1;
            remaining[v] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn wc(n: usize) -> Graph {
        Graph::cycle(n).unwrap().whisker_all().unwrap()
    }

    fn parse_ideal(ambient: &Arc<Ambient>, gens: &[&str]) -> MonomialIdeal {
        let gens = gens.iter().map(|s| Monomial::parse(ambient, s).unwrap()).collect();
        MonomialIdeal::new(ambient, gens)
    }

    #[test]
    fn edge_ideals() {
        assert_eq!(edge_ideal(&wc(3)).gens().len(), 6);
        assert!(edge_ideal(&Graph::new(4).unwrap()).is_zero());

        let i = edge_ideal(&Graph::cycle(5).unwrap());
        let a = i.ambient().clone();
        let want = parse_ideal(&a, &["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"]);
        assert_eq!(i, want);
    }

    #[test]
    fn powers() {
        let a = Ambient::standard(3);
        let i = parse_ideal(&a, &["x1*x2", "x2*x3"]);
        let sq = i.power(2);
        assert_eq!(sq, parse_ideal(&a, &["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"]));

        assert_eq!(i.power(1), i);
        assert!(i.power(0).is_unit());

        let w5sq = edge_ideal(&wc(5)).power(2);
        assert!(w5sq.gens().iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn colon_ideals() {
        let a = Ambient::standard(3);
        let i = parse_ideal(&a, &["x1*x2", "x2*x3"]);
        let m = Monomial::parse(&a, "x1*x2").unwrap();
        assert_eq!(i.power(2).colon(&m), i);

        assert_eq!(i.colon(&Monomial::one(&a)), i);

        // squares appear in colon ideals of powers of whiskered-cycle ideals
        let w3 = edge_ideal(&wc(3));
        let aw = w3.ambient().clone();
        let m = Monomial::parse(&aw, "x1*x2").unwrap();
        let colon = w3.power(2).colon(&m);
        let x3sq = Monomial::parse(&aw, "x3^2").unwrap();
        assert!(colon.contains(&x3sq));
    }

    #[test]
    fn membership() {
        let a = Ambient::standard(3);
        let i = parse_ideal(&a, &["x1*x2"]);
        for g in i.gens() {
            assert!(i.contains(g));
        }
        assert!(!MonomialIdeal::zero(&a).contains(&Monomial::one(&a)));
        assert!(i.contains(&Monomial::parse(&a, "x1^2*x2*x3").unwrap()));
        assert!(!i.contains(&Monomial::parse(&a, "x1*x3").unwrap()));
    }

    #[test]
    fn polarization() {
        let a = Ambient::standard(2);
        let i = parse_ideal(&a, &["x1^2", "x1*x2"]);
        let p = i.polarize();
        assert_eq!(p.ambient().vars(), &["x1", "x2", "y1_1"]);
        let pa = p.ambient().clone();
        assert_eq!(p, parse_ideal(&pa, &["x1*y1_1", "x1*x2"]));

        // squarefree ideals are fixed points
        let j = edge_ideal(&wc(4));
        let pj = j.polarize();
        assert_eq!(pj.ambient().vars(), j.ambient().vars());
        assert_eq!(pj.gens().len(), j.gens().len());

        // each square among colon generators turns into x_k * y<k>_1
        let w3 = edge_ideal(&wc(3));
        let m = Monomial::parse(w3.ambient(), "x1*x2").unwrap();
        let colon = w3.power(2).colon(&m);
        let pc = colon.polarize();
        assert_eq!(pc.gens().len(), colon.gens().len());
        assert!(pc.is_squarefree());
        for (g, pg) in colon.gens().iter().zip(pc.gens()) {
            assert_eq!(g.degree(), pg.degree());
        }
    }

    #[test]
    fn factorizations() {
        let c4 = Graph::cycle(4).unwrap();
        let i4 = edge_ideal(&c4);
        let m = Monomial::parse(i4.ambient(), "x1*x2*x3*x4").unwrap();
        let facs = edge_factorizations(&m, &c4, 2);
        let sets: Vec<Vec<(usize, usize)>> = facs
            .iter()
            .map(|f| f.edges.iter().map(|e| e.endpoints()).collect())
            .collect();
        assert_eq!(sets, vec![vec![(0, 1), (2, 3)], vec![(0, 3), (1, 2)]]);
        for f in &facs {
            assert!(f.residual.is_one());
            assert_eq!(f.product(i4.ambient()), m);
        }

        // a repeated edge factors as {e, e}
        let sq = Monomial::parse(i4.ambient(), "x1^2*x2^2").unwrap();
        let facs = edge_factorizations(&sq, &c4, 2);
        assert_eq!(facs.len(), 1);
        assert_eq!(facs[0].edges, vec![Edge::new(0, 1).unwrap(); 2]);

        // on C_5 the monomial x1*x2*x3*x5 factors only as (x5x1)(x2x3)
        let c5 = Graph::cycle(5).unwrap();
        let i5 = edge_ideal(&c5);
        let m = Monomial::parse(i5.ambient(), "x1*x2*x3*x5").unwrap();
        let facs = edge_factorizations(&m, &c5, 2);
        assert_eq!(facs.len(), 1);
        let mut pair: Vec<(usize, usize)> = facs[0].edges.iter().map(|e| e.endpoints()).collect();
        pair.sort();
        assert_eq!(pair, vec![(0, 4), (1, 2)]);
    }

    #[test]
    fn every_power_generator_factors() {
        for n in [3, 4, 5] {
            let g = wc(n);
            let i = edge_ideal(&g);
            for s in 1..=2u32 {
                for m in i.power(s).gens() {
                    assert!(
                        !edge_factorizations(m, &g, s).is_empty(),
                        "W(C_{n}), s={s}, M={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let a = Ambient::new(vec!["x1".into(), "x3".into(), "y2_1".into()]).unwrap();
        let m = Monomial::parse(&a, "x1^2*x3*y2_1").unwrap();
        assert_eq!(m.to_string(), "x1^2*x3*y2_1");
        assert_eq!(Monomial::parse(&a, "1").unwrap(), Monomial::one(&a));
        assert!(Monomial::parse(&a, "z9").is_err());
    }

    fn arb_ideal(max_vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
        (1..=max_vars).prop_flat_map(move |n| {
            proptest::collection::vec(
                proptest::collection::vec(0..=max_exp, n),
                1..=max_gens,
            )
            .prop_map(move |rows| {
                let a = Ambient::standard(n);
                let gens = rows
                    .into_iter()
                    .map(|exps| Monomial::from_exps(&a, exps).unwrap())
                    .collect();
                MonomialIdeal::new(&a, gens)
            })
        })
    }

    fn arb_edge_ideal(max_n: usize) -> impl Strategy<Value = MonomialIdeal> {
        (2..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |bits| {
                let chosen: Vec<(usize, usize)> =
                    pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
                edge_ideal(&Graph::from_edges(n, &chosen).unwrap())
            })
        })
    }

    /// Every monomial on `ambient` with degree at most `max_deg`.
    fn monomials_up_to(ambient: &Arc<Ambient>, max_deg: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(ambient)];
        for _ in 0..max_deg {
            let mut next = Vec::new();
            for m in &out {
                for k in 0..ambient.len() {
                    next.push(m.mul(&Monomial::variable(ambient, k)));
                }
            }
            out.extend(next);
            out.sort();
            out.dedup();
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn canonical_form_is_minimal(i in arb_ideal(5, 3, 6)) {
            let gens = i.gens();
            for (a, ga) in gens.iter().enumerate() {
                for (b, gb) in gens.iter().enumerate() {
                    if a != b {
                        prop_assert!(!ga.divides(gb), "{ga} divides {gb}");
                    }
                }
            }
            // sorted canonically
            let mut sorted = gens.to_vec();
            sorted.sort();
            prop_assert_eq!(sorted, gens.to_vec());
        }

        #[test]
        fn power_is_multiplicative(i in arb_edge_ideal(8), a in 1u32..=2, b in 1u32..=2) {
            let lhs = i.power(a + b);
            let pa = i.power(a);
            let pb = i.power(b);
            let products: Vec<Monomial> = pa
                .gens()
                .iter()
                .flat_map(|g| pb.gens().iter().map(move |h| g.mul(h)))
                .collect();
            let rhs = MonomialIdeal::new(i.ambient(), products);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn colon_matches_membership_oracle(i in arb_ideal(4, 3, 4), mexps in proptest::collection::vec(0u32..=3, 4)) {
            let a = i.ambient().clone();
            let mut exps = mexps;
            exps.truncate(a.len());
            exps.resize(a.len(), 0);
            let m = Monomial::from_exps(&a, exps).unwrap();
            let colon = i.colon(&m);
            for u in monomials_up_to(&a, 4) {
                prop_assert_eq!(colon.contains(&u), i.contains(&u.mul(&m)), "u = {}", u);
            }
        }

        #[test]
        fn polarization_preserves_count_and_degrees(i in arb_ideal(4, 3, 5)) {
            let p = i.polarize();
            prop_assert!(p.is_squarefree());
            prop_assert_eq!(p.gens().len(), i.gens().len());
            for (g, pg) in i.gens().iter().zip(p.gens()) {
                prop_assert_eq!(g.degree(), pg.degree());
            }
        }
    }
}
