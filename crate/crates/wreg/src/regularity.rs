//! Castelnuovo-Mumford regularity and graded Betti tables of monomial
//! ideals, computed by subset enumeration over the Stanley-Reisner complex.
//!
//! For a squarefree ideal with complex D on ground set V, the graded Betti
//! number in homological position i and internal degree j collects, over the
//! subsets W of V with |W| = j, the dimensions of the reduced homology of the
//! induced subcomplex D|_W in dimension j - i - 2. The regularity is the
//! largest j - i with a nonzero entry, equivalently the largest d + 2 over
//! subsets W and dimensions d with nonvanishing homology. Non-squarefree
//! ideals are polarized first; polarization changes neither the Betti table
//! nor the regularity.
//!
//! The subset loop prunes cone points, then strong-collapses each restriction
//! to its core before any face enumeration; only the surviving cores (a tiny
//! fraction) reach the boundary-rank computations. The loop is partitioned
//! across threads; reductions are a maximum with deterministic tie-breaking
//! plus per-entry sums, so results never depend on the schedule.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::homology::{
    faces_by_size, homology_from_faces, strong_collapse_masks, FieldPrime, HomologyError,
    DEFAULT_GROUND_CAP,
};
use crate::monomial::{edge_ideal, MonomialIdeal};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegularityError {
    #[error("the zero ideal has no regularity")]
    ZeroIdeal,
    #[error("the unit ideal has no regularity")]
    UnitIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("edgeless graphs have a zero edge ideal; callers handle this case")]
    EdgelessGraph,
    #[error("ambient of size {size} exceeds the cap {cap}")]
    GroundTooLarge { size: usize, cap: usize },
}

impl From<HomologyError> for RegularityError {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::GroundTooLarge { size, cap } => RegularityError::GroundTooLarge { size, cap },
            HomologyError::NotSquarefree => RegularityError::NotSquarefree,
            HomologyError::UnitIdeal => RegularityError::UnitIdeal,
            HomologyError::NotPrime(_) => unreachable!("field validated at construction"),
        }
    }
}

/// Sparse graded Betti table: `(i, j) -> beta_{i,j}`, nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    field: u32,
    entries: BTreeMap<(u32, u32), u64>,
}

impl BettiTable {
    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn entry(&self, i: u32, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(u32, u32), u64> {
        &self.entries
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn derived_regularity(&self) -> u32 {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// CSV with header `i,j,beta`, rows sorted by (i, j).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (&(i, j), &b) in &self.entries {
            out.push_str(&format!("{i},{j},{b}\n"));
        }
        out
    }
}

/// Regularity plus a witness subset achieving it, for auditable reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityOutcome {
    pub reg: u32,
    pub field: u32,
    /// Variable names of a subset W with nonvanishing homology in dimension
    /// reg - 2; the smallest such subset in mask order.
    pub witness_subset: Vec<String>,
}

/// reg of a squarefree monomial ideal at the default ground cap.
pub fn regularity_squarefree(ideal: &MonomialIdeal, f: FieldPrime) -> Result<u32, RegularityError> {
    Ok(regularity_squarefree_detailed(ideal, f, DEFAULT_GROUND_CAP)?.reg)
}

pub fn regularity_squarefree_detailed(
    ideal: &MonomialIdeal,
    f: FieldPrime,
    cap: usize,
) -> Result<RegularityOutcome, RegularityError> {
    if ideal.is_zero() {
        return Err(RegularityError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(RegularityError::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(RegularityError::NotSquarefree);
    }
    let ground = ideal.ambient().len();
    if ground > cap {
        return Err(RegularityError::GroundTooLarge { size: ground, cap });
    }
    let nonfaces: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let scan = hochster_scan(ground, &nonfaces, f, false);
    let witness_subset = (0..ground)
        .filter(|&v| scan.witness >> v & 1 == 1)
        .map(|v| ideal.ambient().vars()[v].clone())
        .collect();
    Ok(RegularityOutcome {
        reg: scan.best,
        field: f.value(),
        witness_subset,
    })
}

/// reg of an arbitrary monomial ideal: polarize, then scan. The witness lives
/// in the polarized ambient.
pub fn regularity(ideal: &MonomialIdeal, f: FieldPrime) -> Result<u32, RegularityError> {
    Ok(regularity_detailed(ideal, f, DEFAULT_GROUND_CAP)?.reg)
}

pub fn regularity_detailed(
    ideal: &MonomialIdeal,
    f: FieldPrime,
    cap: usize,
) -> Result<RegularityOutcome, RegularityError> {
    if ideal.is_zero() {
        return Err(RegularityError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(RegularityError::UnitIdeal);
    }
    regularity_squarefree_detailed(&ideal.polarize(), f, cap)
}

/// Betti table of an arbitrary monomial ideal (via polarization, which
/// preserves it) at the default cap.
pub fn betti_table(ideal: &MonomialIdeal, f: FieldPrime) -> Result<BettiTable, RegularityError> {
    betti_table_capped(ideal, f, DEFAULT_GROUND_CAP)
}

pub fn betti_table_capped(
    ideal: &MonomialIdeal,
    f: FieldPrime,
    cap: usize,
) -> Result<BettiTable, RegularityError> {
    if ideal.is_zero() {
        return Err(RegularityError::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(RegularityError::UnitIdeal);
    }
    let polarized;
    let squarefree = if ideal.is_squarefree() {
        ideal
    } else {
        polarized = ideal.polarize();
        &polarized
    };
    let ground = squarefree.ambient().len();
    if ground > cap {
        return Err(RegularityError::GroundTooLarge { size: ground, cap });
    }
    let nonfaces: Vec<u64> = squarefree
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let scan = hochster_scan(ground, &nonfaces, f, true);
    Ok(BettiTable {
        field: f.value(),
        entries: scan.betti,
    })
}

/// Regularity of a graph's edge ideal. Edgeless graphs are rejected rather
/// than assigned a convention; inequality checks that delete vertices apply
/// their quotient-level convention in the verification layer.
pub fn reg_graph(g: &Graph, f: FieldPrime) -> Result<u32, RegularityError> {
    reg_graph_capped(g, f, DEFAULT_GROUND_CAP)
}

pub fn reg_graph_capped(g: &Graph, f: FieldPrime, cap: usize) -> Result<u32, RegularityError> {
    if g.edge_count() == 0 {
        return Err(RegularityError::EdgelessGraph);
    }
    Ok(regularity_squarefree_detailed(&edge_ideal(g), f, cap)?.reg)
}

struct Scan {
    best: u32,
    witness: u64,
    betti: BTreeMap<(u32, u32), u64>,
}

impl Scan {
    fn empty() -> Self {
        Scan {
            best: 0,
            witness: u64::MAX,
            betti: BTreeMap::new(),
        }
    }

    fn absorb(mut self, other: Scan) -> Scan {
        if other.best > self.best || (other.best == self.best && other.witness < self.witness) {
            self.best = other.best;
            self.witness = other.witness;
        }
        for (key, value) in other.betti {
            *self.betti.entry(key).or_insert(0) += value;
        }
        self
    }
}

/// One pass over all subsets W of the ground set. Per subset: cone-point
/// check against the precomputed per-vertex nonface lists, strong collapse,
/// and exact homology of the surviving core. Deterministic regardless of the
/// thread count: the reduction is (max, min-witness) plus commutative sums.
fn hochster_scan(ground: usize, nonfaces: &[u64], field: FieldPrime, want_betti: bool) -> Scan {
    let nf_by_vertex: Vec<Vec<u64>> = (0..ground)
        .map(|v| nonfaces.iter().copied().filter(|nf| nf >> v & 1 == 1).collect())
        .collect();
    let total: u64 = 1u64 << ground;
    (1..total)
        .into_par_iter()
        .fold(Scan::empty, |mut acc, w| {
            let mut m = w;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if !nf_by_vertex[v].iter().any(|&nf| nf & w == nf) {
                    return acc; // v is a cone point of the restriction
                }
            }
            let Some((core_w, core_nfs)) = strong_collapse_masks(w, nonfaces) else {
                return acc;
            };
            let levels = faces_by_size(core_w, &core_nfs);
            let dims = homology_from_faces(&levels, field);
            let j = w.count_ones();
            for (&d, &h) in &dims {
                let r = (d + 2) as u32;
                if r > acc.best || (r == acc.best && w < acc.witness) {
                    acc.best = r;
                    acc.witness = w;
                }
                if want_betti {
                    let i = (j as i32 - d - 2) as u32;
                    *acc.betti.entry((i, j)).or_insert(0) += h as u64;
                }
            }
            acc
        })
        .reduce(Scan::empty, Scan::absorb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::stanley_reisner;
    use crate::monomial::{Ambient, Monomial};
    use proptest::prelude::*;

    fn wc(n: usize) -> Graph {
        Graph::cycle(n).unwrap().whisker_all().unwrap()
    }

    fn parse_ideal(a: &std::sync::Arc<Ambient>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(a, gens.iter().map(|s| Monomial::parse(a, s).unwrap()).collect())
    }

    #[test]
    fn principal_ideals() {
        let a = Ambient::standard(2);
        assert_eq!(regularity_squarefree(&parse_ideal(&a, &["x1*x2"]), FieldPrime::GF2).unwrap(), 2);
        assert_eq!(regularity(&parse_ideal(&a, &["x1^2"]), FieldPrime::GF2).unwrap(), 2);
    }

    #[test]
    fn degenerate_ideals_are_rejected() {
        let a = Ambient::standard(2);
        assert_eq!(
            regularity_squarefree(&MonomialIdeal::zero(&a), FieldPrime::GF2),
            Err(RegularityError::ZeroIdeal)
        );
        assert_eq!(
            regularity(&MonomialIdeal::unit(&a), FieldPrime::GF2),
            Err(RegularityError::UnitIdeal)
        );
        assert_eq!(
            regularity_squarefree(&parse_ideal(&a, &["x1^2"]), FieldPrime::GF2),
            Err(RegularityError::NotSquarefree)
        );
        assert_eq!(reg_graph(&Graph::new(3).unwrap(), FieldPrime::GF2), Err(RegularityError::EdgelessGraph));
    }

    #[test]
    fn whiskered_cycle_edge_ideals() {
        // reg I(W(C_n)) = ceil((n-1)/2) + 1
        for (n, want) in [(3, 2), (4, 3), (5, 3), (6, 4), (7, 4)] {
            let i = edge_ideal(&wc(n));
            assert_eq!(regularity_squarefree(&i, FieldPrime::GF2).unwrap(), want, "n = {n}");
        }
    }

    #[test]
    fn graph_regularity() {
        assert_eq!(reg_graph(&wc(4), FieldPrime::GF2).unwrap(), 3);
        assert_eq!(
            reg_graph(&Graph::from_edges(2, &[(0, 1)]).unwrap(), FieldPrime::GF2).unwrap(),
            2
        );
        // isolated vertices never matter
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let h = Graph::from_edges(6, &[(0, 1)]).unwrap();
        assert_eq!(
            reg_graph(&g, FieldPrime::GF2).unwrap(),
            reg_graph(&h, FieldPrime::GF2).unwrap()
        );
    }

    #[test]
    fn betti_tables_by_hand() {
        let a = Ambient::standard(3);

        // two generators with one syzygy: x3*(x1x2) - x1*(x2x3)
        let i = parse_ideal(&a, &["x1*x2", "x2*x3"]);
        let t = betti_table(&i, FieldPrime::GF2).unwrap();
        assert_eq!(t.entries(), &BTreeMap::from([((0, 2), 2), ((1, 3), 1)]));
        assert_eq!(t.derived_regularity(), 2);

        // the triangle ideal
        let i = parse_ideal(&a, &["x1*x2", "x2*x3", "x1*x3"]);
        let t = betti_table(&i, FieldPrime::GF2).unwrap();
        assert_eq!(t.entry(0, 2), 3);
        assert_eq!(t.entry(1, 3), 2);
        assert_eq!(t.entries().len(), 2);
    }

    #[test]
    fn betti_counts_generators() {
        for g in [wc(3), wc(4), Graph::cycle(5).unwrap()] {
            let i = edge_ideal(&g);
            let t = betti_table(&i, FieldPrime::GF2).unwrap();
            assert_eq!(t.entry(0, 2), g.edge_count() as u64);
        }
    }

    #[test]
    fn csv_format() {
        let a = Ambient::standard(3);
        let i = parse_ideal(&a, &["x1*x2", "x2*x3"]);
        let t = betti_table(&i, FieldPrime::GF2).unwrap();
        assert_eq!(t.to_csv(), "i,j,beta\n0,2,2\n1,3,1\n");
    }

    #[test]
    fn witness_subsets_are_reported() {
        let i = edge_ideal(&wc(3));
        let out = regularity_squarefree_detailed(&i, FieldPrime::GF2, 24).unwrap();
        assert_eq!(out.reg, 2);
        assert_eq!(out.witness_subset.len(), 2);
        // the witness achieves the regularity: restriction has homology in
        // dimension reg - 2
        let c = stanley_reisner(&i).unwrap();
        let idx: Vec<usize> = out
            .witness_subset
            .iter()
            .map(|name| i.ambient().index_of(name).unwrap())
            .collect();
        let dims = c.restrict(&idx).reduced_homology_dims(FieldPrime::GF2).unwrap();
        assert_eq!(dims.get(&0), Some(&1));
    }

    #[test]
    fn cap_rejection() {
        let i = edge_ideal(&wc(7));
        assert_eq!(
            regularity_squarefree_detailed(&i, FieldPrime::GF2, 10),
            Err(RegularityError::GroundTooLarge { size: 14, cap: 10 })
        );
    }

    /// Betti table computed the slow way: for every subset, enumerate the
    /// restriction's faces and take raw boundary ranks, no pruning at all.
    fn betti_raw(ideal: &MonomialIdeal, f: FieldPrime) -> BTreeMap<(u32, u32), u64> {
        let c = stanley_reisner(ideal).unwrap();
        let n = c.ground_size();
        let mut out = BTreeMap::new();
        for w in 1u64..1 << n {
            let verts: Vec<usize> = (0..n).filter(|&v| w >> v & 1 == 1).collect();
            let dims = c.restrict(&verts).reduced_homology_dims(f).unwrap();
            for (&d, &h) in &dims {
                if d < 0 {
                    continue;
                }
                let j = verts.len() as u32;
                let i = (j as i32 - d - 2) as u32;
                *out.entry((i, j)).or_insert(0) += h as u64;
            }
        }
        out
    }

    #[test]
    fn scan_matches_raw_hochster_on_small_graphs() {
        for g in [
            Graph::cycle(5).unwrap(),
            wc(3),
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ] {
            let i = edge_ideal(&g);
            let fast = betti_table(&i, FieldPrime::GF2).unwrap();
            let slow = betti_raw(&i, FieldPrime::GF2);
            assert_eq!(fast.entries(), &slow);
        }
    }

    #[test]
    fn polarization_invariance_on_squarefree_inputs() {
        for g in [wc(3), wc(4), Graph::cycle(5).unwrap()] {
            let i = edge_ideal(&g);
            assert_eq!(
                regularity(&i, FieldPrime::GF2).unwrap(),
                regularity_squarefree(&i, FieldPrime::GF2).unwrap()
            );
        }
    }

    #[test]
    fn derived_regularity_matches_direct() {
        let graphs = [wc(3), wc(4), Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap()];
        for g in &graphs {
            let i = edge_ideal(g);
            let t = betti_table(&i, FieldPrime::GF2).unwrap();
            assert_eq!(t.derived_regularity(), regularity_squarefree(&i, FieldPrime::GF2).unwrap());
        }
        // and through a power
        let sq = edge_ideal(&wc(3)).power(2);
        let t = betti_table(&sq, FieldPrime::GF2).unwrap();
        assert_eq!(t.derived_regularity(), regularity(&sq, FieldPrime::GF2).unwrap());
    }

    #[test]
    fn parallel_and_serial_runs_agree() {
        let i = edge_ideal(&wc(5));
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            pool.install(|| {
                (
                    betti_table(&i, FieldPrime::GF2).unwrap(),
                    regularity_squarefree_detailed(&i, FieldPrime::GF2, 24).unwrap(),
                )
            })
        };
        let (t1, r1) = run(1);
        let (t8, r8) = run(8);
        assert_eq!(t1, t8);
        assert_eq!(r1, r8);
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
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn chordal_complement_gives_linear_resolution(g in arb_graph(8)) {
            // graphs whose complement is chordal have reg = 2
            if g.edge_count() > 0 && g.complement().is_chordal() {
                prop_assert_eq!(reg_graph(&g, FieldPrime::GF2).unwrap(), 2);
            }
        }

        #[test]
        fn monotone_under_induced_subgraphs(g in arb_graph(7), mask in any::<u64>()) {
            if g.edge_count() == 0 {
                return Ok(());
            }
            let sub = g.induced_by_mask(mask & g.vertex_mask());
            if sub.graph.edge_count() > 0 {
                prop_assert!(
                    reg_graph(&sub.graph, FieldPrime::GF2).unwrap() <= reg_graph(&g, FieldPrime::GF2).unwrap()
                );
            }
        }
    }
}
