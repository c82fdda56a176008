//! Exact reduced simplicial homology over small prime fields.
//!
//! Complexes are stored by their minimal nonfaces only (Stanley-Reisner
//! data): a set is a face exactly when it contains no minimal nonface. Faces
//! are enumerated lazily per dimension, boundary ranks are computed by
//! bit-packed elimination over GF(2) and word-level modular elimination for
//! odd primes.
//!
//! Two homotopy-preserving reductions keep the subset-heavy callers fast:
//! cone-point detection (a vertex in no nonface makes everything vanish) and
//! strong collapse by dominated-vertex removal. Both are exact for homology
//! with any coefficients; the raw rank path stays available and the test
//! suite checks the two against each other on random complexes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monomial::MonomialIdeal;

/// Default ground-size cap for homology-backed computations. Subset
/// enumeration upstream is 2^ground, so larger inputs are rejected loudly
/// instead of running forever.
pub const DEFAULT_GROUND_CAP: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a prime in 2..=65536")]
    NotPrime(u32),
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal contains a unit; the void complex does not arise")]
    UnitIdeal,
    #[error("ground set of size {size} exceeds the cap {cap}")]
    GroundTooLarge { size: usize, cap: usize },
}

/// A prime field modulus, `2 <= p <= 2^16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldPrime(u32);

impl FieldPrime {
    pub const GF2: FieldPrime = FieldPrime(2);
    pub const GF3: FieldPrime = FieldPrime(3);

    pub fn new(p: u32) -> Result<Self, HomologyError> {
        if p < 2 || p > 1 << 16 || !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(FieldPrime(p))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A simplicial complex on ground vertices `0..ground`, stored by its
/// pairwise-incomparable minimal nonfaces (as vertex bitmasks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    nonfaces: Vec<u64>,
}

/// Outcome of a strong collapse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Collapse {
    /// The complex deformation-retracts to a point; all reduced homology is 0.
    Contractible,
    /// A smaller complex with the same homotopy type.
    Core(SimplicialComplex),
}

impl SimplicialComplex {
    /// Build from arbitrary nonface masks; reduces to the minimal ones.
    pub fn from_nonfaces(ground: usize, nonfaces: Vec<u64>) -> Self {
        assert!(ground <= 64, "ground sets are limited to 64 vertices");
        let full = mask_of(ground);
        let masks = nonfaces.into_iter().map(|m| m & full).collect();
        SimplicialComplex {
            ground,
            nonfaces: minimal_masks(masks),
        }
    }

    /// The full simplex (no nonfaces).
    pub fn simplex(ground: usize) -> Self {
        SimplicialComplex::from_nonfaces(ground, Vec::new())
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    pub fn is_face(&self, mask: u64) -> bool {
        mask & !mask_of(self.ground) == 0 && !self.nonfaces.iter().any(|&nf| nf & mask == nf)
    }

    /// Induced subcomplex on `w`: ground set becomes `w` (relabeled to
    /// `0..|w|`), nonfaces are those contained in `w`.
    pub fn restrict(&self, w: &[usize]) -> Self {
        let mut kept: Vec<usize> = w.to_vec();
        kept.sort_unstable();
        kept.dedup();
        kept.retain(|&v| v < self.ground);
        let mask: u64 = kept.iter().fold(0, |m, &v| m | 1 << v);
        let mut new_index = vec![0usize; self.ground];
        for (new, &old) in kept.iter().enumerate() {
            new_index[old] = new;
        }
        let nonfaces = self
            .nonfaces
            .iter()
            .filter(|&&nf| nf & mask == nf)
            .map(|&nf| {
                let mut out = 0u64;
                let mut m = nf;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    out |= 1 << new_index[v];
                }
                out
            })
            .collect();
        SimplicialComplex {
            ground: kept.len(),
            nonfaces,
        }
    }

    /// A vertex lying in no minimal nonface is an apex: the complex is a cone
    /// over it and all reduced homology vanishes.
    pub fn has_cone_point(&self) -> bool {
        if self.ground == 0 {
            return false;
        }
        let covered = self.nonfaces.iter().fold(0u64, |m, &nf| m | nf);
        covered != mask_of(self.ground)
    }

    /// All faces grouped by size; `out[k]` lists the k-vertex faces as sorted
    /// bitmasks, with `out[0] = [0]` for the empty face.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        faces_by_size(mask_of(self.ground), &self.nonfaces)
    }

    /// Number of faces per size; index k counts k-vertex faces.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(|fs| fs.len()).collect()
    }

    /// Dimensions of the reduced homology over GF(p), computed from boundary
    /// ranks between enumerated faces. Only the nonzero entries appear; keys
    /// are homological dimensions, with `-1` present exactly for the empty
    /// complex (the complex whose only face is the empty set).
    pub fn reduced_homology_dims(&self, f: FieldPrime) -> Result<BTreeMap<i32, usize>, HomologyError> {
        self.reduced_homology_dims_capped(f, DEFAULT_GROUND_CAP)
    }

    pub fn reduced_homology_dims_capped(
        &self,
        f: FieldPrime,
        cap: usize,
    ) -> Result<BTreeMap<i32, usize>, HomologyError> {
        if self.ground > cap {
            return Err(HomologyError::GroundTooLarge {
                size: self.ground,
                cap,
            });
        }
        Ok(homology_from_faces(&self.faces_by_size(), f))
    }

    /// Strong collapse: repeatedly drop cone points and dominated vertices.
    /// Both preserve the homotopy type, so the core has the same reduced
    /// homology over every field.
    pub fn strong_collapse(&self) -> Collapse {
        match strong_collapse_masks(mask_of(self.ground), &self.nonfaces) {
            None => Collapse::Contractible,
            Some((w, nfs)) => {
                let kept: Vec<usize> = (0..self.ground).filter(|&v| w >> v & 1 == 1).collect();
                Collapse::Core(SimplicialComplex::from_nonfaces(self.ground, nfs).restrict(&kept))
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    ground: usize,
    nonfaces: Vec<Vec<usize>>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        ComplexJson {
            ground: self.ground,
            nonfaces: self.nonfaces.iter().map(|&nf| bits(nf)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = ComplexJson::deserialize(deserializer)?;
        if raw.ground > 64 {
            return Err(serde::de::Error::custom("ground sets are limited to 64 vertices"));
        }
        let nonfaces = raw
            .nonfaces
            .iter()
            .map(|nf| nf.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        Ok(SimplicialComplex::from_nonfaces(raw.ground, nonfaces))
    }
}

/// The Stanley-Reisner complex of a squarefree ideal: ground set is the
/// ambient variable list, minimal nonfaces are the generator supports. For an
/// edge ideal this is the independence complex of the graph.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex, HomologyError> {
    if !ideal.is_squarefree() {
        return Err(HomologyError::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(HomologyError::UnitIdeal);
    }
    let ground = ideal.ambient().len();
    assert!(ground <= 64, "ambient is limited to 64 variables");
    let nonfaces = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    // generators are minimal, so supports are already incomparable
    Ok(SimplicialComplex::from_nonfaces(ground, nonfaces))
}

/// Rank of the boundary map from the k-vertex faces to the (k-1)-vertex
/// faces over GF(p). Faces must be sorted ascending as bitmasks; orientation
/// signs follow the sorted-vertex convention.
pub fn boundary_rank(faces_k: &[u64], faces_km1: &[u64], f: FieldPrime) -> usize {
    if faces_k.is_empty() || faces_km1.is_empty() {
        return 0;
    }
    if f.value() == 2 {
        let words = faces_km1.len().div_ceil(64);
        let rows = faces_k.iter().map(|&face| {
            let mut row = vec![0u64; words];
            let mut m = face;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let sub = face & !(1 << v);
                let col = faces_km1.binary_search(&sub).expect("boundary face enumerated");
                row[col / 64] ^= 1 << (col % 64);
            }
            row
        });
        gf2_rank(rows, faces_km1.len())
    } else {
        let p = f.value() as u64;
        let rows = faces_k.iter().map(|&face| {
            let mut row = vec![0u32; faces_km1.len()];
            let mut m = face;
            let mut sign_index = 0u32;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let sub = face & !(1 << v);
                let col = faces_km1.binary_search(&sub).expect("boundary face enumerated");
                row[col] = if sign_index % 2 == 0 { 1 } else { (p - 1) as u32 };
                sign_index += 1;
            }
            row
        });
        gfp_rank(rows, faces_km1.len(), p)
    }
}

pub(crate) fn mask_of(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Keep only the inclusion-minimal masks.
pub(crate) fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(masks.len());
    for m in masks {
        if !out.iter().any(|&o| o & m == o) {
            out.push(m);
        }
    }
    out
}

/// Enumerate all faces of the complex `(ground_mask, nonfaces)` grouped by
/// size, each level sorted ascending.
pub(crate) fn faces_by_size(ground_mask: u64, nonfaces: &[u64]) -> Vec<Vec<u64>> {
    let verts = bits(ground_mask);
    let nf_with: Vec<Vec<u64>> = verts
        .iter()
        .map(|&v| nonfaces.iter().copied().filter(|nf| nf >> v & 1 == 1).collect())
        .collect();
    let mut levels: Vec<Vec<u64>> = vec![vec![0]];
    let mut stack: Vec<(usize, u64, usize)> = verts
        .iter()
        .enumerate()
        .rev()
        .filter(|&(i, &v)| !nf_with[i].iter().any(|&nf| nf == 1 << v))
        .map(|(i, &v)| (i, 1u64 << v, 1usize))
        .collect();
    while let Some((i, mask, size)) = stack.pop() {
        if levels.len() <= size {
            levels.push(Vec::new());
        }
        levels[size].push(mask);
        for j in (i + 1..verts.len()).rev() {
            let v = verts[j];
            let m2 = mask | 1 << v;
            if !nf_with[j].iter().any(|&nf| nf & m2 == nf) {
                stack.push((j, m2, size + 1));
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    levels
}

/// Reduced homology dimensions from a face table: `dim H_d = f_{d+1} -
/// rank(boundary_{d+1}) - rank(boundary_{d+2})` with sizes shifted by one from
/// homological dimensions.
pub(crate) fn homology_from_faces(levels: &[Vec<u64>], f: FieldPrime) -> BTreeMap<i32, usize> {
    let top = levels.len() - 1;
    // ranks[k] = rank of the map from k-vertex faces to (k-1)-vertex faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        ranks[k] = boundary_rank(&levels[k], &levels[k - 1], f);
    }
    let mut out = BTreeMap::new();
    for k in 0..=top {
        let h = levels[k].len() - ranks[k] - ranks[k + 1];
        if h > 0 {
            out.insert(k as i32 - 1, h);
        }
    }
    out
}

/// Strong collapse on raw masks. Returns `None` when the complex is
/// recognized contractible (a cone), otherwise the core's ground mask and
/// minimal nonfaces. Input nonfaces may live on a larger ground set; only
/// those inside `w` count.
pub(crate) fn strong_collapse_masks(w: u64, nonfaces: &[u64]) -> Option<(u64, Vec<u64>)> {
    let mut w = w;
    let mut nfs: Vec<u64> = nonfaces.iter().copied().filter(|&nf| nf & w == nf).collect();
    'outer: loop {
        if w == 0 {
            return Some((0, Vec::new()));
        }
        let covered = nfs.iter().fold(0u64, |m, &nf| m | nf);
        if covered != w {
            // some vertex lies in no nonface: cone
            return None;
        }
        let verts = bits(w);
        for &v in &verts {
            'candidates: for &u in &verts {
                if u == v {
                    continue;
                }
                // v is dominated by u iff every nonface M containing u avoids
                // v and (M \ u) + v is again a nonface of the complex
                for &m in nfs.iter() {
                    if m >> u & 1 == 0 {
                        continue;
                    }
                    if m >> v & 1 == 1 {
                        continue 'candidates;
                    }
                    let t = (m & !(1 << u)) | (1 << v);
                    if !nfs.iter().any(|&n| n & t == n) {
                        continue 'candidates;
                    }
                }
                w &= !(1 << v);
                nfs.retain(|&m| m >> v & 1 == 0);
                continue 'outer;
            }
        }
        return Some((w, nfs));
    }
}

fn gf2_rank<I: Iterator<Item = Vec<u64>>>(rows: I, ncols: usize) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut at_lead: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    'rows: for mut row in rows {
        loop {
            let Some(lead) = first_bit(&row) else {
                continue 'rows;
            };
            match at_lead[lead] {
                Some(i) => {
                    let b = &basis[i];
                    for (r, x) in row.iter_mut().zip(b) {
                        *r ^= x;
                    }
                }
                None => {
                    at_lead[lead] = Some(basis.len());
                    basis.push(row);
                    rank += 1;
                    continue 'rows;
                }
            }
        }
    }
    rank
}

fn first_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .position(|&w| w != 0)
        .map(|i| i * 64 + row[i].trailing_zeros() as usize)
}

fn gfp_rank<I: Iterator<Item = Vec<u32>>>(rows: I, ncols: usize, p: u64) -> usize {
    // basis rows are normalized to leading coefficient 1
    let mut basis: Vec<Vec<u32>> = Vec::new();
    let mut at_lead: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    'rows: for mut row in rows {
        loop {
            let Some(lead) = row.iter().position(|&x| x != 0) else {
                continue 'rows;
            };
            match at_lead[lead] {
                Some(i) => {
                    let c = row[lead] as u64;
                    let b = &basis[i];
                    for (r, &x) in row.iter_mut().zip(b).skip(lead) {
                        let sub = (c * x as u64) % p;
                        *r = ((*r as u64 + p - sub) % p) as u32;
                    }
                }
                None => {
                    let inv = mod_inverse(row[lead] as u64, p);
                    for r in row.iter_mut().skip(lead) {
                        *r = ((*r as u64 * inv) % p) as u32;
                    }
                    at_lead[lead] = Some(basis.len());
                    basis.push(row);
                    rank += 1;
                    continue 'rows;
                }
            }
        }
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
