//! Simplicial complexes stored by their facets.
//!
//! Faces are never materialised as a whole unless a caller asks for them:
//! membership is a subset test against the facet list, which keeps the
//! restriction `Δ|_σ` cheap for every one of the `2^n` subsets the Betti sweep
//! visits.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Code, Error, Result, VertexSet, MAX_VERTICES};

/// A downward-closed family of subsets of `[n]`.
///
/// The void complex (no faces at all) and the irrelevant complex `{∅}` are
/// distinct values: both have no facets, only the latter contains the empty
/// face.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Pairwise incomparable, nonempty, sorted by bit pattern.
    facets: Vec<VertexSet>,
    nonvoid: bool,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            facets: Vec::new(),
            nonvoid: false,
        })
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            facets: Vec::new(),
            nonvoid: true,
        })
    }

    pub fn full_simplex(n: usize) -> Result<Self> {
        let full = VertexSet::full(n)?;
        Self::from_generators(n, [full])
    }

    /// Downward closure of `generators`. An empty generator list yields
    /// the irrelevant complex.
    pub fn from_generators<I>(n: usize, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_n(n)?;
        let mut sets = Vec::new();
        for g in generators {
            if g.ambient() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: g.ambient(),
                });
            }
            sets.push(g);
        }
        Ok(Self {
            n,
            facets: maximal_elements(sets),
            nonvoid: true,
        })
    }

    /// The smallest complex containing every codeword. The empty code gives
    /// the void complex.
    pub fn from_code(code: &Code) -> Self {
        if code.is_empty() {
            return Self {
                n: code.n(),
                facets: Vec::new(),
                nonvoid: false,
            };
        }
        Self {
            n: code.n(),
            facets: maximal_elements(code.words().collect()),
            nonvoid: true,
        }
    }

    /// Clique complex of a graph on `[n]`: faces are the cliques, every
    /// vertex included.
    pub fn clique_complex<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        check_n(n)?;
        let mut adjacency = vec![0u32; n];
        for e in edges {
            if e.ambient() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: e.ambient(),
                });
            }
            if e.cardinality() != 2 {
                return Err(Error::Malformed(alloc::format!(
                    "edge {e} has {} vertices, expected 2",
                    e.cardinality()
                )));
            }
            let mut it = e.vertices();
            let (a, b) = (it.next().unwrap() - 1, it.next().unwrap() - 1);
            adjacency[a] |= 1 << b;
            adjacency[b] |= 1 << a;
        }
        let mut cliques = Vec::new();
        let all = VertexSet::full(n)?.bits();
        bron_kerbosch(&adjacency, 0, all, 0, &mut cliques);
        let facets = cliques
            .into_iter()
            .map(|b| VertexSet::from_raw(n, b))
            .collect();
        Ok(Self {
            n,
            facets: maximal_elements(facets),
            nonvoid: true,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn contains_empty_face(&self) -> bool {
        self.nonvoid
    }

    pub fn is_void(&self) -> bool {
        !self.nonvoid
    }

    pub fn is_irrelevant(&self) -> bool {
        self.nonvoid && self.facets.is_empty()
    }

    /// Largest face dimension; `-1` for `{∅}`, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        if !self.nonvoid {
            return None;
        }
        Some(
            self.facets
                .iter()
                .map(|f| f.cardinality() as isize)
                .max()
                .unwrap_or(0)
                - 1,
        )
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        if face.is_empty() {
            return self.nonvoid;
        }
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// Vertices that are faces of the complex.
    pub fn vertex_set(&self) -> VertexSet {
        let bits = self.facets.iter().fold(0, |acc, f| acc | f.bits());
        VertexSet::from_raw(self.n, bits)
    }

    /// The induced subcomplex `{τ ∈ Δ | τ ⊆ σ}` on the same ambient set.
    ///
    /// # Panics
    ///
    /// Panics if `sigma` does not live on the complex's ambient set.
    pub fn restrict(&self, sigma: VertexSet) -> Self {
        assert_eq!(
            sigma.ambient(),
            self.n,
            "restriction set on the wrong ambient set"
        );
        if !self.nonvoid {
            return self.clone();
        }
        let cut = self.facets.iter().map(|f| f.intersection(sigma)).collect();
        Self {
            n: self.n,
            facets: maximal_elements(cut),
            nonvoid: true,
        }
    }

    /// All faces grouped by cardinality: entry `k` holds the faces with `k`
    /// vertices (dimension `k - 1`), each list sorted by bit pattern.
    pub fn faces_by_cardinality(&self) -> Vec<Vec<VertexSet>> {
        if !self.nonvoid {
            return Vec::new();
        }
        let top = self
            .facets
            .iter()
            .map(|f| f.cardinality())
            .max()
            .unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        levels[0].push(VertexSet::from_raw(self.n, 0));
        for f in &self.facets {
            for t in f.subsets() {
                levels[t.cardinality()].push(t);
            }
        }
        for level in &mut levels {
            level.sort_unstable();
            level.dedup();
        }
        levels
    }

    /// Number of faces per dimension, starting at dimension `-1`.
    pub fn face_count_by_dimension(&self) -> Vec<usize> {
        self.faces_by_cardinality().iter().map(Vec::len).collect()
    }

    /// Minimal nonfaces, i.e. the exponent sets of the minimal generators of
    /// the Stanley–Reisner ideal, sorted by bit pattern.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        if !self.nonvoid {
            return Err(Error::VoidComplex);
        }
        let vertices = self.vertex_set();
        let mut out: Vec<VertexSet> = (1..=self.n)
            .filter(|&v| !vertices.contains(v))
            .map(|v| VertexSet::from_raw(self.n, 1 << (v - 1)))
            .collect();

        // σ is generated exactly once, from the face σ minus its largest vertex.
        let levels = self.faces_by_cardinality();
        for (k, level) in levels.iter().enumerate().skip(1) {
            for &tau in level {
                let above = !(((1u64 << (32 - tau.bits().leading_zeros())) - 1) as u32);
                let mut candidates = vertices.bits() & above;
                while candidates != 0 {
                    let v = candidates & candidates.wrapping_neg();
                    candidates &= candidates - 1;
                    let sigma = VertexSet::from_raw(self.n, tau.bits() | v);
                    let upper = levels.get(k + 1);
                    if upper.is_some_and(|l| l.binary_search(&sigma).is_ok()) {
                        continue;
                    }
                    let boundary_ok = sigma
                        .facets_of_boundary()
                        .all(|face| levels[k].binary_search(&face).is_ok());
                    if boundary_ok {
                        out.push(sigma);
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// True iff every minimal nonface has at most two vertices.
    pub fn is_clique_complex(&self) -> Result<bool> {
        Ok(self
            .minimal_nonfaces()?
            .iter()
            .all(|s| s.cardinality() <= 2))
    }

    /// Reduced Euler characteristic `Σ_{τ ∈ Δ} (-1)^{dim τ}`, counting the
    /// empty face in dimension `-1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_count_by_dimension()
            .iter()
            .enumerate()
            .map(|(card, &count)| {
                if card % 2 == 1 {
                    count as i64
                } else {
                    -(count as i64)
                }
            })
            .sum()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Maximal nonempty elements of `sets` under inclusion, sorted by bit pattern.
fn maximal_elements(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.retain(|s| !s.is_empty());
    sets.sort_unstable_by(|a, b| b.cardinality().cmp(&a.cardinality()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn bron_kerbosch(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u32 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}
