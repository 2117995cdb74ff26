//! Simplicial homology over a prime field.
//!
//! The augmented chain complex is the primitive: `C_{-1}` is spanned by the
//! empty face and `∂_0` sends every vertex to it. Unreduced homology is
//! derived from the reduced profile.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::BitMatrix;
use crate::{FieldMatrix, PrimeField, SimplicialComplex, VertexSet};

/// Homology dimensions indexed by degree `k ≥ -1`. Degrees not stored are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    /// `dims[k + 1] = dim H_k`.
    dims: Vec<usize>,
    field: PrimeField,
}

impl HomologyProfile {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            dims: Vec::new(),
            field,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn get(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(degree, dimension)` pairs with nonzero dimension, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as isize - 1, d))
    }

    /// Largest degree with nonzero homology, or `floor` when there is none.
    pub fn top_nonzero_degree(&self, floor: isize) -> isize {
        self.nonzero().last().map_or(floor, |(k, _)| k)
    }

    /// `Σ_k (-1)^k dim H_k`, including degree `-1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(k, d)| {
                if k.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

/// Reduced homology `H̃_k(Δ; GF(p))` for every degree.
///
/// Over a field these are also the reduced cohomology dimensions.
pub fn reduced_homology(complex: &SimplicialComplex, field: PrimeField) -> HomologyProfile {
    if complex.is_void() {
        return HomologyProfile::zero(field);
    }
    let levels = complex.faces_by_cardinality();
    // ranks[k] = rank of ∂_k : C_k -> C_{k-1}, k = 0..=dim
    let mut ranks = vec![0usize; levels.len()];
    if levels.len() > 1 && !levels[1].is_empty() {
        ranks[0] = 1;
    }
    for card in 2..levels.len() {
        ranks[card - 1] = boundary_rank(&levels[card], &levels[card - 1], field);
    }
    let mut dims = Vec::with_capacity(levels.len());
    for (card, level) in levels.iter().enumerate() {
        // card = k + 1; ∂_k has index card - 1 in `ranks`, ∂_{-1} = 0
        let out = if card == 0 { 0 } else { ranks[card - 1] };
        let inn = ranks.get(card).copied().unwrap_or(0);
        dims.push(level.len() - out - inn);
    }
    HomologyProfile { dims, field }
}

/// Ordinary homology: degree `-1` dropped and `H_0` raised by one for
/// complexes with at least one vertex.
pub fn unreduced_homology(complex: &SimplicialComplex, field: PrimeField) -> HomologyProfile {
    let mut profile = reduced_homology(complex, field);
    if profile.dims.is_empty() {
        return profile;
    }
    profile.dims[0] = 0;
    if profile.dims.len() > 1 {
        profile.dims[1] += 1;
    }
    profile
}

/// Rank of the boundary map from `upper` faces (one more vertex) to `lower`
/// faces. Both lists are sorted by bit pattern; the face deleting the `j`-th
/// vertex carries sign `(-1)^j`.
fn boundary_rank(upper: &[VertexSet], lower: &[VertexSet], field: PrimeField) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index = |face: VertexSet| {
        lower
            .binary_search(&face)
            .expect("boundary face missing from a downward-closed complex")
    };
    if field.characteristic() == 2 {
        let mut m = BitMatrix::zeros(upper.len(), lower.len());
        for (r, &sigma) in upper.iter().enumerate() {
            for face in sigma.facets_of_boundary() {
                m.set(r, index(face));
            }
        }
        return m.rank();
    }
    let mut m = FieldMatrix::zeros(upper.len(), lower.len());
    let minus_one = field.reduce(-1);
    for (r, &sigma) in upper.iter().enumerate() {
        for (j, face) in sigma.facets_of_boundary().enumerate() {
            m.set(r, index(face), if j % 2 == 0 { 1 } else { minus_one });
        }
    }
    m.rank(field)
}
