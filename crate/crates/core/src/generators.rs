//! Named complexes and codes used as fixtures: cross-polytopes, their cones,
//! complete bipartite graphs, hollow simplices, and seeded random complexes.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Code, Error, Result, SimplicialComplex, VertexSet, MAX_VERTICES};

/// The cross-polytope `Γ_i` on `2(i+1)` vertices: the clique complex of the
/// complete graph minus the edges `{2k+1, 2k+2}`. Its Stanley–Reisner ideal is
/// `⟨x₁x₂, x₃x₄, …⟩`.
pub fn cross_polytope(i: usize) -> Result<SimplicialComplex> {
    let pairs = i + 1;
    let n = 2 * pairs;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    // a facet picks one vertex out of every antipodal pair
    let facets = (0u32..1 << pairs).map(|choice| {
        let bits = (0..pairs).fold(0u32, |acc, k| {
            acc | 1 << (2 * k + ((choice >> k) & 1) as usize)
        });
        VertexSet::from_raw(n, bits)
    });
    SimplicialComplex::from_generators(n, facets)
}

/// Joins a new vertex `n + 1` to every face.
pub fn cone(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = complex.n() + 1;
    if complex.is_void() {
        return SimplicialComplex::void(n);
    }
    let apex = VertexSet::from_vertices(n, &[n])?;
    if complex.is_irrelevant() {
        return SimplicialComplex::from_generators(n, [apex]);
    }
    let lifted = complex
        .facets()
        .iter()
        .map(|f| f.lift(n).map(|f| f.union(apex)))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_generators(n, lifted)
}

/// Clique complex of `K_{r,r}` with sides `{1..r}` and `{r+1..2r}`.
pub fn complete_bipartite_clique(r: usize) -> Result<SimplicialComplex> {
    if r == 0 {
        return Err(Error::Malformed(
            "complete bipartite graph needs r >= 1".into(),
        ));
    }
    let n = 2 * r;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut edges = Vec::with_capacity(r * r);
    for a in 1..=r {
        for b in r + 1..=n {
            edges.push(VertexSet::from_vertices(n, &[a, b])?);
        }
    }
    SimplicialComplex::clique_complex(n, edges)
}

/// Every proper subset of `[m]` is a face; `[m]` itself is not.
pub fn hollow_simplex(m: usize) -> Result<SimplicialComplex> {
    if m < 2 {
        return Err(Error::Malformed("hollow simplex needs m >= 2".into()));
    }
    let full = VertexSet::full(m)?;
    SimplicialComplex::from_generators(m, full.facets_of_boundary())
}

/// The 14-word code on four neurons whose complex is three triangles
/// around the missing triangle `124`.
pub fn l26_code() -> Code {
    Code::parse_words(
        4,
        [
            "0000", "1000", "0100", "0010", "0001", "1100", "1010", "1001", "0110", "0101", "0011",
            "1110", "1011", "0111",
        ],
    )
    .expect("fixed code is well formed")
}

/// Downward closure of `n` random facets (each vertex kept with probability
/// `density`) together with every singleton. Reproducible for a fixed seed.
pub fn random_complex(n: usize, density: f64, seed: u64) -> Result<SimplicialComplex> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Malformed(alloc::format!(
            "density {density} outside [0, 1]"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut generators: Vec<VertexSet> = (1..=n)
        .map(|v| VertexSet::from_vertices(n, &[v]))
        .collect::<Result<_>>()?;
    for _ in 0..n {
        let bits = (0..n).fold(0u32, |acc, v| {
            if rng.gen_bool(density) {
                acc | 1 << v
            } else {
                acc
            }
        });
        generators.push(VertexSet::from_raw(n, bits));
    }
    SimplicialComplex::from_generators(n, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vs(n: usize, s: &str) -> VertexSet {
        VertexSet::parse(s, n).unwrap()
    }

    #[test]
    fn cross_polytopes() {
        let g0 = cross_polytope(0).unwrap();
        assert_eq!(g0.facets(), &[vs(2, "10"), vs(2, "01")]);
        let g1 = cross_polytope(1).unwrap();
        let mut f = g1.facets().to_vec();
        f.sort();
        let mut want = vec![vs(4, "1010"), vs(4, "1001"), vs(4, "0110"), vs(4, "0101")];
        want.sort();
        assert_eq!(f, want);
        let g2 = cross_polytope(2).unwrap();
        assert_eq!(g2.face_count_by_dimension(), vec![1, 6, 12, 8]);
        let mut mnf = g2.minimal_nonfaces().unwrap();
        mnf.sort();
        let mut want = vec![vs(6, "110000"), vs(6, "001100"), vs(6, "000011")];
        want.sort();
        assert_eq!(mnf, want);
        assert!(cross_polytope(16).is_err());
    }

    #[test]
    fn cones() {
        let c1 = cone(&cross_polytope(1).unwrap()).unwrap();
        assert_eq!(c1.n(), 5);
        let mut mnf = c1.minimal_nonfaces().unwrap();
        mnf.sort();
        let mut want = vec![vs(5, "11000"), vs(5, "00110")];
        want.sort();
        assert_eq!(mnf, want);

        let point = cone(&SimplicialComplex::irrelevant(0).unwrap()).unwrap();
        assert_eq!(point.facets(), &[vs(1, "1")]);

        let path = cone(&cross_polytope(0).unwrap()).unwrap();
        let mut f = path.facets().to_vec();
        f.sort();
        assert_eq!(f, vec![vs(3, "101"), vs(3, "011")]);

        assert!(cone(&SimplicialComplex::void(2).unwrap())
            .unwrap()
            .is_void());
    }

    #[test]
    fn bipartite() {
        let k44 = complete_bipartite_clique(4).unwrap();
        assert_eq!(k44.minimal_nonfaces().unwrap().len(), 12);
        assert_eq!(k44.dimension(), Some(1));
        assert_eq!(
            complete_bipartite_clique(1).unwrap(),
            SimplicialComplex::full_simplex(2).unwrap()
        );
        assert!(complete_bipartite_clique(0).is_err());
    }

    #[test]
    fn hollow() {
        let h3 = hollow_simplex(3).unwrap();
        assert_eq!(h3.minimal_nonfaces().unwrap(), vec![vs(3, "111")]);
        let h2 = hollow_simplex(2).unwrap();
        assert_eq!(h2, cross_polytope(0).unwrap());
        assert!(hollow_simplex(1).is_err());
    }

    #[test]
    fn l26_fixture() {
        let c = l26_code();
        assert_eq!(c.len(), 14);
        assert!(!c.contains(vs(4, "1111")));
        let d = SimplicialComplex::from_code(&c);
        let mut f = d.facets().to_vec();
        f.sort();
        let mut want = vec![vs(4, "1110"), vs(4, "1011"), vs(4, "0111")];
        want.sort();
        assert_eq!(f, want);
    }

    #[test]
    fn random_extremes_and_determinism() {
        assert_eq!(
            random_complex(6, 1.0, 7).unwrap(),
            SimplicialComplex::full_simplex(6).unwrap()
        );
        let sparse = random_complex(5, 0.0, 7).unwrap();
        assert_eq!(sparse.facets().len(), 5);
        assert!(sparse.facets().iter().all(|f| f.cardinality() == 1));
        assert_eq!(
            random_complex(7, 0.5, 42).unwrap(),
            random_complex(7, 0.5, 42).unwrap()
        );
        assert!(random_complex(4, 1.5, 0).is_err());
    }
}
