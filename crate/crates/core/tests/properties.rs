use std::collections::BTreeSet;

use codedim_core::dimensions::{
    helly_dimension, helly_dimension_direct, hom_dimension_betti, hom_dimension_unreduced,
    leray_dimension, leray_dimension_direct,
};
use codedim_core::generators::{
    complete_bipartite_clique, cone, cross_polytope, hollow_simplex, l26_code, random_complex,
};
use codedim_core::homology::{reduced_homology, unreduced_homology};
use codedim_core::{
    full_report, hochster_table, FieldMatrix, PrimeField, SimplicialComplex, VertexSet,
};
use proptest::prelude::*;

fn primes() -> [PrimeField; 3] {
    [2, 3, 5].map(|p| PrimeField::new(p).unwrap())
}

/// Minimal nonfaces by testing every subset of `[n]`.
fn brute_minimal_nonfaces(d: &SimplicialComplex) -> BTreeSet<VertexSet> {
    VertexSet::full(d.n())
        .unwrap()
        .subsets()
        .filter(|&s| !d.contains(s) && s.facets_of_boundary().all(|t| d.contains(t)))
        .collect()
}

/// Rank over GF(p) as log_p of the size of the row space, found by listing
/// every linear combination of the rows.
fn brute_rank(rows: &[Vec<i64>], p: u32) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut span = BTreeSet::new();
    let combos = (p as usize).pow(rows.len() as u32);
    for mut code in 0..combos {
        let mut v = vec![0i64; cols];
        for row in rows {
            let c = (code % p as usize) as i64;
            code /= p as usize;
            for (x, r) in v.iter_mut().zip(row) {
                *x = (*x + c * r).rem_euclid(p as i64);
            }
        }
        span.insert(v);
    }
    let mut rank = 0;
    let mut size = 1;
    while size < span.len() {
        size *= p as usize;
        rank += 1;
    }
    rank
}

fn matrix(p: PrimeField, rows: &[Vec<i64>]) -> FieldMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    FieldMatrix::from_rows(p, &refs).unwrap()
}

fn random_family(count: u64, max_n: usize) -> impl Iterator<Item = SimplicialComplex> {
    (0..count).map(move |seed| {
        let n = 1 + (seed as usize % max_n);
        let density = [0.25, 0.4, 0.55, 0.7][(seed / 7 % 4) as usize];
        random_complex(n, density, seed).unwrap()
    })
}

#[test]
fn restriction_composes_with_intersection() {
    for seed in 0..12 {
        let d = random_complex(6, 0.5, seed).unwrap();
        let all: Vec<_> = VertexSet::full(6).unwrap().subsets().collect();
        for &s in all.iter().step_by(5) {
            let ds = d.restrict(s);
            assert_eq!(ds.restrict(s), ds);
            for &t in &all {
                assert_eq!(ds.restrict(t), d.restrict(s.intersection(t)));
            }
        }
    }
}

#[test]
fn restriction_faces_are_the_contained_faces() {
    let d = random_complex(6, 0.6, 3).unwrap();
    for s in VertexSet::full(6).unwrap().subsets() {
        let r = d.restrict(s);
        for t in VertexSet::full(6).unwrap().subsets() {
            assert_eq!(r.contains(t), d.contains(t) && t.is_subset_of(s));
        }
    }
}

#[test]
fn code_words_are_faces_and_closure_is_downward() {
    let code = l26_code();
    let d = SimplicialComplex::from_code(&code);
    for w in code.words() {
        assert!(d.contains(w));
    }
    for seed in 0..20 {
        let d = random_complex(6, 0.5, seed).unwrap();
        for t in VertexSet::full(6)
            .unwrap()
            .subsets()
            .filter(|&t| d.contains(t))
        {
            assert!(t.subsets().all(|u| d.contains(u)));
        }
    }
}

#[test]
fn minimal_nonfaces_match_brute_force() {
    for d in random_family(150, 7) {
        let fast: BTreeSet<_> = d.minimal_nonfaces().unwrap().into_iter().collect();
        assert_eq!(fast, brute_minimal_nonfaces(&d));
        for a in &fast {
            for b in &fast {
                assert!(a == b || !a.is_subset_of(*b));
            }
        }
        assert_eq!(
            d.is_clique_complex().unwrap(),
            fast.iter().all(|s| s.cardinality() <= 2)
        );
    }
}

#[test]
fn rank_matches_row_space_enumeration() {
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for p in [2u32, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        for _ in 0..60 {
            let rows = 1 + (next() % 5) as usize;
            let cols = 1 + (next() % 6) as usize;
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| (next() % p as u64) as i64).collect())
                .collect();
            assert_eq!(
                matrix(field, &m).rank(field),
                brute_rank(&m, p),
                "{m:?} over GF({p})"
            );
        }
    }
}

proptest! {
    #[test]
    fn rank_bounded_and_permutation_invariant(
        entries in proptest::collection::vec(0i64..5, 48),
        rows in 1usize..7,
        shift in 0usize..8,
        p_idx in 0usize..3,
    ) {
        let field = primes()[p_idx];
        let cols = 48 / rows;
        let m: Vec<Vec<i64>> = (0..rows).map(|r| entries[r * cols..(r + 1) * cols].to_vec()).collect();
        let base = matrix(field, &m).rank(field);
        prop_assert!(base <= rows.min(cols));

        let mut permuted_rows = m.clone();
        permuted_rows.rotate_left(shift % rows);
        prop_assert_eq!(matrix(field, &permuted_rows).rank(field), base);

        let permuted_cols: Vec<Vec<i64>> = m
            .iter()
            .map(|r| { let mut r = r.clone(); r.rotate_right(shift % cols); r.reverse(); r })
            .collect();
        prop_assert_eq!(matrix(field, &permuted_cols).rank(field), base);
    }

    #[test]
    fn restrict_is_idempotent(seed in 0u64..5000, s in 0u32..64) {
        let d = random_complex(6, 0.5, seed).unwrap();
        let s = VertexSet::new(6, s).unwrap();
        prop_assert_eq!(d.restrict(s).restrict(s), d.restrict(s));
    }
}

#[test]
fn reduced_euler_characteristic_identity() {
    for d in random_family(60, 7) {
        for s in VertexSet::full(d.n()).unwrap().subsets() {
            let r = d.restrict(s);
            for f in primes() {
                let h = reduced_homology(&r, f);
                assert_eq!(h.euler_characteristic(), r.reduced_euler_characteristic());
                assert_eq!(h.get(-2), 0);
                assert_eq!(h.get(r.dimension().unwrap() + 1), 0);
            }
        }
    }
}

#[test]
fn boundary_ranks_fit_in_the_chain_groups() {
    // rank ∂_k + rank ∂_{k+1} ≤ dim C_k, equivalently every reduced Betti number is ≥ 0,
    // which the subtraction in reduced_homology would otherwise underflow on.
    for d in random_family(40, 7) {
        for f in primes() {
            let _ = reduced_homology(&d, f);
        }
    }
}

#[test]
fn cones_are_acyclic() {
    for i in 0..3 {
        let c = cone(&cross_polytope(i).unwrap()).unwrap();
        for f in primes() {
            assert!(reduced_homology(&c, f).is_zero());
        }
    }
    for d in random_family(30, 6) {
        assert!(reduced_homology(&cone(&d).unwrap(), PrimeField::GF2).is_zero());
    }
}

#[test]
fn fixture_complexes_agree_across_primes() {
    let examples = vec![
        cross_polytope(1).unwrap(),
        cross_polytope(2).unwrap(),
        cone(&cross_polytope(1).unwrap()).unwrap(),
        SimplicialComplex::from_code(&l26_code()),
        complete_bipartite_clique(4).unwrap(),
    ];
    for d in &examples {
        let base = hochster_table(d, PrimeField::GF2).unwrap();
        for f in &primes()[1..] {
            let other = hochster_table(d, *f).unwrap();
            assert!(base.entries().eq(other.entries()));
            assert_eq!(
                reduced_homology(d, PrimeField::GF2)
                    .nonzero()
                    .collect::<Vec<_>>(),
                reduced_homology(d, *f).nonzero().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn derived_homology_examples() {
    assert_eq!(
        cross_polytope(1).unwrap().face_count_by_dimension(),
        vec![1, 4, 4]
    );
    let u = unreduced_homology(&cross_polytope(2).unwrap(), PrimeField::GF2);
    assert_eq!(u.nonzero().collect::<Vec<_>>(), vec![(0, 1), (2, 1)]);
    let r = reduced_homology(&cross_polytope(2).unwrap(), PrimeField::GF2);
    assert_eq!(r.nonzero().collect::<Vec<_>>(), vec![(2, 1)]);
    assert_eq!(r.top_nonzero_degree(-2), 2);
}

#[test]
fn first_syzygies_are_the_minimal_nonfaces() {
    for d in random_family(120, 7) {
        let t = hochster_table(&d, PrimeField::GF2).unwrap();
        let firsts: BTreeSet<_> = t
            .entries()
            .filter(|(k, _)| k.step == 1)
            .map(|(k, b)| {
                assert_eq!(b, 1);
                k.sigma
            })
            .collect();
        assert_eq!(firsts, brute_minimal_nonfaces(&d));
        for (key, _) in t.entries() {
            let dim = d.restrict(key.sigma).dimension().unwrap();
            assert!(key.step as isize >= key.sigma.cardinality() as isize - 1 - dim);
            if !key.sigma.is_empty() {
                assert!(key.step >= 1 && key.step <= key.sigma.cardinality());
            }
        }
        assert_eq!(t.get(0, VertexSet::empty(d.n()).unwrap()), 1);
    }
}

#[test]
fn hochster_locality() {
    for seed in 0..25 {
        let d = random_complex(6, 0.5, seed).unwrap();
        let whole = hochster_table(&d, PrimeField::GF2).unwrap();
        let s0 = VertexSet::new(6, (seed as u32 * 37) % 64).unwrap();
        let local = hochster_table(&d.restrict(s0), PrimeField::GF2).unwrap();
        let a: Vec<_> = whole
            .entries()
            .filter(|(k, _)| k.sigma.is_subset_of(s0))
            .collect();
        let b: Vec<_> = local
            .entries()
            .filter(|(k, _)| k.sigma.is_subset_of(s0))
            .collect();
        assert_eq!(a, b);
    }
}

#[test]
fn level_ranks_follow_euler_characteristics() {
    // Σ_i (-1)^i β_{i,σ} = (-1)^{|σ|-1} χ̃(Δ|_σ) per grading, summed here over σ.
    for d in random_family(40, 7) {
        let t = hochster_table(&d, PrimeField::GF2).unwrap();
        let from_table: i64 = t
            .entries()
            .map(|(k, b)| {
                if k.step % 2 == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum();
        let from_faces: i64 = VertexSet::full(d.n())
            .unwrap()
            .subsets()
            .map(|s| {
                let chi = d.restrict(s).reduced_euler_characteristic();
                if s.cardinality() % 2 == 1 {
                    chi
                } else {
                    -chi
                }
            })
            .sum();
        assert_eq!(from_table, from_faces);
        let ranks = t.level_ranks();
        let alternating: i64 = ranks
            .iter()
            .enumerate()
            .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum();
        assert_eq!(alternating, from_table);
    }
}

#[test]
fn dimension_inequalities_and_oracles_on_random_complexes() {
    for d in random_family(200, 8) {
        for f in primes() {
            let t = hochster_table(&d, f).unwrap();
            let (dl, _) = leray_dimension(&t);
            let (dh, _) = helly_dimension(&t);
            let (dhom, _) = hom_dimension_betti(&t);
            assert!(dl >= dh && dl >= dhom);
            assert_eq!(dh, helly_dimension_direct(&d).unwrap());
            assert_eq!(dl, leray_dimension_direct(&d, f).unwrap());
            assert_eq!(d.is_clique_complex().unwrap(), dh <= 1);
        }
    }
}

#[test]
fn leray_is_monotone_under_restriction() {
    for d in random_family(40, 7) {
        let whole = leray_dimension_direct(&d, PrimeField::GF2).unwrap();
        for s in VertexSet::full(d.n()).unwrap().subsets() {
            assert!(leray_dimension_direct(&d.restrict(s), PrimeField::GF2).unwrap() <= whole);
        }
    }
}

#[test]
fn cone_preserves_nonfaces_and_cliqueness() {
    for d in random_family(60, 7) {
        let c = cone(&d).unwrap();
        let lifted: Vec<_> = d
            .minimal_nonfaces()
            .unwrap()
            .into_iter()
            .map(|s| s.lift(d.n() + 1).unwrap())
            .collect();
        assert_eq!(c.minimal_nonfaces().unwrap(), lifted);
        assert_eq!(
            c.is_clique_complex().unwrap(),
            d.is_clique_complex().unwrap()
        );
    }
    for i in 0..5 {
        assert!(cross_polytope(i).unwrap().is_clique_complex().unwrap());
    }
}

#[test]
fn hollow_simplex_family() {
    for m in 2..=7 {
        let h = hollow_simplex(m).unwrap();
        let mnf = h.minimal_nonfaces().unwrap();
        assert_eq!(mnf, vec![VertexSet::full(m).unwrap()]);
        let r = reduced_homology(&h, PrimeField::GF2);
        assert_eq!(r.nonzero().collect::<Vec<_>>(), vec![(m as isize - 2, 1)]);
    }
    let rep = full_report(&hollow_simplex(5).unwrap(), PrimeField::GF2).unwrap();
    assert_eq!((rep.leray, rep.helly), (4, 4));
}

#[test]
fn bipartite_k22_has_square_ranks() {
    let k22 = hochster_table(&complete_bipartite_clique(2).unwrap(), PrimeField::GF2).unwrap();
    let sq = hochster_table(&cross_polytope(1).unwrap(), PrimeField::GF2).unwrap();
    assert_eq!(k22.level_ranks(), vec![1, 2, 1]);
    assert_eq!(k22.level_ranks(), sq.level_ranks());
}

#[test]
fn unreduced_convention_families() {
    for i in 0..=4 {
        let g = cross_polytope(i).unwrap();
        assert_eq!(hom_dimension_unreduced(&g, PrimeField::GF2).0, i + 1);
        let c = cone(&g).unwrap();
        assert_eq!(hom_dimension_unreduced(&c, PrimeField::GF2), (1, Some(0)));
    }
}
