//! Leray, Helly and homological dimensions of a code.
//!
//! The Betti-table formulas are normative:
//!
//! * `d_L   = max_{i ≥ 1, σ} R_{i,σ}`
//! * `d_H   = max_σ R_{1,σ}`
//! * `d_hom = max_i R_{i,[n]}`
//!
//! with every empty maximum read as `0`. Each has a direct topological
//! counterpart ([`leray_dimension_direct`], [`helly_dimension_direct`]) that
//! [`full_report`] checks against before returning. The ordinary-homology
//! variant of `d_hom` ([`hom_dimension_unreduced`]) is reported alongside:
//! the two conventions disagree on contractible complexes.

use alloc::format;

use crate::betti::{check_sweep, hochster_table_guarded, BettiKey};
use crate::homology::{reduced_homology, unreduced_homology};
use crate::{BettiTable, Error, PrimeField, Result, SimplicialComplex, VertexSet, DEFAULT_MAX_N};

/// The Betti index `(i, σ)` realising a maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub step: usize,
    pub sigma: VertexSet,
}

/// All dimension bounds of one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub n: usize,
    pub field: PrimeField,
    pub leray: usize,
    pub helly: usize,
    pub hom_betti: usize,
    pub hom_unreduced: usize,
    pub leray_witness: Option<Witness>,
    pub helly_witness: Option<Witness>,
    pub hom_betti_witness: Option<Witness>,
    /// Top degree of nonvanishing ordinary homology.
    pub hom_unreduced_degree: Option<isize>,
    pub helly_oracle_agrees: bool,
    pub leray_oracle_agrees: bool,
}

/// Maximum of `R` over `keys`; ties go to the smallest step, then the
/// smallest bit pattern.
fn max_r<I>(keys: I) -> (usize, Option<Witness>)
where
    I: Iterator<Item = BettiKey>,
{
    let mut best: Option<(usize, Witness)> = None;
    for key in keys {
        let r = key.sigma.cardinality().saturating_sub(key.step);
        let w = Witness {
            step: key.step,
            sigma: key.sigma,
        };
        let better = match best {
            None => true,
            Some((br, bw)) => {
                r > br || (r == br && (w.step, w.sigma.bits()) < (bw.step, bw.sigma.bits()))
            }
        };
        if better {
            best = Some((r, w));
        }
    }
    best.map_or((0, None), |(r, w)| (r, Some(w)))
}

fn keys(table: &BettiTable) -> impl Iterator<Item = BettiKey> + '_ {
    table.entries().map(|(k, _)| k)
}

pub fn leray_dimension(table: &BettiTable) -> (usize, Option<Witness>) {
    max_r(keys(table).filter(|k| k.step >= 1))
}

pub fn helly_dimension(table: &BettiTable) -> (usize, Option<Witness>) {
    max_r(keys(table).filter(|k| k.step == 1))
}

pub fn hom_dimension_betti(table: &BettiTable) -> (usize, Option<Witness>) {
    max_r(keys(table).filter(|k| k.step >= 1 && k.sigma.is_full()))
}

/// One plus the top degree `k ≥ 0` in which `Δ|_σ` has nonvanishing
/// reduced homology, maximised over `σ ⊆ [n]`; `0` if there is none.
pub fn leray_dimension_direct(complex: &SimplicialComplex, field: PrimeField) -> Result<usize> {
    leray_dimension_direct_guarded(complex, field, DEFAULT_MAX_N)
}

pub fn leray_dimension_direct_guarded(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<usize> {
    check_sweep(complex, max_n)?;
    let mut best = 0;
    for sigma in VertexSet::full(complex.n())?.subsets() {
        best = best.max(leray_contribution(complex, sigma, field));
    }
    Ok(best)
}

/// `top reduced degree of Δ|_σ + 1` over degrees `≥ 0`, else `0`.
pub fn leray_contribution(
    complex: &SimplicialComplex,
    sigma: VertexSet,
    field: PrimeField,
) -> usize {
    let top = reduced_homology(&complex.restrict(sigma), field).top_nonzero_degree(-1);
    (top + 1) as usize
}

/// Largest `|σ| - 1` over the minimal nonfaces of `Δ`; `0` if there are none.
pub fn helly_dimension_direct(complex: &SimplicialComplex) -> Result<usize> {
    Ok(complex
        .minimal_nonfaces()?
        .iter()
        .map(|s| s.cardinality() - 1)
        .max()
        .unwrap_or(0))
}

/// One plus the top degree of nonvanishing ordinary homology of `Δ`, and
/// that degree. `(0, None)` when `Δ` has no vertices.
pub fn hom_dimension_unreduced(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> (usize, Option<isize>) {
    let profile = unreduced_homology(complex, field);
    match profile.top_nonzero_degree(-1) {
        -1 => (0, None),
        k => ((k + 1) as usize, Some(k)),
    }
}

/// Computes the Betti table once and derives every bound from it, checking
/// the direct oracles and the inequalities `d_L ≥ d_H`, `d_L ≥ d_hom`.
pub fn full_report(complex: &SimplicialComplex, field: PrimeField) -> Result<DimensionReport> {
    full_report_guarded(complex, field, DEFAULT_MAX_N)
}

pub fn full_report_guarded(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<DimensionReport> {
    let table = hochster_table_guarded(complex, field, max_n)?;
    let leray_direct = leray_dimension_direct_guarded(complex, field, max_n)?;
    report_from_table(complex, &table, leray_direct)
}

/// Assembles a report from a precomputed table and a precomputed
/// [`leray_dimension_direct`] value. Any disagreement is an
/// [`Error::Inconsistent`].
pub fn report_from_table(
    complex: &SimplicialComplex,
    table: &BettiTable,
    leray_direct: usize,
) -> Result<DimensionReport> {
    if table.n() != complex.n() {
        return Err(Error::AmbientMismatch {
            expected: complex.n(),
            found: table.n(),
        });
    }
    let field = table.field();
    let (leray, leray_witness) = leray_dimension(table);
    let (helly, helly_witness) = helly_dimension(table);
    let (hom_betti, hom_betti_witness) = hom_dimension_betti(table);
    let (hom_unreduced, hom_unreduced_degree) = hom_dimension_unreduced(complex, field);
    let helly_direct = helly_dimension_direct(complex)?;

    let report = DimensionReport {
        n: complex.n(),
        field,
        leray,
        helly,
        hom_betti,
        hom_unreduced,
        leray_witness,
        helly_witness,
        hom_betti_witness,
        hom_unreduced_degree,
        helly_oracle_agrees: helly == helly_direct,
        leray_oracle_agrees: leray == leray_direct,
    };
    if !report.helly_oracle_agrees {
        return Err(Error::Inconsistent(format!(
            "Helly dimension {helly} from the Betti table, {helly_direct} from minimal nonfaces"
        )));
    }
    if !report.leray_oracle_agrees {
        return Err(Error::Inconsistent(format!(
            "Leray dimension {leray} from the Betti table, {leray_direct} from induced subcomplexes"
        )));
    }
    if leray < helly || leray < hom_betti {
        return Err(Error::Inconsistent(format!(
            "d_L = {leray} below d_H = {helly} or d_hom = {hom_betti}"
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochster_table;

    fn vs(n: usize, s: &str) -> VertexSet {
        VertexSet::parse(s, n).unwrap()
    }

    #[test]
    fn square() {
        let d = SimplicialComplex::from_generators(
            4,
            ["1010", "1001", "0110", "0101"].map(|s| vs(4, s)),
        )
        .unwrap();
        let t = hochster_table(&d, PrimeField::GF2).unwrap();
        assert_eq!(
            hom_dimension_betti(&t),
            (
                2,
                Some(Witness {
                    step: 2,
                    sigma: vs(4, "1111")
                })
            )
        );
        assert_eq!(
            helly_dimension(&t),
            (
                1,
                Some(Witness {
                    step: 1,
                    sigma: vs(4, "1100")
                })
            )
        );
        let r = full_report(&d, PrimeField::GF2).unwrap();
        assert_eq!(
            (r.leray, r.helly, r.hom_betti, r.hom_unreduced),
            (2, 1, 2, 2)
        );
    }

    #[test]
    fn full_simplex_all_zero() {
        let d = SimplicialComplex::full_simplex(3).unwrap();
        let r = full_report(&d, PrimeField::GF2).unwrap();
        assert_eq!(
            (r.leray, r.helly, r.hom_betti, r.hom_unreduced),
            (0, 0, 0, 1)
        );
        assert_eq!(r.leray_witness, None);
        assert_eq!(r.hom_unreduced_degree, Some(0));
    }

    #[test]
    fn single_vertex() {
        let d = SimplicialComplex::full_simplex(1).unwrap();
        assert_eq!(leray_dimension_direct(&d, PrimeField::GF2).unwrap(), 0);
    }

    #[test]
    fn irrelevant_complex() {
        let d = SimplicialComplex::irrelevant(2).unwrap();
        let r = full_report(&d, PrimeField::GF2).unwrap();
        // every vertex is a degree-1 generator; the only homology is H̃_{-1}
        assert_eq!(
            (r.leray, r.helly, r.hom_betti, r.hom_unreduced),
            (0, 0, 0, 0)
        );
    }

    #[test]
    fn corrupted_table_is_caught() {
        let d =
            SimplicialComplex::from_generators(3, ["110", "101", "011"].map(|s| vs(3, s))).unwrap();
        let mut t = hochster_table(&d, PrimeField::GF2).unwrap();
        t.insert(1, vs(3, "111"), 0).unwrap();
        let direct = leray_dimension_direct(&d, PrimeField::GF2).unwrap();
        assert!(matches!(
            report_from_table(&d, &t, direct),
            Err(Error::Inconsistent(_))
        ));
    }
}
