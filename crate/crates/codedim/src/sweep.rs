//! Multi-threaded versions of the `2^n` sweeps.
//!
//! Each grading is processed independently; results are merged into the
//! table's ordered map, so the outcome does not depend on scheduling.

use rayon::prelude::*;

use codedim_core::betti::{check_sweep, hochster_column};
use codedim_core::dimensions::{leray_contribution, report_from_table};
use codedim_core::{BettiTable, DimensionReport, PrimeField, Result, SimplicialComplex, VertexSet};

fn gradings(n: usize) -> impl ParallelIterator<Item = VertexSet> {
    (0u64..1u64 << n)
        .into_par_iter()
        .map(move |bits| VertexSet::new(n, bits as u32).expect("bits fit the ambient set"))
}

pub fn par_hochster_table(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<BettiTable> {
    check_sweep(complex, max_n)?;
    let columns: Vec<_> = gradings(complex.n())
        .map(|sigma| (sigma, hochster_column(complex, sigma, field)))
        .filter(|(_, column)| !column.is_empty())
        .collect();
    let mut table = BettiTable::new(complex.n(), field);
    for (sigma, column) in columns {
        table.insert_column(sigma, &column)?;
    }
    Ok(table)
}

pub fn par_leray_dimension_direct(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<usize> {
    check_sweep(complex, max_n)?;
    Ok(gradings(complex.n())
        .map(|sigma| leray_contribution(complex, sigma, field))
        .max()
        .unwrap_or(0))
}

/// Parallel counterpart of `full_report_guarded`, returning the table too.
pub fn par_full_report(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<(DimensionReport, BettiTable)> {
    let table = par_hochster_table(complex, field, max_n)?;
    let leray_direct = par_leray_dimension_direct(complex, field, max_n)?;
    let report = report_from_table(complex, &table, leray_direct)?;
    Ok((report, table))
}
