//! Invariant checks on seeded random complexes.

use serde::{Deserialize, Serialize};

use codedim_core::dimensions::{
    helly_dimension, helly_dimension_direct, leray_dimension_direct_guarded, report_from_table,
};
use codedim_core::generators::random_complex;
use codedim_core::homology::reduced_homology;
use codedim_core::{hochster_table_guarded, BettiTable, PrimeField, SimplicialComplex, VertexSet};

/// Largest ambient size the exhaustive per-subcomplex checks accept.
pub const ORACLE_MAX_N: usize = 8;

const DENSITIES: [f64; 4] = [0.3, 0.45, 0.6, 0.75];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub trials: u64,
    pub passed: u64,
    pub failed: u64,
    pub n: usize,
    pub seed: u64,
    pub failures: Vec<String>,
}

impl OracleSummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Makes every table wrong in a way the checks must notice.
fn corrupt(table: &mut BettiTable) {
    let full = VertexSet::full(table.n()).expect("table ambient fits");
    let beta = table.get(1, full);
    table.insert(1, full, beta + 1).expect("same ambient set");
}

/// Runs every invariant on one complex; returns the first violation.
pub fn check_complex(
    d: &SimplicialComplex,
    field: PrimeField,
    inject_fault: bool,
) -> Result<(), String> {
    let mut table = hochster_table_guarded(d, field, ORACLE_MAX_N).map_err(|e| e.to_string())?;
    if inject_fault {
        corrupt(&mut table);
    }
    let leray_direct =
        leray_dimension_direct_guarded(d, field, ORACLE_MAX_N).map_err(|e| e.to_string())?;
    // d_L >= d_H, d_L >= d_hom, and both oracle agreements
    let report = report_from_table(d, &table, leray_direct).map_err(|e| e.to_string())?;

    let nonfaces = d.minimal_nonfaces().map_err(|e| e.to_string())?;
    let firsts: Vec<_> = table.entries().filter(|(k, _)| k.step == 1).collect();
    if firsts.len() != nonfaces.len()
        || firsts
            .iter()
            .any(|(k, beta)| *beta != 1 || nonfaces.binary_search(&k.sigma).is_err())
    {
        return Err("first-step gradings differ from the minimal nonfaces".into());
    }

    if d.is_clique_complex().map_err(|e| e.to_string())? != (report.helly <= 1) {
        return Err(format!(
            "clique-complex test disagrees with d_H = {}",
            report.helly
        ));
    }

    let helly_direct = helly_dimension_direct(d).map_err(|e| e.to_string())?;
    for p in [2, 3, 5] {
        let f = PrimeField::new(p).expect("small prime");
        let t = hochster_table_guarded(d, f, ORACLE_MAX_N).map_err(|e| e.to_string())?;
        if helly_dimension(&t).0 != helly_direct {
            return Err(format!(
                "Helly dimension over GF({p}) disagrees with minimal nonfaces"
            ));
        }
    }

    for sigma in VertexSet::full(d.n()).map_err(|e| e.to_string())?.subsets() {
        let sub = d.restrict(sigma);
        let chi = reduced_homology(&sub, field).euler_characteristic();
        if chi != sub.reduced_euler_characteristic() {
            return Err(format!(
                "Euler characteristic mismatch on the restriction to {sigma}"
            ));
        }
    }
    Ok(())
}

/// `trials` random complexes on `n` vertices; trial `t` uses seed `seed + t`.
pub fn run(
    trials: u64,
    n: usize,
    seed: u64,
    field: PrimeField,
    inject_fault: bool,
) -> Result<OracleSummary, String> {
    if n == 0 || n > ORACLE_MAX_N {
        return Err(format!(
            "oracle checks need 1 <= n <= {ORACLE_MAX_N}, got {n}"
        ));
    }
    let mut summary = OracleSummary {
        trials,
        passed: 0,
        failed: 0,
        n,
        seed,
        failures: Vec::new(),
    };
    for t in 0..trials {
        let s = seed.wrapping_add(t);
        let d = random_complex(n, DENSITIES[(t % 4) as usize], s).map_err(|e| e.to_string())?;
        match check_complex(&d, field, inject_fault) {
            Ok(()) => summary.passed += 1,
            Err(msg) => {
                summary.failed += 1;
                summary.failures.push(format!("seed {s}: {msg}"));
            }
        }
    }
    Ok(summary)
}
