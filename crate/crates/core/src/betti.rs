//! Multigraded Betti numbers of `S/I_Δ` through Hochster's formula
//!
//! `β_{i,σ}(S/I_Δ) = dim H̃^{|σ|-i-1}(Δ|_σ)`, and only squarefree degrees
//! `σ ⊆ [n]` carry nonzero Betti numbers. No free resolution is built: each
//! grading `σ` costs one reduced-homology computation of `Δ|_σ`, and that
//! single profile fills the whole column `{β_{i,σ}}_i`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::homology::reduced_homology;
use crate::{Error, PrimeField, Result, SimplicialComplex, VertexSet, DEFAULT_MAX_N};

/// Index of a Betti number: resolution step and squarefree grading.
///
/// Ordered by step, then `|σ|`, then bit pattern, which is the order the
/// Macaulay2 tally listing uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BettiKey {
    pub step: usize,
    pub sigma: VertexSet,
}

impl Ord for BettiKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.step
            .cmp(&other.step)
            .then_with(|| self.sigma.graded_cmp(&other.sigma))
    }
}

impl PartialOrd for BettiKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `R_{i,σ} = |σ| - i` for a grading with `β_{i,σ} > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RValue {
    pub step: usize,
    pub sigma: VertexSet,
    pub value: usize,
}

/// The nonzero multigraded Betti numbers of `S/I_Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    field: PrimeField,
    entries: BTreeMap<BettiKey, usize>,
}

impl BettiTable {
    pub fn new(n: usize, field: PrimeField) -> Self {
        Self {
            n,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Stores `β_{step,σ} = beta`, dropping the entry when `beta` is zero.
    pub fn insert(&mut self, step: usize, sigma: VertexSet, beta: usize) -> Result<()> {
        if sigma.ambient() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: sigma.ambient(),
            });
        }
        let key = BettiKey { step, sigma };
        if beta == 0 {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, beta);
        }
        Ok(())
    }

    /// Adds one grading's column, as returned by [`hochster_column`].
    pub fn insert_column(&mut self, sigma: VertexSet, column: &[(usize, usize)]) -> Result<()> {
        for &(step, beta) in column {
            self.insert(step, sigma, beta)?;
        }
        Ok(())
    }

    pub fn get(&self, step: usize, sigma: VertexSet) -> usize {
        self.entries
            .get(&BettiKey { step, sigma })
            .copied()
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(step, |σ|, bit pattern)` order.
    pub fn entries(&self) -> impl Iterator<Item = (BettiKey, usize)> + '_ {
        self.entries.iter().map(|(k, &v)| (*k, v))
    }

    /// `R_{i,σ}` for every positive entry with `i ≥ 1`.
    pub fn r_values(&self) -> Vec<RValue> {
        self.entries
            .keys()
            .filter(|k| k.step >= 1)
            .map(|k| RValue {
                step: k.step,
                sigma: k.sigma,
                value: k.sigma.cardinality().saturating_sub(k.step),
            })
            .collect()
    }

    /// Total rank of each free module in the resolution, `F_0` first, with
    /// trailing zeros trimmed.
    pub fn level_ranks(&self) -> Vec<usize> {
        let mut ranks = Vec::new();
        for (key, &beta) in &self.entries {
            if ranks.len() <= key.step {
                ranks.resize(key.step + 1, 0);
            }
            ranks[key.step] += beta;
        }
        while ranks.last() == Some(&0) {
            ranks.pop();
        }
        ranks
    }
}

/// The column `{(i, β_{i,σ}) : β_{i,σ} > 0}` for one grading `σ`.
pub fn hochster_column(
    complex: &SimplicialComplex,
    sigma: VertexSet,
    field: PrimeField,
) -> Vec<(usize, usize)> {
    let size = sigma.cardinality() as isize;
    let profile = reduced_homology(&complex.restrict(sigma), field);
    let mut column: Vec<_> = profile
        .nonzero()
        .map(|(k, dim)| ((size - k - 1) as usize, dim))
        .collect();
    column.reverse();
    column
}

/// Refuses complexes whose sweep is unusable: void ones, and ambient sets
/// larger than `max_n`.
pub fn check_sweep(complex: &SimplicialComplex, max_n: usize) -> Result<()> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let n = complex.n();
    if n > max_n {
        return Err(Error::GuardExceeded {
            n,
            max_n,
            subsets: 1u64 << n,
        });
    }
    Ok(())
}

/// [`hochster_table_guarded`] with the default guard.
pub fn hochster_table(complex: &SimplicialComplex, field: PrimeField) -> Result<BettiTable> {
    hochster_table_guarded(complex, field, DEFAULT_MAX_N)
}

/// Betti table of `S/I_Δ` over `field`, sweeping all `2^n` gradings.
pub fn hochster_table_guarded(
    complex: &SimplicialComplex,
    field: PrimeField,
    max_n: usize,
) -> Result<BettiTable> {
    check_sweep(complex, max_n)?;
    let n = complex.n();
    let mut table = BettiTable::new(n, field);
    for sigma in VertexSet::full(n)?.subsets() {
        table.insert_column(sigma, &hochster_column(complex, sigma, field))?;
    }
    Ok(table)
}
