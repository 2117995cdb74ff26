//! Subsets of `[n] = {1, …, n}` packed into a machine word.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result, MAX_VERTICES};

/// A subset of `[n]`. Bit `i` is set exactly when vertex `i + 1` belongs to
/// the set.
///
/// Faces, codewords and the squarefree multidegrees of the Betti table all
/// use this type. Two sets only compare meaningfully when they share the same
/// ambient `n`; ordering is by bit-pattern value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u32,
    n: u8,
}

impl VertexSet {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_ambient(n)?;
        if bits & !Self::mask(n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 32 - bits.leading_zeros() as usize,
                n,
            });
        }
        Ok(Self { bits, n: n as u8 })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::new(n, Self::mask(n))
    }

    /// Builds a set from 1-based vertex labels.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        check_ambient(n)?;
        let mut bits = 0u32;
        for &v in vertices {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Self { bits, n: n as u8 })
    }

    /// Parses either a binary string (`"1100"`, vertex 1 first) or a brace
    /// set of 1-based labels (`"{1,2}"`, `"{}"`).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('{') {
            let inner = inner.strip_suffix('}').ok_or_else(|| {
                Error::Malformed(alloc::format!("unterminated brace set {text:?}"))
            })?;
            let mut labels = Vec::new();
            for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let v = part
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(alloc::format!("bad vertex label {part:?}")))?;
                labels.push(v);
            }
            return Self::from_vertices(n, &labels);
        }
        if text.len() != n {
            return Err(Error::Malformed(alloc::format!(
                "binary codeword {text:?} has length {}, expected {n}",
                text.len()
            )));
        }
        check_ambient(n)?;
        let mut bits = 0u32;
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => {
                    return Err(Error::Malformed(alloc::format!(
                        "bad character {ch:?} in {text:?}"
                    )))
                }
            }
        }
        Ok(Self { bits, n: n as u8 })
    }

    #[inline]
    fn mask(n: usize) -> u32 {
        if n >= 32 {
            u32::MAX
        } else {
            (1u32 << n) - 1
        }
    }

    #[inline]
    pub(crate) fn from_raw(n: usize, bits: u32) -> Self {
        debug_assert!(bits & !Self::mask(n) == 0);
        Self { bits, n: n as u8 }
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ambient(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn cardinality(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == Self::mask(self.ambient())
    }

    /// Membership of a 1-based vertex label.
    #[inline]
    pub fn contains(self, vertex: usize) -> bool {
        vertex >= 1 && vertex <= self.ambient() && self.bits & (1 << (vertex - 1)) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        Self {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        Self {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        Self {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    /// The same set viewed inside a larger ambient `[n]`.
    pub fn lift(self, n: usize) -> Result<Self> {
        Self::new(n, self.bits)
    }

    /// Adds a 1-based vertex, returning the enlarged set.
    pub fn with(self, vertex: usize) -> Result<Self> {
        if vertex == 0 || vertex > self.ambient() {
            return Err(Error::VertexOutOfRange {
                vertex,
                n: self.ambient(),
            });
        }
        Ok(Self {
            bits: self.bits | (1 << (vertex - 1)),
            n: self.n,
        })
    }

    /// 1-based labels in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.bits;
        core::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(low + 1)
        })
    }

    /// Every subset of `self`, in increasing bit-pattern order, `∅` first.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self,
            next: Some(0),
        }
    }

    /// Subsets obtained by deleting one vertex, ordered by the position of
    /// the deleted vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Self> {
        let n = self.n;
        let bits = self.bits;
        self.vertices().map(move |v| Self {
            bits: bits & !(1 << (v - 1)),
            n,
        })
    }

    /// Binary string with vertex 1 first, e.g. `"1100"` for `{1, 2}` on 4 vertices.
    pub fn to_binary_string(self) -> String {
        (0..self.ambient())
            .map(|i| if self.bits & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }

    /// Comparison used for Betti-table iteration: cardinality first, then bit pattern.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then(self.bits.cmp(&other.bits))
    }
}

fn check_ambient(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary_string())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({})", self.to_binary_string())
    }
}

/// Iterator over all subsets of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Subsets {
    set: VertexSet,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        let mask = self.set.bits;
        // standard submask successor: (cur - mask) & mask walks upward
        self.next = if cur == mask {
            None
        } else {
            Some(cur.wrapping_sub(mask) & mask)
        };
        Some(VertexSet {
            bits: cur,
            n: self.set.n,
        })
    }
}
