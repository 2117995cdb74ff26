//! Combinatorial codes: sets of codewords on `n` neurons.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet, MAX_VERTICES};

/// A set of codewords on `n` neurons. Duplicates collapse; the empty word is
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    n: usize,
    words: BTreeSet<VertexSet>,
}

impl Code {
    pub fn new<I>(n: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut set = BTreeSet::new();
        for w in words {
            if w.ambient() != n {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: w.ambient(),
                });
            }
            set.insert(w);
        }
        Ok(Self { n, words: set })
    }

    /// Parses each word with [`VertexSet::parse`].
    pub fn parse_words<'a, I>(n: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let parsed = words
            .into_iter()
            .map(|w| VertexSet::parse(w, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, parsed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: VertexSet) -> bool {
        self.words.contains(&word)
    }

    /// Words in increasing bit-pattern order.
    pub fn words(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.words.iter().copied()
    }
}
