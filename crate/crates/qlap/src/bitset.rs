//! Fixed-width bitsets over `u64` words.
//!
//! Adjacency rows and vertex sets are stored this way; bits at positions at or
//! above the set's width must stay zero so popcounts and whole-word operations
//! stay meaningful.

pub const WORD_BITS: usize = 64;

/// Number of `u64` words needed to hold `nbits` bits.
#[inline]
pub fn words_for(nbits: usize) -> usize {
    nbits.div_ceil(WORD_BITS)
}

#[inline]
pub fn test(words: &[u64], bit: usize) -> bool {
    words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
}

#[inline]
pub fn set(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
}

#[inline]
pub fn clear(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] &= !(1u64 << (bit % WORD_BITS));
}

#[inline]
pub fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// Popcount of the intersection of two equally sized bit rows.
#[inline]
pub fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Iterator over the indices of set bits, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_index * WORD_BITS + bit)
    }
}

pub fn ones(words: &[u64]) -> Ones<'_> {
    Ones {
        words,
        word_index: 0,
        current: words.first().copied().unwrap_or(0),
    }
}

/// Owned vertex set, used by the clique solver for its candidate sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    /// Set containing every vertex in `0..nbits`.
    pub fn all(nbits: usize) -> Self {
        let mut words = vec![!0u64; words_for(nbits)];
        let tail = nbits % WORD_BITS;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        if nbits == 0 {
            words.clear();
        }
        VertexSet { words }
    }

    pub fn remove(&mut self, v: usize) {
        clear(&mut self.words, v);
    }

    pub fn len(&self) -> usize {
        count(&self.words)
    }

    pub fn iter(&self) -> Ones<'_> {
        ones(&self.words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Intersection with a raw bit row of the same width.
    pub fn intersection(&self, row: &[u64]) -> VertexSet {
        debug_assert_eq!(self.words.len(), row.len());
        VertexSet {
            words: self.words.iter().zip(row).map(|(a, b)| a & b).collect(),
        }
    }
}

/// Constructors and probes that only the unit tests need.
#[cfg(test)]
impl VertexSet {
    pub fn empty(nbits: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(nbits)],
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        test(&self.words, v)
    }

    pub fn insert(&mut self, v: usize) {
        set(&mut self.words, v);
    }
}
