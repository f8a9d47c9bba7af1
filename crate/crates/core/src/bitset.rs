//! Fixed-length bitsets over machine words; doubles as GF(2) vectors.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Self::new(len);
        for i in ones {
            b.toggle(i);
        }
        b
    }

    /// Number of bits, set or not.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Addition over GF(2).
    pub fn xor_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn and_assign(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Clear every bit with index `<= i`.
    pub fn clear_through(&mut self, i: usize) {
        let w = i / 64;
        for word in &mut self.words[..w] {
            *word = 0;
        }
        if w < self.words.len() {
            let keep = if i % 64 == 63 { 0 } else { !0u64 << (i % 64 + 1) };
            self.words[w] &= keep;
        }
    }

    /// Index of the highest set bit (the "low" of a reduced column).
    pub fn highest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::from_indices(130, [0, 64, 129]);
        assert_eq!(a.highest_one(), Some(129));
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        let b = BitSet::from_indices(130, [64, 5]);
        a.xor_assign(&b);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![0, 5, 129]);
        a.clear_through(5);
        assert_eq!(a.ones().collect::<Vec<_>>(), vec![129]);
        a.clear_through(129);
        assert!(a.is_zero());
        assert_eq!(a.highest_one(), None);
        let mut c = BitSet::from_indices(128, [63, 64, 127]);
        c.clear_through(63);
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![64, 127]);
    }
}
