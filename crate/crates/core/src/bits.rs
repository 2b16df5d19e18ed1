//! Dense boolean matrix over vertex pairs, bit-packed by row.

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix { n, words_per_row, bits: vec![0; n * words_per_row] }
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, value: bool) {
        debug_assert!(u < self.n && v < self.n);
        let word = &mut self.bits[u * self.words_per_row + v / 64];
        if value {
            *word |= 1 << (v % 64);
        } else {
            *word &= !(1 << (v % 64));
        }
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}
