//! Subsets of a finite carrier `0..n`, stored as a bit vector.

use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the carrier `0..n`.
///
/// Ordering is by cardinality first, then by the ascending element lists
/// compared lexicographically, which is the order used for every listing
/// of subsets this crate produces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(n: usize) -> Self {
        SubsetMask {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for x in 0..n {
            s.insert(x);
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    /// Builds a subset from element indices.
    ///
    /// Panics if an index is not below `n`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Self {
        let mut s = Self::empty(n);
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// The subset whose members are the set bits of `bits` (for `n <= 64`).
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= WORD_BITS, "from_bits needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            let keep = if n == WORD_BITS {
                u64::MAX
            } else {
                (1u64 << n) - 1
            };
            s.words[0] = bits & keep;
        }
        s
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.n, "element {x} outside carrier of size {}", self.n);
        let (w, b) = (x / WORD_BITS, x % WORD_BITS);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, x: usize) -> bool {
        if x >= self.n {
            return false;
        }
        let (w, b) = (x / WORD_BITS, x % WORD_BITS);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.words[x / WORD_BITS] & (1 << (x % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &SubsetMask, f: impl Fn(u64, u64) -> u64) -> SubsetMask {
        assert_eq!(self.n, other.n, "subsets over different carriers");
        SubsetMask {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Space-separated member symbols, e.g. `1 3 4`.
    pub fn render(&self, symbols: &[String]) -> String {
        self.iter()
            .map(|x| symbols[x].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Braced rendering, e.g. `{1 3 4}`.
    pub fn render_braced(&self, symbols: &[String]) -> String {
        format!("{{{}}}", self.render(symbols))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = SubsetMask::empty(70);
        assert!(s.is_empty());
        assert!(s.insert(3));
        assert!(s.insert(65));
        assert!(!s.insert(3));
        assert_eq!(s.len(), 2);
        assert_eq!(s.elements(), vec![3, 65]);
        assert!(s.remove(3));
        assert!(!s.contains(3));
        assert!(!s.contains(200));
    }

    #[test]
    fn ordering_is_cardinality_then_lexicographic() {
        let a = SubsetMask::from_elements(5, [0, 4]);
        let b = SubsetMask::from_elements(5, [1, 2]);
        let c = SubsetMask::from_elements(5, [3]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn set_algebra() {
        let a = SubsetMask::from_elements(6, [0, 1, 2]);
        let b = SubsetMask::from_elements(6, [2, 3]);
        assert_eq!(a.union(&b).elements(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).elements(), vec![2]);
        assert_eq!(a.difference(&b).elements(), vec![0, 1]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(SubsetMask::full(6).is_full());
    }

    #[test]
    fn from_bits_masks_high_bits() {
        let s = SubsetMask::from_bits(3, 0b1111_0101);
        assert_eq!(s.elements(), vec![0, 2]);
    }
}
