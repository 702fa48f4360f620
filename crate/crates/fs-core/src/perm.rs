//! Permutations of `[n]` and their lexicographic ranks.
//!
//! A permutation assigns a label to every position: `sigma(a)` is the label
//! occupying position `a`. Ranks are lexicographic over the one-line word
//! `(sigma(1), ..., sigma(n))`, computed through the factorial number system,
//! so the identity has rank 0 and the reversal has rank `n! - 1`. Everything
//! is capped at n = 20 so that ranks fit in a `u64`.

use std::fmt;

use crate::error::PermError;

/// Largest supported ground-set size; 20! is the last factorial below 2^64.
pub const MAX_N: usize = 20;

/// Factorials 0! ..= 20!.
const FACT: [u64; MAX_N + 1] = {
    let mut t = [1u64; MAX_N + 1];
    let mut i = 1;
    while i <= MAX_N {
        t[i] = t[i - 1] * i as u64;
        i += 1;
    }
    t
};

/// Returns `n!`, or an error when `n > 20` (the result would overflow 64 bits).
pub fn factorial(n: usize) -> Result<u64, PermError> {
    if n > MAX_N {
        return Err(PermError::FactorialOverflow { n });
    }
    Ok(FACT[n])
}

/// A bijection from positions `1..=n` to labels `1..=n`.
///
/// Stored 0-based internally; every public accessor speaks 1-based labels and
/// positions, matching the convention used for graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<u8>,
}

/// A permutation identified by its lexicographic rank in `[0, n!)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermIndex {
    pub rank: u64,
    pub n: usize,
}

impl Permutation {
    /// The identity on `[n]`.
    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n > MAX_N {
            return Err(PermError::TooLarge { n });
        }
        Ok(Permutation {
            map: (0..n as u8).collect(),
        })
    }

    /// Builds a permutation from its one-line word of 1-based labels,
    /// e.g. `[2, 1, 3]` sends position 1 to label 2.
    pub fn from_one_line(word: &[usize]) -> Result<Self, PermError> {
        let n = word.len();
        if n > MAX_N {
            return Err(PermError::TooLarge { n });
        }
        let mut seen = 0u32;
        let mut map = Vec::with_capacity(n);
        for &label in word {
            if label < 1 || label > n {
                return Err(PermError::LabelOutOfRange { label, n });
            }
            let bit = 1u32 << (label - 1);
            if seen & bit != 0 {
                return Err(PermError::DuplicateLabel { label });
            }
            seen |= bit;
            map.push((label - 1) as u8);
        }
        Ok(Permutation { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Label at 1-based position `pos`.
    pub fn label_at(&self, pos: usize) -> usize {
        self.map[pos - 1] as usize + 1
    }

    /// The one-line word with 1-based labels.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&l| l as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &l)| l as usize == i)
    }

    /// Exchanges the labels at 1-based positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Result<Self, PermError> {
        let n = self.n();
        if a == b {
            return Err(PermError::SwapSamePosition { pos: a });
        }
        if a < 1 || a > n {
            return Err(PermError::PositionOutOfRange { pos: a, n });
        }
        if b < 1 || b > n {
            return Err(PermError::PositionOutOfRange { pos: b, n });
        }
        let mut map = self.map.clone();
        map.swap(a - 1, b - 1);
        Ok(Permutation { map })
    }

    /// Lexicographic rank of the one-line word.
    pub fn rank(&self) -> PermIndex {
        PermIndex {
            rank: rank_word(&self.map),
            n: self.n(),
        }
    }

    /// Raw 0-based word; used by the engine's hot loops.
    pub(crate) fn raw(&self) -> &[u8] {
        &self.map
    }

    pub(crate) fn from_raw(map: Vec<u8>) -> Self {
        Permutation { map }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.one_line().iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", word.join(","))
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let word = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&word).map_err(serde::de::Error::custom)
    }
}

/// Rank of a 0-based word via the factorial number system. For each position,
/// the digit is the number of smaller labels not yet consumed, found with a
/// popcount over a seen-mask.
pub(crate) fn rank_word(word: &[u8]) -> u64 {
    let n = word.len();
    let mut seen = 0u32;
    let mut rank = 0u64;
    for (i, &l) in word.iter().enumerate() {
        let below = (seen & ((1u32 << l) - 1)).count_ones() as u64;
        rank += (l as u64 - below) * FACT[n - 1 - i];
        seen |= 1u32 << l;
    }
    rank
}

/// Rank of `word` with the entries at positions `a` and `b` (0-based)
/// exchanged, without materializing the swapped word.
pub(crate) fn rank_word_swapped(word: &[u8], a: usize, b: usize) -> u64 {
    let n = word.len();
    let mut seen = 0u32;
    let mut rank = 0u64;
    for i in 0..n {
        let l = if i == a {
            word[b]
        } else if i == b {
            word[a]
        } else {
            word[i]
        };
        let below = (seen & ((1u32 << l) - 1)).count_ones() as u64;
        rank += (l as u64 - below) * FACT[n - 1 - i];
        seen |= 1u32 << l;
    }
    rank
}

/// Inverse of [`Permutation::rank`].
pub fn unrank(index: PermIndex) -> Result<Permutation, PermError> {
    let PermIndex { rank, n } = index;
    if n > MAX_N {
        return Err(PermError::TooLarge { n });
    }
    if rank >= FACT[n] {
        return Err(PermError::RankOutOfBounds { rank, n });
    }
    let mut map = vec![0u8; n];
    unrank_into(rank, &mut map);
    Ok(Permutation { map })
}

/// Writes the 0-based word of the given rank into `out` (whose length fixes n).
pub(crate) fn unrank_into(mut rank: u64, out: &mut [u8]) {
    let n = out.len();
    let mut avail = ((1u64 << n) - 1) as u32;
    for (i, slot) in out.iter_mut().enumerate() {
        let f = FACT[n - 1 - i];
        let mut digit = (rank / f) as u32;
        rank %= f;
        // The digit selects the (digit+1)-th remaining label.
        let mut m = avail;
        while digit > 0 {
            m &= m - 1;
            digit -= 1;
        }
        let l = m.trailing_zeros() as u8;
        *slot = l;
        avail &= !(1u32 << l);
    }
}

/// Advances `word` to its lexicographic successor; returns false at the last
/// permutation (leaving `word` untouched).
pub(crate) fn next_permutation(word: &mut [u8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), 1);
        assert_eq!(factorial(7).unwrap(), 5040);
        assert_eq!(factorial(12).unwrap(), 479_001_600);
        assert_eq!(factorial(20).unwrap(), 2_432_902_008_176_640_000);
        assert!(factorial(21).is_err());
    }

    #[test]
    fn identity_ranks_zero() {
        for n in 1..=10 {
            let id = Permutation::identity(n).unwrap();
            assert_eq!(id.rank().rank, 0);
            assert!(id.is_identity());
        }
    }

    #[test]
    fn reversal_ranks_last() {
        for n in 1..=10 {
            let word: Vec<usize> = (1..=n).rev().collect();
            let p = Permutation::from_one_line(&word).unwrap();
            assert_eq!(p.rank().rank, factorial(n).unwrap() - 1);
        }
    }

    #[test]
    fn unrank_examples() {
        let p = unrank(PermIndex { rank: 0, n: 4 }).unwrap();
        assert_eq!(p.one_line(), vec![1, 2, 3, 4]);
        let p = unrank(PermIndex { rank: 23, n: 4 }).unwrap();
        assert_eq!(p.one_line(), vec![4, 3, 2, 1]);
        assert!(unrank(PermIndex { rank: 24, n: 4 }).is_err());
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive_n7() {
        let n = 7;
        for rank in 0..factorial(n).unwrap() {
            let p = unrank(PermIndex { rank, n }).unwrap();
            assert_eq!(p.rank().rank, rank);
        }
    }

    #[test]
    fn rank_is_bijective_and_monotone_n6() {
        // Walk all of S_6 in lexicographic order; ranks must be 0,1,2,...
        let n = 6;
        let mut word: Vec<u8> = (0..n as u8).collect();
        let mut expected = 0u64;
        loop {
            assert_eq!(rank_word(&word), expected);
            expected += 1;
            if !next_permutation(&mut word) {
                break;
            }
        }
        assert_eq!(expected, factorial(n).unwrap());
    }

    #[test]
    fn swap_positions_examples() {
        let id = Permutation::identity(5).unwrap();
        let s = id.swap_positions(1, 2).unwrap();
        assert_eq!(s.one_line(), vec![2, 1, 3, 4, 5]);

        let p = Permutation::from_one_line(&[3, 1, 2]).unwrap();
        let q = p.swap_positions(2, 3).unwrap();
        assert_eq!(q.one_line(), vec![3, 2, 1]);

        assert!(id.swap_positions(2, 2).is_err());
        assert!(id.swap_positions(0, 1).is_err());
        assert!(id.swap_positions(1, 6).is_err());
    }

    #[test]
    fn rank_word_swapped_matches_explicit_swap() {
        let n = 6;
        for rank in (0..factorial(n).unwrap()).step_by(37) {
            let p = unrank(PermIndex { rank, n }).unwrap();
            for a in 0..n {
                for b in (a + 1)..n {
                    let q = p.swap_positions(a + 1, b + 1).unwrap();
                    assert_eq!(rank_word_swapped(p.raw(), a, b), q.rank().rank);
                }
            }
        }
    }

    #[test]
    fn from_one_line_rejects_bad_words() {
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[0, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[1, 2, 4]).is_err());
    }

    #[test]
    fn serde_one_line_arrays() {
        let p = Permutation::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,3]");
        let q: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>("[2,2,3]").is_err());
    }

    proptest! {
        #[test]
        fn roundtrip_random(n in 5usize..=12, seed in any::<u64>()) {
            let rank = seed % factorial(n).unwrap();
            let p = unrank(PermIndex { rank, n }).unwrap();
            prop_assert_eq!(p.rank().rank, rank);
            prop_assert_eq!(p.rank().n, n);
        }

        #[test]
        fn swap_is_an_involution_changing_two_entries(
            rank in 0u64..5040, a in 1usize..=7, b in 1usize..=7
        ) {
            prop_assume!(a != b);
            let p = unrank(PermIndex { rank, n: 7 }).unwrap();
            let q = p.swap_positions(a, b).unwrap();
            let diffs = (1..=7).filter(|&i| p.label_at(i) != q.label_at(i)).count();
            prop_assert_eq!(diffs, 2);
            prop_assert_eq!(q.swap_positions(a, b).unwrap(), p);
        }
    }
}
