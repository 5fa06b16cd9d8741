use std::fmt;

use crate::error::{Error, Result};
use crate::model::{StateId, Tgs};

/// A subset of a system's states, stored as a bit vector of length `|S|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    words: Vec<u64>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = StateSet::empty(universe);
        for i in 0..universe {
            s.insert(StateId::from(i));
        }
        s
    }

    pub fn from_ids<I>(universe: usize, ids: I) -> Self
    where
        I: IntoIterator<Item = StateId>,
    {
        let mut s = StateSet::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    pub fn singleton(universe: usize, id: StateId) -> Self {
        StateSet::from_ids(universe, [id])
    }

    /// Subset with `bits[i]` giving membership of state `i`.
    pub fn from_bits(bits: &[bool]) -> Self {
        StateSet::from_ids(
            bits.len(),
            bits.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| StateId::from(i)),
        )
    }

    /// Resolves state names against `tgs`.
    pub fn from_names<'a, I>(tgs: &Tgs, names: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = StateSet::empty(tgs.state_count());
        for name in names {
            s.insert(tgs.state_by_name(name)?);
        }
        Ok(s)
    }

    /// Size of the carrier this subset lives in.
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, id: StateId) -> bool {
        self.contains_raw(id.index())
    }

    #[inline]
    pub(crate) fn contains_raw(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns whether the state was newly added. Panics outside the universe.
    pub fn insert(&mut self, id: StateId) -> bool {
        let i = id.index();
        assert!(
            i < self.universe,
            "state {i} outside a universe of {}",
            self.universe
        );
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    pub fn remove(&mut self, id: StateId) -> bool {
        let i = id.index();
        if i >= self.universe {
            return false;
        }
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.universe)
            .filter(|&i| self.contains_raw(i))
            .map(StateId::from)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        assert_eq!(self.universe, other.universe);
        StateSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        assert_eq!(self.universe, other.universe);
        StateSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Membership as booleans, index = state.
    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.universe).map(|i| self.contains_raw(i)).collect()
    }

    /// Names of the members, comma separated.
    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedSet { set: self, tgs }
    }

    pub(crate) fn check_owner(&self, tgs: &Tgs) -> Result<()> {
        if self.universe != tgs.state_count() {
            return Err(Error::SubsetSizeMismatch {
                expected: tgs.state_count(),
                found: self.universe,
            });
        }
        Ok(())
    }

    pub(crate) fn check_nonempty(&self, tgs: &Tgs) -> Result<()> {
        self.check_owner(tgs)?;
        if self.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(())
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|s| s.0)).finish()
    }
}

struct NamedSet<'a> {
    set: &'a StateSet,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedSet<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.set.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(self.tgs.state_name(s))?;
        }
        f.write_str("}")
    }
}

/// All nonempty subsets of an `n`-element carrier, in lexicographic order of
/// their bit vectors `(b₀, b₁, …, bₙ₋₁)`.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = StateSet> {
    assert!(n < 64, "subset enumeration needs n < 64");
    (1u64..(1u64 << n)).map(move |mask| {
        // state 0 is the most significant bit so that b₀ is compared first
        StateSet::from_ids(
            n,
            (0..n)
                .filter(|&i| mask >> (n - 1 - i) & 1 == 1)
                .map(StateId::from),
        )
    })
}
