//! Infimum maximization by iterated cycling, shared by the band-generator and
//! the classical Garside structures on `B₃`.
//!
//! If the infimum of a left normal form is not maximal in its conjugacy class,
//! some iterate of cycling raises it. Cycling is a map on a finite set once the
//! infimum and letter count are fixed, so an orbit that closes up without an
//! increase certifies maximality.

use std::collections::HashMap;
use std::hash::Hash;

use crate::word::BraidWord;

pub(crate) trait CyclicNormalForm {
    type Key: Eq + Hash;

    fn infimum(&self) -> i64;

    fn key(&self) -> Self::Key;

    /// Applies one cycling step and returns the conjugator `c`, so that the new
    /// braid equals `c⁻¹ · old · c`.
    fn cycle(&mut self) -> BraidWord;
}

/// Cycles until the infimum is maximal; appends every conjugator to `conjugator`.
pub(crate) fn maximize_infimum<S: CyclicNormalForm>(state: &mut S, conjugator: &mut BraidWord) {
    'outer: loop {
        let start = state.infimum();
        // Conjugator length at the first visit of each state, so a closed
        // orbit can be unwound to a shorter conjugator for the same braid.
        let mut seen: HashMap<S::Key, usize> = HashMap::new();
        loop {
            match seen.entry(state.key()) {
                std::collections::hash_map::Entry::Occupied(e) => {
                    conjugator.truncate(*e.get());
                    return;
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(conjugator.len());
                }
            }
            let c = state.cycle();
            conjugator.extend_from(&c);
            if state.infimum() > start {
                continue 'outer;
            }
        }
    }
}
