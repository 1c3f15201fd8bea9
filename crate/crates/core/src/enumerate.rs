//! Enumeration of small digraphs and tournaments up to isomorphism.
//!
//! Representatives are produced by vertex augmentation: every order-n class
//! contains a member built from some order-(n-1) canonical representative
//! plus one new vertex in some in/out pattern, so trying all patterns over
//! all parent classes and deduplicating by canonical key covers every class.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::{CanonicalKey, Digraph};
use crate::tournament::is_tournament;

/// Hard cap for all-digraphs enumeration (class counts grow as 2^(n(n-1))
/// raw; order 6 already has 1.5M classes).
pub const ENUM_ALL_CAP: usize = 6;
/// Hard cap for tournament enumeration.
pub const ENUM_TOURNAMENT_CAP: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {order} exceeds enumeration cap {cap} for {filter} mode")]
    CapExceeded { order: usize, cap: usize, filter: &'static str },
}

/// Which instance universe to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumFilter {
    All,
    Tournaments,
    StronglyConnectedTournaments,
}

impl EnumFilter {
    fn name(self) -> &'static str {
        match self {
            EnumFilter::All => "all-digraphs",
            EnumFilter::Tournaments => "tournaments",
            EnumFilter::StronglyConnectedTournaments => "strongly-connected-tournaments",
        }
    }
}

/// One canonical representative per isomorphism class of order `n` passing
/// the filter, sorted by canonical key.
pub fn enumerate_digraphs(n: usize, filter: EnumFilter) -> Result<Vec<Digraph>, EnumerateError> {
    let cap = match filter {
        EnumFilter::All => ENUM_ALL_CAP,
        _ => ENUM_TOURNAMENT_CAP,
    };
    if n > cap {
        return Err(EnumerateError::CapExceeded { order: n, cap, filter: filter.name() });
    }
    let tournaments_only = !matches!(filter, EnumFilter::All);
    let mut keys = canonical_keys(n, tournaments_only);
    if matches!(filter, EnumFilter::StronglyConnectedTournaments) {
        keys.retain(|k| k.to_digraph().is_strongly_connected());
    }
    Ok(keys.into_iter().map(|k| k.to_digraph()).collect())
}

fn canonical_keys(n: usize, tournaments_only: bool) -> Vec<CanonicalKey> {
    if n == 0 {
        return vec![Digraph::empty(0).canonical_key().expect("within cap")];
    }
    let parents = canonical_keys(n - 1, tournaments_only);
    let mut keys = BTreeSet::new();
    for parent in &parents {
        let base = parent.to_digraph();
        // connection patterns of the new vertex (id n-1) to each old vertex:
        // tournaments pick one direction per pair, general digraphs pick any
        // of none/in/out/both via two bits per pair.
        let choice_bits = if tournaments_only { n - 1 } else { 2 * (n - 1) };
        for pattern in 0u64..(1 << choice_bits) {
            let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
            for old in 0..n - 1 {
                if tournaments_only {
                    if pattern >> old & 1 == 1 {
                        arcs.push((n - 1, old));
                    } else {
                        arcs.push((old, n - 1));
                    }
                } else {
                    if pattern >> (2 * old) & 1 == 1 {
                        arcs.push((old, n - 1));
                    }
                    if pattern >> (2 * old + 1) & 1 == 1 {
                        arcs.push((n - 1, old));
                    }
                }
            }
            let candidate = Digraph::from_arcs(n, arcs).expect("augmented arcs valid");
            debug_assert!(!tournaments_only || is_tournament(&candidate));
            keys.insert(candidate.canonical_key().expect("within cap"));
        }
    }
    keys.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_class_counts() {
        // digraphs up to isomorphism: 1, 1, 3, 16, 218, 9608
        assert_eq!(enumerate_digraphs(0, EnumFilter::All).unwrap().len(), 1);
        assert_eq!(enumerate_digraphs(1, EnumFilter::All).unwrap().len(), 1);
        assert_eq!(enumerate_digraphs(2, EnumFilter::All).unwrap().len(), 3);
        assert_eq!(enumerate_digraphs(3, EnumFilter::All).unwrap().len(), 16);
        assert_eq!(enumerate_digraphs(4, EnumFilter::All).unwrap().len(), 218);
        assert_eq!(enumerate_digraphs(5, EnumFilter::All).unwrap().len(), 9608);
    }

    #[test]
    fn known_tournament_counts() {
        // tournaments: 1, 2, 4, 12, 56, 456
        assert_eq!(enumerate_digraphs(2, EnumFilter::Tournaments).unwrap().len(), 1);
        assert_eq!(enumerate_digraphs(3, EnumFilter::Tournaments).unwrap().len(), 2);
        assert_eq!(enumerate_digraphs(4, EnumFilter::Tournaments).unwrap().len(), 4);
        assert_eq!(enumerate_digraphs(5, EnumFilter::Tournaments).unwrap().len(), 12);
        assert_eq!(enumerate_digraphs(6, EnumFilter::Tournaments).unwrap().len(), 56);
        assert_eq!(enumerate_digraphs(7, EnumFilter::Tournaments).unwrap().len(), 456);
    }

    #[test]
    fn strongly_connected_tournament_counts() {
        // 1, 1, 6, 35 for orders 3..6
        let f = EnumFilter::StronglyConnectedTournaments;
        assert_eq!(enumerate_digraphs(3, f).unwrap().len(), 1);
        assert_eq!(enumerate_digraphs(4, f).unwrap().len(), 1);
        assert_eq!(enumerate_digraphs(5, f).unwrap().len(), 6);
        assert_eq!(enumerate_digraphs(6, f).unwrap().len(), 35);
    }

    #[test]
    fn caps_are_hard_errors() {
        assert!(matches!(
            enumerate_digraphs(7, EnumFilter::All),
            Err(EnumerateError::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_digraphs(8, EnumFilter::Tournaments),
            Err(EnumerateError::CapExceeded { .. })
        ));
    }

    #[test]
    fn representatives_are_sorted_and_canonical() {
        let reps = enumerate_digraphs(4, EnumFilter::Tournaments).unwrap();
        let keys: Vec<_> = reps.iter().map(|d| d.canonical_key().unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        for (d, k) in reps.iter().zip(&keys) {
            assert_eq!(d.canonical_key().unwrap(), *k);
        }
    }

    #[test]
    fn three_cycle_is_the_only_sc_tournament_of_order_3() {
        let reps = enumerate_digraphs(3, EnumFilter::StronglyConnectedTournaments).unwrap();
        assert_eq!(reps.len(), 1);
        let d = &reps[0];
        assert_eq!(d.arc_count(), 3);
        assert!(d.is_strongly_connected());
        let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(d.canonical_key().unwrap(), tri.canonical_key().unwrap());
    }
}
