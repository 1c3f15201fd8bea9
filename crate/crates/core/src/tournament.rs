//! Tournament predicates, the strongly-connected-tournament color threshold,
//! and pancyclicity certificates (every vertex on a cycle of every length).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::digraph::{bits_of, Digraph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("digraph is not a tournament")]
    NotTournament,
    #[error("tournament is not strongly connected")]
    NotStronglyConnected,
    #[error("order {got} below minimum {min}")]
    OrderTooSmall { got: usize, min: usize },
    #[error("no {k}-cycle through vertex {v} found; certificate construction failed")]
    MissingCycle { v: Vertex, k: usize },
}

/// True iff exactly one of the arcs `uv`, `vu` is present for every pair.
pub fn is_tournament(d: &Digraph) -> bool {
    let n = d.order();
    for u in 0..n {
        for v in u + 1..n {
            if d.has_arc(u, v) == d.has_arc(v, u) {
                return false;
            }
        }
    }
    true
}

/// The color count forcing a rainbow triangle in every arc-colored strongly
/// connected tournament of order `n >= 3`: n(n-1)/2 - n + 3.
pub fn tournament_threshold(n: usize) -> Result<usize, TournamentError> {
    if n < 3 {
        return Err(TournamentError::OrderTooSmall { got: n, min: 3 });
    }
    Ok(n * (n - 1) / 2 - n + 3)
}

/// For each vertex and each length k in 3..=n, one directed k-cycle through
/// that vertex, written as the vertex sequence starting at the vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TournamentCertificate {
    entries: BTreeMap<(Vertex, usize), Vec<Vertex>>,
}

impl TournamentCertificate {
    pub fn cycle(&self, v: Vertex, k: usize) -> Option<&[Vertex]> {
        self.entries.get(&(v, k)).map(|c| c.as_slice())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Vertex, usize), &Vec<Vertex>)> {
        self.entries.iter()
    }

    /// Re-check every entry against `d` and confirm full (vertex, length)
    /// coverage.
    pub fn verify(&self, d: &Digraph) -> bool {
        let n = d.order();
        for v in 0..n {
            for k in 3..=n {
                let Some(cycle) = self.cycle(v, k) else { return false };
                if cycle.len() != k || cycle[0] != v {
                    return false;
                }
                let mut seen = 0u64;
                for &x in cycle {
                    if x >= n || seen >> x & 1 == 1 {
                        return false;
                    }
                    seen |= 1 << x;
                }
                for i in 0..k {
                    if !d.has_arc(cycle[i], cycle[(i + 1) % k]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Pancyclicity certificate for a strongly connected tournament: a directed
/// k-cycle through every vertex for every k in 3..=n. Existence is a theorem;
/// the construction here is direct search, so a failure to complete the
/// certificate is reported as an error rather than papered over.
pub fn moon_certificate(t: &Digraph) -> Result<TournamentCertificate, TournamentError> {
    let n = t.order();
    if n < 3 {
        return Err(TournamentError::OrderTooSmall { got: n, min: 3 });
    }
    if !is_tournament(t) {
        return Err(TournamentError::NotTournament);
    }
    if !t.is_strongly_connected() {
        return Err(TournamentError::NotStronglyConnected);
    }
    let mut entries = BTreeMap::new();
    for v in 0..n {
        for k in 3..=n {
            let mut path = vec![v];
            if !extend_cycle(t, v, k, &mut path, 1u64 << v) {
                return Err(TournamentError::MissingCycle { v, k });
            }
            entries.insert((v, k), path);
        }
    }
    Ok(TournamentCertificate { entries })
}

/// Depth-first search for a k-cycle back to `start`, exploring successors in
/// ascending order so the first cycle found is canonical.
fn extend_cycle(d: &Digraph, start: Vertex, k: usize, path: &mut Vec<Vertex>, seen: u64) -> bool {
    let last = *path.last().expect("path nonempty");
    if path.len() == k {
        return d.has_arc(last, start);
    }
    for next in bits_of(d.out_bits(last) & !seen) {
        path.push(next);
        if extend_cycle(d, start, k, path, seen | 1 << next) {
            return true;
        }
        path.pop();
    }
    false
}
