//! Exact maximization of rainbow-free color counts by branch-and-bound.
//!
//! Search state is a restricted-growth assignment along the canonical arc
//! order: arc k may reuse any color already used or open the single next
//! fresh color, which removes color-relabeling symmetry exactly. Rainbow
//! feasibility is checked incrementally on the newly colored arc only, and
//! the admissible bound is (colors used) + (arcs left): no completion of a
//! node can use more colors than that.

use std::sync::atomic::{AtomicUsize, Ordering};

use thiserror::Error;

use crate::coloring::{ColorId, ColoredDigraph};
use crate::digraph::Digraph;
use crate::triangles::triangles_by_arc_index;

/// Above this arc count, [`max_rainbow_free_colors`] refuses to run without
/// `force`; the coloring space is a Bell number in the arc count.
pub const SOFT_ARC_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("instance has {arcs} arcs, above the soft cap of {cap}; rerun with force to search anyway")]
    ArcBudgetExceeded { arcs: usize, cap: usize },
}

/// What the DFS does with completed rainbow-free colorings.
enum Mode<'v> {
    /// Track the maximum color count and its lexicographically least witness.
    Maximize,
    /// Collect every completion with exactly this many colors.
    Exact(usize),
    /// Call the visitor on every completion with at least this many colors.
    Visit(usize, &'v mut dyn FnMut(&[ColorId], usize)),
}

#[derive(Clone, Debug, Default)]
pub struct DfsControls {
    /// Known-achievable color count; subtrees that cannot reach it are cut.
    /// Must be a true lower bound or the reported maximum may be missed.
    pub initial_bound: usize,
    /// Stop as soon as a completion reaches this value (counterexample hunts).
    pub stop_at: Option<usize>,
    /// Node limit; on exhaustion the outcome carries a resume prefix.
    pub node_budget: Option<u64>,
    /// Restart point produced by an earlier budgeted run.
    pub resume_prefix: Option<Vec<ColorId>>,
}

#[derive(Clone, Debug)]
pub struct DfsOutcome {
    /// Best completed color count, with its witness assignment.
    pub best: Option<usize>,
    pub witness: Option<Vec<ColorId>>,
    /// Completions gathered in exact-collect mode.
    pub found: Vec<Vec<ColorId>>,
    pub nodes: u64,
    pub prunes: u64,
    /// True iff the whole space was exhausted.
    pub complete: bool,
    /// Where to resume when the node budget ran out.
    pub resume_prefix: Option<Vec<ColorId>>,
}

impl DfsOutcome {
    /// True when the search stopped early because `stop_at` was reached.
    pub fn stopped_at_target(&self) -> bool {
        !self.complete && self.resume_prefix.is_none()
    }
}

struct Dfs<'a, 'v> {
    m: usize,
    /// For arc k, the index pairs (i, j) of triangles through k with both
    /// other arcs earlier in the order; those are the only triangles fully
    /// colored when k is assigned.
    constraints: Vec<Vec<(usize, usize)>>,
    assignment: Vec<ColorId>,
    mode: Mode<'v>,
    bound: usize,
    stop_at: Option<usize>,
    budget: Option<u64>,
    prefix: Vec<ColorId>,
    shared_bound: Option<&'a AtomicUsize>,
    best: Option<usize>,
    witness: Option<Vec<ColorId>>,
    found: Vec<Vec<ColorId>>,
    nodes: u64,
    prunes: u64,
    stopped_prefix: Option<Vec<ColorId>>,
}

enum Flow {
    Continue,
    Stop,
}

impl<'a, 'v> Dfs<'a, 'v> {
    fn new(d: &Digraph, mode: Mode<'v>, controls: &DfsControls) -> Self {
        let m = d.arc_count();
        let constraints = triangles_by_arc_index(d)
            .into_iter()
            .enumerate()
            .map(|(k, tris)| {
                tris.into_iter().filter(|&(i, j)| i < k && j < k).collect::<Vec<_>>()
            })
            .collect();
        Dfs {
            m,
            constraints,
            assignment: vec![0; m],
            bound: controls.initial_bound,
            stop_at: controls.stop_at,
            budget: controls.node_budget,
            prefix: controls.resume_prefix.clone().unwrap_or_default(),
            shared_bound: None,
            mode,
            best: None,
            witness: None,
            found: vec![],
            nodes: 0,
            prunes: 0,
            stopped_prefix: None,
        }
    }

    fn current_bound(&self) -> usize {
        match self.shared_bound {
            Some(shared) => self.bound.max(shared.load(Ordering::Relaxed)),
            None => self.bound,
        }
    }

    /// Would coloring arc k with c close a rainbow triangle among the arcs
    /// colored so far?
    fn violates(&self, k: usize, c: ColorId) -> bool {
        self.constraints[k].iter().any(|&(i, j)| {
            let (ci, cj) = (self.assignment[i], self.assignment[j]);
            ci != cj && ci != c && cj != c
        })
    }

    fn complete_at(&mut self, used: usize) -> Flow {
        let snapshot = &self.assignment[..self.m];
        match &mut self.mode {
            Mode::Maximize => {
                let better = match self.best {
                    None => true,
                    Some(b) if used > b => true,
                    Some(b) => {
                        used == b && self.witness.as_ref().is_some_and(|w| snapshot < &w[..])
                    }
                };
                if better {
                    self.best = Some(used);
                    self.witness = Some(snapshot.to_vec());
                    self.bound = self.bound.max(used);
                    if let Some(shared) = self.shared_bound {
                        shared.fetch_max(used, Ordering::Relaxed);
                    }
                }
                if self.stop_at.is_some_and(|t| self.best.is_some_and(|b| b >= t)) {
                    return Flow::Stop;
                }
            }
            Mode::Exact(target) => {
                if used == *target {
                    self.found.push(snapshot.to_vec());
                }
            }
            Mode::Visit(min, visitor) => {
                if used >= *min {
                    visitor(snapshot, used);
                }
            }
        }
        Flow::Continue
    }

    fn rec(&mut self, k: usize, used: usize, on_prefix: bool) -> Flow {
        // nodes on the resume spine were already counted by the session that
        // produced the prefix; exempting them guarantees progress per session
        let on_spine = on_prefix && k < self.prefix.len();
        if !on_spine {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                self.stopped_prefix = Some(self.assignment[..k].to_vec());
                return Flow::Stop;
            }
        }
        if used + (self.m - k) < self.current_bound() {
            self.prunes += 1;
            return Flow::Continue;
        }
        if k == self.m {
            return self.complete_at(used);
        }
        let start = if on_prefix && k < self.prefix.len() {
            self.prefix[k] as usize
        } else {
            0
        };
        // existing colors in ascending order, then the fresh one: restricted
        // growth keeps the fresh digit the largest, so this is lexicographic.
        for c in start..=used {
            if c == used {
                if let Mode::Exact(target) = &self.mode {
                    if used == *target {
                        break; // a fresh color would overshoot
                    }
                }
            }
            let c = c as ColorId;
            if self.violates(k, c) {
                self.prunes += 1;
                continue;
            }
            self.assignment[k] = c;
            let child_used = used + usize::from(c as usize == used);
            let child_on_prefix = on_prefix && k < self.prefix.len() && c == self.prefix[k];
            if let Flow::Stop = self.rec(k + 1, child_used, child_on_prefix) {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    fn run(mut self) -> DfsOutcome {
        let resuming = !self.prefix.is_empty();
        let flow = self.rec(0, 0, resuming);
        let complete = matches!(flow, Flow::Continue);
        DfsOutcome {
            best: self.best,
            witness: self.witness,
            found: self.found,
            nodes: self.nodes,
            prunes: self.prunes,
            complete,
            resume_prefix: self.stopped_prefix,
        }
    }
}

/// Exhaustive maximization over all total colorings of `d` without a rainbow
/// triangle; sequential, with optional budget/resume and early stop.
pub fn maximize(d: &Digraph, controls: &DfsControls) -> DfsOutcome {
    Dfs::new(d, Mode::Maximize, controls).run()
}

/// All rainbow-free colorings of `d` with exactly `target` colors, as
/// canonical (restricted-growth) colorings in lexicographic order.
pub fn enumerate_exact(d: &Digraph, target: usize) -> Vec<ColoredDigraph> {
    let controls = DfsControls { initial_bound: target, ..Default::default() };
    let outcome = Dfs::new(d, Mode::Exact(target), &controls).run();
    outcome
        .found
        .into_iter()
        .map(|rgs| ColoredDigraph::new(d.clone(), rgs).expect("assignment is total"))
        .collect()
}

/// Visit every rainbow-free total coloring of `d` with at least `min_colors`
/// colors, in lexicographic restricted-growth order.
pub fn visit_rainbow_free(d: &Digraph, min_colors: usize, mut f: impl FnMut(&ColoredDigraph)) {
    let controls = DfsControls { initial_bound: min_colors, ..Default::default() };
    let mut visitor = |rgs: &[ColorId], _used: usize| {
        let colored =
            ColoredDigraph::new(d.clone(), rgs.to_vec()).expect("assignment is total");
        f(&colored);
    };
    Dfs::new(d, Mode::Visit(min_colors, &mut visitor), &controls).run();
}

/// Maximize with top-level branches fanned out to `jobs` worker threads.
/// The merged result (maximum plus lexicographically least witness) is
/// schedule-independent: the shared bound only cuts subtrees that cannot
/// reach the maximum, never ties.
pub fn maximize_parallel(d: &Digraph, initial_bound: usize, jobs: usize) -> DfsOutcome {
    let m = d.arc_count();
    let depth = m.min(6);
    if jobs <= 1 || depth == 0 {
        return maximize(d, &DfsControls { initial_bound, ..Default::default() });
    }

    // frontier: all rainbow-consistent restricted-growth prefixes at `depth`
    let mut frontier: Vec<(Vec<ColorId>, usize)> = vec![];
    {
        let mut collect = |rgs: &[ColorId], used: usize| frontier.push((rgs.to_vec(), used));
        let controls = DfsControls::default();
        let mut dfs = Dfs::new(d, Mode::Visit(0, &mut collect), &controls);
        dfs.m = depth; // stop the recursion at the frontier depth
        dfs.run();
    }

    let shared = AtomicUsize::new(initial_bound);
    let next = AtomicUsize::new(0);
    let workers = jobs.min(frontier.len()).max(1);
    let outcomes: Vec<DfsOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                let frontier = &frontier;
                let shared = &shared;
                let next = &next;
                scope.spawn(move || {
                    let mut merged: Option<DfsOutcome> = None;
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= frontier.len() {
                            break;
                        }
                        let (prefix, used) = &frontier[i];
                        let controls = DfsControls::default();
                        let mut dfs = Dfs::new(d, Mode::Maximize, &controls);
                        dfs.shared_bound = Some(shared);
                        dfs.bound = initial_bound;
                        dfs.assignment[..depth].copy_from_slice(prefix);
                        dfs.rec_from(depth, *used);
                        let outcome = dfs.into_outcome();
                        merged = Some(match merged.take() {
                            None => outcome,
                            Some(acc) => merge_outcomes(acc, outcome),
                        });
                    }
                    merged.unwrap_or_else(empty_outcome)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });

    let mut merged = outcomes.into_iter().reduce(merge_outcomes).unwrap_or_else(empty_outcome);
    // the frontier enumeration itself visited nodes too
    merged.nodes += frontier.len() as u64;
    merged
}

impl<'a, 'v> Dfs<'a, 'v> {
    fn rec_from(&mut self, depth: usize, used: usize) {
        self.rec(depth, used, false);
    }

    fn into_outcome(self) -> DfsOutcome {
        DfsOutcome {
            best: self.best,
            witness: self.witness,
            found: self.found,
            nodes: self.nodes,
            prunes: self.prunes,
            complete: true,
            resume_prefix: None,
        }
    }
}

fn empty_outcome() -> DfsOutcome {
    DfsOutcome {
        best: None,
        witness: None,
        found: vec![],
        nodes: 0,
        prunes: 0,
        complete: true,
        resume_prefix: None,
    }
}

fn merge_outcomes(a: DfsOutcome, b: DfsOutcome) -> DfsOutcome {
    let (best, witness) = match (a.best, b.best) {
        (None, _) => (b.best, b.witness),
        (_, None) => (a.best, a.witness),
        (Some(x), Some(y)) => {
            if x > y || (x == y && a.witness <= b.witness) {
                (a.best, a.witness)
            } else {
                (b.best, b.witness)
            }
        }
    };
    let mut found = a.found;
    found.extend(b.found);
    DfsOutcome {
        best,
        witness,
        found,
        nodes: a.nodes + b.nodes,
        prunes: a.prunes + b.prunes,
        complete: a.complete && b.complete,
        resume_prefix: a.resume_prefix.or(b.resume_prefix),
    }
}

/// The maximum color count over all rainbow-free total colorings of `d`,
/// with one witness in canonical coloring form. Exact, not heuristic.
///
/// `lower_bound_hint` must be achievable (e.g. from a verified generator);
/// it seeds the pruning bound. Instances above [`SOFT_ARC_CAP`] arcs need
/// `force`.
pub fn max_rainbow_free_colors(
    d: &Digraph,
    lower_bound_hint: Option<usize>,
    force: bool,
) -> Result<(usize, ColoredDigraph), SearchError> {
    if d.arc_count() > SOFT_ARC_CAP && !force {
        return Err(SearchError::ArcBudgetExceeded { arcs: d.arc_count(), cap: SOFT_ARC_CAP });
    }
    let controls =
        DfsControls { initial_bound: lower_bound_hint.unwrap_or(0), ..Default::default() };
    let mut outcome = maximize(d, &controls);
    if outcome.best.is_none() {
        // a hint above the true maximum suppresses every completion; redo honestly
        outcome = maximize(d, &DfsControls::default());
    }
    let value = outcome.best.expect("unbounded search always completes");
    let witness = outcome.witness.expect("witness accompanies best");
    Ok((value, ColoredDigraph::new(d.clone(), witness).expect("assignment is total")))
}
