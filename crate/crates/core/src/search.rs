//! Bounded bidirectional breadth-first search over a symmetric rewriting
//! system, returning a replayable path of moves.

use std::hash::Hash;

use indexmap::IndexSet;
use serde::Serialize;

/// A rewriting system whose one-step relation is symmetric: whenever
/// `from -> to` by some move, `to -> from` by [`RewriteSystem::reverse`].
pub trait RewriteSystem {
    type State: Clone + Eq + Hash + Ord;
    type Move: Clone;

    /// Appends every admissible one-step successor of `state` to `out`, in a
    /// deterministic order.
    fn successors(&self, state: &Self::State, out: &mut Vec<(Self::Move, Self::State)>);

    /// Given `from --mv--> to`, the move taking `to` back to `from`.
    fn reverse(&self, from: &Self::State, mv: &Self::Move, to: &Self::State) -> Self::Move;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// States stored on both sides when the search stopped.
    pub states: usize,
    /// Largest BFS layer seen on either side.
    pub frontier_peak: usize,
    /// One side ran out of states: no path exists within the admissible set.
    pub exhausted: bool,
}

#[derive(Debug, Clone)]
pub struct SearchResult<M> {
    /// Moves from source to target, when a path was found.
    pub path: Option<Vec<M>>,
    pub stats: SearchStats,
}

struct Side<S, M> {
    visited: IndexSet<S>,
    parent: Vec<Option<(usize, M)>>,
    frontier: Vec<usize>,
}

impl<S: Clone + Eq + Hash, M: Clone> Side<S, M> {
    fn new(root: S) -> Self {
        let mut visited = IndexSet::new();
        visited.insert(root);
        Side {
            visited,
            parent: vec![None],
            frontier: vec![0],
        }
    }

    /// Moves from the root down to `idx`, in expansion direction.
    fn chain(&self, mut idx: usize) -> Vec<(usize, usize, M)> {
        let mut out = Vec::new();
        while let Some((p, mv)) = &self.parent[idx] {
            out.push((*p, idx, mv.clone()));
            idx = *p;
        }
        out.reverse();
        out
    }
}

/// Searches for a path from `source` to `target`, storing at most
/// `max_states` states over both directions.
///
/// Layers are expanded whole, always on the side with the smaller frontier;
/// ties go to the side whose root is smaller. Swapping source and target
/// therefore mirrors the run exactly and gives the same outcome.
pub fn bidirectional_search<R: RewriteSystem>(
    system: &R,
    source: &R::State,
    target: &R::State,
    max_states: usize,
) -> SearchResult<R::Move> {
    if source == target {
        return SearchResult {
            path: Some(Vec::new()),
            stats: SearchStats {
                states: 1,
                frontier_peak: 1,
                exhausted: false,
            },
        };
    }
    let mut fwd: Side<R::State, R::Move> = Side::new(source.clone());
    let mut bwd: Side<R::State, R::Move> = Side::new(target.clone());
    let mut stats = SearchStats {
        states: 2,
        frontier_peak: 1,
        exhausted: false,
    };
    let mut buf = Vec::new();

    loop {
        if fwd.frontier.is_empty() || bwd.frontier.is_empty() {
            stats.exhausted = true;
            return SearchResult { path: None, stats };
        }
        let forward = match fwd.frontier.len().cmp(&bwd.frontier.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => source < target,
        };
        let (this, other) = if forward {
            (&mut fwd, &bwd)
        } else {
            (&mut bwd, &fwd)
        };

        let layer = std::mem::take(&mut this.frontier);
        let mut next = Vec::new();
        for &idx in &layer {
            buf.clear();
            let state = this.visited.get_index(idx).unwrap().clone();
            system.successors(&state, &mut buf);
            for (mv, succ) in buf.drain(..) {
                if this.visited.contains(&succ) {
                    continue;
                }
                if let Some(meet) = other.visited.get_index_of(&succ) {
                    let path = if forward {
                        join(system, &fwd, idx, Some(mv), &bwd, meet)
                    } else {
                        // bwd: state --mv--> succ, so forward the step is succ -> state.
                        let step = system.reverse(&state, &mv, &succ);
                        join(system, &fwd, meet, Some(step), &bwd, idx)
                    };
                    stats.states = fwd.visited.len() + bwd.visited.len();
                    return SearchResult {
                        path: Some(path),
                        stats,
                    };
                }
                let (new_idx, _) = this.visited.insert_full(succ);
                this.parent.push(Some((idx, mv)));
                next.push(new_idx);
                stats.states += 1;
                if stats.states >= max_states {
                    stats.frontier_peak = stats.frontier_peak.max(next.len());
                    return SearchResult { path: None, stats };
                }
            }
        }
        stats.frontier_peak = stats.frontier_peak.max(next.len());
        this.frontier = next;
    }
}

/// Forward chain to `f_idx`, the bridging move, then the backward chain from
/// `b_idx` replayed towards the target.
fn join<R: RewriteSystem>(
    system: &R,
    fwd: &Side<R::State, R::Move>,
    f_idx: usize,
    bridge: Option<R::Move>,
    bwd: &Side<R::State, R::Move>,
    b_idx: usize,
) -> Vec<R::Move> {
    let mut path: Vec<R::Move> = fwd.chain(f_idx).into_iter().map(|(_, _, m)| m).collect();
    path.extend(bridge);
    for (p, c, mv) in bwd.chain(b_idx).into_iter().rev() {
        let from = bwd.visited.get_index(p).unwrap();
        let to = bwd.visited.get_index(c).unwrap();
        path.push(system.reverse(from, &mv, to));
    }
    path
}
