//! Backtracking over bijections `α: r → s` with `α([a,b]) = [α(a), α(b)]`.
//!
//! `α(0) = 0` is forced (`0 = [0,0]`). Remaining elements are assigned in a
//! fixed order that completes as many bracket constraints as possible at
//! each step; a partial map is abandoned as soon as a completed constraint
//! fails. Both ordered pairs are checked since `α` need not commute with
//! negation.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{FiniteError, FiniteLieRing, ENUMERATION_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub found: u64,
    /// False when the visitor stopped the search early.
    pub completed: bool,
}

struct Plan {
    order: Vec<usize>,
    /// Pairs `(a, b)` whose constraint becomes checkable at each depth.
    checks: Vec<Vec<(usize, usize)>>,
}

fn plan(r: &FiniteLieRing) -> Plan {
    let n = r.order();
    let mut assigned = vec![false; n];
    assigned[0] = true;
    let mut order = Vec::with_capacity(n.saturating_sub(1));
    let mut checks = Vec::with_capacity(n.saturating_sub(1));
    let completes = |assigned: &[bool], x: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..n {
            for b in 1..n {
                if a == b {
                    continue;
                }
                let c = r.bracket(a, b);
                let known = |e: usize| e == x || assigned[e];
                if (a == x || b == x || c == x) && known(a) && known(b) && known(c) {
                    out.push((a, b));
                }
            }
        }
        out
    };
    for _ in 1..n {
        let mut best: Option<(usize, Vec<(usize, usize)>)> = None;
        for x in (1..n).filter(|&x| !assigned[x]) {
            let c = completes(&assigned, x);
            if best.as_ref().is_none_or(|(_, b)| c.len() > b.len()) {
                best = Some((x, c));
            }
        }
        let (x, c) = best.expect("an unassigned element remains");
        assigned[x] = true;
        order.push(x);
        checks.push(c);
    }
    Plan { order, checks }
}

fn check_sizes(r: &FiniteLieRing, s: &FiniteLieRing) -> Result<(), FiniteError> {
    if r.order() != s.order() {
        return Err(FiniteError::OrderMismatch { left: r.order(), right: s.order() });
    }
    if r.order() > ENUMERATION_CAP {
        return Err(FiniteError::TooLarge { order: r.order(), cap: ENUMERATION_CAP });
    }
    Ok(())
}

/// Calls `visit` on every commutator-preserving bijection `r → s`, as a
/// table of images. `budget` bounds the number of search nodes.
pub fn for_each_commutator_bijection(
    r: &FiniteLieRing,
    s: &FiniteLieRing,
    budget: Option<u64>,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<SearchStats, FiniteError> {
    check_sizes(r, s)?;
    let n = r.order();
    let plan = plan(r);
    let mut image = vec![u32::MAX; n];
    let mut used = vec![false; n];
    image[0] = 0;
    used[0] = true;
    let mut stats = SearchStats { completed: true, ..SearchStats::default() };
    // Candidate cursor per depth.
    let mut next = vec![1usize; n];
    let depth_max = plan.order.len();
    if depth_max == 0 {
        stats.found = 1;
        stats.completed = visit(&[0]).is_continue();
        return Ok(stats);
    }
    let mut depth = 0usize;
    next[0] = 1;
    loop {
        let x = plan.order[depth];
        // Undo the previous choice at this depth.
        if image[x] != u32::MAX {
            used[image[x] as usize] = false;
            image[x] = u32::MAX;
        }
        let mut advanced = false;
        while next[depth] < n {
            let y = next[depth];
            next[depth] += 1;
            if used[y] {
                continue;
            }
            stats.nodes += 1;
            if budget.is_some_and(|b| stats.nodes > b) {
                return Err(FiniteError::BudgetExceeded(budget.unwrap_or(0)));
            }
            image[x] = y as u32;
            let ok =
                plan.checks[depth].iter().all(|&(a, b)| image[r.bracket(a, b)] as usize == s.bracket(image[a] as usize, image[b] as usize));
            if ok {
                used[y] = true;
                advanced = true;
                break;
            }
            image[x] = u32::MAX;
        }
        if advanced {
            if depth + 1 == depth_max {
                stats.found += 1;
                if visit(&image).is_break() {
                    stats.completed = false;
                    return Ok(stats);
                }
                // Stay at this depth and try the next candidate.
                continue;
            }
            depth += 1;
            next[depth] = 1;
            continue;
        }
        if depth == 0 {
            return Ok(stats);
        }
        depth -= 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionCount {
    pub count: u64,
    pub samples: Vec<Vec<u32>>,
    pub nodes: u64,
}

/// Number of commutator-preserving bijections `r → s`, with up to `limit` tables.
pub fn commutator_bijections(r: &FiniteLieRing, s: &FiniteLieRing, limit: usize) -> Result<BijectionCount, FiniteError> {
    let mut samples = Vec::new();
    let stats = for_each_commutator_bijection(r, s, None, |t| {
        if samples.len() < limit {
            samples.push(t.to_vec());
        }
        ControlFlow::Continue(())
    })?;
    Ok(BijectionCount { count: stats.found, samples, nodes: stats.nodes })
}

/// A commutator-preserving bijection with a pair it does not add correctly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub table: Vec<u32>,
    pub pair: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WuaReport {
    pub wua: bool,
    /// Bijections examined (all of them when `wua` holds).
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

/// Whether every commutator-preserving self-bijection of `r` is additive.
pub fn is_wua(r: &FiniteLieRing) -> Result<WuaReport, FiniteError> {
    let mut counterexample = None;
    let stats = for_each_commutator_bijection(r, r, None, |t| match r.additivity_failure(r, t) {
        Some(pair) => {
            counterexample = Some(Counterexample { table: t.to_vec(), pair });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    })?;
    Ok(WuaReport { wua: counterexample.is_none(), checked: stats.found, counterexample })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgainstReport {
    pub all_additive: bool,
    pub bijections: u64,
    pub non_additive: u64,
    pub witness: Option<Counterexample>,
}

/// Checks every commutator-preserving bijection `r → s` for additivity.
/// A non-additive one certifies that `r` is not UA; the converse needs all targets.
pub fn ua_against(r: &FiniteLieRing, s: &FiniteLieRing) -> Result<AgainstReport, FiniteError> {
    let mut witness = None;
    let mut non_additive = 0;
    let stats = for_each_commutator_bijection(r, s, None, |t| {
        if let Some(pair) = r.additivity_failure(s, t) {
            non_additive += 1;
            if witness.is_none() {
                witness = Some(Counterexample { table: t.to_vec(), pair });
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(AgainstReport { all_additive: non_additive == 0, bijections: stats.found, non_additive, witness })
}
