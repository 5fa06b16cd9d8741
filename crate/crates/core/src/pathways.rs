//! Reaction pathways: one-step successors, reachability and witnessed search.
//!
//! A step takes the previous state `X` and produces one of
//! `[X,α,A,β,B]`, `[A,α,X,β,B]` or `[A,α,B,β,X]` with arbitrary companions
//! `A, B ∈ S` and mediators `α, β ∈ Γ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{self, IdealKind, Verdict};
use crate::model::{Application, MediatorId, StateId, Tgs};
use crate::subset::StateSet;

/// Argument position occupied by the previous state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    PrevLeft,
    PrevMiddle,
    PrevRight,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::PrevLeft, Slot::PrevMiddle, Slot::PrevRight];

    fn place(
        self,
        prev: usize,
        x: usize,
        alpha: usize,
        y: usize,
        beta: usize,
    ) -> (usize, usize, usize, usize, usize) {
        match self {
            Slot::PrevLeft => (prev, alpha, x, beta, y),
            Slot::PrevMiddle => (x, alpha, prev, beta, y),
            Slot::PrevRight => (x, alpha, y, beta, prev),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathwayStep {
    pub slot: Slot,
    /// The two companion states, in argument order.
    pub companions: (StateId, StateId),
    pub mediators: (MediatorId, MediatorId),
    pub result: StateId,
}

impl PathwayStep {
    /// The full argument tuple of this step given its predecessor.
    pub fn application(&self, prev: StateId) -> Application {
        let (a, al, b, be, c) = self.slot.place(
            prev.index(),
            self.companions.0.index(),
            self.mediators.0.index(),
            self.companions.1.index(),
            self.mediators.1.index(),
        );
        Application::raw(a, al, b, be, c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pathway {
    pub source: StateId,
    pub steps: Vec<PathwayStep>,
}

impl Pathway {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn target(&self) -> StateId {
        self.steps.last().map_or(self.source, |s| s.result)
    }

    /// `X₀, X₁, …, Xₙ`.
    pub fn states(&self) -> Vec<StateId> {
        std::iter::once(self.source)
            .chain(self.steps.iter().map(|s| s.result))
            .collect()
    }

    /// Re-evaluates every step against `tgs`.
    pub fn validate(&self, tgs: &Tgs) -> bool {
        let n = tgs.state_count();
        let m = tgs.mediator_count();
        if self.steps.is_empty() || self.source.index() >= n {
            return false;
        }
        let mut prev = self.source;
        for step in &self.steps {
            let ids_ok = step.companions.0.index() < n
                && step.companions.1.index() < n
                && step.mediators.0.index() < m
                && step.mediators.1.index() < m;
            if !ids_ok || tgs.apply(step.application(prev)) != step.result {
                return false;
            }
            prev = step.result;
        }
        true
    }

    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedPathway { p: self, tgs }
    }
}

struct NamedPathway<'a> {
    p: &'a Pathway,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedPathway<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut prev = self.p.source;
        for (k, step) in self.p.steps.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "step {}: [{}] = {}",
                k + 1,
                ApplicationArgs(step.application(prev), self.tgs),
                self.tgs.state_name(step.result)
            )?;
            prev = step.result;
        }
        Ok(())
    }
}

struct ApplicationArgs<'a>(Application, &'a Tgs);

impl fmt::Display for ApplicationArgs<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (app, t) = (self.0, self.1);
        write!(
            f,
            "{},{},{},{},{}",
            t.state_name(app.a),
            t.mediator_name(app.alpha),
            t.state_name(app.b),
            t.mediator_name(app.beta),
            t.state_name(app.c)
        )
    }
}

/// Calls `f` for every step out of `prev`, in (slot, first companion, α,
/// second companion, β) order.
fn for_each_step(
    tgs: &Tgs,
    prev: usize,
    mut f: impl FnMut(Slot, usize, usize, usize, usize, usize) -> bool,
) {
    let (n, m) = (tgs.state_count(), tgs.mediator_count());
    for slot in Slot::ALL {
        for x in 0..n {
            for al in 0..m {
                for y in 0..n {
                    for be in 0..m {
                        let (a, al2, b, be2, c) = slot.place(prev, x, al, y, be);
                        if !f(slot, x, al, y, be, tgs.op(a, al2, b, be2, c)) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// States reachable from `x` in exactly one step.
pub fn successors(tgs: &Tgs, x: StateId) -> StateSet {
    assert!(x.index() < tgs.state_count(), "state id out of range");
    let mut out = StateSet::empty(tgs.state_count());
    for_each_step(tgs, x.index(), |_, _, _, _, _, d| {
        out.insert(StateId::from(d));
        !out.is_full()
    });
    out
}

/// Least superset of `sources` closed under [`successors`].
pub fn reachable(tgs: &Tgs, sources: &StateSet) -> Result<StateSet> {
    sources.check_nonempty(tgs)?;
    let mut seen = sources.clone();
    let mut frontier: Vec<StateId> = sources.iter().collect();
    while let Some(x) = frontier.pop() {
        for y in successors(tgs, x).iter() {
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

/// Shortest pathway of length `1..=max_len` from `source` to `target`.
///
/// Breadth-first; each state is reached through the first step found when the
/// previous layer is scanned in increasing state order, with steps ordered as
/// in [`PathwayStep`] field order. The result is therefore deterministic.
pub fn find_pathway(
    tgs: &Tgs,
    source: StateId,
    target: StateId,
    max_len: usize,
) -> Result<Option<Pathway>> {
    let n = tgs.state_count();
    if source.index() >= n || target.index() >= n {
        return Err(Error::InvalidArgument("state id out of range".into()));
    }
    if max_len == 0 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    // parent[y] = (predecessor, step) for states reached at depth >= 1
    let mut parent: Vec<Option<(StateId, PathwayStep)>> = vec![None; n];
    let mut layer = vec![source];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for &prev in &layer {
            for_each_step(tgs, prev.index(), |slot, x, al, y, be, d| {
                if parent[d].is_none() {
                    parent[d] = Some((
                        prev,
                        PathwayStep {
                            slot,
                            companions: (x.into(), y.into()),
                            mediators: (al.into(), be.into()),
                            result: d.into(),
                        },
                    ));
                    next.push(StateId::from(d));
                }
                true
            });
        }
        if parent[target.index()].is_some() {
            return Ok(Some(unwind(&parent, source, target)));
        }
        if next.is_empty() {
            break;
        }
        next.sort();
        layer = next;
    }
    Ok(None)
}

fn unwind(parent: &[Option<(StateId, PathwayStep)>], source: StateId, target: StateId) -> Pathway {
    // every state whose recorded predecessor is the source was found in the
    // first layer, so the walk back stops the first time it meets the source
    let mut steps = Vec::new();
    let mut at = target;
    loop {
        let (prev, step) = parent[at.index()].expect("reached states have parents");
        steps.push(step);
        if prev == source {
            break;
        }
        at = prev;
    }
    steps.reverse();
    Pathway { source, steps }
}

/// Why trapping failed: a member of the ideal reaches a state outside it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrapEscape {
    pub from: StateId,
    pub reached: StateId,
}

/// Checks that nothing reachable from a two-sided Γ-ideal leaves it.
pub fn verify_trapping(tgs: &Tgs, set: &StateSet) -> Result<Verdict<TrapEscape>> {
    if let Verdict::Fails(e) = ideals::is_gamma_ideal(tgs, set, IdealKind::TwoSidedGamma)? {
        return Err(Error::NotTwoSidedIdeal(e));
    }
    for x in set.iter() {
        let r = reachable(tgs, &StateSet::singleton(tgs.state_count(), x))?;
        let escaped = r.iter().find(|y| !set.contains(*y));
        if let Some(y) = escaped {
            return Ok(Verdict::Fails(TrapEscape {
                from: x,
                reached: y,
            }));
        }
    }
    Ok(Verdict::Holds)
}
