//! Finite model search for the nesting axioms.
//!
//! Tables are filled cell by cell in flatten order. After each assignment the
//! axiom instances that mention the new cell (as an inner or an outer
//! application) are re-checked, but only those whose every referenced cell is
//! already assigned; a failing instance prunes the branch. Every instance
//! becomes fully evaluable exactly when its last referenced cell is filled, so
//! a complete table that survives has passed every instance.
//!
//! Counts are of labeled tables: no isomorphism reduction is applied.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::axioms::{Axiom, AxiomInstance};
use crate::error::{Error, Result};
use crate::model::{cell_count, flatten, indexed_names, unflatten, Tgs};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Count,
    Emit,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub states: usize,
    pub mediators: usize,
    pub mode: SearchMode,
    pub seed: u64,
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(states: usize, mediators: usize, mode: SearchMode) -> Self {
        SearchSpec {
            states,
            mediators,
            mode,
            seed: 0,
            budget: DEFAULT_BUDGET,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.states == 0 || self.mediators == 0 {
            return Err(Error::InvalidArgument(
                "model search needs at least one state and one mediator".into(),
            ));
        }
        if self.budget == 0 {
            return Err(Error::InvalidArgument(
                "search budget must be positive".into(),
            ));
        }
        if !cell_count(self.states, self.mediators).is_some_and(|c| c <= u32::MAX as usize) {
            return Err(Error::TooLarge {
                what: "operation table",
                size: (self.states as u128).pow(3) * (self.mediators as u128).pow(2),
                limit: u32::MAX as u128,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Count(u64),
    Models(Vec<Tgs>),
    Sample(Option<Tgs>),
}

pub fn run(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    match spec.mode {
        SearchMode::Count => {
            count_models(spec.states, spec.mediators, spec.budget).map(SearchOutcome::Count)
        }
        SearchMode::Emit => {
            enumerate_models(spec.states, spec.mediators, spec.budget).map(SearchOutcome::Models)
        }
        SearchMode::Sample => sample_model(spec.states, spec.mediators, spec.seed, spec.budget)
            .map(SearchOutcome::Sample),
    }
}

/// Wraps a finished table with the finder's naming scheme (`s0…`, `g0…`).
pub fn model_from_table(n: usize, m: usize, table: Vec<u32>) -> Tgs {
    Tgs::from_raw_table(indexed_names("s", n), indexed_names("g", m), table)
}

pub fn count_models(n: usize, m: usize, budget: u64) -> Result<u64> {
    visit_models(n, m, budget, |_| true)
}

pub fn enumerate_models(n: usize, m: usize, budget: u64) -> Result<Vec<Tgs>> {
    let mut out = Vec::new();
    visit_models(n, m, budget, |t| {
        out.push(model_from_table(n, m, t.to_vec()));
        true
    })?;
    Ok(out)
}

/// Streams every model table in lexicographic order until `visit` returns
/// `false`. Returns the number of models visited.
pub fn visit_models<F>(n: usize, m: usize, budget: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&[u32]) -> bool,
{
    SearchSpec::new(n, m, SearchMode::Count).validate()?;
    let mut s = Search::new(n, m, budget);
    match s.dfs(0, &mut Order::Natural, &mut |t| visit(t)) {
        Stop::Exhausted | Stop::Visitor => Ok(s.found),
        Stop::Budget | Stop::Restart => Err(Error::BudgetExhausted {
            budget,
            found: s.found,
        }),
    }
}

/// Seeded random restarts with the same pruning. Deterministic in
/// `(seed, budget)`; returns `None` when the budget runs out or the space is
/// provably empty.
pub fn sample_model(n: usize, m: usize, seed: u64, budget: u64) -> Result<Option<Tgs>> {
    SearchSpec::new(n, m, SearchMode::Sample).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = Search::new(n, m, budget);
    for restart in 0u32.. {
        s.restart_limit = Some(s.nodes.saturating_add(64u64 << restart.min(32)));
        let mut found = None;
        let stop = s.dfs(0, &mut Order::Shuffled(&mut rng), &mut |t| {
            found = Some(t.to_vec());
            false
        });
        match stop {
            Stop::Visitor => return Ok(found.map(|t| model_from_table(n, m, t))),
            Stop::Exhausted | Stop::Budget => return Ok(None),
            Stop::Restart => s.reset(),
        }
    }
    unreachable!()
}

/// A pruned partial table together with the instance that failed on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pruning {
    /// Values of the assigned prefix of the table, in flatten order.
    pub prefix: Vec<u32>,
    pub instance: AxiomInstance,
    pub axiom: Axiom,
}

/// Like [`visit_models`] but also reports every pruning decision.
pub fn visit_models_traced<F, P>(
    n: usize,
    m: usize,
    budget: u64,
    mut visit: F,
    on_prune: P,
) -> Result<u64>
where
    F: FnMut(&[u32]) -> bool,
    P: FnMut(Pruning),
{
    SearchSpec::new(n, m, SearchMode::Count).validate()?;
    let mut s = Search::new(n, m, budget);
    s.trace = Some(Box::new(on_prune));
    match s.dfs(0, &mut Order::Natural, &mut |t| visit(t)) {
        Stop::Exhausted | Stop::Visitor => Ok(s.found),
        Stop::Budget | Stop::Restart => Err(Error::BudgetExhausted {
            budget,
            found: s.found,
        }),
    }
}

enum Order<'r> {
    Natural,
    Shuffled(&'r mut ChaCha8Rng),
}

#[derive(Debug, PartialEq, Eq)]
enum Stop {
    Exhausted,
    Visitor,
    Budget,
    Restart,
}

struct Search<'p> {
    n: usize,
    m: usize,
    table: Vec<u32>,
    assigned: usize,
    by_value: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
    restart_limit: Option<u64>,
    found: u64,
    trace: Option<Box<dyn FnMut(Pruning) + 'p>>,
}

impl<'p> Search<'p> {
    fn new(n: usize, m: usize, budget: u64) -> Self {
        let cells = cell_count(n, m).expect("validated size");
        Search {
            n,
            m,
            table: vec![0; cells],
            assigned: 0,
            by_value: vec![Vec::new(); n],
            nodes: 0,
            budget,
            restart_limit: None,
            found: 0,
            trace: None,
        }
    }

    fn reset(&mut self) {
        self.assigned = 0;
        self.by_value.iter_mut().for_each(Vec::clear);
    }

    fn dfs(
        &mut self,
        k: usize,
        order: &mut Order<'_>,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Stop {
        if k == self.table.len() {
            self.found += 1;
            return if visit(&self.table) {
                Stop::Exhausted
            } else {
                Stop::Visitor
            };
        }
        let mut values: Vec<u32> = (0..self.n as u32).collect();
        if let Order::Shuffled(rng) = order {
            values.shuffle(*rng);
        }
        for v in values {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Stop::Budget;
            }
            if self.restart_limit.is_some_and(|l| self.nodes > l) {
                return Stop::Restart;
            }
            self.table[k] = v;
            self.assigned = k + 1;
            self.by_value[v as usize].push(k);
            let ok = match self.violation(k) {
                None => true,
                Some((instance, axiom)) => {
                    if let Some(trace) = self.trace.as_mut() {
                        trace(Pruning {
                            prefix: self.table[..=k].to_vec(),
                            instance,
                            axiom,
                        });
                    }
                    false
                }
            };
            let stop = if ok {
                self.dfs(k + 1, order, visit)
            } else {
                Stop::Exhausted
            };
            self.by_value[v as usize].pop();
            self.assigned = k;
            if stop != Stop::Exhausted {
                return stop;
            }
        }
        Stop::Exhausted
    }

    #[inline]
    fn idx(&self, a: usize, al: usize, b: usize, be: usize, c: usize) -> usize {
        flatten(self.n, self.m, a, al, b, be, c)
    }

    #[inline]
    fn get(&self, i: usize) -> Option<usize> {
        (i < self.assigned).then(|| self.table[i] as usize)
    }

    /// Checks one instance with whatever is assigned so far.
    fn check(&self, v: [usize; 9]) -> Option<Axiom> {
        let [a, al, b, be, c, ga, d, de, e] = v;
        let left = self
            .get(self.idx(a, al, b, be, c))
            .and_then(|x| self.get(self.idx(x, ga, d, de, e)));
        left?;
        let middle = self
            .get(self.idx(b, be, c, ga, d))
            .and_then(|x| self.get(self.idx(a, al, x, de, e)));
        if middle.is_some() && middle != left {
            return Some(Axiom::T1);
        }
        let right = self
            .get(self.idx(c, ga, d, de, e))
            .and_then(|x| self.get(self.idx(a, al, b, be, x)));
        if right.is_some() && right != left {
            return Some(Axiom::T3a);
        }
        None
    }

    /// First failing instance among those mentioning cell `k`.
    fn violation(&self, k: usize) -> Option<(AxiomInstance, Axiom)> {
        let (n, m) = (self.n, self.m);
        let app = unflatten(n, m, k);
        let (p, q, r, s, t) = (
            app.a.index(),
            app.alpha.index(),
            app.b.index(),
            app.beta.index(),
            app.c.index(),
        );
        let mut hit = None;
        let mut try_inst = |v: [usize; 9]| -> bool {
            if let Some(ax) = self.check(v) {
                hit = Some((instance(v), ax));
                true
            } else {
                false
            }
        };

        // k as an inner application
        for x in 0..n {
            for g1 in 0..m {
                for y in 0..n {
                    for g2 in 0..m {
                        if try_inst([p, q, r, s, t, g1, x, g2, y])
                            || try_inst([x, g1, p, q, r, s, t, g2, y])
                            || try_inst([x, g1, y, g2, p, q, r, s, t])
                        {
                            return hit;
                        }
                    }
                }
            }
        }
        // k as an outer application: the inner cell must currently hold the
        // state k has in the corresponding argument position
        for &j in &self.by_value[p] {
            let i = unflatten(n, m, j);
            let (a, al, b, be, c) = (
                i.a.index(),
                i.alpha.index(),
                i.b.index(),
                i.beta.index(),
                i.c.index(),
            );
            if try_inst([a, al, b, be, c, q, r, s, t]) {
                return hit;
            }
        }
        for &j in &self.by_value[r] {
            let i = unflatten(n, m, j);
            let (b, be, c, ga, d) = (
                i.a.index(),
                i.alpha.index(),
                i.b.index(),
                i.beta.index(),
                i.c.index(),
            );
            if try_inst([p, q, b, be, c, ga, d, s, t]) {
                return hit;
            }
        }
        for &j in &self.by_value[t] {
            let i = unflatten(n, m, j);
            let (c, ga, d, de, e) = (
                i.a.index(),
                i.alpha.index(),
                i.b.index(),
                i.beta.index(),
                i.c.index(),
            );
            if try_inst([p, q, r, s, c, ga, d, de, e]) {
                return hit;
            }
        }
        None
    }
}

fn instance(v: [usize; 9]) -> AxiomInstance {
    AxiomInstance {
        a: v[0].into(),
        alpha: v[1].into(),
        b: v[2].into(),
        beta: v[3].into(),
        c: v[4].into(),
        gamma: v[5].into(),
        d: v[6].into(),
        delta: v[7].into(),
        e: v[8].into(),
    }
}
