//! Finite ternary Γ-semirings.
//!
//! A system is a finite carrier of states, a finite list of mediators and a
//! total 5-ary operation `[A, α, B, β, C] -> D`. The operation table is stored
//! flat, A-major: the cell of `(A, α, B, β, C)` is
//! `((((A·m + α)·n + B)·m + β)·n + C)` for `n` states and `m` mediators.
//! Lexicographic order of tuples and flatten order therefore coincide.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Dense index of a state in its owning system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

/// Dense index of a mediator in its owning system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MediatorId(pub u32);

impl StateId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl MediatorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for StateId {
    fn from(i: usize) -> Self {
        StateId(i as u32)
    }
}

impl From<usize> for MediatorId {
    fn from(i: usize) -> Self {
        MediatorId(i as u32)
    }
}

/// One argument tuple `(A, α, B, β, C)` of the operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Application {
    pub a: StateId,
    pub alpha: MediatorId,
    pub b: StateId,
    pub beta: MediatorId,
    pub c: StateId,
}

impl Application {
    pub fn new(a: StateId, alpha: MediatorId, b: StateId, beta: MediatorId, c: StateId) -> Self {
        Application {
            a,
            alpha,
            b,
            beta,
            c,
        }
    }

    pub(crate) fn raw(a: usize, alpha: usize, b: usize, beta: usize, c: usize) -> Self {
        Application::new(a.into(), alpha.into(), b.into(), beta.into(), c.into())
    }

    /// Renders the tuple with the names of `tgs`.
    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedApplication { app: self, tgs }
    }
}

impl fmt::Display for Application {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.a.0, self.alpha.0, self.b.0, self.beta.0, self.c.0
        )
    }
}

struct NamedApplication<'a> {
    app: &'a Application,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedApplication<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tgs;
        write!(
            f,
            "({},{},{},{},{})",
            t.state_name(self.app.a),
            t.mediator_name(self.app.alpha),
            t.state_name(self.app.b),
            t.mediator_name(self.app.beta),
            t.state_name(self.app.c)
        )
    }
}

/// A finite ternary Γ-semiring with named states and mediators.
///
/// Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tgs {
    states: Vec<String>,
    mediators: Vec<String>,
    table: Vec<u32>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "->"
        && !name.ends_with(':')
        && !name
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == ',')
}

fn check_names(kind: &str, names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::InvalidModel(format!(
            "at least one {kind} is required"
        )));
    }
    let mut seen = HashSet::new();
    for name in names {
        if !is_valid_name(name) {
            return Err(Error::InvalidModel(format!("invalid {kind} name `{name}`")));
        }
        if !seen.insert(name.as_str()) {
            return Err(Error::InvalidModel(format!(
                "duplicate {kind} name `{name}`"
            )));
        }
    }
    Ok(())
}

/// Number of table cells for `n` states and `m` mediators, if it fits in memory terms.
pub fn cell_count(n: usize, m: usize) -> Option<usize> {
    n.checked_pow(3)?.checked_mul(m.checked_mul(m)?)
}

impl Tgs {
    /// Builds a system from names and a flat table in flatten order.
    pub fn new(states: Vec<String>, mediators: Vec<String>, table: Vec<StateId>) -> Result<Self> {
        check_names("state", &states)?;
        check_names("mediator", &mediators)?;
        let n = states.len();
        let expected = cell_count(n, mediators.len())
            .ok_or_else(|| Error::InvalidModel("operation table too large".into()))?;
        if table.len() != expected {
            return Err(Error::InvalidModel(format!(
                "operation table has {} entries, expected {expected}",
                table.len()
            )));
        }
        if let Some(pos) = table.iter().position(|d| d.index() >= n) {
            return Err(Error::InvalidModel(format!(
                "table entry {pos} refers to state {} of {n}",
                table[pos].0
            )));
        }
        Ok(Tgs {
            states,
            mediators,
            table: table.into_iter().map(|d| d.0).collect(),
        })
    }

    /// Builds a system by evaluating `op` on every tuple.
    pub fn from_fn<F>(states: Vec<String>, mediators: Vec<String>, mut op: F) -> Result<Self>
    where
        F: FnMut(Application) -> StateId,
    {
        let n = states.len();
        let m = mediators.len();
        let total = cell_count(n, m)
            .ok_or_else(|| Error::InvalidModel("operation table too large".into()))?;
        let table = (0..total).map(|i| op(unflatten(n, m, i))).collect();
        Tgs::new(states, mediators, table)
    }

    pub(crate) fn from_raw_table(
        states: Vec<String>,
        mediators: Vec<String>,
        table: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(Some(table.len()), cell_count(states.len(), mediators.len()));
        Tgs {
            states,
            mediators,
            table,
        }
    }

    #[inline]
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    #[inline]
    pub fn mediator_count(&self) -> usize {
        self.mediators.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn mediator_names(&self) -> &[String] {
        &self.mediators
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.states[s.index()]
    }

    pub fn mediator_name(&self, g: MediatorId) -> &str {
        &self.mediators[g.index()]
    }

    pub fn state_by_name(&self, name: &str) -> Result<StateId> {
        self.states
            .iter()
            .position(|s| s == name)
            .map(StateId::from)
            .ok_or_else(|| Error::UnknownName {
                kind: "state",
                name: name.to_string(),
            })
    }

    pub fn mediator_by_name(&self, name: &str) -> Result<MediatorId> {
        self.mediators
            .iter()
            .position(|s| s == name)
            .map(MediatorId::from)
            .ok_or_else(|| Error::UnknownName {
                kind: "mediator",
                name: name.to_string(),
            })
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> + Clone {
        (0..self.state_count()).map(StateId::from)
    }

    pub fn mediators(&self) -> impl Iterator<Item = MediatorId> + Clone {
        (0..self.mediator_count()).map(MediatorId::from)
    }

    /// The raw table in flatten order.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Evaluates `[a, α, b, β, c]`.
    ///
    /// Panics if an id does not belong to this system.
    #[inline]
    pub fn evaluate(
        &self,
        a: StateId,
        alpha: MediatorId,
        b: StateId,
        beta: MediatorId,
        c: StateId,
    ) -> StateId {
        let (n, m) = (self.state_count(), self.mediator_count());
        assert!(
            a.index() < n && b.index() < n && c.index() < n,
            "state id out of range for a system with {n} states"
        );
        assert!(
            alpha.index() < m && beta.index() < m,
            "mediator id out of range for a system with {m} mediators"
        );
        StateId(
            self.table
                [self.flatten_raw(a.index(), alpha.index(), b.index(), beta.index(), c.index())],
        )
    }

    #[inline]
    pub fn apply(&self, app: Application) -> StateId {
        self.evaluate(app.a, app.alpha, app.b, app.beta, app.c)
    }

    /// Unchecked-by-type evaluation on raw indices, for inner loops.
    #[inline]
    pub(crate) fn op(&self, a: usize, alpha: usize, b: usize, beta: usize, c: usize) -> usize {
        self.table[self.flatten_raw(a, alpha, b, beta, c)] as usize
    }

    #[inline]
    fn flatten_raw(&self, a: usize, alpha: usize, b: usize, beta: usize, c: usize) -> usize {
        flatten(
            self.state_count(),
            self.mediator_count(),
            a,
            alpha,
            b,
            beta,
            c,
        )
    }

    /// Table cell of a tuple.
    pub fn cell(&self, app: Application) -> usize {
        self.flatten_raw(
            app.a.index(),
            app.alpha.index(),
            app.b.index(),
            app.beta.index(),
            app.c.index(),
        )
    }

    /// Tuple stored at a table cell.
    pub fn application(&self, cell: usize) -> Application {
        assert!(cell < self.table.len(), "cell {cell} out of range");
        unflatten(self.state_count(), self.mediator_count(), cell)
    }

    /// All tuples in lexicographic (= flatten) order.
    pub fn applications(&self) -> impl Iterator<Item = Application> + '_ {
        (0..self.table.len()).map(move |i| self.application(i))
    }

    /// Same operation, different names.
    pub fn relabel(&self, states: Vec<String>, mediators: Vec<String>) -> Result<Self> {
        if states.len() != self.state_count() || mediators.len() != self.mediator_count() {
            return Err(Error::InvalidModel(
                "relabeling must keep carrier sizes".into(),
            ));
        }
        check_names("state", &states)?;
        check_names("mediator", &mediators)?;
        Ok(Tgs {
            states,
            mediators,
            table: self.table.clone(),
        })
    }
}

#[inline]
pub(crate) fn flatten(
    n: usize,
    m: usize,
    a: usize,
    alpha: usize,
    b: usize,
    beta: usize,
    c: usize,
) -> usize {
    (((a * m + alpha) * n + b) * m + beta) * n + c
}

pub(crate) fn unflatten(n: usize, m: usize, mut i: usize) -> Application {
    let c = i % n;
    i /= n;
    let beta = i % m;
    i /= m;
    let b = i % n;
    i /= n;
    let alpha = i % m;
    let a = i / m;
    Application::raw(a, alpha, b, beta, c)
}

/// Names `prefix0 .. prefix{k-1}`.
pub fn indexed_names(prefix: &str, k: usize) -> Vec<String> {
    (0..k).map(|i| format!("{prefix}{i}")).collect()
}
