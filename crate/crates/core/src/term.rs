//! Nested terms such as `[A, α, [B, β, C, γ, D], δ, E]`.

use std::fmt;

use crate::model::{MediatorId, StateId, Tgs};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(StateId),
    App(Box<Term>, MediatorId, Box<Term>, MediatorId, Box<Term>),
}

impl Term {
    pub fn leaf(s: impl Into<StateId>) -> Term {
        Term::Leaf(s.into())
    }

    pub fn app(left: Term, alpha: MediatorId, mid: Term, beta: MediatorId, right: Term) -> Term {
        Term::App(Box::new(left), alpha, Box::new(mid), beta, Box::new(right))
    }

    /// Evaluates bottom-up.
    pub fn evaluate(&self, tgs: &Tgs) -> StateId {
        match self {
            Term::Leaf(s) => *s,
            Term::App(l, alpha, mid, beta, r) => {
                let (l, mid, r) = (l.evaluate(tgs), mid.evaluate(tgs), r.evaluate(tgs));
                tgs.evaluate(l, *alpha, mid, *beta, r)
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Leaf(_) => 0,
            Term::App(l, _, mid, _, r) => 1 + l.depth().max(mid.depth()).max(r.depth()),
        }
    }

    /// Leftmost leaf along the left spine.
    pub fn leftmost(&self) -> StateId {
        match self {
            Term::Leaf(s) => *s,
            Term::App(l, ..) => l.leftmost(),
        }
    }
}

impl From<StateId> for Term {
    fn from(s: StateId) -> Term {
        Term::Leaf(s)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(s) => write!(f, "{}", s.0),
            Term::App(l, alpha, mid, beta, r) => {
                write!(f, "[{l},{},{mid},{},{r}]", alpha.0, beta.0)
            }
        }
    }
}
