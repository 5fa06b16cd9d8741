//! Finite ternary Γ-semirings: a 5-ary operation `[A, α, B, β, C]` over a
//! finite set of states `S` and a finite set of mediators `Γ`.
//!
//! The crate checks the nesting axioms exhaustively, decides and generates
//! ideals of every kind, tests primeness, follows reaction pathways, works
//! with homomorphisms and searches for small models. Everything is finite and
//! decided by sweeping the operation table.

pub mod axioms;
pub mod cli;
pub mod dot;
pub mod error;
pub mod finder;
pub mod fixtures;
pub mod format;
pub mod homomorphism;
pub mod ideals;
pub mod model;
pub mod pathways;
pub mod subset;
pub mod term;

pub use axioms::{
    check_all, check_t1, check_t3, Axiom, AxiomInstance, AxiomReport, Counterexample,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use homomorphism::{is_homomorphism, StateMap};
pub use ideals::{Escape, IdealKind, PrimeFailure, Verdict};
pub use model::{Application, MediatorId, StateId, Tgs};
pub use pathways::{Pathway, PathwayStep, Slot};
pub use subset::StateSet;
pub use term::Term;
