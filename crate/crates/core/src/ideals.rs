//! Reaction-closed sets, chemical ideals and Γ-ideals.
//!
//! Every kind is an absorption law of the same shape: for each tuple
//! `(A, α, B, β, C)` whose members satisfy a positional condition, the result
//! `[A, α, B, β, C]` must lie in the set. The conditions are
//!
//! | kind            | tuple is constrained when |
//! |-----------------|---------------------------|
//! | reaction-closed | `A, B, C ∈ X`             |
//! | chemical        | `A, C ∈ X`                |
//! | left Γ          | `A ∈ X`                   |
//! | right Γ         | `C ∈ X`                   |
//! | middle Γ        | `B ∈ X`                   |
//! | two-sided Γ     | `A ∈ X` or `B ∈ X` or `C ∈ X` |
//!
//! The chemical condition is boundary absorption; internal closure is the
//! special case `B ∈ X` and is not checked separately. All conditions are
//! monotone in `X`, so the least superset satisfying one exists and is found
//! by iterating to a fixpoint.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{Application, StateId, Tgs};
use crate::subset::{nonempty_subsets, StateSet};

/// Largest carrier [`enumerate_ideals`] accepts by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealKind {
    ReactionClosed,
    Chemical,
    LeftGamma,
    RightGamma,
    MiddleGamma,
    TwoSidedGamma,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] = [
        IdealKind::ReactionClosed,
        IdealKind::Chemical,
        IdealKind::LeftGamma,
        IdealKind::RightGamma,
        IdealKind::MiddleGamma,
        IdealKind::TwoSidedGamma,
    ];

    pub fn is_gamma(self) -> bool {
        matches!(
            self,
            IdealKind::LeftGamma
                | IdealKind::RightGamma
                | IdealKind::MiddleGamma
                | IdealKind::TwoSidedGamma
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::ReactionClosed => "reaction-closed",
            IdealKind::Chemical => "chemical",
            IdealKind::LeftGamma => "left",
            IdealKind::RightGamma => "right",
            IdealKind::MiddleGamma => "middle",
            IdealKind::TwoSidedGamma => "two-sided",
        }
    }

    #[inline]
    fn constrains(self, set: &StateSet, a: usize, b: usize, c: usize) -> bool {
        match self {
            IdealKind::ReactionClosed => {
                set.contains_raw(a) && set.contains_raw(b) && set.contains_raw(c)
            }
            IdealKind::Chemical => set.contains_raw(a) && set.contains_raw(c),
            IdealKind::LeftGamma => set.contains_raw(a),
            IdealKind::RightGamma => set.contains_raw(c),
            IdealKind::MiddleGamma => set.contains_raw(b),
            IdealKind::TwoSidedGamma => {
                set.contains_raw(a) || set.contains_raw(b) || set.contains_raw(c)
            }
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown ideal kind `{s}`")))
    }
}

/// A constrained tuple whose result lies outside the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Escape {
    pub app: Application,
    pub result: StateId,
}

impl fmt::Display for Escape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.app, self.result.0)
    }
}

impl Escape {
    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedEscape { e: self, tgs }
    }
}

struct NamedEscape<'a> {
    e: &'a Escape,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedEscape<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}",
            self.e.app.display(self.tgs),
            self.tgs.state_name(self.e.result)
        )
    }
}

/// Outcome of a decision procedure: either the property holds or a witness
/// of failure is returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(o: Option<W>) -> Self {
        match o {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

/// Lexicographically first constrained tuple whose result escapes `set`.
fn first_escape(tgs: &Tgs, set: &StateSet, kind: IdealKind) -> Option<Escape> {
    let (n, m) = (tgs.state_count(), tgs.mediator_count());
    for a in 0..n {
        for al in 0..m {
            for b in 0..n {
                for be in 0..m {
                    for c in 0..n {
                        if !kind.constrains(set, a, b, c) {
                            continue;
                        }
                        let d = tgs.op(a, al, b, be, c);
                        if !set.contains_raw(d) {
                            return Some(Escape {
                                app: Application::raw(a, al, b, be, c),
                                result: d.into(),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Decides `set` against the law of `kind`.
pub fn satisfies(tgs: &Tgs, set: &StateSet, kind: IdealKind) -> Result<Verdict<Escape>> {
    set.check_nonempty(tgs)?;
    Ok(first_escape(tgs, set, kind).into())
}

pub fn is_reaction_closed(tgs: &Tgs, set: &StateSet) -> Result<Verdict<Escape>> {
    satisfies(tgs, set, IdealKind::ReactionClosed)
}

pub fn is_chemical_ideal(tgs: &Tgs, set: &StateSet) -> Result<Verdict<Escape>> {
    satisfies(tgs, set, IdealKind::Chemical)
}

/// Left, right, middle or two-sided Γ-ideal test.
pub fn is_gamma_ideal(tgs: &Tgs, set: &StateSet, kind: IdealKind) -> Result<Verdict<Escape>> {
    if !kind.is_gamma() {
        return Err(Error::WrongKind {
            kind,
            expected: "a gamma-ideal kind (left, right, middle, two-sided)",
        });
    }
    satisfies(tgs, set, kind)
}

/// Least superset of `seed` satisfying the law of `kind`.
pub fn generate_ideal(tgs: &Tgs, seed: &StateSet, kind: IdealKind) -> Result<StateSet> {
    seed.check_nonempty(tgs)?;
    let (n, m) = (tgs.state_count(), tgs.mediator_count());
    let mut current = seed.clone();
    loop {
        let mut next = current.clone();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !kind.constrains(&current, a, b, c) {
                        continue;
                    }
                    for al in 0..m {
                        for be in 0..m {
                            next.insert(StateId::from(tgs.op(a, al, b, be, c)));
                        }
                    }
                }
            }
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// All nonempty subsets satisfying `kind`, in lexicographic bit-vector order.
pub fn enumerate_ideals(tgs: &Tgs, kind: IdealKind) -> Result<Vec<StateSet>> {
    enumerate_ideals_with_limit(tgs, kind, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_ideals_with_limit(
    tgs: &Tgs,
    kind: IdealKind,
    max_states: usize,
) -> Result<Vec<StateSet>> {
    let n = tgs.state_count();
    if n > max_states.min(63) {
        return Err(Error::TooLarge {
            what: "carrier for ideal enumeration (use generate_ideal instead)",
            size: n as u128,
            limit: max_states.min(63) as u128,
        });
    }
    Ok(nonempty_subsets(n)
        .filter(|s| first_escape(tgs, s, kind).is_none())
        .collect())
}

/// Why a subset is not prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeFailure {
    NotChemicalIdeal(Escape),
    NotProper,
    /// A tuple with result inside the set and all three states outside.
    Factors(Escape),
}

impl PrimeFailure {
    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedPrimeFailure { p: self, tgs }
    }
}

struct NamedPrimeFailure<'a> {
    p: &'a PrimeFailure,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedPrimeFailure<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            PrimeFailure::NotChemicalIdeal(e) => {
                write!(f, "not a chemical ideal: {} escapes", e.display(self.tgs))
            }
            PrimeFailure::NotProper => f.write_str("not proper: the set is the whole carrier"),
            PrimeFailure::Factors(e) => write!(
                f,
                "{} lands inside with no argument inside",
                e.display(self.tgs)
            ),
        }
    }
}

/// Prime test. Ideal-ness and properness are checked, not assumed.
pub fn is_prime(tgs: &Tgs, set: &StateSet) -> Result<Verdict<PrimeFailure>> {
    set.check_nonempty(tgs)?;
    if let Some(e) = first_escape(tgs, set, IdealKind::Chemical) {
        return Ok(Verdict::Fails(PrimeFailure::NotChemicalIdeal(e)));
    }
    if set.is_full() {
        return Ok(Verdict::Fails(PrimeFailure::NotProper));
    }
    let (n, m) = (tgs.state_count(), tgs.mediator_count());
    for a in (0..n).filter(|&a| !set.contains_raw(a)) {
        for al in 0..m {
            for b in (0..n).filter(|&b| !set.contains_raw(b)) {
                for be in 0..m {
                    for c in (0..n).filter(|&c| !set.contains_raw(c)) {
                        let d = tgs.op(a, al, b, be, c);
                        if set.contains_raw(d) {
                            return Ok(Verdict::Fails(PrimeFailure::Factors(Escape {
                                app: Application::raw(a, al, b, be, c),
                                result: d.into(),
                            })));
                        }
                    }
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Semiprime test. The witness is the smallest state outside the set whose
/// self-interactions `[A,α,A,β,A]` all lie inside it.
pub fn is_semiprime(tgs: &Tgs, set: &StateSet) -> Result<Verdict<StateId>> {
    set.check_nonempty(tgs)?;
    if let Some(e) = first_escape(tgs, set, IdealKind::Chemical) {
        return Err(Error::NotChemicalIdeal(e));
    }
    let m = tgs.mediator_count();
    let hidden = (0..tgs.state_count())
        .filter(|&a| !set.contains_raw(a))
        .find(|&a| (0..m).all(|al| (0..m).all(|be| set.contains_raw(tgs.op(a, al, a, be, a)))));
    Ok(hidden.map(StateId::from).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Slot};
    use crate::model::MediatorId;

    fn set(n: usize, ids: &[u32]) -> StateSet {
        StateSet::from_ids(n, ids.iter().map(|&i| StateId(i)))
    }

    fn z6() -> Tgs {
        fixtures::modular_product_model(6).unwrap()
    }

    #[test]
    fn empty_subset_is_rejected_everywhere() {
        let t = z6();
        let e = StateSet::empty(6);
        assert_eq!(is_reaction_closed(&t, &e), Err(Error::EmptySubset));
        assert_eq!(is_chemical_ideal(&t, &e), Err(Error::EmptySubset));
        assert_eq!(
            is_gamma_ideal(&t, &e, IdealKind::LeftGamma),
            Err(Error::EmptySubset)
        );
        assert_eq!(
            generate_ideal(&t, &e, IdealKind::Chemical),
            Err(Error::EmptySubset)
        );
        assert_eq!(is_prime(&t, &e), Err(Error::EmptySubset));
        assert_eq!(is_semiprime(&t, &e), Err(Error::EmptySubset));
    }

    #[test]
    fn subset_of_wrong_size_is_rejected() {
        let t = z6();
        assert!(matches!(
            is_chemical_ideal(&t, &set(5, &[0])),
            Err(Error::SubsetSizeMismatch {
                expected: 6,
                found: 5
            })
        ));
    }

    #[test]
    fn wrong_kind_for_gamma_test() {
        let t = z6();
        assert!(matches!(
            is_gamma_ideal(&t, &set(6, &[0]), IdealKind::Chemical),
            Err(Error::WrongKind { .. })
        ));
    }

    #[test]
    fn left_projection_everything_closed() {
        let t = fixtures::projection_model(4, 2, Slot::Left).unwrap();
        for s in nonempty_subsets(4) {
            assert!(is_reaction_closed(&t, &s).unwrap().holds());
            assert!(is_chemical_ideal(&t, &s).unwrap().holds());
            assert!(is_gamma_ideal(&t, &s, IdealKind::LeftGamma)
                .unwrap()
                .holds());
            let right = is_gamma_ideal(&t, &s, IdealKind::RightGamma).unwrap();
            assert_eq!(right.holds(), s.is_full());
            if let Verdict::Fails(w) = right {
                assert!(!s.contains(w.app.a));
                assert_eq!(w.result, w.app.a);
            }
        }
    }

    #[test]
    fn z6_reaction_closed_examples() {
        let t = z6();
        assert!(is_reaction_closed(&t, &set(6, &[0, 3])).unwrap().holds());
        let v = is_reaction_closed(&t, &set(6, &[1])).unwrap();
        // first escape: 1*0*1*0*1 = 0
        let w = *v.witness().unwrap();
        assert_eq!(w.app, Application::raw(1, 0, 1, 0, 1));
        assert_eq!(w.result, StateId(0));
        // the tuple (1,2,1,1,1) also escapes, to 2
        assert_eq!(t.apply(Application::raw(1, 2, 1, 1, 1)), StateId(2));
    }

    #[test]
    fn z6_chemical_examples() {
        let t = z6();
        assert!(is_chemical_ideal(&t, &set(6, &[0])).unwrap().holds());
        assert!(!is_chemical_ideal(&t, &set(6, &[1])).unwrap().holds());
        assert!(
            is_gamma_ideal(&t, &set(6, &[0, 2, 4]), IdealKind::TwoSidedGamma)
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn generate_is_identity_on_ideals() {
        let t = z6();
        let i = set(6, &[0, 2, 4]);
        for kind in IdealKind::ALL {
            assert_eq!(generate_ideal(&t, &i, kind).unwrap(), i, "{kind}");
        }
    }

    #[test]
    fn generate_left_projection_two_sided_is_everything() {
        let t = fixtures::projection_model(4, 2, Slot::Left).unwrap();
        let g = generate_ideal(&t, &set(4, &[2]), IdealKind::TwoSidedGamma).unwrap();
        assert!(g.is_full());
    }

    #[test]
    fn enumeration_limit() {
        let t = fixtures::projection_model(17, 1, Slot::Left).unwrap();
        assert!(matches!(
            enumerate_ideals(&t, IdealKind::Chemical),
            Err(Error::TooLarge { .. })
        ));
        let t = fixtures::projection_model(4, 1, Slot::Left).unwrap();
        assert!(matches!(
            enumerate_ideals_with_limit(&t, IdealKind::Chemical, 3),
            Err(Error::TooLarge { .. })
        ));
        assert_eq!(enumerate_ideals(&t, IdealKind::Chemical).unwrap().len(), 15);
    }

    #[test]
    fn prime_examples() {
        let t = fixtures::projection_model(4, 2, Slot::Left).unwrap();
        for s in nonempty_subsets(4) {
            let v = is_prime(&t, &s).unwrap();
            if s.is_full() {
                assert_eq!(v, Verdict::Fails(PrimeFailure::NotProper));
            } else {
                assert!(v.holds());
            }
        }

        let t = z6();
        let v = is_prime(&t, &set(6, &[0, 2, 4])).unwrap();
        let Verdict::Fails(PrimeFailure::Factors(w)) = v else {
            panic!("expected a factorization witness, got {v:?}");
        };
        assert_eq!(w.app, Application::raw(1, 0, 1, 0, 1));
        assert_eq!(t.apply(w.app), w.result);
        // the hand-computed witness (1,2,1,1,1) -> 2 is a violation too
        let hand = Application::new(
            StateId(1),
            MediatorId(2),
            StateId(1),
            MediatorId(1),
            StateId(1),
        );
        assert_eq!(t.apply(hand), StateId(2));

        assert!(matches!(
            is_prime(&t, &set(6, &[1])).unwrap(),
            Verdict::Fails(PrimeFailure::NotChemicalIdeal(_))
        ));
    }

    #[test]
    fn semiprime_examples() {
        let t = fixtures::projection_model(3, 2, Slot::Left).unwrap();
        for s in nonempty_subsets(3) {
            assert!(is_semiprime(&t, &s).unwrap().holds());
        }
        let t = z6();
        assert!(matches!(
            is_semiprime(&t, &set(6, &[1])),
            Err(Error::NotChemicalIdeal(_))
        ));
        // brute-force verdict for {0} in Z6: no state outside has every self-interaction equal to 0
        let oracle =
            (1..6u32).any(|a| (0..6u32).all(|al| (0..6u32).all(|be| a * al * a * be * a % 6 == 0)));
        assert_eq!(is_semiprime(&t, &set(6, &[0])).unwrap().holds(), !oracle);
    }

    #[test]
    fn semiprime_witness_in_constant_model() {
        // constant 0: {0} is a chemical ideal and every state self-interacts into 0
        let t = fixtures::constant_model(3, 1, StateId(0)).unwrap();
        assert_eq!(
            is_semiprime(&t, &set(3, &[0])).unwrap(),
            Verdict::Fails(StateId(1))
        );
    }

    #[test]
    fn kind_names_round_trip() {
        for k in IdealKind::ALL {
            assert_eq!(k.name().parse::<IdealKind>().unwrap(), k);
        }
        assert!("bogus".parse::<IdealKind>().is_err());
    }
}
