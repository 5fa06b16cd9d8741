//! Exhaustive verification of the nesting axioms.
//!
//! Writing `L = [[A,α,B,β,C],γ,D,δ,E]`, `M = [A,α,[B,β,C,γ,D],δ,E]` and
//! `R = [A,α,B,β,[C,γ,D,δ,E]]`, the checked identities are
//!
//! * `T1`:  `M = L`
//! * `T3a`: `R = L`
//! * `T3b`: `L = M`
//!
//! `T3b` is `T1` read right to left; it is still swept on its own so each
//! report stands alone. Only the nestings above are checked: no further
//! "remaining position" identities are implied.

use std::fmt;

use crate::model::{MediatorId, StateId, Tgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    T1,
    T3a,
    T3b,
}

impl Axiom {
    pub const ALL: [Axiom; 3] = [Axiom::T1, Axiom::T3a, Axiom::T3b];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::T1 => "T1",
            Axiom::T3a => "T3a",
            Axiom::T3b => "T3b",
        }
    }

    /// The equation as text, left side first.
    pub fn equation(self) -> &'static str {
        match self {
            Axiom::T1 => "[A,α,[B,β,C,γ,D],δ,E] = [[A,α,B,β,C],γ,D,δ,E]",
            Axiom::T3a => "[A,α,B,β,[C,γ,D,δ,E]] = [[A,α,B,β,C],γ,D,δ,E]",
            Axiom::T3b => "[[A,α,B,β,C],γ,D,δ,E] = [A,α,[B,β,C,γ,D],δ,E]",
        }
    }

    fn sides(self, n: &Nestings) -> (StateId, StateId) {
        match self {
            Axiom::T1 => (n.middle, n.left),
            Axiom::T3a => (n.right, n.left),
            Axiom::T3b => (n.left, n.middle),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance `(A,α,B,β,C,γ,D,δ,E)` of the axiom quantifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AxiomInstance {
    pub a: StateId,
    pub alpha: MediatorId,
    pub b: StateId,
    pub beta: MediatorId,
    pub c: StateId,
    pub gamma: MediatorId,
    pub d: StateId,
    pub delta: MediatorId,
    pub e: StateId,
}

/// Values of the three two-level nestings of an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nestings {
    /// `[[A,α,B,β,C],γ,D,δ,E]`
    pub left: StateId,
    /// `[A,α,[B,β,C,γ,D],δ,E]`
    pub middle: StateId,
    /// `[A,α,B,β,[C,γ,D,δ,E]]`
    pub right: StateId,
}

impl AxiomInstance {
    pub fn nestings(&self, tgs: &Tgs) -> Nestings {
        let (a, al, b, be, c) = (self.a, self.alpha, self.b, self.beta, self.c);
        let (ga, d, de, e) = (self.gamma, self.d, self.delta, self.e);
        Nestings {
            left: tgs.evaluate(tgs.evaluate(a, al, b, be, c), ga, d, de, e),
            middle: tgs.evaluate(a, al, tgs.evaluate(b, be, c, ga, d), de, e),
            right: tgs.evaluate(a, al, b, be, tgs.evaluate(c, ga, d, de, e)),
        }
    }

    pub fn display<'a>(&'a self, tgs: &'a Tgs) -> impl fmt::Display + 'a {
        NamedInstance { inst: self, tgs }
    }

    fn from_raw(v: [usize; 9]) -> Self {
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
}

struct NamedInstance<'a> {
    inst: &'a AxiomInstance,
    tgs: &'a Tgs,
}

impl fmt::Display for NamedInstance<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, i) = (self.tgs, self.inst);
        write!(
            f,
            "A={} α={} B={} β={} C={} γ={} D={} δ={} E={}",
            t.state_name(i.a),
            t.mediator_name(i.alpha),
            t.state_name(i.b),
            t.mediator_name(i.beta),
            t.state_name(i.c),
            t.mediator_name(i.gamma),
            t.state_name(i.d),
            t.mediator_name(i.delta),
            t.state_name(i.e),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: AxiomInstance,
    pub lhs: StateId,
    pub rhs: StateId,
}

impl Counterexample {
    /// Re-evaluates the instance and checks the recorded sides.
    pub fn reproduces(&self, axiom: Axiom, tgs: &Tgs) -> bool {
        let (lhs, rhs) = axiom.sides(&self.instance.nestings(tgs));
        lhs == self.lhs && rhs == self.rhs && lhs != rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub holds: bool,
    /// Lexicographically first violations, at most the requested cap.
    pub counterexamples: Vec<Counterexample>,
}

/// Checks `T1`.
pub fn check_t1(tgs: &Tgs, cap: usize) -> AxiomReport {
    sweep(tgs, cap, &[Axiom::T1]).remove(0)
}

/// Checks the two `T3` identities, returning `(T3a, T3b)`.
pub fn check_t3(tgs: &Tgs, cap: usize) -> (AxiomReport, AxiomReport) {
    let mut v = sweep(tgs, cap, &[Axiom::T3a, Axiom::T3b]);
    let t3b = v.pop().unwrap();
    let t3a = v.pop().unwrap();
    (t3a, t3b)
}

/// `[T1, T3a, T3b]`.
pub fn check_all(tgs: &Tgs, cap: usize) -> Vec<AxiomReport> {
    sweep(tgs, cap, &Axiom::ALL)
}

/// Conjunction of [`check_all`].
pub fn satisfies_axioms(tgs: &Tgs) -> bool {
    check_all(tgs, 0).iter().all(|r| r.holds)
}

/// Checks `axioms` with one lexicographic sweep over all `n⁵·m⁴` instances,
/// stopping early once every axiom has enough counterexamples.
pub fn sweep(tgs: &Tgs, cap: usize, axioms: &[Axiom]) -> Vec<AxiomReport> {
    let n = tgs.state_count();
    let m = tgs.mediator_count();
    let mut reports: Vec<AxiomReport> = axioms
        .iter()
        .map(|&axiom| AxiomReport {
            axiom,
            holds: true,
            counterexamples: Vec::new(),
        })
        .collect();
    // an axiom is settled once it failed and its list is full
    let mut settled = 0;

    for a in 0..n {
        for al in 0..m {
            for b in 0..n {
                for be in 0..m {
                    for c in 0..n {
                        let abc = tgs.op(a, al, b, be, c);
                        for ga in 0..m {
                            for d in 0..n {
                                let bcd = tgs.op(b, be, c, ga, d);
                                for de in 0..m {
                                    for e in 0..n {
                                        let nest = Nestings {
                                            left: StateId(tgs.op(abc, ga, d, de, e) as u32),
                                            middle: StateId(tgs.op(a, al, bcd, de, e) as u32),
                                            right: StateId(tgs.op(
                                                a,
                                                al,
                                                b,
                                                be,
                                                tgs.op(c, ga, d, de, e),
                                            )
                                                as u32),
                                        };
                                        for r in reports.iter_mut() {
                                            let (lhs, rhs) = r.axiom.sides(&nest);
                                            if lhs == rhs {
                                                continue;
                                            }
                                            if !r.holds && r.counterexamples.len() >= cap {
                                                continue;
                                            }
                                            r.holds = false;
                                            if r.counterexamples.len() < cap {
                                                r.counterexamples.push(Counterexample {
                                                    instance: AxiomInstance::from_raw([
                                                        a, al, b, be, c, ga, d, de, e,
                                                    ]),
                                                    lhs,
                                                    rhs,
                                                });
                                            }
                                            if r.counterexamples.len() >= cap {
                                                settled += 1;
                                            }
                                        }
                                        if settled == reports.len() {
                                            return reports;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, Slot};

    #[test]
    fn left_projection_satisfies_t1() {
        let t = fixtures::projection_model(5, 3, Slot::Left).unwrap();
        assert!(check_t1(&t, 10).holds);
    }

    #[test]
    fn middle_projection_t1_counterexample() {
        let t = fixtures::projection_model(2, 1, Slot::Middle).unwrap();
        let r = check_t1(&t, 1);
        assert!(!r.holds);
        let ce = r.counterexamples[0];
        assert_ne!(ce.instance.c, ce.instance.d);
        assert_eq!(ce.lhs, ce.instance.c);
        assert_eq!(ce.rhs, ce.instance.d);
        // first lexicographic violation: everything zero except D
        assert_eq!(ce.instance.d, StateId(1));
        assert!(ce.reproduces(Axiom::T1, &t));
    }

    #[test]
    fn middle_projection_t3a_fails_with_b_vs_d() {
        for n in 2..4 {
            let t = fixtures::projection_model(n, 2, Slot::Middle).unwrap();
            let (t3a, _) = check_t3(&t, 3);
            assert!(!t3a.holds);
            for ce in &t3a.counterexamples {
                assert_eq!(ce.lhs, ce.instance.b);
                assert_eq!(ce.rhs, ce.instance.d);
            }
        }
    }

    #[test]
    fn right_projection_and_constant_satisfy_t3() {
        let t = fixtures::projection_model(4, 2, Slot::Right).unwrap();
        let (a, b) = check_t3(&t, 5);
        assert!(a.holds && b.holds);
        let t = fixtures::constant_model(3, 2, StateId(1)).unwrap();
        let (a, b) = check_t3(&t, 5);
        assert!(a.holds && b.holds);
    }

    #[test]
    fn z6_satisfies_all() {
        let t = fixtures::modular_product_model(6).unwrap();
        assert!(check_all(&t, 5).iter().all(|r| r.holds));
    }

    #[test]
    fn cap_zero_still_decides() {
        let t = fixtures::projection_model(3, 1, Slot::Middle).unwrap();
        let r = check_t1(&t, 0);
        assert!(!r.holds);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn counterexamples_sorted_and_capped() {
        let t = fixtures::projection_model(3, 2, Slot::Middle).unwrap();
        let reports = check_all(&t, 7);
        for r in &reports {
            assert_eq!(r.counterexamples.len(), 7);
            let inst: Vec<_> = r.counterexamples.iter().map(|c| c.instance).collect();
            let mut sorted = inst.clone();
            sorted.sort();
            assert_eq!(inst, sorted);
            assert!(r.counterexamples.iter().all(|c| c.reproduces(r.axiom, &t)));
        }
        assert_eq!(reports, check_all(&t, 7));
    }
}
