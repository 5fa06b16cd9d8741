//! Structure-preserving maps between two systems over one mediator list.

use std::fmt;

use crate::error::{Error, Result};
use crate::finder;
use crate::ideals::{self, Escape, IdealKind, Verdict};
use crate::model::{Application, StateId, Tgs};
use crate::subset::StateSet;

/// Default node budget for [`enumerate_homomorphisms`].
pub const DEFAULT_HOM_BUDGET: u64 = 10_000_000;

/// A total map from the states of one system to the states of another.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateMap {
    images: Vec<StateId>,
}

/// Mediator lists equal in names and order.
pub fn shares_mediators(a: &Tgs, b: &Tgs) -> bool {
    a.mediator_names() == b.mediator_names()
}

fn check_shared(a: &Tgs, b: &Tgs) -> Result<()> {
    if shares_mediators(a, b) {
        Ok(())
    } else {
        Err(Error::MediatorMismatch)
    }
}

impl StateMap {
    pub fn new(domain: &Tgs, codomain: &Tgs, images: Vec<StateId>) -> Result<Self> {
        check_shared(domain, codomain)?;
        if images.len() != domain.state_count() {
            return Err(Error::InvalidArgument(format!(
                "map has {} entries for {} domain states",
                images.len(),
                domain.state_count()
            )));
        }
        if let Some(bad) = images.iter().find(|s| s.index() >= codomain.state_count()) {
            return Err(Error::InvalidArgument(format!(
                "image {} outside a codomain of {} states",
                bad.0,
                codomain.state_count()
            )));
        }
        Ok(StateMap { images })
    }

    pub fn identity(tgs: &Tgs) -> Self {
        StateMap {
            images: tgs.states().collect(),
        }
    }

    pub fn images(&self) -> &[StateId] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, s: StateId) -> StateId {
        self.images[s.index()]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &StateMap) -> StateMap {
        StateMap {
            images: self.images.iter().map(|&s| then.apply(s)).collect(),
        }
    }

    pub fn image(&self, set: &StateSet, codomain: &Tgs) -> StateSet {
        StateSet::from_ids(codomain.state_count(), set.iter().map(|s| self.apply(s)))
    }

    pub fn is_surjective(&self, codomain: &Tgs) -> bool {
        StateSet::from_ids(codomain.state_count(), self.images.iter().copied()).is_full()
    }

    pub fn display<'a>(&'a self, domain: &'a Tgs, codomain: &'a Tgs) -> impl fmt::Display + 'a {
        NamedMap {
            f: self,
            domain,
            codomain,
        }
    }
}

struct NamedMap<'a> {
    f: &'a StateMap,
    domain: &'a Tgs,
    codomain: &'a Tgs,
}

impl fmt::Display for NamedMap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.domain.states() {
            writeln!(
                f,
                "{} -> {}",
                self.domain.state_name(s),
                self.codomain.state_name(self.f.apply(s))
            )?;
        }
        Ok(())
    }
}

/// A tuple on which `f([A,α,B,β,C]) ≠ [f(A),α,f(B),β,f(C)]′`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomViolation {
    pub app: Application,
    /// `f([A,α,B,β,C])`
    pub mapped: StateId,
    /// `[f(A),α,f(B),β,f(C)]′`
    pub expected: StateId,
}

/// Checks the homomorphism identity on every tuple, reporting the
/// lexicographically first violation.
pub fn is_homomorphism(
    domain: &Tgs,
    codomain: &Tgs,
    f: &StateMap,
) -> Result<Verdict<HomViolation>> {
    check_shared(domain, codomain)?;
    if f.images.len() != domain.state_count() {
        return Err(Error::InvalidArgument(
            "map length does not match the domain".into(),
        ));
    }
    for app in domain.applications() {
        let mapped = f.apply(domain.apply(app));
        let expected = codomain.evaluate(
            f.apply(app.a),
            app.alpha,
            f.apply(app.b),
            app.beta,
            f.apply(app.c),
        );
        if mapped != expected {
            return Ok(Verdict::Fails(HomViolation {
                app,
                mapped,
                expected,
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// All homomorphisms in lexicographic order of their image arrays.
pub fn enumerate_homomorphisms(domain: &Tgs, codomain: &Tgs) -> Result<Vec<StateMap>> {
    enumerate_homomorphisms_with_budget(domain, codomain, DEFAULT_HOM_BUDGET)
}

/// Backtracking search: states are assigned in index order, candidates tried in
/// index order, and every tuple whose states `A, B, C` and result `D` are all
/// assigned is checked as soon as the last of them gets its image.
pub fn enumerate_homomorphisms_with_budget(
    domain: &Tgs,
    codomain: &Tgs,
    budget: u64,
) -> Result<Vec<StateMap>> {
    let mut out = Vec::new();
    visit_homomorphisms(domain, codomain, budget, |f| {
        out.push(f.clone());
        true
    })?;
    Ok(out)
}

/// Streams homomorphisms to `visit` until it returns `false`.
pub fn visit_homomorphisms<F>(domain: &Tgs, codomain: &Tgs, budget: u64, mut visit: F) -> Result<()>
where
    F: FnMut(&StateMap) -> bool,
{
    check_shared(domain, codomain)?;
    let n = domain.state_count();
    // tuples grouped by the largest state index they mention
    let mut due: Vec<Vec<(Application, StateId)>> = vec![Vec::new(); n];
    for app in domain.applications() {
        let d = domain.apply(app);
        let k = app.a.max(app.b).max(app.c).max(d);
        due[k.index()].push((app, d));
    }
    let mut search = HomSearch {
        codomain,
        due,
        images: vec![StateId(0); n],
        nodes: 0,
        budget,
        found: 0,
    };
    search.extend(0, &mut visit)?;
    Ok(())
}

struct HomSearch<'a> {
    codomain: &'a Tgs,
    due: Vec<Vec<(Application, StateId)>>,
    images: Vec<StateId>,
    nodes: u64,
    budget: u64,
    found: u64,
}

impl HomSearch<'_> {
    /// Returns `Ok(false)` when the visitor asked to stop.
    fn extend<F>(&mut self, k: usize, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&StateMap) -> bool,
    {
        if k == self.images.len() {
            self.found += 1;
            let f = StateMap {
                images: self.images.clone(),
            };
            return Ok(visit(&f));
        }
        for v in self.codomain.states() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExhausted {
                    budget: self.budget,
                    found: self.found,
                });
            }
            self.images[k] = v;
            if self.consistent(k) && !self.extend(k + 1, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn consistent(&self, k: usize) -> bool {
        let f = |s: StateId| self.images[s.index()];
        self.due[k].iter().all(|&(app, d)| {
            f(d) == self
                .codomain
                .evaluate(f(app.a), app.alpha, f(app.b), app.beta, f(app.c))
        })
    }
}

/// Measured outcome of pushing a subset through a map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageReport {
    pub input_holds: bool,
    pub image_holds: bool,
    pub surjective: bool,
    pub image: StateSet,
    /// Failure witness for the image, when it fails.
    pub image_escape: Option<Escape>,
}

/// Computes `f(X)` and decides `kind` on both `X` and `f(X)`.
pub fn check_image_preservation(
    domain: &Tgs,
    codomain: &Tgs,
    f: &StateMap,
    set: &StateSet,
    kind: IdealKind,
) -> Result<ImageReport> {
    check_shared(domain, codomain)?;
    let input = ideals::satisfies(domain, set, kind)?;
    let image = f.image(set, codomain);
    let out = ideals::satisfies(codomain, &image, kind)?;
    Ok(ImageReport {
        input_holds: input.holds(),
        image_holds: out.holds(),
        surjective: f.is_surjective(codomain),
        image,
        image_escape: out.witness().copied(),
    })
}

/// Bounds and filters for [`find_image_counterexample`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageSearch {
    pub max_states: usize,
    pub max_mediators: usize,
    pub kind: IdealKind,
    pub surjective_only: bool,
    /// Node budget for each model enumeration.
    pub model_budget: u64,
}

impl Default for ImageSearch {
    fn default() -> Self {
        ImageSearch {
            max_states: 3,
            max_mediators: 1,
            kind: IdealKind::Chemical,
            surjective_only: false,
            model_budget: finder::DEFAULT_BUDGET,
        }
    }
}

/// A homomorphism and a `kind`-ideal whose image is not a `kind`-ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageCounterexample {
    pub domain: Tgs,
    pub codomain: Tgs,
    pub map: StateMap,
    pub set: StateSet,
    pub image: StateSet,
    pub escape: Escape,
}

impl ImageCounterexample {
    /// Stable text rendering.
    pub fn report(&self) -> String {
        let mut s = String::new();
        s.push_str("domain:\n");
        s.push_str(&crate::format::serialize_tgs(&self.domain));
        s.push_str("codomain:\n");
        s.push_str(&crate::format::serialize_tgs(&self.codomain));
        s.push_str("map:\n");
        s.push_str(&self.map.display(&self.domain, &self.codomain).to_string());
        s.push_str(&format!("ideal: {}\n", self.set.display(&self.domain)));
        s.push_str(&format!("image: {}\n", self.image.display(&self.codomain)));
        s.push_str(&format!(
            "escape: {}\n",
            self.escape.display(&self.codomain)
        ));
        s
    }
}

/// Searches model pairs `(S, S′)` from the model finder, all homomorphisms
/// between them and all `kind`-ideals `I` of `S` for the first case where
/// `f(I)` is not a `kind`-ideal of `S′`.
///
/// Order: mediator count, then domain size, then codomain size, then models
/// in finder order, homomorphisms in lexicographic order, ideals in
/// lexicographic bit-vector order.
pub fn find_image_counterexample(search: &ImageSearch) -> Result<Option<ImageCounterexample>> {
    for m in 1..=search.max_mediators {
        let by_size: Vec<Vec<Tgs>> = (1..=search.max_states)
            .map(|n| finder::enumerate_models(n, m, search.model_budget))
            .collect::<Result<_>>()?;
        for domains in &by_size {
            for codomains in &by_size {
                for domain in domains {
                    let sets = ideals::enumerate_ideals(domain, search.kind)?;
                    for codomain in codomains {
                        if let Some(found) = scan_pair(domain, codomain, &sets, search)? {
                            return Ok(Some(found));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

fn scan_pair(
    domain: &Tgs,
    codomain: &Tgs,
    sets: &[StateSet],
    search: &ImageSearch,
) -> Result<Option<ImageCounterexample>> {
    if search.surjective_only && codomain.state_count() > domain.state_count() {
        return Ok(None);
    }
    let mut found = None;
    let mut failure = None;
    visit_homomorphisms(domain, codomain, DEFAULT_HOM_BUDGET, |f| {
        if search.surjective_only && !f.is_surjective(codomain) {
            return true;
        }
        for set in sets {
            match check_image_preservation(domain, codomain, f, set, search.kind) {
                Ok(report) if !report.image_holds => {
                    found = Some(ImageCounterexample {
                        domain: domain.clone(),
                        codomain: codomain.clone(),
                        map: f.clone(),
                        set: set.clone(),
                        escape: report.image_escape.expect("failing image has a witness"),
                        image: report.image,
                    });
                    return false;
                }
                Ok(_) => {}
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
            }
        }
        true
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}
