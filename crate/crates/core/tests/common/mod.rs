//! Brute-force oracles shared by the integration tests. Everything here loops
//! over raw tuples through `Tgs::evaluate` only; subsets are `u64` masks with
//! bit `i` standing for state `i`.

#![allow(dead_code)]

use tgs_core::{IdealKind, MediatorId, StateId, StateSet, Tgs};

pub type Mask = u64;

pub fn ev(t: &Tgs, a: usize, al: usize, b: usize, be: usize, c: usize) -> usize {
    t.evaluate(
        StateId::from(a),
        MediatorId::from(al),
        StateId::from(b),
        MediatorId::from(be),
        StateId::from(c),
    )
    .index()
}

/// Every `(A,α,B,β,C)` in lexicographic order.
pub fn tuples(t: &Tgs) -> Vec<[usize; 5]> {
    let (n, m) = (t.state_count(), t.mediator_count());
    let mut v = Vec::with_capacity(n * n * n * m * m);
    for a in 0..n {
        for al in 0..m {
            for b in 0..n {
                for be in 0..m {
                    for c in 0..n {
                        v.push([a, al, b, be, c]);
                    }
                }
            }
        }
    }
    v
}

pub fn has(mask: Mask, i: usize) -> bool {
    mask >> i & 1 == 1
}

pub fn full(n: usize) -> Mask {
    (1u64 << n) - 1
}

pub fn to_set(n: usize, mask: Mask) -> StateSet {
    StateSet::from_ids(n, (0..n).filter(|&i| has(mask, i)).map(StateId::from))
}

pub fn to_mask(s: &StateSet) -> Mask {
    s.iter().fold(0, |m, x| m | 1 << x.index())
}

/// Nonempty masks ordered lexicographically on `(b0, b1, …)`.
pub fn lex_masks(n: usize) -> Vec<Mask> {
    (1u64..1 << n)
        .map(|v| {
            (0..n)
                .filter(|&i| v >> (n - 1 - i) & 1 == 1)
                .fold(0, |m, i| m | 1 << i)
        })
        .collect()
}

pub fn constrained(kind: IdealKind, mask: Mask, [a, _, b, _, c]: [usize; 5]) -> bool {
    let (ia, ib, ic) = (has(mask, a), has(mask, b), has(mask, c));
    match kind {
        IdealKind::ReactionClosed => ia && ib && ic,
        IdealKind::Chemical => ia && ic,
        IdealKind::LeftGamma => ia,
        IdealKind::RightGamma => ic,
        IdealKind::MiddleGamma => ib,
        IdealKind::TwoSidedGamma => ia || ib || ic,
    }
}

/// First constrained tuple whose value leaves the set.
pub fn first_escape(t: &Tgs, mask: Mask, kind: IdealKind) -> Option<([usize; 5], usize)> {
    tuples(t).into_iter().find_map(|tu| {
        let d = ev(t, tu[0], tu[1], tu[2], tu[3], tu[4]);
        (constrained(kind, mask, tu) && !has(mask, d)).then_some((tu, d))
    })
}

pub fn satisfies(t: &Tgs, mask: Mask, kind: IdealKind) -> bool {
    mask != 0 && first_escape(t, mask, kind).is_none()
}

pub fn ideals(t: &Tgs, kind: IdealKind) -> Vec<Mask> {
    lex_masks(t.state_count())
        .into_iter()
        .filter(|&m| satisfies(t, m, kind))
        .collect()
}

/// Smallest `kind`-ideal containing `seed`, by scanning every superset.
pub fn minimal_ideal(t: &Tgs, seed: Mask, kind: IdealKind) -> Mask {
    let hits: Vec<Mask> = (1..=full(t.state_count()))
        .filter(|&m| m & seed == seed && satisfies(t, m, kind))
        .collect();
    let least = hits
        .iter()
        .map(|m| m.count_ones())
        .min()
        .expect("the full set is an ideal");
    let minimal: Vec<Mask> = hits
        .into_iter()
        .filter(|m| m.count_ones() == least)
        .collect();
    assert_eq!(minimal.len(), 1, "minimal ideal is unique");
    minimal[0]
}

pub fn is_prime(t: &Tgs, p: Mask) -> bool {
    satisfies(t, p, IdealKind::Chemical)
        && p != full(t.state_count())
        && tuples(t).into_iter().all(|[a, al, b, be, c]| {
            !has(p, ev(t, a, al, b, be, c)) || has(p, a) || has(p, b) || has(p, c)
        })
}

pub fn is_semiprime(t: &Tgs, i: Mask) -> bool {
    let (n, m) = (t.state_count(), t.mediator_count());
    satisfies(t, i, IdealKind::Chemical)
        && (0..n).all(|x| {
            let all_in = (0..m).all(|al| (0..m).all(|be| has(i, ev(t, x, al, x, be, x))));
            !all_in || has(i, x)
        })
}

/// `[T1, T3a, T3b]` by direct nine-fold loops.
pub fn axioms(t: &Tgs) -> [bool; 3] {
    let (n, m) = (t.state_count(), t.mediator_count());
    let mut ok = [true; 3];
    for [a, al, b, be, c] in tuples(t) {
        for ga in 0..m {
            for d in 0..n {
                for de in 0..m {
                    for e in 0..n {
                        let left = ev(t, ev(t, a, al, b, be, c), ga, d, de, e);
                        let middle = ev(t, a, al, ev(t, b, be, c, ga, d), de, e);
                        let right = ev(t, a, al, b, be, ev(t, c, ga, d, de, e));
                        ok[0] &= middle == left;
                        ok[1] &= right == left;
                        ok[2] &= left == middle;
                    }
                }
            }
        }
    }
    ok
}

/// States reachable from `sources` by repeated single applications.
pub fn reachable(t: &Tgs, sources: Mask) -> Mask {
    let edges: Vec<([usize; 5], usize)> = tuples(t)
        .into_iter()
        .map(|tu| (tu, ev(t, tu[0], tu[1], tu[2], tu[3], tu[4])))
        .collect();
    let mut seen = sources;
    loop {
        let mut next = seen;
        for ([a, _, b, _, c], d) in &edges {
            if has(seen, *a) || has(seen, *b) || has(seen, *c) {
                next |= 1 << d;
            }
        }
        if next == seen {
            return seen;
        }
        seen = next;
    }
}

pub fn is_hom(dom: &Tgs, cod: &Tgs, f: &[usize]) -> bool {
    tuples(dom)
        .into_iter()
        .all(|[a, al, b, be, c]| f[ev(dom, a, al, b, be, c)] == ev(cod, f[a], al, f[b], be, f[c]))
}

/// Every map `dom -> cod` in lexicographic order of the image vector.
pub fn all_maps(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = k.pow(n as u32);
    (0..total)
        .map(|mut v| {
            let mut f = vec![0; n];
            for i in (0..n).rev() {
                f[i] = v % k;
                v /= k;
            }
            f
        })
        .collect()
}

pub fn image(f: &[usize], mask: Mask) -> Mask {
    (0..f.len())
        .filter(|&i| has(mask, i))
        .fold(0, |m, i| m | 1 << f[i])
}

pub fn is_surjective(f: &[usize], k: usize) -> bool {
    image(f, full(f.len())) == full(k)
}

pub fn images_of(map: &tgs_core::StateMap) -> Vec<usize> {
    map.images().iter().map(|s| s.index()).collect()
}
