//! Reference systems.
//!
//! The chemistry-flavoured toys are relabelings of modular product models, so
//! their axiom status follows from commutativity of multiplication; only the
//! names carry the narrative.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{indexed_names, StateId, Tgs};

/// Argument position returned by a projection model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Left,
    Middle,
    Right,
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Slot::Left),
            "middle" => Ok(Slot::Middle),
            "right" => Ok(Slot::Right),
            _ => Err(Error::InvalidArgument(format!(
                "unknown projection slot `{s}`"
            ))),
        }
    }
}

/// `[A,α,B,β,C]` is the state in `slot`. States `s0…`, mediators `g0…`.
pub fn projection_model(n: usize, m: usize, slot: Slot) -> Result<Tgs> {
    Tgs::from_fn(
        indexed_names("s", n),
        indexed_names("g", m),
        |t| match slot {
            Slot::Left => t.a,
            Slot::Middle => t.b,
            Slot::Right => t.c,
        },
    )
}

/// Every entry equals `c`.
pub fn constant_model(n: usize, m: usize, c: StateId) -> Result<Tgs> {
    if c.index() >= n {
        return Err(Error::InvalidArgument(format!(
            "constant {} outside {n} states",
            c.0
        )));
    }
    Tgs::from_fn(indexed_names("s", n), indexed_names("g", m), |_| c)
}

/// `S = Γ = Z_k`, `[A,α,B,β,C] = A·α·B·β·C mod k`. States and mediators are
/// both named `S0 … S{k-1}`.
pub fn modular_product_model(k: usize) -> Result<Tgs> {
    scaled_product(
        k,
        indexed_names("S", k),
        indexed_names("S", k),
        &(0..k as u64).collect::<Vec<_>>(),
    )
}

/// Z_k product where mediator `i` acts as the residue `weights[i]`.
fn scaled_product(
    k: usize,
    states: Vec<String>,
    mediators: Vec<String>,
    weights: &[u64],
) -> Result<Tgs> {
    if k == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    let k64 = k as u64;
    Tgs::from_fn(states, mediators, |t| {
        let v = t.a.0 as u64
            * weights[t.alpha.index()]
            * t.b.0 as u64
            * weights[t.beta.index()]
            * t.c.0 as u64;
        StateId((v % k64) as u32)
    })
}

/// Z₄ product with mediators `uncat` (acts as 1) and `cat` (acts as 3).
pub fn catalysis_toy() -> Result<Tgs> {
    scaled_product(4, indexed_names("S", 4), names(&["uncat", "cat"]), &[1, 3])
}

/// Z₃ product with mediators `T1p1` (acts as 1) and `T2p2` (acts as 2), one
/// per temperature/pressure regime.
pub fn thermo_toy() -> Result<Tgs> {
    scaled_product(3, indexed_names("S", 3), names(&["T1p1", "T2p2"]), &[1, 2])
}

/// Z₄ product with mediators `lowfreq` (acts as 1) and `highfreq` (acts as 3).
pub fn field_toy() -> Result<Tgs> {
    scaled_product(
        4,
        indexed_names("S", 4),
        names(&["lowfreq", "highfreq"]),
        &[1, 3],
    )
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A named reference system.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub tgs: Tgs,
}

/// Builds a fixture from its CLI name:
///
/// * `left:N,M`, `middle:N,M`, `right:N,M`: projection models
/// * `constant:N,M,C`: constant model with value `s{C}`
/// * `modular:K`: Z_K product
/// * `catalysis`, `thermo`, `field`: the toys
pub fn by_name(name: &str) -> Result<Tgs> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, a),
        None => (name, ""),
    };
    let nums = || -> Result<Vec<usize>> {
        args.split(',')
            .map(|x| {
                x.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidArgument(format!("bad fixture argument `{x}` in `{name}`"))
                })
            })
            .collect()
    };
    let arity = |v: &Vec<usize>, k: usize| -> Result<()> {
        if v.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "fixture `{head}` takes {k} arguments"
            )))
        }
    };
    match head {
        "left" | "middle" | "right" => {
            let v = nums()?;
            arity(&v, 2)?;
            projection_model(v[0], v[1], head.parse()?)
        }
        "constant" => {
            let v = nums()?;
            arity(&v, 3)?;
            constant_model(v[0], v[1], StateId::from(v[2]))
        }
        "modular" => {
            let v = nums()?;
            arity(&v, 1)?;
            modular_product_model(v[0])
        }
        "catalysis" if args.is_empty() => catalysis_toy(),
        "thermo" if args.is_empty() => thermo_toy(),
        "field" if args.is_empty() => field_toy(),
        _ => Err(Error::InvalidArgument(format!("unknown fixture `{name}`"))),
    }
}

/// Fixture names used throughout the test suites; every one satisfies the
/// axioms except `middle:2,1`.
pub const CATALOGUE: [&str; 8] = [
    "left:5,3",
    "right:4,2",
    "constant:6,2,0",
    "modular:6",
    "catalysis",
    "thermo",
    "field",
    "middle:2,1",
];

pub fn catalogue() -> Vec<Fixture> {
    CATALOGUE
        .iter()
        .map(|&name| Fixture {
            name: name.to_string(),
            tgs: by_name(name).expect("catalogue fixtures are valid"),
        })
        .collect()
}
