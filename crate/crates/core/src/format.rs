//! The `tgs v1` text format and the state-map format.
//!
//! ```text
//! tgs v1
//! states: s0 s1
//! mediators: g0
//! op:
//! s0 g0 s0 g0 s0 -> s0
//! ...
//! ```
//!
//! Body lines may come in any order but must cover every tuple exactly once.
//! `#` starts a comment; blank lines are ignored. Serialization is canonical:
//! single spaces, body sorted in flatten order, trailing newline.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::homomorphism::StateMap;
use crate::model::{cell_count, is_valid_name, StateId, Tgs};
use crate::subset::StateSet;

pub const VERSION_LINE: &str = "tgs v1";

/// Non-blank lines with comments removed, with their 1-based numbers.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn end_line(text: &str) -> usize {
    text.lines().count() + 1
}

fn declaration(
    line: Option<(usize, &str)>,
    header: &'static str,
    kind: &'static str,
    eof: usize,
) -> std::result::Result<Vec<String>, ParseError> {
    let (no, line) =
        line.ok_or_else(|| ParseError::new(eof, ParseErrorKind::UnexpectedEnd(header)))?;
    let rest = line.strip_prefix(header).ok_or_else(|| {
        ParseError::new(
            no,
            ParseErrorKind::BadHeader {
                expected: header,
                found: line.to_string(),
            },
        )
    })?;
    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    if names.is_empty() {
        return Err(ParseError::new(no, ParseErrorKind::EmptyDeclaration(kind)));
    }
    let mut seen = HashMap::new();
    for name in &names {
        if !is_valid_name(name) {
            return Err(ParseError::new(no, ParseErrorKind::BadName(name.clone())));
        }
        if seen.insert(name.as_str(), ()).is_some() {
            return Err(ParseError::new(
                no,
                ParseErrorKind::DuplicateName {
                    kind,
                    name: name.clone(),
                },
            ));
        }
    }
    Ok(names)
}

fn lookup(
    index: &HashMap<&str, u32>,
    token: &str,
    kind: &'static str,
    line: usize,
) -> std::result::Result<u32, ParseError> {
    index.get(token).copied().ok_or_else(|| {
        ParseError::new(
            line,
            ParseErrorKind::UnknownName {
                kind,
                token: token.to_string(),
            },
        )
    })
}

/// Parses a `tgs v1` document.
pub fn parse_tgs(text: &str) -> Result<Tgs> {
    let eof = end_line(text);
    let mut lines = significant_lines(text);

    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(VERSION_LINE.split_whitespace()) => {}
        Some((no, l)) => {
            return Err(ParseError::new(no, ParseErrorKind::BadVersion(l.to_string())).into())
        }
        None => return Err(ParseError::new(eof, ParseErrorKind::UnexpectedEnd("`tgs v1`")).into()),
    }
    let states = declaration(lines.next(), "states:", "state", eof)?;
    let mediators = declaration(lines.next(), "mediators:", "mediator", eof)?;
    match lines.next() {
        Some((_, "op:")) => {}
        Some((no, l)) => {
            return Err(ParseError::new(
                no,
                ParseErrorKind::BadHeader {
                    expected: "op:",
                    found: l.to_string(),
                },
            )
            .into())
        }
        None => return Err(ParseError::new(eof, ParseErrorKind::UnexpectedEnd("`op:`")).into()),
    }

    let (n, m) = (states.len(), mediators.len());
    let cells = cell_count(n, m)
        .filter(|&c| c <= 1 << 28)
        .ok_or_else(|| Error::InvalidModel("operation table too large".into()))?;
    let state_ix: HashMap<&str, u32> = states
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i as u32))
        .collect();
    let med_ix: HashMap<&str, u32> = mediators
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i as u32))
        .collect();

    // cell -> (value, defining line)
    let mut table: Vec<Option<(u32, usize)>> = vec![None; cells];
    for (no, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 7 || tok[5] != "->" {
            return Err(
                ParseError::new(no, ParseErrorKind::MalformedLine(line.to_string())).into(),
            );
        }
        let a = lookup(&state_ix, tok[0], "state", no)?;
        let al = lookup(&med_ix, tok[1], "mediator", no)?;
        let b = lookup(&state_ix, tok[2], "state", no)?;
        let be = lookup(&med_ix, tok[3], "mediator", no)?;
        let c = lookup(&state_ix, tok[4], "state", no)?;
        let d = lookup(&state_ix, tok[6], "state", no)?;
        let cell = crate::model::flatten(
            n,
            m,
            a as usize,
            al as usize,
            b as usize,
            be as usize,
            c as usize,
        );
        if let Some((_, first_line)) = table[cell] {
            return Err(ParseError::new(
                no,
                ParseErrorKind::DuplicateTuple {
                    tuple: tok[..5].join(" "),
                    first_line,
                },
            )
            .into());
        }
        table[cell] = Some((d, no));
    }
    let mut flat = Vec::with_capacity(cells);
    for (cell, entry) in table.iter().enumerate() {
        match entry {
            Some((d, _)) => flat.push(*d),
            None => {
                let app = crate::model::unflatten(n, m, cell);
                let tuple = [
                    states[app.a.index()].as_str(),
                    mediators[app.alpha.index()].as_str(),
                    states[app.b.index()].as_str(),
                    mediators[app.beta.index()].as_str(),
                    states[app.c.index()].as_str(),
                ]
                .join(" ");
                return Err(ParseError::new(eof, ParseErrorKind::MissingTuple(tuple)).into());
            }
        }
    }
    Ok(Tgs::from_raw_table(states, mediators, flat))
}

/// Canonical `tgs v1` text.
pub fn serialize_tgs(tgs: &Tgs) -> String {
    let mut out = String::new();
    out.push_str(VERSION_LINE);
    out.push('\n');
    let _ = writeln!(out, "states: {}", tgs.state_names().join(" "));
    let _ = writeln!(out, "mediators: {}", tgs.mediator_names().join(" "));
    out.push_str("op:\n");
    for (app, &d) in tgs.applications().zip(tgs.table()) {
        let _ = writeln!(
            out,
            "{} {} {} {} {} -> {}",
            tgs.state_name(app.a),
            tgs.mediator_name(app.alpha),
            tgs.state_name(app.b),
            tgs.mediator_name(app.beta),
            tgs.state_name(app.c),
            tgs.state_name(StateId(d))
        );
    }
    out
}

/// Parses `name -> name` lines, one per domain state.
pub fn parse_map(text: &str, domain: &Tgs, codomain: &Tgs) -> Result<StateMap> {
    let mut images: Vec<Option<(StateId, usize)>> = vec![None; domain.state_count()];
    for (no, line) in significant_lines(text) {
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 3 || tok[1] != "->" {
            return Err(
                ParseError::new(no, ParseErrorKind::MalformedLine(line.to_string())).into(),
            );
        }
        let unknown = |kind, token: &str| {
            ParseError::new(
                no,
                ParseErrorKind::UnknownName {
                    kind,
                    token: token.to_string(),
                },
            )
        };
        let from = domain
            .state_by_name(tok[0])
            .map_err(|_| unknown("domain state", tok[0]))?;
        let to = codomain
            .state_by_name(tok[2])
            .map_err(|_| unknown("codomain state", tok[2]))?;
        if let Some((_, first_line)) = images[from.index()] {
            return Err(ParseError::new(
                no,
                ParseErrorKind::DuplicateMapping {
                    name: tok[0].to_string(),
                    first_line,
                },
            )
            .into());
        }
        images[from.index()] = Some((to, no));
    }
    let eof = end_line(text);
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            e.map(|(s, _)| s).ok_or_else(|| {
                ParseError::new(
                    eof,
                    ParseErrorKind::MissingMapping(domain.state_name(StateId::from(i)).to_string()),
                )
            })
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    StateMap::new(domain, codomain, images)
}

pub fn serialize_map(f: &StateMap, domain: &Tgs, codomain: &Tgs) -> String {
    f.display(domain, codomain).to_string()
}

/// Parses `a,b,c` into a subset.
pub fn parse_state_list(tgs: &Tgs, list: &str) -> Result<StateSet> {
    let names: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    StateSet::from_names(tgs, names)
}
