//! Graphviz export of the one-step successor relation.

use std::fmt::Write as _;

use crate::error::Result;
use crate::model::{StateId, Tgs};
use crate::pathways::{reachable, successors};
use crate::subset::StateSet;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Successor digraph restricted to the states reachable from `from`
/// (including `from`). Nodes and edges are emitted in state order.
pub fn successor_dot(tgs: &Tgs, from: StateId) -> Result<String> {
    let region = reachable(tgs, &StateSet::singleton(tgs.state_count(), from))?;
    let mut out = String::from("digraph successors {\n");
    for x in region.iter() {
        let _ = writeln!(out, "    {};", quote(tgs.state_name(x)));
    }
    for x in region.iter() {
        for y in successors(tgs, x).iter() {
            let _ = writeln!(
                out,
                "    {} -> {};",
                quote(tgs.state_name(x)),
                quote(tgs.state_name(y))
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}
