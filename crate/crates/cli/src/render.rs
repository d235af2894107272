//! Shared output plumbing: the three formats and the exit-status mapping.

use std::fmt::Write;

use serde_json::{json, Value};
use spined::category::SpinalVerdict;
use spined::chordal::{write_pace, TreeDecomposition};
use spined::graph::Graph;
use spined::Error;

/// Why a verb stopped without producing its normal output.
#[derive(Debug)]
pub enum Failure {
    /// Unreadable or malformed input, or a flag combination that makes no
    /// sense. Exit 1.
    Input(String),
    /// Exit 2.
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Cap(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Cap(m) => m,
        }
    }
}

/// A finished verb: the same result rendered for each format. `pace` is
/// only present for verbs that emit a certificate.
pub struct Output {
    pub human: String,
    pub json: Value,
    pub pace: Option<String>,
    /// `false` when a validation or axiom check failed (exit 3).
    pub passed: bool,
}

/// Resolves `--cap` against a verb's default; caps can only be lowered.
pub fn effective_cap(requested: Option<usize>, default: usize) -> Result<usize, Failure> {
    match requested {
        Some(c) if c > default => Err(Failure::Input(format!(
            "--cap {c} is above the default of {default}; caps can only be lowered"
        ))),
        Some(c) => Ok(c),
        None => Ok(default),
    }
}

pub fn enforce_cap(what: &'static str, size: usize, cap: usize) -> Result<(), Failure> {
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap }.into());
    }
    Ok(())
}

/// The PACE structure as JSON: ids and vertices stay 1-based.
pub fn certificate_json(td: &TreeDecomposition) -> Value {
    let bags: Vec<Value> = td
        .bags
        .iter()
        .enumerate()
        .map(|(i, bag)| {
            let verts: Vec<usize> = bag.iter().map(|v| v + 1).collect();
            json!({ "id": i + 1, "vertices": verts })
        })
        .collect();
    let edges: Vec<[usize; 2]> = td.tree_edges.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    json!({
        "s": { "bags": td.bags.len(), "delta": td.delta(), "vertices": td.vertex_count },
        "bags": bags,
        "edges": edges,
    })
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

/// `key=value` pairs joined by spaces.
pub fn headline(pairs: &[(&str, String)]) -> String {
    pairs
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Output of a width verb: a headline, optional extra human lines, and the
/// certificate in all three renderings.
pub fn width_output(
    verb: &str,
    head: Vec<(&str, String)>,
    notes: Vec<String>,
    mut json: Value,
    td: &TreeDecomposition,
) -> Output {
    let line = headline(&head);
    let cert = write_pace(td);
    let mut human = format!("{line}\n");
    for note in &notes {
        let _ = writeln!(human, "{note}");
    }
    human.push_str(&cert);

    let mut pace = format!("c {line}\n");
    for note in &notes {
        let _ = writeln!(pace, "c {note}");
    }
    pace.push_str(&cert);

    json["verb"] = json!(verb);
    json["certificate"] = certificate_json(td);
    Output {
        human,
        json,
        pace: Some(pace),
        passed: true,
    }
}

pub fn optional(v: Option<usize>) -> String {
    v.map_or_else(|| "none".to_string(), |v| v.to_string())
}

pub fn verdict_json(v: &SpinalVerdict) -> Value {
    let sf1: Vec<Value> = v
        .sf1_violations
        .iter()
        .map(|s| json!({ "n": s.n, "value": s.value }))
        .collect();
    let sf2: Vec<Value> = v
        .sf2_violations
        .iter()
        .map(|s| json!({ "span": s.span, "left": s.left, "right": s.right, "apex": s.apex }))
        .collect();
    let mono: Vec<Value> = v
        .monotonicity_violations
        .iter()
        .map(|m| {
            json!({
                "span": m.span,
                "leg": format!("{:?}", m.leg),
                "source": m.source,
                "target": m.target,
            })
        })
        .collect();
    json!({
        "functor": v.functor,
        "spine_checked": v.spine_checked,
        "spans_checked": v.spans_checked,
        "passes": v.passes(),
        "sf1_violations": sf1,
        "sf2_violations": sf2,
        "monotonicity_violations": mono,
    })
}

/// One line per verdict, listing at most three violations of each kind.
pub fn verdict_line(v: &SpinalVerdict) -> String {
    let mut parts = Vec::new();
    if v.sf1_holds() {
        parts.push(format!("SF1 holds on spine 0..={}", v.spine_checked));
    } else {
        let shown: Vec<String> = v
            .sf1_violations
            .iter()
            .take(3)
            .map(|s| format!("F(spine {}) = {}", s.n, s.value))
            .collect();
        parts.push(format!(
            "SF1 fails ({} of {}: {})",
            v.sf1_violations.len(),
            v.spine_checked + 1,
            shown.join(", ")
        ));
    }
    if v.sf2_holds() {
        parts.push(format!("SF2 holds on {} spans", v.spans_checked));
    } else {
        let shown: Vec<String> = v
            .sf2_violations
            .iter()
            .take(3)
            .map(|s| {
                format!(
                    "span {}: {} vs max({}, {})",
                    s.span, s.apex, s.left, s.right
                )
            })
            .collect();
        parts.push(format!(
            "SF2 fails on {} of {} spans ({})",
            v.sf2_violations.len(),
            v.spans_checked,
            shown.join("; ")
        ));
    }
    if v.monotone() {
        parts.push("monotone".into());
    } else {
        parts.push(format!(
            "{} monotonicity violations",
            v.monotonicity_violations.len()
        ));
    }
    let status = if v.passes() { "ok  " } else { "FAIL" };
    format!("{status} {}: {}", v.functor, parts.join(", "))
}
