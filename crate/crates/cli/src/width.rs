//! The width verbs and `validate`.

use serde_json::json;
use spined::chordal::{parse_pace, treewidth_dp, validate_tree_decomposition, DP_CAP};
use spined::complement::complemented_decomposition;
use spined::graph::io::parse_edge_list;
use spined::graph::{complement, Graph};
use spined::hypergraph::{hypergraph_treewidth, parse_hypergraph};
use spined::induced::{
    chromatic_treewidth, modular_treewidth, quotient_graph, Labeling, QuotientWidth, PARTITION_CAP,
};

use crate::render::{
    effective_cap, enforce_cap, graph_json, optional, width_output, Failure, Output,
};

fn read_graph(text: &str, cap: Option<usize>, default: usize) -> Result<Graph, Failure> {
    let g = parse_edge_list(text)?;
    enforce_cap("graph vertices", g.n(), effective_cap(cap, default)?)?;
    Ok(g)
}

pub fn tw(text: &str, cap: Option<usize>) -> Result<Output, Failure> {
    let g = read_graph(text, cap, DP_CAP)?;
    let r = treewidth_dp(&g)?;
    let json = json!({ "width": r.tw(), "delta": r.delta, "ordering": r.ordering });
    Ok(width_output(
        "tw",
        vec![("tw", optional(r.tw())), ("delta", r.delta.to_string())],
        Vec::new(),
        json,
        &r.decomposition,
    ))
}

pub fn hytw(text: &str, cap: Option<usize>) -> Result<Output, Failure> {
    let h = parse_hypergraph(text)?;
    enforce_cap("hypergraph vertices", h.n(), effective_cap(cap, DP_CAP)?)?;
    let r = hypergraph_treewidth(&h)?;
    let json = json!({ "width": r.tw(), "delta": r.delta, "ordering": r.ordering });
    Ok(width_output(
        "hytw",
        vec![("hytw", optional(r.tw())), ("delta", r.delta.to_string())],
        Vec::new(),
        json,
        &r.decomposition,
    ))
}

/// Tree-width of the complement; the certificate decomposes the complement.
pub fn ctw(text: &str, cap: Option<usize>) -> Result<Output, Failure> {
    let g = read_graph(text, cap, DP_CAP)?;
    let r = complemented_decomposition(&g)?;
    let json = json!({
        "width": r.tw(),
        "delta": r.delta,
        "complement": graph_json(&complement(&g)),
    });
    Ok(width_output(
        "ctw",
        vec![("ctw", optional(r.tw())), ("delta", r.delta.to_string())],
        vec!["certificate decomposes the complement".into()],
        json,
        &r.decomposition,
    ))
}

fn labels_text(lab: &Labeling) -> String {
    lab.labels()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Headline and certificate for a quotient width: the certificate decomposes
/// `G/f` for the witness labeling `f`.
fn quotient_output(
    verb: &'static str,
    best: &QuotientWidth,
    notes: Vec<String>,
    mut json: serde_json::Value,
) -> Result<Output, Failure> {
    let q = quotient_graph(&best.witness);
    let r = treewidth_dp(&q)?;
    let head = vec![
        (verb, best.value.to_string()),
        ("delta", r.delta.to_string()),
        ("classes", best.witness.classes().to_string()),
        ("labels", labels_text(&best.witness)),
    ];
    json["width"] = json!(best.value);
    json["delta"] = json!(r.delta);
    json["labels"] = json!(best.witness.labels());
    json["quotient"] = graph_json(&q);
    let mut notes = notes;
    notes.push("certificate decomposes the quotient by labels".into());
    Ok(width_output(verb, head, notes, json, &r.decomposition))
}

pub fn mtw(text: &str, cap: Option<usize>) -> Result<Output, Failure> {
    let g = read_graph(text, cap, PARTITION_CAP)?;
    let m = modular_treewidth(&g)?;
    let json = json!({
        "with_trivial": { "width": m.with_trivial.value, "labels": m.with_trivial.witness.labels() },
    });
    quotient_output(
        "mtw",
        &m.headline,
        vec![format!(
            "with the one-class labeling admitted: mtw={}",
            m.with_trivial.value
        )],
        json,
    )
}

pub fn chtw(text: &str, cap: Option<usize>) -> Result<Output, Failure> {
    let g = read_graph(text, cap, PARTITION_CAP)?;
    let c = chromatic_treewidth(&g)?;
    quotient_output("chtw", &c, Vec::new(), json!({}))
}

/// What the certificate claims to decompose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ObjectKind {
    Graph,
    Hypergraph,
    /// The complement of the graph in the object file (certificates of `ctw`).
    Complement,
}

pub fn validate(
    object: &str,
    certificate: &str,
    kind: ObjectKind,
    labels: Option<Vec<usize>>,
) -> Result<Output, Failure> {
    let td = parse_pace(certificate)?;
    if labels.is_some() && kind != ObjectKind::Graph {
        return Err(Failure::Input("--labels applies to graphs only".into()));
    }
    let verdict = match kind {
        ObjectKind::Hypergraph => validate_tree_decomposition(&parse_hypergraph(object)?, &td),
        ObjectKind::Complement => {
            validate_tree_decomposition(&complement(&parse_edge_list(object)?), &td)
        }
        ObjectKind::Graph => {
            let g = parse_edge_list(object)?;
            let g = match labels {
                Some(l) => quotient_graph(&Labeling::new(g, l)?),
                None => g,
            };
            validate_tree_decomposition(&g, &td)
        }
    };
    Ok(match verdict {
        Ok(delta) => {
            let width = delta.checked_sub(1);
            Output {
                human: format!("valid width={} delta={delta}\n", optional(width)),
                json: json!({ "verb": "validate", "valid": true, "width": width, "delta": delta }),
                pace: None,
                passed: true,
            }
        }
        Err(v) => Output {
            human: format!("invalid: {v}\n"),
            json: json!({ "verb": "validate", "valid": false, "violation": v.to_string() }),
            pace: None,
            passed: false,
        },
    })
}
