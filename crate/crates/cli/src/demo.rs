//! `demo <name>`: the witness reproductions as tables.
//!
//! The demos exhibit failures on purpose; a run that reproduces them exits 0.

use std::fmt::Write;

use serde_json::json;
use spined::chordal::treewidth_dp;
use spined::witness::{
    demo_clique_failure, demo_order_failure, demo_poset_no_sfunctor, pseudo_chordal_witness, Poset,
    EXPONENT_SAMPLE, PSEUDO_CHORDAL_RANGE,
};

use crate::render::{graph_json, verdict_json, verdict_line, Failure, Output};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Demo {
    /// ω on the naturals under divisibility: 16, 81 and their lcm 1296.
    Ndiv,
    /// The order |G| on the path K_2 #_{K_1} K_2.
    Order,
    /// The span of chains whose pushout is the 4-chain.
    Poset,
    /// K_n glued to C_n at a vertex, for n in 3..=8.
    PseudoChordal,
}

pub fn demo(which: Demo, n: Option<usize>) -> Result<Output, Failure> {
    if n.is_some() && which != Demo::PseudoChordal {
        return Err(Failure::Input("--n applies to pseudo-chordal only".into()));
    }
    match which {
        Demo::Ndiv => ndiv(),
        Demo::Order => order(),
        Demo::Poset => poset(),
        Demo::PseudoChordal => pseudo_chordal(n),
    }
}

fn reproduced(human: String, json: serde_json::Value) -> Output {
    Output {
        human,
        json,
        pace: None,
        passed: true,
    }
}

fn ndiv() -> Result<Output, Failure> {
    let r = demo_clique_failure()?;
    let (wl, wr, wa) = r.omega;
    let mut human = String::from("object  value  omega\n");
    for (name, x, w) in [
        ("left", &r.left, wl),
        ("right", &r.right, wr),
        ("lcm", &r.apex, wa),
    ] {
        let _ = writeln!(human, "{name:<7} {:>5}  {w:>5}", x.to_string());
    }
    let _ = writeln!(
        human,
        "SF2 asks omega({}) = max({wl}, {wr}) = {}; found {wa}: {}",
        r.apex,
        wl.max(wr),
        if r.clique_violates_sf2() {
            "violated"
        } else {
            "holds"
        }
    );
    let _ = writeln!(
        human,
        "largest prime exponent on {EXPONENT_SAMPLE} sampled spans: {}",
        verdict_line(&r.exponent)
    );
    let json = json!({
        "verb": "demo",
        "demo": "ndiv",
        "left": { "value": r.left.to_string(), "omega": wl },
        "right": { "value": r.right.to_string(), "omega": wr },
        "lcm": { "value": r.apex.to_string(), "omega": wa },
        "omega_violates_sf2": r.clique_violates_sf2(),
        "exponent": verdict_json(&r.exponent),
    });
    Ok(reproduced(human, json))
}

fn order() -> Result<Output, Failure> {
    let r = demo_order_failure()?;
    let mut human =
        String::from("span K_2 <- K_1 -> K_2 (point to vertex 1 and to vertex 0), pushout P_3\n");
    for v in [&r.order, &r.clique_number, &r.delta] {
        let _ = writeln!(human, "{}", verdict_line(v));
    }
    let json = json!({
        "verb": "demo",
        "demo": "order",
        "left": graph_json(&r.span.left.target),
        "right": graph_json(&r.span.right.target),
        "verdicts": [verdict_json(&r.order), verdict_json(&r.clique_number), verdict_json(&r.delta)],
    });
    Ok(reproduced(human, json))
}

fn poset_json(p: &Poset) -> serde_json::Value {
    json!({ "n": p.n(), "strict": p.strict_pairs() })
}

fn poset() -> Result<Output, Failure> {
    let r = demo_poset_no_sfunctor()?;
    let mut human = String::from(
        "span L_3 <- L_1 -> L_2, the point sent to the top of L_3 and the bottom of L_2\n",
    );
    let _ = writeln!(
        human,
        "pushout has {} elements, order-isomorphic to L_4 via {:?}",
        r.pushout.n(),
        r.iso_to_chain
    );
    let _ = writeln!(
        human,
        "SF1 forces F(pushout) = {}; SF2 requires max(3, 2) = {}",
        r.forced, r.required
    );
    let _ = writeln!(
        human,
        "after extending to L_4 and L_3: pushout height {} against max(4, 3) = {}",
        r.extended_height, r.extended_required
    );
    let _ = writeln!(human, "{}", verdict_line(&r.height));
    let _ = writeln!(
        human,
        "no S-functor exists: {}",
        if r.contradiction() {
            "confirmed"
        } else {
            "not reproduced"
        }
    );
    let json = json!({
        "verb": "demo",
        "demo": "poset",
        "left_map": r.left.map,
        "right_map": r.right.map,
        "pushout": poset_json(&r.pushout),
        "iso_to_chain": r.iso_to_chain,
        "forced": r.forced,
        "required": r.required,
        "extended_height": r.extended_height,
        "extended_required": r.extended_required,
        "height": verdict_json(&r.height),
        "contradiction": r.contradiction(),
    });
    Ok(reproduced(human, json))
}

fn pseudo_chordal(n: Option<usize>) -> Result<Output, Failure> {
    let range: Vec<usize> = match n {
        Some(n) => vec![n],
        None => PSEUDO_CHORDAL_RANGE.collect(),
    };
    let mut human = String::from("n  vertices  chordal  delta  K_n delta  K_n#K_n delta\n");
    let mut rows = Vec::new();
    for n in range {
        let w = pseudo_chordal_witness(n)?;
        let below = treewidth_dp(&w.lower.source)?.delta;
        let above = treewidth_dp(&w.upper.target)?.delta;
        let _ = writeln!(
            human,
            "{n:<2} {:>8}  {:>7}  {:>5}  {below:>9}  {above:>13}",
            w.graph.n(),
            w.chordal,
            w.delta
        );
        rows.push(json!({
            "n": n,
            "graph": graph_json(&w.graph),
            "chordal": w.chordal,
            "delta": w.delta,
            "lower_delta": below,
            "upper_delta": above,
            "lower": w.lower.map,
            "upper": w.upper.map,
        }));
    }
    let json = json!({ "verb": "demo", "demo": "pseudo-chordal", "witnesses": rows });
    Ok(reproduced(human, json))
}
