//! Text, DOT and structured (JSON) rendering of computation results.
//!
//! The structured format is stable: labels are strings in the shared
//! grammar, posets are node/edge arrays, suite reports carry
//! (suite, checked, failures[]).

use orbit_duality::exceptional::{ExcNode, ExceptionalDataset};
use orbit_duality::{GroupType, LabeledPoset, MarkedPartition, Partition, SuiteReport};
use serde_json::json;

use crate::Format;

pub fn partition_value(value: Partition, ty: GroupType, format: Format) -> String {
    match format {
        Format::Structured => json!({"value": value.to_string(), "group_type": ty.to_string()})
            .to_string(),
        _ => format!("{value} (type {ty})"),
    }
}

pub fn marked_value(value: MarkedPartition, format: Format) -> String {
    let ty = value.group_type();
    match format {
        Format::Structured => json!({"value": value.to_string(), "group_type": ty.to_string()})
            .to_string(),
        _ => format!("{value} (type {ty})"),
    }
}

pub fn enumeration(poset: &LabeledPoset, format: Format) -> String {
    match format {
        Format::Structured => {
            let nodes: Vec<_> = poset
                .labels
                .iter()
                .zip(&poset.special)
                .zip(&poset.duals)
                .map(|((l, &s), d)| {
                    json!({
                        "label": l.to_string(),
                        "special": s,
                        "dual": d.to_string(),
                    })
                })
                .collect();
            format!(
                "{}\n",
                json!({
                    "group_type": poset.group_type.to_string(),
                    "n": poset.n,
                    "labels": nodes,
                })
            )
        }
        _ => {
            let mut out = String::new();
            for ((l, &s), d) in poset.labels.iter().zip(&poset.special).zip(&poset.duals) {
                out.push_str(&format!(
                    "{l}\t{}\t-> {d}\n",
                    if s { "special" } else { "nonspecial" }
                ));
            }
            out
        }
    }
}

fn poset_json(poset: &LabeledPoset) -> serde_json::Value {
    let nodes: Vec<_> = poset
        .labels
        .iter()
        .zip(&poset.special)
        .zip(&poset.duals)
        .map(|((l, &s), d)| {
            json!({
                "label": l.to_string(),
                "special": s,
                "dual": d.to_string(),
            })
        })
        .collect();
    let edges: Vec<_> = poset
        .covers
        .iter()
        .map(|&(u, l)| {
            json!([
                poset.labels[u].to_string(),
                poset.labels[l].to_string()
            ])
        })
        .collect();
    json!({
        "group_type": poset.group_type.to_string(),
        "n": poset.n,
        "nodes": nodes,
        "edges": edges,
    })
}

pub fn poset(poset: &LabeledPoset, format: Format) -> String {
    match format {
        Format::Structured => format!("{}\n", poset_json(poset)),
        Format::Dot => {
            let mut out = format!("digraph \"{}{}\" {{\n", poset.group_type, poset.n);
            out.push_str("  rankdir=TB;\n");
            for (l, &s) in poset.labels.iter().zip(&poset.special) {
                if s {
                    out.push_str(&format!("  \"{l}\";\n"));
                } else {
                    out.push_str(&format!("  \"{l}\" [shape=box];\n"));
                }
            }
            for &(u, l) in &poset.covers {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    poset.labels[u], poset.labels[l]
                ));
            }
            out.push_str("}\n");
            out
        }
        Format::Text => {
            let mut out = format!(
                "poset of type {} size {}: {} labels, {} covers\n",
                poset.group_type,
                poset.n,
                poset.labels.len(),
                poset.covers.len()
            );
            for ((l, &s), d) in poset.labels.iter().zip(&poset.special).zip(&poset.duals) {
                out.push_str(&format!(
                    "node {l}\t{}\tdual {d}\n",
                    if s { "special" } else { "nonspecial" }
                ));
            }
            for &(u, l) in &poset.covers {
                out.push_str(&format!(
                    "cover {} > {}\n",
                    poset.labels[u], poset.labels[l]
                ));
            }
            out
        }
    }
}

pub fn exceptional_node(node: &ExcNode, format: Format) -> String {
    match format {
        Format::Structured => json!({
            "id": node.id,
            "orbit": node.orbit,
            "class": node.class,
            "special": node.special,
        })
        .to_string(),
        _ => format!("{} {}", node.id, node.display_pair()),
    }
}

pub fn dataset(ds: &ExceptionalDataset, format: Format) -> String {
    match format {
        Format::Structured => {
            let nodes: Vec<_> = ds
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "id": n.id,
                        "orbit": n.orbit,
                        "class": n.class,
                        "special": n.special,
                    })
                })
                .collect();
            let edges: Vec<_> = ds
                .covers
                .iter()
                .map(|&(u, l)| json!([ds.nodes[u].id, ds.nodes[l].id]))
                .collect();
            let duals: Vec<_> = ds
                .duals
                .iter()
                .map(|&(a, b)| json!([ds.nodes[a].id, ds.nodes[b].id]))
                .collect();
            format!(
                "{}\n",
                json!({
                    "group": ds.group.to_string(),
                    "nodes": nodes,
                    "edges": edges,
                    "duals": duals,
                })
            )
        }
        Format::Dot => {
            let mut out = format!("digraph \"{}\" {{\n  rankdir=TB;\n", ds.group);
            for n in &ds.nodes {
                if n.special {
                    out.push_str(&format!("  \"{}\";\n", n.display_pair()));
                } else {
                    out.push_str(&format!("  \"{}\" [shape=box];\n", n.display_pair()));
                }
            }
            for &(u, l) in &ds.covers {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\";\n",
                    ds.nodes[u].display_pair(),
                    ds.nodes[l].display_pair()
                ));
            }
            out.push_str("}\n");
            out
        }
        Format::Text => {
            let specials = ds.nodes.iter().filter(|n| n.special).count();
            let mut out = format!(
                "group {}: {} nodes, {} special\n",
                ds.group,
                ds.nodes.len(),
                specials
            );
            for n in &ds.nodes {
                out.push_str(&format!(
                    "node {} {}\t{}\n",
                    n.id,
                    n.display_pair(),
                    if n.special { "special" } else { "nonspecial" }
                ));
            }
            for &(u, l) in &ds.covers {
                out.push_str(&format!("cover {} > {}\n", ds.nodes[u].id, ds.nodes[l].id));
            }
            for &(a, b) in &ds.duals {
                out.push_str(&format!("dual {} <-> {}\n", ds.nodes[a].id, ds.nodes[b].id));
            }
            out
        }
    }
}

pub fn reports(reports: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Structured => {
            let arr: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            format!("{}\n", json!(arr))
        }
        _ => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.render_text());
            }
            out
        }
    }
}
