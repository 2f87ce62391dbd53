//! Embedded posets of pairs (orbit, class in the canonical quotient) for the
//! exceptional groups, with special flags and the duality pairing, plus
//! dataset validation.
//!
//! Orbits are named by Bala-Carter labels and classes by generalized
//! Bala-Carter labels; both are opaque strings here. The node id is the
//! class label itself.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, integrity, parse_err, Error, Result};
use crate::verify::SuiteReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExceptionalGroup {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl ExceptionalGroup {
    pub const ALL: [ExceptionalGroup; 5] = [
        ExceptionalGroup::G2,
        ExceptionalGroup::F4,
        ExceptionalGroup::E6,
        ExceptionalGroup::E7,
        ExceptionalGroup::E8,
    ];

    /// (node count, special count) per the tabulated figures.
    pub fn expected_counts(self) -> (usize, usize) {
        match self {
            ExceptionalGroup::G2 => (7, 7),
            ExceptionalGroup::F4 => (24, 23),
            ExceptionalGroup::E6 => (25, 25),
            ExceptionalGroup::E7 => (58, 55),
            ExceptionalGroup::E8 => (106, 98),
        }
    }
}

impl fmt::Display for ExceptionalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExceptionalGroup::G2 => write!(f, "G2"),
            ExceptionalGroup::F4 => write!(f, "F4"),
            ExceptionalGroup::E6 => write!(f, "E6"),
            ExceptionalGroup::E7 => write!(f, "E7"),
            ExceptionalGroup::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for ExceptionalGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "G2" => Ok(ExceptionalGroup::G2),
            "F4" => Ok(ExceptionalGroup::F4),
            "E6" => Ok(ExceptionalGroup::E6),
            "E7" => Ok(ExceptionalGroup::E7),
            "E8" => Ok(ExceptionalGroup::E8),
            other => Err(parse_err(format!("unknown exceptional group {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExcNode {
    /// The generalized Bala-Carter label; doubles as the node id.
    pub id: String,
    /// Bala-Carter label of the orbit.
    pub orbit: String,
    /// Class label; "1" for the trivial class.
    pub class: String,
    pub special: bool,
}

impl ExcNode {
    /// The (orbit, class) rendering used in the diagrams.
    pub fn display_pair(&self) -> String {
        format!("({},{})", self.orbit, self.class)
    }
}

#[derive(Debug, Clone)]
pub struct ExceptionalDataset {
    pub group: ExceptionalGroup,
    pub nodes: Vec<ExcNode>,
    /// (upper, lower) node indices; the transitive reduction of the order.
    pub covers: Vec<(usize, usize)>,
    /// Duality pairing on special nodes, stored as unordered index pairs.
    pub duals: Vec<(usize, usize)>,
}

impl ExceptionalDataset {
    pub fn parse(text: &str) -> Result<ExceptionalDataset> {
        let mut group = None;
        let mut nodes: Vec<ExcNode> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut duals: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let keyword = tokens.next().unwrap();
            let bad = |what: &str| parse_err(format!("line {}: {what}: {line}", lineno + 1));
            match keyword {
                "group" => {
                    let tag = tokens.next().ok_or_else(|| bad("missing group tag"))?;
                    group = Some(tag.parse::<ExceptionalGroup>()?);
                }
                "node" => {
                    let id = tokens.next().ok_or_else(|| bad("missing node id"))?;
                    let mut orbit = None;
                    let mut class = None;
                    let mut special = None;
                    for t in tokens {
                        if let Some(v) = t.strip_prefix("orbit=") {
                            orbit = Some(v.to_string());
                        } else if let Some(v) = t.strip_prefix("class=") {
                            class = Some(v.to_string());
                        } else if let Some(v) = t.strip_prefix("special=") {
                            special = Some(v == "1");
                        } else {
                            return Err(bad("unknown node attribute"));
                        }
                    }
                    let node = ExcNode {
                        id: id.to_string(),
                        orbit: orbit.ok_or_else(|| bad("missing orbit="))?,
                        class: class.ok_or_else(|| bad("missing class="))?,
                        special: special.ok_or_else(|| bad("missing special="))?,
                    };
                    if index.insert(node.id.clone(), nodes.len()).is_some() {
                        return Err(bad("duplicate node id"));
                    }
                    nodes.push(node);
                }
                "edge" => {
                    let u = tokens.next().ok_or_else(|| bad("missing upper id"))?;
                    let l = tokens.next().ok_or_else(|| bad("missing lower id"))?;
                    edges.push((u.to_string(), l.to_string()));
                }
                "dual" => {
                    let a = tokens.next().ok_or_else(|| bad("missing id"))?;
                    let b = tokens.next().ok_or_else(|| bad("missing id"))?;
                    duals.push((a.to_string(), b.to_string()));
                }
                _ => return Err(bad("unknown record")),
            }
        }
        let group = group.ok_or_else(|| parse_err("missing group line"))?;
        let resolve = |id: &str| -> Result<usize> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| parse_err(format!("unknown node id {id:?}")))
        };
        let covers = edges
            .iter()
            .map(|(u, l)| Ok((resolve(u)?, resolve(l)?)))
            .collect::<Result<_>>()?;
        let duals = duals
            .iter()
            .map(|(a, b)| Ok((resolve(a)?, resolve(b)?)))
            .collect::<Result<_>>()?;
        Ok(ExceptionalDataset {
            group,
            nodes,
            covers,
            duals,
        })
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.id == id)
    }

    /// Reachability of the cover digraph: above[i] holds every j with i
    /// strictly greater than j.
    fn descendants(&self) -> Vec<BTreeSet<usize>> {
        let n = self.nodes.len();
        let mut down = vec![BTreeSet::new(); n];
        // repeated relaxation; the posets are tiny
        let mut changed = true;
        while changed {
            changed = false;
            for &(u, l) in &self.covers {
                let mut add: BTreeSet<usize> = down[l].clone();
                add.insert(l);
                for x in add {
                    if down[u].insert(x) {
                        changed = true;
                    }
                }
            }
        }
        down
    }

    fn strictly_above(&self, down: &[BTreeSet<usize>], hi: usize, lo: usize) -> bool {
        down[hi].contains(&lo)
    }

    /// The dual of a special node under the stored pairing.
    fn paired(&self, i: usize) -> Option<usize> {
        for &(a, b) in &self.duals {
            if a == i {
                return Some(b);
            }
            if b == i {
                return Some(a);
            }
        }
        None
    }

    /// The extended duality value of a node: its pair for special nodes, the
    /// pair of the unique smallest special node above it otherwise.
    pub fn exceptional_dbar(&self, id: &str) -> Result<&ExcNode> {
        let i = self
            .node_index(id)
            .ok_or_else(|| domain(format!("no node {id:?} in {}", self.group)))?;
        let down = self.descendants();
        let j = if self.nodes[i].special {
            i
        } else {
            self.unique_minimal_special_above(&down, i)?
        };
        let d = self
            .paired(j)
            .ok_or_else(|| integrity(format!("special node {} has no dual", self.nodes[j].id)))?;
        Ok(&self.nodes[d])
    }

    fn unique_minimal_special_above(
        &self,
        down: &[BTreeSet<usize>],
        i: usize,
    ) -> Result<usize> {
        let above: Vec<usize> = (0..self.nodes.len())
            .filter(|&j| self.nodes[j].special && self.strictly_above(down, j, i))
            .collect();
        let minimal: Vec<usize> = above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| k != j && self.strictly_above(down, j, k)))
            .collect();
        match minimal.as_slice() {
            [j] => Ok(*j),
            other => Err(integrity(format!(
                "node {} has {} minimal special nodes above it",
                self.nodes[i].id,
                other.len()
            ))),
        }
    }

    /// Validates the dataset: counts against the tabulated totals, acyclic
    /// covers forming a transitive reduction, the duality pairing an
    /// order-reversing involution on special nodes, and unique minimal
    /// special nodes above nonspecial ones.
    pub fn validate(&self) -> SuiteReport {
        let mut report = SuiteReport::new(format!("exceptional-{}", self.group));
        let (want_nodes, want_special) = self.group.expected_counts();
        let specials = self.nodes.iter().filter(|n| n.special).count();
        report.record(self.nodes.len() == want_nodes, || {
            (
                format!("{} node count", self.group),
                want_nodes.to_string(),
                self.nodes.len().to_string(),
            )
        });
        report.record(specials == want_special, || {
            (
                format!("{} special count", self.group),
                want_special.to_string(),
                specials.to_string(),
            )
        });

        // acyclicity
        let down = self.descendants();
        let acyclic = (0..self.nodes.len()).all(|i| !down[i].contains(&i));
        report.record(acyclic, || {
            (
                format!("{} cover acyclicity", self.group),
                "acyclic".into(),
                "a cycle".into(),
            )
        });
        if !acyclic {
            return report.finish();
        }

        // transitive reduction: no cover implied by a longer path
        for &(u, l) in &self.covers {
            let redundant = self
                .covers
                .iter()
                .any(|&(u2, mid)| u2 == u && mid != l && self.strictly_above(&down, mid, l));
            report.record(!redundant, || {
                (
                    format!(
                        "{} cover {} > {}",
                        self.group, self.nodes[u].id, self.nodes[l].id
                    ),
                    "a covering relation".into(),
                    "implied by a longer path".into(),
                )
            });
        }

        // duality: involution on special nodes
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.duals {
            report.record(self.nodes[a].special && self.nodes[b].special, || {
                (
                    format!(
                        "{} dual pair {} {}",
                        self.group, self.nodes[a].id, self.nodes[b].id
                    ),
                    "both special".into(),
                    "a nonspecial endpoint".into(),
                )
            });
            for x in [a, b] {
                if !seen.insert(x) && !(a == b && x == a) {
                    report.record(false, || {
                        (
                            format!("{} dual multiplicity of {}", self.group, self.nodes[x].id),
                            "exactly one pair".into(),
                            "several".into(),
                        )
                    });
                }
            }
        }
        for (i, n) in self.nodes.iter().enumerate() {
            if n.special {
                report.record(self.paired(i).is_some(), || {
                    (
                        format!("{} dual of {}", self.group, n.id),
                        "present".into(),
                        "missing".into(),
                    )
                });
            }
        }

        // order reversal of the pairing on the special subposet
        let special_ids: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| self.nodes[i].special)
            .collect();
        for &i in &special_ids {
            for &j in &special_ids {
                let (Some(di), Some(dj)) = (self.paired(i), self.paired(j)) else {
                    continue;
                };
                let fwd = self.strictly_above(&down, i, j);
                let rev = self.strictly_above(&down, dj, di);
                report.record(fwd == rev, || {
                    (
                        format!(
                            "{} order reversal on {} vs {}",
                            self.group, self.nodes[i].id, self.nodes[j].id
                        ),
                        format!("{fwd}"),
                        format!("{rev}"),
                    )
                });
            }
        }

        // unique minimal special node above every nonspecial node, and the
        // threefold-composition identity
        for i in 0..self.nodes.len() {
            if !self.nodes[i].special {
                report.record(
                    self.unique_minimal_special_above(&down, i).is_ok(),
                    || {
                        (
                            format!("{} minimal special above {}", self.group, self.nodes[i].id),
                            "unique".into(),
                            "not unique or missing".into(),
                        )
                    },
                );
            }
            let d1 = self.exceptional_dbar(&self.nodes[i].id).map(|n| n.id.clone());
            let d3 = d1.clone().and_then(|x| {
                let d2 = self.exceptional_dbar(&x)?.id.clone();
                Ok(self.exceptional_dbar(&d2)?.id.clone())
            });
            report.record(d1.is_ok() && d1 == d3, || {
                (
                    format!("{} threefold duality of {}", self.group, self.nodes[i].id),
                    format!("{d1:?}"),
                    format!("{d3:?}"),
                )
            });
        }
        report.finish()
    }
}

/// Loads one of the embedded datasets.
pub fn load_group(group: ExceptionalGroup) -> Result<ExceptionalDataset> {
    let text = match group {
        ExceptionalGroup::G2 => include_str!("../data/g2.txt"),
        ExceptionalGroup::F4 => include_str!("../data/f4.txt"),
        ExceptionalGroup::E6 => include_str!("../data/e6.txt"),
        ExceptionalGroup::E7 => include_str!("../data/e7.txt"),
        ExceptionalGroup::E8 => include_str!("../data/e8.txt"),
    };
    let ds = ExceptionalDataset::parse(text)?;
    if ds.group != group {
        return Err(integrity(format!(
            "embedded dataset for {group} declares group {}",
            ds.group
        )));
    }
    Ok(ds)
}

/// Loads a dataset from a file in the same format.
pub fn load_path(path: &std::path::Path) -> Result<ExceptionalDataset> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Unavailable(format!("cannot read {}: {e}", path.display())))?;
    ExceptionalDataset::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_counts_and_duals() {
        let ds = load_group(ExceptionalGroup::G2).unwrap();
        assert_eq!(ds.nodes.len(), 7);
        let r = ds.validate();
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(ds.exceptional_dbar("G2").unwrap().id, "1");
        assert_eq!(ds.exceptional_dbar("A2").unwrap().id, "A1");
        // the chain midpoint is self-dual
        assert_eq!(ds.exceptional_dbar("G2(a1)").unwrap().id, "G2(a1)");
    }

    #[test]
    fn f4_counts_and_boxed_node() {
        let ds = load_group(ExceptionalGroup::F4).unwrap();
        assert_eq!(ds.nodes.len(), 24);
        assert_eq!(ds.nodes.iter().filter(|n| n.special).count(), 23);
        let boxed: Vec<&ExcNode> = ds.nodes.iter().filter(|n| !n.special).collect();
        assert_eq!(boxed.len(), 1);
        assert_eq!(boxed[0].orbit, "~A1");
        assert_eq!(boxed[0].class, "2A1");
        let r = ds.validate();
        assert!(r.passed(), "{}", r.render_text());
        // the nonspecial node routes through its unique minimal special cover
        let via = ds.exceptional_dbar("2A1").unwrap();
        let cover_dual = ds.exceptional_dbar("A1+~A1").unwrap();
        assert_eq!(via.id, cover_dual.id);
    }

    #[test]
    fn e_series_counts() {
        for (g, nodes, specials) in [
            (ExceptionalGroup::E6, 25, 25),
            (ExceptionalGroup::E7, 58, 55),
            (ExceptionalGroup::E8, 106, 98),
        ] {
            let ds = load_group(g).unwrap();
            assert_eq!(ds.nodes.len(), nodes, "{g}");
            assert_eq!(
                ds.nodes.iter().filter(|n| n.special).count(),
                specials,
                "{g}"
            );
            let r = ds.validate();
            assert!(r.passed(), "{g}: {}", r.render_text());
        }
    }

    #[test]
    fn corrupted_dataset_detected() {
        let text = "group G2\n\
                    node a orbit=a class=1 special=1\n\
                    node b orbit=b class=1 special=1\n\
                    edge a b\n\
                    edge b a\n\
                    dual a b\n";
        let ds = ExceptionalDataset::parse(text).unwrap();
        let r = ds.validate();
        assert!(!r.passed());
    }
}
