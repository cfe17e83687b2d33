//! Machine-readable and human-readable run reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::ComponentRecord;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::vectors::{Signature, SurfaceInvariants};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub rank: usize,
    pub torsion_chain: Vec<u64>,
    pub rendered: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Entries in 1-based cycle notation.
    pub rep1: Vec<String>,
    pub rep2: Vec<String>,
    pub homology: Option<HomologyReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub group: String,
    pub order: usize,
    pub t1: Vec<u32>,
    pub t2: Vec<u32>,
    pub genus1: i64,
    pub genus2: i64,
    pub chi: i64,
    pub pg: i64,
    pub q: u64,
    pub dimension: u64,
    pub euler: i64,
    pub n_components: usize,
    pub components: Vec<ComponentReport>,
}

impl RunReport {
    pub fn new(
        name: &str,
        group: &FiniteGroup,
        t1: &Signature,
        t2: &Signature,
        invariants: &SurfaceInvariants,
        records: &[ComponentRecord],
    ) -> Self {
        let cycles = |v: &[crate::group::ElementId]| -> Vec<String> {
            v.iter().map(|&h| group.element(h).to_string()).collect()
        };
        let components = records
            .iter()
            .map(|r| ComponentReport {
                rep1: cycles(r.rep1.entries()),
                rep2: cycles(r.rep2.entries()),
                homology: r.homology.as_ref().map(|h| HomologyReport {
                    rank: h.rank(),
                    torsion_chain: h.torsion().to_vec(),
                    rendered: h.to_string(),
                }),
            })
            .collect();
        RunReport {
            group: name.to_string(),
            order: group.order(),
            t1: t1.periods().to_vec(),
            t2: t2.periods().to_vec(),
            genus1: invariants.g1,
            genus2: invariants.g2,
            chi: invariants.chi,
            pg: invariants.pg,
            q: invariants.q,
            dimension: invariants.dimension,
            euler: invariants.euler,
            n_components: records.len(),
            components,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Input(format!("bad report JSON: {e}")))
    }

    pub fn to_text(&self) -> String {
        let sig = |t: &[u32]| {
            let s: Vec<String> = t.iter().map(|m| m.to_string()).collect();
            format!("[{}]", s.join(","))
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group {} (order {})  T1 = {}  T2 = {}",
            self.group,
            self.order,
            sig(&self.t1),
            sig(&self.t2)
        );
        let _ = writeln!(
            out,
            "g1 = {}  g2 = {}  chi = {}  pg = {}  q = {}  e = {}  D = {}",
            self.genus1, self.genus2, self.chi, self.pg, self.q, self.euler, self.dimension
        );
        let _ = writeln!(out, "N = {}", self.n_components);
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(out, "component {}", i + 1);
            let _ = writeln!(out, "  V1 = [{}]", c.rep1.join(", "));
            let _ = writeln!(out, "  V2 = [{}]", c.rep2.join(", "));
            if let Some(h) = &c.homology {
                let chain: Vec<String> = h.torsion_chain.iter().map(|d| d.to_string()).collect();
                let _ = writeln!(out, "  H1 = {}   (chain: {})", h.rendered, chain.join(" "));
            }
        }
        out
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("group\torder\tt1\tt2\tcomponent\tchi\tdimension\th1\ttorsion_chain\n");
        let join = |t: &[u32]| t.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",");
        for (i, c) in self.components.iter().enumerate() {
            let (rendered, chain) = match &c.homology {
                Some(h) => (
                    h.rendered.clone(),
                    h.torsion_chain
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                ),
                None => ("-".into(), "-".into()),
            };
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                self.group,
                self.order,
                join(&self.t1),
                join(&self.t2),
                i + 1,
                self.chi,
                self.dimension,
                rendered,
                chain
            );
        }
        out
    }
}
