//! Single-poset analyses behind `poset-decomp analyze`.

use std::time::Instant;

use crate::chain::{dilworth_min, max_antichain};
use crate::cut::{self, admissible_cuts, random_admissible_cuts};
use crate::error::Result;
use crate::hcd::{acyclic_orientation, chain_graph, mhcd, mhcd_with_order, verify_embedding, MergeOrder};
use crate::nccd::verify_inequality_chain;
use crate::poset::Poset;
use crate::report::{
    CheckOutcome, CutCheckResult, CutEntry, DilworthResult, Finding, MhcdResult, PosetSummary, RunReport,
};
use crate::scope::Scope;

/// Above this many proper cuts the cut check samples instead of enumerating.
const ENUMERATED_CUTS: u64 = 1 << 16;
const SAMPLED_CUTS: usize = 1000;
/// Cuts reported in full.
const SHOWN_CUTS: usize = 3;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Analyses {
    pub dilworth: bool,
    pub mhcd: bool,
    pub cut_check: bool,
    pub embedding: bool,
    pub inequalities: bool,
}

impl Analyses {
    pub fn all() -> Self {
        Analyses {
            dilworth: true,
            mhcd: true,
            cut_check: true,
            embedding: true,
            inequalities: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Analyses::default()
    }

    pub fn names(&self) -> Vec<String> {
        [
            (self.dilworth, "dilworth"),
            (self.mhcd, "mhcd"),
            (self.cut_check, "cut-check"),
            (self.embedding, "embedding"),
            (self.inequalities, "inequalities"),
        ]
        .into_iter()
        .filter(|(on, _)| *on)
        .map(|(_, n)| n.to_string())
        .collect()
    }
}

fn labelled(p: &Poset, chains: &[Vec<usize>]) -> Vec<Vec<String>> {
    chains
        .iter()
        .map(|c| c.iter().map(|&x| p.label(x).to_string()).collect())
        .collect()
}

/// Runs the requested analyses. Scope refusals are returned as errors;
/// failed checks are recorded in the report.
pub fn analyze(p: &Poset, which: Analyses, scope: &Scope) -> Result<RunReport> {
    let mut r = RunReport {
        poset: PosetSummary::of(p),
        analyses: which.names(),
        dilworth: None,
        mhcd: None,
        cut_check: None,
        embedding: None,
        inequalities: None,
        checks: Vec::new(),
        findings: Vec::new(),
        timings_us: Default::default(),
    };

    if which.dilworth {
        let t = Instant::now();
        let d = dilworth_min(p);
        let a = max_antichain(p);
        r.checks.push(if d.len() == a.len() && p.is_antichain(&a) {
            CheckOutcome::pass("dilworth")
        } else {
            CheckOutcome::fail("dilworth", format!("{} chains, antichain of size {}", d.len(), a.len()))
        });
        r.dilworth = Some(DilworthResult {
            min: d.len(),
            chains: labelled(p, d.chains()),
            antichain: a.iter().map(|&x| p.label(x).to_string()).collect(),
        });
        r.timings_us.insert("dilworth".into(), t.elapsed().as_micros() as u64);
    }

    let h = mhcd(p);
    if which.mhcd {
        let t = Instant::now();
        let disagree = (0..20u64).find(|&s| mhcd_with_order(p, MergeOrder::Shuffled(s)) != h);
        r.checks.push(match disagree {
            None => CheckOutcome::pass("mhcd_confluence"),
            Some(s) => CheckOutcome::fail("mhcd_confluence", format!("merge order {s} gives a different result")),
        });
        let g = chain_graph(p, &h);
        let o = acyclic_orientation(p, &h)?;
        r.mhcd = Some(MhcdResult {
            min_h: h.len(),
            chains: labelled(p, h.chains()),
            length_classes: h.length_classes().iter().map(|c| (c.size, c.chains.len())).collect(),
            graph_edges: g.edges(),
            orientation_arcs: o.arcs(),
        });
        r.timings_us.insert("mhcd".into(), t.elapsed().as_micros() as u64);
    }

    if which.cut_check {
        let t = Instant::now();
        let cuts = if cut::proper_cut_count(&h) <= ENUMERATED_CUTS {
            admissible_cuts(p, &h)
        } else {
            r.findings.push(Finding::new(
                "cuts_sampled",
                format!("{SAMPLED_CUTS} admissible cuts sampled with replacement"),
            ));
            random_admissible_cuts(p, &h, SAMPLED_CUTS, 0)
        };
        let mut holds = 0;
        let mut shown = Vec::new();
        let mut failure = None;
        for c in &cuts {
            let rep = cut::verify_cut_identity(p, &h, c)?;
            if rep.equal {
                holds += 1;
            } else if failure.is_none() {
                failure = Some(format!("heights {:?}, discrepancy {}", c.heights(), rep.max_discrepancy));
            }
            if shown.len() < SHOWN_CUTS {
                shown.push(CutEntry {
                    heights: c.heights().to_vec(),
                    report: rep,
                });
            }
        }
        let j_invertible = cut::j_matrix(&h).determinant()? != 0;
        if cuts.is_empty() {
            r.findings.push(Finding::new("no_admissible_cut", "the identity is vacuous here"));
        } else if !j_invertible {
            r.findings.push(Finding::new("j_singular", "J is singular"));
        }
        r.checks.push(CheckOutcome::from_result("cut_identity", failure.map_or(Ok(()), Err)));
        r.cut_check = Some(CutCheckResult {
            admissible_cuts: cuts.len(),
            identity_holds: holds,
            j_invertible,
            cuts: shown,
        });
        r.timings_us.insert("cut-check".into(), t.elapsed().as_micros() as u64);
    }

    if which.embedding {
        let t = Instant::now();
        let e = verify_embedding(p, scope)?;
        r.checks.push(if e.passed() {
            CheckOutcome::pass("embedding")
        } else {
            CheckOutcome::fail("embedding", e.witness.clone().unwrap_or_else(|| format!("{e:?}")))
        });
        if !e.onto_oriented {
            r.findings.push(Finding::new(
                "embedding_not_onto",
                format!("|Aut(P)| = {}, target {}", e.aut_poset, e.aut_oriented_in_op),
            ));
        }
        r.embedding = Some(e);
        r.timings_us.insert("embedding".into(), t.elapsed().as_micros() as u64);
    }

    if which.inequalities {
        let t = Instant::now();
        let q = verify_inequality_chain(p, scope)?;
        r.checks.push(if q.passed() {
            CheckOutcome::pass("inequality")
        } else {
            CheckOutcome::fail("inequality", format!("values {:?}, e = {}", q.values(), q.e.join(" ")))
        });
        r.findings.push(Finding::new("strictness", format!("{:?}", q.strict)));
        for f in &q.case_order_findings {
            r.findings.push(Finding::new("case_order_clause", format!("{f:?}")));
        }
        r.inequalities = Some(q);
        r.timings_us.insert("inequalities".into(), t.elapsed().as_micros() as u64);
    }
    Ok(r)
}

/// Graphviz text for the chain graph and its acyclic orientation.
pub fn chain_graph_dot(p: &Poset) -> Result<String> {
    let h = mhcd(p);
    let labels: Vec<String> = h
        .chains()
        .iter()
        .map(|c| c.iter().map(|&x| p.label(x)).collect::<Vec<_>>().join("<"))
        .collect();
    let mut out = chain_graph(p, &h).to_dot("G_P", &labels);
    out.push_str(&acyclic_orientation(p, &h)?.to_dot("Asyc_G_P", &labels));
    Ok(out)
}
