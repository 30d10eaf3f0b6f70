//! Poset automorphisms acting on the chains of the MHCD.
//!
//! Every automorphism permutes the MHCD chains, giving a map from `Aut(P)`
//! into the automorphisms of the oriented chain graph that also preserve the
//! chain-size classes. [`verify_embedding`] checks that this map is well
//! defined, injective and a homomorphism.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{acyclic_orientation, chain_graph, graph_automorphisms, mhcd, Hcd};
use crate::error::{Error, Result};
use crate::poset::{automorphisms, is_automorphism, Permutation, Poset};
use crate::scope::Scope;

/// Membership in the group of chain permutations that keep every chain
/// inside its size class.
pub fn in_o_p(h: &Hcd, chain_perm: &Permutation) -> Result<bool> {
    if chain_perm.len() != h.len() || !chain_perm.is_valid() {
        return Err(Error::SizeMismatch {
            expected: h.len(),
            got: chain_perm.len(),
        });
    }
    Ok((0..h.len()).all(|i| h.chain(i).len() == h.chain(chain_perm.apply(i)).len()))
}

/// The chain permutation `i -> j` where `g` maps chain `i` into chain `j`.
pub fn induced_chain_permutation(p: &Poset, h: &Hcd, g: &Permutation) -> Result<Permutation> {
    if !is_automorphism(p, g) {
        return Err(Error::NotAutomorphism(format!("{:?}", g.0)));
    }
    let d = h.decomposition();
    let mut image = Vec::with_capacity(h.len());
    for (i, chain) in h.chains().iter().enumerate() {
        let mut targets: Vec<usize> = chain.iter().map(|&x| d.owner(g.apply(x))).collect();
        targets.sort_unstable();
        targets.dedup();
        if targets.len() != 1 {
            return Err(Error::ChainScattered { chain: i, targets });
        }
        image.push(targets[0]);
    }
    let perm = Permutation(image);
    if !perm.is_valid() {
        return Err(Error::TheoremViolation {
            check: "induced chain permutation",
            witness: format!("chain map {:?} is not a bijection", perm.0),
        });
    }
    Ok(perm)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    /// `|Aut(P)|`
    pub aut_poset: usize,
    /// `|Aut(oriented chain graph) ∩ O_P|`
    pub aut_oriented_in_op: usize,
    /// `|Aut(chain graph) ∩ O_P|`
    pub aut_graph_in_op: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub homomorphism: bool,
    pub image_in_oriented: bool,
    pub image_in_graph: bool,
    /// Reported only: whether the induced map reaches the whole target group.
    pub onto_oriented: bool,
    pub onto_graph: bool,
    pub witness: Option<String>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.well_defined
            && self.injective
            && self.homomorphism
            && self.image_in_oriented
            && self.image_in_graph
    }
}

/// A generating set chosen greedily: each element not yet in the subgroup
/// generated so far is added.
fn generators(group: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = group.first() else {
        return Vec::new();
    };
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(first.len())]);
    let mut gens: Vec<Permutation> = Vec::new();
    for g in group {
        if span.contains(g) {
            continue;
        }
        gens.push(g.clone());
        let mut queue: VecDeque<Permutation> = span.iter().cloned().collect();
        while let Some(h) = queue.pop_front() {
            for s in &gens {
                let next = h.compose(s);
                if span.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    gens
}

pub fn verify_embedding(p: &Poset, scope: &Scope) -> Result<EmbeddingReport> {
    verify_embedding_with(p, scope, &|_, perm| perm)
}

/// As [`verify_embedding`], with a hook applied to each induced permutation
/// (used to inject faults when testing the verifier).
pub(crate) fn verify_embedding_with(
    p: &Poset,
    scope: &Scope,
    tamper: &dyn Fn(&Permutation, Permutation) -> Permutation,
) -> Result<EmbeddingReport> {
    let h = mhcd(p);
    let oriented = acyclic_orientation(p, &h)?;
    let undirected = chain_graph(p, &h);
    let auts = automorphisms(p, scope)?;
    let in_op = |g: &Permutation| in_o_p(&h, g).unwrap_or(false);
    let target_oriented: Vec<Permutation> = graph_automorphisms(&oriented, true, scope)?
        .into_iter()
        .filter(in_op)
        .collect();
    let target_graph: Vec<Permutation> = graph_automorphisms(&undirected, false, scope)?
        .into_iter()
        .filter(in_op)
        .collect();

    let mut report = EmbeddingReport {
        aut_poset: auts.len(),
        aut_oriented_in_op: target_oriented.len(),
        aut_graph_in_op: target_graph.len(),
        well_defined: true,
        injective: true,
        homomorphism: true,
        image_in_oriented: true,
        image_in_graph: true,
        onto_oriented: false,
        onto_graph: false,
        witness: None,
    };

    let mut induced: HashMap<Permutation, Permutation> = HashMap::with_capacity(auts.len());
    for g in &auts {
        match induced_chain_permutation(p, &h, g) {
            Ok(perm) => {
                induced.insert(g.clone(), tamper(g, perm));
            }
            Err(e) => {
                report.well_defined = false;
                report.witness.get_or_insert(format!("g = {:?}: {e}", g.0));
            }
        }
    }
    if !report.well_defined {
        report.injective = false;
        report.homomorphism = false;
        report.image_in_oriented = false;
        report.image_in_graph = false;
        return Ok(report);
    }

    let oriented_set: HashSet<&Permutation> = target_oriented.iter().collect();
    let graph_set: HashSet<&Permutation> = target_graph.iter().collect();
    let mut images: HashMap<&Permutation, &Permutation> = HashMap::new();
    for g in &auts {
        let img = &induced[g];
        if let Some(prev) = images.insert(img, g) {
            if report.injective {
                report.injective = false;
                report.witness.get_or_insert(format!(
                    "{:?} and {:?} induce the same chain permutation {:?}",
                    prev.0, g.0, img.0
                ));
            }
        }
        if !oriented_set.contains(img) {
            report.image_in_oriented = false;
            report
                .witness
                .get_or_insert(format!("image {:?} of {:?} misses the oriented target", img.0, g.0));
        }
        if !graph_set.contains(img) {
            report.image_in_graph = false;
            report
                .witness
                .get_or_insert(format!("image {:?} of {:?} misses the graph target", img.0, g.0));
        }
    }

    // φ(g ∘ s) = φ(g) ∘ φ(s) over all g and a generating set suffices.
    'hom: for s in generators(&auts) {
        for g in &auts {
            let gs = g.compose(&s);
            let Some(lhs) = induced.get(&gs) else {
                report.homomorphism = false;
                report
                    .witness
                    .get_or_insert(format!("{:?} ∘ {:?} is not an automorphism", g.0, s.0));
                break 'hom;
            };
            let rhs = induced[g].compose(&induced[&s]);
            if *lhs != rhs {
                report.homomorphism = false;
                report.witness.get_or_insert(format!(
                    "φ({:?} ∘ {:?}) = {:?} but φ(g) ∘ φ(s) = {:?}",
                    g.0, s.0, lhs.0, rhs.0
                ));
                break 'hom;
            }
        }
    }

    report.onto_oriented = report.injective && images.len() == target_oriented.len();
    report.onto_graph = report.injective && images.len() == target_graph.len();
    Ok(report)
}

/// The chain family obtained by applying `g` elementwise to `h`.
pub fn image_decomposition(h: &Hcd, g: &Permutation) -> Vec<Vec<usize>> {
    h.chains()
        .iter()
        .map(|c| c.iter().map(|&x| g.apply(x)).collect())
        .collect()
}
