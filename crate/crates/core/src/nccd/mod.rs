//! Noncrossing chain decompositions, p-descents of permutations, and the
//! constructions bounding `Min_nc(P)` between `Min(P)` and `Min_h(P)`.
//!
//! Two chains cross when `a < c < b < d` with `a, b` in one and `c, d` in
//! the other.

mod inequality;
mod pattern;
mod tree;
mod wrap;

pub use inequality::{verify_inequality_chain, InequalityReport};
pub use pattern::{
    is_132_avoiding, is_132e_avoiding, min_d, min_d_e, p_descents, segments_to_decomposition,
    DescentProfile,
};
pub use tree::{build_plane_tree, derive_e, PlaneTree};
pub use wrap::{
    canonical_linear_extension_b, concat_permutation, wrap_poset, CanonicalOrder,
    CaseOrderFinding, WrapPoset,
};

use crate::chain::{
    count_chain_decompositions, dilworth_min, is_chain_decomposition, ChainDecomposition,
    DecompositionFilter,
};
use crate::error::{Error, Result};
use crate::hcd::mhcd;
use crate::poset::Poset;
use crate::scope::Scope;

/// Chain `j` crosses into chain `i`: some `c ∈ C_j`, `b ∈ C_i` with
/// `min(C_i) < c < b < max(C_j)`. Both chains sorted.
fn crosses(p: &Poset, ci: &[usize], cj: &[usize]) -> bool {
    let (a, d) = (ci[0], cj[cj.len() - 1]);
    cj.iter()
        .filter(|&&c| p.lt(a, c))
        .any(|&c| ci.iter().any(|&b| p.lt(c, b) && p.lt(b, d)))
}

pub fn is_noncrossing(p: &Poset, d: &ChainDecomposition) -> Result<bool> {
    if !is_chain_decomposition(p, d.chains()) {
        return Err(Error::InvalidDecomposition(d.display(p)));
    }
    let cs = d.chains();
    Ok((0..cs.len()).all(|i| (0..cs.len()).all(|j| i == j || !crosses(p, &cs[i], &cs[j]))))
}

struct Search<'a> {
    p: &'a Poset,
    order: Vec<usize>,
    lower_bound: usize,
    best: usize,
    witness: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn go(&mut self, depth: usize, chains: &mut Vec<Vec<usize>>) {
        if self.best == self.lower_bound || chains.len() >= self.best {
            return;
        }
        if depth == self.order.len() {
            self.best = chains.len();
            self.witness = chains.clone();
            return;
        }
        let x = self.order[depth];
        for i in 0..chains.len() {
            if !self.p.lt(*chains[i].last().unwrap(), x) {
                continue;
            }
            chains[i].push(x);
            if DecompositionFilter::Noncrossing.accepts(self.p, chains, i, x) {
                self.go(depth + 1, chains);
            }
            chains[i].pop();
        }
        if chains.len() + 1 < self.best {
            chains.push(vec![x]);
            self.go(depth + 1, chains);
            chains.pop();
        }
    }
}

/// `Min_nc(P)` with a witness, by branch and bound. The MHCD (which never
/// crosses) seeds the incumbent and `Min(P)` is the lower bound.
pub fn min_nccd(p: &Poset, scope: &Scope) -> Result<(usize, ChainDecomposition)> {
    Scope::check(
        "noncrossing search",
        p.len(),
        scope.noncrossing,
        "use --unsafe-scope to lift the cap",
    )?;
    let seed = mhcd(p).decomposition().clone();
    let lower_bound = dilworth_min(p).len();
    if seed.len() == lower_bound {
        return Ok((seed.len(), seed));
    }
    let mut s = Search {
        p,
        order: p.a_linear_extension(),
        lower_bound,
        best: seed.len(),
        witness: Vec::new(),
    };
    s.go(0, &mut Vec::new());
    if s.witness.is_empty() {
        return Ok((seed.len(), seed));
    }
    Ok((s.best, ChainDecomposition::from_valid(p, s.witness)))
}

pub fn count_nccds(p: &Poset, scope: &Scope) -> Result<u64> {
    Scope::check(
        "noncrossing enumeration",
        p.len(),
        scope.noncrossing,
        "use --unsafe-scope to lift the cap",
    )?;
    count_chain_decompositions(p, DecompositionFilter::Noncrossing, &Scope::unlimited())
}
