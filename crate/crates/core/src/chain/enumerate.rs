//! Exhaustive enumeration of chain decompositions.
//!
//! Elements are placed in a fixed linear-extension order, so a new element can
//! only extend a chain at its top. Both supported filters are hereditary (the
//! restriction of a valid decomposition to a prefix is valid), which lets them
//! prune partial assignments.

use super::ChainDecomposition;
use crate::error::Result;
use crate::poset::Poset;
use crate::scope::Scope;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionFilter {
    Any,
    Homogeneous,
    Noncrossing,
}

impl DecompositionFilter {
    /// Whether adding `x` (the latest element) to `chains[target]` keeps the
    /// partial decomposition acceptable. `chains[target]` already holds `x`.
    pub(crate) fn accepts(self, p: &Poset, chains: &[Vec<usize>], target: usize, x: usize) -> bool {
        match self {
            DecompositionFilter::Any => true,
            DecompositionFilter::Homogeneous => {
                let own = &chains[target];
                chains.iter().enumerate().all(|(j, other)| {
                    if j == target {
                        return true;
                    }
                    let status = p.comparable(x, other[0]);
                    other.iter().all(|&y| p.comparable(x, y) == status)
                        && (own.len() == 1 || p.comparable(own[0], other[0]) == status)
                })
            }
            DecompositionFilter::Noncrossing => {
                // x can only be the top `d` of a crossing a < c < b < d
                let own = &chains[target];
                let below = &own[..own.len() - 1];
                chains.iter().enumerate().all(|(j, other)| {
                    j == target
                        || !below.iter().any(|&c| {
                            other.iter().any(|&a| p.lt(a, c))
                                && other.iter().any(|&b| p.lt(c, b) && p.lt(b, x))
                        })
                })
            }
        }
    }
}

fn walk(
    p: &Poset,
    order: &[usize],
    depth: usize,
    chains: &mut Vec<Vec<usize>>,
    filter: DecompositionFilter,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if depth == order.len() {
        visit(chains);
        return;
    }
    let x = order[depth];
    for i in 0..chains.len() {
        if !p.lt(*chains[i].last().unwrap(), x) {
            continue;
        }
        chains[i].push(x);
        if filter.accepts(p, chains, i, x) {
            walk(p, order, depth + 1, chains, filter, visit);
        }
        chains[i].pop();
    }
    chains.push(vec![x]);
    let last = chains.len() - 1;
    if filter.accepts(p, chains, last, x) {
        walk(p, order, depth + 1, chains, filter, visit);
    }
    chains.pop();
}

pub(crate) fn for_each_chain_decomposition(
    p: &Poset,
    filter: DecompositionFilter,
    scope: &Scope,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) -> Result<()> {
    Scope::check(
        "chain decomposition enumeration",
        p.len(),
        scope.chain_decompositions,
        "the number of set partitions grows too fast",
    )?;
    let order = p.a_linear_extension();
    let mut chains = Vec::new();
    walk(p, &order, 0, &mut chains, filter, visit);
    Ok(())
}

/// Every chain decomposition accepted by `filter`, each exactly once.
pub fn enumerate_chain_decompositions(
    p: &Poset,
    filter: DecompositionFilter,
    scope: &Scope,
) -> Result<Vec<ChainDecomposition>> {
    let mut out = Vec::new();
    for_each_chain_decomposition(p, filter, scope, &mut |chains| {
        out.push(ChainDecomposition::from_valid(p, chains.to_vec()));
    })?;
    Ok(out)
}

pub fn count_chain_decompositions(
    p: &Poset,
    filter: DecompositionFilter,
    scope: &Scope,
) -> Result<u64> {
    let mut count = 0u64;
    for_each_chain_decomposition(p, filter, scope, &mut |_| count += 1)?;
    Ok(count)
}
