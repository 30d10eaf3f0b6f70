//! Chain decompositions: partitions of the ground set into chains.

mod dilworth;
mod enumerate;

pub use dilworth::{dilworth_min, max_antichain, max_matching};
pub use enumerate::{
    count_chain_decompositions, enumerate_chain_decompositions, DecompositionFilter,
};

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A family of disjoint chains covering the poset. Each chain is stored in
/// increasing order; chains are kept in canonical order (by smallest element
/// index) so decompositions compare as values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainDecomposition {
    chains: Vec<Vec<usize>>,
    owner: Vec<usize>,
}

pub fn is_chain_decomposition(p: &Poset, parts: &[Vec<usize>]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for part in parts {
        if part.is_empty() || !p.is_chain(part) {
            return false;
        }
        for &x in part {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
    }
    seen.into_iter().all(|s| s)
}

impl ChainDecomposition {
    pub fn new(p: &Poset, parts: Vec<Vec<usize>>) -> Result<Self> {
        if !is_chain_decomposition(p, &parts) {
            return Err(Error::InvalidDecomposition(format!("{parts:?}")));
        }
        Ok(Self::from_valid(p, parts))
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, parts: &[Vec<S>]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|c| c.iter().map(|l| p.index_of(l.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::new(p, parts)
    }

    /// Caller guarantees validity; chains are sorted and canonicalized here.
    pub(crate) fn from_valid(p: &Poset, mut parts: Vec<Vec<usize>>) -> Self {
        for c in &mut parts {
            c.sort_by(|&a, &b| {
                if a == b {
                    std::cmp::Ordering::Equal
                } else if p.lt(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
        }
        parts.sort_by_key(|c| *c.iter().min().unwrap());
        let mut owner = vec![0; p.len()];
        for (i, c) in parts.iter().enumerate() {
            for &x in c {
                owner[x] = i;
            }
        }
        ChainDecomposition {
            chains: parts,
            owner,
        }
    }

    pub fn singletons(p: &Poset) -> Self {
        Self::from_valid(p, (0..p.len()).map(|x| vec![x]).collect())
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    pub fn chain(&self, i: usize) -> &[usize] {
        &self.chains[i]
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Index of the chain containing `x`.
    pub fn owner(&self, x: usize) -> usize {
        self.owner[x]
    }

    pub fn min(&self, i: usize) -> usize {
        self.chains[i][0]
    }

    pub fn max(&self, i: usize) -> usize {
        *self.chains[i].last().unwrap()
    }

    /// `chain: x1 < x2 < ... < xk`, one line per chain.
    pub fn to_text(&self, p: &Poset) -> String {
        let mut out = String::new();
        for c in &self.chains {
            let labels: Vec<&str> = c.iter().map(|&x| p.label(x)).collect();
            let _ = writeln!(out, "chain: {}", labels.join(" < "));
        }
        out
    }

    pub fn display(&self, p: &Poset) -> String {
        let parts: Vec<String> = self
            .chains
            .iter()
            .map(|c| {
                let labels: Vec<&str> = c.iter().map(|&x| p.label(x)).collect();
                format!("{{{}}}", labels.join("<"))
            })
            .collect();
        parts.join(" ")
    }
}

pub fn parse_decomposition(p: &Poset, text: &str) -> Result<ChainDecomposition> {
    let mut parts = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rest = line.strip_prefix("chain:").ok_or_else(|| Error::Parse {
            line: i + 1,
            message: format!("expected `chain: ...`, found `{line}`"),
        })?;
        let chain = rest
            .split('<')
            .map(|l| p.index_of(l.trim()))
            .collect::<Result<Vec<_>>>()?;
        parts.push(chain);
    }
    ChainDecomposition::new(p, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;

    #[test]
    fn predicate_examples() {
        let chain = Poset::from_index_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_chain_decomposition(&chain, &[vec![0, 1, 2]]));
        let d = diamond();
        assert!(is_chain_decomposition(&d, &[vec![0, 3], vec![1], vec![2]]));
        assert!(!is_chain_decomposition(&d, &[vec![0, 3], vec![1, 2]]));
        // overlap and missing elements
        assert!(!is_chain_decomposition(&d, &[vec![0, 3], vec![1, 3], vec![2]]));
        assert!(!is_chain_decomposition(&d, &[vec![0, 3], vec![1]]));
        let empty = Poset::from_index_covers(0, &[]).unwrap();
        assert!(is_chain_decomposition(&empty, &[]));
    }

    #[test]
    fn canonical_form_and_text() {
        let d = diamond();
        let a = ChainDecomposition::new(&d, vec![vec![2], vec![3, 0], vec![1]]).unwrap();
        let b = ChainDecomposition::new(&d, vec![vec![0, 3], vec![1], vec![2]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.chain(0), &[0, 3]);
        assert_eq!(a.owner(3), 0);
        let text = a.to_text(&d);
        assert_eq!(text, "chain: e < ab\nchain: a\nchain: b\n");
        assert_eq!(parse_decomposition(&d, &text).unwrap(), a);
        assert!(parse_decomposition(&d, "chain: a < b\nchain: e\nchain: ab\n").is_err());
    }
}
