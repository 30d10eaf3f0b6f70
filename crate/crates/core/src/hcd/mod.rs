//! Homogeneous chain decompositions.
//!
//! A decomposition is homogeneous when any two of its chains are either
//! completely comparable or completely incomparable. Every poset has a unique
//! one with the fewest chains (the MHCD); [`mhcd`] finds it by merging chains
//! until no merge keeps the decomposition homogeneous.

mod embedding;
mod graph;
mod lipschitz;

pub use embedding::{
    image_decomposition, in_o_p, induced_chain_permutation, verify_embedding, EmbeddingReport};
pub use graph::{acyclic_orientation, chain_graph, graph_automorphisms, ChainGraph};
pub use lipschitz::{lipschitz_check, LipschitzCheck};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chain::{is_chain_decomposition, ChainDecomposition};
use crate::error::{Error, Result};
use crate::poset::Poset;

/// A chain decomposition known to be homogeneous, with its chain
/// comparability matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hcd {
    decomposition: ChainDecomposition,
    comparable: Vec<Vec<bool>>,
}

/// Chains of one common size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthClass {
    pub size: usize,
    pub chains: Vec<usize>,
}

pub fn is_homogeneous(p: &Poset, parts: &[Vec<usize>]) -> Result<bool> {
    if !is_chain_decomposition(p, parts) {
        return Err(Error::InvalidDecomposition(format!("{parts:?}")));
    }
    Ok(first_mixed_pair(p, parts).is_none())
}

fn first_mixed_pair(p: &Poset, parts: &[Vec<usize>]) -> Option<(usize, usize)> {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let status = p.comparable(parts[i][0], parts[j][0]);
            let mixed = parts[i]
                .iter()
                .any(|&x| parts[j].iter().any(|&y| p.comparable(x, y) != status));
            if mixed {
                return Some((i, j));
            }
        }
    }
    None
}

impl Hcd {
    pub fn new(p: &Poset, decomposition: ChainDecomposition) -> Result<Self> {
        if decomposition.chains().iter().flatten().count() != p.len()
            || !is_chain_decomposition(p, decomposition.chains())
        {
            return Err(Error::InvalidDecomposition(decomposition.display(p)));
        }
        if let Some((i, j)) = first_mixed_pair(p, decomposition.chains()) {
            return Err(Error::NotHomogeneous(format!(
                "chains {i} and {j} of {}",
                decomposition.display(p)
            )));
        }
        Ok(Self::from_valid(p, decomposition))
    }

    fn from_valid(p: &Poset, decomposition: ChainDecomposition) -> Self {
        let k = decomposition.len();
        let comparable = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| i == j || p.comparable(decomposition.min(i), decomposition.min(j)))
                    .collect()
            })
            .collect();
        Hcd {
            decomposition,
            comparable,
        }
    }

    pub fn decomposition(&self) -> &ChainDecomposition {
        &self.decomposition
    }

    pub fn len(&self) -> usize {
        self.decomposition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decomposition.is_empty()
    }

    pub fn chain(&self, i: usize) -> &[usize] {
        self.decomposition.chain(i)
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        self.decomposition.chains()
    }

    /// Chains `i` and `j` are comparable (always true for `i == j`).
    pub fn chains_comparable(&self, i: usize, j: usize) -> bool {
        self.comparable[i][j]
    }

    /// Chains grouped by size, classes in increasing size order.
    pub fn length_classes(&self) -> Vec<LengthClass> {
        let mut classes: Vec<LengthClass> = Vec::new();
        for (i, c) in self.chains().iter().enumerate() {
            match classes.iter_mut().find(|cl| cl.size == c.len()) {
                Some(cl) => cl.chains.push(i),
                None => classes.push(LengthClass {
                    size: c.len(),
                    chains: vec![i],
                }),
            }
        }
        classes.sort_by_key(|cl| cl.size);
        classes
    }
}

/// Which admissible merge the fixpoint iteration performs next.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeOrder {
    /// First admissible pair in lexicographic order of chain indices.
    Lexicographic,
    /// A uniformly random admissible pair, reproducible per seed.
    Shuffled(u64),
}

/// The minimum homogeneous chain decomposition.
pub fn mhcd(p: &Poset) -> Hcd {
    mhcd_with_order(p, MergeOrder::Lexicographic)
}

pub fn mhcd_with_order(p: &Poset, order: MergeOrder) -> Hcd {
    let mut chains: Vec<Vec<usize>> = (0..p.len()).map(|x| vec![x]).collect();
    let mut cmp: Vec<Vec<bool>> = (0..p.len())
        .map(|x| (0..p.len()).map(|y| p.comparable(x, y)).collect())
        .collect();
    let mut rng = match order {
        MergeOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        MergeOrder::Lexicographic => None,
    };
    loop {
        let k = chains.len();
        // comparable, and identical comparability to every other chain
        let mergeable = |i: usize, j: usize| {
            cmp[i][j] && (0..k).all(|l| l == i || l == j || cmp[i][l] == cmp[j][l])
        };
        let pick = match rng.as_mut() {
            None => (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .find(|&(i, j)| mergeable(i, j)),
            Some(rng) => {
                let candidates: Vec<(usize, usize)> = (0..k)
                    .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                    .filter(|&(i, j)| mergeable(i, j))
                    .collect();
                candidates.choose(rng).copied()
            }
        };
        let Some((i, j)) = pick else { break };
        let absorbed = chains.remove(j);
        chains[i].extend(absorbed);
        cmp.remove(j);
        for row in &mut cmp {
            row.remove(j);
        }
    }
    Hcd::from_valid(p, ChainDecomposition::from_valid(p, chains))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;
    use crate::poset::{generate, Family};

    #[test]
    fn homogeneity_examples() {
        let d = diamond();
        let singles: Vec<Vec<usize>> = (0..4).map(|x| vec![x]).collect();
        assert!(is_homogeneous(&d, &singles).unwrap());
        assert!(is_homogeneous(&d, &[vec![0, 3], vec![1], vec![2]]).unwrap());
        // b is comparable to e but not to a
        assert!(!is_homogeneous(&d, &[vec![0, 1], vec![2], vec![3]]).unwrap());
        assert!(is_homogeneous(&d, &[vec![1, 2], vec![0], vec![3]]).is_err());
    }

    #[test]
    fn mhcd_examples() {
        let chain = generate(&Family::Chain { n: 6 }, 0).unwrap();
        assert_eq!(mhcd(&chain).len(), 1);
        for k in 1..=4 {
            let f = generate(&Family::Fig2 { k }, 0).unwrap();
            let h = mhcd(&f);
            assert_eq!(h.len(), 2 * k + 1);
            assert!(h.chains().iter().all(|c| c.len() == 1));
        }
        let d = diamond();
        let h = mhcd(&d);
        assert_eq!(h.chains(), &[vec![0, 3], vec![1], vec![2]]);
        assert!(h.chains_comparable(0, 1) && !h.chains_comparable(1, 2));
        assert_eq!(
            h.length_classes(),
            vec![
                LengthClass { size: 1, chains: vec![1, 2] },
                LengthClass { size: 2, chains: vec![0] }
            ]
        );
    }

    #[test]
    fn shuffled_orders_agree() {
        for seed in 0..10 {
            let p = generate(&Family::Random { n: 9, density: 0.3 }, seed).unwrap();
            let reference = mhcd(&p);
            for s in 0..20 {
                assert_eq!(mhcd_with_order(&p, MergeOrder::Shuffled(s)), reference);
            }
        }
    }

    #[test]
    fn constructor_rejects_mixed_pairs() {
        let d = diamond();
        let bad = ChainDecomposition::new(&d, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        assert!(matches!(Hcd::new(&d, bad), Err(Error::NotHomogeneous(_))));
        let empty = Poset::from_index_covers(0, &[]).unwrap();
        assert!(mhcd(&empty).is_empty());
    }
}
