//! Cuts of a homogeneous chain decomposition and the signed chain-count
//! matrix identity `DJ = D↓J + D↑J − D↓J·D↑J`.
//!
//! Matrices stay `k × k` for all three parts; a chain emptied on one side
//! simply contributes a zero row and column there.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hcd::Hcd;
use crate::matrix::IntMatrix;
use crate::poset::{Poset, SignedChainCounts};

/// Each chain split at its height: the first `h(i)` elements go below.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    heights: Vec<usize>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

/// Which sub-poset a signed chain matrix is computed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Whole,
    Lower,
    Upper,
}

pub fn make_cut(h: &Hcd, heights: &[usize]) -> Result<Cut> {
    if heights.len() != h.len() {
        return Err(Error::SizeMismatch {
            expected: h.len(),
            got: heights.len(),
        });
    }
    for (i, (&height, c)) in heights.iter().zip(h.chains()).enumerate() {
        if height > c.len() {
            return Err(Error::HeightOutOfRange {
                chain: i,
                height,
                len: c.len(),
            });
        }
    }
    Ok(Cut {
        heights: heights.to_vec(),
        lower: h.chains().iter().zip(heights).map(|(c, &t)| c[..t].to_vec()).collect(),
        upper: h.chains().iter().zip(heights).map(|(c, &t)| c[t..].to_vec()).collect(),
    })
}

impl Cut {
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn lower(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_chains(&self) -> &[Vec<usize>] {
        &self.lower
    }

    pub fn upper_chains(&self) -> &[Vec<usize>] {
        &self.upper
    }

    /// Elements of `P↓` or `P↑` (all of `P` for [`Part::Whole`]), sorted.
    pub fn elements(&self, part: Part) -> Vec<usize> {
        let mut out: Vec<usize> = match part {
            Part::Whole => self.lower.iter().chain(&self.upper).flatten().copied().collect(),
            Part::Lower => self.lower.iter().flatten().copied().collect(),
            Part::Upper => self.upper.iter().flatten().copied().collect(),
        };
        out.sort_unstable();
        out
    }

    /// The induced sub-poset on one side, with the map from its indices
    /// back to `p`.
    pub fn sub_poset(&self, p: &Poset, part: Part) -> (Poset, Vec<usize>) {
        let elems = self.elements(part);
        (p.induced(&elems), elems)
    }

    /// The nonempty chains of one side as a decomposition of its sub-poset.
    pub fn sub_hcd(&self, p: &Poset, part: Part) -> Result<Hcd> {
        let (q, back) = self.sub_poset(p, part);
        let chains = match part {
            Part::Whole => return Err(Error::InvalidParams("sub_hcd needs a side".into())),
            Part::Lower => &self.lower,
            Part::Upper => &self.upper,
        };
        let local: Vec<Vec<usize>> = chains
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.iter().map(|x| back.binary_search(x).unwrap()).collect())
            .collect();
        Hcd::new(&q, crate::chain::ChainDecomposition::new(&q, local)?)
    }

    /// No chain has an empty side.
    pub fn is_proper(&self) -> bool {
        self.lower.iter().chain(&self.upper).all(|c| !c.is_empty())
    }

    /// Proper, and `C_i↓ < C_j↑` whenever chains `i` and `j` are comparable
    /// (including `i = j`).
    pub fn is_admissible(&self, p: &Poset, h: &Hcd) -> bool {
        self.first_violation(p, h).is_none() && self.is_proper()
    }

    /// A pair `(i, j)` of comparable chains whose lower/upper parts are not
    /// ordered; sides that are empty are skipped.
    pub fn first_violation(&self, p: &Poset, h: &Hcd) -> Option<(usize, usize)> {
        let k = self.heights.len();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| h.chains_comparable(i, j))
            .find(|&(i, j)| match (self.lower[i].last(), self.upper[j].first()) {
                (Some(&a), Some(&b)) => !p.lt(a, b),
                _ => false,
            })
    }
}

/// `D_ij = Σ` signed chain counts from `C_i` to `C_j`, chains confined to
/// the chosen part.
pub fn d_matrix(p: &Poset, h: &Hcd, part: Part, cut: Option<&Cut>) -> Result<IntMatrix> {
    let mut member = vec![true; p.len()];
    if part != Part::Whole {
        let cut = cut.ok_or(Error::MissingCut)?;
        member = vec![false; p.len()];
        for x in cut.elements(part) {
            member[x] = true;
        }
    }
    let counts = SignedChainCounts::within(p, &member);
    let k = h.len();
    let mut d = IntMatrix::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let mut acc = 0i128;
            for &x in h.chain(i) {
                for &y in h.chain(j) {
                    acc += counts.get(x, y) as i128;
                }
            }
            d.set(i, j, acc);
        }
    }
    Ok(d)
}

/// Identity plus the chain-graph adjacency.
pub fn j_matrix(h: &Hcd) -> IntMatrix {
    let k = h.len();
    let mut j = IntMatrix::zeros(k);
    for a in 0..k {
        for b in 0..k {
            if h.chains_comparable(a, b) {
                j.set(a, b, 1);
            }
        }
    }
    j
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub lhs: IntMatrix,
    pub rhs: IntMatrix,
    pub equal: bool,
    pub max_discrepancy: u128,
    /// The cut is admissible, so equality is expected.
    pub hypothesis_met: bool,
    pub proper: bool,
    pub j_invertible: bool,
}

pub fn verify_cut_identity(p: &Poset, h: &Hcd, c: &Cut) -> Result<IdentityReport> {
    identity_report(p, h, c, false)
}

/// `flip_product` adds the product term instead of subtracting it; used to
/// check that the verifier notices a broken identity.
pub(crate) fn identity_report(p: &Poset, h: &Hcd, c: &Cut, flip_product: bool) -> Result<IdentityReport> {
    let j = j_matrix(h);
    let lhs = d_matrix(p, h, Part::Whole, None)?.mul(&j)?;
    let dl = d_matrix(p, h, Part::Lower, Some(c))?.mul(&j)?;
    let du = d_matrix(p, h, Part::Upper, Some(c))?.mul(&j)?;
    let product = dl.mul(&du)?;
    let sum = dl.add(&du)?;
    let rhs = if flip_product {
        sum.add(&product)?
    } else {
        sum.sub(&product)?
    };
    let max_discrepancy = lhs.max_abs_diff(&rhs)?;
    Ok(IdentityReport {
        equal: max_discrepancy == 0,
        max_discrepancy,
        hypothesis_met: c.is_admissible(p, h),
        proper: c.is_proper(),
        j_invertible: j.determinant()? != 0,
        lhs,
        rhs,
    })
}

/// Every height vector with all heights in `1..|C_i|`, in lexicographic order.
fn proper_height_vectors(h: &Hcd) -> Vec<Vec<usize>> {
    let lens: Vec<usize> = h.chains().iter().map(Vec::len).collect();
    if lens.iter().any(|&l| l < 2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![1usize; lens.len()];
    loop {
        out.push(cur.clone());
        let mut i = lens.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < lens[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
    }
}

/// All admissible cuts, by heights in lexicographic order.
pub fn admissible_cuts(p: &Poset, h: &Hcd) -> Vec<Cut> {
    proper_height_vectors(h)
        .into_iter()
        .map(|hs| make_cut(h, &hs).expect("heights in range"))
        .filter(|c| c.is_admissible(p, h))
        .collect()
}

/// Number of proper height vectors, saturating.
pub(crate) fn proper_cut_count(h: &Hcd) -> u64 {
    h.chains()
        .iter()
        .map(|c| c.len().saturating_sub(1) as u64)
        .fold(1u64, |acc, m| acc.saturating_mul(m))
}

/// `count` admissible cuts drawn independently and uniformly (with
/// replacement): heights are drawn uniformly and kept when admissible. Empty
/// when the decomposition has no admissible cut.
pub fn random_admissible_cuts(p: &Poset, h: &Hcd, count: usize, seed: u64) -> Vec<Cut> {
    let total = proper_cut_count(h);
    if total == 0 || h.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if total <= 1 << 16 {
        // the uniform distribution on admissible cuts, without rejection loops
        let all = admissible_cuts(p, h);
        if all.is_empty() {
            return Vec::new();
        }
        return (0..count).map(|_| all[rng.gen_range(0..all.len())].clone()).collect();
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count && attempts < count.saturating_mul(10_000) {
        attempts += 1;
        let hs: Vec<usize> = h.chains().iter().map(|c| rng.gen_range(1..c.len())).collect();
        let c = make_cut(h, &hs).expect("heights in range");
        if c.is_admissible(p, h) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainDecomposition;
    use crate::hcd::mhcd;
    use crate::poset::fixtures::diamond;
    use crate::poset::{generate, Family};

    fn hcd(p: &Poset, parts: Vec<Vec<usize>>) -> Hcd {
        Hcd::new(p, ChainDecomposition::new(p, parts).unwrap()).unwrap()
    }

    /// Signed count by listing every chain from x to y inside `member`.
    fn brute_signed(p: &Poset, member: &[bool], x: usize, y: usize) -> i128 {
        fn go(p: &Poset, member: &[bool], cur: usize, y: usize, len: usize) -> i128 {
            let mut s = if cur == y { if len % 2 == 0 { 1 } else { -1 } } else { 0 };
            for z in 0..p.len() {
                if member[z] && p.lt(cur, z) && p.leq(z, y) {
                    s += go(p, member, z, y, len + 1);
                }
            }
            s
        }
        if !member[x] || !member[y] || !p.leq(x, y) {
            return 0;
        }
        go(p, member, x, y, 0)
    }

    #[test]
    fn cut_shapes() {
        let two = generate(&Family::Chain { n: 2 }, 0).unwrap();
        let h = mhcd(&two);
        let c = make_cut(&h, &[1]).unwrap();
        assert_eq!((c.lower(0), c.upper(0)), (&[0][..], &[1][..]));
        let z = make_cut(&h, &[0]).unwrap();
        assert!(z.elements(Part::Lower).is_empty());
        assert_eq!(z.elements(Part::Upper), vec![0, 1]);
        assert!(matches!(make_cut(&h, &[3]), Err(Error::HeightOutOfRange { .. })));
        assert!(matches!(make_cut(&h, &[1, 1]), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn properness_and_admissibility() {
        let two = generate(&Family::Chain { n: 2 }, 0).unwrap();
        let h = mhcd(&two);
        let c = make_cut(&h, &[1]).unwrap();
        assert!(c.is_proper() && c.is_admissible(&two, &h));
        assert!(!make_cut(&h, &[0]).unwrap().is_proper());

        // a < b < c < d split as {a, c}, {b, d}
        let four = generate(&Family::Chain { n: 4 }, 0).unwrap();
        let h = hcd(&four, vec![vec![0, 2], vec![1, 3]]);
        assert!(make_cut(&h, &[1, 1]).unwrap().is_admissible(&four, &h));
        assert!(!make_cut(&h, &[2, 1]).unwrap().is_admissible(&four, &h));
    }

    #[test]
    fn sub_decompositions_are_homogeneous() {
        let four = generate(&Family::Chain { n: 4 }, 0).unwrap();
        let h = hcd(&four, vec![vec![0, 2], vec![1, 3]]);
        let c = make_cut(&h, &[1, 1]).unwrap();
        assert_eq!(c.sub_hcd(&four, Part::Lower).unwrap().len(), 2);
        assert_eq!(c.sub_hcd(&four, Part::Upper).unwrap().len(), 2);
    }

    #[test]
    fn d_matrix_examples() {
        let two = generate(&Family::Chain { n: 2 }, 0).unwrap();
        let h = mhcd(&two);
        assert_eq!(d_matrix(&two, &h, Part::Whole, None).unwrap().rows(), vec![vec![1]]);
        let c = make_cut(&h, &[1]).unwrap();
        assert_eq!(d_matrix(&two, &h, Part::Lower, Some(&c)).unwrap().rows(), vec![vec![1]]);
        assert_eq!(d_matrix(&two, &h, Part::Upper, Some(&c)).unwrap().rows(), vec![vec![1]]);
        assert_eq!(d_matrix(&two, &h, Part::Lower, None), Err(Error::MissingCut));

        let anti = generate(&Family::Antichain { n: 4 }, 0).unwrap();
        assert_eq!(
            d_matrix(&anti, &mhcd(&anti), Part::Whole, None).unwrap(),
            IntMatrix::identity(4)
        );
    }

    #[test]
    fn d_matrix_matches_chain_listing() {
        for seed in 0..20 {
            let p = generate(&Family::Random { n: 6, density: 0.4 }, seed).unwrap();
            let h = mhcd(&p);
            let d = d_matrix(&p, &h, Part::Whole, None).unwrap();
            let all = vec![true; p.len()];
            for i in 0..h.len() {
                for j in 0..h.len() {
                    let want: i128 = h
                        .chain(i)
                        .iter()
                        .flat_map(|&x| h.chain(j).iter().map(move |&y| (x, y)))
                        .map(|(x, y)| brute_signed(&p, &all, x, y))
                        .sum();
                    assert_eq!(d.get(i, j), want);
                }
            }
        }
    }

    #[test]
    fn j_matrix_examples() {
        let anti = generate(&Family::Antichain { n: 3 }, 0).unwrap();
        assert_eq!(j_matrix(&mhcd(&anti)), IntMatrix::identity(3));
        let four = generate(&Family::Chain { n: 4 }, 0).unwrap();
        let h = hcd(&four, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(j_matrix(&h).rows(), vec![vec![1, 1], vec![1, 1]]);
        let d = diamond();
        assert_eq!(
            j_matrix(&mhcd(&d)).rows(),
            vec![vec![1, 1, 1], vec![1, 1, 0], vec![1, 0, 1]]
        );
    }

    #[test]
    fn identity_examples() {
        let two = generate(&Family::Chain { n: 2 }, 0).unwrap();
        let h = mhcd(&two);
        let r = verify_cut_identity(&two, &h, &make_cut(&h, &[1]).unwrap()).unwrap();
        assert_eq!(r.lhs.rows(), vec![vec![1]]);
        assert!(r.equal && r.hypothesis_met && r.proper);

        let four = generate(&Family::Chain { n: 4 }, 0).unwrap();
        let h = mhcd(&four);
        let r = verify_cut_identity(&four, &h, &make_cut(&h, &[2]).unwrap()).unwrap();
        assert_eq!((r.lhs.rows(), r.rhs.rows()), (vec![vec![1]], vec![vec![1]]));

        let degenerate = verify_cut_identity(&four, &h, &make_cut(&h, &[0]).unwrap()).unwrap();
        assert!(!degenerate.proper && !degenerate.hypothesis_met);

        let flipped = identity_report(&four, &h, &make_cut(&h, &[2]).unwrap(), true).unwrap();
        assert!(!flipped.equal);
        assert_eq!(flipped.max_discrepancy, 2);
    }

    #[test]
    fn identity_on_nested_posets() {
        for seed in 0..30 {
            let p = generate(&Family::Nested { n: 10 }, seed).unwrap();
            let h = mhcd(&p);
            for c in random_admissible_cuts(&p, &h, 10, seed) {
                let r = verify_cut_identity(&p, &h, &c).unwrap();
                assert!(r.equal && r.hypothesis_met, "{:?} {:?}", p.covers(), c.heights());
            }
        }
    }

    #[test]
    fn cut_enumeration() {
        let four = generate(&Family::Chain { n: 4 }, 0).unwrap();
        let h = mhcd(&four);
        let hs: Vec<Vec<usize>> = admissible_cuts(&four, &h).iter().map(|c| c.heights().to_vec()).collect();
        assert_eq!(hs, vec![vec![1], vec![2], vec![3]]);
        assert!(admissible_cuts(&diamond(), &mhcd(&diamond())).is_empty());
        let samples = random_admissible_cuts(&four, &h, 50, 7);
        assert_eq!(samples.len(), 50);
        assert_eq!(samples, random_admissible_cuts(&four, &h, 50, 7));
    }
}
