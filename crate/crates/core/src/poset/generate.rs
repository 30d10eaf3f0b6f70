//! Poset families and exhaustive enumeration of labeled posets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{numeric_labels, Poset};
use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::scope::Scope;

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Chain { n: usize },
    Antichain { n: usize },
    /// Subsets of `{1..k}` under inclusion.
    Boolean { k: usize },
    /// `k` incomparable 2-chains `a_i < b_i` and an apex `z` above every
    /// `a_i` but incomparable to every `b_i`.
    Fig2 { k: usize },
    /// Transitive closure of a random DAG; `density` is the edge probability.
    Random { n: usize, density: f64 },
    /// Chains of length >= 2 nested along a random forest: each chain splits
    /// into a lower and an upper block, and a descendant's chain sits between
    /// the two blocks of every ancestor. The MHCD of such a poset always has
    /// an admissible cut.
    Nested { n: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Chain { .. } => "chain",
            Family::Antichain { .. } => "antichain",
            Family::Boolean { .. } => "boolean",
            Family::Fig2 { .. } => "fig2",
            Family::Random { .. } => "random",
            Family::Nested { .. } => "nested",
        }
    }
}

const MAX_BOOLEAN_K: usize = 12;

/// Builds a member of `family`; `seed` only matters for the random families.
pub fn generate(family: &Family, seed: u64) -> Result<Poset> {
    match *family {
        Family::Chain { n } => {
            let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Poset::from_index_covers(n, &covers)
        }
        Family::Antichain { n } => Poset::from_index_covers(n, &[]),
        Family::Boolean { k } => {
            if k > MAX_BOOLEAN_K {
                return Err(Error::InvalidParams(format!(
                    "boolean lattice rank {k} exceeds {MAX_BOOLEAN_K}"
                )));
            }
            let labels: Vec<String> = (0u32..1 << k)
                .map(|s| {
                    let parts: Vec<String> = (0..k)
                        .filter(|i| s >> i & 1 == 1)
                        .map(|i| (i + 1).to_string())
                        .collect();
                    format!("{{{}}}", parts.join(","))
                })
                .collect();
            let mut covers = Vec::new();
            for s in 0usize..1 << k {
                for i in 0..k {
                    if s >> i & 1 == 0 {
                        covers.push((labels[s].as_str(), labels[s | 1 << i].as_str()));
                    }
                }
            }
            Poset::from_cover_relations(&labels, &covers)
        }
        Family::Fig2 { k } => {
            if k == 0 {
                return Err(Error::InvalidParams("fig2 needs k >= 1".into()));
            }
            let mut labels = Vec::with_capacity(2 * k + 1);
            for i in 1..=k {
                labels.push(format!("a{i}"));
                labels.push(format!("b{i}"));
            }
            labels.push("z".to_string());
            let mut covers = Vec::new();
            for i in 1..=k {
                covers.push((format!("a{i}"), format!("b{i}")));
                covers.push((format!("a{i}"), "z".to_string()));
            }
            Poset::from_cover_relations(&labels, &covers)
        }
        Family::Random { n, density } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Error::InvalidParams(format!(
                    "density {density} outside [0, 1]"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut topo: Vec<usize> = (0..n).collect();
            topo.shuffle(&mut rng);
            let mut covers = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(density) {
                        covers.push((topo[i], topo[j]));
                    }
                }
            }
            Poset::from_index_covers(n, &covers)
        }
        Family::Nested { n } => nested(n, seed),
    }
}

fn nested(n: usize, seed: u64) -> Result<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n < 2 {
        return Poset::from_index_covers(n, &[]);
    }
    // chain lengths >= 2 summing to n
    let mut lengths = Vec::new();
    let mut left = n;
    while left > 0 {
        let m = if left <= 3 { left } else { rng.gen_range(2..=left.min(4)) };
        let m = if left - m == 1 { m + 1 } else { m };
        lengths.push(m);
        left -= m;
    }
    let k = lengths.len();
    let parent: Vec<Option<usize>> = (0..k)
        .map(|i| {
            if i == 0 || rng.gen_bool(0.35) {
                None
            } else {
                Some(rng.gen_range(0..i))
            }
        })
        .collect();
    // element ids: node i owns a lower block then an upper block
    let mut slots = Vec::with_capacity(k);
    let mut next = 0;
    for &m in &lengths {
        let low = rng.gen_range(1..m);
        let lower: Vec<usize> = (next..next + low).collect();
        let upper: Vec<usize> = (next + low..next + m).collect();
        next += m;
        slots.push((lower, upper));
    }
    let mut covers = Vec::new();
    for (lower, upper) in &slots {
        let chain: Vec<usize> = lower.iter().chain(upper).copied().collect();
        covers.extend(chain.windows(2).map(|w| (w[0], w[1])));
    }
    for (j, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            covers.push((*slots[p].0.last().unwrap(), slots[j].0[0]));
            covers.push((*slots[j].1.last().unwrap(), slots[p].1[0]));
        }
    }
    let mut relabel: Vec<usize> = (0..n).collect();
    relabel.shuffle(&mut rng);
    let covers: Vec<_> = covers
        .into_iter()
        .map(|(a, b)| (relabel[a], relabel[b]))
        .collect();
    Poset::from_index_covers(n, &covers)
}

const HARD_ENUMERATION_CAP: usize = 8;

/// Every labeled poset on `0..n`, each exactly once.
///
/// Posets on `n + 1` elements arise uniquely from one on `n` elements plus the
/// strict down-set `D` and up-set `U` of the new element, where `D` is
/// down-closed, `U` is up-closed and every member of `D` lies below every
/// member of `U`.
pub fn enumerate_posets(n: usize, scope: &Scope) -> Result<Vec<Poset>> {
    Scope::check(
        "exhaustive poset enumeration",
        n,
        scope.exhaustive_posets.min(HARD_ENUMERATION_CAP),
        "use random sampling for larger posets",
    )?;
    // up[x] = bitmask of elements strictly above x
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    for m in 0..n {
        let mut next_level = Vec::new();
        for up in &level {
            extend_one(m, up, &mut next_level);
        }
        level = next_level;
    }
    let labels = numeric_labels(n);
    Ok(level
        .into_iter()
        .map(|up| {
            let mut lt = BitMatrix::new(n);
            for (x, &mask) in up.iter().enumerate() {
                for y in 0..n {
                    if mask >> y & 1 == 1 {
                        lt.set(x, y, true);
                    }
                }
            }
            Poset::from_closed_unchecked(labels.clone(), lt)
        })
        .collect())
}

fn extend_one(m: usize, up: &[u32], out: &mut Vec<Vec<u32>>) {
    let all: u32 = (1u32 << m) - 1;
    let down = |x: usize| -> u32 { (0..m).filter(|&w| up[w] >> x & 1 == 1).fold(0, |a, w| a | 1 << w) };
    let downs: Vec<u32> = (0..m).map(down).collect();
    for d in 0..=all {
        // down-closed: every element below a member is a member
        if (0..m).any(|x| d >> x & 1 == 1 && downs[x] & !d != 0) {
            continue;
        }
        let mut cand = all & !d;
        for x in 0..m {
            if d >> x & 1 == 1 {
                cand &= up[x];
            }
        }
        // subsets of cand that are up-closed
        let mut u = cand;
        loop {
            if (0..m).all(|x| u >> x & 1 == 0 || up[x] & !u == 0) {
                let new = m;
                let mut next: Vec<u32> = up.to_vec();
                for x in 0..m {
                    if d >> x & 1 == 1 {
                        next[x] |= 1 << new | u;
                    }
                }
                next.push(u);
                out.push(next);
            }
            if u == 0 {
                break;
            }
            u = (u - 1) & cand;
        }
    }
}
