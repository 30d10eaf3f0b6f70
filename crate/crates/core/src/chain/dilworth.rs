//! Dilworth decomposition via maximum matching in the split comparability
//! graph (left copy `x` joined to right copy `y` iff `x < y`).

use std::collections::VecDeque;

use super::ChainDecomposition;
use crate::poset::Poset;

const FREE: usize = usize::MAX;

/// Hopcroft–Karp. Returns `succ[x]` = right partner of left `x`, or `None`.
pub fn max_matching(p: &Poset) -> Vec<Option<usize>> {
    let n = p.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|x| p.relation().row_ones(x).collect()).collect();
    let mut match_l = vec![FREE; n];
    let mut match_r = vec![FREE; n];
    let mut dist = vec![0usize; n];

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        let mut found = false;
        for x in 0..n {
            if match_l[x] == FREE {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = usize::MAX;
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                let w = match_r[y];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[x] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        let mut it = vec![0usize; n];
        for x in 0..n {
            if match_l[x] == FREE {
                augment(x, &adj, &mut match_l, &mut match_r, &mut dist, &mut it);
            }
        }
    }
    match_l
        .into_iter()
        .map(|y| if y == FREE { None } else { Some(y) })
        .collect()
}

fn augment(
    x: usize,
    adj: &[Vec<usize>],
    match_l: &mut [usize],
    match_r: &mut [usize],
    dist: &mut [usize],
    it: &mut [usize],
) -> bool {
    while it[x] < adj[x].len() {
        let y = adj[x][it[x]];
        it[x] += 1;
        let w = match_r[y];
        if w == FREE || (dist[w] == dist[x] + 1 && augment(w, adj, match_l, match_r, dist, it)) {
            match_l[x] = y;
            match_r[y] = x;
            return true;
        }
    }
    dist[x] = usize::MAX;
    false
}

/// A chain decomposition with exactly `Min(P)` chains.
pub fn dilworth_min(p: &Poset) -> ChainDecomposition {
    let n = p.len();
    let succ = max_matching(p);
    let mut has_pred = vec![false; n];
    for y in succ.iter().flatten() {
        has_pred[*y] = true;
    }
    let mut chains = Vec::new();
    for start in (0..n).filter(|&x| !has_pred[x]) {
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = succ[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }
    ChainDecomposition::from_valid(p, chains)
}

/// A maximum antichain, read off the König vertex cover of the matching.
pub fn max_antichain(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let succ = max_matching(p);
    let mut match_r = vec![FREE; n];
    for (x, y) in succ.iter().enumerate() {
        if let Some(y) = *y {
            match_r[y] = x;
        }
    }
    // alternating reachability from free left vertices
    let mut seen_l = vec![false; n];
    let mut seen_r = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| succ[x].is_none()).collect();
    for &x in &queue {
        seen_l[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for y in p.relation().row_ones(x) {
            if seen_r[y] || succ[x] == Some(y) {
                continue;
            }
            seen_r[y] = true;
            let w = match_r[y];
            if w != FREE && !seen_l[w] {
                seen_l[w] = true;
                queue.push_back(w);
            }
        }
    }
    // cover = (L \ Z) ∪ (R ∩ Z); antichain = elements with neither copy covered
    (0..n).filter(|&x| seen_l[x] && !seen_r[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;
    use crate::poset::{generate, Family};

    #[test]
    fn examples() {
        let anti = generate(&Family::Antichain { n: 5 }, 0).unwrap();
        assert_eq!(dilworth_min(&anti).len(), 5);
        assert_eq!(max_antichain(&anti), vec![0, 1, 2, 3, 4]);

        let chain = generate(&Family::Chain { n: 5 }, 0).unwrap();
        assert_eq!(dilworth_min(&chain).len(), 1);
        assert_eq!(max_antichain(&chain).len(), 1);

        let d = diamond();
        assert_eq!(dilworth_min(&d).len(), 2);
        let a = max_antichain(&d);
        assert_eq!(a, vec![1, 2]);
    }

    #[test]
    fn boolean_three_antichain_matches_exhaustive_search() {
        let b3 = generate(&Family::Boolean { k: 3 }, 0).unwrap();
        let mut best = 0;
        for mask in 0u32..1 << 8 {
            let set: Vec<usize> = (0..8).filter(|i| mask >> i & 1 == 1).collect();
            if b3.is_antichain(&set) {
                best = best.max(set.len());
            }
        }
        assert_eq!(best, 3);
        let a = max_antichain(&b3);
        assert_eq!(a.len(), 3);
        assert!(b3.is_antichain(&a));
        assert_eq!(dilworth_min(&b3).len(), 3);
    }

    #[test]
    fn empty_poset() {
        let e = Poset::from_index_covers(0, &[]).unwrap();
        assert!(dilworth_min(&e).is_empty());
        assert!(max_antichain(&e).is_empty());
    }
}
