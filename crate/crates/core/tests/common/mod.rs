//! Brute-force oracles, written straight from the definitions and sharing no
//! code with the library beyond the `Poset` container.
#![allow(dead_code)]

use poset_decomp::bitmatrix::BitMatrix;
use poset_decomp::poset::numeric_labels;
use poset_decomp::Poset;

pub type Mat = Vec<Vec<i128>>;

/// Every strict partial order on `0..n`, by filtering all relations.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            rel[i][j] = mask >> b & 1 == 1;
        }
        for i in 0..n {
            for j in 0..n {
                if !rel[i][j] {
                    continue;
                }
                if rel[j][i] {
                    continue 'mask;
                }
                for k in 0..n {
                    if rel[j][k] && !rel[i][k] {
                        continue 'mask;
                    }
                }
            }
        }
        out.push(from_relation(&rel));
    }
    out
}

pub fn from_relation(rel: &[Vec<bool>]) -> Poset {
    let n = rel.len();
    let mut m = BitMatrix::new(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, rel[i][j]);
        }
    }
    Poset::from_strict_order(numeric_labels(n), m).unwrap()
}

pub fn all_posets_up_to(nmax: usize) -> Vec<Poset> {
    (0..=nmax).flat_map(all_posets).collect()
}

pub fn is_chain(p: &Poset, s: &[usize]) -> bool {
    s.iter().all(|&x| s.iter().all(|&y| x == y || p.comparable(x, y)))
}

pub fn is_total_order(p: &Poset) -> bool {
    is_chain(p, &(0..p.len()).collect::<Vec<_>>())
}

/// Sorts a chain bottom to top.
pub fn sorted_chain(p: &Poset, mut c: Vec<usize>) -> Vec<usize> {
    c.sort_by(|&x, &y| {
        if x == y {
            std::cmp::Ordering::Equal
        } else if p.lt(x, y) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    c
}

/// Canonical form: chains sorted internally, then by their smallest index.
pub fn normalize(p: &Poset, parts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = parts.iter().map(|c| sorted_chain(p, c.clone())).collect();
    v.sort_by_key(|c| *c.iter().min().unwrap());
    v
}

/// Every partition of the ground set into chains.
pub fn chain_partitions(p: &Poset) -> Vec<Vec<Vec<usize>>> {
    fn go(p: &Poset, x: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if x == p.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..cur.len() {
            if cur[i].iter().all(|&y| p.comparable(x, y)) {
                cur[i].push(x);
                go(p, x + 1, cur, out);
                cur[i].pop();
            }
        }
        cur.push(vec![x]);
        go(p, x + 1, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(p, 0, &mut Vec::new(), &mut out);
    out
}

pub fn min_chain_cover(p: &Poset) -> usize {
    chain_partitions(p).iter().map(Vec::len).min().unwrap_or(0)
}

pub fn chains_comparable(p: &Poset, a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|&x| b.iter().all(|&y| p.comparable(x, y)))
}

pub fn is_homogeneous(p: &Poset, parts: &[Vec<usize>]) -> bool {
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let any = a.iter().any(|&x| b.iter().any(|&y| p.comparable(x, y)));
            if any && !chains_comparable(p, a, b) {
                return false;
            }
        }
    }
    true
}

pub fn is_noncrossing(p: &Poset, parts: &[Vec<usize>]) -> bool {
    for (i, ci) in parts.iter().enumerate() {
        for (j, cj) in parts.iter().enumerate() {
            if i == j {
                continue;
            }
            for &a in ci {
                for &b in ci {
                    for &c in cj {
                        for &d in cj {
                            if p.lt(a, c) && p.lt(c, b) && p.lt(b, d) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// The homogeneous chain partitions of minimum size.
pub fn minimum_hcds(p: &Poset) -> Vec<Vec<Vec<usize>>> {
    let hom: Vec<_> = chain_partitions(p)
        .into_iter()
        .filter(|c| is_homogeneous(p, c))
        .collect();
    let best = hom.iter().map(Vec::len).min().unwrap_or(0);
    hom.into_iter().filter(|c| c.len() == best).collect()
}

pub fn min_noncrossing(p: &Poset) -> usize {
    chain_partitions(p)
        .into_iter()
        .filter(|c| is_noncrossing(p, c))
        .map(|c| c.len())
        .min()
        .unwrap_or(0)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(n, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

pub fn avoids_132(p: &Poset, pi: &[usize]) -> bool {
    let n = pi.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if p.lt(pi[i], pi[k]) && p.lt(pi[k], pi[j]) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn avoids_132e(e: &[usize], pi: &[usize]) -> bool {
    let mut pos = vec![0; e.len()];
    for (i, &x) in e.iter().enumerate() {
        pos[x] = i;
    }
    let q: Vec<usize> = pi.iter().map(|&x| pos[x]).collect();
    let n = q.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if q[i] < q[k] && q[k] < q[j] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_linear_extension(p: &Poset, e: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in e {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    e.len() == p.len()
        && (0..e.len()).all(|i| (0..i).all(|j| !p.lt(e[i], e[j])))
}

/// Positions `i` (1-based) where `π_i` is not below `π_{i+1}`, plus `n`.
pub fn p_descents(p: &Poset, pi: &[usize]) -> usize {
    if pi.is_empty() {
        return 0;
    }
    (0..pi.len() - 1).filter(|&i| !p.lt(pi[i], pi[i + 1])).count() + 1
}

/// Maximal increasing runs of `π`.
pub fn segments(p: &Poset, pi: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in pi.iter().enumerate() {
        if i > 0 && p.lt(pi[i - 1], x) {
            out.last_mut().unwrap().push(x);
        } else {
            out.push(vec![x]);
        }
    }
    out
}

/// Even minus odd increasing chains from `x` to `y` using only `allowed`.
pub fn signed_chains(p: &Poset, allowed: &[bool], x: usize, y: usize) -> i128 {
    fn go(p: &Poset, allowed: &[bool], cur: usize, y: usize, sign: i128) -> i128 {
        let mut acc = if cur == y { sign } else { 0 };
        for z in 0..p.len() {
            if allowed[z] && p.lt(cur, z) && p.leq(z, y) {
                acc += go(p, allowed, z, y, -sign);
            }
        }
        acc
    }
    if !allowed[x] || !allowed[y] || !p.leq(x, y) {
        return 0;
    }
    go(p, allowed, x, y, 1)
}

/// `μ(x, y)` on the sub-poset `allowed`, by the defining recursion.
pub fn mobius(p: &Poset, allowed: &[bool]) -> Mat {
    let n = p.len();
    let mut mu = vec![vec![0i128; n]; n];
    // process pairs by increasing interval size
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if allowed[x] && allowed[y] && p.leq(x, y) {
                let size = (0..n).filter(|&z| allowed[z] && p.leq(x, z) && p.leq(z, y)).count();
                pairs.push((size, x, y));
            }
        }
    }
    pairs.sort();
    for (_, x, y) in pairs {
        mu[x][y] = if x == y {
            1
        } else {
            -(0..n)
                .filter(|&z| allowed[z] && p.leq(x, z) && p.lt(z, y))
                .map(|z| mu[x][z])
                .sum::<i128>()
        };
    }
    mu
}

/// `D` over the scoped elements: entry `(i, j)` sums the signed chain counts
/// from members of chain `i` to members of chain `j`.
pub fn d_matrix(p: &Poset, chains: &[Vec<usize>], allowed: &[bool]) -> Mat {
    let k = chains.len();
    let mut d = vec![vec![0i128; k]; k];
    for i in 0..k {
        for j in 0..k {
            for &x in &chains[i] {
                for &y in &chains[j] {
                    d[i][j] += signed_chains(p, allowed, x, y);
                }
            }
        }
    }
    d
}

pub fn d_matrix_mobius(p: &Poset, chains: &[Vec<usize>], allowed: &[bool]) -> Mat {
    let mu = mobius(p, allowed);
    let k = chains.len();
    let mut d = vec![vec![0i128; k]; k];
    for i in 0..k {
        for j in 0..k {
            for &x in &chains[i] {
                for &y in &chains[j] {
                    d[i][j] += mu[x][y];
                }
            }
        }
    }
    d
}

pub fn j_matrix(p: &Poset, chains: &[Vec<usize>]) -> Mat {
    let k = chains.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i128::from(i == j || chains_comparable(p, &chains[i], &chains[j])))
                .collect()
        })
        .collect()
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let k = a.len();
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn add(a: &Mat, b: &Mat, sign: i128) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + sign * y).collect())
        .collect()
}

/// Whether a cut at `heights` is proper and puts every lower part below
/// every upper part of a comparable chain.
pub fn cut_admissible(p: &Poset, chains: &[Vec<usize>], heights: &[usize]) -> bool {
    let k = chains.len();
    if (0..k).any(|i| heights[i] == 0 || heights[i] >= chains[i].len()) {
        return false;
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && !chains_comparable(p, &chains[i], &chains[j]) {
                continue;
            }
            for &x in &chains[i][..heights[i]] {
                for &y in &chains[j][heights[j]..] {
                    if !p.lt(x, y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `DJ == D↓J + D↑J − D↓J·D↑J` for one cut, with every matrix from the
/// chain-counting oracle. `chains` must be sorted bottom to top.
pub fn cut_identity_holds(p: &Poset, chains: &[Vec<usize>], heights: &[usize]) -> bool {
    let n = p.len();
    let mut lower = vec![false; n];
    for (c, &h) in chains.iter().zip(heights) {
        for &x in &c[..h] {
            lower[x] = true;
        }
    }
    let upper: Vec<bool> = lower.iter().map(|b| !b).collect();
    let j = j_matrix(p, chains);
    let dj = mul(&d_matrix(p, chains, &vec![true; n]), &j);
    let dl = mul(&d_matrix(p, chains, &lower), &j);
    let du = mul(&d_matrix(p, chains, &upper), &j);
    dj == add(&add(&dl, &du, 1), &mul(&dl, &du), -1)
}

/// Automorphisms as index maps.
pub fn automorphisms(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    permutations(n)
        .into_iter()
        .filter(|s| (0..n).all(|x| (0..n).all(|y| p.lt(x, y) == p.lt(s[x], s[y]))))
        .collect()
}

pub fn catalan(m: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for k in 1..=m {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    c
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
