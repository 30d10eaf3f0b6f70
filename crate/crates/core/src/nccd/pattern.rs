//! 132-avoidance (in the poset order, or relative to a linear extension) and
//! p-descents.

use serde::{Deserialize, Serialize};

use crate::chain::ChainDecomposition;
use crate::error::{Error, Result};
use crate::poset::{is_linear_extension, Poset, PosetPermutation};
use crate::scope::Scope;

fn check_len(p: &Poset, pi: &PosetPermutation) -> Result<()> {
    if pi.len() != p.len() {
        return Err(Error::NotAPermutation(format!(
            "length {} for {} elements",
            pi.len(),
            p.len()
        )));
    }
    Ok(())
}

/// Positions `i1 < i2 < i3` with `π_{i1} < π_{i3} < π_{i2}` in `P`.
fn find_132(p: &Poset, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = order.len();
    for k in 2..n {
        let c = order[k];
        for j in 1..k {
            if !p.lt(c, order[j]) {
                continue;
            }
            if let Some(i) = (0..j).find(|&i| p.lt(order[i], c)) {
                return Some((i, j, k));
            }
        }
    }
    None
}

pub fn is_132_avoiding(p: &Poset, pi: &PosetPermutation) -> Result<bool> {
    check_len(p, pi)?;
    Ok(find_132(p, pi.as_slice()).is_none())
}

/// 132-avoidance of the sequence of `e`-positions of `π`.
pub fn is_132e_avoiding(p: &Poset, e: &PosetPermutation, pi: &PosetPermutation) -> Result<bool> {
    check_len(p, pi)?;
    if !is_linear_extension(p, e) {
        return Err(Error::NotLinearExtension(e.display(p)));
    }
    let pos = e.positions();
    let q: Vec<usize> = pi.as_slice().iter().map(|&x| pos[x]).collect();
    Ok(!has_132_in_ranks(&q))
}

/// Classic 132 pattern in a sequence of distinct integers, in O(n²).
fn has_132_in_ranks(q: &[usize]) -> bool {
    // for each middle-high j, the smallest value before it
    let mut prefix_min = usize::MAX;
    for j in 0..q.len() {
        if prefix_min < q[j] && q[j + 1..].iter().any(|&v| prefix_min < v && v < q[j]) {
            return true;
        }
        prefix_min = prefix_min.min(q[j]);
    }
    false
}

/// The p-descent positions (1-based) of a permutation: `i` is one when
/// `π_i > π_{i+1}`, when the two are incomparable, or when `i = n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentProfile {
    pub permutation: Vec<usize>,
    pub positions: Vec<usize>,
}

impl DescentProfile {
    /// `d_P(π)`
    pub fn count(&self) -> usize {
        self.positions.len()
    }
}

fn is_descent(p: &Poset, a: usize, b: usize) -> bool {
    !p.lt(a, b)
}

pub fn p_descents(p: &Poset, pi: &PosetPermutation) -> Result<DescentProfile> {
    check_len(p, pi)?;
    let o = pi.as_slice();
    let n = o.len();
    let mut positions: Vec<usize> = (0..n.saturating_sub(1))
        .filter(|&i| is_descent(p, o[i], o[i + 1]))
        .map(|i| i + 1)
        .collect();
    if n > 0 {
        positions.push(n);
    }
    Ok(DescentProfile {
        permutation: o.to_vec(),
        positions,
    })
}

/// The maximal ascending runs of a 132-avoiding permutation, as chains.
pub fn segments_to_decomposition(p: &Poset, pi: &PosetPermutation) -> Result<ChainDecomposition> {
    check_len(p, pi)?;
    let o = pi.as_slice();
    if let Some((i, j, k)) = find_132(p, o) {
        return Err(Error::Not132Avoiding(format!(
            "{} {} {} at positions {}, {}, {}",
            p.label(o[i]),
            p.label(o[j]),
            p.label(o[k]),
            i + 1,
            j + 1,
            k + 1
        )));
    }
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for (i, &x) in o.iter().enumerate() {
        if i == 0 || is_descent(p, o[i - 1], x) {
            chains.push(vec![x]);
        } else {
            chains.last_mut().unwrap().push(x);
        }
    }
    ChainDecomposition::new(p, chains)
}

/// Shared exhaustive search: `allowed(prefix, x)` rejects extensions that
/// complete a forbidden pattern ending at `x`.
fn min_descents(
    p: &Poset,
    allowed: &dyn Fn(&[usize], usize) -> bool,
    lower_bound: usize,
) -> (usize, Vec<usize>) {
    struct S<'a> {
        p: &'a Poset,
        allowed: &'a dyn Fn(&[usize], usize) -> bool,
        lower_bound: usize,
        best: usize,
        witness: Vec<usize>,
        used: Vec<bool>,
        prefix: Vec<usize>,
    }
    fn go(s: &mut S, descents: usize) {
        let n = s.p.len();
        if s.best == s.lower_bound || descents + 1 >= s.best {
            return;
        }
        if s.prefix.len() == n {
            s.best = descents + 1;
            s.witness = s.prefix.clone();
            return;
        }
        for x in 0..n {
            if s.used[x] || !(s.allowed)(&s.prefix, x) {
                continue;
            }
            let extra = match s.prefix.last() {
                Some(&y) if is_descent(s.p, y, x) => 1,
                _ => 0,
            };
            s.used[x] = true;
            s.prefix.push(x);
            go(s, descents + extra);
            s.prefix.pop();
            s.used[x] = false;
        }
    }
    let n = p.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut s = S {
        p,
        allowed,
        lower_bound,
        best: n + 1,
        witness: Vec::new(),
        used: vec![false; n],
        prefix: Vec::new(),
    };
    go(&mut s, 0);
    (s.best, s.witness)
}

/// `Min_d(P)`: fewest p-descents over 132-avoiding permutations, with a
/// minimizer.
pub fn min_d(p: &Poset, scope: &Scope) -> Result<(usize, PosetPermutation)> {
    Scope::check(
        "132-avoiding permutation search",
        p.len(),
        scope.permutations,
        "use --unsafe-scope to lift the cap",
    )?;
    let allowed = |prefix: &[usize], x: usize| {
        // x as the last letter of a 132: some a before some b with a < x < b
        let mut seen_low = false;
        for &y in prefix {
            if seen_low && p.lt(x, y) {
                return false;
            }
            seen_low |= p.lt(y, x);
        }
        true
    };
    let lb = crate::chain::dilworth_min(p).len();
    let (d, w) = min_descents(p, &allowed, lb);
    Ok((d, PosetPermutation::new_unchecked(w)))
}

/// `Min_d^e(P)` for one linear extension `e`, with a minimizer.
pub fn min_d_e(p: &Poset, e: &PosetPermutation, scope: &Scope) -> Result<(usize, PosetPermutation)> {
    Scope::check(
        "132^e-avoiding permutation search",
        p.len(),
        scope.permutations,
        "use --unsafe-scope to lift the cap",
    )?;
    if !is_linear_extension(p, e) {
        return Err(Error::NotLinearExtension(e.display(p)));
    }
    let pos = e.positions();
    let allowed = |prefix: &[usize], x: usize| {
        let mut low = usize::MAX;
        for &y in prefix {
            if low < pos[x] && pos[x] < pos[y] {
                return false;
            }
            low = low.min(pos[y]);
        }
        true
    };
    let lb = crate::chain::dilworth_min(p).len();
    let (d, w) = min_descents(p, &allowed, lb);
    Ok((d, PosetPermutation::new_unchecked(w)))
}
