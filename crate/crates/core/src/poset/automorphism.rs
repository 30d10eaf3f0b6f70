//! Brute-force automorphism and isomorphism search, pruned by
//! (down-degree, up-degree) signatures.

use serde::{Deserialize, Serialize};

use super::Poset;
use crate::error::Result;
use crate::scope::Scope;

/// Permutation of `0..n` in image form: `self[x]` is the image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    /// `(self ∘ other)(x) = self(other(x))`
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .all(|&x| x < seen.len() && !std::mem::replace(&mut seen[x], true))
    }
}

fn signature(p: &Poset, x: usize) -> (usize, usize) {
    (p.down_degree(x), p.up_degree(x))
}

/// Calls `found` for every order-isomorphism `p -> q`; stops early when it
/// returns `false`.
fn search(p: &Poset, q: &Poset, found: &mut dyn FnMut(&[usize]) -> bool) {
    let n = p.len();
    if q.len() != n {
        return;
    }
    let sp: Vec<_> = (0..n).map(|x| signature(p, x)).collect();
    let sq: Vec<_> = (0..n).map(|x| signature(q, x)).collect();
    let mut a = sp.clone();
    let mut b = sq.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return;
    }
    // most constrained elements first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sp.iter().filter(|&&s| s == sp[x]).count());
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        depth: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        sp: &[(usize, usize)],
        sq: &[(usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if depth == order.len() {
            return found(image);
        }
        let x = order[depth];
        for y in 0..q.len() {
            if used[y] || sq[y] != sp[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&w| {
                let v = image[w];
                p.lt(w, x) == q.lt(v, y) && p.lt(x, w) == q.lt(y, v)
            });
            if !consistent {
                continue;
            }
            image[x] = y;
            used[y] = true;
            let go_on = rec(depth + 1, order, p, q, sp, sq, image, used, found);
            used[y] = false;
            image[x] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(0, &order, p, q, &sp, &sq, &mut image, &mut used, found);
}

/// All automorphisms of `p`, sorted.
pub fn automorphisms(p: &Poset, scope: &Scope) -> Result<Vec<Permutation>> {
    Scope::check(
        "automorphism search",
        p.len(),
        scope.automorphisms,
        "use --unsafe-scope to lift the cap",
    )?;
    let mut out = Vec::new();
    search(p, p, &mut |img| {
        out.push(Permutation(img.to_vec()));
        true
    });
    out.sort();
    Ok(out)
}

pub fn isomorphic(p: &Poset, q: &Poset, scope: &Scope) -> Result<bool> {
    Scope::check(
        "isomorphism search",
        p.len().max(q.len()),
        scope.automorphisms,
        "use --unsafe-scope to lift the cap",
    )?;
    let mut any = false;
    search(p, q, &mut |_| {
        any = true;
        false
    });
    Ok(any)
}

/// True iff `g` is an order automorphism of `p`.
pub fn is_automorphism(p: &Poset, g: &Permutation) -> bool {
    let n = p.len();
    g.len() == n
        && g.is_valid()
        && (0..n).all(|x| (0..n).all(|y| p.lt(x, y) == p.lt(g.apply(x), g.apply(y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;
    use crate::poset::{generate, Family};

    #[test]
    fn antichain_and_chain() {
        let anti = generate(&Family::Antichain { n: 4 }, 0).unwrap();
        assert_eq!(automorphisms(&anti, &Scope::default()).unwrap().len(), 24);
        let chain = generate(&Family::Chain { n: 5 }, 0).unwrap();
        let auts = automorphisms(&chain, &Scope::default()).unwrap();
        assert_eq!(auts, vec![Permutation::identity(5)]);
    }

    #[test]
    fn diamond_matches_exhaustive_bijections() {
        let d = diamond();
        let auts = automorphisms(&d, &Scope::default()).unwrap();
        // oracle: all 24 bijections
        let mut brute = Vec::new();
        let mut perm: Vec<usize> = (0..4).collect();
        permute(&mut perm, 0, &mut |g| {
            let g = Permutation(g.to_vec());
            if is_automorphism(&d, &g) {
                brute.push(g);
            }
        });
        brute.sort();
        assert_eq!(auts, brute);
        assert_eq!(auts.len(), 2);
        assert_eq!(auts[1], Permutation(vec![0, 2, 1, 3]));
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn isomorphism_relabeling() {
        let d = diamond();
        let other = Poset::from_index_covers(4, &[(3, 1), (3, 0), (1, 2), (0, 2)]).unwrap();
        assert!(isomorphic(&d, &other, &Scope::default()).unwrap());
        let chain = generate(&Family::Chain { n: 4 }, 0).unwrap();
        assert!(!isomorphic(&d, &chain, &Scope::default()).unwrap());
    }

    #[test]
    fn group_algebra() {
        let g = Permutation(vec![2, 0, 1]);
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.compose(&g), Permutation(vec![1, 2, 0]));
    }
}
