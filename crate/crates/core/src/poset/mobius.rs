//! Signed chain counts and the Möbius function.
//!
//! Two recursions over the interval `[x, y]` are kept deliberately separate:
//! [`SignedChainCounts`] extends chains from the bottom (sum over the last
//! step below `y`), while [`MobiusTable`] uses the recursion from the top
//! (sum over `x < z <= y`). Agreement of the two is checked in tests.

use super::Poset;

/// Table of `Σ (-1)^s` over all chains `x = ξ0 < ξ1 < ... < ξs = y` whose
/// elements lie in a chosen subset of the poset.
#[derive(Debug, Clone)]
pub struct SignedChainCounts {
    n: usize,
    table: Vec<i64>,
}

impl SignedChainCounts {
    pub fn new(p: &Poset) -> Self {
        Self::within(p, &vec![true; p.len()])
    }

    /// Counts chains using only elements with `member[x]` set. Pairs touching
    /// a non-member are zero.
    pub fn within(p: &Poset, member: &[bool]) -> Self {
        let n = p.len();
        assert_eq!(member.len(), n);
        let order = p.a_linear_extension();
        let mut table = vec![0i64; n * n];
        for x in 0..n {
            if !member[x] {
                continue;
            }
            table[x * n + x] = 1;
            // chains from x, extended in linear-extension order
            for &y in &order {
                if !member[y] || !p.lt(x, y) {
                    continue;
                }
                let mut acc = 0i64;
                for z in 0..n {
                    if member[z] && p.leq(x, z) && p.lt(z, y) {
                        acc -= table[x * n + z];
                    }
                }
                table[x * n + y] = acc;
            }
        }
        SignedChainCounts { n, table }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.table[x * self.n + y]
    }
}

pub fn signed_chain_count(p: &Poset, x: usize, y: usize) -> i64 {
    SignedChainCounts::new(p).get(x, y)
}

/// Möbius function `μ(x, y)`, zero off the order relation.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    n: usize,
    table: Vec<i64>,
}

impl MobiusTable {
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.table[x * self.n + y]
    }
}

pub fn mobius(p: &Poset) -> MobiusTable {
    let n = p.len();
    let order = p.a_linear_extension();
    let mut table = vec![0i64; n * n];
    for y in 0..n {
        table[y * n + y] = 1;
        // μ(x, y) = -Σ_{x < z <= y} μ(z, y), filled from y downward
        for &x in order.iter().rev() {
            if !p.lt(x, y) {
                continue;
            }
            let mut acc = 0i64;
            for z in 0..n {
                if p.lt(x, z) && p.leq(z, y) {
                    acc -= table[z * n + y];
                }
            }
            table[x * n + y] = acc;
        }
    }
    MobiusTable { n, table }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;

    fn brute_chains(p: &Poset, x: usize, y: usize) -> i64 {
        // every subset of the open interval that forms a chain
        let n = p.len();
        if x == y {
            return 1;
        }
        if !p.lt(x, y) {
            return 0;
        }
        let mids: Vec<usize> = (0..n).filter(|&z| p.lt(x, z) && p.lt(z, y)).collect();
        let mut total = 0;
        for mask in 0u32..1 << mids.len() {
            let pick: Vec<usize> = (0..mids.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| mids[i])
                .collect();
            if p.is_chain(&pick) {
                total += if (pick.len() + 1) % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    #[test]
    fn spec_values() {
        let d = diamond();
        assert_eq!(signed_chain_count(&d, 0, 0), 1);
        assert_eq!(signed_chain_count(&d, 0, 3), 1);
        assert_eq!(mobius(&d).get(0, 3), 1);
        assert_eq!(mobius(&d).get(2, 2), 1);
        let two = Poset::from_index_covers(2, &[(0, 1)]).unwrap();
        assert_eq!(signed_chain_count(&two, 0, 1), -1);
        assert_eq!(mobius(&two).get(0, 1), -1);
        assert_eq!(signed_chain_count(&two, 1, 0), 0);
    }

    #[test]
    fn dp_matches_brute_force_on_boolean_3() {
        let b3 = crate::poset::generate(&crate::poset::Family::Boolean { k: 3 }, 0).unwrap();
        let scc = SignedChainCounts::new(&b3);
        let mu = mobius(&b3);
        for x in 0..8 {
            for y in 0..8 {
                let expect = brute_chains(&b3, x, y);
                assert_eq!(scc.get(x, y), expect);
                if b3.leq(x, y) {
                    assert_eq!(mu.get(x, y), expect);
                }
            }
        }
        // μ of the bottom-to-top interval of B_3 is (-1)^3
        assert_eq!(mu.get(0, 7), -1);
    }

    #[test]
    fn restriction_drops_outside_elements() {
        let d = diamond();
        // without `a`, the only chains e -> ab are e<ab and e<b<ab
        let scc = SignedChainCounts::within(&d, &[true, false, true, true]);
        assert_eq!(scc.get(0, 3), 0);
        assert_eq!(scc.get(1, 1), 0);
        assert_eq!(scc.get(2, 2), 1);
    }
}
