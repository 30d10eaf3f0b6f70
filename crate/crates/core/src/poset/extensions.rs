use super::Poset;
use crate::error::{Error, Result};
use crate::scope::Scope;

/// An arrangement of every element of a poset, each exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosetPermutation {
    order: Vec<usize>,
}

impl PosetPermutation {
    pub fn new(p: &Poset, order: Vec<usize>) -> Result<Self> {
        let n = p.len();
        if order.len() != n {
            return Err(Error::NotAPermutation(format!(
                "length {} for {n} elements",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &order {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotAPermutation(format!("{order:?}")));
            }
        }
        Ok(PosetPermutation { order })
    }

    pub fn from_labels<S: AsRef<str>>(p: &Poset, labels: &[S]) -> Result<Self> {
        let order = labels
            .iter()
            .map(|l| p.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(p, order)
    }

    pub(crate) fn new_unchecked(order: Vec<usize>) -> Self {
        PosetPermutation { order }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `pos[x]` is the position of element `x`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    pub fn display(&self, p: &Poset) -> String {
        self.order
            .iter()
            .map(|&x| p.label(x))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn is_linear_extension(p: &Poset, perm: &PosetPermutation) -> bool {
    if perm.len() != p.len() {
        return false;
    }
    let pos = perm.positions();
    (0..p.len()).all(|x| p.relation().row_ones(x).all(|y| pos[x] < pos[y]))
}

/// Every linear extension, in lexicographic order of element indices.
pub fn linear_extensions(p: &Poset, scope: &Scope) -> Result<Vec<PosetPermutation>> {
    Scope::check(
        "linear extension enumeration",
        p.len(),
        scope.linear_extensions,
        "count them on a smaller poset",
    )?;
    let n = p.len();
    let mut indeg: Vec<usize> = (0..n).map(|x| p.down_degree(x)).collect();
    let mut placed = vec![false; n];
    let mut prefix = Vec::with_capacity(n);
    let mut out = Vec::new();
    extend(p, &mut indeg, &mut placed, &mut prefix, &mut out);
    Ok(out)
}

fn extend(
    p: &Poset,
    indeg: &mut [usize],
    placed: &mut [bool],
    prefix: &mut Vec<usize>,
    out: &mut Vec<PosetPermutation>,
) {
    let n = p.len();
    if prefix.len() == n {
        out.push(PosetPermutation::new_unchecked(prefix.clone()));
        return;
    }
    for x in 0..n {
        if placed[x] || indeg[x] != 0 {
            continue;
        }
        placed[x] = true;
        prefix.push(x);
        for y in p.relation().row_ones(x) {
            indeg[y] -= 1;
        }
        extend(p, indeg, placed, prefix, out);
        for y in p.relation().row_ones(x) {
            indeg[y] += 1;
        }
        prefix.pop();
        placed[x] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::diamond;

    #[test]
    fn counts() {
        let chain = Poset::from_index_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(linear_extensions(&chain, &Scope::default()).unwrap().len(), 1);
        let anti = Poset::from_index_covers(3, &[]).unwrap();
        assert_eq!(linear_extensions(&anti, &Scope::default()).unwrap().len(), 6);
        let d = diamond();
        let exts = linear_extensions(&d, &Scope::default()).unwrap();
        assert_eq!(exts.len(), 2);
        assert!(exts.iter().all(|e| is_linear_extension(&d, e)));
    }

    #[test]
    fn predicate_rejects_inversions() {
        let d = diamond();
        let bad = PosetPermutation::from_labels(&d, &["a", "e", "b", "ab"]).unwrap();
        assert!(!is_linear_extension(&d, &bad));
    }

    #[test]
    fn cap_refuses() {
        let big = Poset::from_index_covers(11, &[]).unwrap();
        assert!(matches!(
            linear_extensions(&big, &Scope::default()),
            Err(Error::ScopeExceeded { .. })
        ));
    }

    #[test]
    fn permutation_validation() {
        let d = diamond();
        assert!(PosetPermutation::new(&d, vec![0, 1, 1, 2]).is_err());
        assert!(PosetPermutation::new(&d, vec![0, 1, 2]).is_err());
        assert!(PosetPermutation::new(&d, vec![3, 1, 2, 0]).is_ok());
    }
}
