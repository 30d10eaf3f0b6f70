//! Plane trees built from a chain order, and the linear extension read off
//! their preorder.

use super::wrap::wrap_poset;
use crate::error::{Error, Result};
use crate::hcd::Hcd;
use crate::poset::{Poset, PosetPermutation};

const ROOT: usize = 0;

/// A rooted tree with ordered children. Node 0 is the unlabeled root; every
/// other node carries a distinct poset element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    labels: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    fn new() -> Self {
        PlaneTree {
            labels: vec![None],
            children: vec![Vec::new()],
        }
    }

    fn add_leftmost(&mut self, parent: usize, label: usize) -> usize {
        let v = self.labels.len();
        self.labels.push(Some(label));
        self.children.push(Vec::new());
        self.children[parent].insert(0, v);
        v
    }

    /// Non-root vertex count.
    pub fn len(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Labels of the children of the vertex labelled `x` (`None` = root),
    /// left to right.
    pub fn children_of(&self, x: Option<usize>) -> Vec<usize> {
        let v = match x {
            None => ROOT,
            Some(x) => match self.labels.iter().position(|&l| l == Some(x)) {
                Some(v) => v,
                None => return Vec::new(),
            },
        };
        self.children[v].iter().filter_map(|&c| self.labels[c]).collect()
    }

    /// Labels in preorder, root excluded.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![ROOT];
        while let Some(v) = stack.pop() {
            if let Some(x) = self.labels[v] {
                out.push(x);
            }
            stack.extend(self.children[v].iter().rev());
        }
        out
    }

    /// Nested parentheses: every vertex is `(label child ...)`, the root has
    /// no label.
    pub fn to_parens(&self, p: &Poset) -> String {
        fn go(t: &PlaneTree, p: &Poset, v: usize, out: &mut String) {
            out.push('(');
            if let Some(x) = t.labels[v] {
                out.push_str(p.label(x));
            }
            for (i, &c) in t.children[v].iter().enumerate() {
                if i > 0 || t.labels[v].is_some() {
                    out.push(' ');
                }
                go(t, p, c, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        go(self, p, ROOT, &mut out);
        out
    }
}

/// Chains attached in reverse `order`: each one hangs from the first vertex
/// above its maximum on the path from the leftmost leaf up to the root (or
/// from the root), as a path from its maximum down to its minimum.
pub fn build_plane_tree(p: &Poset, h: &Hcd, order: &[usize]) -> Result<PlaneTree> {
    let w = wrap_poset(p, h)?;
    if !w.is_linear_extension(order) {
        return Err(Error::NotLinearExtension(format!("chain order {order:?}")));
    }
    let mut t = PlaneTree::new();
    for &c in order.iter().rev() {
        let chain = h.chain(c);
        let top = *chain.last().unwrap();
        let mut path = Vec::new();
        let mut v = ROOT;
        while let Some(&first) = t.children[v].first() {
            path.push(first);
            v = first;
        }
        let anchor = path
            .iter()
            .rev()
            .copied()
            .find(|&u| p.lt(top, t.labels[u].unwrap()))
            .unwrap_or(ROOT);
        let mut parent = anchor;
        for &x in chain.iter().rev() {
            parent = t.add_leftmost(parent, x);
        }
    }
    Ok(t)
}

/// The reverse of the preorder.
pub fn derive_e(p: &Poset, t: &PlaneTree) -> Result<PosetPermutation> {
    let mut e = t.preorder();
    e.reverse();
    PosetPermutation::new(p, e)
}
