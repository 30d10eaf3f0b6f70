//! Finite posets stored as the full strict-order closure.
//!
//! Elements carry opaque string labels but every algorithm works on dense
//! indices `0..n`, in the order the labels were supplied.

mod automorphism;
mod extensions;
mod generate;
mod mobius;
mod text;

pub use automorphism::{automorphisms, is_automorphism, isomorphic, Permutation};
pub use extensions::{is_linear_extension, linear_extensions, PosetPermutation};
pub use generate::{enumerate_posets, generate, Family};
pub use mobius::{mobius, signed_chain_count, MobiusTable, SignedChainCounts};
pub use text::{parse_poset, write_poset};

use std::collections::HashMap;

use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    lt: BitMatrix,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lt == other.lt
    }
}

impl Eq for Poset {}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '<' | '#' | '(' | ')'))
    {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

fn build_index(labels: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        validate_label(l)?;
        if index.insert(l.clone(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

/// Labels `"0"`, `"1"`, ... used for generated and enumerated posets.
pub fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl Poset {
    /// Builds the poset generated by a Hasse diagram (or any acyclic relation).
    pub fn from_cover_relations<L, P>(labels: &[L], covers: &[(P, P)]) -> Result<Self>
    where
        L: AsRef<str>,
        P: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let index = build_index(&labels)?;
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| Error::UnknownElement(l.to_string()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::close(labels, index, &pairs)
    }

    /// Same as [`Poset::from_cover_relations`] with numeric labels `0..n`.
    pub fn from_index_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let labels = numeric_labels(n);
        let index = build_index(&labels)?;
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::UnknownElement(a.max(b).to_string()));
            }
        }
        Self::close(labels, index, covers)
    }

    fn close(
        labels: Vec<String>,
        index: HashMap<String, usize>,
        pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in pairs {
            adj[a].push(b);
        }
        if let Some(cycle) = find_cycle(&adj) {
            return Err(Error::Cycle(
                cycle.into_iter().map(|i| labels[i].clone()).collect(),
            ));
        }
        let mut lt = BitMatrix::new(n);
        for &(a, b) in pairs {
            lt.set(a, b, true);
        }
        lt.transitive_closure();
        Ok(Poset { labels, index, lt })
    }

    pub(crate) fn from_closed_unchecked(labels: Vec<String>, lt: BitMatrix) -> Self {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Poset { labels, index, lt }
    }

    /// Wraps an already-closed strict order, checking all three axioms.
    pub fn from_strict_order(labels: Vec<String>, lt: BitMatrix) -> Result<Self> {
        let n = labels.len();
        if lt.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: lt.len(),
            });
        }
        let index = build_index(&labels)?;
        for x in 0..n {
            if lt.get(x, x) {
                return Err(Error::NotAnOrder(format!("{} < {}", labels[x], labels[x])));
            }
            for y in 0..n {
                if !lt.get(x, y) {
                    continue;
                }
                if lt.get(y, x) {
                    return Err(Error::NotAnOrder(format!(
                        "{0} < {1} and {1} < {0}",
                        labels[x], labels[y]
                    )));
                }
                for z in lt.row_ones(y) {
                    if !lt.get(x, z) {
                        return Err(Error::NotAnOrder(format!(
                            "{} < {} < {} but not {0} < {2}",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        Ok(Poset { labels, index, lt })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn relation(&self) -> &BitMatrix {
        &self.lt
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.lt.get(x, y)
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.lt.get(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.lt.get(y, x)
    }

    pub fn leq_labels(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(x)?, self.index_of(y)?))
    }

    pub fn comparable_labels(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.comparable(self.index_of(x)?, self.index_of(y)?))
    }

    /// Strictly smaller elements of `x`.
    pub fn down_degree(&self, x: usize) -> usize {
        (0..self.len()).filter(|&y| self.lt(y, x)).count()
    }

    /// Strictly larger elements of `x`.
    pub fn up_degree(&self, x: usize) -> usize {
        self.lt.count_row(x)
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in self.lt.row_ones(x) {
                if !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_total_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.comparable(x, y)))
    }

    pub fn is_antichain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    pub fn is_chain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    /// Induced sub-poset on `elems` (kept in the given order).
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let labels: Vec<String> = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let mut lt = BitMatrix::new(elems.len());
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if self.lt(x, y) {
                    lt.set(i, j, true);
                }
            }
        }
        Poset { labels, index, lt }
    }

    /// `P \ {z}`; remaining elements keep their relative order.
    pub fn without(&self, z: usize) -> Poset {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| x != z).collect();
        self.induced(&keep)
    }

    /// Some linear extension (Kahn's algorithm, smallest index first).
    pub fn a_linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut indeg: Vec<usize> = (0..n).map(|x| self.down_degree(x)).collect();
        let mut out = Vec::with_capacity(n);
        let mut done = vec![false; n];
        while out.len() < n {
            let x = (0..n)
                .find(|&x| !done[x] && indeg[x] == 0)
                .expect("strict order is acyclic");
            done[x] = true;
            out.push(x);
            for y in self.lt.row_ones(x) {
                indeg[y] -= 1;
            }
        }
        out
    }
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    // 0 = unvisited, 1 = on stack, 2 = finished
    let n = adj.len();
    let mut state = vec![0u8; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if state[start] != 0 {
            continue;
        }
        stack.push((start, 0));
        state[start] = 1;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let pos = stack.iter().position(|&(u, _)| u == w).unwrap();
                        return Some(stack[pos..].iter().map(|&(u, _)| u).collect());
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}
