use std::fmt::Write;

use super::Hcd;
use crate::error::{Error, Result};
use crate::poset::{Permutation, Poset};
use crate::scope::Scope;

/// Graph on the chains of an HCD, joining comparable chains. The optional
/// orientation directs every edge from the chain with the smaller minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    adjacency: Vec<Vec<bool>>,
    orientation: Option<Vec<Vec<bool>>>,
}

impl ChainGraph {
    pub fn from_adjacency(adjacency: Vec<Vec<bool>>) -> Self {
        ChainGraph {
            adjacency,
            orientation: None,
        }
    }

    /// Builds an oriented graph from arcs; the underlying graph is their
    /// symmetrization.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![vec![false; n]; n];
        let mut dir = vec![vec![false; n]; n];
        for &(a, b) in arcs {
            adjacency[a][b] = true;
            adjacency[b][a] = true;
            dir[a][b] = true;
        }
        ChainGraph {
            adjacency,
            orientation: Some(dir),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// Arc `i -> j` (false when the graph carries no orientation).
    pub fn arc(&self, i: usize, j: usize) -> bool {
        self.orientation.as_ref().is_some_and(|o| o[i][j])
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.adjacency[i][j])
            .collect()
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.arc(i, j))
            .collect()
    }

    /// Adjacency matrix as 0/1 rows.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        self.adjacency
            .iter()
            .map(|r| r.iter().map(|&b| b as u8).collect())
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let Some(o) = &self.orientation else {
            return true;
        };
        let n = o.len();
        let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| o[i][j]).count()).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for j in 0..n {
                if o[i][j] {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        stack.push(j);
                    }
                }
            }
        }
        seen == n
    }

    /// Preserves adjacency (and arcs, when `respect_orientation`) both ways.
    pub fn preserves(&self, g: &Permutation, respect_orientation: bool) -> bool {
        let n = self.vertex_count();
        g.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    self.adjacency[i][j] == self.adjacency[g.apply(i)][g.apply(j)]
                        && (!respect_orientation || self.arc(i, j) == self.arc(g.apply(i), g.apply(j)))
                })
            })
    }

    /// Graphviz text; arcs when oriented, plain edges otherwise.
    pub fn to_dot(&self, name: &str, labels: &[String]) -> String {
        let mut out = String::new();
        let (kind, op) = if self.is_oriented() {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let _ = writeln!(out, "{kind} {name} {{");
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "  c{i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        let pairs = if self.is_oriented() {
            self.arcs()
        } else {
            self.edges()
        };
        for (i, j) in pairs {
            let _ = writeln!(out, "  c{i} {op} c{j};");
        }
        out.push_str("}\n");
        out
    }
}

pub fn chain_graph(_p: &Poset, h: &Hcd) -> ChainGraph {
    let k = h.len();
    ChainGraph::from_adjacency(
        (0..k)
            .map(|i| (0..k).map(|j| i != j && h.chains_comparable(i, j)).collect())
            .collect(),
    )
}

/// Orients every chain-graph edge from the chain with the smaller minimum.
pub fn acyclic_orientation(p: &Poset, h: &Hcd) -> Result<ChainGraph> {
    let mut g = chain_graph(p, h);
    let k = h.len();
    let mut dir = vec![vec![false; k]; k];
    for (i, j) in g.edges() {
        let (a, b) = (h.chain(i)[0], h.chain(j)[0]);
        if p.lt(a, b) {
            dir[i][j] = true;
        } else if p.lt(b, a) {
            dir[j][i] = true;
        } else {
            return Err(Error::TheoremViolation {
                check: "chain orientation",
                witness: format!(
                    "comparable chains {i} and {j} have incomparable minima {} and {}",
                    p.label(a),
                    p.label(b)
                ),
            });
        }
    }
    g.orientation = Some(dir);
    Ok(g)
}

/// All vertex permutations preserving adjacency and non-adjacency (and arc
/// directions when `respect_orientation`), sorted.
pub fn graph_automorphisms(
    gr: &ChainGraph,
    respect_orientation: bool,
    scope: &Scope,
) -> Result<Vec<Permutation>> {
    let n = gr.vertex_count();
    Scope::check(
        "graph automorphism search",
        n,
        scope.graph_automorphisms,
        "use --unsafe-scope to lift the cap",
    )?;
    let degree = |i: usize| -> (usize, usize) {
        let d = (0..n).filter(|&j| gr.adjacent(i, j)).count();
        let out = if respect_orientation {
            (0..n).filter(|&j| gr.arc(i, j)).count()
        } else {
            0
        };
        (d, out)
    };
    let deg: Vec<_> = (0..n).map(degree).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    fn rec(
        x: usize,
        gr: &ChainGraph,
        oriented: bool,
        deg: &[(usize, usize)],
        image: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let n = gr.vertex_count();
        if x == n {
            out.push(Permutation(image.to_vec()));
            return;
        }
        for y in 0..n {
            if used[y] || deg[y] != deg[x] {
                continue;
            }
            let ok = (0..x).all(|w| {
                let v = image[w];
                gr.adjacent(w, x) == gr.adjacent(v, y)
                    && (!oriented || (gr.arc(w, x) == gr.arc(v, y) && gr.arc(x, w) == gr.arc(y, v)))
            });
            if !ok {
                continue;
            }
            image[x] = y;
            used[y] = true;
            rec(x + 1, gr, oriented, deg, image, used, out);
            used[y] = false;
        }
    }
    rec(0, gr, respect_orientation, &deg, &mut image, &mut used, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hcd::mhcd;
    use crate::poset::fixtures::diamond;
    use crate::poset::{generate, Family};

    #[test]
    fn chain_graph_examples() {
        let anti = generate(&Family::Antichain { n: 4 }, 0).unwrap();
        assert!(chain_graph(&anti, &mhcd(&anti)).edges().is_empty());

        let d = diamond();
        let g = chain_graph(&d, &mhcd(&d));
        // chain 0 = {e < ab} joins both singletons
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);

        let two = Poset::from_index_covers(4, &[(0, 1), (2, 3)]).unwrap();
        let h = mhcd(&two);
        assert_eq!(h.len(), 2);
        assert!(chain_graph(&two, &h).edges().is_empty());
    }

    #[test]
    fn orientation_examples() {
        let d = diamond();
        let o = acyclic_orientation(&d, &mhcd(&d)).unwrap();
        assert_eq!(o.arcs(), vec![(0, 1), (0, 2)]);
        assert!(o.is_acyclic());

        // A = {a < b}, B = {c < d}, a < c and A, B comparable
        let p = Poset::from_cover_relations(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        )
        .unwrap();
        let h = Hcd::new(
            &p,
            crate::chain::ChainDecomposition::new(&p, vec![vec![0, 1], vec![2, 3]]).unwrap(),
        )
        .unwrap();
        assert_eq!(acyclic_orientation(&p, &h).unwrap().arcs(), vec![(0, 1)]);
    }

    #[test]
    fn automorphism_examples() {
        let s = Scope::default();
        let empty = ChainGraph::from_adjacency(vec![vec![false; 4]; 4]);
        assert_eq!(graph_automorphisms(&empty, false, &s).unwrap().len(), 24);
        let arc = ChainGraph::from_arcs(2, &[(0, 1)]);
        assert_eq!(graph_automorphisms(&arc, true, &s).unwrap(), vec![Permutation::identity(2)]);
        assert_eq!(graph_automorphisms(&arc, false, &s).unwrap().len(), 2);
        let path = ChainGraph::from_adjacency(vec![
            vec![false, true, false],
            vec![true, false, true],
            vec![false, true, false],
        ]);
        let auts = graph_automorphisms(&path, false, &s).unwrap();
        assert_eq!(auts, vec![Permutation::identity(3), Permutation(vec![2, 1, 0])]);
        let big = ChainGraph::from_adjacency(vec![vec![false; 11]; 11]);
        assert!(graph_automorphisms(&big, false, &s).is_err());
    }

    #[test]
    fn dot_output() {
        let d = diamond();
        let o = acyclic_orientation(&d, &mhcd(&d)).unwrap();
        let dot = o.to_dot("asyc", &["e<ab".into(), "a".into(), "b".into()]);
        assert!(dot.starts_with("digraph asyc {"));
        assert!(dot.contains("c0 -> c1;"));
        let und = chain_graph(&d, &mhcd(&d)).to_dot("g", &["x".into(), "y".into(), "z".into()]);
        assert!(und.contains("c0 -- c2;"));
    }
}
