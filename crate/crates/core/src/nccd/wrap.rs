//! The wrap order on MHCD chains and its canonical linear extension.
//!
//! `C_i <_b C_j` when `C_j` wraps around `C_i` (some `x < y < z` with
//! `x, z ∈ C_j`, `y ∈ C_i`) or when `C_i` lies entirely above `C_j`.

use serde::{Deserialize, Serialize};

use super::pattern::{is_132_avoiding, p_descents};
use crate::bitmatrix::BitMatrix;
use crate::error::{Error, Result};
use crate::hcd::{mhcd, Hcd};
use crate::poset::{Poset, PosetPermutation};

#[derive(Debug, Clone)]
pub struct WrapPoset {
    order: Poset,
    wraps: Vec<Vec<bool>>,
}

impl WrapPoset {
    /// The order itself, on chain indices (labels `c0`, `c1`, ...).
    pub fn poset(&self) -> &Poset {
        &self.order
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        self.order.lt(i, j)
    }

    /// `C_j` wraps around `C_i`.
    pub fn wraps(&self, j: usize, i: usize) -> bool {
        self.wraps[j][i]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Whether `order` lists every chain once with `<_b`-smaller chains first.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        PosetPermutation::new(&self.order, order.to_vec())
            .map(|perm| crate::poset::is_linear_extension(&self.order, &perm))
            .unwrap_or(false)
    }
}

fn wraps_around(p: &Poset, outer: &[usize], inner: &[usize]) -> bool {
    inner
        .iter()
        .any(|&y| outer.iter().any(|&x| p.lt(x, y)) && outer.iter().any(|&z| p.lt(y, z)))
}

/// In the merged order of two comparable chains, one of them occupies a
/// single contiguous block.
fn one_block(p: &Poset, a: &[usize], b: &[usize]) -> bool {
    let mut all: Vec<(usize, bool)> = a.iter().map(|&x| (x, false)).chain(b.iter().map(|&x| (x, true))).collect();
    all.sort_by(|&(x, _), &(y, _)| {
        if p.lt(x, y) {
            std::cmp::Ordering::Less
        } else if p.lt(y, x) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    let runs = 1 + all.windows(2).filter(|w| w[0].1 != w[1].1).count();
    runs <= 3
}

pub fn wrap_poset(p: &Poset, h: &Hcd) -> Result<WrapPoset> {
    if h.chains() != mhcd(p).chains() {
        return Err(Error::NotMinimumHcd);
    }
    let k = h.len();
    let cs = h.chains();
    let mut wraps = vec![vec![false; k]; k];
    let mut lt = BitMatrix::new(k);
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            wraps[j][i] = wraps_around(p, &cs[j], &cs[i]);
            let above = p.lt(*cs[j].last().unwrap(), cs[i][0]);
            if wraps[j][i] && above {
                return Err(Error::TheoremViolation {
                    check: "wrap order",
                    witness: format!("chain {j} both wraps chain {i} and lies below it"),
                });
            }
            lt.set(i, j, wraps[j][i] || above);
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let related = lt.get(i, j) || lt.get(j, i);
            if h.chains_comparable(i, j) && !one_block(p, &cs[i], &cs[j]) {
                return Err(Error::TheoremViolation {
                    check: "interleaving shape",
                    witness: format!("comparable chains {i} and {j} interleave in more than one block"),
                });
            }
            if related != h.chains_comparable(i, j) {
                return Err(Error::TheoremViolation {
                    check: "wrap order",
                    witness: format!("chains {i} and {j}: related {related}, comparable {}", h.chains_comparable(i, j)),
                });
            }
        }
    }
    let labels = (0..k).map(|i| format!("c{i}")).collect();
    let order = Poset::from_strict_order(labels, lt).map_err(|e| Error::TheoremViolation {
        check: "wrap order axioms",
        witness: e.to_string(),
    })?;
    Ok(WrapPoset { order, wraps })
}

/// A case-1 and a case-2 chain, comparable, where "ordered below in the
/// wrap order" and "minimum above the other's maximum" disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOrderFinding {
    pub case1: usize,
    pub case2: usize,
    pub below_in_wrap_order: bool,
    pub min_above_max: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalOrder {
    pub order: Vec<usize>,
    pub findings: Vec<CaseOrderFinding>,
}

struct Canon<'a> {
    p: &'a Poset,
    h: &'a Hcd,
    w: &'a WrapPoset,
    findings: Vec<CaseOrderFinding>,
}

impl Canon<'_> {
    /// Maximal chains of `group` close each block; chains they wrap go just
    /// before their wrapper, the chains lying above some maximal go first.
    fn order(&mut self, group: &[usize]) -> Result<Vec<usize>> {
        if group.is_empty() {
            return Ok(Vec::new());
        }
        let maximal: Vec<usize> = group
            .iter()
            .copied()
            .filter(|&t| !group.iter().any(|&u| self.w.less(t, u)))
            .collect();
        let mut case1 = Vec::new();
        let mut case2: Vec<Vec<usize>> = vec![Vec::new(); maximal.len()];
        for &j in group.iter().filter(|j| !maximal.contains(j)) {
            let bottom = self.h.chain(j)[0];
            let above: Vec<usize> = maximal
                .iter()
                .copied()
                .filter(|&t| self.p.lt(*self.h.chain(t).last().unwrap(), bottom))
                .collect();
            let wrappers: Vec<usize> = (0..maximal.len()).filter(|&a| self.w.wraps(maximal[a], j)).collect();
            match (above.is_empty(), wrappers.as_slice()) {
                (false, []) => case1.push(j),
                (true, [a]) => case2[*a].push(j),
                _ => {
                    return Err(Error::TheoremViolation {
                        check: "case classification",
                        witness: format!(
                            "chain {j}: above maximal chains {above:?}, wrapped by {:?}",
                            wrappers.iter().map(|&a| maximal[a]).collect::<Vec<_>>()
                        ),
                    })
                }
            }
        }
        for &j in &case1 {
            for &l in case2.iter().flatten() {
                if !self.h.chains_comparable(j, l) {
                    continue;
                }
                let below = self.w.less(j, l);
                let stacked = self.p.lt(*self.h.chain(l).last().unwrap(), self.h.chain(j)[0]);
                if below != stacked {
                    self.findings.push(CaseOrderFinding {
                        case1: j,
                        case2: l,
                        below_in_wrap_order: below,
                        min_above_max: stacked,
                    });
                }
            }
        }
        let mut out = self.order(&case1)?;
        for (a, &t) in maximal.iter().enumerate() {
            let inner = std::mem::take(&mut case2[a]);
            out.extend(self.order(&inner)?);
            out.push(t);
        }
        Ok(out)
    }
}

/// A linear extension of the wrap order, built by grouping chains under
/// their maximal wrappers level by level; ties go to the smaller index.
pub fn canonical_linear_extension_b(p: &Poset, h: &Hcd) -> Result<CanonicalOrder> {
    let w = wrap_poset(p, h)?;
    let mut c = Canon {
        p,
        h,
        w: &w,
        findings: Vec::new(),
    };
    let all: Vec<usize> = (0..h.len()).collect();
    let order = c.order(&all)?;
    if !w.is_linear_extension(&order) {
        return Err(Error::TheoremViolation {
            check: "canonical wrap-order extension",
            witness: format!("{order:?} is not a linear extension of the wrap order"),
        });
    }
    Ok(CanonicalOrder {
        order,
        findings: c.findings,
    })
}

/// The chains concatenated in `order`, each increasing. Always 132-avoiding
/// with one p-descent per chain.
pub fn concat_permutation(p: &Poset, h: &Hcd, order: &[usize]) -> Result<PosetPermutation> {
    let w = wrap_poset(p, h)?;
    if !w.is_linear_extension(order) {
        return Err(Error::NotLinearExtension(format!("chain order {order:?}")));
    }
    let pi = PosetPermutation::new(p, order.iter().flat_map(|&t| h.chain(t).iter().copied()).collect())?;
    if !is_132_avoiding(p, &pi)? {
        return Err(Error::TheoremViolation {
            check: "concatenated permutation",
            witness: format!("{} contains 132", pi.display(p)),
        });
    }
    let d = p_descents(p, &pi)?.count();
    if d != h.len() {
        return Err(Error::TheoremViolation {
            check: "concatenated permutation",
            witness: format!("{} has {d} p-descents, expected {}", pi.display(p), h.len()),
        });
    }
    Ok(pi)
}
