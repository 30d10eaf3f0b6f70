use serde::{Deserialize, Serialize};

use super::pattern::{is_132_avoiding, is_132e_avoiding, min_d, min_d_e, p_descents};
use super::tree::{build_plane_tree, derive_e};
use super::wrap::{canonical_linear_extension_b, concat_permutation, CaseOrderFinding};
use super::min_nccd;
use crate::chain::dilworth_min;
use crate::error::Result;
use crate::hcd::mhcd;
use crate::poset::{is_linear_extension, Poset};
use crate::scope::Scope;

/// `Min ≤ Min_nc ≤ Min_d ≤ Min_d^e ≤ Min_h`, where `e` comes from the plane
/// tree over the canonical wrap-order extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub min: usize,
    pub min_nc: usize,
    pub min_d: usize,
    pub min_d_e: usize,
    pub min_h: usize,
    /// Labels of the constructed linear extension.
    pub e: Vec<String>,
    /// Labels of the concatenated chain permutation.
    pub pi: Vec<String>,
    /// Each of the four inequalities, left to right.
    pub holds: [bool; 4],
    pub strict: [bool; 4],
    pub e_is_linear_extension: bool,
    pub pi_132_avoiding: bool,
    pub pi_132e_avoiding: bool,
    pub pi_descents: usize,
    pub case_order_findings: Vec<CaseOrderFinding>,
}

impl InequalityReport {
    pub fn values(&self) -> [usize; 5] {
        [self.min, self.min_nc, self.min_d, self.min_d_e, self.min_h]
    }

    pub fn passed(&self) -> bool {
        self.holds.iter().all(|&b| b)
            && self.e_is_linear_extension
            && self.pi_132_avoiding
            && self.pi_132e_avoiding
            && self.pi_descents == self.min_h
    }
}

pub fn verify_inequality_chain(p: &Poset, scope: &Scope) -> Result<InequalityReport> {
    let h = mhcd(p);
    let canon = canonical_linear_extension_b(p, &h)?;
    let pi = concat_permutation(p, &h, &canon.order)?;
    let tree = build_plane_tree(p, &h, &canon.order)?;
    let e = derive_e(p, &tree)?;
    let e_ok = is_linear_extension(p, &e);

    let min = dilworth_min(p).len();
    let min_nc = min_nccd(p, scope)?.0;
    let min_d = min_d(p, scope)?.0;
    // without a valid e the search has nothing to run on; the report fails
    let (min_d_e, pi_132e_avoiding) = if e_ok {
        (min_d_e(p, &e, scope)?.0, is_132e_avoiding(p, &e, &pi)?)
    } else {
        (usize::MAX, false)
    };
    let vals = [min, min_nc, min_d, min_d_e, h.len()];
    let labels = |v: &[usize]| v.iter().map(|&x| p.label(x).to_string()).collect();
    Ok(InequalityReport {
        min,
        min_nc,
        min_d,
        min_d_e,
        min_h: h.len(),
        e: labels(e.as_slice()),
        pi: labels(pi.as_slice()),
        holds: std::array::from_fn(|i| vals[i] <= vals[i + 1]),
        strict: std::array::from_fn(|i| vals[i] < vals[i + 1]),
        e_is_linear_extension: e_ok,
        pi_132_avoiding: is_132_avoiding(p, &pi)?,
        pi_132e_avoiding,
        pi_descents: p_descents(p, &pi)?.count(),
        case_order_findings: canon.findings,
    })
}
